//! Real-rootedness certificates by two independent routes.
//!
//! Sturm chains of the square-free part count distinct real roots and are the
//! authority on hyperbolicity counted with multiplicity. Hermite's criterion
//! (all leading minors of the Hankel matrix of root power sums positive)
//! certifies "real and simple"; a vanishing minor leaves it undetermined.

mod bareiss;
mod newton;
mod sturm;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::number::{format_rational, Rational};
use crate::polyexact::Polynomial;

pub use bareiss::{bareiss_det, hankel_leading_minor};
pub use newton::{newton_power_sums, scaled_power_sums};
pub use sturm::{sturm_chain, sturm_count, ExtRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertMethod {
    Sturm,
    Hankel,
    Both,
}

impl CertMethod {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "sturm" => Some(CertMethod::Sturm),
            "hankel" => Some(CertMethod::Hankel),
            "both" => Some(CertMethod::Both),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CertMethod::Sturm => "sturm",
            CertMethod::Hankel => "hankel",
            CertMethod::Both => "both",
        }
    }
}

/// Outcome of Hermite's criterion on the leading Hankel minors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HankelVerdict {
    /// Every minor positive: all roots real and simple.
    SimpleReal,
    /// No minor vanishes and one is negative: some root is not real.
    NotReal,
    /// Some minor vanishes (repeated roots); defer to Sturm.
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignProfileKind {
    AllNonpositive,
    AllNonnegative,
    Mixed,
    Undetermined,
}

impl SignProfileKind {
    pub fn name(self) -> &'static str {
        match self {
            SignProfileKind::AllNonpositive => "all_nonpositive",
            SignProfileKind::AllNonnegative => "all_nonnegative",
            SignProfileKind::Mixed => "mixed",
            SignProfileKind::Undetermined => "undetermined",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignProfile {
    pub kind: SignProfileKind,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootCertificate {
    pub method: CertMethod,
    pub hyperbolic: bool,
    pub degree: usize,
    pub distinct_real_roots: Option<usize>,
    pub power_sums: Option<Vec<Rational>>,
    pub minors: Option<Vec<Rational>>,
    pub hankel_verdict: Option<HankelVerdict>,
    pub sign_profile: SignProfile,
}

impl RootCertificate {
    pub fn to_json(&self) -> Value {
        let strs = |v: &Option<Vec<Rational>>| {
            v.as_ref()
                .map(|xs| xs.iter().map(format_rational).collect::<Vec<_>>())
        };
        json!({
            "method": self.method.name(),
            "hyperbolic": self.hyperbolic,
            "degree": self.degree,
            "distinct_real_roots": self.distinct_real_roots,
            "power_sums": strs(&self.power_sums),
            "minors": strs(&self.minors),
            "hankel_verdict": self.hankel_verdict.map(|v| format!("{v:?}")),
            "sign_profile": self.sign_profile.kind.name(),
            "sign_witness": self.sign_profile.witness,
        })
    }
}

/// `D_1..D_d`: leading minors of the Hankel matrix of power sums
/// `S_0..S_{2d-2}`, computed by Bareiss elimination on the integer matrix
/// `[b_d^{r+c} S_{r+c}]` and rescaled by `b_d^{-j(j-1)}`.
pub fn hankel_minors(f: &Polynomial) -> Result<Vec<Rational>> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(vec![]);
    }
    let b = f.primitive_integer()?;
    let lead = b[d].clone();
    let s = scaled_power_sums(&b, 2 * d - 2);
    Ok((1..=d)
        .map(|j| {
            let minor = hankel_leading_minor(&s, j);
            let scale = num_traits::pow(lead.clone(), j * (j - 1));
            Rational::new(minor, scale)
        })
        .collect())
}

pub fn hankel_verdict(minors: &[Rational]) -> HankelVerdict {
    if minors.iter().any(|m| m.is_zero()) {
        HankelVerdict::Undetermined
    } else if minors.iter().all(|m| m.is_positive()) {
        HankelVerdict::SimpleReal
    } else {
        HankelVerdict::NotReal
    }
}

/// Sturm verdict: returns (hyperbolic, distinct real roots).
fn sturm_verdict(f: &Polynomial) -> Result<(bool, usize)> {
    let sqf = f.squarefree_part()?;
    let deg = sqf.degree().expect("nonzero");
    let count = sturm_count(&sqf, &ExtRational::NegInf, &ExtRational::PosInf)?;
    Ok((count == deg, count))
}

/// True iff every root of `f` is real, counted with multiplicity.
pub fn is_hyperbolic(f: &Polynomial) -> Result<bool> {
    Ok(sturm_verdict(f)?.0)
}

pub fn certify_hyperbolic(f: &Polynomial, method: CertMethod) -> Result<RootCertificate> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let mut cert = RootCertificate {
        method,
        hyperbolic: false,
        degree: d,
        distinct_real_roots: None,
        power_sums: None,
        minors: None,
        hankel_verdict: None,
        sign_profile: SignProfile {
            kind: SignProfileKind::Undetermined,
            witness: String::new(),
        },
    };
    let sturm = match method {
        CertMethod::Sturm | CertMethod::Both => Some(sturm_verdict(f)?),
        CertMethod::Hankel => None,
    };
    let hankel = match method {
        CertMethod::Hankel | CertMethod::Both => {
            let minors = hankel_minors(f)?;
            let verdict = hankel_verdict(&minors);
            cert.power_sums = Some(newton_power_sums(f, (2 * d).saturating_sub(2))?);
            cert.minors = Some(minors);
            cert.hankel_verdict = Some(verdict);
            Some(verdict)
        }
        CertMethod::Sturm => None,
    };
    let hyperbolic = match (sturm, hankel) {
        (Some((s, count)), Some(h)) => {
            cert.distinct_real_roots = Some(count);
            let h_bool = match h {
                HankelVerdict::SimpleReal => Some(true),
                HankelVerdict::NotReal => Some(false),
                HankelVerdict::Undetermined => None,
            };
            if let Some(hb) = h_bool {
                if hb != s {
                    return Err(Error::MethodDisagreement(f.to_string()));
                }
            }
            s
        }
        (Some((s, count)), None) => {
            cert.distinct_real_roots = Some(count);
            s
        }
        (None, Some(HankelVerdict::SimpleReal)) => {
            cert.distinct_real_roots = Some(d);
            true
        }
        (None, Some(HankelVerdict::NotReal)) => false,
        (None, Some(HankelVerdict::Undetermined)) => {
            let (s, count) = sturm_verdict(f)?;
            cert.distinct_real_roots = Some(count);
            s
        }
        (None, None) => unreachable!("at least one method runs"),
    };
    cert.hyperbolic = hyperbolic;
    cert.sign_profile = sign_profile_given(f, hyperbolic)?;
    Ok(cert)
}

pub fn root_sign_profile(f: &Polynomial) -> Result<SignProfile> {
    let hyperbolic = is_hyperbolic(f)?;
    sign_profile_given(f, hyperbolic)
}

fn sign_profile_given(f: &Polynomial, hyperbolic: bool) -> Result<SignProfile> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !hyperbolic {
        return Ok(SignProfile {
            kind: SignProfileKind::Undetermined,
            witness: "not hyperbolic".into(),
        });
    }
    let flip = f.leading_is_negative();
    let coeffs: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| {
            let s = if c.is_positive() { 1 } else if c.is_negative() { -1 } else { 0 };
            BigInt::from(if flip { -s } else { s })
        })
        .collect();
    if coeffs.iter().all(|c| !c.is_negative()) {
        return Ok(SignProfile {
            kind: SignProfileKind::AllNonpositive,
            witness: "hyperbolic with nonnegative coefficients".into(),
        });
    }
    let alternating = coeffs.iter().enumerate().all(|(k, c)| {
        let expected_neg = (d - k) % 2 == 1;
        c.is_zero() || c.is_negative() == expected_neg
    });
    if alternating {
        return Ok(SignProfile {
            kind: SignProfileKind::AllNonnegative,
            witness: "hyperbolic with alternating coefficients".into(),
        });
    }
    let zero = ExtRational::Finite(Rational::zero());
    let pos = sturm_count(f, &zero, &ExtRational::PosInf)?;
    let below = sturm_count(f, &ExtRational::NegInf, &zero)?;
    let at_zero = usize::from(f.coeff(0).is_zero());
    let neg = below - at_zero;
    if pos == 0 || neg == 0 {
        return Err(Error::Integrity(format!(
            "coefficient sign test and sturm counts disagree for {f}"
        )));
    }
    Ok(SignProfile {
        kind: SignProfileKind::Mixed,
        witness: format!("{pos} positive and {neg} negative distinct roots"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn hankel_examples() {
        assert_eq!(hankel_minors(&p(&[2, -3, 1])).unwrap(), vec![int(2), int(1)]);
        assert_eq!(hankel_minors(&p(&[1, 0, 1])).unwrap()[1], int(-4));
        assert_eq!(hankel_minors(&p(&[10, -15, 5])).unwrap(), vec![int(2), int(1)]);
        assert!(hankel_minors(&Polynomial::zero()).is_err());
    }

    #[test]
    fn certify_examples() {
        let j25 = p(&[1958, 4872, 3010]);
        let j24 = p(&[1575, 3916, 2436]);
        for m in [CertMethod::Sturm, CertMethod::Hankel, CertMethod::Both] {
            assert!(certify_hyperbolic(&j25, m).unwrap().hyperbolic);
            assert!(!certify_hyperbolic(&j24, m).unwrap().hyperbolic);
            assert!(!certify_hyperbolic(&p(&[1, 0, 1]), m).unwrap().hyperbolic);
        }
        let c = certify_hyperbolic(&j25, CertMethod::Both).unwrap();
        let minors = c.minors.unwrap();
        assert_eq!(minors.len(), 2);
        assert_eq!(minors[0], int(2));
        assert_eq!(c.sign_profile.kind, SignProfileKind::AllNonpositive);
    }

    #[test]
    fn repeated_roots_defer_to_sturm() {
        let f = p(&[1, -2, 1]);
        let c = certify_hyperbolic(&f, CertMethod::Hankel).unwrap();
        assert_eq!(c.hankel_verdict, Some(HankelVerdict::Undetermined));
        assert!(c.hyperbolic);
        assert!(certify_hyperbolic(&f, CertMethod::Both).unwrap().hyperbolic);
        // x^2 (x^2 + 1): repeated root and complex pair
        let g = p(&[0, 0, 1, 0, 1]);
        assert!(!certify_hyperbolic(&g, CertMethod::Hankel).unwrap().hyperbolic);
    }

    #[test]
    fn constants_are_hyperbolic() {
        let c = certify_hyperbolic(&p(&[5]), CertMethod::Both).unwrap();
        assert!(c.hyperbolic);
        assert_eq!(c.minors.unwrap().len(), 0);
    }

    #[test]
    fn sign_profiles() {
        assert_eq!(root_sign_profile(&p(&[1, 3, 3, 1])).unwrap().kind, SignProfileKind::AllNonpositive);
        assert_eq!(root_sign_profile(&p(&[1, 0, -1])).unwrap().kind, SignProfileKind::Mixed);
        assert_eq!(root_sign_profile(&p(&[0, 0, 2, 1])).unwrap().kind, SignProfileKind::AllNonpositive);
        assert_eq!(root_sign_profile(&p(&[6, -5, 1])).unwrap().kind, SignProfileKind::AllNonnegative);
        assert_eq!(root_sign_profile(&p(&[-6, 5, -1])).unwrap().kind, SignProfileKind::AllNonnegative);
        assert_eq!(root_sign_profile(&p(&[1, 0, 1])).unwrap().kind, SignProfileKind::Undetermined);
        // roots -1, 0, 2: x(x+1)(x-2) = x^3 - x^2 - 2x
        assert_eq!(root_sign_profile(&p(&[0, -2, -1, 1])).unwrap().kind, SignProfileKind::Mixed);
    }

    #[test]
    fn json_rendering() {
        let c = certify_hyperbolic(&p(&[1958, 4872, 3010]), CertMethod::Both).unwrap();
        let v = c.to_json();
        assert_eq!(v["method"], "both");
        assert_eq!(v["hyperbolic"], true);
        assert_eq!(v["minors"][0], "2");
    }
}
