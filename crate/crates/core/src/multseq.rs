//! Coefficient multipliers `Γ_γ(x^k) = γ_k x^k`, Schur–Szegő composition,
//! Hadamard products, seeded multiplier-sequence witness tests and the
//! zero/sign structure of windows.
//!
//! Naming of the two regimes: a type I multiplier must keep every
//! real-rooted input real-rooted, a type II multiplier only inputs whose
//! roots share one sign.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::number::{binomial_row, sign, Rational};
use crate::polyexact::Polynomial;
use crate::rootcert::{certify_hyperbolic, CertMethod, RootCertificate};
use crate::seqcore::{Provenance, Sequence};

/// `Σ γ_{k+n} f_k x^k`.
pub fn gamma_apply(seq: &Sequence, n: usize, f: &Polynomial) -> Result<Polynomial> {
    let Some(d) = f.degree() else {
        return Ok(Polynomial::zero());
    };
    let w = seq.window(n as i64, (n + d) as i64)?;
    Ok(Polynomial::new(
        f.coeffs().iter().zip(w).map(|(a, g)| a * g).collect(),
    ))
}

/// With `f1 = Σ C(d,k) a_k x^k` and `f2 = Σ C(d,k) b_k x^k`, returns
/// `Σ C(d,k) a_k b_k x^k`.
pub fn schur_szego(f1: &Polynomial, f2: &Polynomial) -> Result<Polynomial> {
    let d1 = f1.degree().ok_or(Error::ZeroPolynomial)?;
    let d2 = f2.degree().ok_or(Error::ZeroPolynomial)?;
    if d1 != d2 {
        return Err(Error::DegreeMismatch { left: d1, right: d2 });
    }
    let row = binomial_row(d1);
    Ok(Polynomial::new(
        (0..=d1)
            .map(|k| f1.coeff(k) * f2.coeff(k) / Rational::from_integer(row[k].clone()))
            .collect(),
    ))
}

/// Termwise product on the overlap of the two index ranges.
pub fn hadamard_product(a: &Sequence, b: &Sequence) -> Result<Sequence> {
    let lo = a.first_index().max(b.first_index());
    let hi = a.last_index().min(b.last_index());
    if lo > hi {
        return Err(Error::EmptyDomain);
    }
    let terms = (lo..=hi)
        .map(|i| Ok(a.get(i)? * b.get(i)?))
        .collect::<Result<Vec<_>>>()?;
    Sequence::new(
        terms,
        lo,
        Provenance::Operator {
            op: format!("hadamard({})", b.provenance()),
            source: Box::new(a.provenance().clone()),
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplierType {
    /// Inputs may have real roots of any sign.
    TypeI,
    /// Inputs have real roots of a single sign.
    TypeII,
}

impl MultiplierType {
    pub fn name(self) -> &'static str {
        match self {
            MultiplierType::TypeI => "type_i",
            MultiplierType::TypeII => "type_ii",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessVerdict {
    NoCounterexample,
    CounterexampleFound,
}

impl fmt::Display for WitnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessVerdict::NoCounterexample => "no_counterexample",
            WitnessVerdict::CounterexampleFound => "counterexample_found",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessFailure {
    pub trial: usize,
    pub input: Polynomial,
    pub output: Polynomial,
    pub certificate: RootCertificate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessReport {
    pub degree: usize,
    pub shift: usize,
    pub multiplier_type: MultiplierType,
    pub trials: usize,
    pub failures: Vec<WitnessFailure>,
    pub rng_seed: u64,
    pub verdict: WitnessVerdict,
}

impl WitnessReport {
    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.rng_seed,
            "trials": self.trials,
            "degree": self.degree,
            "shift": self.shift,
            "type": self.multiplier_type.name(),
            "verdict": self.verdict.to_string(),
            "failures": self.failures.iter().map(|f| json!({
                "trial": f.trial,
                "input": f.input.to_string(),
                "output": f.output.to_string(),
                "certificate": f.certificate.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Root grid: numerators in `-12..=12`, denominators in `1..=6`.
fn random_root(rng: &mut ChaCha8Rng, sign_choice: Option<bool>) -> Rational {
    let den: i64 = rng.gen_range(1..=6);
    let num: i64 = match sign_choice {
        None => rng.gen_range(-12..=12),
        Some(true) => rng.gen_range(0..=12),
        Some(false) => -rng.gen_range(0..=12),
    };
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn random_real_rooted(rng: &mut ChaCha8Rng, d: usize, ty: MultiplierType) -> Polynomial {
    let m = rng.gen_range(1..=d);
    let sign_choice = match ty {
        MultiplierType::TypeI => None,
        MultiplierType::TypeII => Some(rng.gen_bool(0.5)),
    };
    let roots: Vec<Rational> = (0..m).map(|_| random_root(rng, sign_choice)).collect();
    let mut lead: i64 = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        lead = -lead;
    }
    Polynomial::from_roots(&roots, &Rational::from_integer(lead.into()))
}

/// Seeded search for a real-rooted `f` of degree at most `d` with
/// `Γ_{γ_{n+k}}(f)` not hyperbolic. Trial 0 is always `(1+x)^d`.
pub fn order_d_witness_test(
    seq: &Sequence,
    d: usize,
    n: usize,
    trials: usize,
    seed: u64,
    ty: MultiplierType,
) -> Result<WitnessReport> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is required".into()));
    }
    seq.window(n as i64, (n + d) as i64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = Rational::one();
    let mut inputs = vec![Polynomial::from_roots(&vec![-one.clone(); d], &one)];
    inputs.extend((1..trials).map(|_| random_real_rooted(&mut rng, d, ty)));
    let outcomes: Vec<Option<WitnessFailure>> = inputs
        .into_par_iter()
        .enumerate()
        .map(|(trial, input)| {
            let output = gamma_apply(seq, n, &input)?;
            if output.is_zero() {
                return Ok(None);
            }
            let certificate = certify_hyperbolic(&output, CertMethod::Sturm)?;
            Ok((!certificate.hyperbolic).then_some(WitnessFailure {
                trial,
                input,
                output,
                certificate,
            }))
        })
        .collect::<Result<_>>()?;
    let failures: Vec<WitnessFailure> = outcomes.into_iter().flatten().collect();
    let verdict = if failures.is_empty() {
        WitnessVerdict::NoCounterexample
    } else {
        WitnessVerdict::CounterexampleFound
    };
    Ok(WitnessReport {
        degree: d,
        shift: n,
        multiplier_type: ty,
        trials,
        failures,
        rng_seed: seed,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructurePattern {
    ConstantSign,
    AlternatingSign,
    Mixed,
}

impl StructurePattern {
    pub fn name(self) -> &'static str {
        match self {
            StructurePattern::ConstantSign => "constant_sign",
            StructurePattern::AlternatingSign => "alternating_sign",
            StructurePattern::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub lo: usize,
    pub hi: usize,
    pub pattern: StructurePattern,
    /// Indices of zero terms with nonzero terms on both sides.
    pub violations: Vec<usize>,
}

pub fn window_structure_check(seq: &Sequence, lo: usize, hi: usize) -> Result<StructureReport> {
    if lo > hi {
        return Err(Error::EmptyInterval);
    }
    let w = seq.window(lo as i64, hi as i64)?;
    let nonzero: Vec<usize> = (0..w.len()).filter(|&k| !w[k].is_zero()).collect();
    let violations = match (nonzero.first(), nonzero.last()) {
        (Some(&a), Some(&b)) => (a..b).filter(|&k| w[k].is_zero()).map(|k| lo + k).collect(),
        _ => vec![],
    };
    let signs: Vec<i8> = nonzero.iter().map(|&k| sign(&w[k])).collect();
    let pattern = if signs.windows(2).all(|p| p[0] == p[1]) {
        StructurePattern::ConstantSign
    } else if nonzero
        .iter()
        .map(|&k| if k % 2 == 0 { sign(&w[k]) } else { -sign(&w[k]) })
        .collect::<Vec<_>>()
        .windows(2)
        .all(|p| p[0] == p[1])
    {
        StructurePattern::AlternatingSign
    } else {
        StructurePattern::Mixed
    };
    Ok(StructureReport {
        lo,
        hi,
        pattern,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jensen::jensen_poly;
    use crate::number::int;
    use crate::rootcert::is_hyperbolic;
    use crate::seqcore::{builtin_sequence, partition_sequence, BuiltinParams};

    fn builtin(name: &str, n: usize) -> Sequence {
        builtin_sequence(name, &BuiltinParams::new(), n).unwrap()
    }

    #[test]
    fn gamma_examples() {
        let f = Polynomial::from_i64(&[3, -1, 4, 1]);
        assert_eq!(gamma_apply(&builtin("constant", 10), 2, &f).unwrap(), f);
        let p = partition_sequence(40);
        let sq = Polynomial::from_i64(&[1, 2, 1]);
        assert_eq!(gamma_apply(&p, 25, &sq).unwrap(), Polynomial::from_i64(&[1958, 4872, 3010]));
        assert_eq!(gamma_apply(&p, 25, &sq).unwrap(), jensen_poly(&p, 2, 25).unwrap());
        assert_eq!(
            gamma_apply(&builtin("signflip", 5), 0, &Polynomial::from_i64(&[1, 1, 1])).unwrap(),
            Polynomial::from_i64(&[1, -1, 1])
        );
        assert!(gamma_apply(&p, 39, &sq).is_err());
    }

    #[test]
    fn schur_szego_examples() {
        let sq = Polynomial::from_i64(&[1, 2, 1]);
        assert_eq!(schur_szego(&sq, &sq).unwrap(), sq);
        let f1 = Polynomial::from_i64(&[1, 0, -1]);
        assert_eq!(schur_szego(&f1, &sq).unwrap(), f1);
        assert!(matches!(
            schur_szego(&f1, &Polynomial::from_i64(&[1, 1])),
            Err(Error::DegreeMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn hadamard_examples() {
        let p = partition_sequence(30);
        let c = builtin("constant", 40);
        assert_eq!(hadamard_product(&p, &c).unwrap().terms(), p.terms());
        let alt = hadamard_product(&p, &builtin("signflip", 30)).unwrap();
        assert_eq!(alt.get(5).unwrap(), &int(-7));
        let sq = hadamard_product(&p, &p).unwrap();
        assert_eq!(sq.get(10).unwrap(), &int(1764));
        let shifted = Sequence::from_i64(&[1, 2, 3], 29).unwrap();
        let h = hadamard_product(&p, &shifted).unwrap();
        assert_eq!((h.first_index(), h.last_index()), (29, 30));
        let far = Sequence::from_i64(&[1], 31).unwrap();
        assert!(hadamard_product(&p, &far).is_err());
    }

    #[test]
    fn witness_examples() {
        let p = partition_sequence(120);
        for ty in [MultiplierType::TypeI, MultiplierType::TypeII] {
            let r = order_d_witness_test(&p, 3, 94, 200, 7, ty).unwrap();
            assert_eq!(r.verdict, WitnessVerdict::NoCounterexample);
            let r = order_d_witness_test(&p, 3, 50, 20, 7, ty).unwrap();
            assert_eq!(r.verdict, WitnessVerdict::CounterexampleFound);
            assert_eq!(r.failures[0].trial, 0);
            assert_eq!(r.failures[0].input, Polynomial::from_i64(&[1, 3, 3, 1]));
        }
        let c = builtin("constant", 10);
        let r = order_d_witness_test(&c, 5, 0, 200, 1, MultiplierType::TypeI).unwrap();
        assert_eq!(r.verdict, WitnessVerdict::NoCounterexample);
        assert!(order_d_witness_test(&c, 5, 0, 0, 1, MultiplierType::TypeI).is_err());
        assert!(order_d_witness_test(&c, 5, 8, 3, 1, MultiplierType::TypeI).is_err());
    }

    #[test]
    fn witness_reports_are_reproducible() {
        let s = Sequence::from_i64(&[1, 3, 2, 5, 1, 4, 2], 0).unwrap();
        let a = order_d_witness_test(&s, 3, 1, 50, 99, MultiplierType::TypeI).unwrap();
        let b = order_d_witness_test(&s, 3, 1, 50, 99, MultiplierType::TypeI).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.failures.is_empty(), a.verdict == WitnessVerdict::NoCounterexample);
        let v = a.to_json();
        assert_eq!(v["seed"], 99);
    }

    #[test]
    fn witness_matches_jensen() {
        let p = partition_sequence(140);
        for d in 1..=3 {
            for n in [1usize, 10, 20, 24, 25, 50, 90, 91, 93, 94, 100, 120] {
                let r = order_d_witness_test(&p, d, n, 40, n as u64, MultiplierType::TypeI).unwrap();
                let hyper = is_hyperbolic(&jensen_poly(&p, d, n).unwrap()).unwrap();
                assert_eq!(r.verdict == WitnessVerdict::NoCounterexample, hyper, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn structure_examples() {
        let p = partition_sequence(100);
        let r = window_structure_check(&p, 0, 100).unwrap();
        assert_eq!(r.pattern, StructurePattern::ConstantSign);
        assert!(r.violations.is_empty());
        let z = Sequence::from_i64(&[1, 0, 1], 0).unwrap();
        assert_eq!(window_structure_check(&z, 0, 2).unwrap().violations, vec![1]);
        let alt = Sequence::from_i64(&[1, -2, 4, -8], 0).unwrap();
        assert_eq!(window_structure_check(&alt, 0, 3).unwrap().pattern, StructurePattern::AlternatingSign);
        let edge = Sequence::from_i64(&[0, 0, 3, 5, 0], 0).unwrap();
        assert!(window_structure_check(&edge, 0, 4).unwrap().violations.is_empty());
        let mixed = Sequence::from_i64(&[1, 1, -1, 1], 0).unwrap();
        assert_eq!(window_structure_check(&mixed, 0, 3).unwrap().pattern, StructurePattern::Mixed);
        assert!(window_structure_check(&p, 5, 4).is_err());
        assert!(window_structure_check(&p, 90, 101).is_err());
    }

    #[test]
    fn limits_of_multipliers_pass() {
        // geometric r_i -> 1; each is a multiplier since Γ(f)(x) = f(r x)
        for i in 1..6i64 {
            let mut params = BuiltinParams::new();
            params.insert("r".into(), format!("{}/{}", i + 1, i));
            let g = builtin_sequence("geometric", &params, 8).unwrap();
            let r = order_d_witness_test(&g, 4, 0, 60, i as u64, MultiplierType::TypeI).unwrap();
            assert_eq!(r.verdict, WitnessVerdict::NoCounterexample);
        }
        let limit = builtin("constant", 8);
        let r = order_d_witness_test(&limit, 4, 0, 60, 1, MultiplierType::TypeI).unwrap();
        assert_eq!(r.verdict, WitnessVerdict::NoCounterexample);
    }
}
