//! Jensen polynomials `J^{d,n}(x) = Σ C(d,k) γ_{k+n} x^k`, their Appell
//! reversals, and per-shift hyperbolicity evidence.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::number::{binomial_row, factorial, Rational};
use crate::polyexact::Polynomial;
use crate::rootcert::{certify_hyperbolic, CertMethod, SignProfileKind};
use crate::seqcore::Sequence;

fn check_degree(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter("Jensen degree must be at least 1".into()));
    }
    Ok(())
}

pub fn jensen_poly(seq: &Sequence, d: usize, n: usize) -> Result<Polynomial> {
    check_degree(d)?;
    let window = seq.window(n as i64, (n + d) as i64)?;
    let row = binomial_row(d);
    Ok(Polynomial::new(
        window
            .iter()
            .zip(row)
            .map(|(g, c)| g * Rational::from_integer(c))
            .collect(),
    ))
}

/// `P^{d,n}(x) = x^d J^{d,n}(1/x) / d!`.
pub fn appell_poly(seq: &Sequence, d: usize, n: usize) -> Result<Polynomial> {
    let j = jensen_poly(seq, d, n)?;
    let inv = Rational::new(1.into(), factorial(d));
    Ok(j.reversed(d).scale(&inv))
}

/// Exact `J^{d,n}(x/d)`.
pub fn scaled_jensen_eval(seq: &Sequence, d: usize, n: usize, x: &Rational) -> Result<Rational> {
    check_degree(d)?;
    let j = jensen_poly(seq, d, n)?;
    Ok(j.eval(&(x / Rational::from_integer(d.into()))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JensenVerdict {
    pub shift: usize,
    pub hyperbolic: bool,
    pub sign_profile: SignProfileKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JensenReport {
    pub degree: usize,
    pub verdicts: Vec<JensenVerdict>,
    /// Least shift in range from which every verdict is hyperbolic. This is
    /// a statement about the scanned window only.
    pub onset: Option<usize>,
}

impl JensenReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("shift,hyperbolic,sign_profile\n");
        for v in &self.verdicts {
            out.push_str(&format!(
                "{},{},{}\n",
                v.shift,
                v.hyperbolic,
                v.sign_profile.name()
            ));
        }
        out
    }
}

pub fn jensen_verdict(seq: &Sequence, d: usize, n: usize) -> Result<JensenVerdict> {
    let j = jensen_poly(seq, d, n)?;
    if j.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let cert = certify_hyperbolic(&j, CertMethod::Sturm)?;
    Ok(JensenVerdict {
        shift: n,
        hyperbolic: cert.hyperbolic,
        sign_profile: cert.sign_profile.kind,
    })
}

pub fn jensen_window_report(seq: &Sequence, d: usize, n_lo: usize, n_hi: usize) -> Result<JensenReport> {
    check_degree(d)?;
    if n_lo > n_hi {
        return Err(Error::InvalidParameter(format!("empty shift range [{n_lo}, {n_hi}]")));
    }
    seq.window(n_lo as i64, (n_hi + d) as i64)?;
    let verdicts = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| jensen_verdict(seq, d, n))
        .collect::<Result<Vec<_>>>()?;
    let onset = suffix_onset(verdicts.iter().map(|v| (v.shift, v.hyperbolic)));
    Ok(JensenReport {
        degree: d,
        verdicts,
        onset,
    })
}

/// Least index of the all-true suffix; `None` when the last entry fails.
pub(crate) fn suffix_onset(items: impl DoubleEndedIterator<Item = (usize, bool)>) -> Option<usize> {
    let mut onset = None;
    for (idx, ok) in items.rev() {
        if !ok {
            break;
        }
        onset = Some(idx);
    }
    onset
}
