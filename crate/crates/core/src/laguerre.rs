//! The Laguerre operators
//!
//! `L_k(φ) = Σ_{j=0}^{2k} (-1)^{j+k}/(2k)! · C(2k,j) · φ^{(j)} φ^{(2k-j)}`,
//!
//! which are the `y^{2k}` coefficients of `φ(x+iy)φ(x-iy)`. They are
//! evaluated on sequences at the origin (where `φ^{(j)}(0) = γ_{n+j}`), on
//! truncated series, on polynomials, and iterated.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::number::{binomial_row, factorial, format_rational, sign, Rational};
use crate::polyexact::{series_derivative, series_product, taylor_window, Polynomial, TruncatedSeries};
use crate::seqcore::Sequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaguerreSource {
    SequenceForm,
    SeriesForm,
}

impl fmt::Display for LaguerreSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LaguerreSource::SequenceForm => "sequence_form",
            LaguerreSource::SeriesForm => "series_form",
        })
    }
}

/// `L_k(φ_γ^{(n)})(0)` together with where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreValue {
    pub value: Rational,
    pub k: usize,
    pub shift: usize,
    pub source: LaguerreSource,
}

fn signed_term(j: usize, k: usize, t: BigInt) -> BigInt {
    if (j + k).is_multiple_of(2) {
        t
    } else {
        -t
    }
}

/// `L_k(φ_γ^{(n)})(0)` from the window `γ_n..γ_{n+2k}`.
pub fn laguerre_at_zero(seq: &Sequence, k: usize, n: usize) -> Result<Rational> {
    let w = seq.window(n as i64, (n + 2 * k) as i64)?;
    let row = binomial_row(2 * k);
    let den = Rational::from_integer(factorial(2 * k));
    if w.iter().all(|t| t.is_integer()) {
        let ints: Vec<BigInt> = w.iter().map(|t| t.to_integer()).collect();
        let sum = (0..=2 * k).fold(BigInt::zero(), |acc, j| {
            acc + signed_term(j, k, &row[j] * &ints[j] * &ints[2 * k - j])
        });
        return Ok(Rational::from_integer(sum) / den);
    }
    let sum = (0..=2 * k).fold(Rational::zero(), |acc, j| {
        let t = Rational::from_integer(row[j].clone()) * &w[j] * &w[2 * k - j];
        if (j + k).is_multiple_of(2) {
            acc + t
        } else {
            acc - t
        }
    });
    Ok(sum / den)
}

pub fn laguerre_value(seq: &Sequence, k: usize, n: usize) -> Result<LaguerreValue> {
    Ok(LaguerreValue {
        value: laguerre_at_zero(seq, k, n)?,
        k,
        shift: n,
        source: LaguerreSource::SequenceForm,
    })
}

/// `L_k` of a truncated series; the result has order `order(s) - 2k`.
pub fn laguerre_series(s: &TruncatedSeries, k: usize) -> Result<TruncatedSeries> {
    if s.order() < 2 * k {
        return Err(Error::InsufficientOrder {
            required: 2 * k,
            available: s.order(),
        });
    }
    let target = s.order() - 2 * k;
    let mut derivs = vec![s.clone()];
    for _ in 0..2 * k {
        let next = series_derivative(derivs.last().expect("nonempty"))?;
        derivs.push(next);
    }
    let row = binomial_row(2 * k);
    let den = Rational::from_integer(factorial(2 * k));
    let mut acc: Option<TruncatedSeries> = None;
    for j in 0..=2 * k {
        let c = Rational::from_integer(signed_term(j, k, row[j].clone())) / &den;
        let term = series_product(&derivs[j], &derivs[2 * k - j]).scale(&c);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    let out = acc.expect("at least one term");
    debug_assert_eq!(out.order(), target);
    Ok(out)
}

/// `L_j` applied `k` times to `φ_γ^{(n)}`, read at the origin. Needs the
/// window `γ_n..γ_{n+2jk}`.
pub fn laguerre_iterate_at_zero(seq: &Sequence, j: usize, k: usize, n: usize) -> Result<Rational> {
    if k == 0 {
        return Err(Error::InvalidParameter("iteration count must be at least 1".into()));
    }
    let order = 2 * j * k;
    let available = (seq.last_index() + 1).saturating_sub(n.max(seq.first_index()));
    if n < seq.first_index() || available < order + 1 {
        return Err(Error::InsufficientOrder {
            required: order,
            available: available.saturating_sub(1),
        });
    }
    let mut s = taylor_window(seq, n, order)?;
    for _ in 0..k {
        s = laguerre_series(&s, j)?;
    }
    Ok(s.constant_term().clone())
}

/// `L_k(f)` as a polynomial, for polynomial `f`.
pub fn laguerre_poly(f: &Polynomial, k: usize) -> Polynomial {
    let row = binomial_row(2 * k);
    let den = Rational::from_integer(factorial(2 * k));
    let derivs: Vec<Polynomial> = (0..=2 * k).map(|m| f.nth_derivative(m)).collect();
    let mut acc = Polynomial::zero();
    for j in 0..=2 * k {
        let c = Rational::from_integer(signed_term(j, k, row[j].clone())) / &den;
        acc = &acc + &(&derivs[j] * &derivs[2 * k - j]).scale(&c);
    }
    acc
}

/// Outcome of comparing `f(x+iy)f(x-iy)` with the operator values at `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionReport {
    pub x: Rational,
    /// Coefficients of `y^0, y^1, ...` of the product (real parts).
    pub coefficients: Vec<Rational>,
    pub passed: bool,
    pub first_mismatch: Option<String>,
}

/// Coefficients in `y` of `f(x + s·iy)` as (real, imaginary) pairs.
fn complex_shift(f: &Polynomial, x: &Rational, s: i64) -> Vec<(Rational, Rational)> {
    let d = f.degree().unwrap_or(0);
    let mut out = vec![(Rational::zero(), Rational::zero()); d + 1];
    for (m, a) in f.coeffs().iter().enumerate() {
        let row = binomial_row(m);
        for r in 0..=m {
            // C(m,r) x^{m-r} (s·i)^r
            let mag = a * Rational::from_integer(row[r].clone()) * num_traits::pow(x.clone(), m - r);
            let mag = if s < 0 && r % 2 == 1 { -mag } else { mag };
            match r % 4 {
                0 => out[r].0 += mag,
                1 => out[r].1 += mag,
                2 => out[r].0 -= mag,
                _ => out[r].1 -= mag,
            }
        }
    }
    out
}

pub fn laguerre_expansion_check(f: &Polynomial, x: &Rational) -> Result<ExpansionReport> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let plus = complex_shift(f, x, 1);
    let minus = complex_shift(f, x, -1);
    let mut re = vec![Rational::zero(); 2 * d + 1];
    let mut im = vec![Rational::zero(); 2 * d + 1];
    for (a, (ar, ai)) in plus.iter().enumerate() {
        for (b, (br, bi)) in minus.iter().enumerate() {
            re[a + b] += ar * br - ai * bi;
            im[a + b] += ar * bi + ai * br;
        }
    }
    let mut first_mismatch = None;
    for p in 0..=2 * d {
        if !im[p].is_zero() {
            first_mismatch = Some(format!("imaginary part of y^{p} is {}", format_rational(&im[p])));
            break;
        }
        if p % 2 == 1 {
            if !re[p].is_zero() {
                first_mismatch = Some(format!("odd power y^{p} has coefficient {}", format_rational(&re[p])));
                break;
            }
            continue;
        }
        let expected = laguerre_poly(f, p / 2).eval(x);
        if expected != re[p] {
            first_mismatch = Some(format!(
                "y^{p}: expansion {} but L_{} gives {}",
                format_rational(&re[p]),
                p / 2,
                format_rational(&expected)
            ));
            break;
        }
    }
    Ok(ExpansionReport {
        x: x.clone(),
        coefficients: re,
        passed: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// `L_k(φ_γ^{(n)})(0)` for every `n` in `lo..=hi`, in order.
pub fn laguerre_window(seq: &Sequence, k: usize, lo: usize, hi: usize) -> Result<Vec<LaguerreValue>> {
    if lo > hi {
        return Err(Error::EmptyDomain);
    }
    (lo..=hi).into_par_iter().map(|n| laguerre_value(seq, k, n)).collect()
}

pub fn laguerre_csv(values: &[LaguerreValue]) -> String {
    let mut out = String::from("n,k,value,sign\n");
    for v in values {
        let s = match sign(&v.value) {
            1 => "+",
            -1 => "-",
            _ => "0",
        };
        out.push_str(&format!("{},{},{},{}\n", v.shift, v.k, format_rational(&v.value), s));
    }
    out
}

/// Positive-rational check used by property suites: `L_k(f)(x) >= 0`.
pub fn laguerre_nonnegative_at(f: &Polynomial, k: usize, x: &Rational) -> bool {
    !laguerre_poly(f, k).eval(x).is_negative()
}
