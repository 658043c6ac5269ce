//! Order-j Turán operators `T_j`, their iterates `T_j^{(k)}`, and the
//! sequence operator that maps `γ` to `{T_j^{(k)}(i)}`.
//!
//! Every operator is evaluated on a window `w_0..w_j` of consecutive terms;
//! the anchor decides which window index `i` refers to. The window forms are
//!
//! - `j = 1`: `w_1 - w_0`
//! - `j = 2`: `w_1^2 - w_0 w_2`
//! - `j = 3`: `4(w_1^2 - w_0 w_2)(w_2^2 - w_1 w_3) - (w_1 w_2 - w_0 w_3)^2`
//! - `j >= 4`: `D_j · w_j^{2j-2}`, the leading Hankel minor of the degree-j
//!   Jensen polynomial of the window with its denominator cleared (this is
//!   the polynomial's discriminant, an integer form of degree `2j-2`). For
//!   `j = 4` the explicit quartic discriminant is used.
//!
//! All forms are homogeneous, so positive rescaling of `γ` never changes a
//! sign, and all are polynomials in the window, so iterating keeps exact
//! integers for integer input.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::number::{binomial_row, common_denominator, exact_div, format_rational, sign_int, Rational};
use crate::polyexact::Polynomial;
use crate::rootcert::{hankel_leading_minor, hankel_minors, scaled_power_sums};
use crate::seqcore::{Provenance, Sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnchorConvention {
    /// `T_j(i)` reads `γ_{i-j}..γ_i`.
    Backward,
    /// `T_j(i)` reads `γ_{i-1}..γ_{i+j-1}`.
    Centered,
    /// `T_j(i)` reads `γ_i..γ_{i+j}`.
    Start,
}

impl AnchorConvention {
    pub const ALL: [AnchorConvention; 3] = [
        AnchorConvention::Backward,
        AnchorConvention::Centered,
        AnchorConvention::Start,
    ];

    /// Backward for `j = 1`, centered for `j = 2`, start otherwise.
    pub fn default_for(j: usize) -> Self {
        match j {
            1 => AnchorConvention::Backward,
            2 => AnchorConvention::Centered,
            _ => AnchorConvention::Start,
        }
    }

    /// How many terms before `i` the window starts.
    pub fn reach_before(self, j: usize) -> usize {
        match self {
            AnchorConvention::Backward => j,
            AnchorConvention::Centered => 1.min(j),
            AnchorConvention::Start => 0,
        }
    }

    pub fn reach_after(self, j: usize) -> usize {
        j - self.reach_before(j)
    }

    pub fn name(self) -> &'static str {
        match self {
            AnchorConvention::Backward => "backward",
            AnchorConvention::Centered => "centered",
            AnchorConvention::Start => "start",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "backward" => Some(AnchorConvention::Backward),
            "centered" => Some(AnchorConvention::Centered),
            "start" => Some(AnchorConvention::Start),
            _ => None,
        }
    }
}

impl fmt::Display for AnchorConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Degree of the window form of order `j` as a homogeneous polynomial.
pub fn form_degree(j: usize) -> usize {
    if j == 1 {
        1
    } else {
        2 * j - 2
    }
}

fn t2(w0: &BigInt, w1: &BigInt, w2: &BigInt) -> BigInt {
    w1 * w1 - w0 * w2
}

fn t3_closed(w: &[BigInt]) -> BigInt {
    let a = t2(&w[0], &w[1], &w[2]);
    let b = t2(&w[1], &w[2], &w[3]);
    let c = &w[1] * &w[2] - &w[0] * &w[3];
    BigInt::from(4) * a * b - &c * &c
}

/// `D_j · w_j^{2j-2}` for the Jensen polynomial `Σ C(j,k) w_k x^k`.
///
/// With `s_m = w_j^m S_m` the integer Hankel minor equals
/// `D_j · w_j^{j(j-1)}`, so one exact division by `w_j^{(j-1)(j-2)}` remains.
/// A vanishing `w_j` is handled by interpolating the form (degree at most
/// `2j-2` in `w_j`) through nonzero sample values.
pub fn cleared_hankel_form(w: &[BigInt]) -> Result<BigInt> {
    let j = w.len() - 1;
    if j == 0 {
        return Err(Error::InvalidParameter("window needs at least two terms".into()));
    }
    if w[j].is_zero() {
        return interpolate_at_zero_lead(w);
    }
    let row = binomial_row(j);
    let b: Vec<BigInt> = w.iter().zip(&row).map(|(g, c)| g * c).collect();
    let s = scaled_power_sums(&b, 2 * j - 2);
    let minor = hankel_leading_minor(&s, j);
    let scale = num_traits::pow(w[j].clone(), (j - 1) * (j - 2));
    exact_div(&minor, &scale, "cleared Hankel minor")
}

fn interpolate_at_zero_lead(w: &[BigInt]) -> Result<BigInt> {
    let j = w.len() - 1;
    let points: Vec<i64> = (1..=(2 * j - 1) as i64).collect();
    let mut sample = w.to_vec();
    let mut acc = Rational::zero();
    for (a, &t) in points.iter().enumerate() {
        sample[j] = BigInt::from(t);
        let value = cleared_hankel_form(&sample)?;
        let mut weight = Rational::one();
        for (b, &u) in points.iter().enumerate() {
            if a != b {
                weight *= Rational::new(BigInt::from(-u), BigInt::from(t - u));
            }
        }
        acc += Rational::from_integer(value) * weight;
    }
    if !acc.is_integer() {
        return Err(Error::Integrity("interpolated Hankel form is not an integer".into()));
    }
    Ok(acc.to_integer())
}

/// Discriminant of `a x^4 + b x^3 + c x^2 + d x + e`.
pub fn quartic_discriminant(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, e: &BigInt) -> BigInt {
    let n = |v: i64| BigInt::from(v);
    let (a2, b2, c2, d2, e2) = (a * a, b * b, c * c, d * d, e * e);
    let ae = a * e;
    let bd = b * d;
    n(256) * &ae * &ae * &ae - n(192) * &a2 * &bd * &e2 - n(128) * &a2 * &c2 * &e2
        + n(144) * &a2 * c * &d2 * e
        - n(27) * &a2 * &d2 * &d2
        + n(144) * a * &b2 * c * &e2
        - n(6) * a * &b2 * &d2 * e
        - n(80) * a * b * &c2 * d * e
        + n(18) * a * &bd * c * &d2
        + n(16) * a * &c2 * &c2 * e
        - n(4) * a * &c2 * c * &d2
        - n(27) * &b2 * &b2 * &e2
        + n(18) * &b2 * b * c * d * e
        - n(4) * &b2 * b * &d2 * d
        - n(4) * &b2 * &c2 * c * e
        + &b2 * &c2 * &d2
}

/// Window form of order `j` on integer input `w_0..w_j`.
pub fn turan_form_int(w: &[BigInt]) -> Result<BigInt> {
    match w.len() {
        0 | 1 => Err(Error::InvalidParameter("Turán order must be at least 1".into())),
        2 => Ok(&w[1] - &w[0]),
        3 => Ok(t2(&w[0], &w[1], &w[2])),
        4 => {
            let closed = t3_closed(w);
            check_order3_signs(w, &closed)?;
            Ok(closed)
        }
        5 => Ok(quartic_discriminant(
            &w[4],
            &(BigInt::from(4) * &w[3]),
            &(BigInt::from(6) * &w[2]),
            &(BigInt::from(4) * &w[1]),
            &w[0],
        )),
        _ => cleared_hankel_form(w),
    }
}

/// The closed form and the Hankel route must agree in sign whenever both
/// order-2 values of the window are positive.
fn check_order3_signs(w: &[BigInt], closed: &BigInt) -> Result<()> {
    if w[3].is_zero() || !t2(&w[0], &w[1], &w[2]).is_positive() || !t2(&w[1], &w[2], &w[3]).is_positive() {
        return Ok(());
    }
    let hankel = cleared_hankel_form(w)?;
    if sign_int(&hankel) != sign_int(closed) {
        return Err(Error::Integrity(format!(
            "order-3 closed form and Hankel minor disagree in sign on window {w:?}"
        )));
    }
    Ok(())
}

/// Window form on rational input, by clearing a common denominator.
pub fn turan_form(w: &[Rational]) -> Result<Rational> {
    let den = common_denominator(w);
    let ints: Vec<BigInt> = w
        .iter()
        .map(|q| (q * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let value = turan_form_int(&ints)?;
    if den.is_one() {
        return Ok(Rational::from_integer(value));
    }
    let j = w.len().saturating_sub(1);
    Ok(Rational::new(value, num_traits::pow(den, form_degree(j))))
}

fn window_for(seq: &Sequence, j: usize, i: usize, anchor: AnchorConvention) -> Result<&[Rational]> {
    if j == 0 {
        return Err(Error::InvalidParameter("Turán order must be at least 1".into()));
    }
    let lo = i as i64 - anchor.reach_before(j) as i64;
    seq.window(lo, lo + j as i64)
}

/// `T_j(i)` of `seq` under the given anchor.
pub fn turan_value(seq: &Sequence, j: usize, i: usize, anchor: AnchorConvention) -> Result<Rational> {
    turan_form(window_for(seq, j, i, anchor)?)
}

/// The raw Hermite minor `D_j` of the degree-j Jensen polynomial on the
/// anchored window. Requires the window's last term to be nonzero.
pub fn turan_hankel_minor(seq: &Sequence, j: usize, i: usize, anchor: AnchorConvention) -> Result<Rational> {
    let w = window_for(seq, j, i, anchor)?;
    let row = binomial_row(j);
    let f = Polynomial::new(w.iter().zip(row).map(|(g, c)| g * Rational::from_integer(c)).collect());
    if f.degree() != Some(j) {
        return Err(Error::InvalidParameter(format!(
            "window of T_{j}({i}) has a vanishing last term"
        )));
    }
    Ok(hankel_minors(&f)?.pop().expect("j >= 1 minors"))
}

/// `T_j^{(k)}` as a sequence over original indices.
#[derive(Debug, Clone, PartialEq)]
pub struct IteratedSequence {
    pub values: Sequence,
    pub j: usize,
    pub k: usize,
    pub anchor: AnchorConvention,
}

impl IteratedSequence {
    pub fn get(&self, i: usize) -> Result<&Rational> {
        self.values.get(i)
    }

    pub fn domain(&self) -> (usize, usize) {
        (self.values.first_index(), self.values.last_index())
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# turan j={} k={} anchor={}\nindex,value\n",
            self.j, self.k, self.anchor
        );
        for (n, v) in self.values.terms().iter().enumerate() {
            out.push_str(&format!("{},{}\n", self.values.offset() + n, format_rational(v)));
        }
        out
    }
}

/// One application of `T_j` to every index with a complete window.
pub fn turan_apply(seq: &Sequence, j: usize, anchor: AnchorConvention) -> Result<Sequence> {
    if j == 0 {
        return Err(Error::InvalidParameter("Turán order must be at least 1".into()));
    }
    if seq.len() <= j {
        return Err(Error::EmptyDomain);
    }
    let count = seq.len() - j;
    let terms: Vec<Rational> = match seq.integers() {
        Some(ints) => (0..count)
            .into_par_iter()
            .map(|s| turan_form_int(&ints[s..=s + j]).map(Rational::from_integer))
            .collect::<Result<_>>()?,
        None => (0..count)
            .into_par_iter()
            .map(|s| turan_form(&seq.terms()[s..=s + j]))
            .collect::<Result<_>>()?,
    };
    let op = format!("turan(j={j},anchor={anchor})");
    Sequence::new(
        terms,
        seq.offset() + anchor.reach_before(j),
        Provenance::Operator {
            op,
            source: Box::new(seq.provenance().clone()),
        },
    )
}

pub fn turan_iterate(seq: &Sequence, j: usize, k: usize, anchor: AnchorConvention) -> Result<IteratedSequence> {
    if k == 0 {
        return Err(Error::InvalidParameter("iteration count must be at least 1".into()));
    }
    let mut cur = turan_apply(seq, j, anchor)?;
    for _ in 1..k {
        cur = turan_apply(&cur, j, anchor)?;
    }
    Ok(IteratedSequence {
        values: cur,
        j,
        k,
        anchor,
    })
}
