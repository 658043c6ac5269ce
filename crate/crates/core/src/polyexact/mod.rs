//! Dense exact polynomials over the rationals and truncated power series.

pub mod intpoly;
mod series;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{common_denominator, format_rational, parse_rational, Rational};

pub use series::{series_derivative, series_product, taylor_window, TruncatedSeries};

/// Coefficients lowest degree first, never with a trailing zero. The zero
/// polynomial has no coefficients and `degree() == None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(x - r)` scaled by `lead`.
    pub fn linear_factor(root: &Rational, lead: &Rational) -> Self {
        Self::new(vec![-(root * lead), lead.clone()])
    }

    /// Product of `(x - r)` over `roots`, times `lead`.
    pub fn from_roots(roots: &[Rational], lead: &Rational) -> Self {
        roots
            .iter()
            .fold(Polynomial::constant(lead.clone()), |acc, r| {
                &acc * &Polynomial::new(vec![-r.clone(), Rational::one()])
            })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, m: usize) -> Self {
        (0..m).fold(self.clone(), |p, _| p.derivative())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `x^d · f(1/x)`; requires `d >= degree`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut out = vec![Rational::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[d - k] = c.clone();
        }
        Self::new(out)
    }

    /// Integer polynomial with the same roots: denominators cleared, content
    /// removed, leading coefficient positive.
    pub fn primitive_integer(&self) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let den = common_denominator(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        Ok(intpoly::primitive(&ints))
    }

    /// Same-root representative with integer coprime coefficients and positive lead.
    pub fn primitive(&self) -> Result<Self> {
        Ok(Self::from_integers(&self.primitive_integer()?))
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lead;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Greatest common divisor, primitive with positive lead. `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Polynomial::zero(),
            (true, false) => other.primitive().expect("nonzero"),
            (false, true) => self.primitive().expect("nonzero"),
            (false, false) => {
                let a = self.primitive_integer().expect("nonzero");
                let b = other.primitive_integer().expect("nonzero");
                Polynomial::from_integers(&intpoly::gcd(&a, &b))
            }
        }
    }

    /// `f / gcd(f, f')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) || g.is_zero() {
            return self.primitive();
        }
        let (q, r) = self.div_rem(&g)?;
        if !r.is_zero() {
            return Err(Error::Integrity("gcd does not divide polynomial".into()));
        }
        q.primitive()
    }

    /// Parses the CLI text form `c0 c1 c2 ...`.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let coeffs = text
            .split_whitespace()
            .map(parse_rational)
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn leading_is_negative(&self) -> bool {
        self.leading().is_some_and(|c| c.is_negative())
    }
}

/// CLI text form: exact coefficients lowest degree first; `0` for zero.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
