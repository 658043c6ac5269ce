use num_traits::Zero;

use crate::error::{Error, Result};
use crate::number::{factorial, Rational};
use crate::seqcore::Sequence;

/// Taylor coefficients `a_0..a_M` with an explicit order `M`.
///
/// `base_shift` records which shifted function `φ^{(n)}` the coefficients
/// describe; operations carry it through unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
    base_shift: usize,
}

impl TruncatedSeries {
    /// `coeffs` must be nonempty; its length fixes the order.
    pub fn new(coeffs: Vec<Rational>, base_shift: usize) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InsufficientOrder {
                required: 0,
                available: 0,
            });
        }
        Ok(TruncatedSeries { coeffs, base_shift })
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            0,
        )
        .expect("nonempty")
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn base_shift(&self) -> usize {
        self.base_shift
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient `k`; reads past the order are refused.
    pub fn coeff(&self, k: usize) -> Result<&Rational> {
        self.coeffs.get(k).ok_or(Error::BeyondOrder {
            index: k,
            order: self.order(),
        })
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientOrder {
                required: order,
                available: self.order(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
            base_shift: self.base_shift,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            base_shift: self.base_shift,
        }
    }

    /// Sum truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let m = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=m).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
            base_shift: self.base_shift,
        }
    }

    /// Series value at `x` using all stored coefficients (a polynomial).
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

/// `a_k = γ_{n+k}/k!` for `0 <= k <= order`.
pub fn taylor_window(seq: &Sequence, n: usize, order: usize) -> Result<TruncatedSeries> {
    let terms = seq.window(n as i64, (n + order) as i64)?;
    let mut fact = Rational::from_integer(1.into());
    let mut coeffs = Vec::with_capacity(order + 1);
    for (k, t) in terms.iter().enumerate() {
        if k > 0 {
            fact *= Rational::from_integer(k.into());
        }
        coeffs.push(t / &fact);
    }
    debug_assert_eq!(fact.to_integer(), factorial(order));
    TruncatedSeries::new(coeffs, n)
}

/// Cauchy product; result order is the smaller operand order.
pub fn series_product(s: &TruncatedSeries, t: &TruncatedSeries) -> TruncatedSeries {
    let m = s.order().min(t.order());
    let coeffs = (0..=m)
        .map(|k| {
            (0..=k).fold(Rational::zero(), |acc, i| {
                acc + &s.coeffs[i] * &t.coeffs[k - i]
            })
        })
        .collect();
    TruncatedSeries {
        coeffs,
        base_shift: s.base_shift,
    }
}

/// Term-wise derivative; result order is one less.
pub fn series_derivative(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    if s.order() == 0 {
        return Err(Error::InsufficientOrder {
            required: 1,
            available: 0,
        });
    }
    let coeffs = s
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer(k.into()))
        .collect();
    Ok(TruncatedSeries {
        coeffs,
        base_shift: s.base_shift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{int, ratio};
    use crate::seqcore::{builtin_sequence, partition_sequence, BuiltinParams};

    #[test]
    fn windows() {
        let p = partition_sequence(10);
        let s = taylor_window(&p, 0, 3).unwrap();
        assert_eq!(s.coeffs(), &[int(1), int(1), int(1), ratio(1, 2)]);
        assert_eq!(taylor_window(&p, 5, 0).unwrap().coeffs(), &[int(7)]);
        let c = builtin_sequence("constant", &BuiltinParams::new(), 5).unwrap();
        assert_eq!(taylor_window(&c, 0, 2).unwrap().coeffs(), &[int(1), int(1), ratio(1, 2)]);
        assert!(taylor_window(&p, 8, 3).is_err());
    }

    #[test]
    fn algebra() {
        let e = TruncatedSeries::new(vec![int(1), int(1), ratio(1, 2)], 0).unwrap();
        assert_eq!(series_derivative(&e).unwrap().coeffs(), &[int(1), int(1)]);
        let a = TruncatedSeries::from_i64(&[1, 1]);
        let b = TruncatedSeries::from_i64(&[1, -1]);
        assert_eq!(series_product(&a, &b).coeffs(), &[int(1), int(0)]);
        let c = TruncatedSeries::from_i64(&[1, 2, 3, 4]);
        assert_eq!(series_product(&c, &e).order(), 2);
        assert!(series_derivative(&TruncatedSeries::from_i64(&[5])).is_err());
    }

    #[test]
    fn reads_past_order_fail() {
        let s = TruncatedSeries::from_i64(&[1, 2]);
        assert!(s.coeff(1).is_ok());
        assert!(matches!(s.coeff(2), Err(Error::BeyondOrder { .. })));
    }
}
