use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::number::Rational;
use crate::polyexact::Polynomial;

/// Power sums `S_0..S_{m_max}` of the roots (with multiplicity) from the
/// Newton identities.
pub fn newton_power_sums(f: &Polynomial, m_max: usize) -> Result<Vec<Rational>> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let b = f.coeffs();
    let lead = &b[d];
    let mut s: Vec<Rational> = Vec::with_capacity(m_max + 1);
    s.push(Rational::from_integer(d.into()));
    for m in 1..=m_max {
        let mut acc = Rational::zero();
        for i in 1..=m.min(d) {
            if i < m {
                acc += &b[d - i] * &s[m - i];
            }
        }
        if m <= d {
            acc += &b[d - m] * Rational::from_integer(m.into());
        }
        s.push(-acc / lead);
    }
    Ok(s)
}

/// Scaled power sums `s_m = b_d^m · S_m` of an integer polynomial; stays in
/// the integers because the recurrence never divides.
pub fn scaled_power_sums(b: &[BigInt], m_max: usize) -> Vec<BigInt> {
    let d = b.len() - 1;
    let lead = &b[d];
    let mut lead_pow = vec![BigInt::one()];
    for i in 1..=m_max.max(1) {
        let next = &lead_pow[i - 1] * lead;
        lead_pow.push(next);
    }
    let mut s: Vec<BigInt> = Vec::with_capacity(m_max + 1);
    s.push(BigInt::from(d));
    for m in 1..=m_max {
        let mut acc = BigInt::zero();
        for i in 1..=m.min(d) {
            if i < m {
                acc += &b[d - i] * &lead_pow[i - 1] * &s[m - i];
            }
        }
        if m <= d {
            acc += &b[d - m] * &lead_pow[m - 1] * BigInt::from(m);
        }
        s.push(-acc);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::int;

    #[test]
    fn examples() {
        let f = Polynomial::from_i64(&[2, -3, 1]);
        assert_eq!(newton_power_sums(&f, 2).unwrap(), vec![int(2), int(3), int(5)]);
        let g = Polynomial::from_i64(&[1, 0, 1]);
        assert_eq!(newton_power_sums(&g, 2).unwrap(), vec![int(2), int(0), int(-2)]);
        let h = Polynomial::from_i64(&[-1, 3, -3, 1]);
        assert_eq!(newton_power_sums(&h, 2).unwrap(), vec![int(3), int(3), int(3)]);
        assert!(newton_power_sums(&Polynomial::zero(), 2).is_err());
    }

    #[test]
    fn scaled_matches_rational() {
        let coeffs = [3i64, -7, 2, 5];
        let b: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let s = scaled_power_sums(&b, 6);
        let r = newton_power_sums(&Polynomial::from_i64(&coeffs), 6).unwrap();
        for (m, (si, ri)) in s.iter().zip(&r).enumerate() {
            let lead_m = Rational::from_integer(num_traits::pow(BigInt::from(5), m));
            assert_eq!(Rational::from_integer(si.clone()), ri * lead_m);
        }
    }
}
