use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::number::{sign_int, Rational};
use crate::polyexact::{intpoly, Polynomial};

/// A rational number or one of the two infinities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtRational {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtRational {
    fn rank(&self) -> u8 {
        match self {
            ExtRational::NegInf => 0,
            ExtRational::Finite(_) => 1,
            ExtRational::PosInf => 2,
        }
    }

    fn less_than(&self, other: &ExtRational) -> bool {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(q: Rational) -> Self {
        ExtRational::Finite(q)
    }
}

/// Sturm chain of an integer polynomial using sign-corrected pseudo-remainders
/// with content stripping: each member is a positive multiple of the
/// classical `-rem(p_{i-1}, p_i)`.
pub fn sturm_chain(p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let p0 = intpoly::primitive(p);
    let p1 = intpoly::primitive(&intpoly::derivative(&p0));
    let mut chain = vec![p0];
    if p1.is_empty() {
        return chain;
    }
    chain.push(p1);
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        let r = intpoly::pseudo_rem(a, b);
        if r.is_empty() {
            break;
        }
        let delta = a.len() - b.len() + 1;
        let lead_neg = b.last().expect("nonzero").is_negative();
        let multiplier_negative = lead_neg && delta % 2 == 1;
        // next = -rem, and prem = lc^delta * rem
        let flip = !multiplier_negative;
        let mut g = intpoly::content(&r);
        if flip {
            g = -g;
        }
        chain.push(r.into_iter().map(|c| c / &g).collect());
    }
    chain
}

fn sign_at(p: &[BigInt], x: &ExtRational) -> i8 {
    let d = p.len() - 1;
    let lead = sign_int(&p[d]);
    match x {
        ExtRational::PosInf => lead,
        ExtRational::NegInf => {
            if d.is_multiple_of(2) {
                lead
            } else {
                -lead
            }
        }
        ExtRational::Finite(q) => intpoly::sign_at(p, q.numer(), q.denom()),
    }
}

fn variations(chain: &[Vec<BigInt>], x: &ExtRational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign_at(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `f` in `(a, b]`.
pub fn sturm_count(f: &Polynomial, a: &ExtRational, b: &ExtRational) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !a.less_than(b) {
        return Err(Error::EmptyInterval);
    }
    let sqf = f.squarefree_part()?;
    let ints = sqf.primitive_integer()?;
    if ints.len() == 1 {
        return Ok(0);
    }
    let chain = sturm_chain(&ints);
    let va = variations(&chain, a);
    let vb = variations(&chain, b);
    va.checked_sub(vb)
        .ok_or_else(|| Error::Integrity("sturm variations increased across interval".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{int, ratio};

    fn all() -> (ExtRational, ExtRational) {
        (ExtRational::NegInf, ExtRational::PosInf)
    }

    #[test]
    fn examples() {
        let (lo, hi) = all();
        assert_eq!(sturm_count(&Polynomial::from_i64(&[0, -1, 0, 1]), &lo, &hi).unwrap(), 3);
        assert_eq!(sturm_count(&Polynomial::from_i64(&[1, 0, 1]), &lo, &hi).unwrap(), 0);
        let f = Polynomial::from_roots(&[int(1), int(2), int(3)], &int(1));
        let a = ExtRational::Finite(ratio(3, 2));
        let b = ExtRational::Finite(ratio(7, 2));
        assert_eq!(sturm_count(&f, &a, &b).unwrap(), 2);
    }

    #[test]
    fn half_open_interval_and_multiplicity() {
        let f = Polynomial::from_roots(&[int(1), int(1), int(2)], &int(-3));
        let (lo, hi) = all();
        assert_eq!(sturm_count(&f, &lo, &hi).unwrap(), 2);
        // (1, 2] contains 2 but not 1
        assert_eq!(sturm_count(&f, &int(1).into(), &int(2).into()).unwrap(), 1);
        assert_eq!(sturm_count(&f, &int(0).into(), &int(1).into()).unwrap(), 1);
    }

    #[test]
    fn errors() {
        let f = Polynomial::from_i64(&[1, 1]);
        assert!(matches!(
            sturm_count(&f, &int(2).into(), &int(2).into()),
            Err(Error::EmptyInterval)
        ));
        assert!(sturm_count(&f, &ExtRational::PosInf, &ExtRational::NegInf).is_err());
        let (lo, hi) = all();
        assert!(matches!(sturm_count(&Polynomial::zero(), &lo, &hi), Err(Error::ZeroPolynomial)));
        assert_eq!(sturm_count(&Polynomial::from_i64(&[4]), &lo, &hi).unwrap(), 0);
    }
}
