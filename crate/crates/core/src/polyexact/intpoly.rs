//! Integer polynomials (`Vec<BigInt>`, lowest degree first) for
//! fraction-free remainder sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return p;
    }
    let mut g = content(&p);
    if p.last().expect("nonempty").is_negative() {
        g = -g;
    }
    if g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b).expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else { return r };
    if da < db {
        return r;
    }
    let lb = &b[db];
    let delta = da - db + 1;
    let mut steps = 0;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        r = trim(r);
        steps += 1;
    }
    // pad to the full multiplier so the sign convention is uniform
    if steps < delta {
        let extra = num_traits::pow(lb.clone(), delta - steps);
        for c in r.iter_mut() {
            *c *= &extra;
        }
    }
    r
}

/// Primitive polynomial remainder sequence gcd; primitive, positive lead.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return a;
    }
    loop {
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return primitive(&b);
        }
        a = b;
        b = primitive(&r);
    }
}

pub fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect(),
    )
}

/// Sign of `p(x)` for the rational `x = num/den`, `den > 0`, evaluated as the
/// homogenized integer `Σ c_k num^k den^(d-k)` (positive scaling).
pub fn sign_at(p: &[BigInt], num: &BigInt, den: &BigInt) -> i8 {
    let Some(d) = degree(p) else { return 0 };
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    for k in (0..=d).rev() {
        acc = acc * num + &p[k] * &den_pow;
        den_pow *= den;
    }
    crate::number::sign_int(&acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn prem_and_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = v(&[-2, 1, 1]);
        let b = v(&[3, -4, 1]);
        assert_eq!(gcd(&a, &b), v(&[-1, 1]));
        assert_eq!(gcd(&a, &v(&[5])), v(&[1]));
        assert_eq!(primitive(&v(&[4, -6, -2])), v(&[-2, 3, 1]));
        let r = pseudo_rem(&v(&[1, 0, 0, 1]), &v(&[1, 2]));
        // 8·(x^3+1) mod (2x+1) = 8·(7/8) = 7
        assert_eq!(r, v(&[7]));
    }

    #[test]
    fn sign_evaluation() {
        // x^2 - 2 at 3/2 -> 1/4 > 0, at 1 -> -1
        let p = v(&[-2, 0, 1]);
        assert_eq!(sign_at(&p, &BigInt::from(3), &BigInt::from(2)), 1);
        assert_eq!(sign_at(&p, &BigInt::from(1), &BigInt::from(1)), -1);
        assert_eq!(sign_at(&v(&[0, 1]), &BigInt::from(0), &BigInt::from(7)), 0);
    }
}
