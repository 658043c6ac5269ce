//! Exact rational helpers shared by every module.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// Renders `a` for integers and `a/b` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses a decimal integer or a fraction `a/b`.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = n.parse().map_err(|_| format!("invalid number `{s}`"))?;
    match d {
        None => Ok(Rational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d.parse().map_err(|_| format!("invalid number `{s}`"))?;
            if denom.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

pub fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

pub fn sign_int(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn pascal() -> &'static RwLock<Vec<Vec<BigInt>>> {
    static PASCAL: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();
    PASCAL.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

/// Row `n` of Pascal's triangle, extended and cached on demand.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    {
        let rows = pascal().read().expect("pascal cache poisoned");
        if let Some(row) = rows.get(n) {
            return row.clone();
        }
    }
    let mut rows = pascal().write().expect("pascal cache poisoned");
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 present");
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(BigInt::one());
        for w in prev.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        rows.push(next);
    }
    rows[n].clone()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial_row(n)[k].clone()
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Exact integer division; a nonzero remainder is an integrity failure.
pub fn exact_div(num: &BigInt, den: &BigInt, context: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Integrity(format!("inexact division in {context}")));
    }
    Ok(q)
}
