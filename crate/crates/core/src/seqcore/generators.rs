use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Provenance, Sequence};
use crate::error::{Error, Result};
use crate::number::{binomial, parse_rational, Rational};

pub type BuiltinParams = BTreeMap<String, String>;

/// p(0..=n_max) by Euler's pentagonal-number recurrence.
pub fn partition_sequence(n_max: usize) -> Sequence {
    let mut p: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    p.push(BigInt::one());
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let mut term = p[n - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
            k += 1;
        }
        p.push(acc);
    }
    Sequence::from_integers(p, 0, Provenance::Partition).expect("nonempty")
}

/// Sum of the squares of the divisors of `j`.
pub fn sigma2(j: u64) -> u128 {
    let mut total = 0u128;
    let mut d = 1u64;
    while d * d <= j {
        if j.is_multiple_of(d) {
            total += (d as u128) * (d as u128);
            let e = j / d;
            if e != d {
                total += (e as u128) * (e as u128);
            }
        }
        d += 1;
    }
    total
}

/// pp(0..=n_max) from n·pp(n) = Σ_{j=1}^{n} σ₂(j)·pp(n−j).
pub fn plane_partition_sequence(n_max: usize) -> Result<Sequence> {
    let sig: Vec<BigInt> = (0..=n_max as u64)
        .map(|j| if j == 0 { BigInt::zero() } else { BigInt::from(sigma2(j)) })
        .collect();
    let mut pp: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    pp.push(BigInt::one());
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for j in 1..=n {
            acc += &sig[j] * &pp[n - j];
        }
        let (q, r) = acc.div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return Err(Error::Integrity(format!(
                "plane partition recurrence not divisible by {n}"
            )));
        }
        pp.push(q);
    }
    Sequence::from_integers(pp, 0, Provenance::PlanePartition)
}

/// Splits `name(arg)` or `name(key=value,...)` into a name and parameter map.
/// A bare positional argument is stored under the builtin's default key.
pub fn parse_builtin(spec: &str) -> Result<(String, BuiltinParams)> {
    let spec = spec.trim();
    let Some(open) = spec.find('(') else {
        return Ok((spec.to_string(), BuiltinParams::new()));
    };
    if !spec.ends_with(')') {
        return Err(Error::InvalidParameter(format!("unbalanced parentheses in `{spec}`")));
    }
    let name = spec[..open].trim().to_string();
    let inner = &spec[open + 1..spec.len() - 1];
    let mut params = BuiltinParams::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('=') {
            Some((k, v)) => {
                params.insert(k.trim().to_string(), v.trim().to_string());
            }
            None => {
                let key = match name.as_str() {
                    "binomial_row" => "m",
                    "geometric" => "r",
                    "constant" => "c",
                    other => {
                        return Err(Error::InvalidParameter(format!(
                            "`{other}` takes no positional argument"
                        )))
                    }
                };
                params.insert(key.to_string(), part.to_string());
            }
        }
    }
    Ok((name, params))
}

fn rational_param(params: &BuiltinParams, key: &str, default: Option<Rational>) -> Result<Rational> {
    match params.get(key) {
        Some(v) => parse_rational(v).map_err(Error::InvalidParameter),
        None => default.ok_or_else(|| Error::InvalidParameter(format!("missing parameter `{key}`"))),
    }
}

fn check_keys(name: &str, params: &BuiltinParams, allowed: &[&str]) -> Result<()> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::InvalidParameter(format!("`{name}` has no parameter `{k}`"))),
        None => Ok(()),
    }
}

/// Test-fixture sequences: `constant(c)`, `binomial_row(m)`, `geometric(r)`, `signflip`.
pub fn builtin_sequence(name: &str, params: &BuiltinParams, n_max: usize) -> Result<Sequence> {
    let terms: Vec<Rational> = match name {
        "constant" => {
            check_keys(name, params, &["c"])?;
            let c = rational_param(params, "c", Some(Rational::one()))?;
            vec![c; n_max + 1]
        }
        "binomial_row" => {
            check_keys(name, params, &["m"])?;
            let raw = params
                .get("m")
                .ok_or_else(|| Error::InvalidParameter("missing parameter `m`".into()))?;
            let m: usize = raw.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("binomial_row needs a nonnegative integer m, got `{raw}`"))
            })?;
            (0..=n_max)
                .map(|k| Rational::from_integer(binomial(m, k)))
                .collect()
        }
        "geometric" => {
            check_keys(name, params, &["r"])?;
            let r = rational_param(params, "r", None)?;
            let mut out = Vec::with_capacity(n_max + 1);
            let mut cur = Rational::one();
            for _ in 0..=n_max {
                out.push(cur.clone());
                cur *= &r;
            }
            out
        }
        "signflip" => {
            check_keys(name, params, &[])?;
            (0..=n_max)
                .map(|k| if k % 2 == 0 { Rational::one() } else { -Rational::one() })
                .collect()
        }
        other => return Err(Error::UnknownSequence(other.to_string())),
    };
    Sequence::new(
        terms,
        0,
        Provenance::Builtin {
            name: name.to_string(),
            params: params.clone(),
        },
    )
}
