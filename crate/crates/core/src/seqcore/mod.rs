//! Exact integer/rational sequences indexed from an offset.
//!
//! Reads outside the stored range are errors: nothing downstream ever sees an
//! implicit zero.

mod cache;
mod generators;
mod io;

use std::fmt;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::number::Rational;

pub use cache::SequenceCache;
pub use generators::{
    builtin_sequence, parse_builtin, partition_sequence, plane_partition_sequence, sigma2,
    BuiltinParams,
};
pub use io::{load_sequence, parse_sequence_text, render_sequence_text, save_sequence};

/// Where a sequence came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Partition,
    PlanePartition,
    Builtin { name: String, params: BuiltinParams },
    File(PathBuf),
    /// Result of applying an operator (rendered description) to a source.
    Operator { op: String, source: Box<Provenance> },
    Literal,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Partition => write!(f, "partition"),
            Provenance::PlanePartition => write!(f, "planepartition"),
            Provenance::Builtin { name, params } => {
                write!(f, "builtin:{name}")?;
                if !params.is_empty() {
                    let inner: Vec<String> =
                        params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    write!(f, "({})", inner.join(","))?;
                }
                Ok(())
            }
            Provenance::File(p) => write!(f, "file:{}", p.display()),
            Provenance::Operator { op, source } => write!(f, "{op}<-{source}"),
            Provenance::Literal => write!(f, "literal"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sequence {
    terms: Vec<Rational>,
    offset: usize,
    provenance: Provenance,
    first_sign_change: Option<usize>,
    first_zero_after_positive: Option<usize>,
}

impl Sequence {
    /// Builds a sequence whose first stored term has index `offset`.
    pub fn new(terms: Vec<Rational>, offset: usize, provenance: Provenance) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let mut first_sign_change = None;
        let mut first_zero_after_positive = None;
        let mut last_sign = 0i8;
        let mut seen_positive = false;
        for (k, t) in terms.iter().enumerate() {
            let idx = offset + k;
            let s = crate::number::sign(t);
            if s == 0 {
                if seen_positive && first_zero_after_positive.is_none() {
                    first_zero_after_positive = Some(idx);
                }
                continue;
            }
            if s > 0 {
                seen_positive = true;
            }
            if last_sign != 0 && s != last_sign && first_sign_change.is_none() {
                first_sign_change = Some(idx);
            }
            last_sign = s;
        }
        Ok(Sequence {
            terms,
            offset,
            provenance,
            first_sign_change,
            first_zero_after_positive,
        })
    }

    pub fn from_integers(
        values: impl IntoIterator<Item = BigInt>,
        offset: usize,
        provenance: Provenance,
    ) -> Result<Self> {
        let terms = values.into_iter().map(Rational::from_integer).collect();
        Self::new(terms, offset, provenance)
    }

    /// Convenience constructor for small fixtures.
    pub fn from_i64(values: &[i64], offset: usize) -> Result<Self> {
        Self::from_integers(values.iter().map(|&v| BigInt::from(v)), offset, Provenance::Literal)
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first_index(&self) -> usize {
        self.offset
    }

    pub fn last_index(&self) -> usize {
        self.offset + self.terms.len() - 1
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn first_sign_change(&self) -> Option<usize> {
        self.first_sign_change
    }

    pub fn first_zero_after_positive(&self) -> Option<usize> {
        self.first_zero_after_positive
    }

    pub fn contains(&self, index: i64) -> bool {
        index >= self.offset as i64 && index <= self.last_index() as i64
    }

    pub fn get(&self, index: usize) -> Result<&Rational> {
        self.get_signed(index as i64)
    }

    /// Signed lookup; anchored windows may reach below zero.
    pub fn get_signed(&self, index: i64) -> Result<&Rational> {
        if !self.contains(index) {
            return Err(Error::OutOfRange {
                index,
                lo: self.offset as i64,
                hi: self.last_index() as i64,
            });
        }
        Ok(&self.terms[(index - self.offset as i64) as usize])
    }

    /// Terms with indices `lo..=hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Result<&[Rational]> {
        if lo > hi || !self.contains(lo) || !self.contains(hi) {
            return Err(Error::WindowOutOfRange {
                lo,
                hi,
                seq_lo: self.offset as i64,
                seq_hi: self.last_index() as i64,
            });
        }
        let a = (lo - self.offset as i64) as usize;
        let b = (hi - self.offset as i64) as usize;
        Ok(&self.terms[a..=b])
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|t| t.is_integer())
    }

    /// Terms as integers, if every term is one.
    pub fn integers(&self) -> Option<Vec<BigInt>> {
        self.terms
            .iter()
            .map(|t| t.is_integer().then(|| t.numer().clone()))
            .collect()
    }

    /// Prefix ending at index `n_max` (inclusive), keeping provenance.
    pub fn truncated(&self, n_max: usize) -> Result<Sequence> {
        if n_max < self.offset {
            return Err(Error::EmptyDomain);
        }
        if n_max > self.last_index() {
            return Err(Error::OutOfRange {
                index: n_max as i64,
                lo: self.offset as i64,
                hi: self.last_index() as i64,
            });
        }
        let keep = n_max - self.offset + 1;
        Sequence::new(
            self.terms[..keep].to_vec(),
            self.offset,
            self.provenance.clone(),
        )
    }

    pub fn all_positive(&self) -> bool {
        self.terms.iter().all(|t| t.is_positive())
    }

    pub fn has_zero(&self) -> bool {
        self.terms.iter().any(|t| t.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::int;

    #[test]
    fn out_of_range_reads_are_errors() {
        let s = Sequence::from_i64(&[1, 2, 3], 5).unwrap();
        assert_eq!(s.get(5).unwrap(), &int(1));
        assert_eq!(s.get(7).unwrap(), &int(3));
        assert!(matches!(s.get(4), Err(Error::OutOfRange { .. })));
        assert!(matches!(s.get(8), Err(Error::OutOfRange { .. })));
        assert!(s.get_signed(-1).is_err());
        assert!(s.window(6, 8).is_err());
        assert_eq!(s.window(6, 7).unwrap().len(), 2);
    }

    #[test]
    fn sign_metadata() {
        let s = Sequence::from_i64(&[1, 0, 2, -1, 3], 0).unwrap();
        assert_eq!(s.first_zero_after_positive(), Some(1));
        assert_eq!(s.first_sign_change(), Some(3));
        let t = Sequence::from_i64(&[0, 1, 2], 0).unwrap();
        assert_eq!(t.first_zero_after_positive(), None);
        assert_eq!(t.first_sign_change(), None);
    }

    #[test]
    fn empty_sequences_are_rejected() {
        assert!(Sequence::new(vec![], 0, Provenance::Literal).is_err());
    }

    #[test]
    fn provenance_rendering() {
        let mut params = BuiltinParams::new();
        params.insert("m".into(), "6".into());
        let p = Provenance::Builtin {
            name: "binomial_row".into(),
            params,
        };
        assert_eq!(p.to_string(), "builtin:binomial_row(m=6)");
        let op = Provenance::Operator {
            op: "turan(j=2)".into(),
            source: Box::new(Provenance::Partition),
        };
        assert_eq!(op.to_string(), "turan(j=2)<-partition");
    }
}
