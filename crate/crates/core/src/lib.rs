//! Exact-arithmetic toolkit for real-rootedness of polynomials built from
//! integer sequences.
//!
//! The crate is organized bottom-up:
//!
//! - [`seqcore`]: exact sequences (partition numbers, plane partitions,
//!   fixtures, files) and an on-disk cache.
//! - [`polyexact`]: dense rational polynomials and truncated power series.
//! - [`rootcert`]: Sturm and Hermite/Hankel certificates of real-rootedness.
//! - [`jensen`]: Jensen and Appell polynomials and per-shift evidence.
//! - [`turan`]: order-j Turán operators and their iterates.
//! - [`laguerre`]: the Laguerre operators `L_k` and their iterates.
//! - [`multseq`]: coefficient multipliers, Schur–Szegő composition and
//!   randomized multiplier-sequence witnesses.
//! - [`thresholds`]: minimal-onset searches and table reproduction.
//! - [`checks`]: property suites shared by the CLI `check` command and tests.

pub mod checks;
pub mod error;
pub mod jensen;
pub mod laguerre;
pub mod multseq;
pub mod number;
pub mod oracle;
pub mod polyexact;
pub mod rootcert;
pub mod seqcore;
pub mod thresholds;
pub mod turan;

pub use error::{Error, Result};
pub use number::Rational;
pub use polyexact::{Polynomial, TruncatedSeries};
pub use rootcert::{CertMethod, RootCertificate, SignProfile, SignProfileKind};
pub use seqcore::{Provenance, Sequence};
