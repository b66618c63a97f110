//! Straightening of Bernstein and Schur-Q vertex operator products on code
//! words.
//!
//! A composition `μ` is encoded as a word over `{R, L, U}` tracing the edge of
//! its diagram ([`codes`]). Rewriting that word until no `L` is left turns
//! `B_μ` into `±B_λ` or zero ([`bernstein`]), and the same machinery on plain
//! and shifted codes handles `Y_{−μ}` ([`qvertex`], [`shifted`]). The
//! [`oracle`] module computes the same answers without codes, and [`verify`]
//! sweeps small index sets checking that everything agrees.
//!
//! ```
//! use codecalc_core::{bernstein, index::parse_index};
//!
//! let mu = parse_index("1,3,1,6,2").unwrap();
//! assert_eq!(bernstein::straighten_b(&mu).unwrap().to_string(), "+1 * (3,3,3,2,2)");
//! ```

pub mod bernstein;
pub mod codes;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod index;
pub mod oracle;
pub mod qvertex;
pub mod shifted;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use index::{Composition, Partition, Sign, Signed, SignedPartition, SignedStrict, StrictPartition};
