//! Pattern avoidance in signed permutations (types B and D).
//!
//! Counts of signed permutations avoiding 1234 or 2143, refined by the number
//! `j` of positive indices with positive images, computed three independent
//! ways: exhaustive search ([`oracle`]), a generating tree with succession
//! rules ([`gentree`]), and generating functions over lattice paths ([`gf`]).

pub mod enumerate;
pub mod error;
pub mod gentree;
pub mod gf;
pub mod oracle;
pub mod pattern;
pub mod perm;

pub use enumerate::{enumerate_bn, enumerate_dn};
pub use error::{Error, Result};
pub use gentree::{TreeLabel, TreePattern};
pub use gf::{Signature, TruncatedSeries};
pub use oracle::{CountTable, Method};
pub use pattern::Pattern;
pub use perm::{Occurrence, SignedPermutation};
