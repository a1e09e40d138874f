//! Truncated power series, path signatures and the generating functions
//! that count lattice paths by signature.

mod function;
mod path;
mod series;
mod signature;

pub use function::{count_via_theorem, count_via_theorem_bounded, f, GfSession, MemoKey};
pub use path::{enumerate_paths, for_each_path, path_counts, recorded, signature_of, LatticePath};
pub use series::TruncatedSeries;
pub use signature::{enumerate_signatures, Signature};
