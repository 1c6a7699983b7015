//! Two-toned tilings, restricted compositions and the identities between
//! their counting sequences.

pub mod identities;
pub mod sequences;
pub mod series;
pub mod stats;
pub mod tables;
pub mod tiling;

pub use sequences::{a, a_k, a_s, a_s_k, fibonacci_k, neg_fibonacci_k, pell, NonIntegral};
pub use series::{expand, verify_gf, Poly, RationalGF, SeriesError, TruncatedSeries};
pub use tiling::{
    Composition, Oracle, OracleError, PartConstraint, Tile, TilingFilter, TwoTonedTiling,
};

/// Exact counts.
pub type Count = num_bigint::BigInt;
