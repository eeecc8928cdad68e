//! Ribbon tableaux through edge sequences, with the shape data and growth
//! diagrams built on them.
//!
//! The modules build on one another:
//!
//! * [`partition`]: partitions and their edge sequences.
//! * [`ribbon`]: `r`-ribbons, cores, quotients and ribbon strips.
//! * [`shape_data`]: local bijections `κ ↔ (a, λ)` for fixed `(µ, ν)`.
//! * [`schensted`]: `r`-correspondences and Schensted growth diagrams.
//! * [`knuth_growth`]: growth diagrams for matrices over `ℕʳ`.
//! * [`enumeration`]: generating polynomials and truncated identity checks.
//! * [`audit`]: exhaustive round-trip and equation suites over a box of shapes.

pub mod audit;
pub mod enumeration;
pub mod error;
pub mod knuth_growth;
pub mod partition;
pub mod ribbon;
pub mod schensted;
pub mod shape_data;

pub use error::{Error, Result};

/// The chapters of the guide in `book/`, compiled so that their examples run
/// as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/edges.md")]
    mod edges {}
    #[doc = include_str!("../../../book/src/ribbons.md")]
    mod ribbons {}
    #[doc = include_str!("../../../book/src/shape-data.md")]
    mod shape_data {}
    #[doc = include_str!("../../../book/src/growth.md")]
    mod growth {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
