//! Finite topological spaces, generalized separation axioms and their reflections.
//!
//! `fintop` represents a topology on `{0..n-1}` (`n ≤ 62`) as a
//! [`FiniteSpace`] and provides:
//!
//! - constructions: subspaces, products, initial and quotient topologies,
//!   and the correspondence with preorders and partitions;
//! - every separation predicate of the `T_{i,j}` family, with witnesses
//!   ([`separation`]);
//! - the relations `R_0`, `R_1`, `R_2` and the reflections onto `T_0`, `T_1`,
//!   `T_2` and pre-Hausdorff spaces ([`reflect`]);
//! - exhaustive enumeration of topologies, exact Bell and partition numbers,
//!   a parallel separation census and homeomorphism classification.
//!
//! ```
//! use fintop::{separation, FiniteSpace};
//!
//! let s = FiniteSpace::sierpinski();
//! let profile = separation::axiom_profile(&s);
//! assert!(profile.t0 && profile.t12 && !profile.t02);
//! ```
//!
//! The guide in `book/` walks through the concepts; its code samples run as
//! doc-tests of this crate.

pub mod catalog;
pub mod census;
pub mod coarsening;
pub mod count;
pub mod document;
pub mod enumerate;
mod error;
pub mod homeo;
mod map;
mod partition;
mod pointset;
mod preorder;
pub mod reflect;
pub mod separation;
mod space;

pub use catalog::example_space;
pub use census::{census, census_with, CensusOptions, CensusTable};
pub use count::{bell_number, integer_partition_count, BigCount};
pub use document::{parse_space, space_to_json, SpaceDocument};
pub use enumerate::{enumerate_pre_hausdorff, enumerate_topologies};
pub use error::{Error, Result, TopologyViolation};
pub use homeo::{are_homeomorphic, count_pre_hausdorff_classes, pre_hausdorff_invariant};
pub use map::PointMap;
pub use partition::Partition;
pub use pointset::{PointSet, MAX_POINTS};
pub use preorder::Preorder;
pub use reflect::{pre_hausdorff_report, PreHausdorffReport};
pub use separation::{axiom_profile, PairSeparation, SeparationProfile};
pub use space::{is_closed_map, is_continuous, is_homeomorphism, FiniteSpace};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/spaces.md")]
    mod spaces {}
    #[doc = include_str!("../../../book/src/separation.md")]
    mod separation {}
    #[doc = include_str!("../../../book/src/pre-hausdorff.md")]
    mod pre_hausdorff {}
    #[doc = include_str!("../../../book/src/reflections.md")]
    mod reflections {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
