//! Ways in which pre-Hausdorff spaces behave unlike Hausdorff ones.
//!
//! A compact space mapped onto a Hausdorff space by a continuous bijection is
//! homeomorphic to it. Replacing "Hausdorff" with "pre-Hausdorff" breaks this:
//! the identity from any non-indiscrete space onto the indiscrete topology on
//! the same points is a continuous bijection into a pre-Hausdorff space, yet
//! not a closed map and not a homeomorphism.

use crate::map::PointMap;
use crate::pointset::PointSet;
use crate::separation::is_pre_hausdorff;
use crate::space::{is_closed_map, is_continuous, FiniteSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoarseningWitness {
    pub continuous: bool,
    pub bijective: bool,
    pub closed_map: bool,
    pub inverse_continuous: bool,
    pub codomain_pre_hausdorff: bool,
}

impl CoarseningWitness {
    /// Continuous bijection onto a pre-Hausdorff space that is not a homeomorphism.
    pub fn breaks_bijection_rule(&self) -> bool {
        self.continuous && self.bijective && self.codomain_pre_hausdorff && !self.inverse_continuous
    }
}

/// Examines the identity from `s` onto the indiscrete space on its points.
pub fn identity_onto_indiscrete(s: &FiniteSpace) -> CoarseningWitness {
    let coarse = FiniteSpace::indiscrete(s.n());
    let id = PointMap::identity(s.n());
    CoarseningWitness {
        continuous: is_continuous(&id, s, &coarse).expect("same carrier"),
        bijective: id.is_bijective(),
        closed_map: is_closed_map(&id, s, &coarse).expect("same carrier"),
        inverse_continuous: is_continuous(&id, &coarse, s).expect("same carrier"),
        codomain_pre_hausdorff: is_pre_hausdorff(&coarse),
    }
}

/// True iff every subset of `s` is closed, which Hausdorff finite spaces satisfy.
pub fn all_finite_subsets_closed(s: &FiniteSpace) -> bool {
    (0..s.n()).all(|x| s.is_closed(PointSet::singleton(x)))
}

/// A nonempty proper subset of `s` that is not closed, if one exists.
pub fn non_closed_subset(s: &FiniteSpace) -> Option<PointSet> {
    (0..s.n())
        .map(PointSet::singleton)
        .find(|&a| !s.is_closed(a))
}
