//! Separation predicates: the classical `T0`, `T1`, `T2`, the mixed axioms
//! `T_{i,j}` ("every pair with a `T_i` separation also has a `T_j`
//! separation"), and the regularity, normality, dimension, Boolean-negation
//! and sobriety tests used to characterize pre-Hausdorff spaces.
//!
//! A pair `x, y` is
//! - `T0`-separated when some open set contains exactly one of them,
//! - `T1`-separated when each has an open set missing the other,
//! - `T2`-separated when they lie in disjoint open sets.
//!
//! Regularity and normality are the variants without closed points.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

/// Witnesses of the separations available to one pair of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSeparation {
    /// An open set containing exactly one of the two points.
    pub t0: Option<PointSet>,
    /// `(U, V)` with `x ∈ U ∌ y` and `y ∈ V ∌ x`.
    pub t1: Option<(PointSet, PointSet)>,
    /// Disjoint `(U, V)` with `x ∈ U` and `y ∈ V`.
    pub t2: Option<(PointSet, PointSet)>,
}

impl PairSeparation {
    /// Checks that every present witness separates `x` and `y` in `s` as claimed.
    pub fn verify(&self, s: &FiniteSpace, x: usize, y: usize) -> bool {
        let t0 = self
            .t0
            .is_none_or(|u| s.is_open(u) && u.contains(x) != u.contains(y));
        let t1 = self.t1.is_none_or(|(u, v)| {
            s.is_open(u)
                && s.is_open(v)
                && u.contains(x)
                && !u.contains(y)
                && v.contains(y)
                && !v.contains(x)
        });
        let t2 = self.t2.is_none_or(|(u, v)| {
            s.is_open(u) && s.is_open(v) && u.contains(x) && v.contains(y) && u.is_disjoint(v)
        });
        t0 && t1 && t2
    }
}

/// Separation witnesses for the pair `(x, y)`.
///
/// Witnesses are the first qualifying opens in canonical order; pairs are
/// compared lexicographically.
pub fn pair_separation(s: &FiniteSpace, x: usize, y: usize) -> Result<PairSeparation> {
    let n = s.n();
    for p in [x, y] {
        if p >= n {
            return Err(Error::PointOutOfRange { point: p, n });
        }
    }
    if x == y {
        return Err(Error::SamePoint(x));
    }
    let opens = s.opens();
    let t0 = opens
        .iter()
        .copied()
        .find(|u| u.contains(x) != u.contains(y));
    let only_x = opens
        .iter()
        .copied()
        .find(|u| u.contains(x) && !u.contains(y));
    let only_y = opens
        .iter()
        .copied()
        .find(|u| u.contains(y) && !u.contains(x));
    let t1 = only_x.zip(only_y);
    let t2 = opens.iter().filter(|u| u.contains(x)).find_map(|&u| {
        opens
            .iter()
            .find(|v| v.contains(y) && v.is_disjoint(u))
            .map(|&v| (u, v))
    });
    Ok(PairSeparation { t0, t1, t2 })
}

#[inline]
fn pair_t0(s: &FiniteSpace, x: usize, y: usize) -> bool {
    s.neighbourhood(x) != s.neighbourhood(y)
}

#[inline]
fn pair_t1(s: &FiniteSpace, x: usize, y: usize) -> bool {
    !s.neighbourhood(x).contains(y) && !s.neighbourhood(y).contains(x)
}

#[inline]
fn pair_t2(s: &FiniteSpace, x: usize, y: usize) -> bool {
    s.neighbourhood(x).is_disjoint(s.neighbourhood(y))
}

fn all_pairs(s: &FiniteSpace, pred: impl Fn(usize, usize) -> bool) -> bool {
    (0..s.n()).all(|x| (x + 1..s.n()).all(|y| pred(x, y)))
}

pub fn is_t0(s: &FiniteSpace) -> bool {
    all_pairs(s, |x, y| pair_t0(s, x, y))
}

pub fn is_t1(s: &FiniteSpace) -> bool {
    all_pairs(s, |x, y| pair_t1(s, x, y))
}

pub fn is_t2(s: &FiniteSpace) -> bool {
    all_pairs(s, |x, y| pair_t2(s, x, y))
}

/// `T_{0,1}`, also known as `R0`.
pub fn is_t01(s: &FiniteSpace) -> bool {
    all_pairs(s, |x, y| !pair_t0(s, x, y) || pair_t1(s, x, y))
}

/// `T_{0,2}`: pre-Hausdorff.
pub fn is_pre_hausdorff(s: &FiniteSpace) -> bool {
    first_pre_hausdorff_violation(s).is_none()
}

/// First pair (in lexicographic order) that is `T0`- but not `T2`-separated.
pub fn first_pre_hausdorff_violation(s: &FiniteSpace) -> Option<(usize, usize)> {
    (0..s.n())
        .flat_map(|x| (x + 1..s.n()).map(move |y| (x, y)))
        .find(|&(x, y)| pair_t0(s, x, y) && !pair_t2(s, x, y))
}

pub fn is_t12(s: &FiniteSpace) -> bool {
    all_pairs(s, |x, y| !pair_t1(s, x, y) || pair_t2(s, x, y))
}

/// Points and closed sets not containing them have disjoint neighbourhoods.
///
/// A closed set missing `x` cannot meet the minimal neighbourhood `U_x`, so the
/// largest one is the complement of `U_x`. Since `minimal_open` is monotone,
/// checking that single closed set per point decides the whole condition.
pub fn is_regular(s: &FiniteSpace) -> bool {
    let n = s.n();
    (0..n).all(|x| {
        let u = s.neighbourhood(x);
        u.is_disjoint(s.minimal_open(u.complement(n)))
    })
}

/// Disjoint closed sets have disjoint neighbourhoods.
///
/// A closed set disjoint from `A` is disjoint from `minimal_open(A)`, so the
/// largest candidate partner of `A` is the closed complement of
/// `minimal_open(A)`.
pub fn is_normal(s: &FiniteSpace) -> bool {
    let n = s.n();
    s.closed_sets().all(|a| {
        let ua = s.minimal_open(a);
        ua.is_disjoint(s.minimal_open(ua.complement(n)))
    })
}

/// The minimal basis consists of clopen sets. The minimal basis refines every
/// basis, so this decides whether any clopen basis exists.
pub fn is_zero_dimensional(s: &FiniteSpace) -> bool {
    s.neighbourhoods().iter().all(|&u| s.is_closed(u))
}

/// Pseudo-complement on the open-set lattice: `¬U = int(X \ U)`.
pub fn negation(s: &FiniteSpace, u: PointSet) -> PointSet {
    s.interior(u.complement(s.n()))
}

/// `¬¬U = U` for every open `U`.
pub fn double_negation_is_identity(s: &FiniteSpace) -> bool {
    s.opens().iter().all(|&u| negation(s, negation(s, u)) == u)
}

/// Nonempty closed sets that are not the union of their proper closed subsets,
/// canonically ordered.
pub fn irreducible_closed_sets(s: &FiniteSpace) -> Vec<PointSet> {
    let mut closed: Vec<PointSet> = s.closed_sets().collect();
    closed.sort_unstable_by_key(|c| c.canonical_key());
    closed
        .iter()
        .copied()
        .filter(|&c| {
            !c.is_empty()
                && closed
                    .iter()
                    .filter(|&&d| d != c && d.is_subset(c))
                    .fold(PointSet::EMPTY, |acc, &d| acc | d)
                    != c
        })
        .collect()
}

/// Points whose closure is exactly `c`.
pub fn generic_points(s: &FiniteSpace, c: PointSet) -> PointSet {
    c.iter()
        .filter(|&x| s.closure(PointSet::singleton(x)) == c)
        .collect()
}

/// Every irreducible closed set has exactly one generic point.
pub fn is_sober(s: &FiniteSpace) -> bool {
    irreducible_closed_sets(s)
        .into_iter()
        .all(|c| generic_points(s, c).len() == 1)
}

/// Nonempty, closed under complement and pairwise union.
pub fn is_borel_field(n: usize, family: &[PointSet]) -> bool {
    if family.is_empty() || family.iter().any(|f| !f.fits(n)) {
        return false;
    }
    let members: HashSet<PointSet> = family.iter().copied().collect();
    family.iter().all(|f| members.contains(&f.complement(n)))
        && family
            .iter()
            .all(|&a| family.iter().all(|&b| members.contains(&(a | b))))
}

/// Every separation predicate evaluated on one space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub t01: bool,
    pub t02: bool,
    pub t12: bool,
    pub regular: bool,
    pub normal: bool,
    pub zero_dim: bool,
    pub sober: bool,
}

impl SeparationProfile {
    pub const FIELDS: [&'static str; 10] = [
        "t0", "t1", "t2", "t01", "t02", "t12", "regular", "normal", "zero_dim", "sober",
    ];

    pub fn values(&self) -> [bool; 10] {
        [
            self.t0,
            self.t1,
            self.t2,
            self.t01,
            self.t02,
            self.t12,
            self.regular,
            self.normal,
            self.zero_dim,
            self.sober,
        ]
    }

    pub fn from_values(v: [bool; 10]) -> Self {
        SeparationProfile {
            t0: v[0],
            t1: v[1],
            t2: v[2],
            t01: v[3],
            t02: v[4],
            t12: v[5],
            regular: v[6],
            normal: v[7],
            zero_dim: v[8],
            sober: v[9],
        }
    }

    /// Fields read as a binary number, `t0` most significant.
    pub fn signature(&self) -> u16 {
        self.values()
            .iter()
            .fold(0u16, |acc, &b| (acc << 1) | u16::from(b))
    }

    pub fn from_signature(sig: u16) -> Self {
        let mut v = [false; 10];
        for (i, slot) in v.iter_mut().enumerate() {
            *slot = sig >> (9 - i) & 1 == 1;
        }
        SeparationProfile::from_values(v)
    }

    /// Looks a field up by its name (`t02` also answers to `preh`).
    pub fn get(&self, name: &str) -> Option<bool> {
        let name = if name == "preh" { "t02" } else { name };
        Self::FIELDS
            .iter()
            .position(|&f| f == name)
            .map(|i| self.values()[i])
    }
}

pub fn axiom_profile(s: &FiniteSpace) -> SeparationProfile {
    SeparationProfile {
        t0: is_t0(s),
        t1: is_t1(s),
        t2: is_t2(s),
        t01: is_t01(s),
        t02: is_pre_hausdorff(s),
        t12: is_t12(s),
        regular: is_regular(s),
        normal: is_normal(s),
        zero_dim: is_zero_dimensional(s),
        sober: is_sober(s),
    }
}

/// Whether `s` satisfies `T_i` for `i ∈ {0, 1, 2}`.
pub fn satisfies_ti(s: &FiniteSpace, i: u8) -> Result<bool> {
    match i {
        0 => Ok(is_t0(s)),
        1 => Ok(is_t1(s)),
        2 => Ok(is_t2(s)),
        _ => Err(Error::BadAxiomIndex(i)),
    }
}
