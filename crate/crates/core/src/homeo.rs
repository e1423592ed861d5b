//! Homeomorphism classification.
//!
//! Finite pre-Hausdorff spaces are classified by the sizes of their minimal
//! basis blocks. General finite spaces fall back to a search for an
//! order isomorphism of the specialization preorders, which for finite spaces
//! is the same thing as a homeomorphism.

use std::collections::BTreeSet;

use crate::count::{integer_partition_count, BigCount};
use crate::enumerate::{enumerate_pre_hausdorff, MAX_TOPOLOGY_POINTS};
use crate::error::{Error, Result};
use crate::map::PointMap;
use crate::pointset::PointSet;
use crate::separation::{first_pre_hausdorff_violation, is_pre_hausdorff};
use crate::space::FiniteSpace;

/// Largest point count for the general search.
pub const MAX_SEARCH_POINTS: usize = 8;

/// Which decision procedure settled a homeomorphism query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecisionPath {
    /// Both spaces pre-Hausdorff: block-size multisets compared.
    Fast,
    /// Bijection search with invariant pruning.
    General,
    /// Point counts differ.
    Cardinality,
}

impl DecisionPath {
    pub fn as_str(self) -> &'static str {
        match self {
            DecisionPath::Fast => "fast",
            DecisionPath::General => "general",
            DecisionPath::Cardinality => "cardinality",
        }
    }
}

/// Block sizes of the minimal basis, largest first.
pub fn pre_hausdorff_invariant(s: &FiniteSpace) -> Result<Vec<usize>> {
    if let Some((x, y)) = first_pre_hausdorff_violation(s) {
        return Err(Error::NotPreHausdorff(x, y));
    }
    let mut sizes: Vec<usize> = s.minimal_basis().iter().map(|b| b.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sizes)
}

fn point_signature(s: &FiniteSpace, x: usize) -> (usize, usize) {
    (
        s.neighbourhood(x).len(),
        s.closure(PointSet::singleton(x)).len(),
    )
}

/// Searches for a homeomorphism `a -> b`.
pub fn find_homeomorphism(a: &FiniteSpace, b: &FiniteSpace) -> Result<Option<PointMap>> {
    let n = a.n();
    if n != b.n() {
        return Ok(None);
    }
    if n > MAX_SEARCH_POINTS {
        return Err(Error::SizeLimit {
            what: "homeomorphism search point count",
            got: n,
            max: MAX_SEARCH_POINTS,
        });
    }
    if a.opens().len() != b.opens().len() {
        return Ok(None);
    }
    let sig_a: Vec<_> = (0..n).map(|x| point_signature(a, x)).collect();
    let sig_b: Vec<_> = (0..n).map(|y| point_signature(b, y)).collect();
    let (mut sorted_a, mut sorted_b) = (sig_a.clone(), sig_b.clone());
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    struct Search<'s> {
        a: &'s FiniteSpace,
        b: &'s FiniteSpace,
        sig_a: Vec<(usize, usize)>,
        sig_b: Vec<(usize, usize)>,
        image: Vec<usize>,
        used: PointSet,
    }

    impl Search<'_> {
        fn extend(&mut self) -> bool {
            let x = self.image.len();
            if x == self.a.n() {
                return true;
            }
            for y in 0..self.b.n() {
                if self.used.contains(y) || self.sig_a[x] != self.sig_b[y] {
                    continue;
                }
                let fits = self.image.iter().enumerate().all(|(x2, &y2)| {
                    self.a.neighbourhood(x).contains(x2) == self.b.neighbourhood(y).contains(y2)
                        && self.a.neighbourhood(x2).contains(x)
                            == self.b.neighbourhood(y2).contains(y)
                });
                if !fits {
                    continue;
                }
                self.image.push(y);
                self.used.insert(y);
                if self.extend() {
                    return true;
                }
                self.image.pop();
                self.used.remove(y);
            }
            false
        }
    }

    let mut search = Search {
        a,
        b,
        sig_a,
        sig_b,
        image: Vec::with_capacity(n),
        used: PointSet::EMPTY,
    };
    if search.extend() {
        Ok(Some(PointMap::new(n, search.image)?))
    } else {
        Ok(None)
    }
}

/// General-path decision only.
pub fn homeomorphic_by_search(a: &FiniteSpace, b: &FiniteSpace) -> Result<bool> {
    find_homeomorphism(a, b).map(|f| f.is_some())
}

/// Decides homeomorphism and reports which procedure was used.
pub fn decide_homeomorphic(a: &FiniteSpace, b: &FiniteSpace) -> Result<(bool, DecisionPath)> {
    if a.n() != b.n() {
        return Ok((false, DecisionPath::Cardinality));
    }
    if is_pre_hausdorff(a) && is_pre_hausdorff(b) {
        let same = pre_hausdorff_invariant(a)? == pre_hausdorff_invariant(b)?;
        return Ok((same, DecisionPath::Fast));
    }
    Ok((homeomorphic_by_search(a, b)?, DecisionPath::General))
}

pub fn are_homeomorphic(a: &FiniteSpace, b: &FiniteSpace) -> Result<bool> {
    decide_homeomorphic(a, b).map(|(h, _)| h)
}

/// Number of homeomorphism classes of pre-Hausdorff spaces on `n` points.
///
/// For `n ≤ 7` the partition count is cross-checked against the number of
/// distinct block-size invariants over every pre-Hausdorff topology.
pub fn count_pre_hausdorff_classes(n: usize) -> Result<BigCount> {
    let count = integer_partition_count(n);
    if n <= MAX_TOPOLOGY_POINTS {
        let buckets = pre_hausdorff_class_count_by_enumeration(n)?;
        if count != buckets as u64 {
            return Err(Error::CrossCheck(format!(
                "p({n}) = {count} but enumeration found {buckets} classes"
            )));
        }
    }
    Ok(count)
}

/// Distinct block-size invariants among all pre-Hausdorff topologies on `n` points.
pub fn pre_hausdorff_class_count_by_enumeration(n: usize) -> Result<usize> {
    let mut seen = BTreeSet::new();
    for s in enumerate_pre_hausdorff(n)? {
        seen.insert(pre_hausdorff_invariant(&s)?);
    }
    Ok(seen.len())
}
