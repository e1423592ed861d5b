//! Finite topological spaces and the constructions built on them.
//!
//! Every finite space is principal: the intersection of all opens containing
//! a point is itself open. A space is therefore stored twice over, once as its
//! canonical list of open sets and once as the minimal open neighbourhood of
//! each point. The second form drives nearly every computation; the first is
//! what callers see.

use std::fmt;

use crate::error::{Error, Result, TopologyViolation};
use crate::map::PointMap;
use crate::partition::Partition;
use crate::pointset::{PointSet, MAX_POINTS};

/// A topology on the points `{0..n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<PointSet>,
    nbhd: Vec<PointSet>,
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        Err(Error::SizeLimit {
            what: "point count",
            got: n,
            max: MAX_POINTS,
        })
    } else {
        Ok(())
    }
}

fn canonicalize(opens: &mut Vec<PointSet>) {
    opens.sort_unstable_by_key(|s| s.canonical_key());
    opens.dedup();
}

/// All unions of the given neighbourhoods, including the empty union.
fn unions_of(nbhd: &[PointSet]) -> Vec<PointSet> {
    let mut opens = vec![PointSet::EMPTY];
    let mut seen = std::collections::HashSet::new();
    seen.insert(PointSet::EMPTY);
    for &u in nbhd {
        let k = opens.len();
        for i in 0..k {
            let v = opens[i] | u;
            if seen.insert(v) {
                opens.push(v);
            }
        }
    }
    canonicalize(&mut opens);
    opens
}

fn neighbourhoods_from_opens(n: usize, opens: &[PointSet]) -> Vec<PointSet> {
    let mut nbhd = vec![PointSet::full(n); n];
    for &o in opens {
        for x in o.iter() {
            nbhd[x] &= o;
        }
    }
    nbhd
}

impl FiniteSpace {
    /// Validates `opens` as a topology on `n` points and canonicalizes it.
    pub fn new(n: usize, opens: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_size(n)?;
        let mut opens: Vec<PointSet> = opens.into_iter().collect();
        if let Some(&bad) = opens.iter().find(|o| !o.fits(n)) {
            return Err(Error::OutOfRange { set: bad, n });
        }
        canonicalize(&mut opens);
        let present = |s: PointSet| {
            opens
                .binary_search_by_key(&s.canonical_key(), |o| o.canonical_key())
                .is_ok()
        };
        if !present(PointSet::EMPTY) {
            return Err(Error::NotATopology(TopologyViolation::MissingEmpty));
        }
        if !present(PointSet::full(n)) {
            return Err(Error::NotATopology(TopologyViolation::MissingFull));
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if !present(a | b) {
                    return Err(Error::NotATopology(TopologyViolation::UnionEscape(a, b)));
                }
                if !present(a & b) {
                    return Err(Error::NotATopology(TopologyViolation::IntersectionEscape(
                        a, b,
                    )));
                }
            }
        }
        let nbhd = neighbourhoods_from_opens(n, &opens);
        Ok(FiniteSpace { n, opens, nbhd })
    }

    /// Builds a space from the minimal neighbourhood of each point.
    ///
    /// The caller guarantees `nbhd[x]` contains `x` and that `y ∈ nbhd[x]`
    /// implies `nbhd[y] ⊆ nbhd[x]`.
    pub(crate) fn from_neighbourhoods(n: usize, nbhd: Vec<PointSet>) -> Self {
        debug_assert_eq!(nbhd.len(), n);
        debug_assert!(nbhd
            .iter()
            .enumerate()
            .all(|(x, u)| u.contains(x) && u.iter().all(|y| nbhd[y].is_subset(*u))));
        let opens = unions_of(&nbhd);
        FiniteSpace { n, opens, nbhd }
    }

    /// Builds a space from a family already known to be a topology.
    pub(crate) fn from_valid_opens(n: usize, mut opens: Vec<PointSet>) -> Self {
        canonicalize(&mut opens);
        let nbhd = neighbourhoods_from_opens(n, &opens);
        FiniteSpace { n, opens, nbhd }
    }

    /// The smallest topology containing every set in `subbasis`.
    pub fn generate(n: usize, subbasis: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_size(n)?;
        let mut nbhd = vec![PointSet::full(n); n];
        for s in subbasis {
            if !s.fits(n) {
                return Err(Error::OutOfRange { set: s, n });
            }
            for x in s.iter() {
                nbhd[x] &= s;
            }
        }
        Ok(FiniteSpace::from_neighbourhoods(n, nbhd))
    }

    /// Opens are all unions of blocks; the minimal basis is the partition itself.
    pub fn from_partition(p: &Partition) -> Self {
        let mut nbhd = vec![PointSet::EMPTY; p.n()];
        for &b in p.blocks() {
            for x in b.iter() {
                nbhd[x] = b;
            }
        }
        FiniteSpace::from_neighbourhoods(p.n(), nbhd)
    }

    pub fn discrete(n: usize) -> Self {
        FiniteSpace::from_partition(&Partition::discrete(n))
    }

    pub fn indiscrete(n: usize) -> Self {
        FiniteSpace::from_partition(&Partition::indiscrete(n))
    }

    /// Two points with the single proper open set `{1}`.
    pub fn sierpinski() -> Self {
        FiniteSpace::from_valid_opens(
            2,
            vec![PointSet::EMPTY, PointSet::singleton(1), PointSet::full(2)],
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn points(&self) -> PointSet {
        PointSet::full(self.n)
    }

    /// Open sets in canonical order: ascending cardinality, then numeric encoding.
    #[inline]
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// Complements of the opens, in the order of [`opens`](Self::opens).
    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().map(move |o| o.complement(self.n))
    }

    /// Minimal open neighbourhood of each point.
    #[inline]
    pub fn neighbourhoods(&self) -> &[PointSet] {
        &self.nbhd
    }

    #[inline]
    pub fn neighbourhood(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    /// Intersection of all opens containing `a`; empty for empty `a`.
    pub fn minimal_open(&self, a: PointSet) -> PointSet {
        debug_assert!(a.fits(self.n));
        a.iter().fold(PointSet::EMPTY, |acc, x| acc | self.nbhd[x])
    }

    pub fn closure(&self, a: PointSet) -> PointSet {
        debug_assert!(a.fits(self.n));
        (0..self.n)
            .filter(|&y| !self.nbhd[y].is_disjoint(a))
            .collect()
    }

    pub fn interior(&self, a: PointSet) -> PointSet {
        debug_assert!(a.fits(self.n));
        (0..self.n).filter(|&y| self.nbhd[y].is_subset(a)).collect()
    }

    #[inline]
    pub fn is_open(&self, a: PointSet) -> bool {
        a.fits(self.n) && self.minimal_open(a) == a
    }

    #[inline]
    pub fn is_closed(&self, a: PointSet) -> bool {
        a.fits(self.n) && self.is_open(a.complement(self.n))
    }

    #[inline]
    pub fn is_clopen(&self, a: PointSet) -> bool {
        self.is_open(a) && self.is_closed(a)
    }

    /// The distinct minimal neighbourhoods, canonically ordered.
    pub fn minimal_basis(&self) -> Vec<PointSet> {
        let mut basis = self.nbhd.clone();
        canonicalize(&mut basis);
        basis
    }

    /// Subspace on `a`, its points relabelled `0..|a|` in ascending order.
    pub fn subspace(&self, a: PointSet) -> Result<FiniteSpace> {
        if !a.fits(self.n) {
            return Err(Error::OutOfRange { set: a, n: self.n });
        }
        let nbhd = a.iter().map(|x| (self.nbhd[x] & a).compress(a)).collect();
        Ok(FiniteSpace::from_neighbourhoods(a.len(), nbhd))
    }

    /// Product topology. The pair `(x, y)` is encoded as `x * other.n() + y`.
    pub fn product(&self, other: &FiniteSpace) -> Result<FiniteSpace> {
        let n = self.n * other.n;
        if n > MAX_POINTS {
            return Err(Error::SizeLimit {
                what: "product point count",
                got: n,
                max: MAX_POINTS,
            });
        }
        let m = other.n;
        let mut nbhd = Vec::with_capacity(n);
        for x in 0..self.n {
            for y in 0..m {
                let mut u = PointSet::EMPTY;
                for x2 in self.nbhd[x].iter() {
                    u |= PointSet::from_bits(other.nbhd[y].bits() << (x2 * m));
                }
                nbhd.push(u);
            }
        }
        Ok(FiniteSpace::from_neighbourhoods(n, nbhd))
    }

    /// Coarsest topology on `n` points making every `(map, codomain)` continuous.
    pub fn initial(n: usize, maps: &[(PointMap, FiniteSpace)]) -> Result<FiniteSpace> {
        let mut subbasis = Vec::new();
        for (f, cod) in maps {
            if f.dom_n() != n || f.cod_n() != cod.n {
                return Err(Error::ArityMismatch(format!(
                    "map {} -> {} used with a {}-point domain and {}-point codomain",
                    f.dom_n(),
                    f.cod_n(),
                    n,
                    cod.n
                )));
            }
            subbasis.extend(cod.opens.iter().map(|&v| f.preimage(v)));
        }
        FiniteSpace::generate(n, subbasis)
    }

    /// Quotient by `p` together with the projection onto block indices.
    pub fn quotient(&self, p: &Partition) -> Result<(FiniteSpace, PointMap)> {
        if p.n() != self.n {
            return Err(Error::ArityMismatch(format!(
                "partition of {} points applied to a {}-point space",
                p.n(),
                self.n
            )));
        }
        let q = PointMap::new(p.len(), p.labels())?;
        let opens = self
            .opens
            .iter()
            .filter(|&&u| q.preimage(q.image(u)) == u)
            .map(|&u| q.image(u))
            .collect();
        Ok((FiniteSpace::from_valid_opens(p.len(), opens), q))
    }
}

/// True iff the preimage of every open of `cod` is open in `dom`.
pub fn is_continuous(f: &PointMap, dom: &FiniteSpace, cod: &FiniteSpace) -> Result<bool> {
    if f.dom_n() != dom.n || f.cod_n() != cod.n {
        return Err(Error::ArityMismatch(format!(
            "map {} -> {} checked against spaces of {} and {} points",
            f.dom_n(),
            f.cod_n(),
            dom.n,
            cod.n
        )));
    }
    Ok(cod.opens.iter().all(|&v| dom.is_open(f.preimage(v))))
}

/// A continuous bijection with continuous inverse.
pub fn is_homeomorphism(f: &PointMap, dom: &FiniteSpace, cod: &FiniteSpace) -> Result<bool> {
    if !is_continuous(f, dom, cod)? {
        return Ok(false);
    }
    match f.inverse() {
        Some(g) => is_continuous(&g, cod, dom),
        None => Ok(false),
    }
}

/// True iff `f` sends every closed set of `dom` to a closed set of `cod`.
pub fn is_closed_map(f: &PointMap, dom: &FiniteSpace, cod: &FiniteSpace) -> Result<bool> {
    if f.dom_n() != dom.n || f.cod_n() != cod.n {
        return Err(Error::ArityMismatch("closed-map check".into()));
    }
    Ok(dom.closed_sets().all(|c| cod.is_closed(f.image(c))))
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSpace({}; ", self.n)?;
        for (i, o) in self.opens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{o}")?;
        }
        f.write_str(")")
    }
}
