//! Exhaustive generation of finite topologies.
//!
//! Topologies on `n` labelled points correspond one-to-one with preorders, so
//! [`enumerate_topologies`] searches over reflexive boolean matrices, fixing
//! the off-diagonal entries in row-major order (`false` before `true`) and
//! rejecting an entry as soon as it completes a transitivity violation. The
//! stream is therefore ordered lexicographically by the row-major preorder
//! matrix `leq[x][y]` (`x ≤ y` iff `x ∈ cl{y}`).
//!
//! A search can be restricted to the matrices extending a fixed prefix of
//! entries; the prefixes of a given length partition the whole stream into
//! disjoint, contiguous pieces. [`preorder_prefixes`] lists them in order.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

/// Largest point count accepted by [`enumerate_topologies`].
pub const MAX_TOPOLOGY_POINTS: usize = 7;
/// Largest point count accepted by [`enumerate_pre_hausdorff`].
pub const MAX_PARTITION_POINTS: usize = 12;

fn off_diagonal_cells(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect()
}

/// Depth-first search over transitive reflexive relations.
#[derive(Clone, Debug)]
pub struct PreorderSearch {
    cells: Vec<(usize, usize)>,
    /// Cells beyond this depth are left unassigned.
    limit: usize,
    /// Assignments below this depth are fixed.
    floor: usize,
    rows: Vec<u64>,
    values: Vec<bool>,
    started: bool,
    done: bool,
}

impl PreorderSearch {
    fn with_limit(n: usize, limit: usize) -> Self {
        let cells = off_diagonal_cells(n);
        let limit = limit.min(cells.len());
        PreorderSearch {
            cells,
            limit,
            floor: 0,
            rows: (0..n).map(|x| 1u64 << x).collect(),
            values: Vec::new(),
            started: false,
            done: false,
        }
    }

    pub fn new(n: usize) -> Self {
        PreorderSearch::with_limit(n, usize::MAX)
    }

    /// Searches only the matrices whose first `prefix.len()` off-diagonal
    /// entries equal `prefix`. Returns `None` if the prefix is inconsistent.
    pub fn with_prefix(n: usize, prefix: &[bool]) -> Option<Self> {
        let mut search = PreorderSearch::new(n);
        if prefix.len() > search.cells.len() {
            return None;
        }
        for &v in prefix {
            if !search.admissible(v) {
                return None;
            }
            search.push(v);
        }
        search.floor = prefix.len();
        Some(search)
    }

    /// Whether assigning `v` to the next cell completes no violated triple.
    fn admissible(&self, v: bool) -> bool {
        let (x, y) = self.cells[self.values.len()];
        let rows = &self.rows;
        // Columns of row x already fixed: everything left of y, plus x itself.
        let assigned = ((1u64 << y) - 1) | (1u64 << x);
        if v {
            // x ≤ y ≤ z must force x ≤ z for every z already decided in row x.
            if y < x && rows[y] & assigned & !(rows[x] | 1u64 << y) != 0 {
                return false;
            }
            // w ≤ x ≤ y must force w ≤ y for every completed row w.
            (0..x).all(|w| rows[w] >> x & 1 == 0 || rows[w] >> y & 1 == 1)
        } else {
            // No completed k with x ≤ k ≤ y.
            let ks = rows[x] & assigned & ((1u64 << x) - 1);
            PointSet::from_bits(ks)
                .iter()
                .all(|k| rows[k] >> y & 1 == 0)
        }
    }

    fn push(&mut self, v: bool) {
        let (x, y) = self.cells[self.values.len()];
        if v {
            self.rows[x] |= 1u64 << y;
        }
        self.values.push(v);
    }

    fn pop(&mut self) -> Option<bool> {
        let v = self.values.pop()?;
        let (x, y) = self.cells[self.values.len()];
        self.rows[x] &= !(1u64 << y);
        Some(v)
    }

    /// Moves to the next sibling branch above the floor.
    fn backtrack(&mut self) -> bool {
        while self.values.len() > self.floor {
            let v = self.pop().expect("above floor");
            if !v && self.admissible(true) {
                self.push(true);
                return true;
            }
        }
        false
    }

    /// Advances to the next complete assignment up to `limit`.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.started && !self.backtrack() {
            self.done = true;
            return false;
        }
        self.started = true;
        while self.values.len() < self.limit {
            if self.admissible(false) {
                self.push(false);
            } else if self.admissible(true) {
                self.push(true);
            } else if !self.backtrack() {
                self.done = true;
                return false;
            }
        }
        true
    }

    /// Rows of the current preorder, `rows[x] = {y : x ≤ y}`.
    pub fn rows(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.rows.iter().map(|&r| PointSet::from_bits(r))
    }
}

impl Iterator for PreorderSearch {
    type Item = FiniteSpace;

    fn next(&mut self) -> Option<FiniteSpace> {
        if self.limit < self.cells.len() {
            // Truncated searches only serve prefix listing.
            return None;
        }
        if !self.advance() {
            return None;
        }
        let n = self.rows.len();
        Some(FiniteSpace::from_neighbourhoods(n, self.rows().collect()))
    }
}

/// Every consistent assignment of the first `depth` off-diagonal entries, in
/// stream order.
pub fn preorder_prefixes(n: usize, depth: usize) -> Vec<Vec<bool>> {
    let mut search = PreorderSearch::with_limit(n, depth);
    let mut out = Vec::new();
    while search.advance() {
        out.push(search.values.clone());
    }
    out
}

/// Every topology on `n` labelled points exactly once, in preorder-matrix
/// lexicographic order.
pub fn enumerate_topologies(n: usize) -> Result<PreorderSearch> {
    if n > MAX_TOPOLOGY_POINTS {
        return Err(Error::SizeLimit {
            what: "topology enumeration point count",
            got: n,
            max: MAX_TOPOLOGY_POINTS,
        });
    }
    Ok(PreorderSearch::new(n))
}

/// Set partitions of `{0..n-1}` as restricted growth strings, in
/// lexicographic order of the strings.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    labels: Vec<usize>,
    /// `prefix_max[i]` is the largest label among positions `0..i`.
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    fn step(&mut self) -> bool {
        let n = self.labels.len();
        for i in (1..n).rev() {
            if self.labels[i] <= self.prefix_max[i] {
                self.labels[i] += 1;
                let top = self.prefix_max[i].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = top;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started && !self.step() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.labels.clone())
    }
}

/// Pre-Hausdorff topologies on `n` points, one per set partition, in
/// restricted-growth-string order.
pub fn enumerate_pre_hausdorff(n: usize) -> Result<impl Iterator<Item = FiniteSpace>> {
    if n > MAX_PARTITION_POINTS {
        return Err(Error::SizeLimit {
            what: "pre-Hausdorff enumeration point count",
            got: n,
            max: MAX_PARTITION_POINTS,
        });
    }
    Ok(SetPartitions::new(n).map(|labels| {
        let p = Partition::from_labels(&labels).expect("labels over a valid carrier");
        FiniteSpace::from_partition(&p)
    }))
}
