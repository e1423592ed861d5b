use std::fmt;

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// A partition of `{0..n-1}` into nonempty blocks, ordered by least element.
///
/// Doubles as an equivalence relation: two points are related iff they share
/// a block.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<PointSet>,
}

impl Partition {
    pub fn new(n: usize, blocks: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::SizeLimit {
                what: "point count",
                got: n,
                max: MAX_POINTS,
            });
        }
        let mut blocks: Vec<PointSet> = blocks.into_iter().collect();
        let mut seen = PointSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            if !b.fits(n) {
                return Err(Error::OutOfRange { set: b, n });
            }
            if !b.is_disjoint(seen) {
                return Err(Error::MalformedPartition(format!(
                    "block {b} overlaps an earlier block"
                )));
            }
            seen |= b;
        }
        if seen != PointSet::full(n) {
            return Err(Error::MalformedPartition(format!(
                "points {} are not covered",
                PointSet::full(n) - seen
            )));
        }
        blocks.sort_by_key(|b| b.first());
        Ok(Partition { n, blocks })
    }

    /// Builds the partition whose blocks are the fibres of `labels`.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(Error::SizeLimit {
                what: "point count",
                got: n,
                max: MAX_POINTS,
            });
        }
        let mut blocks: Vec<(usize, PointSet)> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            match blocks.iter_mut().find(|(k, _)| *k == l) {
                Some((_, b)) => b.insert(x),
                None => blocks.push((l, PointSet::singleton(x))),
            }
        }
        Ok(Partition {
            n,
            blocks: blocks.into_iter().map(|(_, b)| b).collect(),
        })
    }

    pub fn discrete(n: usize) -> Self {
        Partition {
            n,
            blocks: (0..n).map(PointSet::singleton).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        Partition {
            n,
            blocks: if n == 0 {
                vec![]
            } else {
                vec![PointSet::full(n)]
            },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block holding `x`.
    pub fn block_of(&self, x: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(x))
            .expect("point outside the partitioned carrier")
    }

    /// `labels()[x]` is the block index of `x`.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for x in b.iter() {
                out[x] = i;
            }
        }
        out
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.blocks.iter().any(|b| b.contains(x) && b.contains(y))
    }

    /// Block sizes, largest first.
    pub fn shape(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pset;

    #[test]
    fn blocks_sorted_by_least_element() {
        let p = Partition::new(3, [pset![2], pset![0, 1]]).unwrap();
        assert_eq!(p.blocks(), &[pset![0, 1], pset![2]]);
        assert_eq!(p.labels(), vec![0, 0, 1]);
        assert_eq!(p.shape(), vec![2, 1]);
    }

    #[test]
    fn rejects_overlap_gap_and_empty_block() {
        assert!(Partition::new(3, [pset![0, 1], pset![1, 2]]).is_err());
        assert!(Partition::new(3, [pset![0, 1]]).is_err());
        assert!(Partition::new(2, [pset![0, 1], PointSet::EMPTY]).is_err());
        assert!(Partition::new(2, [pset![0, 1, 2]]).is_err());
    }

    #[test]
    fn from_labels_groups_fibres() {
        let p = Partition::from_labels(&[5, 3, 5, 3, 9]).unwrap();
        assert_eq!(p.blocks(), &[pset![0, 2], pset![1, 3], pset![4]]);
        assert!(p.related(1, 3));
        assert!(!p.related(0, 4));
    }

    #[test]
    fn empty_carrier() {
        let p = Partition::new(0, []).unwrap();
        assert!(p.is_empty());
        assert_eq!(p, Partition::indiscrete(0));
    }
}
