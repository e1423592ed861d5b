use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// A total function `{0..dom_n-1} -> {0..cod_n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointMap {
    cod_n: usize,
    table: Vec<usize>,
}

impl PointMap {
    pub fn new(cod_n: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&y| y >= cod_n) {
            return Err(Error::PointOutOfRange {
                point: bad,
                n: cod_n,
            });
        }
        Ok(PointMap { cod_n, table })
    }

    pub fn identity(n: usize) -> Self {
        PointMap {
            cod_n: n,
            table: (0..n).collect(),
        }
    }

    pub fn constant(dom_n: usize, cod_n: usize, value: usize) -> Result<Self> {
        PointMap::new(cod_n, vec![value; dom_n])
    }

    pub fn dom_n(&self) -> usize {
        self.table.len()
    }

    pub fn cod_n(&self) -> usize {
        self.cod_n
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn image(&self, a: PointSet) -> PointSet {
        a.iter().map(|x| self.table[x]).collect()
    }

    pub fn preimage(&self, b: PointSet) -> PointSet {
        self.table
            .iter()
            .enumerate()
            .filter(|&(_, &y)| b.contains(y))
            .map(|(x, _)| x)
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = PointSet::EMPTY;
        for &y in &self.table {
            if seen.contains(y) {
                return false;
            }
            seen.insert(y);
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        self.image(PointSet::full(self.dom_n())) == PointSet::full(self.cod_n)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom_n() == self.cod_n && self.is_injective()
    }

    pub fn inverse(&self) -> Option<PointMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.cod_n];
        for (x, &y) in self.table.iter().enumerate() {
            table[y] = x;
        }
        Some(PointMap {
            cod_n: self.dom_n(),
            table,
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PointMap) -> Result<PointMap> {
        if other.dom_n() != self.cod_n {
            return Err(Error::ArityMismatch(format!(
                "cannot compose a map into {} points with a map from {} points",
                self.cod_n,
                other.dom_n()
            )));
        }
        Ok(PointMap {
            cod_n: other.cod_n,
            table: self.table.iter().map(|&y| other.table[y]).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pset;

    #[test]
    fn images_and_preimages() {
        let f = PointMap::new(2, vec![1, 0, 1]).unwrap();
        assert_eq!(f.image(pset![0, 2]), pset![1]);
        assert_eq!(f.preimage(pset![1]), pset![0, 2]);
        assert!(f.is_surjective());
        assert!(!f.is_injective());
        assert!(f.inverse().is_none());
    }

    #[test]
    fn rejects_out_of_range_entries() {
        assert!(PointMap::new(2, vec![0, 2]).is_err());
    }

    #[test]
    fn inverse_and_composition() {
        let f = PointMap::new(3, vec![2, 0, 1]).unwrap();
        let g = f.inverse().unwrap();
        assert_eq!(f.then(&g).unwrap(), PointMap::identity(3));
        assert!(f.then(&PointMap::identity(2)).is_err());
    }
}
