//! The specialization preorder of a finite space.
//!
//! Convention: `x ≤ y` iff `x ∈ cl{y}`, equivalently iff every open set
//! containing `x` also contains `y`. The row of `x` is then exactly the
//! minimal open neighbourhood of `x`, and the column of `y` is `cl{y}`.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::{check_size, FiniteSpace};

/// A reflexive, transitive relation on `{0..n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Preorder {
    rows: Vec<PointSet>,
}

impl Preorder {
    /// Builds a preorder from rows, `rows[x] = {y : x ≤ y}`.
    pub fn from_rows(rows: Vec<PointSet>) -> Result<Self> {
        let n = rows.len();
        check_size(n)?;
        for (x, &r) in rows.iter().enumerate() {
            if !r.fits(n) {
                return Err(Error::OutOfRange { set: r, n });
            }
            if !r.contains(x) {
                return Err(Error::NotReflexive(x));
            }
        }
        for x in 0..n {
            for y in rows[x].iter() {
                if let Some(z) = (rows[y] - rows[x]).first() {
                    return Err(Error::NotTransitive(x, y, z));
                }
            }
        }
        Ok(Preorder { rows })
    }

    /// Builds a preorder from a boolean matrix, `leq[x][y]` meaning `x ≤ y`.
    pub fn from_matrix(leq: &[Vec<bool>]) -> Result<Self> {
        let n = leq.len();
        let mut rows = Vec::with_capacity(n);
        for row in leq {
            if row.len() != n {
                return Err(Error::ArityMismatch(format!(
                    "matrix row of length {} in a {n}x{n} matrix",
                    row.len()
                )));
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(y, _)| y)
                    .collect(),
            );
        }
        Preorder::from_rows(rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// `{y : x ≤ y}`.
    pub fn up(&self, x: usize) -> PointSet {
        self.rows[x]
    }

    /// `{x : x ≤ y}`.
    pub fn down(&self, y: usize) -> PointSet {
        (0..self.n()).filter(|&x| self.leq(x, y)).collect()
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        (0..n)
            .map(|x| (0..n).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    /// Componentwise order on pairs, with `(x, y)` encoded as `x * other.n() + y`.
    pub fn product(&self, other: &Preorder) -> Result<Preorder> {
        let m = other.n();
        let n = self.n() * m;
        check_size(n)?;
        let mut rows = Vec::with_capacity(n);
        for x in 0..self.n() {
            for y in 0..m {
                rows.push(
                    (0..n)
                        .filter(|&p| self.leq(x, p / m) && other.leq(y, p % m))
                        .collect(),
                );
            }
        }
        Ok(Preorder { rows })
    }
}

impl FiniteSpace {
    pub fn specialization_preorder(&self) -> Preorder {
        Preorder {
            rows: self.neighbourhoods().to_vec(),
        }
    }

    pub fn from_preorder(p: &Preorder) -> FiniteSpace {
        FiniteSpace::from_neighbourhoods(p.n(), p.rows.clone())
    }
}
