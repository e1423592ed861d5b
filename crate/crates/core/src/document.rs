//! JSON space documents: `{"points": n, "opens": [[...], ...]}`.
//!
//! Each open is an ascending array of point indices and the list must include
//! `[]` and the full set. Readers accept opens in any order; writers emit the
//! canonical order. Reflected spaces may carry an extra `projection` array
//! mapping each original point to its image.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::PointMap;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::space::FiniteSpace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection: Option<Vec<usize>>,
}

impl SpaceDocument {
    pub fn from_space(s: &FiniteSpace) -> Self {
        SpaceDocument {
            points: s.n(),
            opens: s.opens().iter().map(|o| o.to_vec()).collect(),
            projection: None,
        }
    }

    pub fn with_projection(mut self, q: &PointMap) -> Self {
        self.projection = Some(q.table().to_vec());
        self
    }

    pub fn to_space(&self) -> Result<FiniteSpace> {
        let n = self.points;
        if n > MAX_POINTS {
            return Err(Error::SizeLimit {
                what: "point count",
                got: n,
                max: MAX_POINTS,
            });
        }
        let mut opens = Vec::with_capacity(self.opens.len());
        for open in &self.opens {
            let mut set = PointSet::EMPTY;
            for &x in open {
                if x >= n {
                    return Err(Error::PointOutOfRange { point: x, n });
                }
                if set.contains(x) {
                    return Err(Error::InvalidDocument(format!(
                        "point {x} repeated in open {open:?}"
                    )));
                }
                set.insert(x);
            }
            opens.push(set);
        }
        FiniteSpace::new(n, opens)
    }
}

pub fn parse_space(json: &str) -> Result<FiniteSpace> {
    let doc: SpaceDocument =
        serde_json::from_str(json).map_err(|e| Error::InvalidDocument(e.to_string()))?;
    doc.to_space()
}

pub fn space_to_json(s: &FiniteSpace) -> String {
    serde_json::to_string(&SpaceDocument::from_space(s)).expect("documents always serialize")
}
