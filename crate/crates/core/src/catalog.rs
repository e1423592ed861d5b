//! Named example spaces.
//!
//! | token | space |
//! |---|---|
//! | `point` | the one-point space |
//! | `sierpinski` | `{0,1}` with the single proper open set `{1}` |
//! | `discrete:k` | `k` points, every subset open |
//! | `indiscrete:k` | `k` points, only `∅` and the whole set open |
//! | `partition:B/B/...` | opens are unions of the listed blocks, each block a comma-separated list of points, e.g. `partition:0,1/2` |

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::space::FiniteSpace;

pub fn example_space(name: &str) -> Result<FiniteSpace> {
    let unknown = || Error::UnknownExample(name.to_string());
    let (kind, arg) = match name.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (name, None),
    };
    let count = |arg: Option<&str>| -> Result<usize> {
        let k: usize = arg.ok_or_else(unknown)?.parse().map_err(|_| unknown())?;
        if k > MAX_POINTS {
            return Err(Error::SizeLimit {
                what: "point count",
                got: k,
                max: MAX_POINTS,
            });
        }
        Ok(k)
    };
    match (kind, arg) {
        ("point", None) => Ok(FiniteSpace::discrete(1)),
        ("sierpinski", None) => Ok(FiniteSpace::sierpinski()),
        ("discrete", a) => Ok(FiniteSpace::discrete(count(a)?)),
        ("indiscrete", a) => Ok(FiniteSpace::indiscrete(count(a)?)),
        ("partition", Some(spec)) => {
            let mut blocks = Vec::new();
            let mut n = 0;
            for block in spec.split('/') {
                let mut set = PointSet::EMPTY;
                for point in block.split(',') {
                    let x: usize = point.trim().parse().map_err(|_| unknown())?;
                    if x >= MAX_POINTS || set.contains(x) {
                        return Err(unknown());
                    }
                    set.insert(x);
                    n += 1;
                }
                blocks.push(set);
            }
            let p = Partition::new(n, blocks)?;
            Ok(FiniteSpace::from_partition(&p))
        }
        _ => Err(unknown()),
    }
}
