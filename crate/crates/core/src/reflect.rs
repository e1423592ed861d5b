//! The relations `R_0`, `R_1`, `R_2` and the reflections they induce.
//!
//! `R_i` identifies two points when every continuous map into a `T_i` space
//! identifies them. On a finite space:
//! - `R_0` is topological indistinguishability (equal minimal neighbourhoods),
//!   and `X/R_0` is the Kolmogorov quotient;
//! - `R_1 = R_2` is clopen indistinguishability, whose classes are the
//!   connected components. Finite `T_1` spaces are discrete, so both
//!   reflections land on the discrete space of components.
//!
//! The pre-Hausdorff reflection keeps the point set and pulls back the
//! topology of `X/R_2` along the projection. Composing it with the
//! Kolmogorov quotient reproduces the Hausdorff reflection.

use crate::error::{Error, Result};
use crate::map::PointMap;
use crate::partition::Partition;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::separation::{first_pre_hausdorff_violation, is_pre_hausdorff, is_t2, satisfies_ti};
use crate::space::{is_continuous, is_homeomorphism, FiniteSpace};

/// Indistinguishability: points with the same minimal neighbourhood.
pub fn indistinguishability(s: &FiniteSpace) -> Partition {
    Partition::from_labels(
        &s.neighbourhoods()
            .iter()
            .map(|u| u.bits() as usize)
            .collect::<Vec<_>>(),
    )
    .expect("labels over a valid carrier")
}

/// `x ~ y` iff every clopen set containing `x` contains `y`.
pub fn clopen_indistinguishability(s: &FiniteSpace) -> Partition {
    let clopens: Vec<PointSet> = s
        .opens()
        .iter()
        .copied()
        .filter(|&u| s.is_closed(u))
        .collect();
    let labels: Vec<usize> = (0..s.n())
        .map(|x| {
            clopens
                .iter()
                .filter(|u| u.contains(x))
                .fold(s.points(), |acc, &u| acc & u)
                .bits() as usize
        })
        .collect();
    Partition::from_labels(&labels).expect("labels over a valid carrier")
}

/// Connected components of the specialization graph (comparability, either direction).
pub fn connected_components(s: &FiniteSpace) -> Partition {
    let n = s.n();
    let mut label = vec![usize::MAX; n];
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut component = PointSet::singleton(start);
        loop {
            let grown = s.minimal_open(component) | s.closure(component);
            if grown == component {
                break;
            }
            component = grown;
        }
        for x in component.iter() {
            label[x] = start;
        }
    }
    Partition::from_labels(&label).expect("labels over a valid carrier")
}

/// `R_i` as a partition of the points of `s`.
pub fn r_relation(s: &FiniteSpace, i: u8) -> Result<Partition> {
    match i {
        0 => Ok(indistinguishability(s)),
        1 | 2 => Ok(clopen_indistinguishability(s)),
        _ => Err(Error::BadAxiomIndex(i)),
    }
}

/// `X/R_i` with its quotient topology and the projection onto it.
pub fn reflect(s: &FiniteSpace, i: u8) -> Result<(FiniteSpace, PointMap)> {
    let p = r_relation(s, i)?;
    s.quotient(&p)
}

/// Same points, topology pulled back from `X/R_2` along the projection.
pub fn reflect_pre_hausdorff(s: &FiniteSpace) -> FiniteSpace {
    let (quotient, q) = reflect(s, 2).expect("index 2 is valid");
    FiniteSpace::initial(s.n(), &[(q, quotient)]).expect("projection arities match")
}

/// Kolmogorov quotient of a pre-Hausdorff space, which is Hausdorff.
pub fn hausdorff_reflection_of_pre_hausdorff(s: &FiniteSpace) -> Result<(FiniteSpace, PointMap)> {
    if let Some((x, y)) = first_pre_hausdorff_violation(s) {
        return Err(Error::NotPreHausdorff(x, y));
    }
    reflect(s, 0)
}

/// The unique `g` with `f = g ∘ q`, where `q` projects `s` onto `X/R_i`.
pub fn factor_through_quotient(
    s: &FiniteSpace,
    f: &PointMap,
    cod: &FiniteSpace,
    i: u8,
) -> Result<PointMap> {
    if !is_continuous(f, s, cod)? {
        return Err(Error::NotContinuous);
    }
    if !satisfies_ti(cod, i)? {
        return Err(Error::CodomainNotTi(i));
    }
    let (quotient, q) = reflect(s, i)?;
    let mut table: Vec<Option<usize>> = vec![None; quotient.n()];
    for x in 0..s.n() {
        let slot = &mut table[q.apply(x)];
        match *slot {
            Some(v) if v != f.apply(x) => return Err(Error::FactorizationFailure),
            _ => *slot = Some(f.apply(x)),
        }
    }
    let table = table
        .into_iter()
        .map(|v| v.ok_or(Error::FactorizationFailure))
        .collect::<Result<Vec<_>>>()?;
    let g = PointMap::new(cod.n(), table)?;
    if !is_continuous(&g, &quotient, cod)? {
        return Err(Error::FactorizationFailure);
    }
    Ok(g)
}

/// Checks that `L_2(s)` agrees with `L_{2,2}(L_{0,2}(s))`.
///
/// Both sides are quotients of the points of `s`; the comparison map is the
/// one induced by the two projections, and it must be a homeomorphism.
pub fn compose_reflections_check(s: &FiniteSpace) -> bool {
    let Ok((direct, q_direct)) = reflect(s, 2) else {
        return false;
    };
    let pre = reflect_pre_hausdorff(s);
    let Ok((composed, q_composed)) = hausdorff_reflection_of_pre_hausdorff(&pre) else {
        return false;
    };
    if direct.n() != composed.n() {
        return false;
    }
    let mut table = vec![usize::MAX; direct.n()];
    for x in 0..s.n() {
        let slot = &mut table[q_direct.apply(x)];
        if *slot != usize::MAX && *slot != q_composed.apply(x) {
            return false;
        }
        *slot = q_composed.apply(x);
    }
    match PointMap::new(composed.n(), table) {
        Ok(phi) => is_homeomorphism(&phi, &direct, &composed).unwrap_or(false),
        Err(_) => false,
    }
}

/// Four independent readings of "pre-Hausdorff" for one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreHausdorffReport {
    /// Every `T0`-separated pair is `T2`-separated.
    pub by_definition: bool,
    /// `R_0` is closed in `X × X`. `None` when `n² > 62`.
    pub r0_closed: Option<bool>,
    /// `R_0` equals the closure of the diagonal. `None` when `n² > 62`.
    pub r0_equals_diagonal_closure: Option<bool>,
    /// `X/R_0` is Hausdorff.
    pub quotient_hausdorff: bool,
    pub r0: Partition,
    /// Closure of the diagonal in `X × X`, pairs encoded as `x * n + y`.
    pub diagonal_closure: Option<PointSet>,
}

impl PreHausdorffReport {
    /// True iff every populated field agrees.
    pub fn consistent(&self) -> bool {
        let b = self.by_definition;
        self.quotient_hausdorff == b
            && self.r0_closed.is_none_or(|v| v == b)
            && self.r0_equals_diagonal_closure.is_none_or(|v| v == b)
    }
}

pub fn pre_hausdorff_report(s: &FiniteSpace) -> PreHausdorffReport {
    let n = s.n();
    let r0 = indistinguishability(s);
    let by_definition = is_pre_hausdorff(s);
    let (quotient, _) = s.quotient(&r0).expect("partition of the same carrier");
    let quotient_hausdorff = is_t2(&quotient);

    let (mut r0_closed, mut r0_equals_diagonal_closure, mut diagonal_closure) = (None, None, None);
    if n * n <= MAX_POINTS {
        let square = s.product(s).expect("size checked");
        let mut relation = PointSet::EMPTY;
        let mut diagonal = PointSet::EMPTY;
        for x in 0..n {
            diagonal.insert(x * n + x);
            for y in 0..n {
                if r0.related(x, y) {
                    relation.insert(x * n + y);
                }
            }
        }
        let closure = square.closure(diagonal);
        r0_closed = Some(square.is_closed(relation));
        r0_equals_diagonal_closure = Some(closure == relation);
        diagonal_closure = Some(closure);
    }

    PreHausdorffReport {
        by_definition,
        r0_closed,
        r0_equals_diagonal_closure,
        quotient_hausdorff,
        r0,
        diagonal_closure,
    }
}
