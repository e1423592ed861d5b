#![allow(dead_code)]

use fintop::{FiniteSpace, PointSet};

/// Every topology on `n` points found by filtering all families of subsets.
/// Independent of the preorder search; practical for `n <= 4`.
pub fn topologies_by_families(n: usize) -> Vec<FiniteSpace> {
    let subsets = 1usize << n;
    let mut out = Vec::new();
    for family in 0u64..1u64 << subsets {
        let has = |s: usize| family >> s & 1 == 1;
        if !has(0) || !has(subsets - 1) {
            continue;
        }
        let closed = (0..subsets)
            .all(|a| !has(a) || (0..subsets).all(|b| !has(b) || (has(a | b) && has(a & b))));
        if closed {
            let opens = (0..subsets)
                .filter(|&s| has(s))
                .map(|s| PointSet::from_bits(s as u64));
            out.push(FiniteSpace::new(n, opens).unwrap());
        }
    }
    out
}

/// All spaces with `0..=max_n` points.
pub fn spaces_up_to(max_n: usize) -> Vec<FiniteSpace> {
    (0..=max_n)
        .flat_map(|n| fintop::enumerate_topologies(n).unwrap())
        .collect()
}

pub fn subsets(n: usize) -> impl Iterator<Item = PointSet> {
    (0u64..1 << n).map(PointSet::from_bits)
}

/// Intersection of every closed superset of `a`.
pub fn closure_by_definition(s: &FiniteSpace, a: PointSet) -> PointSet {
    s.opens()
        .iter()
        .map(|o| o.complement(s.n()))
        .filter(|c| a.is_subset(*c))
        .fold(s.points(), |acc, c| acc & c)
}

/// Union of every open subset of `a`.
pub fn interior_by_definition(s: &FiniteSpace, a: PointSet) -> PointSet {
    s.opens()
        .iter()
        .filter(|o| o.is_subset(a))
        .fold(PointSet::EMPTY, |acc, &o| acc | o)
}

/// Whether disjoint opens `U ⊇ a`, `V ⊇ b` exist, by search over open pairs.
pub fn separated_by_opens(s: &FiniteSpace, a: PointSet, b: PointSet) -> bool {
    s.opens().iter().any(|&u| {
        a.is_subset(u)
            && s.opens()
                .iter()
                .any(|&v| b.is_subset(v) && u.is_disjoint(v))
    })
}

pub fn closed_sets(s: &FiniteSpace) -> Vec<PointSet> {
    s.opens().iter().map(|o| o.complement(s.n())).collect()
}

/// Every map `{0..n-1} -> {0..k-1}`.
pub fn all_maps(n: usize, k: usize) -> Vec<fintop::PointMap> {
    if k == 0 {
        return if n == 0 {
            vec![fintop::PointMap::new(0, vec![]).unwrap()]
        } else {
            vec![]
        };
    }
    (0..k.pow(n as u32))
        .map(|code| {
            let table = (0..n).map(|x| code / k.pow(x as u32) % k).collect();
            fintop::PointMap::new(k, table).unwrap()
        })
        .collect()
}
