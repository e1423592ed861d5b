mod common;

use common::*;
use fintop::reflect::{self, factor_through_quotient, r_relation};
use fintop::separation::{is_pre_hausdorff, satisfies_ti};
use fintop::{
    is_continuous, is_homeomorphism, pre_hausdorff_report, FiniteSpace, Partition, PointMap,
};

fn codomains(i: u8, max_n: usize) -> Vec<FiniteSpace> {
    spaces_up_to(max_n)
        .into_iter()
        .filter(|t| satisfies_ti(t, i).unwrap())
        .collect()
}

/// Points identified by every continuous map into a small `T_i` space.
fn r_relation_by_maps(s: &FiniteSpace, targets: &[FiniteSpace]) -> Partition {
    let n = s.n();
    let mut related = vec![vec![true; n]; n];
    for t in targets {
        for f in all_maps(n, t.n()) {
            if is_continuous(&f, s, t).unwrap() {
                for (x, row) in related.iter_mut().enumerate() {
                    for (y, cell) in row.iter_mut().enumerate() {
                        *cell &= f.apply(x) == f.apply(y);
                    }
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| related[x][y]).unwrap())
        .collect();
    Partition::from_labels(&labels).unwrap()
}

#[test]
fn r_relations_match_the_all_maps_definition() {
    for i in 0..=2 {
        let targets = codomains(i, 3);
        for s in spaces_up_to(3) {
            assert_eq!(
                r_relation(&s, i).unwrap(),
                r_relation_by_maps(&s, &targets),
                "i = {i}, {s:?}"
            );
        }
    }
}

#[test]
fn r1_equals_r2_equals_components() {
    for s in spaces_up_to(4) {
        let r1 = r_relation(&s, 1).unwrap();
        assert_eq!(r1, r_relation(&s, 2).unwrap());
        assert_eq!(r1, reflect::connected_components(&s));
    }
}

#[test]
fn every_continuous_map_factors_uniquely() {
    for i in 0..=2 {
        let targets = codomains(i, 3);
        for s in spaces_up_to(3) {
            let (quotient, q) = reflect::reflect(&s, i).unwrap();
            for t in &targets {
                for f in all_maps(s.n(), t.n()) {
                    if !is_continuous(&f, &s, t).unwrap() {
                        continue;
                    }
                    let g = factor_through_quotient(&s, &f, t, i).unwrap();
                    assert_eq!(q.then(&g).unwrap(), f);
                    let candidates = all_maps(quotient.n(), t.n())
                        .into_iter()
                        .filter(|h| {
                            q.then(h).unwrap() == f && is_continuous(h, &quotient, t).unwrap()
                        })
                        .count();
                    assert_eq!(candidates, 1);
                }
            }
        }
    }
}

#[test]
fn factorization_rejects_bad_inputs() {
    let s = FiniteSpace::sierpinski();
    let swap = PointMap::new(2, vec![1, 0]).unwrap();
    assert_eq!(
        factor_through_quotient(&s, &swap, &s, 0),
        Err(fintop::Error::NotContinuous)
    );
    let id = PointMap::identity(2);
    assert_eq!(
        factor_through_quotient(&s, &id, &s, 2),
        Err(fintop::Error::CodomainNotTi(2))
    );
}

#[test]
fn reflections_land_in_ti_and_fix_ti_spaces() {
    for s in spaces_up_to(4) {
        for i in 0..=2 {
            let (r, q) = reflect::reflect(&s, i).unwrap();
            assert!(satisfies_ti(&r, i).unwrap());
            assert!(q.is_surjective());
            if satisfies_ti(&s, i).unwrap() {
                assert!(is_homeomorphism(&q, &s, &r).unwrap(), "i = {i}, {s:?}");
            }
        }
    }
}

#[test]
fn pre_hausdorff_reflection_is_universal() {
    let targets: Vec<FiniteSpace> = spaces_up_to(3)
        .into_iter()
        .filter(is_pre_hausdorff)
        .collect();
    for s in spaces_up_to(3) {
        let l = reflect::reflect_pre_hausdorff(&s);
        let id = PointMap::identity(s.n());
        assert!(is_pre_hausdorff(&l));
        assert!(is_continuous(&id, &s, &l).unwrap());
        if is_pre_hausdorff(&s) {
            assert_eq!(l, s);
        }
        for t in &targets {
            for f in all_maps(s.n(), t.n()) {
                if is_continuous(&f, &s, t).unwrap() {
                    assert!(is_continuous(&f, &l, t).unwrap());
                }
            }
        }
    }
}

#[test]
fn hausdorff_reflection_composes() {
    for s in spaces_up_to(4) {
        assert!(reflect::compose_reflections_check(&s), "{s:?}");
    }
}

#[test]
fn hausdorff_reflection_requires_pre_hausdorff_input() {
    let err = reflect::hausdorff_reflection_of_pre_hausdorff(&FiniteSpace::sierpinski());
    assert_eq!(err, Err(fintop::Error::NotPreHausdorff(0, 1)));
}

#[test]
fn report_fields_agree() {
    for s in spaces_up_to(4) {
        let r = pre_hausdorff_report(&s);
        assert!(r.r0_closed.is_some() && r.r0_equals_diagonal_closure.is_some());
        assert!(r.consistent(), "{s:?}: {r:?}");
    }
}

#[test]
fn initial_topologies_into_pre_hausdorff_spaces_are_pre_hausdorff() {
    let targets: Vec<FiniteSpace> = spaces_up_to(2)
        .into_iter()
        .filter(is_pre_hausdorff)
        .collect();
    for n in 0..=3 {
        for a in &targets {
            for b in &targets {
                for f in all_maps(n, a.n()) {
                    for g in all_maps(n, b.n()) {
                        let init = FiniteSpace::initial(
                            n,
                            &[(f.clone(), a.clone()), (g.clone(), b.clone())],
                        )
                        .unwrap();
                        assert!(is_pre_hausdorff(&init));
                    }
                }
            }
        }
    }
}

#[test]
fn subspaces_products_and_quotients_stay_pre_hausdorff() {
    let pre: Vec<FiniteSpace> = spaces_up_to(4)
        .into_iter()
        .filter(is_pre_hausdorff)
        .collect();
    for s in &pre {
        for a in subsets(s.n()) {
            assert!(is_pre_hausdorff(&s.subspace(a).unwrap()));
        }
        for labels in fintop::enumerate::SetPartitions::new(s.n()) {
            let p = Partition::from_labels(&labels).unwrap();
            assert!(is_pre_hausdorff(&s.quotient(&p).unwrap().0));
        }
    }
    let small: Vec<&FiniteSpace> = pre.iter().filter(|s| s.n() <= 3).collect();
    for a in &small {
        for b in &small {
            assert!(is_pre_hausdorff(&a.product(b).unwrap()));
        }
    }
}
