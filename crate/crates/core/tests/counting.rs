use std::collections::BTreeSet;

use fintop::homeo::{
    decide_homeomorphic, find_homeomorphism, homeomorphic_by_search, DecisionPath,
};
use fintop::separation::is_pre_hausdorff;
use fintop::{
    bell_number, census, census_with, enumerate_pre_hausdorff, enumerate_topologies,
    integer_partition_count, is_homeomorphism, pre_hausdorff_invariant, CensusOptions, FiniteSpace,
};

/// Integer partitions of `n` with parts at most `max`, by direct recursion.
fn partitions_with_parts_at_most(n: usize, max: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n))
        .map(|k| partitions_with_parts_at_most(n - k, k))
        .sum()
}

fn opens_key(s: &FiniteSpace) -> Vec<u64> {
    s.opens().iter().map(|o| o.bits()).collect()
}

#[test]
fn topology_counts() {
    let counts: Vec<usize> = (0..=5)
        .map(|n| enumerate_topologies(n).unwrap().count())
        .collect();
    assert_eq!(counts, vec![1, 1, 4, 29, 355, 6942]);
    assert!(enumerate_topologies(8).is_err());
}

#[test]
fn pre_hausdorff_topologies_are_counted_by_bell_numbers() {
    for n in 0..=5 {
        let filtered: BTreeSet<Vec<u64>> = enumerate_topologies(n)
            .unwrap()
            .filter(is_pre_hausdorff)
            .map(|s| opens_key(&s))
            .collect();
        let direct: BTreeSet<Vec<u64>> = enumerate_pre_hausdorff(n)
            .unwrap()
            .map(|s| opens_key(&s))
            .collect();
        assert_eq!(filtered, direct, "n = {n}");
        assert_eq!(bell_number(n), filtered.len() as u64);
    }
}

#[test]
fn bell_numbers_count_set_partitions() {
    for n in 0..=10 {
        assert_eq!(
            bell_number(n),
            fintop::enumerate::SetPartitions::new(n).count() as u64
        );
    }
    assert_eq!(bell_number(14).to_string(), "190899322");
    assert_eq!(bell_number(30).to_string(), "846749014511809332450147");
}

#[test]
fn partition_numbers_match_recursion() {
    for n in 0..=40 {
        assert_eq!(
            integer_partition_count(n),
            partitions_with_parts_at_most(n, n),
            "n = {n}"
        );
    }
    assert_eq!(integer_partition_count(14).to_string(), "135");
    assert_eq!(integer_partition_count(100).to_string(), "190569292");
}

#[test]
fn pre_hausdorff_classes_are_counted_by_partition_numbers() {
    for n in 0..=7 {
        let buckets: BTreeSet<Vec<usize>> = enumerate_pre_hausdorff(n)
            .unwrap()
            .map(|s| pre_hausdorff_invariant(&s).unwrap())
            .collect();
        assert_eq!(integer_partition_count(n), buckets.len() as u64);
        assert_eq!(
            fintop::count_pre_hausdorff_classes(n).unwrap(),
            buckets.len() as u64
        );
    }
}

#[test]
fn fast_path_agrees_with_search() {
    for n in 0..=5 {
        let spaces: Vec<FiniteSpace> = enumerate_pre_hausdorff(n).unwrap().collect();
        for a in &spaces {
            for b in &spaces {
                let (fast, path) = decide_homeomorphic(a, b).unwrap();
                assert_eq!(path, DecisionPath::Fast);
                assert_eq!(
                    fast,
                    homeomorphic_by_search(a, b).unwrap(),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }
}

#[test]
fn homeomorphism_classes_of_small_topologies() {
    let expected = [1, 1, 3, 9, 33];
    for (n, &classes) in expected.iter().enumerate() {
        let mut reps: Vec<FiniteSpace> = Vec::new();
        for s in enumerate_topologies(n).unwrap() {
            match reps.iter().find(|r| homeomorphic_by_search(r, &s).unwrap()) {
                Some(r) => {
                    let f = find_homeomorphism(r, &s).unwrap().unwrap();
                    assert!(is_homeomorphism(&f, r, &s).unwrap());
                }
                None => reps.push(s),
            }
        }
        assert_eq!(reps.len(), classes, "n = {n}");
    }
}

#[test]
fn mixed_queries_use_the_general_path() {
    let s = FiniteSpace::sierpinski();
    let i2 = FiniteSpace::indiscrete(2);
    assert_eq!(
        decide_homeomorphic(&s, &i2).unwrap(),
        (false, DecisionPath::General)
    );
    assert_eq!(
        decide_homeomorphic(&s, &s).unwrap(),
        (true, DecisionPath::General)
    );
    assert_eq!(
        decide_homeomorphic(&s, &FiniteSpace::discrete(3)).unwrap(),
        (false, DecisionPath::Cardinality)
    );
}

#[test]
fn census_totals_and_rows() {
    for n in 0..=4 {
        let t = census(n).unwrap();
        let listed = enumerate_topologies(n).unwrap().count() as u64;
        assert_eq!(t.total, listed);
        assert_eq!(t.rows.values().sum::<u64>(), listed);
        assert_eq!(t.count_where(|p| p.t02), bell_number(n).to_u64().unwrap());
    }
    let csv = census(2).unwrap().to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(fintop::census::CSV_HEADER));
    assert_eq!(lines.count(), census(2).unwrap().rows.len());
}

#[test]
fn census_is_independent_of_worker_count() {
    let reference = census_with(
        5,
        &CensusOptions {
            workers: Some(1),
            ..Default::default()
        },
    )
    .unwrap()
    .to_csv();
    for w in [2, 3, 8] {
        let csv = census_with(
            5,
            &CensusOptions {
                workers: Some(w),
                ..Default::default()
            },
        )
        .unwrap()
        .to_csv();
        assert_eq!(csv, reference);
    }
}

#[test]
fn census_limits() {
    assert!(matches!(census(7), Err(fintop::Error::SizeLimit { .. })));
    let opts = CensusOptions {
        allow_large: true,
        ..Default::default()
    };
    assert!(matches!(
        census_with(8, &opts),
        Err(fintop::Error::SizeLimit { .. })
    ));
}
