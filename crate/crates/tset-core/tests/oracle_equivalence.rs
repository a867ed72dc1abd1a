//! The fast library paths against the definition-shaped reference
//! implementations in `tset_core::oracles`, compared exhaustively.

use tset_core::oracles;
use tset_core::{enumerate_codes, enumerate_tsets, FiniteTSet, Subset, TopologyKind};

fn all_tsets(n: usize) -> impl Iterator<Item = FiniteTSet> {
    enumerate_tsets(n).unwrap()
}

#[test]
fn finitary_fast_path_matches_the_search() {
    for n in 1..=3 {
        for t in all_tsets(n) {
            for a in Subset::all(n) {
                assert_eq!(
                    t.is_finitary(&a).unwrap(),
                    oracles::is_finitary_definitional(&t, &a).unwrap(),
                    "n={n} relation={} subset={:?}",
                    t.to_json_string(),
                    t.subset_labels(&a),
                );
            }
        }
    }
}

#[test]
fn strong_compactness_matches_the_search_under_both_topologies() {
    for n in 1..=3 {
        for t in all_tsets(n) {
            for kind in [TopologyKind::Alexandroff, TopologyKind::ScottStar] {
                let tau = kind.build(&t);
                for a in Subset::all(n) {
                    assert_eq!(
                        t.is_strongly_compact(&a, &tau).unwrap(),
                        oracles::is_strongly_compact_definitional(&t, &a, &tau).unwrap(),
                        "n={n} topology={} relation={} subset={:?}",
                        kind.name(),
                        t.to_json_string(),
                        t.subset_labels(&a),
                    );
                }
            }
        }
    }
}

#[test]
fn abstract_base_fast_path_matches_all_subsets() {
    for n in 1..=4 {
        for t in all_tsets(n) {
            assert_eq!(
                t.classify().abstract_base,
                oracles::is_abstract_base_all_subsets(&t),
                "n={n} relation={}",
                t.to_json_string(),
            );
        }
    }
}

#[test]
fn enumeration_matches_the_bruteforce_filter() {
    for n in 1..=4 {
        assert_eq!(
            enumerate_codes(n).unwrap(),
            oracles::transitive_relation_codes_bruteforce(n),
            "n={n}"
        );
    }
}

#[test]
fn enumeration_counts_are_frozen() {
    assert_eq!(enumerate_codes(1).unwrap().len(), 2);
    assert_eq!(enumerate_codes(2).unwrap().len(), 13);
    assert_eq!(enumerate_codes(3).unwrap().len(), 171);
    assert_eq!(enumerate_codes(4).unwrap().len(), 3994);
}
