use quasitree::enumerate::{class_forms, Limits};
use quasitree::formats::{decode_graph6_lines, encode_graph6};
use quasitree::verify::{sweep, SweepConfig};
use quasitree::{enumerate_class, evaluate, BoundId, FamilySpec, GraphClass, Status};

#[test]
fn diameter_is_at_most_n_minus_one_with_equality_only_for_paths() {
    for n in 1..=7 {
        for g in enumerate_class(n, GraphClass::Connected).unwrap() {
            let d = g.diameter().unwrap();
            assert!(d < n);
            let path = g.is_tree() && g.degree_sequence().iter().all(|&x| x <= 2);
            assert_eq!(d + 1 == n, path, "{g:?}");
        }
    }
}

#[test]
fn witnesses_leave_trees_and_bound_the_edge_count() {
    for n in 3..=8 {
        for g in enumerate_class(n, GraphClass::QuasiTree).unwrap() {
            let w = g.quasi_tree_witnesses().unwrap();
            assert!(!w.is_empty());
            for &v in w.vertices() {
                assert!(g.delete_vertex(v).unwrap().is_tree());
                assert!(g.edge_count() <= n - 2 + g.degree(v).unwrap());
            }
        }
    }
}

#[test]
fn quasi_tree_bounds_over_unicyclic_quasi_trees() {
    // the unicyclic quasi-trees break the bounds only at the two known graphs
    let limits = Limits::default();
    let mut offenders = Vec::new();
    for n in 3..=10 {
        for f in class_forms(n, GraphClass::Unicyclic, &limits).unwrap() {
            let g = f.to_graph();
            if !g.is_quasi_tree() {
                continue;
            }
            let v = evaluate(&g, &BoundId::QUASI_TREE).unwrap();
            if v.any(Status::Violated) {
                offenders.push(f.to_string());
            }
        }
    }
    let expected: Vec<String> = [FamilySpec::U531, FamilySpec::U641]
        .iter()
        .map(|s| {
            quasitree::canonical_form(&s.build().unwrap())
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(offenders, expected);
}

#[test]
fn conjecture_sweep_over_connected_graphs_is_clean() {
    let report = quasitree::verify_conjecture1(4, 7).unwrap();
    assert_eq!(report.violation_count(), 0);
    assert_eq!(report.total_graphs(), 6 + 21 + 112 + 853);
}

#[test]
fn sweep_equalities_reverify() {
    let report = sweep(&SweepConfig::new(
        GraphClass::QuasiTree,
        3,
        8,
        &BoundId::QUASI_TREE,
    ))
    .unwrap();
    for o in &report.orders {
        for e in o.violations.iter().chain(&o.equalities) {
            assert!(e.reverify().unwrap(), "{}", e.graph6);
        }
    }
}

#[test]
fn enumerated_listing_round_trips_through_graph6_lines() {
    let stream = enumerate_class(7, GraphClass::QuasiTree).unwrap();
    let text: String = stream
        .clone()
        .map(|g| encode_graph6(&g).unwrap() + "\n")
        .collect();
    let back = decode_graph6_lines(&text).unwrap();
    assert_eq!(back.len(), 144);
    for (a, b) in back.iter().zip(stream) {
        assert_eq!(a, &b);
    }
}
