mod common;

use bipramsey::analysis;
use bipramsey::constructions;
use bipramsey::search::{self, canonical_form, SearchOptions, SearchStatus, SymmetryMode, UpperCertificate};
use bipramsey::{BipartiteColoring, SearchError};

fn modes() -> [SearchOptions; 2] {
    [SearchOptions::with_symmetry(SymmetryMode::Colors), SearchOptions::with_symmetry(SymmetryMode::Full)]
}

#[test]
fn small_existence_matches_enumeration() {
    for &(m, n, r) in &[(2, 2, 1), (2, 2, 2), (2, 3, 2), (3, 3, 2), (3, 3, 3), (2, 4, 2), (1, 5, 1), (3, 4, 2)] {
        let brute = common::all_colorings(m, n, r).any(|cells| common::is_p4_free(m, n, &cells));
        for opts in modes() {
            let outcome = search::exists_p4free(m, n, r, &opts).unwrap();
            assert_eq!(outcome.is_found(), brute, "({m},{n},{r}) {}", opts.symmetry);
            if let Some(w) = &outcome.witness {
                assert!(common::is_p4_free(m, n, w.cells()));
            }
        }
    }
}

#[test]
fn iso_count_2_2_2_matches_brute_force() {
    let (_, classes) = common::brute_p4free_classes(2, 2, 2);
    for opts in modes() {
        assert_eq!(search::count_p4free_iso_classes(2, 2, 2, &opts).unwrap().count, classes);
    }
}

#[test]
fn iso_counts_match_brute_force_on_small_sizes() {
    for &(m, n, r) in &[(1, 1, 1), (2, 3, 2), (3, 3, 2), (3, 3, 3), (2, 4, 3), (3, 2, 3)] {
        let (_, classes) = common::brute_p4free_classes(m, n, r);
        for opts in modes() {
            assert_eq!(search::count_p4free_iso_classes(m, n, r, &opts).unwrap().count, classes, "({m},{n},{r})");
        }
    }
}

#[test]
fn named_instances() {
    let opts = SearchOptions::default();
    assert!(search::exists_p4free(3, 3, 3, &opts).unwrap().is_found());
    assert_eq!(search::exists_p4free(4, 4, 3, &opts).unwrap().status, SearchStatus::Exhausted);
    assert!(search::exists_p4free(5, 5, 4, &opts).unwrap().is_found());
    assert_eq!(search::exists_p4free(5, 6, 4, &opts).unwrap().status, SearchStatus::Exhausted);
    assert_eq!(search::exists_p4free(6, 6, 4, &opts).unwrap().status, SearchStatus::Exhausted);
}

#[test]
fn node_counts_are_deterministic() {
    let opts = SearchOptions::default();
    let a = search::exists_p4free(5, 6, 4, &opts).unwrap();
    let b = search::exists_p4free(5, 6, 4, &opts).unwrap();
    assert_eq!(a.nodes_explored, b.nodes_explored);
}

#[test]
fn parallel_workers_agree() {
    let opts = SearchOptions { workers: 3, ..SearchOptions::default() };
    assert_eq!(search::exists_p4free(5, 6, 4, &opts).unwrap().status, SearchStatus::Exhausted);
    assert!(search::exists_p4free(5, 5, 4, &opts).unwrap().is_found());
    let serial = search::count_p4free_iso_classes(3, 4, 3, &SearchOptions::default()).unwrap();
    let parallel = search::count_p4free_iso_classes(3, 4, 3, &opts).unwrap();
    assert_eq!(serial.classes, parallel.classes);
    assert_eq!(serial.nodes_explored, parallel.nodes_explored);
}

#[test]
fn budget_is_never_exhaustion() {
    let opts = SearchOptions { budget: Some(100), ..SearchOptions::default() };
    match search::exists_p4free(6, 6, 4, &opts) {
        Err(SearchError::BudgetExceeded { budget, nodes }) => assert!(nodes > budget),
        other => panic!("expected a budget error, got {other:?}"),
    }
}

#[test]
fn ramsey_values_for_small_r() {
    for (r, f) in [(1, 2), (2, 3), (3, 4), (4, 6)] {
        let report = search::bipartite_ramsey_f(r, &SearchOptions::default()).unwrap();
        assert_eq!(report.value, Some(f));
        assert_eq!(report.witness.m(), f - 1);
        assert!(analysis::find_p4(&report.witness).is_none());
        assert!(matches!(report.upper, UpperCertificate::Exhausted { size, .. } if size == f));
    }
}

#[test]
fn ramsey_budget_falls_back_to_construction() {
    let opts = SearchOptions { budget: Some(2_000), ..SearchOptions::default() };
    let report = search::bipartite_ramsey_f(5, &opts).unwrap();
    assert_eq!(report.value, None);
    assert!(matches!(report.upper, UpperCertificate::Unknown { .. }));
    assert!(report.lower_bound >= 7);
    assert_eq!(report.witness.m(), report.lower_bound - 1);
    assert!(analysis::find_p4(&report.witness).is_none());
}

#[test]
fn star_arboricity_values() {
    let opts = SearchOptions::default();
    for ((m, n), st) in [((1, 1), 1), ((3, 3), 3), ((5, 5), 4), ((2, 7), 2), ((4, 4), 4)] {
        let result = search::star_arboricity(m, n, &opts).unwrap();
        assert_eq!(result.value, st, "({m},{n})");
        assert!(analysis::find_p4(&result.witness).is_none());
        if st > 1 {
            assert_eq!(result.exhaustion.unwrap().status, SearchStatus::Exhausted);
        }
    }
}

#[test]
fn monotone_in_sizes_and_colors() {
    let opts = SearchOptions::default();
    let found = |m, n, r| search::exists_p4free(m, n, r, &opts).unwrap().is_found();
    for r in 1..=4 {
        for m in 1..=5 {
            for n in m..=5 {
                if found(m, n, r) {
                    assert!(found(m, n, r + 1));
                    if m > 1 {
                        assert!(found(m - 1, n, r));
                    }
                    if n > 1 {
                        assert!(found(m, n - 1, r));
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_form_of_relabeled_figure1() {
    let f = constructions::figure1_k55();
    let relabeled = BipartiteColoring::from_fn(5, 5, 4, |x, y| 3 - f.color(x, y)).unwrap();
    assert_eq!(canonical_form(&f).unwrap(), canonical_form(&relabeled).unwrap());
}

/// The search finds two isomorphism classes of P4-free 4-colorings of
/// `K_{5,5}`. Both are checked here against the brute-force canonical form
/// over the whole group, and a group invariant tells them apart.
#[test]
fn k55_four_color_classes() {
    let count = search::count_p4free_iso_classes(5, 5, 4, &SearchOptions::default()).unwrap();
    assert_eq!(count.count, 2);
    let figure1 = constructions::figure1_k55();
    let brute_figure1 = common::brute_canonical(5, 5, figure1.cells());
    let brute: Vec<Vec<u8>> = count.classes.iter().map(|c| common::brute_canonical(5, 5, c.cells())).collect();
    assert_ne!(brute[0], brute[1]);
    assert_eq!(brute.iter().filter(|b| **b == brute_figure1).count(), 1);
    for class in &count.classes {
        assert!(common::is_p4_free(5, 5, class.cells()));
        assert_eq!(canonical_form(class).unwrap().coloring(), class);
    }
    // 4-cycles made of two monochromatic paths of length two in different
    // colors, counted for both sides; unchanged by every group element.
    let paired_rows = |c: &BipartiteColoring| {
        let mut count = 0;
        for x1 in 0..5 {
            for x2 in x1 + 1..5 {
                for y1 in 0..5 {
                    for y2 in y1 + 1..5 {
                        let (a, b) = (c.color(x1, y1), c.color(x2, y1));
                        let rows = a == c.color(x1, y2) && b == c.color(x2, y2) && a != b;
                        let (a, b) = (c.color(x1, y1), c.color(x1, y2));
                        let cols = a == c.color(x2, y1) && b == c.color(x2, y2) && a != b;
                        count += usize::from(rows) + usize::from(cols);
                    }
                }
            }
        }
        count
    };
    let mut invariants: Vec<usize> = count.classes.iter().map(paired_rows).collect();
    invariants.sort();
    assert_eq!(invariants[0], paired_rows(&figure1));
    assert_ne!(invariants[0], invariants[1]);
}

#[test]
fn for_each_visits_only_p4_free_colorings() {
    let mut seen = 0;
    search::for_each_p4free(3, 3, 3, &SearchOptions::with_symmetry(SymmetryMode::Colors), |c| {
        assert!(analysis::find_p4(c).is_none());
        seen += 1;
        false
    })
    .unwrap();
    let brute = common::all_colorings(3, 3, 3)
        .filter(|cells| common::is_p4_free(3, 3, cells) && common::first_use_labels(cells) == *cells)
        .count();
    assert_eq!(seen, brute);
}
