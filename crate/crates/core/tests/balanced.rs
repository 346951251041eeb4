mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bipramsey::balanced;
use bipramsey::constructions::{self, BlowUpSpec};
use bipramsey::BipartiteColoring;

fn check(c: &BipartiteColoring) {
    let w = balanced::find_balanced_component(c).unwrap();
    balanced::verify_balanced(c, &w).unwrap();
    assert!(c.r() * w.x_set.len() >= c.m() && c.r() * w.y_set.len() >= c.n());
    let raw = common::Raw { m: c.m(), n: c.n(), cells: c.cells().to_vec() };
    assert!(common::components(&raw, c.r()).into_iter().any(|(color, xs, ys, _)| {
        color == w.color && xs.into_iter().eq(w.x_set.iter().copied()) && ys.into_iter().eq(w.y_set.iter().copied())
    }));
    assert!(balanced::brute_force_balanced(c).satisfied);
}

#[test]
fn every_three_coloring_of_k33() {
    for cells in common::all_colorings(3, 3, 3) {
        check(&BipartiteColoring::from_cells(3, 3, 3, cells).unwrap());
    }
}

#[test]
fn every_two_coloring_of_k24_and_k42() {
    for cells in common::all_colorings(2, 4, 2) {
        let c = BipartiteColoring::from_cells(2, 4, 2, cells).unwrap();
        check(&c);
        check(&c.transpose());
    }
}

#[test]
fn sampled_three_colorings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for &(m, n) in &[(6, 6), (5, 9), (9, 4)] {
        for _ in 0..300 {
            check(&BipartiteColoring::from_cells(m, n, 3, common::random_cells(&mut rng, m, n, 3)).unwrap());
        }
    }
}

#[test]
fn four_colors_can_fail_the_bar() {
    let base = constructions::extremal_p4free(4).unwrap();
    for k in 1..=3 {
        let c = constructions::blow_up(&BlowUpSpec::uniform(base.clone(), k)).unwrap().coloring;
        let scan = balanced::brute_force_balanced(&c);
        assert!(!scan.satisfied);
        assert_eq!(scan.max_min_side, k);
        assert!(balanced::find_balanced_component(&c).is_err());
    }
}
