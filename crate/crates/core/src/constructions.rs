//! Explicit colorings: the P4-free 4-coloring of `K_{5,5}`, the star coloring
//! of `K_{2r-4}` and its bipartite double, extremal P4-free colorings for
//! every `r`, blow-ups, and the bi-equivalence sharpness example.

use serde::{Deserialize, Serialize};

use crate::coloring::{BipartiteColoring, CompleteColoring};
use crate::error::ConstructionError;

/// Rows `A1..A5`, columns `B1..B5`.
const FIGURE1_ROWS: [[u8; 5]; 5] = [
    [0, 2, 2, 1, 3],
    [0, 1, 3, 3, 2],
    [2, 1, 0, 2, 3],
    [3, 3, 0, 1, 2],
    [1, 0, 1, 0, 3],
];

/// The P4-free 4-coloring of `K_{5,5}`. Colors 0, 1, 2 are three paths on
/// three vertices each; color 3 is two such paths plus the star `B5; A1 A3 A5`.
pub fn figure1_k55() -> BipartiteColoring {
    BipartiteColoring::from_cells(5, 5, 4, FIGURE1_ROWS.iter().flatten().copied().collect())
        .expect("static matrix is valid")
}

/// The 1-factorization of `K_{3,3}`: color `(y - x) mod 3`.
pub fn one_factorization_k33() -> BipartiteColoring {
    BipartiteColoring::from_fn(3, 3, 3, |x, y| (y + 3 - x) % 3).expect("valid")
}

/// `(r - 1)`-coloring of `K_{2r-4}` in which color `i < r - 2` is two disjoint
/// stars with `r - 3` leaves each and color `r - 2` is a perfect matching.
///
/// Vertices are `X_1..X_{2r-4}` stored 0-based; indices wrap mod `2r - 4`.
pub fn complete_star_coloring(r: usize) -> Result<CompleteColoring, ConstructionError> {
    if r < 4 {
        return Err(ConstructionError::InvalidParameters(format!("the star coloring needs r >= 4 (got {r})")));
    }
    let t = 2 * r - 4;
    // 1-based name -> 0-based slot; residue 0 is X_t.
    let slot = |k: usize| (k - 1) % t;
    let mut matrix: Vec<Vec<Option<usize>>> = vec![vec![None; t]; t];
    let mut put = |a: usize, b: usize, color: usize| -> Result<(), ConstructionError> {
        let (a, b) = (slot(a), slot(b));
        if a == b || matrix[a][b].is_some() {
            return Err(ConstructionError::Inconsistent(format!("edge X{}X{} colored twice", a + 1, b + 1)));
        }
        matrix[a][b] = Some(color);
        matrix[b][a] = Some(color);
        Ok(())
    };
    for i in 1..=r - 2 {
        for l in 1..=r - 3 {
            put(i, i + l, i - 1)?;
            put(i + r - 2, i + r - 2 + l, i - 1)?;
        }
        put(i, i + r - 2, r - 2)?;
    }
    let rows = (0..t)
        .map(|a| {
            (0..t)
                .map(|b| match (a == b, matrix[a][b]) {
                    (true, _) => Ok(0),
                    (false, Some(c)) => Ok(c as i64),
                    (false, None) => {
                        Err(ConstructionError::Inconsistent(format!("edge X{}X{} left uncolored", a + 1, b + 1)))
                    }
                })
                .collect::<Result<Vec<i64>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CompleteColoring::new(t, r - 1, &rows)?)
}

/// `K_{t,t}` from `K_t`: `A_i B_j` (`i != j`) takes the color of `X_i X_j` and
/// the 1-factor `A_i B_i` takes the new color `s`.
pub fn bipartite_double(g: &CompleteColoring) -> BipartiteColoring {
    let s = g.s();
    BipartiteColoring::from_fn(g.t(), g.t(), s + 1, |i, j| if i == j { s } else { g.color(i, j) })
        .expect("colors are below s + 1")
}

/// A P4-free `r`-coloring of `K_{l,l}` with `l` the largest size known to
/// admit one: 1, 2, 3, 5 for `r = 1..4` and `2r - 4` from `r = 5` on.
pub fn extremal_p4free(r: usize) -> Result<BipartiteColoring, ConstructionError> {
    Ok(match r {
        0 => return Err(ConstructionError::InvalidParameters("r must be positive".into())),
        1 => BipartiteColoring::uniform(1, 1, 1, 0)?,
        2 => BipartiteColoring::from_fn(2, 2, 2, |x, y| usize::from(x != y))?,
        3 => one_factorization_k33(),
        4 => figure1_k55(),
        _ => bipartite_double(&complete_star_coloring(r)?),
    })
}

/// Part sizes of a blow-up; `x_sizes[i]` copies of `X`-vertex `i`, likewise for `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowUpSpec {
    pub x_sizes: Vec<usize>,
    pub y_sizes: Vec<usize>,
    pub base: BipartiteColoring,
}

impl BlowUpSpec {
    pub fn uniform(base: BipartiteColoring, k: usize) -> Self {
        BlowUpSpec { x_sizes: vec![k; base.m()], y_sizes: vec![k; base.n()], base }
    }
}

/// A blown-up coloring with the base vertex behind every output vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowUp {
    pub coloring: BipartiteColoring,
    pub x_origin: Vec<usize>,
    pub y_origin: Vec<usize>,
}

pub fn blow_up(spec: &BlowUpSpec) -> Result<BlowUp, ConstructionError> {
    if spec.x_sizes.len() != spec.base.m() || spec.y_sizes.len() != spec.base.n() {
        return Err(ConstructionError::InvalidParameters(format!(
            "expected {} x-sizes and {} y-sizes, got {} and {}",
            spec.base.m(),
            spec.base.n(),
            spec.x_sizes.len(),
            spec.y_sizes.len()
        )));
    }
    if spec.x_sizes.iter().chain(&spec.y_sizes).any(|&k| k == 0) {
        return Err(ConstructionError::InvalidParameters("blow-up sizes must be positive".into()));
    }
    let expand = |sizes: &[usize]| -> Vec<usize> {
        sizes.iter().enumerate().flat_map(|(v, &k)| std::iter::repeat_n(v, k)).collect()
    };
    let x_origin = expand(&spec.x_sizes);
    let y_origin = expand(&spec.y_sizes);
    let coloring = BipartiteColoring::from_fn(x_origin.len(), y_origin.len(), spec.base.r(), |x, y| {
        spec.base.color(x_origin[x], y_origin[y])
    })?;
    Ok(BlowUp { coloring, x_origin, y_origin })
}

/// Splits `total` into three parts as equal as possible, largest first.
pub fn near_equal_thirds(total: usize) -> [usize; 3] {
    let (q, rem) = (total / 3, total % 3);
    [q + usize::from(rem > 0), q + usize::from(rem > 1), q]
}

/// Blow-up of the `K_{3,3}` 1-factorization into near-equal parts: a
/// bi-equivalence 3-coloring of `K_{m,n}` whose largest monochromatic
/// biclique is `ceil(m/3) x ceil(n/3)`.
pub fn biequivalence_sharpness(m: usize, n: usize) -> Result<BlowUp, ConstructionError> {
    if m < 3 || n < 3 {
        return Err(ConstructionError::InvalidParameters(format!("need m, n >= 3 (got {m}, {n})")));
    }
    blow_up(&BlowUpSpec {
        x_sizes: near_equal_thirds(m).to_vec(),
        y_sizes: near_equal_thirds(n).to_vec(),
        base: one_factorization_k33(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{color_class_stats, find_p4};

    #[test]
    fn figure1_spot_checks() {
        let c = figure1_k55();
        assert_eq!(c.color(0, 0), 0); // A1B1
        assert_eq!(c.color(4, 4), 3); // B5A5
        assert_eq!(c.color_counts(), vec![6, 6, 6, 7]);
        assert_eq!(find_p4(&c), None);
    }

    #[test]
    fn star_coloring_r5() {
        let g = complete_star_coloring(5).unwrap();
        assert_eq!((g.t(), g.s()), (6, 4));
        // matching {X1X4, X2X5, X3X6}
        assert_eq!(g.class_edges(3), vec![(0, 3), (1, 4), (2, 5)]);
        // class 0: stars X1; X2 X3 and X4; X5 X6
        assert_eq!(g.class_edges(0), vec![(0, 1), (0, 2), (3, 4), (3, 5)]);
        for c in 0..3 {
            assert_eq!(g.class_edges(c).len(), 4);
        }
    }

    #[test]
    fn star_coloring_degree_audit() {
        for r in 4..=12 {
            let g = complete_star_coloring(r).unwrap();
            let t = g.t();
            for color in 0..g.s() {
                let edges = g.class_edges(color);
                let mut deg = vec![0usize; t];
                for &(a, b) in &edges {
                    deg[a] += 1;
                    deg[b] += 1;
                }
                if color == r - 2 {
                    assert_eq!(edges.len(), t / 2);
                    assert!(deg.iter().all(|&d| d == 1));
                } else {
                    // two centers of degree r-3, every other vertex a leaf
                    assert_eq!(edges.len(), 2 * (r - 3));
                    let mut sorted = deg.clone();
                    sorted.sort_unstable();
                    let leaves = sorted.iter().filter(|&&d| d == 1).count();
                    if r > 4 {
                        assert_eq!(sorted[t - 2..], [r - 3, r - 3]);
                        assert_eq!(leaves, t - 2);
                    } else {
                        assert_eq!(leaves, t);
                    }
                }
            }
        }
        assert!(complete_star_coloring(3).is_err());
    }

    #[test]
    fn r6_matching_has_four_edges() {
        let g = complete_star_coloring(6).unwrap();
        assert_eq!(g.t(), 8);
        assert_eq!(g.class_edges(4), vec![(0, 4), (1, 5), (2, 6), (3, 7)]);
    }

    #[test]
    fn double_of_k2() {
        let g = CompleteColoring::new(2, 1, &[vec![0, 0], vec![0, 0]]).unwrap();
        let d = bipartite_double(&g);
        assert_eq!(d.rows(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(find_p4(&d), None);
    }

    #[test]
    fn extremal_sizes_and_p4_freeness() {
        let sizes = [1, 2, 3, 5, 6, 8, 10, 12, 14, 16];
        for (r, &size) in (1..=10).zip(&sizes) {
            let c = extremal_p4free(r).unwrap();
            assert_eq!((c.m(), c.n(), c.r()), (size, size, r));
            assert_eq!(find_p4(&c), None, "r = {r}");
            assert!(color_class_stats(&c).iter().all(|s| s.is_star_forest));
        }
        assert_eq!(extremal_p4free(2).unwrap().rows(), vec![vec![0, 1], vec![1, 0]]);
        assert!(extremal_p4free(0).is_err());
    }

    #[test]
    fn blow_up_identity_and_errors() {
        let base = figure1_k55();
        assert_eq!(blow_up(&BlowUpSpec::uniform(base.clone(), 1)).unwrap().coloring, base);
        let bad = BlowUpSpec { x_sizes: vec![1; 4], y_sizes: vec![1; 5], base: base.clone() };
        assert!(blow_up(&bad).is_err());
        let zero = BlowUpSpec { x_sizes: vec![1, 0, 1, 1, 1], y_sizes: vec![1; 5], base };
        assert!(blow_up(&zero).is_err());
    }

    #[test]
    fn blow_up_reintroduces_p4() {
        let b = blow_up(&BlowUpSpec::uniform(extremal_p4free(4).unwrap(), 2)).unwrap();
        assert!(find_p4(&b.coloring).is_some());
        assert_eq!(b.x_origin, vec![0, 0, 1, 1, 2, 2, 3, 3, 4, 4]);
    }

    #[test]
    fn thirds() {
        assert_eq!(near_equal_thirds(4), [2, 1, 1]);
        assert_eq!(near_equal_thirds(5), [2, 2, 1]);
        assert_eq!(near_equal_thirds(9), [3, 3, 3]);
        assert_eq!(near_equal_thirds(10), [4, 3, 3]);
        assert_eq!(biequivalence_sharpness(3, 3).unwrap().coloring, one_factorization_k33());
        assert!(biequivalence_sharpness(2, 5).is_err());
    }
}
