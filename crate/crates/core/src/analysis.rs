//! Monochromatic structure of a coloring: components, color-class statistics,
//! P4 detection, connected matchings and monochromatic bicliques.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::coloring::BipartiteColoring;
use crate::error::BoundError;

/// One monochromatic connected component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub color: usize,
    pub x_vertices: Vec<usize>,
    pub y_vertices: Vec<usize>,
    pub edge_count: usize,
}

impl ComponentSummary {
    pub fn size(&self) -> usize {
        self.x_vertices.len() + self.y_vertices.len()
    }

    pub fn is_singleton(&self) -> bool {
        self.edge_count == 0
    }

    /// True when every `X`–`Y` pair inside the component is an edge of it.
    pub fn is_complete(&self) -> bool {
        self.edge_count == self.x_vertices.len() * self.y_vertices.len()
    }
}

/// Per-color counts; `component_count` includes isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorClassStats {
    pub color: usize,
    pub component_count: usize,
    pub edge_count: usize,
    pub is_star_forest: bool,
}

/// A monochromatic path `x1 - y1 - x2 - y2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct P4Witness {
    pub color: usize,
    pub x1: usize,
    pub y1: usize,
    pub x2: usize,
    pub y2: usize,
}

/// A matching inside a single monochromatic component. `component_id` indexes
/// the listing of [`monochromatic_components`] without singletons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingWitness {
    pub color: usize,
    pub component_id: usize,
    pub edges: Vec<(usize, usize)>,
}

impl MatchingWitness {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

/// Union-find over `m + n` vertices; `X` vertex `x` is `x`, `Y` vertex `y` is `m + y`.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(len: usize) -> Self {
        Dsu { parent: (0..len).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

fn class_components(c: &BipartiteColoring, color: usize, include_singletons: bool) -> Vec<ComponentSummary> {
    let (m, n) = (c.m(), c.n());
    let mut dsu = Dsu::new(m + n);
    for x in 0..m {
        for y in 0..n {
            if c.color(x, y) == color {
                dsu.union(x, m + y);
            }
        }
    }
    // Roots are minimal members, so iterating vertices in order yields
    // components ordered by their smallest vertex.
    let mut slot = vec![usize::MAX; m + n];
    let mut comps: Vec<ComponentSummary> = Vec::new();
    for v in 0..m + n {
        let root = dsu.find(v);
        if slot[root] == usize::MAX {
            slot[root] = comps.len();
            comps.push(ComponentSummary { color, x_vertices: vec![], y_vertices: vec![], edge_count: 0 });
        }
        let comp = &mut comps[slot[root]];
        if v < m {
            comp.x_vertices.push(v);
        } else {
            comp.y_vertices.push(v - m);
        }
    }
    for x in 0..m {
        for y in 0..n {
            if c.color(x, y) == color {
                let root = dsu.find(x);
                comps[slot[root]].edge_count += 1;
            }
        }
    }
    if !include_singletons {
        comps.retain(|comp| comp.edge_count > 0);
    }
    comps.sort_by(|a, b| (&a.x_vertices, &a.y_vertices).cmp(&(&b.x_vertices, &b.y_vertices)));
    comps
}

/// All monochromatic components, ordered by color and then by vertex sets.
///
/// With `include_singletons`, every vertex that has no edge of a color is
/// reported as a trivial component of that color.
pub fn monochromatic_components(c: &BipartiteColoring, include_singletons: bool) -> Vec<ComponentSummary> {
    (0..c.r()).flat_map(|color| class_components(c, color, include_singletons)).collect()
}

/// The component of `color` containing vertex `v` on `side`.
pub fn component_containing(
    c: &BipartiteColoring,
    color: usize,
    side: crate::SideLabel,
    v: usize,
) -> ComponentSummary {
    class_components(c, color, true)
        .into_iter()
        .find(|comp| match side {
            crate::SideLabel::X => comp.x_vertices.binary_search(&v).is_ok(),
            crate::SideLabel::Y => comp.y_vertices.binary_search(&v).is_ok(),
        })
        .expect("every vertex lies in some component")
}

/// Whether `(xs, ys)` (sorted) is exactly one nontrivial component of `color`.
pub fn is_component(c: &BipartiteColoring, color: usize, xs: &[usize], ys: &[usize]) -> bool {
    if color >= c.r() || xs.is_empty() || ys.is_empty() {
        return false;
    }
    let comp = component_containing(c, color, crate::SideLabel::X, xs[0]);
    comp.x_vertices == xs && comp.y_vertices == ys
}

fn largest_order(a: &ComponentSummary, b: &ComponentSummary) -> Ordering {
    b.size()
        .cmp(&a.size())
        .then(a.color.cmp(&b.color))
        .then_with(|| (&a.x_vertices, &a.y_vertices).cmp(&(&b.x_vertices, &b.y_vertices)))
}

/// A component with the most vertices; ties go to the smallest color, then the
/// lexicographically smallest vertex sets.
pub fn largest_component(c: &BipartiteColoring) -> ComponentSummary {
    monochromatic_components(c, false)
        .into_iter()
        .min_by(largest_order)
        .expect("a coloring has at least one edge")
}

/// A monochromatic P4, if any color class contains one.
pub fn find_p4(c: &BipartiteColoring) -> Option<P4Witness> {
    let (m, n, r) = (c.m(), c.n(), c.r());
    let mut deg_x = vec![0usize; m * r];
    let mut deg_y = vec![0usize; n * r];
    for x in 0..m {
        for y in 0..n {
            let col = c.color(x, y);
            deg_x[x * r + col] += 1;
            deg_y[y * r + col] += 1;
        }
    }
    // A class has a P4 exactly when some edge joins two vertices of degree >= 2.
    for color in 0..r {
        for x2 in 0..m {
            if deg_x[x2 * r + color] < 2 {
                continue;
            }
            for y1 in 0..n {
                if c.color(x2, y1) != color || deg_y[y1 * r + color] < 2 {
                    continue;
                }
                let x1 = (0..m).find(|&x| x != x2 && c.color(x, y1) == color).expect("degree >= 2");
                let y2 = (0..n).find(|&y| y != y1 && c.color(x2, y) == color).expect("degree >= 2");
                return Some(P4Witness { color, x1, y1, x2, y2 });
            }
        }
    }
    None
}

/// Checks a P4 witness against the coloring; returns the first failed invariant.
pub fn check_p4(c: &BipartiteColoring, w: &P4Witness) -> Result<(), &'static str> {
    if w.color >= c.r() {
        return Err("color in range");
    }
    if w.x1 >= c.m() || w.x2 >= c.m() || w.y1 >= c.n() || w.y2 >= c.n() {
        return Err("vertices in range");
    }
    if w.x1 == w.x2 || w.y1 == w.y2 {
        return Err("distinct vertices");
    }
    let edges = [(w.x1, w.y1), (w.x2, w.y1), (w.x2, w.y2)];
    if edges.iter().any(|&(x, y)| c.color(x, y) != w.color) {
        return Err("edges have the witness color");
    }
    Ok(())
}

/// Component and edge counts per color, with star-forest flags.
///
/// The star-forest test here is structural (every component is a tree with at
/// most one vertex of degree above one) and does not go through [`find_p4`].
pub fn color_class_stats(c: &BipartiteColoring) -> Vec<ColorClassStats> {
    let (m, n) = (c.m(), c.n());
    (0..c.r())
        .map(|color| {
            let comps = class_components(c, color, true);
            let mut deg = vec![0usize; m + n];
            for x in 0..m {
                for y in 0..n {
                    if c.color(x, y) == color {
                        deg[x] += 1;
                        deg[m + y] += 1;
                    }
                }
            }
            let is_star_forest = comps.iter().all(|comp| {
                let hubs = comp.x_vertices.iter().filter(|&&x| deg[x] > 1).count()
                    + comp.y_vertices.iter().filter(|&&y| deg[m + y] > 1).count();
                comp.edge_count + 1 == comp.size() && hubs <= 1
            });
            ColorClassStats {
                color,
                component_count: comps.len(),
                edge_count: comps.iter().map(|comp| comp.edge_count).sum(),
                is_star_forest,
            }
        })
        .collect()
}

/// Maximum matching of a bipartite graph given as adjacency lists from the
/// left side; returns `(left, right)` pairs. Kuhn's augmenting paths.
pub(crate) fn maximum_matching(adj: &[Vec<usize>], right_len: usize) -> Vec<(usize, usize)> {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if mate[v].is_none_or(|w| augment(w, adj, seen, mate)) {
                mate[v] = Some(u);
                return true;
            }
        }
        false
    }

    let mut mate: Vec<Option<usize>> = vec![None; right_len];
    for u in 0..adj.len() {
        let mut seen = vec![false; right_len];
        augment(u, adj, &mut seen, &mut mate);
    }
    let mut pairs: Vec<(usize, usize)> = mate.iter().enumerate().filter_map(|(v, u)| u.map(|u| (u, v))).collect();
    pairs.sort_unstable();
    pairs
}

/// Maximum matching restricted to one component's edges, in original indices.
pub fn component_matching(c: &BipartiteColoring, comp: &ComponentSummary) -> Vec<(usize, usize)> {
    let adj: Vec<Vec<usize>> = comp
        .x_vertices
        .iter()
        .map(|&x| (0..comp.y_vertices.len()).filter(|&j| c.color(x, comp.y_vertices[j]) == comp.color).collect())
        .collect();
    maximum_matching(&adj, comp.y_vertices.len())
        .into_iter()
        .map(|(i, j)| (comp.x_vertices[i], comp.y_vertices[j]))
        .collect()
}

/// A largest monochromatic connected matching; ties go to the smallest color,
/// then the smallest component id.
pub fn max_connected_matching(c: &BipartiteColoring) -> MatchingWitness {
    let mut best: Option<MatchingWitness> = None;
    for (id, comp) in monochromatic_components(c, false).iter().enumerate() {
        if best.as_ref().is_some_and(|b| b.size() >= comp.x_vertices.len().min(comp.y_vertices.len())) {
            continue;
        }
        let edges = component_matching(c, comp);
        if best.as_ref().is_none_or(|b| edges.len() > b.size()) {
            best = Some(MatchingWitness { color: comp.color, component_id: id, edges });
        }
    }
    best.expect("a coloring has at least one edge")
}

/// True iff every nontrivial monochromatic component is a complete biclique.
pub fn is_biequivalence(c: &BipartiteColoring) -> bool {
    monochromatic_components(c, false).iter().all(ComponentSummary::is_complete)
}

/// Among components that are complete bicliques, one maximizing the smaller
/// side, then the total size, then with the smallest color.
pub fn largest_mono_biclique(c: &BipartiteColoring) -> Option<ComponentSummary> {
    monochromatic_components(c, false).into_iter().filter(ComponentSummary::is_complete).min_by(|a, b| {
        let key = |s: &ComponentSummary| (s.x_vertices.len().min(s.y_vertices.len()), s.size());
        key(b).cmp(&key(a)).then(a.color.cmp(&b.color))
    })
}

/// Comparisons below count as holding only when the gap exceeds this.
pub const BOUND_TOLERANCE: f64 = 1e-12;

/// The connected-matching fraction obtained from the majority color class and
/// a long path in a dense balanced bipartite graph, with the sandwich checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchingBound {
    pub r: usize,
    pub n: usize,
    /// `1 - sqrt(1 - 2/r)`: guaranteed path length as a fraction of `n`.
    pub path_fraction: f64,
    /// Half of `path_fraction`: guaranteed connected matching as a fraction of `n`.
    pub value: f64,
    /// `value * n`.
    pub matching_size: f64,
    /// `1/(2r - 1)`.
    pub lower: f64,
    /// `1/(2r - 4)`, only for `r >= 4`.
    pub upper: Option<f64>,
    pub lower_holds: bool,
    pub upper_holds: Option<bool>,
}

pub fn grs_matching_bound(r: usize, n: usize) -> Result<MatchingBound, BoundError> {
    if r < 3 {
        return Err(BoundError::TooFewColors(r));
    }
    if n == 0 {
        return Err(BoundError::EmptySide);
    }
    let x = 2.0 / r as f64;
    // 1 - sqrt(1 - x) without cancellation.
    let path_fraction = x / (1.0 + (1.0 - x).sqrt());
    let value = path_fraction / 2.0;
    let lower = 1.0 / (2 * r - 1) as f64;
    let upper = (r >= 4).then(|| 1.0 / (2 * r - 4) as f64);
    Ok(MatchingBound {
        r,
        n,
        path_fraction,
        value,
        matching_size: value * n as f64,
        lower,
        upper,
        lower_holds: value - lower > BOUND_TOLERANCE,
        upper_holds: upper.map(|u| u - value > BOUND_TOLERANCE),
    })
}
