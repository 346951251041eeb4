//! Balanced monochromatic components for `r <= 3`.
//!
//! [`find_balanced_component`] returns a component meeting `X` in at least
//! `m/r` and `Y` in at least `n/r` vertices, built by the constructive case
//! analysis: start from a largest component `A1`; if it is lopsided, the
//! biclique between its large side and the complement of its small side
//! avoids `A1`'s color, and for three colors the two-color argument is rerun
//! inside that biclique. Every step is recorded in a trace that
//! [`replay_trace`] re-checks against the coloring.
//!
//! All thresholds are compared in integers: `r * |S| >= m`.

use serde::{Deserialize, Serialize};

use crate::analysis::{self, ComponentSummary};
use crate::coloring::{BipartiteColoring, SideLabel};
use crate::error::{BalancedError, VerifyError};

/// What a biclique or component step stands for in the case analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepRole {
    /// `[X1, Y \ Y1]` (or its mirror): avoids `A1`'s color.
    Cross,
    /// `[X1 \ B1, B1 ∩ (Y \ Y1)]`: the third color, seeding `C1`.
    SeedC,
    /// Component of the whole graph containing `B1`.
    ExtendB,
    /// Component of the whole graph containing `C1`.
    ExtendC,
    /// `[X \ (B1* ∪ C1*), B1 ∩ (Y \ Y1)]`: back in `A1`'s color.
    Fallback,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    /// One color: the whole graph is the component.
    WholeGraph { color: usize },
    /// Work inside the sub-biclique `[x, y]` until the matching `exit_scope`.
    EnterScope { x: Vec<usize>, y: Vec<usize> },
    ExitScope,
    /// A largest monochromatic component of the current scope (`A1`).
    Largest { color: usize, x: Vec<usize>, y: Vec<usize> },
    /// The largest component already meets both thresholds of the scope.
    Adequate,
    /// The deficient side of the largest component is `X`; roles swap.
    SwapSides,
    /// Every edge of `[x, y]` has `color`.
    Biclique { role: StepRole, color: usize, x: Vec<usize>, y: Vec<usize> },
    /// A monochromatic component of the whole graph.
    Component { role: StepRole, color: usize, x: Vec<usize>, y: Vec<usize> },
    /// The component of the current scope returned by the scope's procedure.
    Selected { color: usize, x: Vec<usize>, y: Vec<usize> },
    /// The returned component of the whole graph.
    Result { color: usize, x: Vec<usize>, y: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancedWitness {
    pub color: usize,
    pub x_set: Vec<usize>,
    pub y_set: Vec<usize>,
    pub trace: Vec<TraceStep>,
}

/// A set in a possibly transposed frame, recorded in original coordinates.
#[derive(Clone, Copy)]
struct Frame {
    swapped: bool,
}

impl Frame {
    fn orig(self, xs: &[usize], ys: &[usize]) -> (Vec<usize>, Vec<usize>) {
        if self.swapped {
            (ys.to_vec(), xs.to_vec())
        } else {
            (xs.to_vec(), ys.to_vec())
        }
    }
}

fn internal(msg: impl Into<String>) -> BalancedError {
    BalancedError::Internal(msg.into())
}

fn minus(all: &[usize], remove: &[usize]) -> Vec<usize> {
    all.iter().copied().filter(|v| remove.binary_search(v).is_err()).collect()
}

fn is_mono(c: &BipartiteColoring, color: usize, xs: &[usize], ys: &[usize]) -> bool {
    xs.iter().all(|&x| ys.iter().all(|&y| c.color(x, y) == color))
}

/// Components of the sub-biclique `[xs, ys]` of `c`, in `c`'s indices.
fn scope_components(c: &BipartiteColoring, xs: &[usize], ys: &[usize]) -> Vec<ComponentSummary> {
    let sub = c.restrict(xs, ys).expect("scopes are nonempty");
    analysis::monochromatic_components(&sub, false)
        .into_iter()
        .map(|comp| ComponentSummary {
            color: comp.color,
            x_vertices: comp.x_vertices.iter().map(|&i| xs[i]).collect(),
            y_vertices: comp.y_vertices.iter().map(|&j| ys[j]).collect(),
            edge_count: comp.edge_count,
        })
        .collect()
}

fn scope_largest(c: &BipartiteColoring, xs: &[usize], ys: &[usize]) -> ComponentSummary {
    let sub = c.restrict(xs, ys).expect("scopes are nonempty");
    let comp = analysis::largest_component(&sub);
    ComponentSummary {
        color: comp.color,
        x_vertices: comp.x_vertices.iter().map(|&i| xs[i]).collect(),
        y_vertices: comp.y_vertices.iter().map(|&j| ys[j]).collect(),
        edge_count: comp.edge_count,
    }
}

/// The component of `color` in scope `[xs, ys]` that contains `X`-vertex `x`.
fn scope_component_of(c: &BipartiteColoring, xs: &[usize], ys: &[usize], color: usize, x: usize) -> ComponentSummary {
    scope_components(c, xs, ys)
        .into_iter()
        .find(|comp| comp.color == color && comp.x_vertices.binary_search(&x).is_ok())
        .expect("x has an edge of this color in the scope")
}

/// Two-color procedure on scope `[xs, ys]` of `d` (indices of `d`); the
/// returned component satisfies `2|x| >= |xs|`, `2|y| >= |ys|`.
fn two_color(
    d: &BipartiteColoring,
    frame: Frame,
    xs: &[usize],
    ys: &[usize],
    trace: &mut Vec<TraceStep>,
) -> Result<ComponentSummary, BalancedError> {
    let (m, n) = (xs.len(), ys.len());
    let a1 = scope_largest(d, xs, ys);
    let (ox, oy) = frame.orig(&a1.x_vertices, &a1.y_vertices);
    trace.push(TraceStep::Largest { color: a1.color, x: ox, y: oy });
    if 2 * (a1.size()) < m + n {
        return Err(internal("largest component is below (m + n) / 2"));
    }
    let (x1, y1) = (&a1.x_vertices, &a1.y_vertices);
    let selected = if 2 * x1.len() >= m && 2 * y1.len() >= n {
        trace.push(TraceStep::Adequate);
        a1.clone()
    } else {
        // Cross biclique between the large side and the complement of the small side.
        let (cx, cy) = if 2 * y1.len() < n {
            (x1.clone(), minus(ys, y1))
        } else {
            trace.push(TraceStep::SwapSides);
            (minus(xs, x1), y1.clone())
        };
        let color = d.color(cx[0], cy[0]);
        if color == a1.color || !is_mono(d, color, &cx, &cy) {
            return Err(internal("cross biclique is not monochromatic in a second color"));
        }
        let (ox, oy) = frame.orig(&cx, &cy);
        trace.push(TraceStep::Biclique { role: StepRole::Cross, color, x: ox, y: oy });
        scope_component_of(d, xs, ys, color, cx[0])
    };
    if 2 * selected.x_vertices.len() < m || 2 * selected.y_vertices.len() < n {
        return Err(internal("two-color procedure returned an unbalanced component"));
    }
    let (ox, oy) = frame.orig(&selected.x_vertices, &selected.y_vertices);
    trace.push(TraceStep::Selected { color: selected.color, x: ox, y: oy });
    Ok(selected)
}

fn whole_component(d: &BipartiteColoring, color: usize, x: usize) -> ComponentSummary {
    analysis::component_containing(d, color, SideLabel::X, x)
}

fn three_color(c: &BipartiteColoring, trace: &mut Vec<TraceStep>) -> Result<ComponentSummary, BalancedError> {
    let (m, n) = (c.m(), c.n());
    let a1 = analysis::largest_component(c);
    trace.push(TraceStep::Largest { color: a1.color, x: a1.x_vertices.clone(), y: a1.y_vertices.clone() });
    if 3 * a1.size() < m + n {
        return Err(internal("largest component is below (m + n) / 3"));
    }
    if 3 * a1.x_vertices.len() >= m && 3 * a1.y_vertices.len() >= n {
        trace.push(TraceStep::Adequate);
        return Ok(a1);
    }
    // Orient so that Y is the deficient side.
    let frame = Frame { swapped: 3 * a1.y_vertices.len() >= n };
    let transposed;
    let (d, x1, y1) = if frame.swapped {
        trace.push(TraceStep::SwapSides);
        transposed = c.transpose();
        (&transposed, a1.y_vertices.clone(), a1.x_vertices.clone())
    } else {
        (c, a1.x_vertices.clone(), a1.y_vertices.clone())
    };
    let (dm, dn) = (d.m(), d.n());
    let all_x: Vec<usize> = (0..dm).collect();
    let all_y: Vec<usize> = (0..dn).collect();
    let y_rest = minus(&all_y, &y1);

    // K1 = [X1, Y \ Y1] avoids A1's color; run the two-color procedure inside it.
    let (ox, oy) = frame.orig(&x1, &y_rest);
    trace.push(TraceStep::EnterScope { x: ox, y: oy });
    let b1 = two_color(d, frame, &x1, &y_rest, trace)?;
    trace.push(TraceStep::ExitScope);
    if b1.color == a1.color {
        return Err(internal("K1 contains an edge of A1's color"));
    }
    let b1_y = b1.y_vertices.clone();
    if 3 * b1_y.len() <= dn {
        return Err(internal("B1 meets Y \\ Y1 in at most n/3 vertices"));
    }
    let b_star = whole_component(d, b1.color, b1.x_vertices[0]);
    let x1_rest = minus(&x1, &b1.x_vertices);
    let chosen = if x1_rest.is_empty() {
        let (ox, oy) = frame.orig(&b_star.x_vertices, &b_star.y_vertices);
        trace.push(TraceStep::Component { role: StepRole::ExtendB, color: b_star.color, x: ox, y: oy });
        b_star
    } else {
        let c_color = (0..3).find(|&k| k != a1.color && k != b1.color).expect("three colors");
        if !is_mono(d, c_color, &x1_rest, &b1_y) {
            return Err(internal("[X1 \\ B1, B1 ∩ (Y \\ Y1)] is not in the third color"));
        }
        let (ox, oy) = frame.orig(&x1_rest, &b1_y);
        trace.push(TraceStep::Biclique { role: StepRole::SeedC, color: c_color, x: ox, y: oy });
        let c_star = whole_component(d, c_color, x1_rest[0]);
        let (ox, oy) = frame.orig(&b_star.x_vertices, &b_star.y_vertices);
        trace.push(TraceStep::Component { role: StepRole::ExtendB, color: b_star.color, x: ox, y: oy });
        let (ox, oy) = frame.orig(&c_star.x_vertices, &c_star.y_vertices);
        trace.push(TraceStep::Component { role: StepRole::ExtendC, color: c_star.color, x: ox, y: oy });
        if 3 * b_star.x_vertices.len() >= dm {
            b_star
        } else if 3 * c_star.x_vertices.len() >= dm {
            c_star
        } else {
            let covered: Vec<usize> = {
                let mut v: Vec<usize> = b_star.x_vertices.iter().chain(&c_star.x_vertices).copied().collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let z = minus(&all_x, &covered);
            if z.is_empty() || !is_mono(d, a1.color, &z, &b1_y) {
                return Err(internal("fallback biclique is not in A1's color"));
            }
            let (ox, oy) = frame.orig(&z, &b1_y);
            trace.push(TraceStep::Biclique { role: StepRole::Fallback, color: a1.color, x: ox, y: oy });
            whole_component(d, a1.color, z[0])
        }
    };
    let (ox, oy) = frame.orig(&chosen.x_vertices, &chosen.y_vertices);
    Ok(ComponentSummary { color: chosen.color, x_vertices: ox, y_vertices: oy, edge_count: chosen.edge_count })
}

/// A monochromatic component meeting `X` in at least `m/r` and `Y` in at least
/// `n/r` vertices, for colorings with `r <= 3`.
pub fn find_balanced_component(c: &BipartiteColoring) -> Result<BalancedWitness, BalancedError> {
    let mut trace = Vec::new();
    let comp = match c.r() {
        1 => {
            trace.push(TraceStep::WholeGraph { color: 0 });
            whole_component(c, 0, 0)
        }
        2 => {
            let xs: Vec<usize> = (0..c.m()).collect();
            let ys: Vec<usize> = (0..c.n()).collect();
            two_color(c, Frame { swapped: false }, &xs, &ys, &mut trace)?
        }
        3 => three_color(c, &mut trace)?,
        r => return Err(BalancedError::Unsupported(r)),
    };
    let r = c.r();
    if r * comp.x_vertices.len() < c.m() || r * comp.y_vertices.len() < c.n() {
        return Err(internal("returned component misses a threshold"));
    }
    trace.push(TraceStep::Result { color: comp.color, x: comp.x_vertices.clone(), y: comp.y_vertices.clone() });
    Ok(BalancedWitness { color: comp.color, x_set: comp.x_vertices, y_set: comp.y_vertices, trace })
}

/// `min(r|x| - m, r|y| - n)`: nonnegative iff the component is balanced.
pub fn balance_score(c: &BipartiteColoring, comp: &ComponentSummary) -> i64 {
    let r = c.r() as i64;
    (r * comp.x_vertices.len() as i64 - c.m() as i64).min(r * comp.y_vertices.len() as i64 - c.n() as i64)
}

/// Exhaustive scan of the monochromatic components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancedScan {
    /// A component with the largest balance score (first in listing order).
    pub best: ComponentSummary,
    pub score: i64,
    /// Whether `best` meets both `m/r` and `n/r`.
    pub satisfied: bool,
    /// Largest `min(|x|, |y|)` over all components.
    pub max_min_side: usize,
}

pub fn brute_force_balanced(c: &BipartiteColoring) -> BalancedScan {
    let comps = analysis::monochromatic_components(c, false);
    let max_min_side = comps.iter().map(|s| s.x_vertices.len().min(s.y_vertices.len())).max().unwrap_or(0);
    let mut best: Option<(i64, &ComponentSummary)> = None;
    for comp in &comps {
        let score = balance_score(c, comp);
        if best.is_none_or(|(s, _)| score > s) {
            best = Some((score, comp));
        }
    }
    let (score, best) = best.expect("a coloring has at least one edge");
    BalancedScan { best: best.clone(), score, satisfied: score >= 0, max_min_side }
}

/// Re-checks every step of a trace against the coloring and returns the
/// component named by its final step.
pub fn replay_trace(c: &BipartiteColoring, trace: &[TraceStep]) -> Result<(usize, Vec<usize>, Vec<usize>), VerifyError> {
    let whole = ((0..c.m()).collect::<Vec<_>>(), (0..c.n()).collect::<Vec<_>>());
    let mut scopes = vec![whole];
    let in_range = |xs: &[usize], ys: &[usize]| xs.iter().all(|&x| x < c.m()) && ys.iter().all(|&y| y < c.n());
    let mut result = None;
    for (i, step) in trace.iter().enumerate() {
        let at = |what: &str| format!("step {i}: {what}");
        if result.is_some() {
            return Err(VerifyError::new("trace ends at its result", at("step after result")));
        }
        match step {
            TraceStep::WholeGraph { color } => {
                if !analysis::is_component(c, *color, &scopes[0].0, &scopes[0].1) {
                    return Err(VerifyError::new("whole graph is one component", at("not monochromatic")));
                }
            }
            TraceStep::EnterScope { x, y } => {
                if x.is_empty() || y.is_empty() || !in_range(x, y) {
                    return Err(VerifyError::new("scope is a nonempty sub-biclique", at("bad scope")));
                }
                scopes.push((x.clone(), y.clone()));
            }
            TraceStep::ExitScope => {
                if scopes.len() < 2 {
                    return Err(VerifyError::new("scopes are balanced", at("exit without enter")));
                }
                scopes.pop();
            }
            TraceStep::Largest { color, x, y } | TraceStep::Selected { color, x, y } => {
                let (sx, sy) = scopes.last().expect("nonempty");
                let listed = scope_components(c, sx, sy)
                    .into_iter()
                    .any(|comp| comp.color == *color && &comp.x_vertices == x && &comp.y_vertices == y);
                if !listed {
                    return Err(VerifyError::new("step names a component of its scope", at("not a component")));
                }
                if let TraceStep::Largest { .. } = step {
                    let best = scope_largest(c, sx, sy);
                    if best.size() != x.len() + y.len() {
                        return Err(VerifyError::new("largest component has maximum size", at("not largest")));
                    }
                }
            }
            TraceStep::Adequate | TraceStep::SwapSides => {}
            TraceStep::Biclique { color, x, y, .. } => {
                if x.is_empty() || y.is_empty() || !in_range(x, y) || !is_mono(c, *color, x, y) {
                    return Err(VerifyError::new("biclique is monochromatic", at("mixed colors")));
                }
            }
            TraceStep::Component { color, x, y, .. } => {
                if !in_range(x, y) || !analysis::is_component(c, *color, x, y) {
                    return Err(VerifyError::new("step names a component", at("not a component")));
                }
            }
            TraceStep::Result { color, x, y } => {
                if !in_range(x, y) || x.is_empty() {
                    return Err(VerifyError::new("result is a component", at("empty or out of range")));
                }
                let comp = whole_component(c, *color, x[0]);
                if &comp.x_vertices != x || &comp.y_vertices != y {
                    return Err(VerifyError::new("result is a component", at("differs from recomputed component")));
                }
                result = Some((*color, comp.x_vertices, comp.y_vertices));
            }
        }
    }
    result.ok_or_else(|| VerifyError::new("trace ends at its result", "no result step"))
}

/// Checks a witness using only its own data and the coloring.
pub fn verify_balanced(c: &BipartiteColoring, w: &BalancedWitness) -> Result<(), VerifyError> {
    if w.color >= c.r() {
        return Err(VerifyError::new("color in range", format!("color {} with r = {}", w.color, c.r())));
    }
    if w.x_set.iter().any(|&x| x >= c.m()) || w.y_set.iter().any(|&y| y >= c.n()) {
        return Err(VerifyError::new("vertices in range", "vertex index out of range"));
    }
    if !w.x_set.windows(2).all(|p| p[0] < p[1]) || !w.y_set.windows(2).all(|p| p[0] < p[1]) {
        return Err(VerifyError::new("vertex sets sorted and distinct", "unsorted or repeated vertex"));
    }
    if !analysis::is_component(c, w.color, &w.x_set, &w.y_set) {
        return Err(VerifyError::new("sets form one monochromatic component", "not a maximal connected class"));
    }
    let r = c.r();
    if r * w.x_set.len() < c.m() || r * w.y_set.len() < c.n() {
        return Err(VerifyError::new(
            "r|x| >= m and r|y| >= n",
            format!("|x| = {}, |y| = {} with r = {r}", w.x_set.len(), w.y_set.len()),
        ));
    }
    let (color, x, y) = replay_trace(c, &w.trace)?;
    if color != w.color || x != w.x_set || y != w.y_set {
        return Err(VerifyError::new("trace replays to the witness sets", "replayed component differs"));
    }
    Ok(())
}
