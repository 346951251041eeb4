//! Self-contained certificates and their checker.
//!
//! A certificate is checked against a coloring using only the data it carries;
//! no search and no balanced-component finder runs during verification.

use serde::{Deserialize, Serialize};

use crate::analysis::{self, ComponentSummary, MatchingWitness, P4Witness};
use crate::balanced::{self, BalancedWitness};
use crate::coloring::BipartiteColoring;
use crate::error::VerifyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    P4(P4Witness),
    Balanced(BalancedWitness),
    Matching(MatchingWitness),
    Component(ComponentSummary),
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::P4(_) => "p4",
            Certificate::Balanced(_) => "balanced",
            Certificate::Matching(_) => "matching",
            Certificate::Component(_) => "component",
        }
    }
}

pub fn verify(c: &BipartiteColoring, cert: &Certificate) -> Result<(), VerifyError> {
    match cert {
        Certificate::P4(w) => analysis::check_p4(c, w).map_err(|inv| VerifyError::new(inv, format!("{w:?}"))),
        Certificate::Balanced(w) => balanced::verify_balanced(c, w),
        Certificate::Matching(w) => verify_matching(c, w),
        Certificate::Component(s) => verify_component(c, s),
    }
}

fn verify_component(c: &BipartiteColoring, s: &ComponentSummary) -> Result<(), VerifyError> {
    if s.x_vertices.iter().any(|&x| x >= c.m()) || s.y_vertices.iter().any(|&y| y >= c.n()) {
        return Err(VerifyError::new("vertices in range", "vertex index out of range"));
    }
    if !analysis::is_component(c, s.color, &s.x_vertices, &s.y_vertices) {
        return Err(VerifyError::new("sets form one monochromatic component", format!("color {}", s.color)));
    }
    let edges = s
        .x_vertices
        .iter()
        .map(|&x| s.y_vertices.iter().filter(|&&y| c.color(x, y) == s.color).count())
        .sum::<usize>();
    if edges != s.edge_count {
        return Err(VerifyError::new("edge count", format!("claimed {}, found {edges}", s.edge_count)));
    }
    Ok(())
}

fn verify_matching(c: &BipartiteColoring, w: &MatchingWitness) -> Result<(), VerifyError> {
    if w.color >= c.r() {
        return Err(VerifyError::new("color in range", format!("color {}", w.color)));
    }
    let comps = analysis::monochromatic_components(c, false);
    let comp = comps
        .get(w.component_id)
        .ok_or_else(|| VerifyError::new("component id exists", format!("id {}", w.component_id)))?;
    if comp.color != w.color {
        return Err(VerifyError::new("component has the matching color", format!("component color {}", comp.color)));
    }
    let mut xs: Vec<usize> = w.edges.iter().map(|e| e.0).collect();
    let mut ys: Vec<usize> = w.edges.iter().map(|e| e.1).collect();
    if w.edges.iter().any(|&(x, y)| x >= c.m() || y >= c.n()) {
        return Err(VerifyError::new("vertices in range", "edge endpoint out of range"));
    }
    if w.edges.iter().any(|&(x, y)| c.color(x, y) != w.color) {
        return Err(VerifyError::new("edges have the matching color", "edge of another color"));
    }
    xs.sort_unstable();
    ys.sort_unstable();
    if xs.windows(2).any(|p| p[0] == p[1]) || ys.windows(2).any(|p| p[0] == p[1]) {
        return Err(VerifyError::new("edges pairwise disjoint", "shared endpoint"));
    }
    if xs.iter().any(|x| comp.x_vertices.binary_search(x).is_err()) {
        return Err(VerifyError::new("edges inside the component", "endpoint outside the component"));
    }
    Ok(())
}
