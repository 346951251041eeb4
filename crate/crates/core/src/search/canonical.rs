//! Canonical forms of colorings under permutations of `X`, of `Y`, of the
//! colors, and the side swap when `m == n`.
//!
//! The canonical form is the row-major lexicographically smallest matrix in
//! the orbit. It is built one output row at a time. A partial state fixes the
//! original rows used so far, an ordered partition of the columns into cells
//! (columns in one cell agree on every output row so far and may still be
//! permuted freely), and the color relabeling chosen so far. The smallest next
//! row for a state and a candidate original row sorts each cell's labels
//! ascending; colors seen for the first time take fresh labels, the most
//! frequent one in a cell first, branching on ties that can affect later cells or rows.
//! Only states achieving the minimal row survive to the next level.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::coloring::BipartiteColoring;
use crate::error::SearchError;

/// Colorings with more cells than this are refused.
pub const CANONICAL_CELL_LIMIT: usize = 64;

const UNLABELED: u8 = u8::MAX;

/// The canonical representative of a coloring's isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(BipartiteColoring);

impl CanonicalForm {
    pub fn coloring(&self) -> &BipartiteColoring {
        &self.0
    }

    pub fn into_coloring(self) -> BipartiteColoring {
        self.0
    }
}

pub(crate) fn check_limit(m: usize, n: usize) -> Result<(), SearchError> {
    if m * n > CANONICAL_CELL_LIMIT {
        return Err(SearchError::TooLarge { m, n });
    }
    Ok(())
}

pub fn canonical_form(c: &BipartiteColoring) -> Result<CanonicalForm, SearchError> {
    check_limit(c.m(), c.n())?;
    let direct = minimize(c);
    if c.m() == c.n() {
        let swapped = minimize(&c.transpose());
        if swapped < direct {
            return Ok(CanonicalForm(swapped));
        }
    }
    Ok(CanonicalForm(direct))
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    /// Copies of each distinct row placed so far.
    used: Vec<u8>,
    cells: Vec<Vec<u8>>,
    labels: Vec<u8>,
    next_label: u8,
}

/// Minimum over row, column and color permutations (no side swap).
fn minimize(c: &BipartiteColoring) -> BipartiteColoring {
    let (m, n, r) = (c.m(), c.n(), c.r());
    // Identical rows are interchangeable, so candidates are distinct rows
    // with their multiplicities.
    let mut distinct: Vec<(&[u8], u8)> = Vec::new();
    for x in 0..m {
        match distinct.iter_mut().find(|(row, _)| *row == c.row(x)) {
            Some(entry) => entry.1 += 1,
            None => distinct.push((c.row(x), 1)),
        }
    }

    let mut states = vec![State {
        used: vec![0; distinct.len()],
        cells: vec![(0..n as u8).collect()],
        labels: vec![UNLABELED; r],
        next_label: 0,
    }];
    let mut out: Vec<u8> = Vec::with_capacity(m * n);
    for level in 0..m {
        let mut best = Level::new();
        for state in &states {
            for (t, &(row, copies)) in distinct.iter().enumerate() {
                if state.used[t] == copies {
                    continue;
                }
                let mut walk = Walk { row, state, row_type: t, branch_ties: level + 1 < m, level: &mut best };
                let mut labels = state.labels.clone();
                walk.extend_row(0, &mut labels, state.next_label, &mut Vec::with_capacity(n), &mut Vec::new());
            }
        }
        out.extend(best.best.expect("some row is always available"));
        states = best.survivors;
    }
    BipartiteColoring::from_cells(m, n, r, out).expect("relabeled coloring is valid")
}

/// The smallest output row found so far on one level and the distinct
/// states that achieve it.
struct Level {
    best: Option<Vec<u8>>,
    survivors: Vec<State>,
    /// Index of `survivors`, built once a linear scan gets long.
    seen: Option<HashSet<State>>,
}

const LINEAR_SCAN: usize = 16;

impl Level {
    fn new() -> Self {
        Level { best: None, survivors: Vec::new(), seen: None }
    }

    /// Whether a row starting with `prefix` can still tie or beat the best.
    fn admits(&self, prefix: &[u8]) -> bool {
        self.best.as_ref().is_none_or(|b| prefix <= &b[..prefix.len()])
    }

    fn offer(&mut self, line: &[u8], next: impl FnOnce() -> State) {
        match self.best.as_deref().map(|b| line.cmp(b)) {
            Some(Ordering::Greater) => {}
            Some(Ordering::Equal) => {
                let next = next();
                let fresh = match &mut self.seen {
                    Some(seen) => seen.insert(next.clone()),
                    None if self.survivors.len() < LINEAR_SCAN => !self.survivors.contains(&next),
                    None => {
                        let mut seen: HashSet<State> = self.survivors.iter().cloned().collect();
                        let fresh = seen.insert(next.clone());
                        self.seen = Some(seen);
                        fresh
                    }
                };
                if fresh {
                    self.survivors.push(next);
                }
            }
            _ => {
                self.best = Some(line.to_vec());
                self.seen = None;
                self.survivors.clear();
                self.survivors.push(next());
            }
        }
    }
}

/// One candidate original row being laid out as the next output row.
struct Walk<'a> {
    row: &'a [u8],
    state: &'a State,
    row_type: usize,
    branch_ties: bool,
    level: &'a mut Level,
}

impl Walk<'_> {
    /// Labels the colors of cell `k` onward and offers every completion of
    /// the output row that can still be minimal.
    fn extend_row(&mut self, k: usize, labels: &mut [u8], next_label: u8, line: &mut Vec<u8>, cells: &mut Vec<Vec<u8>>) {
        if !self.level.admits(line) {
            return;
        }
        if k == self.state.cells.len() {
            let (state, row_type) = (self.state, self.row_type);
            self.level.offer(line, || {
                let mut used = state.used.clone();
                used[row_type] += 1;
                State { used, cells: cells.clone(), labels: labels.to_vec(), next_label }
            });
            return;
        }
        // Unlabeled colors in this cell with their multiplicities.
        let mut fresh: Vec<(u8, usize)> = Vec::new();
        for &col in &self.state.cells[k] {
            let color = self.row[col as usize];
            if labels[color as usize] == UNLABELED {
                match fresh.iter_mut().find(|(c, _)| *c == color) {
                    Some(entry) => entry.1 += 1,
                    None => fresh.push((color, 1)),
                }
            }
        }
        self.assign_fresh(k, labels, next_label, &mut fresh, line, cells);
    }

    /// Gives fresh labels to `fresh` colors, most frequent first (every order
    /// of tied colors that matters later is tried), then closes cell `k`.
    fn assign_fresh(
        &mut self,
        k: usize,
        labels: &mut [u8],
        next_label: u8,
        fresh: &mut Vec<(u8, usize)>,
        line: &mut Vec<u8>,
        cells: &mut Vec<Vec<u8>>,
    ) {
        if fresh.is_empty() {
            let mut entries: Vec<(u8, u8)> =
                self.state.cells[k].iter().map(|&col| (labels[self.row[col as usize] as usize], col)).collect();
            entries.sort_unstable();
            let line_len = line.len();
            let cells_len = cells.len();
            line.extend(entries.iter().map(|&(label, _)| label));
            let mut start = 0;
            while start < entries.len() {
                let label = entries[start].0;
                let end = start + entries[start..].iter().take_while(|e| e.0 == label).count();
                cells.push(entries[start..end].iter().map(|&(_, col)| col).collect());
                start = end;
            }
            self.extend_row(k + 1, labels, next_label, line, cells);
            line.truncate(line_len);
            cells.truncate(cells_len);
            return;
        }
        let top = fresh.iter().map(|&(_, count)| count).max().expect("nonempty");
        // Tied colors are interchangeable when no later row or cell sees them.
        let branch = self.branch_ties
            || fresh.iter().any(|&(color, count)| {
                count == top && self.state.cells[k + 1..].iter().flatten().any(|&col| self.row[col as usize] == color)
            });
        for i in 0..fresh.len() {
            if fresh[i].1 != top {
                continue;
            }
            let (color, count) = fresh.remove(i);
            labels[color as usize] = next_label;
            self.assign_fresh(k, labels, next_label + 1, fresh, line, cells);
            labels[color as usize] = UNLABELED;
            fresh.insert(i, (color, count));
            if !branch {
                break;
            }
        }
    }
}
