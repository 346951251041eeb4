//! Exhaustive search for P4-free colorings of `K_{m,n}`.
//!
//! Edges are colored in row-major order. Every color class is kept a star
//! forest by a [`StarForest`] per color, so any complete assignment is
//! P4-free. Colors must appear in increasing index order along the sequence.
//! In [`SymmetryMode::Full`] rows and columns of the matrix are additionally
//! kept in non-decreasing lexicographic order. All three constraints are
//! implied by "the matrix is the row-major lexicographic minimum of its orbit
//! under row, column and color permutations", so every orbit keeps at least
//! one representative.

mod canonical;
mod star_forest;

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::BipartiteColoring;
use crate::constructions;
use crate::error::SearchError;

pub use canonical::{canonical_form, CanonicalForm, CANONICAL_CELL_LIMIT};
use star_forest::StarForest;

/// Which symmetry-breaking constraints prune the search tree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryMode {
    /// First-use ordering of colors only.
    Colors,
    /// Color first-use ordering plus row and column lexicographic ordering.
    #[default]
    Full,
}

impl SymmetryMode {
    /// The pruning rules an exhaustion certificate relies on.
    pub fn pruning_rules(self) -> Vec<&'static str> {
        let mut rules = vec![
            "star-forest: an edge may join a color class only if the class stays a star forest",
            "color-first-use: color k+1 is used only after color k appears earlier in row-major order",
        ];
        if self == SymmetryMode::Full {
            rules.push("row-lex: each row is lexicographically >= the row above it");
            rules.push("column-lex: each column is lexicographically (top-down) >= the column to its left");
        }
        rules
    }
}

impl fmt::Display for SymmetryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryMode::Colors => f.write_str("colors"),
            SymmetryMode::Full => f.write_str("full"),
        }
    }
}

impl std::str::FromStr for SymmetryMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "colors" => Ok(SymmetryMode::Colors),
            "full" => Ok(SymmetryMode::Full),
            other => Err(format!("unknown symmetry mode {other:?} (expected colors or full)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Node cap; exceeding it yields [`SearchError::BudgetExceeded`].
    pub budget: Option<u64>,
    pub symmetry: SymmetryMode,
    /// Worker threads; above one, the tree is split after the first row.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: None, symmetry: SymmetryMode::Full, workers: 1 }
    }
}

impl SearchOptions {
    pub fn with_symmetry(symmetry: SymmetryMode) -> Self {
        SearchOptions { symmetry, ..Self::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SearchStatus {
    Found,
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub status: SearchStatus,
    pub witness: Option<BipartiteColoring>,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    pub symmetry_mode: SymmetryMode,
    pub pruning_rules: Vec<String>,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        self.status == SearchStatus::Found
    }
}

/// Receives every complete (or prefix-complete) assignment; returns `true`
/// to stop the search.
trait Visitor: Send {
    fn visit(&mut self, cells: &[u8]) -> bool;
}

enum Halt {
    Budget,
    Stopped,
}

const FLUSH_INTERVAL: u64 = 1 << 12;

struct Shared<'a> {
    nodes: &'a AtomicU64,
    stop: &'a AtomicBool,
}

struct Kernel<'a> {
    m: usize,
    n: usize,
    r: usize,
    full: bool,
    cells: Vec<u8>,
    // row_eq[e]: row e/n equals the row above on columns 0..=e%n
    row_eq: Vec<bool>,
    // col_eq[e]: column e%n equals the column to its left on rows 0..=e/n
    col_eq: Vec<bool>,
    forests: Vec<StarForest>,
    used: usize,
    nodes: u64,
    unflushed: u64,
    limit: u64,
    shared: Option<Shared<'a>>,
}

impl<'a> Kernel<'a> {
    fn new(m: usize, n: usize, r: usize, mode: SymmetryMode, limit: u64, shared: Option<Shared<'a>>) -> Self {
        Kernel {
            m,
            n,
            r,
            full: mode == SymmetryMode::Full,
            cells: vec![0; m * n],
            row_eq: vec![false; m * n],
            col_eq: vec![false; m * n],
            forests: (0..r).map(|_| StarForest::new(m + n)).collect(),
            used: 0,
            nodes: 0,
            unflushed: 0,
            limit,
            shared,
        }
    }

    /// Smallest color allowed at edge `e` by the lex constraints.
    #[inline]
    fn lower_bound(&self, e: usize) -> u8 {
        if !self.full {
            return 0;
        }
        let (i, j) = (e / self.n, e % self.n);
        let mut lo = 0;
        if i > 0 && (j == 0 || self.row_eq[e - 1]) {
            lo = self.cells[e - self.n];
        }
        if j > 0 && (i == 0 || self.col_eq[e - self.n]) {
            lo = lo.max(self.cells[e - 1]);
        }
        lo
    }

    #[inline]
    fn place(&mut self, e: usize, c: u8) -> bool {
        let (i, j) = (e / self.n, e % self.n);
        if !self.forests[c as usize].try_add(i as u8, (self.m + j) as u8) {
            return false;
        }
        self.cells[e] = c;
        if self.full {
            self.row_eq[e] = i > 0 && (j == 0 || self.row_eq[e - 1]) && self.cells[e - self.n] == c;
            self.col_eq[e] = j > 0 && (i == 0 || self.col_eq[e - self.n]) && self.cells[e - 1] == c;
        }
        true
    }

    /// Replays a prefix produced by the same kernel configuration.
    fn replay(&mut self, prefix: &[u8]) {
        for (e, &c) in prefix.iter().enumerate() {
            assert!(self.place(e, c), "replayed prefix must be feasible");
            if c as usize == self.used {
                self.used += 1;
            }
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), Halt> {
        self.nodes += 1;
        match &self.shared {
            None => {
                if self.nodes > self.limit {
                    return Err(Halt::Budget);
                }
            }
            Some(shared) => {
                self.unflushed += 1;
                if self.unflushed == FLUSH_INTERVAL {
                    let total = shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
                    self.unflushed = 0;
                    if shared.stop.load(Ordering::Relaxed) {
                        return Err(Halt::Stopped);
                    }
                    if total > self.limit {
                        return Err(Halt::Budget);
                    }
                }
            }
        }
        Ok(())
    }

    fn flush(&mut self) {
        if let Some(shared) = &self.shared {
            shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed);
            self.unflushed = 0;
        }
    }

    /// Depth-first over edges `e..end`; `visit` sees each feasible assignment of
    /// edges `0..end` and returns `true` to stop the search.
    fn dfs<V: Visitor>(&mut self, e: usize, end: usize, visit: &mut V) -> Result<bool, Halt> {
        if e == end {
            return Ok(visit.visit(&self.cells[..end]));
        }
        let hi = (self.used + 1).min(self.r) as u8;
        for c in self.lower_bound(e)..hi {
            if !self.place(e, c) {
                continue;
            }
            let saved_used = self.used;
            if c as usize == self.used {
                self.used += 1;
            }
            self.tick()?;
            let stop = self.dfs(e + 1, end, visit)?;
            self.used = saved_used;
            self.forests[c as usize].undo();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Totals of one exploration of the (symmetry-reduced) tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Exploration {
    nodes: u64,
    stopped: bool,
}

fn check_params(m: usize, n: usize, r: usize) -> Result<(), SearchError> {
    if m == 0 || n == 0 || r == 0 {
        return Err(SearchError::InvalidParameters(format!("m, n, r must be positive (got {m}, {n}, {r})")));
    }
    if m + n >= 255 || r > crate::coloring::MAX_COLORS {
        return Err(SearchError::InvalidParameters(format!("K_{{{m},{n}}} with {r} colors is too large")));
    }
    Ok(())
}

/// Runs the search, handing complete P4-free assignments to visitors built by
/// `make`. Returns the visitors (one per worker) for the caller to merge.
fn explore<V, F>(m: usize, n: usize, r: usize, opts: &SearchOptions, make: F) -> Result<(Vec<V>, Exploration), SearchError>
where
    V: Visitor,
    F: Fn() -> V + Sync,
{
    check_params(m, n, r)?;
    let limit = opts.budget.unwrap_or(u64::MAX);
    let end = m * n;
    if opts.workers <= 1 || m == 1 {
        let mut visitor = make();
        let mut kernel = Kernel::new(m, n, r, opts.symmetry, limit, None);
        return match kernel.dfs(0, end, &mut visitor) {
            Ok(stopped) => Ok((vec![visitor], Exploration { nodes: kernel.nodes, stopped })),
            Err(_) => Err(SearchError::BudgetExceeded { budget: limit, nodes: kernel.nodes }),
        };
    }

    // Split after the first row; workers pull prefixes from a shared index.
    struct Prefixes(Vec<Vec<u8>>);
    impl Visitor for Prefixes {
        fn visit(&mut self, cells: &[u8]) -> bool {
            self.0.push(cells.to_vec());
            false
        }
    }
    let mut prefixes = Prefixes(Vec::new());
    let mut splitter = Kernel::new(m, n, r, opts.symmetry, limit, None);
    if splitter.dfs(0, n, &mut prefixes).is_err() {
        return Err(SearchError::BudgetExceeded { budget: limit, nodes: splitter.nodes });
    }
    let prefixes = prefixes.0;
    let total = AtomicU64::new(splitter.nodes);
    let stop = AtomicBool::new(false);
    let over_budget = AtomicBool::new(false);
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..opts.workers.min(prefixes.len().max(1)) {
            scope.spawn(|| {
                let mut visitor = make();
                while !stop.load(Ordering::Relaxed) && !over_budget.load(Ordering::Relaxed) {
                    let Some(prefix) = prefixes.get(next.fetch_add(1, Ordering::Relaxed)) else { break };
                    let shared = Shared { nodes: &total, stop: &stop };
                    let mut kernel = Kernel::new(m, n, r, opts.symmetry, limit, Some(shared));
                    kernel.replay(prefix);
                    let outcome = kernel.dfs(n, end, &mut visitor);
                    kernel.flush();
                    match outcome {
                        Ok(true) => stop.store(true, Ordering::Relaxed),
                        Ok(false) | Err(Halt::Stopped) => {}
                        Err(Halt::Budget) => over_budget.store(true, Ordering::Relaxed),
                    }
                }
                results.lock().expect("worker results").push(visitor);
            });
        }
    });
    let nodes = total.load(Ordering::Relaxed);
    if over_budget.load(Ordering::Relaxed) || nodes > limit {
        return Err(SearchError::BudgetExceeded { budget: limit, nodes });
    }
    let visitors = results.into_inner().expect("worker results");
    Ok((visitors, Exploration { nodes, stopped: stop.load(Ordering::Relaxed) }))
}

struct FirstWitness(Option<Vec<u8>>);

impl Visitor for FirstWitness {
    fn visit(&mut self, cells: &[u8]) -> bool {
        self.0 = Some(cells.to_vec());
        true
    }
}

/// Decides whether `K_{m,n}` has a P4-free `r`-coloring.
///
/// `Exhausted` is reported only after the whole symmetry-reduced tree has been
/// explored; running out of budget is an error instead.
pub fn exists_p4free(m: usize, n: usize, r: usize, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let (visitors, stats) = explore(m, n, r, opts, || FirstWitness(None))?;
    // With several workers more than one may have found something; any is fine.
    let witness = visitors
        .into_iter()
        .filter_map(|v| v.0)
        .min()
        .map(|cells| BipartiteColoring::from_cells(m, n, r, cells).expect("search emits valid colorings"));
    debug_assert_eq!(witness.is_some(), stats.stopped);
    Ok(SearchOutcome {
        m,
        n,
        r,
        status: if witness.is_some() { SearchStatus::Found } else { SearchStatus::Exhausted },
        witness,
        nodes_explored: stats.nodes,
        wall_time: start.elapsed(),
        symmetry_mode: opts.symmetry,
        pruning_rules: opts.symmetry.pruning_rules().into_iter().map(String::from).collect(),
    })
}

/// Calls `f` on every complete P4-free coloring in the symmetry-reduced tree
/// (single worker, deterministic order) until it returns `true`. Returns the
/// node count.
pub fn for_each_p4free<F>(m: usize, n: usize, r: usize, opts: &SearchOptions, f: F) -> Result<u64, SearchError>
where
    F: FnMut(&BipartiteColoring) -> bool + Send,
{
    struct Callback<F> {
        m: usize,
        n: usize,
        r: usize,
        f: F,
    }
    impl<F: FnMut(&BipartiteColoring) -> bool + Send> Visitor for Callback<F> {
        fn visit(&mut self, cells: &[u8]) -> bool {
            let c = BipartiteColoring::from_cells(self.m, self.n, self.r, cells.to_vec())
                .expect("search emits valid colorings");
            (self.f)(&c)
        }
    }
    check_params(m, n, r)?;
    let limit = opts.budget.unwrap_or(u64::MAX);
    let mut visitor = Callback { m, n, r, f };
    let mut kernel = Kernel::new(m, n, r, opts.symmetry, limit, None);
    match kernel.dfs(0, m * n, &mut visitor) {
        Ok(_) => Ok(kernel.nodes),
        Err(_) => Err(SearchError::BudgetExceeded { budget: limit, nodes: kernel.nodes }),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsoClassCount {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub count: usize,
    /// One canonical representative per class, sorted.
    pub classes: Vec<BipartiteColoring>,
    /// Complete colorings reached by the search (before deduplication).
    pub colorings_visited: u64,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    pub symmetry_mode: SymmetryMode,
}

struct IsoCollector {
    m: usize,
    n: usize,
    r: usize,
    leaves: u64,
    forms: HashSet<CanonicalForm>,
}

impl Visitor for IsoCollector {
    fn visit(&mut self, cells: &[u8]) -> bool {
        self.leaves += 1;
        let c = BipartiteColoring::from_cells(self.m, self.n, self.r, cells.to_vec()).expect("valid coloring");
        self.forms.insert(canonical_form(&c).expect("size checked before the search"));
        false
    }
}

/// Number of isomorphism classes (rows, columns, colors, and the side swap
/// when `m == n`) of P4-free `r`-colorings of `K_{m,n}`.
pub fn count_p4free_iso_classes(m: usize, n: usize, r: usize, opts: &SearchOptions) -> Result<IsoClassCount, SearchError> {
    check_params(m, n, r)?;
    canonical::check_limit(m, n)?;
    let start = Instant::now();
    let (visitors, stats) =
        explore(m, n, r, opts, || IsoCollector { m, n, r, leaves: 0, forms: HashSet::new() })?;
    let mut forms = HashSet::new();
    let mut leaves = 0;
    for v in visitors {
        leaves += v.leaves;
        forms.extend(v.forms);
    }
    let mut classes: Vec<BipartiteColoring> = forms.into_iter().map(CanonicalForm::into_coloring).collect();
    classes.sort();
    Ok(IsoClassCount {
        m,
        n,
        r,
        count: classes.len(),
        classes,
        colorings_visited: leaves,
        nodes_explored: stats.nodes,
        wall_time: start.elapsed(),
        symmetry_mode: opts.symmetry,
    })
}

/// Where a lower-bound witness came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessSource {
    Search,
    Construction,
}

/// Status of the upper side of an `f(r)` computation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "UPPERCASE")]
pub enum UpperCertificate {
    /// No P4-free coloring of `K_{l,l}` exists.
    Exhausted { size: usize, outcome: SearchOutcome },
    /// The search at `K_{l,l}` ran out of budget.
    Unknown { size: usize, nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RamseyReport {
    pub r: usize,
    /// `f(r)`, when the exhaustion side completed.
    pub value: Option<usize>,
    /// Certified lower bound: `f(r) >= lower_bound`.
    pub lower_bound: usize,
    /// P4-free coloring of `K_{lower_bound - 1, lower_bound - 1}`.
    pub witness: BipartiteColoring,
    pub witness_source: WitnessSource,
    pub upper: UpperCertificate,
}

/// The smallest `l` such that every `r`-coloring of `K_{l,l}` has a
/// monochromatic P4, searching `l = 1, 2, ...`.
///
/// When the search for a P4-free coloring of `K_{l,l}` exceeds the budget but
/// an explicit construction covers that size, the construction (restricted to
/// `l x l`) stands in as the witness. When the exhaustion side exceeds the
/// budget the report carries an `Unknown` upper certificate.
pub fn bipartite_ramsey_f(r: usize, opts: &SearchOptions) -> Result<RamseyReport, SearchError> {
    check_params(1, 1, r)?;
    let construction = constructions::extremal_p4free(r)
        .map_err(|e| SearchError::InvalidParameters(e.to_string()))?;
    let mut witness: Option<(BipartiteColoring, WitnessSource)> = None;
    let mut size = 1;
    loop {
        match exists_p4free(size, size, r, opts) {
            Ok(outcome) if outcome.is_found() => {
                witness = Some((outcome.witness.expect("found"), WitnessSource::Search));
            }
            Ok(outcome) => {
                let (witness, source) = witness.expect("K_{1,1} is always P4-free");
                return Ok(RamseyReport {
                    r,
                    value: Some(size),
                    lower_bound: size,
                    witness,
                    witness_source: source,
                    upper: UpperCertificate::Exhausted { size, outcome },
                });
            }
            Err(SearchError::BudgetExceeded { nodes, .. }) => {
                if construction.m() >= size {
                    let idx: Vec<usize> = (0..size).collect();
                    let sub = construction.restrict(&idx, &idx).expect("nonempty restriction");
                    witness = Some((sub, WitnessSource::Construction));
                } else {
                    let (witness, source) = witness.expect("K_{1,1} is always P4-free");
                    return Ok(RamseyReport {
                        r,
                        value: None,
                        lower_bound: size,
                        witness,
                        witness_source: source,
                        upper: UpperCertificate::Unknown { size, nodes },
                    });
                }
            }
            Err(e) => return Err(e),
        }
        size += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArboricityResult {
    pub m: usize,
    pub n: usize,
    /// `st(K_{m,n})`.
    pub value: usize,
    /// P4-free coloring with `value` colors.
    pub witness: BipartiteColoring,
    /// Exhaustion at `value - 1` colors (absent when `value == 1`).
    pub exhaustion: Option<SearchOutcome>,
}

/// Star arboricity of `K_{m,n}`: the fewest colors admitting a P4-free coloring.
pub fn star_arboricity(m: usize, n: usize, opts: &SearchOptions) -> Result<ArboricityResult, SearchError> {
    check_params(m, n, 1)?;
    let mut exhaustion = None;
    // min(m, n) stars always suffice, so the loop terminates.
    for r in 1..=m.min(n) {
        let outcome = exists_p4free(m, n, r, opts)?;
        if outcome.is_found() {
            return Ok(ArboricityResult { m, n, value: r, witness: outcome.witness.clone().expect("found"), exhaustion });
        }
        exhaustion = Some(outcome);
    }
    unreachable!("stars centered on the smaller side give a P4-free min(m, n)-coloring")
}
