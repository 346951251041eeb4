//! The coloring data model: edge-colorings of complete bipartite and complete
//! graphs, plus the canonical text and JSON encodings.
//!
//! Rows of the color matrix are the vertices of side `X`, columns the vertices
//! of side `Y`. Colors are 0-based indices below `r`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ColoringError, ParseError};

/// Largest number of colors a coloring may carry (colors are stored as `u8`).
pub const MAX_COLORS: usize = 256;

/// One of the two sides of `K_{m,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SideLabel {
    X,
    Y,
}

impl SideLabel {
    pub fn other(self) -> SideLabel {
        match self {
            SideLabel::X => SideLabel::Y,
            SideLabel::Y => SideLabel::X,
        }
    }
}

impl fmt::Display for SideLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SideLabel::X => f.write_str("X"),
            SideLabel::Y => f.write_str("Y"),
        }
    }
}

/// An `r`-edge-coloring of `K_{m,n}`, stored row-major.
///
/// Immutable after construction; every accessor assumes the invariants
/// checked by [`BipartiteColoring::new`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BipartiteColoring {
    m: usize,
    n: usize,
    r: usize,
    cells: Vec<u8>,
}

impl BipartiteColoring {
    /// Validates `matrix` (one row per `X` vertex) and builds the coloring.
    pub fn new(m: usize, n: usize, r: usize, matrix: &[Vec<i64>]) -> Result<Self, ColoringError> {
        check_dims(m, n, r)?;
        if matrix.len() != m {
            return Err(ColoringError::RowCount { expected: m, found: matrix.len() });
        }
        let mut cells = Vec::with_capacity(m * n);
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(ColoringError::RowLength { row: i, expected: n, found: row.len() });
            }
            for (j, &c) in row.iter().enumerate() {
                if c < 0 || c as u64 >= r as u64 {
                    return Err(ColoringError::ColorOutOfRange { row: i, col: j, color: c, r });
                }
                cells.push(c as u8);
            }
        }
        Ok(BipartiteColoring { m, n, r, cells })
    }

    /// Builds a coloring from a row-major cell vector.
    pub fn from_cells(m: usize, n: usize, r: usize, cells: Vec<u8>) -> Result<Self, ColoringError> {
        check_dims(m, n, r)?;
        if cells.len() != m * n {
            return Err(ColoringError::CellCount { expected: m * n, found: cells.len() });
        }
        if let Some(pos) = cells.iter().position(|&c| c as usize >= r) {
            return Err(ColoringError::ColorOutOfRange {
                row: pos / n,
                col: pos % n,
                color: cells[pos] as i64,
                r,
            });
        }
        Ok(BipartiteColoring { m, n, r, cells })
    }

    /// Builds a coloring by evaluating `f(x, y)` on every edge.
    pub fn from_fn(
        m: usize,
        n: usize,
        r: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, ColoringError> {
        check_dims(m, n, r)?;
        let mut cells = Vec::with_capacity(m * n);
        for x in 0..m {
            for y in 0..n {
                let c = f(x, y);
                if c >= r {
                    return Err(ColoringError::ColorOutOfRange { row: x, col: y, color: c as i64, r });
                }
                cells.push(c as u8);
            }
        }
        Ok(BipartiteColoring { m, n, r, cells })
    }

    /// The monochromatic coloring of `K_{m,n}` with `r` available colors.
    pub fn uniform(m: usize, n: usize, r: usize, color: usize) -> Result<Self, ColoringError> {
        Self::from_fn(m, n, r, |_, _| color)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Color of the edge between `X`-vertex `x` and `Y`-vertex `y`.
    #[inline]
    pub fn color(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y] as usize
    }

    /// Row-major cell slice.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn row(&self, x: usize) -> &[u8] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.m).map(|x| self.row(x).iter().map(|&c| c as usize).collect()).collect()
    }

    /// Number of vertices on `side`.
    pub fn side_len(&self, side: SideLabel) -> usize {
        match side {
            SideLabel::X => self.m,
            SideLabel::Y => self.n,
        }
    }

    /// Color of the edge `{u, v}` where `u` lies on `side` and `v` on the other side.
    pub fn color_from(&self, side: SideLabel, u: usize, v: usize) -> usize {
        match side {
            SideLabel::X => self.color(u, v),
            SideLabel::Y => self.color(v, u),
        }
    }

    /// Number of edges of each color.
    pub fn color_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.r];
        for &c in &self.cells {
            counts[c as usize] += 1;
        }
        counts
    }

    /// Swaps the roles of `X` and `Y`.
    pub fn transpose(&self) -> BipartiteColoring {
        let mut cells = Vec::with_capacity(self.cells.len());
        for y in 0..self.n {
            for x in 0..self.m {
                cells.push(self.cells[x * self.n + y]);
            }
        }
        BipartiteColoring { m: self.n, n: self.m, r: self.r, cells }
    }

    /// The coloring induced on the sub-biclique `[xs, ys]`; vertex `i` of the
    /// result is `xs[i]` (resp. `ys[i]`) of `self`.
    pub fn restrict(&self, xs: &[usize], ys: &[usize]) -> Result<BipartiteColoring, ColoringError> {
        check_dims(xs.len(), ys.len(), self.r)?;
        let mut cells = Vec::with_capacity(xs.len() * ys.len());
        for &x in xs {
            for &y in ys {
                cells.push(self.cells[x * self.n + y]);
            }
        }
        Ok(BipartiteColoring { m: xs.len(), n: ys.len(), r: self.r, cells })
    }

    /// Same matrix with a larger palette.
    pub fn with_colors(&self, r: usize) -> Result<BipartiteColoring, ColoringError> {
        Self::from_cells(self.m, self.n, r, self.cells.clone())
    }

    /// Canonical text encoding: header `m n r`, then one line per `X` vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.m, self.n, self.r);
        for x in 0..self.m {
            let row: Vec<String> = self.row(x).iter().map(|c| c.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoringJson::from(self)).expect("coloring serializes")
    }

    /// Parses the canonical text format, or the JSON form when the input
    /// starts with `{`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn parse_json(text: &str) -> Result<Self, ParseError> {
        let raw: ColoringJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        Ok(BipartiteColoring::new(raw.m, raw.n, raw.r, &raw.colors)?)
    }

    pub fn parse_text(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(ParseError::MissingHeader)?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(ParseError::MalformedHeader(header.to_string()));
        }
        let mut dims = [0usize; 3];
        for (slot, tok) in dims.iter_mut().zip(&fields) {
            *slot = tok.parse().map_err(|_| ParseError::MalformedHeader(header.to_string()))?;
        }
        let [m, n, r] = dims;
        let mut rows = Vec::with_capacity(m);
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            if rows.len() == m {
                return Err(ColoringError::RowCount { expected: m, found: i + 1 }.into());
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>().map_err(|_| ParseError::NonInteger { line: i + 2, token: tok.to_string() })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Ok(BipartiteColoring::new(m, n, r, &rows)?)
    }
}

fn check_dims(m: usize, n: usize, r: usize) -> Result<(), ColoringError> {
    if m == 0 || n == 0 {
        return Err(ColoringError::EmptySide { m, n });
    }
    if r == 0 {
        return Err(ColoringError::NoColors);
    }
    if r > MAX_COLORS {
        return Err(ColoringError::TooManyColors(r));
    }
    Ok(())
}

impl fmt::Debug for BipartiteColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteColoring({})", self.to_text().trim_end().replace('\n', " | "))
    }
}

impl fmt::Display for BipartiteColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for BipartiteColoring {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    m: usize,
    n: usize,
    r: usize,
    colors: Vec<Vec<i64>>,
}

impl From<&BipartiteColoring> for ColoringJson {
    fn from(c: &BipartiteColoring) -> Self {
        ColoringJson {
            m: c.m,
            n: c.n,
            r: c.r,
            colors: (0..c.m).map(|x| c.row(x).iter().map(|&v| v as i64).collect()).collect(),
        }
    }
}

impl Serialize for BipartiteColoring {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ColoringJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BipartiteColoring {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ColoringJson::deserialize(deserializer)?;
        BipartiteColoring::new(raw.m, raw.n, raw.r, &raw.colors).map_err(serde::de::Error::custom)
    }
}

/// An `s`-edge-coloring of the complete graph `K_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteColoring {
    t: usize,
    s: usize,
    // Full symmetric matrix; the diagonal holds 0 and is never read.
    cells: Vec<u8>,
}

impl CompleteColoring {
    /// Builds a coloring from a symmetric matrix; diagonal entries are ignored.
    pub fn new(t: usize, s: usize, matrix: &[Vec<i64>]) -> Result<Self, ColoringError> {
        if t == 0 {
            return Err(ColoringError::EmptySide { m: 0, n: 0 });
        }
        if s == 0 {
            return Err(ColoringError::NoColors);
        }
        if s >= MAX_COLORS {
            return Err(ColoringError::TooManyColors(s));
        }
        if matrix.len() != t {
            return Err(ColoringError::RowCount { expected: t, found: matrix.len() });
        }
        let mut cells = vec![0u8; t * t];
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != t {
                return Err(ColoringError::RowLength { row: i, expected: t, found: row.len() });
            }
            for (j, &c) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if c < 0 || c as u64 >= s as u64 {
                    return Err(ColoringError::ColorOutOfRange { row: i, col: j, color: c, r: s });
                }
                if matrix[j][i] != c {
                    return Err(ColoringError::Asymmetric { i, j });
                }
                cells[i * t + j] = c as u8;
            }
        }
        Ok(CompleteColoring { t, s, cells })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Color of the edge `{i, j}`, `i != j`.
    pub fn color(&self, i: usize, j: usize) -> usize {
        debug_assert_ne!(i, j);
        self.cells[i * self.t + j] as usize
    }

    /// Edges of color `c` as pairs `(i, j)` with `i < j`.
    pub fn class_edges(&self, c: usize) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.t {
            for j in i + 1..self.t {
                if self.color(i, j) == c {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}
