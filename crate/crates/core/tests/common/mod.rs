//! Independent oracles for the integration tests. They work on raw row-major
//! color matrices and share no code with the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::Rng;

/// Row-major matrix with `m` rows (side X) and `n` columns (side Y).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Raw {
    pub m: usize,
    pub n: usize,
    pub cells: Vec<u8>,
}

impl Raw {
    pub fn at(&self, x: usize, y: usize) -> u8 {
        self.cells[x * self.n + y]
    }
}

pub fn random_cells(rng: &mut impl Rng, m: usize, n: usize, r: usize) -> Vec<u8> {
    (0..m * n).map(|_| rng.gen_range(0..r) as u8).collect()
}

/// A color class is P4-free iff no edge of that color joins two vertices
/// that both have at least two edges of that color.
pub fn is_p4_free(m: usize, n: usize, cells: &[u8]) -> bool {
    let r = cells.iter().copied().max().map_or(0, |c| c as usize + 1);
    let mut dx = vec![0u32; m * r];
    let mut dy = vec![0u32; n * r];
    for x in 0..m {
        for y in 0..n {
            let c = cells[x * n + y] as usize;
            dx[x * r + c] += 1;
            dy[y * r + c] += 1;
        }
    }
    (0..m).all(|x| {
        (0..n).all(|y| {
            let c = cells[x * n + y] as usize;
            dx[x * r + c] < 2 || dy[y * r + c] < 2
        })
    })
}

/// Whether four explicit vertices form a monochromatic path `x1 y1 x2 y2`.
pub fn is_mono_p4(raw: &Raw, x1: usize, y1: usize, x2: usize, y2: usize) -> bool {
    x1 != x2 && y1 != y2 && {
        let c = raw.at(x1, y1);
        raw.at(x2, y1) == c && raw.at(x2, y2) == c
    }
}

/// Monochromatic components with at least one edge, by breadth-first search.
/// Each entry is `(color, x-set, y-set, edge count)`.
pub fn components(raw: &Raw, r: usize) -> Vec<(usize, BTreeSet<usize>, BTreeSet<usize>, usize)> {
    let mut out = Vec::new();
    for color in 0..r as u8 {
        let mut seen_x = vec![false; raw.m];
        let mut seen_y = vec![false; raw.n];
        for start in 0..raw.m {
            if seen_x[start] || !(0..raw.n).any(|y| raw.at(start, y) == color) {
                continue;
            }
            let mut xs = BTreeSet::new();
            let mut ys = BTreeSet::new();
            let mut stack = vec![(true, start)];
            seen_x[start] = true;
            while let Some((is_x, v)) = stack.pop() {
                if is_x {
                    xs.insert(v);
                    for y in 0..raw.n {
                        if raw.at(v, y) == color && !seen_y[y] {
                            seen_y[y] = true;
                            stack.push((false, y));
                        }
                    }
                } else {
                    ys.insert(v);
                    for x in 0..raw.m {
                        if raw.at(x, v) == color && !seen_x[x] {
                            seen_x[x] = true;
                            stack.push((true, x));
                        }
                    }
                }
            }
            let edges = xs.iter().map(|&x| ys.iter().filter(|&&y| raw.at(x, y) == color).count()).sum();
            out.push((color as usize, xs, ys, edges));
        }
    }
    out
}

/// Largest number of vertices in a monochromatic component with an edge.
pub fn largest_component_size(raw: &Raw, r: usize) -> usize {
    components(raw, r).iter().map(|(_, xs, ys, _)| xs.len() + ys.len()).max().unwrap_or(1)
}

/// Every `r`-coloring of `K_{m,n}`, in odometer order.
pub fn all_colorings(m: usize, n: usize, r: usize) -> impl Iterator<Item = Vec<u8>> {
    let len = m * n;
    let total = (r as u64).checked_pow(len as u32).expect("enumeration too large");
    let mut cells = vec![0u8; len];
    let mut first = true;
    (0..total).map(move |_| {
        if first {
            first = false;
        } else {
            for cell in cells.iter_mut() {
                *cell += 1;
                if (*cell as usize) < r {
                    break;
                }
                *cell = 0;
            }
        }
        cells.clone()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Relabels colors in order of first appearance.
pub fn first_use_labels(cells: &[u8]) -> Vec<u8> {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    cells
        .iter()
        .map(|&c| {
            if map[c as usize] == u8::MAX {
                map[c as usize] = next;
                next += 1;
            }
            map[c as usize]
        })
        .collect()
}

/// Minimum over the whole group (rows, columns, colors, side swap when
/// square) by listing every element. Only for tiny sides.
pub fn brute_canonical(m: usize, n: usize, cells: &[u8]) -> Vec<u8> {
    let mut variants = vec![(m, n, cells.to_vec())];
    if m == n {
        let t: Vec<u8> = (0..n).flat_map(|y| (0..m).map(move |x| cells[x * n + y])).collect();
        variants.push((n, m, t));
    }
    let mut best: Option<Vec<u8>> = None;
    for (m, n, cells) in &variants {
        let cols = permutations(*n);
        for rp in permutations(*m) {
            for cp in &cols {
                let permuted: Vec<u8> = rp.iter().flat_map(|&x| cp.iter().map(move |&y| cells[x * n + y])).collect();
                let cand = first_use_labels(&permuted);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
    }
    best.expect("group is nonempty")
}

/// Number of P4-free colorings and of their isomorphism classes, by full
/// enumeration and brute-force canonical forms.
pub fn brute_p4free_classes(m: usize, n: usize, r: usize) -> (usize, usize) {
    p4free_classes_with(m, n, r, |cells| brute_canonical(m, n, cells))
}

/// Number of P4-free colorings and of distinct `canon` values among them.
/// Every matrix is tested; `canon` only sees colorings whose colors first
/// appear in increasing order, which meet every class (relabeling colors is
/// part of the group).
pub fn p4free_classes_with<K, F>(m: usize, n: usize, r: usize, mut canon: F) -> (usize, usize)
where
    K: std::hash::Hash + Eq,
    F: FnMut(&[u8]) -> K,
{
    let mut found = 0;
    let mut classes = HashSet::new();
    for cells in all_colorings(m, n, r) {
        if is_p4_free(m, n, &cells) {
            found += 1;
            if first_use_labels(&cells) == cells {
                classes.insert(canon(&cells));
            }
        }
    }
    (found, classes.len())
}

/// Parses a class list such as `"A1B1A2, A3B3A4, B2A5B4"` or
/// `"B1A4B2, B3A2B4, B5; A1A3A5"` into edges `(x, y)` with 0-based indices.
/// A comma-separated item is a path; `V; W1W2...` is a star centered at `V`.
pub fn parse_class_list(text: &str) -> Vec<(usize, usize)> {
    fn vertices(s: &str) -> Vec<(char, usize)> {
        let mut out = Vec::new();
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut i = 0;
        while i < chars.len() {
            let side = chars[i];
            assert!(side == 'A' || side == 'B', "unexpected {side:?} in {s:?}");
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let index: usize = chars[i + 1..j].iter().collect::<String>().parse().expect("vertex index");
            out.push((side, index - 1));
            i = j;
        }
        out
    }
    fn edge(a: (char, usize), b: (char, usize)) -> (usize, usize) {
        match (a.0, b.0) {
            ('A', 'B') => (a.1, b.1),
            ('B', 'A') => (b.1, a.1),
            _ => panic!("edge within one side"),
        }
    }
    let mut edges = Vec::new();
    for item in text.split(',') {
        if let Some((center, leaves)) = item.split_once(';') {
            let center = vertices(center)[0];
            edges.extend(vertices(leaves).into_iter().map(|leaf| edge(center, leaf)));
        } else {
            let path = vertices(item);
            edges.extend(path.windows(2).map(|w| edge(w[0], w[1])));
        }
    }
    edges
}
