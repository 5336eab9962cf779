//! The PGP data model: depth-graded bipartite graphs, duality, working depth.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Side = usize; // 0 = principal graph, 1 = dual principal graph

/// A vertex of a PGP, addressed by graph side, depth, and height index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Vertex {
    pub side: Side,
    pub depth: usize,
    pub idx: usize,
}

impl Vertex {
    pub fn new(side: Side, depth: usize, idx: usize) -> Self {
        Vertex { side, depth, idx }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PgpError {
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// One depth-graded bipartite graph.
///
/// `rows[d-1]` holds the vertices at depth `d`, each given by its vector of
/// edge multiplicities to the previous depth's vertices (height order). A
/// trailing empty row is legal and marks an empty working-depth row; it is
/// preserved so that printed codec strings round-trip byte-exactly.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Bigraph {
    pub roots: usize,
    pub rows: Vec<Vec<Vec<u32>>>,
}

impl Bigraph {
    pub fn point() -> Self {
        Bigraph { roots: 1, rows: Vec::new() }
    }

    /// Number of vertices at a given depth.
    pub fn count(&self, depth: usize) -> usize {
        if depth == 0 {
            self.roots
        } else {
            self.rows.get(depth - 1).map_or(0, |r| r.len())
        }
    }

    /// Largest depth holding at least one vertex.
    pub fn max_depth(&self) -> usize {
        let mut d = self.rows.len();
        while d > 0 && self.rows[d - 1].is_empty() {
            d -= 1;
        }
        d
    }

    pub fn num_vertices(&self) -> usize {
        self.roots + self.rows.iter().map(|r| r.len()).sum::<usize>()
    }

    /// Edge multiplicity between (depth, i) and (depth+1, j).
    pub fn mult_up(&self, depth: usize, i: usize, j: usize) -> u32 {
        self.rows[depth][j][i]
    }

    pub fn mult_down(&self, depth: usize, i: usize, j: usize) -> u32 {
        debug_assert!(depth >= 1);
        self.rows[depth - 1][i][j]
    }

    /// Graph neighbours (with multiplicity) of vertex (depth, idx),
    /// as (depth', idx', multiplicity).
    pub fn neighbours(&self, depth: usize, idx: usize) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        if depth >= 1 {
            for (j, &m) in self.rows[depth - 1][idx].iter().enumerate() {
                if m > 0 {
                    out.push((depth - 1, j, m));
                }
            }
        }
        if let Some(row) = self.rows.get(depth) {
            for (j, v) in row.iter().enumerate() {
                if v[idx] > 0 {
                    out.push((depth + 1, j, v[idx]));
                }
            }
        }
        out
    }

    pub fn degree(&self, depth: usize, idx: usize) -> u32 {
        self.neighbours(depth, idx).iter().map(|&(_, _, m)| m).sum()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.rows.iter().flatten().flatten().all(|&m| m <= 1)
    }

    /// Full symmetric adjacency matrix over all vertices, ordered by
    /// (depth, height).
    pub fn adjacency(&self) -> (Vec<Vec<u32>>, Vec<(usize, usize)>) {
        let mut ids = Vec::new();
        for d in 0..=self.max_depth() {
            for i in 0..self.count(d) {
                ids.push((d, i));
            }
        }
        let pos = |d: usize, i: usize| -> usize {
            let mut p = 0;
            for dd in 0..d {
                p += self.count(dd);
            }
            p + i
        };
        let n = ids.len();
        let mut a = vec![vec![0u32; n]; n];
        for (d, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for (i, &m) in v.iter().enumerate() {
                    if m > 0 {
                        let p = pos(d, i);
                        let q = pos(d + 1, j);
                        a[p][q] = m;
                        a[q][p] = m;
                    }
                }
            }
        }
        (a, ids)
    }

    /// Insert `two_t` chain vertices before depth 0 (translation by `two_t`).
    pub fn translate(&self, two_t: usize) -> Bigraph {
        assert!(two_t % 2 == 0, "translations must be even");
        if two_t == 0 {
            return self.clone();
        }
        assert_eq!(self.roots, 1, "only single-root graphs can be translated");
        let mut rows = Vec::with_capacity(self.rows.len() + two_t);
        for _ in 0..two_t {
            rows.push(vec![vec![1]]);
        }
        rows.extend(self.rows.iter().cloned());
        Bigraph { roots: 1, rows }
    }

    /// Delete all vertices above `depth`.
    pub fn truncate(&self, depth: usize) -> Bigraph {
        Bigraph {
            roots: self.roots,
            rows: self.rows.iter().take(depth).cloned().collect(),
        }
    }
}

/// A principal graph pair with duality and working depth.
///
/// `duals[side][k]` is the involution on the depth-`2k` vertices of graph
/// `side` (0-based heights). Odd-depth duality is implicit: vertex `j` at an
/// odd depth of one graph is dual to vertex `j` at the same depth of the
/// other. Trailing empty perms mirror trailing empty rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Pgp {
    pub g: [Bigraph; 2],
    pub duals: [Vec<Vec<usize>>; 2],
    pub working_depth: usize,
}

impl Pgp {
    /// The pair of single basepoints at working depth 0.
    pub fn empty() -> Self {
        Pgp {
            g: [Bigraph::point(), Bigraph::point()],
            duals: [vec![vec![0]], vec![vec![0]]],
            working_depth: 0,
        }
    }

    pub fn max_depth(&self) -> usize {
        self.g[0].max_depth().max(self.g[1].max_depth())
    }

    pub fn count(&self, side: Side, depth: usize) -> usize {
        self.g[side].count(depth)
    }

    pub fn num_vertices(&self) -> usize {
        self.g[0].num_vertices() + self.g[1].num_vertices()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        for side in 0..2 {
            for d in 0..=self.g[side].max_depth() {
                for i in 0..self.count(side, d) {
                    out.push(Vertex::new(side, d, i));
                }
            }
        }
        out
    }

    pub fn dual(&self, v: Vertex) -> Vertex {
        if v.depth % 2 == 0 {
            // an absent dual block defaults to the identity (self-dual)
            let j = self.duals[v.side]
                .get(v.depth / 2)
                .and_then(|p| p.get(v.idx))
                .copied()
                .unwrap_or(v.idx);
            Vertex::new(v.side, v.depth, j)
        } else {
            Vertex::new(1 - v.side, v.depth, v.idx)
        }
    }

    /// The same pair viewed as a finished graph: working depth one past the
    /// deepest vertex, presentation normalized.
    pub fn completed(&self) -> Pgp {
        let mut p = self.clone();
        p.working_depth = self.max_depth() + 1;
        p.normalize_presentation();
        p
    }

    pub fn is_self_dual(&self, v: Vertex) -> bool {
        self.dual(v) == v
    }

    pub fn neighbours(&self, v: Vertex) -> Vec<(Vertex, u32)> {
        self.g[v.side]
            .neighbours(v.depth, v.idx)
            .into_iter()
            .map(|(d, i, m)| (Vertex::new(v.side, d, i), m))
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        self.g[v.side].degree(v.depth, v.idx)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.g[0].is_simply_laced() && self.g[1].is_simply_laced()
    }

    /// Level function of the construction groupoid: working depth plus the
    /// number of self-dual vertices plus the number of dual pairs.
    pub fn level(&self) -> usize {
        let mut selfdual = 0;
        let mut pairs = 0;
        for v in self.vertices() {
            let w = self.dual(v);
            if w == v {
                selfdual += 1;
            } else if w > v {
                pairs += 1;
            }
        }
        self.working_depth + selfdual + pairs
    }

    pub fn swap_sides(&self) -> Pgp {
        Pgp {
            g: [self.g[1].clone(), self.g[0].clone()],
            duals: [self.duals[1].clone(), self.duals[0].clone()],
            working_depth: self.working_depth,
        }
    }

    pub fn translate(&self, two_t: usize) -> Pgp {
        if two_t == 0 {
            return self.clone();
        }
        let mut duals = [Vec::new(), Vec::new()];
        for side in 0..2 {
            for _ in 0..two_t / 2 {
                duals[side].push(vec![0]);
            }
            duals[side].extend(self.duals[side].iter().cloned());
        }
        Pgp {
            g: [self.g[0].translate(two_t), self.g[1].translate(two_t)],
            duals,
            working_depth: self.working_depth + two_t,
        }
    }

    /// Truncation: delete all vertices above `depth`; working depth becomes
    /// `depth`.
    pub fn truncate(&self, depth: usize) -> Pgp {
        let mut duals = [Vec::new(), Vec::new()];
        for side in 0..2 {
            duals[side] = self.duals[side]
                .iter()
                .take(depth / 2 + 1)
                .cloned()
                .collect();
        }
        Pgp {
            g: [self.g[0].truncate(depth), self.g[1].truncate(depth)],
            duals,
            working_depth: depth,
        }
    }

    /// Normalize presentation slots: rows out to the working depth, dual
    /// perms for every even depth up to the working depth.
    pub fn normalize_presentation(&mut self) {
        for side in 0..2 {
            while self.g[side].rows.len() > self.working_depth
                && self.g[side].rows.last().is_some_and(|r| r.is_empty())
            {
                self.g[side].rows.pop();
            }
            while self.g[side].rows.len() < self.working_depth {
                self.g[side].rows.push(Vec::new());
            }
            let want = self.working_depth / 2 + 1;
            while self.duals[side].len() > want
                && self.duals[side].last().is_some_and(|p| p.is_empty())
            {
                self.duals[side].pop();
            }
            while self.duals[side].len() < want {
                self.duals[side].push(Vec::new());
            }
        }
    }

    /// Structural validation: shapes, duality involution, working depth.
    pub fn validate(&self) -> Result<(), PgpError> {
        for side in 0..2 {
            let g = &self.g[side];
            if g.roots == 0 {
                return Err(PgpError::Invariant("empty depth-0 row".into()));
            }
            for (d, row) in g.rows.iter().enumerate() {
                let prev = g.count(d);
                for v in row {
                    if v.len() != prev {
                        return Err(PgpError::Invariant(format!(
                            "row at depth {} has a multiplicity vector of length {} (expected {})",
                            d + 1,
                            v.len(),
                            prev
                        )));
                    }
                    if v.iter().all(|&m| m == 0) {
                        return Err(PgpError::Invariant(format!(
                            "vertex at depth {} has no edge to depth {}",
                            d + 1,
                            d
                        )));
                    }
                }
                if row.is_empty() && d + 1 < g.max_depth() {
                    return Err(PgpError::Invariant(format!(
                        "empty row at depth {} below populated depths",
                        d + 1
                    )));
                }
            }
            // even-depth duals, where present, involutive and of the right
            // size (absent trailing blocks default to the identity)
            let md = g.max_depth();
            let mut d = 0;
            while d <= md {
                let n = g.count(d);
                if n > 0 {
                    if let Some(perm) = self.duals[side].get(d / 2) {
                        if perm.len() != n {
                            return Err(PgpError::Invariant(format!(
                                "dual data at depth {d} has {} entries (expected {n})",
                                perm.len()
                            )));
                        }
                        for (i, &j) in perm.iter().enumerate() {
                            if j >= n || perm[j] != i {
                                return Err(PgpError::Invariant(format!(
                                    "dual data at depth {d} is not an involution"
                                )));
                            }
                        }
                    }
                }
                d += 2;
            }
        }
        // odd-depth rows must pair up across the two graphs
        let md = self.max_depth();
        let mut d = 1;
        while d <= md {
            if self.count(0, d) != self.count(1, d) {
                return Err(PgpError::Invariant(format!(
                    "odd depth {d} has {} vertices on one graph and {} on the other",
                    self.count(0, d),
                    self.count(1, d)
                )));
            }
            d += 2;
        }
        let wd = self.working_depth;
        if wd < md || wd > md + 1 {
            return Err(PgpError::Invariant(format!(
                "working depth {wd} incompatible with max depth {md}"
            )));
        }
        Ok(())
    }
}
