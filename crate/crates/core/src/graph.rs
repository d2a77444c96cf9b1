//! Simple undirected graphs on vertex set {0, ..., n-1}.
//!
//! Adjacency is stored as one bitset row per vertex (`Vec<u64>` blocks), which
//! keeps neighborhood scans, degree counts and induced-subgraph extraction
//! cheap at the orders this crate targets (tens of vertices, enumeration up to
//! isomorphism at n <= 10).  Graphs are immutable once built; all "editing"
//! operations return new graphs.

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Cyclomatic classification of a graph.
///
/// The named tags apply to connected graphs only (c = e - n + 1 cycles);
/// everything else — disconnected input or connected with c > 3 — is
/// `Other(c)` where c = e - n + (number of components) is the cycle rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Tree,
    Unicyclic,
    Bicyclic,
    Tricyclic,
    Other(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>, // n rows of `words` u64 blocks each, row-major
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, {:?})", self.n, self.edge_count(), self.edges())
    }
}

impl Graph {
    /// Edgeless graph on n vertices.
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(WORD);
        Graph { n, words, rows: vec![0; n * words] }
    }

    /// Build from an edge list. Duplicate edges collapse; loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge { v: u });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(bi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(bi * WORD + b)
                }
            })
        })
    }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Relabel by `perm`, where perm[old] = new. Must be a bijection.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    // ----- composite constructions -----

    /// Disjoint union; vertices of `other` are shifted by self.n.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Remove the listed edges; each must be present.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::MissingEdge { u, v });
            }
            g.clear_edge(u, v);
        }
        Ok(g)
    }

    /// Disjoint union plus one cross edge (u in self, v in other).
    pub fn connect_one(&self, u: usize, other: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let mut g = self.disjoint_union(other);
        g.set_edge(u, v + self.n);
        Ok(g)
    }

    /// Disjoint union plus two cross edges (u1-v1 and u2-v2, ring-wired).
    pub fn connect_two(
        &self,
        (u1, u2): (usize, usize),
        other: &Graph,
        (v1, v2): (usize, usize),
    ) -> Result<Graph> {
        self.check_vertex(u1)?;
        self.check_vertex(u2)?;
        other.check_vertex(v1)?;
        other.check_vertex(v2)?;
        let mut g = self.disjoint_union(other);
        g.set_edge(u1, v1 + self.n);
        g.set_edge(u2, v2 + self.n);
        Ok(g)
    }

    // ----- structure queries -----

    /// Connected components as (vertex lists, induced subgraphs), in order of
    /// smallest contained vertex.
    pub fn components(&self) -> Vec<(Vec<usize>, Graph)> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut verts = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < verts.len() {
                let u = verts[head];
                head += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        verts.push(w);
                    }
                }
            }
            verts.sort_unstable();
            out.push((verts.clone(), self.induced(&verts)));
        }
        out
    }

    /// Induced subgraph on `verts` (relabeled 0..len in the given order).
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Two-coloring witness: side (0/1) per vertex if bipartite, else None.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn graph_class(&self) -> GraphClass {
        let comps = self.component_count();
        let c = self.edge_count() + comps - self.n; // cycle rank
        if comps != 1 {
            return GraphClass::Other(c);
        }
        match c {
            0 => GraphClass::Tree,
            1 => GraphClass::Unicyclic,
            2 => GraphClass::Bicyclic,
            3 => GraphClass::Tricyclic,
            c => GraphClass::Other(c),
        }
    }

    /// Clique number, exact. Branch and bound (Bron–Kerbosch style) with a
    /// pivot chosen to maximize neighbors inside the candidate set.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let words = self.words;
        let mut full = vec![u64::MAX; words];
        if self.n % WORD != 0 {
            full[words - 1] = (1u64 << (self.n % WORD)) - 1;
        }
        let mut best = 1;
        let mut r = 0usize;
        self.bk(&mut best, &mut r, full);
        best
    }

    fn bk(&self, best: &mut usize, r: &mut usize, p: Vec<u64>) {
        let pc: usize = p.iter().map(|w| w.count_ones() as usize).sum();
        if pc == 0 {
            if *r > *best {
                *best = *r;
            }
            return;
        }
        if *r + pc <= *best {
            return; // cannot beat the incumbent
        }
        // pivot: vertex of P with most neighbors in P
        let mut pivot = usize::MAX;
        let mut pivot_deg = usize::MAX;
        for v in bits(&p) {
            let d = count_and(self.row(v), &p);
            if pivot == usize::MAX || d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        // branch on P \ N(pivot)
        let mut branch: Vec<usize> = bits(&p).filter(|&v| !self.has_edge(pivot, v)).collect();
        branch.sort_unstable();
        let mut p = p;
        for v in branch {
            let mut np: Vec<u64> = p
                .iter()
                .zip(self.row(v))
                .map(|(a, b)| a & b)
                .collect();
            np[v / WORD] &= !(1 << (v % WORD));
            *r += 1;
            self.bk(best, r, np);
            *r -= 1;
            p[v / WORD] &= !(1 << (v % WORD));
        }
    }

    /// Maximum matching size, exact, via memoized exhaustive search over the
    /// remaining-vertex mask. Correct on non-bipartite graphs. Guarded at
    /// n <= 24: the state space is a subset mask, so larger orders are
    /// rejected with an explicit error rather than risking silent blowup.
    pub fn matching_number(&self) -> Result<usize> {
        const LIMIT: usize = 24;
        if self.n > LIMIT {
            return Err(Error::SizeGuard { what: "matching_number", limit: LIMIT, got: self.n });
        }
        let adj: Vec<u32> = (0..self.n)
            .map(|v| self.neighbors(v).fold(0u32, |m, u| m | 1 << u))
            .collect();
        let mut memo = std::collections::HashMap::new();
        Ok(match_rec(
            &adj,
            if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 },
            &mut memo,
        ))
    }
}

fn match_rec(adj: &[u32], mask: u32, memo: &mut std::collections::HashMap<u32, u8>) -> usize {
    // drop vertices with no live neighbor, then recurse on the lowest one
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        if adj[v] & mask != 0 {
            break;
        }
        m &= m - 1;
    }
    if m == 0 {
        return 0;
    }
    let key = {
        let mut k = mask;
        // canonical key: strip the already-skipped isolated low vertices
        let mut t = mask;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            if adj[v] & mask != 0 {
                break;
            }
            k &= !(1 << v);
            t &= t - 1;
        }
        k
    };
    if let Some(&r) = memo.get(&key) {
        return r as usize;
    }
    let v = key.trailing_zeros() as usize;
    let rest = key & !(1 << v);
    // v unmatched
    let mut best = match_rec(adj, rest, memo);
    // v matched to each live neighbor
    let mut nb = adj[v] & rest;
    while nb != 0 {
        let u = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        let r = 1 + match_rec(adj, rest & !(1 << u), memo);
        if r > best {
            best = r;
        }
    }
    memo.insert(key, best as u8);
    best
}

fn bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(bi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(bi * WORD + b)
            }
        })
    })
}

fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}
