//! Canonical forms for small graphs and exhaustive enumeration of connected
//! graphs up to isomorphism.
//!
//! The canonical form is computed by equitable refinement plus an
//! individualize-and-refine search with orbit pruning from discovered
//! automorphisms; the certificate of a graph is the graph6 string of its
//! canonically relabeled copy, so two graphs are isomorphic iff their
//! certificates are equal.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphClass};
use crate::graph6;

/// Largest order accepted by the canonical-form search.
pub const CANON_N_LIMIT: usize = 12;

/// Largest order enumerated without the opt-in entry point.
pub const ENUM_N_LIMIT: usize = 8;

/// Largest order accepted even with the opt-in entry point.
pub const ENUM_N_LIMIT_LARGE: usize = 10;

struct Uf(Vec<usize>);

impl Uf {
    fn new(n: usize) -> Uf {
        Uf((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Equitable refinement (iterated neighbor-color multisets) with colors
/// rank-normalized to 0..cells-1. Refinement only ever splits cells, so a
/// stable cell count means a stable partition.
fn refine(g: &Graph, colors: &mut Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return;
    }
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut new_colors = vec![0usize; n];
        let mut rank = 0;
        new_colors[order[0]] = 0;
        for w in order.windows(2) {
            if sigs[w[1]] != sigs[w[0]] {
                rank += 1;
            }
            new_colors[w[1]] = rank;
        }
        let old_cells = colors.iter().max().unwrap() + 1;
        *colors = new_colors;
        if rank + 1 == old_cells {
            return;
        }
    }
}

/// Pack the relabeled upper triangle into a bit key (fits u128 for n <= 16).
fn key_of(g: &Graph, perm: &[usize]) -> u128 {
    let mut key = 0u128;
    for (u, v) in g.edges() {
        let (i, j) = if perm[u] < perm[v] { (perm[u], perm[v]) } else { (perm[v], perm[u]) };
        key |= 1 << (j * (j - 1) / 2 + i);
    }
    key
}

struct Canon<'a> {
    g: &'a Graph,
    n: usize,
    best_key: Option<u128>,
    best_perm: Vec<usize>,
    gens: Vec<Vec<usize>>,
}

impl Canon<'_> {
    fn is_automorphism(&self, gamma: &[usize]) -> bool {
        self.g.edges().iter().all(|&(u, v)| self.g.has_edge(gamma[u], gamma[v]))
    }

    fn search(&mut self, mut colors: Vec<usize>) {
        refine(self.g, &mut colors);
        let n = self.n;
        let cells = colors.iter().max().map_or(0, |m| m + 1);
        if cells == n {
            // discrete: the coloring is itself the candidate labeling
            let key = key_of(self.g, &colors);
            match self.best_key {
                None => {
                    self.best_key = Some(key);
                    self.best_perm = colors;
                }
                Some(bk) if key < bk => {
                    self.best_key = Some(key);
                    self.best_perm = colors;
                }
                Some(bk) if key == bk => {
                    // two labelings with the same image yield an automorphism
                    let mut inv_best = vec![0usize; n];
                    for v in 0..n {
                        inv_best[self.best_perm[v]] = v;
                    }
                    let gamma: Vec<usize> = (0..n).map(|v| inv_best[colors[v]]).collect();
                    let nontrivial = gamma.iter().enumerate().any(|(i, &gi)| gi != i);
                    if nontrivial && self.is_automorphism(&gamma) {
                        self.gens.push(gamma);
                    }
                }
                _ => {}
            }
            return;
        }

        let mut count = vec![0usize; cells];
        for &c in &colors {
            count[c] += 1;
        }
        let target = (0..cells).find(|&c| count[c] >= 2).unwrap();
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();

        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            // orbit pruning: skip v if a discovered automorphism fixing every
            // current singleton (hence the whole individualization prefix)
            // maps an already-tried candidate onto it
            let mut uf = Uf::new(n);
            for gen in &self.gens {
                let fixes = (0..n).all(|x| count[colors[x]] != 1 || gen[x] == x);
                if fixes {
                    for x in 0..n {
                        let gx = gen[x];
                        uf.union(x, gx);
                    }
                }
            }
            let rv = uf.find(v);
            if tried.iter().any(|&u| uf.find(u) == rv) {
                continue;
            }
            tried.push(v);
            let mut child: Vec<usize> = colors.iter().map(|&c| c * 2 + 1).collect();
            child[v] -= 1;
            self.search(child);
        }
    }
}

fn canon_with_key(g: &Graph) -> Result<(Graph, u128)> {
    let n = g.vertex_count();
    if n > CANON_N_LIMIT {
        return Err(Error::SizeGuard { what: "canonical form order", limit: CANON_N_LIMIT, got: n });
    }
    let mut c = Canon { g, n, best_key: None, best_perm: (0..n).collect(), gens: Vec::new() };
    c.search(vec![0; n]);
    Ok((g.permuted(&c.best_perm), c.best_key.unwrap_or(0)))
}

/// The canonically relabeled copy of g (orders up to 12).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(canon_with_key(g)?.0)
}

/// Isomorphism certificate: graph6 of the canonical relabeling.
pub fn certificate(g: &Graph) -> Result<String> {
    Ok(graph6::encode(&canonical_form(g)?))
}

fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut cur = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut next: Vec<Graph> = Vec::new();
        for h in &cur {
            let base = h.edges();
            for mask in 1u64..1 << (m - 1) {
                let mut edges = base.clone();
                for i in 0..m - 1 {
                    if mask >> i & 1 == 1 {
                        edges.push((i, m - 1));
                    }
                }
                let g = Graph::from_edges(m, &edges)?;
                let (canon, key) = canon_with_key(&g)?;
                if seen.insert(key) {
                    next.push(canon);
                }
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// All connected graphs on n vertices up to isomorphism (n <= 8), built by
/// vertex augmentation: every connected graph has a non-cut vertex, so it
/// arises from a connected graph one vertex smaller by attaching a new vertex
/// along a nonempty neighborhood. Output graphs are canonical and the order
/// is deterministic.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUM_N_LIMIT {
        return Err(Error::SizeGuard { what: "enumeration order", limit: ENUM_N_LIMIT, got: n });
    }
    enumerate_connected(n)
}

/// Opt-in enumeration for n = 9 and 10. The candidate count grows by roughly
/// two orders of magnitude per vertex; n = 10 takes hours.
pub fn connected_graphs_large_ok(n: usize) -> Result<Vec<Graph>> {
    if n > ENUM_N_LIMIT_LARGE {
        return Err(Error::SizeGuard {
            what: "enumeration order (opt-in)",
            limit: ENUM_N_LIMIT_LARGE,
            got: n,
        });
    }
    enumerate_connected(n)
}

/// Keep only graphs of the given class.
pub fn filter_class(graphs: Vec<Graph>, class: GraphClass) -> Vec<Graph> {
    graphs.into_iter().filter(|g| g.graph_class() == class).collect()
}
