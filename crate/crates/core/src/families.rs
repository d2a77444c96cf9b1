//! Structured graph families with fixed, documented vertex labelings.
//!
//! Labeling conventions (deterministic — two calls with equal parameters
//! produce identical graphs):
//! * cycles/paths: consecutive along the walk starting at 0;
//! * two-hub families (theta variants): hubs first (0 and 1), then path
//!   interior vertices path by path, then pendants (hub 0's first);
//! * pendant families (u1/u2/t_star/infinity_prime): core first, pendants last.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("path: n >= 1".into()));
    }
    Graph::from_edges(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidFamily("cycle: n >= 3".into()));
    }
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("complete: n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Star on n vertices (center 0): K_{1,n-1}.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("star: n >= 1".into()));
    }
    Graph::from_edges(n, &(1..n).map(|v| (0, v)).collect::<Vec<_>>())
}

/// m disjoint edges.
pub fn m_k2(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidFamily("mk2: m >= 1".into()));
    }
    Graph::from_edges(2 * m, &(0..m).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>())
}

/// Two cycles C_p and C_q joined through a path on t vertices (t = 1 means a
/// shared vertex; t = 2 a direct bridge edge). n = p+q+t-2, e = p+q+t-1.
pub fn infinity_graph(p: usize, q: usize, t: usize) -> Result<Graph> {
    if p < 3 || q < 3 || t < 1 {
        return Err(Error::InvalidFamily(format!(
            "infinity: need p,q >= 3 and t >= 1, got ({p},{q},{t})"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    if t == 1 {
        // C_q shares vertex 0: 0, p, p+1, ..., p+q-2
        let cq: Vec<usize> = std::iter::once(0).chain(p..p + q - 1).collect();
        for i in 0..q {
            edges.push((cq[i], cq[(i + 1) % q]));
        }
        Graph::from_edges(p + q - 1, &edges)
    } else {
        // path 0, p, p+1, ..., p+t-3, p+t-2 into C_q at p+t-2
        let walk: Vec<usize> = std::iter::once(0).chain(p..p + t - 1).collect();
        for w in walk.windows(2) {
            edges.push((w[0], w[1]));
        }
        let base = p + t - 2;
        for i in 0..q {
            edges.push((base + i, base + (i + 1) % q));
        }
        Graph::from_edges(p + q + t - 2, &edges)
    }
}

/// Generalized theta with three hub-to-hub paths having `s[i]` interior
/// vertices each; shared helper for theta_graph and theta_pendants.
fn theta_core(s: [usize; 3]) -> Result<Graph> {
    if s.iter().filter(|&&x| x == 0).count() >= 2 {
        return Err(Error::InvalidFamily(
            "theta: two interior-free paths would form a multigraph".into(),
        ));
    }
    let n = 2 + s.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &si in &s {
        if si == 0 {
            edges.push((0, 1));
            continue;
        }
        let mut prev = 0;
        for v in next..next + si {
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, 1));
        next += si;
    }
    Graph::from_edges(n, &edges)
}

/// Two cycles of lengths p and q sharing a path on t vertices.
/// n = p+q-t, e = n+1; the longest cycle has length p+q-2t+2.
pub fn theta_graph(p: usize, q: usize, t: usize) -> Result<Graph> {
    if p < 3 || q < 3 || t < 2 || 2 * t > p + 2 || 2 * t > q + 2 {
        return Err(Error::InvalidFamily(format!(
            "theta: need p,q >= 3 and 2 <= t <= min((p+2)/2,(q+2)/2), got ({p},{q},{t})"
        )));
    }
    theta_core([t - 2, p - t, q - t])
}

/// Theta core with short paths (s_i interior vertices, each 0..=2, at most
/// one 0) plus a pendants at hub 0 and b pendants at hub 1.
pub fn theta_pendants(s1: usize, s2: usize, s3: usize, a: usize, b: usize) -> Result<Graph> {
    let s = [s1, s2, s3];
    if s.iter().any(|&x| x > 2) {
        return Err(Error::InvalidFamily(format!(
            "theta_pendants: each path carries at most 2 interior vertices, got {s:?}"
        )));
    }
    let core = theta_core(s)?;
    let nc = core.vertex_count();
    let mut edges = core.edges();
    for i in 0..a {
        edges.push((0, nc + i));
    }
    for i in 0..b {
        edges.push((1, nc + a + i));
    }
    Graph::from_edges(nc + a + b, &edges)
}

/// Triangle with a pendants at vertex 0 and b at vertex 1 (a >= b >= 0).
pub fn u1(a: usize, b: usize) -> Result<Graph> {
    if a < b {
        return Err(Error::InvalidFamily(format!("u1: need a >= b, got ({a},{b})")));
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for i in 0..a {
        edges.push((0, 3 + i));
    }
    for i in 0..b {
        edges.push((1, 3 + a + i));
    }
    Graph::from_edges(3 + a + b, &edges)
}

/// Quadrangle with a pendants at vertex 0 and b at the opposite
/// (nonadjacent) vertex 2 (a >= b >= 0).
pub fn u2(a: usize, b: usize) -> Result<Graph> {
    if a < b {
        return Err(Error::InvalidFamily(format!("u2: need a >= b, got ({a},{b})")));
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
    for i in 0..a {
        edges.push((0, 4 + i));
    }
    for i in 0..b {
        edges.push((2, 4 + a + i));
    }
    Graph::from_edges(4 + a + b, &edges)
}

/// Star on n vertices with i of its edges subdivided once: center 0,
/// n-2i-1 plain leaves, then i two-vertex arms. Needs n >= 2i+1, i <= 3.
pub fn t_star(n: usize, i: usize) -> Result<Graph> {
    if i > 3 || n < 2 * i + 1 || n < 1 {
        return Err(Error::InvalidFamily(format!(
            "t_star: need i <= 3 and n >= 2i+1, got (n={n}, i={i})"
        )));
    }
    let leaves = n - 2 * i - 1;
    let mut edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    for j in 0..i {
        let x = leaves + 1 + 2 * j;
        edges.push((0, x));
        edges.push((x, x + 1));
    }
    Graph::from_edges(n, &edges)
}

/// Two triangles sharing vertex 0, plus n-5 pendants at 0 (n >= 5).
pub fn infinity_prime_331(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::InvalidFamily(format!("infinityprime: n >= 5, got {n}")));
    }
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)];
    for v in 5..n {
        edges.push((0, v));
    }
    Graph::from_edges(n, &edges)
}

/// A parsed family instance: `name(p1,p2,...)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub params: Vec<usize>,
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let args: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.name, args.join(","))
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| Error::FamilyParse(s.into()))?;
        if !s.ends_with(')') {
            return Err(Error::FamilyParse(s.into()));
        }
        let name = s[..open].trim().to_ascii_lowercase();
        if name.is_empty() {
            return Err(Error::FamilyParse(s.into()));
        }
        let inner = &s[open + 1..s.len() - 1];
        let mut params = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::FamilyParse(s.into()));
            }
            params.push(part.parse::<usize>().map_err(|_| Error::FamilyParse(s.into()))?);
        }
        Ok(FamilySpec { name, params })
    }
}

impl FamilySpec {
    /// Instantiate the graph this spec names.
    pub fn build(&self) -> Result<Graph> {
        let p = &self.params;
        let arity = |want: usize| -> Result<()> {
            if p.len() == want {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!(
                    "{} takes {want} parameter(s), got {}",
                    self.name,
                    p.len()
                )))
            }
        };
        match self.name.as_str() {
            "cycle" => {
                arity(1)?;
                cycle(p[0])
            }
            "path" => {
                arity(1)?;
                path(p[0])
            }
            "complete" => {
                arity(1)?;
                complete(p[0])
            }
            "star" => {
                arity(1)?;
                star(p[0])
            }
            "mk2" => {
                arity(1)?;
                m_k2(p[0])
            }
            "infinity" => {
                arity(3)?;
                infinity_graph(p[0], p[1], p[2])
            }
            "theta" => {
                arity(3)?;
                theta_graph(p[0], p[1], p[2])
            }
            "u1" => {
                arity(2)?;
                u1(p[0], p[1])
            }
            "u2" => {
                arity(2)?;
                u2(p[0], p[1])
            }
            "tstar" => {
                arity(2)?;
                t_star(p[0], p[1])
            }
            "infinityprime" => {
                arity(1)?;
                infinity_prime_331(p[0])
            }
            "thetap" => {
                arity(5)?;
                theta_pendants(p[0], p[1], p[2], p[3], p[4])
            }
            other => Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        }
    }
}
