//! Dense symmetric eigensolver and signless Laplacian spectra.
//!
//! The float evaluation path: build Q(G) = D(G) + A(G) (or L = D - A), run a
//! cyclic Jacobi iteration to convergence, and sum leading eigenvalues.
//!
//! Jacobi is chosen deliberately: unconditionally stable on symmetric input,
//! high relative accuracy, no convergence tuning — the right trade at the
//! orders this crate targets (n up to a few hundred).  A full row-cyclic sweep
//! rotates every off-diagonal pair (p,q); sweeps repeat until the off-diagonal
//! Frobenius mass drops below 1e-12 times the Frobenius norm of the input.
//!
//! ```text
//!   S_k^+(G) = q_1 + ... + q_min(k,n)     (sum of largest Q-eigenvalues)
//!   S_n^+(G) = trace Q = 2 e(G)
//! ```

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which matrix a spectrum came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    SignlessLaplacian,
    Laplacian,
    Plain,
}

/// Eigenvalues in descending order, with multiplicity.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    source: SpectrumSource,
}

impl Spectrum {
    fn new(mut values: Vec<f64>, source: SpectrumSource) -> Spectrum {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Spectrum { values, source }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn source(&self) -> SpectrumSource {
        self.source
    }

    /// Sum of the k largest values; k past the end sums everything.
    pub fn top_sum(&self, k: usize) -> f64 {
        self.values.iter().take(k).sum()
    }
}

/// Dense symmetric matrix; symmetry is enforced at construction, so every
/// downstream consumer can rely on entries(i,j) == entries(j,i) exactly.
#[derive(Debug, Clone)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>, // row-major, full storage
}

impl SymMatrix {
    /// Build from a row-major table; rejects asymmetry beyond 1e-12
    /// (relative to the pair magnitude) and symmetrizes exactly below it.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SymMatrix> {
        let order = rows.len();
        let mut entries = vec![0.0; order * order];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), order, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                entries[i * order + j] = x;
            }
        }
        for i in 0..order {
            for j in i + 1..order {
                let a = entries[i * order + j];
                let b = entries[j * order + i];
                let scale = 1.0f64.max(a.abs()).max(b.abs());
                if (a - b).abs() > 1e-12 * scale {
                    return Err(Error::NotSymmetric { i, j });
                }
                let m = 0.5 * (a + b);
                entries[i * order + j] = m;
                entries[j * order + i] = m;
            }
        }
        Ok(SymMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }
}

/// Q(G) = D + A.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    build(g, 1.0)
}

/// L(G) = D - A.
pub fn laplacian(g: &Graph) -> SymMatrix {
    build(g, -1.0)
}

fn build(g: &Graph, sign: f64) -> SymMatrix {
    let n = g.vertex_count();
    let mut entries = vec![0.0; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as f64;
        for u in g.neighbors(v) {
            entries[v * n + u] = sign;
        }
    }
    SymMatrix { order: n, entries }
}

/// All eigenvalues of a symmetric matrix, descending.
pub fn eigenvalues_sym(m: &SymMatrix) -> Result<Spectrum> {
    let (vals, _) = jacobi(m)?;
    Ok(Spectrum::new(vals, SpectrumSource::Plain))
}

/// Spectrum of Q(G), descending.
pub fn q_spectrum(g: &Graph) -> Result<Spectrum> {
    let (vals, _) = jacobi(&signless_laplacian(g))?;
    let s = Spectrum::new(vals, SpectrumSource::SignlessLaplacian);
    debug_assert!(s.values.last().copied().unwrap_or(0.0) >= -1e-9);
    Ok(s)
}

/// Spectrum of L(G), descending.
pub fn l_spectrum(g: &Graph) -> Result<Spectrum> {
    let (vals, _) = jacobi(&laplacian(g))?;
    let s = Spectrum::new(vals, SpectrumSource::Laplacian);
    debug_assert!(s.values.last().copied().unwrap_or(0.0) >= -1e-9);
    Ok(s)
}

/// S_k^+(G): sum of the k largest signless Laplacian eigenvalues.
/// k = 0 is rejected; k > n sums all n (the whole-spectrum convention).
pub fn s_plus(g: &Graph, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::KOutOfRange { k, reason: "k must be >= 1" });
    }
    Ok(q_spectrum(g)?.top_sum(k))
}

/// Laplacian analogue S_k(G), same k convention.
pub fn s_lap(g: &Graph, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::KOutOfRange { k, reason: "k must be >= 1" });
    }
    Ok(l_spectrum(g)?.top_sum(k))
}

/// Families whose Q-spectrum is known in closed form.
#[derive(Debug, Clone, Copy)]
pub enum ClosedForm {
    /// K_w: {2w-2} + {w-2 with multiplicity w-1}
    Complete { omega: usize },
    /// K_{1,d}: {d+1} + {1 with multiplicity d-1} + {0}
    Star { delta: usize },
    /// m disjoint edges: {2 with multiplicity m} + {0 with multiplicity m}
    Matching { m: usize },
}

/// Exact reference spectrum (descending) for the closed-form families.
pub fn closed_form_spectrum(family: ClosedForm) -> Result<Vec<f64>> {
    match family {
        ClosedForm::Complete { omega } => {
            if omega == 0 {
                return Err(Error::InvalidFamily("complete: omega >= 1".into()));
            }
            let mut v = vec![2.0 * omega as f64 - 2.0];
            v.extend(std::iter::repeat(omega as f64 - 2.0).take(omega - 1));
            Ok(v)
        }
        ClosedForm::Star { delta } => {
            if delta == 0 {
                return Err(Error::InvalidFamily("star: delta >= 1".into()));
            }
            let mut v = vec![delta as f64 + 1.0];
            v.extend(std::iter::repeat(1.0).take(delta - 1));
            v.push(0.0);
            Ok(v)
        }
        ClosedForm::Matching { m } => {
            if m == 0 {
                return Err(Error::InvalidFamily("matching: m >= 1".into()));
            }
            let mut v = vec![2.0; m];
            v.extend(std::iter::repeat(0.0).take(m));
            Ok(v)
        }
    }
}

/// Cyclic Jacobi. Returns (eigenvalues unsorted, eigenvectors as columns).
/// The eigenvector matrix is used internally for residual spot checks.
pub(crate) fn jacobi(m: &SymMatrix) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = m.order;
    let mut a = m.entries.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    if n <= 1 {
        return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
    }
    let fro: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = 1e-12 * fro;
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    if off(&a) <= target {
        return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
    }
    const MAX_SWEEPS: usize = 64;
    for _ in 0..MAX_SWEEPS {
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (c, s) = {
                    let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + (1.0 + tau * tau).sqrt())
                    } else {
                        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    (c, t * c)
                };
                // A <- J^T A J on rows/cols p, q
                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[p * n + j];
                    let aqj = a[q * n + j];
                    a[p * n + j] = c * apj - s * aqj;
                    a[q * n + j] = s * apj + c * aqj;
                }
                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = c * vip - s * viq;
                    v[i * n + q] = s * vip + c * viq;
                }
            }
        }
        if off(&a) <= target {
            return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
        }
    }
    Err(Error::NoConvergence)
}
