//! Classical upper bounds on the partial spectral sum S_k^+ and the
//! conjectured right-hand side e + k(k+1)/2.
//!
//! Every formula is evaluated in exact rational arithmetic; the report type
//! converts to f64 only at the serialization boundary.

use num::{BigInt, BigRational, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphClass};
use crate::graph6;
use crate::spectral;

fn rat(v: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(n: i128, d: i128) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Conjectured bound e + k(k+1)/2 (the k-th triangular number past e).
pub fn conjecture_rhs(e: usize, k: usize) -> BigRational {
    rat(e as i128) + rat((k as i128) * (k as i128 + 1) / 2)
}

/// 2e - w^2 + (k+2)w - 2k for a graph of clique number w; valid for 1 <= k <= w.
pub fn clique_bound(e: usize, omega: usize, k: usize) -> Result<BigRational> {
    if k == 0 || k > omega {
        return Err(Error::KOutOfRange { k, reason: "clique bound needs 1 <= k <= omega" });
    }
    let (e, w, k) = (e as i128, omega as i128, k as i128);
    Ok(rat(2 * e - w * w + (k + 2) * w - 2 * k))
}

/// 2e - d + k for a graph of maximum degree d; valid for 1 <= k <= d.
pub fn degree_bound(e: usize, max_degree: usize, k: usize) -> Result<BigRational> {
    if k == 0 || k > max_degree {
        return Err(Error::KOutOfRange { k, reason: "degree bound needs 1 <= k <= max degree" });
    }
    Ok(rat(2 * e as i128 - max_degree as i128 + k as i128))
}

/// 2e - 2m + 2k for a graph of matching number m; valid for 1 <= k <= m.
pub fn matching_bound(e: usize, matching: usize, k: usize) -> Result<BigRational> {
    if k == 0 || k > matching {
        return Err(Error::KOutOfRange { k, reason: "matching bound needs 1 <= k <= matching number" });
    }
    Ok(rat(2 * (e as i128) - 2 * matching as i128 + 2 * k as i128))
}

/// 2e + 2k - n - (2k-2)/n for connected graphs; valid for 1 <= k <= n.
pub fn connected_bound(n: usize, e: usize, k: usize) -> Result<BigRational> {
    if k == 0 || k > n || n == 0 {
        return Err(Error::KOutOfRange { k, reason: "connected bound needs 1 <= k <= n" });
    }
    let (n, e, k) = (n as i128, e as i128, k as i128);
    Ok(rat(2 * e + 2 * k - n) - frac(2 * k - 2, n))
}

/// 2e + 2k - n for graphs without isolated vertices; valid for 1 <= k <= n.
pub fn no_isolated_bound(n: usize, e: usize, k: usize) -> Result<BigRational> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, reason: "no-isolated bound needs 1 <= k <= n" });
    }
    Ok(rat(2 * e as i128 + 2 * k as i128 - n as i128))
}

/// e + 2k - 1 - (2k-2)/n for trees (e = n-1); valid for 1 <= k <= n.
pub fn tree_bound(n: usize, k: usize) -> Result<BigRational> {
    if k == 0 || k > n || n == 0 {
        return Err(Error::KOutOfRange { k, reason: "tree bound needs 1 <= k <= n" });
    }
    let (n, k) = (n as i128, k as i128);
    Ok(rat(n - 1 + 2 * k - 1) - frac(2 * k - 2, n))
}

/// Smallest real k at which the connected-graph bound implies the conjecture:
/// (3n - 4 + sqrt(8n^2 e - 8n^3 + 9n^2 - 8n + 16)) / (2n).
///
/// The discriminant is nonnegative for every connected graph (e >= n-1 gives
/// at least (n-4)^2); a negative value is reported as an error.
pub fn large_k_threshold(n: usize, e: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::KOutOfRange { k: 0, reason: "threshold needs n >= 1" });
    }
    let (ni, ei) = (n as i128, e as i128);
    let disc = 8 * ni * ni * ei - 8 * ni * ni * ni + 9 * ni * ni - 8 * ni + 16;
    if disc < 0 {
        return Err(Error::NegativeDiscriminant { n, e });
    }
    Ok((3.0 * n as f64 - 4.0 + (disc as f64).sqrt()) / (2.0 * n as f64))
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub name: String,
    /// Bound value when applicable to this graph and k.
    pub value: Option<f64>,
    pub applicable: bool,
}

/// All classical bounds evaluated on one graph for one k, with the tightest
/// applicable value (the conjectured rhs competes under the name "conjecture").
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub k: usize,
    pub s_plus: f64,
    pub rhs: f64,
    pub bounds: Vec<BoundEntry>,
    pub tightest: String,
}

/// Maximum order at which the exhaustive matching-number search is attempted;
/// beyond it the matching bound is reported as not applicable.
const MATCHING_N_LIMIT: usize = 24;

pub fn best_applicable(g: &Graph, k: usize) -> Result<BoundReport> {
    let n = g.vertex_count();
    let e = g.edge_count();
    if k == 0 {
        return Err(Error::KOutOfRange { k, reason: "bounds need k >= 1" });
    }
    let s_plus = spectral::s_plus(g, k)?;
    let rhs = conjecture_rhs(e, k);

    let mut bounds = Vec::new();
    let mut push = |name: &str, val: Option<BigRational>| {
        bounds.push(BoundEntry {
            name: name.to_string(),
            value: val.as_ref().and_then(|v| v.to_f64()),
            applicable: val.is_some(),
        });
    };

    let omega = g.clique_number();
    push("clique", clique_bound(e, omega, k).ok());
    push("degree", degree_bound(e, g.max_degree(), k).ok());
    let matching = if n <= MATCHING_N_LIMIT { Some(g.matching_number()?) } else { None };
    push("matching", matching.and_then(|m| matching_bound(e, m, k).ok()));
    let connected = g.is_connected();
    push("connected", if connected { connected_bound(n, e, k).ok() } else { None });
    push(
        "no_isolated",
        if n > 0 && g.min_degree() >= 1 { no_isolated_bound(n, e, k).ok() } else { None },
    );
    push(
        "tree",
        if g.graph_class() == GraphClass::Tree { tree_bound(n, k).ok() } else { None },
    );

    let mut tightest = ("conjecture".to_string(), rhs.to_f64().unwrap_or(f64::INFINITY));
    for b in &bounds {
        if let Some(v) = b.value {
            if v < tightest.1 {
                tightest = (b.name.clone(), v);
            }
        }
    }

    Ok(BoundReport {
        graph_id: graph6::encode(g),
        k,
        s_plus,
        rhs: rhs.to_f64().unwrap_or(f64::INFINITY),
        bounds,
        tightest: tightest.0,
    })
}
