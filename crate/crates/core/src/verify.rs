//! Conjecture checking, structured lemma batteries, bulk sweeps, and
//! counterexample search.
//!
//! The two-tier policy: a float margin of at least 1e-6 is accepted as-is
//! (HoldsFloat); anything closer to the boundary is escalated to exact
//! arithmetic in Certified mode, or reported Inconclusive in FloatOnly mode.
//! A violation is only ever claimed with a certificate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

use num::{BigInt, BigRational, One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds;
use crate::charpoly::{
    self, Relation, RootInterval, Verdict, VerdictOutcome,
};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::graph::{Graph, GraphClass};
use crate::graph6;
use crate::poly::IntPoly;
use crate::spectral;

/// Float margins at or above this are accepted without exact arithmetic.
pub const FLOAT_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    FloatOnly,
    Certified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Checks {
    Conjecture,
    Bounds,
    Lemmas,
    All,
}

#[derive(Debug, Clone)]
pub enum KSelect {
    All,
    List(Vec<usize>),
}

impl KSelect {
    fn ks_for(&self, n: usize) -> Vec<usize> {
        match self {
            KSelect::All => (1..=n).collect(),
            KSelect::List(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum SweepSource {
    Families(Vec<FamilySpec>),
    Enumeration { n: usize, class: Option<GraphClass>, large_ok: bool },
    Graph6Lines(Vec<String>),
}

impl std::fmt::Display for SweepSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SweepSource::Families(v) => {
                let names: Vec<String> = v.iter().map(|s| s.to_string()).collect();
                write!(f, "families[{}]", names.join(","))
            }
            SweepSource::Enumeration { n, class, large_ok } => {
                write!(f, "enumeration(n={n}")?;
                if let Some(c) = class {
                    write!(f, ", class={c:?}")?;
                }
                if *large_ok {
                    write!(f, ", large_ok")?;
                }
                write!(f, ")")
            }
            SweepSource::Graph6Lines(v) => write!(f, "graph6[{} lines]", v.len()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub mode: Mode,
    pub checks: Checks,
    pub ks: KSelect,
}

/// One check result, streamed as a JSON line during sweeps.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub graph_id: String,
    pub source: String,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub outcome: VerdictOutcome,
    pub margin: f64,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counts {
    pub graphs: u64,
    pub checks: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct WorstMargin {
    pub graph_id: String,
    pub k: usize,
    pub margin: f64,
}

/// Aggregate sweep result; `violations` carries every certified violation row.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub spec: String,
    pub counts: Counts,
    pub verdict_histogram: BTreeMap<String, u64>,
    pub worst_margin: Option<WorstMargin>,
    pub violations: Vec<Row>,
    pub wall_time_s: f64,
}

fn outcome_key(o: VerdictOutcome) -> &'static str {
    match o {
        VerdictOutcome::HoldsFloat => "holds_float",
        VerdictOutcome::HoldsCertified => "holds_certified",
        VerdictOutcome::ViolatedCertified => "violated_certified",
        VerdictOutcome::Inconclusive => "inconclusive",
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn rat_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

// ----- conjecture checking -----

fn conjecture_verdict(g: &Graph, k: usize, s_k: f64, mode: Mode) -> Result<Verdict> {
    let rhs = bounds::conjecture_rhs(g.edge_count(), k);
    let margin = rat_f64(&rhs) - s_k;
    if margin >= FLOAT_MARGIN {
        return Ok(Verdict {
            outcome: VerdictOutcome::HoldsFloat,
            margin,
            detail: format!("S_{k}^+ = {s_k:.12} <= {rhs} by float margin"),
        });
    }
    match mode {
        Mode::FloatOnly => Ok(Verdict {
            outcome: VerdictOutcome::Inconclusive,
            margin,
            detail: format!(
                "float margin {margin:.3e} below {FLOAT_MARGIN:.0e}; certified mode required"
            ),
        }),
        Mode::Certified => charpoly::certify_topk_sum_leq(g, k, &rhs),
    }
}

/// Check S_k^+(G) <= e + k(k+1)/2 for every k in 1..=n.
pub fn check_conjecture(g: &Graph, mode: Mode) -> Result<Vec<(usize, Verdict)>> {
    check_conjecture_ks(g, mode, &KSelect::All)
}

/// Same, for a chosen set of k values (k > n sums the whole spectrum).
pub fn check_conjecture_ks(
    g: &Graph,
    mode: Mode,
    ks: &KSelect,
) -> Result<Vec<(usize, Verdict)>> {
    let spec = spectral::q_spectrum(g)?;
    let mut out = Vec::new();
    for k in ks.ks_for(g.vertex_count()) {
        if k == 0 {
            return Err(Error::KOutOfRange { k, reason: "conjecture checks need k >= 1" });
        }
        let v = conjecture_verdict(g, k, spec.top_sum(k), mode)?;
        out.push((k, v));
    }
    Ok(out)
}

/// Bound reports for each requested k (restricted to 1..=n).
pub fn check_bounds(g: &Graph, ks: &KSelect) -> Result<Vec<bounds::BoundReport>> {
    let n = g.vertex_count();
    ks.ks_for(n)
        .into_iter()
        .filter(|&k| k >= 1 && k <= n)
        .map(|k| bounds::best_applicable(g, k))
        .collect()
}

// ----- root-interval claim helpers -----

// An isolated non-exact interval contains a single irrational root strictly
// inside (lo, hi), so comparisons against rational points decide whenever the
// point is outside the open interval.
fn root_cmp(r: &RootInterval, c: &BigRational) -> Option<Ordering> {
    if let Some(e) = &r.exact {
        return Some(e.cmp(c));
    }
    if r.hi <= *c {
        return Some(Ordering::Less);
    }
    if r.lo >= *c {
        return Some(Ordering::Greater);
    }
    None
}

fn root_lt(r: &RootInterval, c: &BigRational) -> Option<bool> {
    root_cmp(r, c).map(|o| o == Ordering::Less)
}

fn root_le(r: &RootInterval, c: &BigRational) -> Option<bool> {
    root_cmp(r, c).map(|o| o != Ordering::Greater)
}

fn root_gt(r: &RootInterval, c: &BigRational) -> Option<bool> {
    root_cmp(r, c).map(|o| o == Ordering::Greater)
}

fn root_ge(r: &RootInterval, c: &BigRational) -> Option<bool> {
    root_cmp(r, c).map(|o| o != Ordering::Less)
}

fn clause_row(
    graph_id: &str,
    source: &str,
    check: &str,
    clauses: &[(&str, Option<bool>)],
) -> Row {
    let mut unknown: Option<&str> = None;
    for (name, res) in clauses {
        match res {
            Some(true) => {}
            Some(false) => {
                return Row {
                    graph_id: graph_id.into(),
                    source: source.into(),
                    check: check.into(),
                    k: None,
                    outcome: VerdictOutcome::ViolatedCertified,
                    margin: 0.0,
                    detail: format!("clause failed: {name}"),
                };
            }
            None => unknown = Some(name),
        }
    }
    match unknown {
        Some(name) => Row {
            graph_id: graph_id.into(),
            source: source.into(),
            check: check.into(),
            k: None,
            outcome: VerdictOutcome::Inconclusive,
            margin: 0.0,
            detail: format!("clause undecided at interval width: {name}"),
        },
        None => Row {
            graph_id: graph_id.into(),
            source: source.into(),
            check: check.into(),
            k: None,
            outcome: VerdictOutcome::HoldsCertified,
            margin: 0.0,
            detail: format!("all {} clauses certified", clauses.len()),
        },
    }
}

fn verdict_row(
    graph_id: &str,
    source: &str,
    check: &str,
    k: Option<usize>,
    v: Verdict,
) -> Row {
    Row {
        graph_id: graph_id.into(),
        source: source.into(),
        check: check.into(),
        k,
        outcome: v.outcome,
        margin: v.margin,
        detail: v.detail,
    }
}

// ----- structured family batteries -----

/// Triangle-with-pendants battery for one order n >= 5: exact factorization
/// of psi into (x-1)^(n-5) times the quintic, the quintic's special values,
/// the certified root interleaving 0 < x5 < 2/n < x4 <= 1 <= x3 < 2 < x2 <
/// a+2 < x1, and the certified consequence q_3 < 2 (for a >= 2).
pub fn check_lemma_u1(n: usize) -> Result<Vec<Row>> {
    if n < 5 {
        return Err(Error::InvalidFamily(format!("u1 battery needs n >= 5, got {n}")));
    }
    let mut rows = Vec::new();
    let width = BigRational::new(BigInt::one(), BigInt::one() << 40);
    for a in 2..=(n - 3) {
        let b = n - 3 - a;
        if a < b {
            continue;
        }
        let g = families::u1(a, b)?;
        let gid = graph6::encode(&g);
        let source = format!("u1({a},{b})");
        let f = charpoly::u1_quintic(n, a)?;

        // exact factorization of the characteristic polynomial
        let psi = charpoly::char_poly_q(&g)?;
        let want = IntPoly::from_i64(&[-1, 1]).pow(n - 5).mul(&f);
        rows.push(Row {
            graph_id: gid.clone(),
            source: source.clone(),
            check: "u1_factorization".into(),
            k: None,
            outcome: if psi == want {
                VerdictOutcome::HoldsCertified
            } else {
                VerdictOutcome::ViolatedCertified
            },
            margin: 0.0,
            detail: format!("psi == (x-1)^{} * quintic: {}", n - 5, psi == want),
        });

        // special values f(0) = -4, f(1) = -ab, f(2) = 2a+2b-2
        let vals_ok = f.eval_big(&BigInt::from(0)) == BigInt::from(-4)
            && f.eval_big(&BigInt::from(1)) == BigInt::from(-((a * b) as i64))
            && f.eval_big(&BigInt::from(2)) == BigInt::from(2 * (a + b) as i64 - 2);
        rows.push(Row {
            graph_id: gid.clone(),
            source: source.clone(),
            check: "u1_quintic_values".into(),
            k: None,
            outcome: if vals_ok {
                VerdictOutcome::HoldsCertified
            } else {
                VerdictOutcome::ViolatedCertified
            },
            margin: 0.0,
            detail: "f(0) = -4, f(1) = -ab, f(2) = 2a+2b-2".into(),
        });

        // certified interleaving of the quintic's roots
        let roots = charpoly::isolate_roots(&f, &width)?;
        if roots.total_multiplicity() != 5 {
            rows.push(Row {
                graph_id: gid.clone(),
                source: source.clone(),
                check: "u1_interleaving".into(),
                k: None,
                outcome: VerdictOutcome::ViolatedCertified,
                margin: 0.0,
                detail: format!("expected 5 real roots, found {}", roots.total_multiplicity()),
            });
        } else {
            let mut xs: Vec<&RootInterval> = Vec::with_capacity(5);
            for item in &roots.0 {
                for _ in 0..item.multiplicity {
                    xs.push(item);
                }
            }
            let two_over_n = BigRational::new(BigInt::from(2), BigInt::from(n as i64));
            let a2 = rat(a as i64 + 2);
            let clauses = [
                ("0 < x5", root_gt(xs[0], &rat(0))),
                ("x5 < 2/n", root_lt(xs[0], &two_over_n)),
                ("2/n < x4", root_gt(xs[1], &two_over_n)),
                ("x4 <= 1", root_le(xs[1], &rat(1))),
                ("1 <= x3", root_ge(xs[2], &rat(1))),
                ("x3 < 2", root_lt(xs[2], &rat(2))),
                ("2 < x2", root_gt(xs[3], &rat(2))),
                ("x2 < a+2", root_lt(xs[3], &a2)),
                ("a+2 < x1", root_gt(xs[4], &a2)),
            ];
            rows.push(clause_row(&gid, &source, "u1_interleaving", &clauses));
        }

        // the lemma's conclusion, certified directly on the graph
        let v = charpoly::certify_eigenvalue_position(&g, 3, Relation::Less, &rat(2))?;
        rows.push(verdict_row(&gid, &source, "u1_q3_lt_2", None, v));
    }
    Ok(rows)
}

/// Quadrangle-with-pendants battery for one order n >= 9: certified
/// q_3 = 2 and the signless Laplacian / Laplacian spectra agreeing (the
/// family is bipartite).
pub fn check_lemma_u2(n: usize) -> Result<Vec<Row>> {
    if n < 9 {
        return Err(Error::InvalidFamily(format!("u2 battery needs n >= 9, got {n}")));
    }
    let mut rows = Vec::new();
    for a in 0..=(n - 4) {
        let b = n - 4 - a;
        if a < b {
            continue;
        }
        let g = families::u2(a, b)?;
        let gid = graph6::encode(&g);
        let source = format!("u2({a},{b})");

        let v = charpoly::certify_eigenvalue_position(&g, 3, Relation::Equal, &rat(2))?;
        rows.push(verdict_row(&gid, &source, "u2_q3_eq_2", None, v));

        let q = spectral::q_spectrum(&g)?;
        let l = spectral::l_spectrum(&g)?;
        let diff = q
            .values()
            .iter()
            .zip(l.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        rows.push(Row {
            graph_id: gid,
            source,
            check: "u2_bipartite_ql".into(),
            k: None,
            outcome: if diff <= 1e-9 {
                VerdictOutcome::HoldsFloat
            } else {
                VerdictOutcome::Inconclusive
            },
            margin: 1e-9 - diff,
            detail: format!("max |q_i - l_i| = {diff:.3e}"),
        });
    }
    Ok(rows)
}

/// Subdivided-star battery: for the star with i in {2, 3} subdivided edges
/// (orders n >= 6 resp. n >= 7), certified 1 < q_2 < 27/10 and the strict
/// sum bound S_2^+ < e + 2.
pub fn check_lemma_413(n: usize) -> Result<Vec<Row>> {
    if n < 6 {
        return Err(Error::InvalidFamily(format!("subdivided-star battery needs n >= 6, got {n}")));
    }
    let mut rows = Vec::new();
    for i in [2usize, 3] {
        if i == 3 && n < 7 {
            continue;
        }
        let g = families::t_star(n, i)?;
        let gid = graph6::encode(&g);
        let source = format!("tstar({n},{i})");

        let lo = charpoly::certify_eigenvalue_position(&g, 2, Relation::Greater, &rat(1))?;
        let hi = charpoly::certify_eigenvalue_position(
            &g,
            2,
            Relation::Less,
            &BigRational::new(BigInt::from(27), BigInt::from(10)),
        )?;
        let both = match (lo.outcome, hi.outcome) {
            (VerdictOutcome::HoldsCertified, VerdictOutcome::HoldsCertified) => {
                VerdictOutcome::HoldsCertified
            }
            _ => VerdictOutcome::ViolatedCertified,
        };
        rows.push(Row {
            graph_id: gid.clone(),
            source: source.clone(),
            check: "tstar_q2_window".into(),
            k: None,
            outcome: both,
            margin: lo.margin.min(hi.margin.abs()),
            detail: format!("1 < q_2 < 27/10; {} / {}", lo.detail, hi.detail),
        });

        let e = g.edge_count();
        let v = charpoly::certify_topk_sum_lt(&g, 2, &rat(e as i64 + 2))?;
        rows.push(verdict_row(&gid, &source, "tstar_s2_strict", Some(2), v));
    }
    Ok(rows)
}

/// Double-triangle-with-pendants battery for one order n >= 5: the exact
/// characteristic polynomial identity
/// psi = (x-1)^(n-4) (x-3) (x^3 - (n+3)x^2 + 3nx - 8)
/// and the certified strict bound S_3^+ < e + 6 = n + 7.
pub fn check_theorem_46(n: usize) -> Result<Vec<Row>> {
    if n < 5 {
        return Err(Error::InvalidFamily(format!(
            "double-triangle battery needs n >= 5, got {n}"
        )));
    }
    let g = families::infinity_prime_331(n)?;
    let gid = graph6::encode(&g);
    let source = format!("infinityprime({n})");
    let mut rows = Vec::new();

    let psi = charpoly::char_poly_q(&g)?;
    let ni = n as i64;
    let cubic = IntPoly::from_i64(&[-8, 3 * ni, -(ni + 3), 1]);
    let want = IntPoly::from_i64(&[-1, 1])
        .pow(n - 4)
        .mul(&IntPoly::from_i64(&[-3, 1]))
        .mul(&cubic);
    rows.push(Row {
        graph_id: gid.clone(),
        source: source.clone(),
        check: "inf_prime_psi_identity".into(),
        k: None,
        outcome: if psi == want {
            VerdictOutcome::HoldsCertified
        } else {
            VerdictOutcome::ViolatedCertified
        },
        margin: 0.0,
        detail: format!("psi == (x-1)^{} (x-3) (x^3-{}x^2+{}x-8): {}", n - 4, n + 3, 3 * n, psi == want),
    });

    let v = charpoly::certify_topk_sum_lt(&g, 3, &rat(ni + 7))?;
    rows.push(verdict_row(&gid, &source, "inf_prime_s3_strict", Some(3), v));
    Ok(rows)
}

// ----- the two-edge-deletion lemma -----

#[derive(Debug, Clone)]
pub enum Lemma410Outcome {
    /// No pair of edges whose deletion leaves K_2 plus a
    /// pendant-decorated triangle or quadrangle.
    NotApplicable,
    Checked(Verdict),
}

/// Does the graph consist of one cycle of length 3 or 4 with every remaining
/// vertex a pendant on the cycle, pendants concentrated on at most two cycle
/// vertices (nonadjacent ones in the quadrangle case)?
fn u_type_core(h: &Graph) -> Option<usize> {
    let n = h.vertex_count();
    if n == 0 || !h.is_connected() || h.edge_count() != n {
        return None;
    }
    // strip leaves down to the 2-core (the unique cycle)
    let mut deg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut alive = vec![true; n];
    loop {
        let drop: Vec<usize> =
            (0..n).filter(|&v| alive[v] && deg[v] == 1).collect();
        if drop.is_empty() {
            break;
        }
        for v in drop {
            alive[v] = false;
            deg[v] = 0;
            for u in h.neighbors(v) {
                if alive[u] && deg[u] > 0 {
                    deg[u] -= 1;
                }
            }
        }
    }
    let core: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if core.len() != 3 && core.len() != 4 {
        return None;
    }
    // every non-core vertex must be a pendant attached directly to the core
    for v in 0..n {
        if alive[v] {
            continue;
        }
        if h.degree(v) != 1 {
            return None;
        }
        let nb = h.neighbors(v).next()?;
        if !alive[nb] {
            return None;
        }
    }
    let supports: Vec<usize> = core
        .iter()
        .copied()
        .filter(|&c| h.neighbors(c).any(|u| !alive[u]))
        .collect();
    if supports.len() > 2 {
        return None;
    }
    if core.len() == 4 && supports.len() == 2 && h.has_edge(supports[0], supports[1]) {
        return None;
    }
    Some(core.len())
}

/// If deleting some two edges of G leaves exactly a K_2 component plus a
/// pendant-decorated triangle/quadrangle component, certify S_3^+ <= e + 6.
pub fn check_lemma_410(g: &Graph) -> Result<Lemma410Outcome> {
    let n = g.vertex_count();
    let e = g.edge_count();
    // a matching G must have e(G) = n + 1: components carry n - 1 edges
    if n < 6 || e != n + 1 {
        return Ok(Lemma410Outcome::NotApplicable);
    }
    let edges = g.edges();
    let mut applicable = false;
    'pairs: for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let h = g.delete_edges(&[edges[i], edges[j]])?;
            let comps = h.components();
            if comps.len() != 2 {
                continue;
            }
            for (which, (_, c)) in comps.iter().enumerate() {
                let other = &comps[1 - which].1;
                let is_k2 = c.vertex_count() == 2 && c.edge_count() == 1;
                if is_k2 && u_type_core(other).is_some() {
                    applicable = true;
                    break 'pairs;
                }
            }
        }
    }
    if !applicable {
        return Ok(Lemma410Outcome::NotApplicable);
    }
    let v = charpoly::certify_topk_sum_leq(g, 3, &rat(e as i64 + 6))?;
    Ok(Lemma410Outcome::Checked(v))
}

// ----- sweeps -----

/// Instantiate a sweep source as labeled graphs (the label names the family
/// instance, enumeration batch, or input format).
pub fn source_graphs(source: &SweepSource) -> Result<Vec<(String, Graph)>> {
    match source {
        SweepSource::Families(specs) => specs
            .iter()
            .map(|s| Ok((s.to_string(), s.build()?)))
            .collect(),
        SweepSource::Enumeration { n, class, large_ok } => {
            let graphs = if *large_ok {
                enumerate::connected_graphs_large_ok(*n)?
            } else {
                enumerate::connected_graphs(*n)?
            };
            let label = format!("enum(n={n})");
            Ok(graphs
                .into_iter()
                .filter(|g| class.map_or(true, |c| g.graph_class() == c))
                .map(|g| (label.clone(), g))
                .collect())
        }
        SweepSource::Graph6Lines(lines) => lines
            .iter()
            .filter(|l| !l.trim().is_empty())
            .map(|l| Ok(("graph6".to_string(), graph6::decode(l)?)))
            .collect(),
    }
}

fn conjecture_rows(label: &str, g: &Graph, opts: &SweepOptions) -> Result<Vec<Row>> {
    let gid = graph6::encode(g);
    let spec = spectral::q_spectrum(g)?;
    let mut rows = Vec::new();
    for k in opts.ks.ks_for(g.vertex_count()) {
        if k == 0 {
            return Err(Error::KOutOfRange { k, reason: "sweep k values must be >= 1" });
        }
        let v = conjecture_verdict(g, k, spec.top_sum(k), opts.mode)?;
        rows.push(verdict_row(&gid, label, "conjecture", Some(k), v));
    }
    Ok(rows)
}

fn bounds_rows(label: &str, g: &Graph, opts: &SweepOptions) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for rep in check_bounds(g, &opts.ks)? {
        let tight = rep
            .bounds
            .iter()
            .filter_map(|b| b.value)
            .fold(f64::INFINITY, f64::min)
            .min(rep.rhs);
        let sound = rep
            .bounds
            .iter()
            .filter_map(|b| b.value)
            .all(|v| rep.s_plus <= v + FLOAT_MARGIN);
        rows.push(Row {
            graph_id: rep.graph_id.clone(),
            source: label.into(),
            check: "bounds".into(),
            k: Some(rep.k),
            outcome: if sound {
                VerdictOutcome::HoldsFloat
            } else {
                VerdictOutcome::Inconclusive
            },
            margin: tight - rep.s_plus,
            detail: format!("tightest: {}", rep.tightest),
        });
    }
    Ok(rows)
}

fn lemma_rows(label: &str, g: &Graph, opts: &SweepOptions) -> Result<Vec<Row>> {
    let gid = graph6::encode(g);
    let n = g.vertex_count();
    let mut rows = Vec::new();

    if g.is_bipartite() && n > 0 {
        let q = spectral::q_spectrum(g)?;
        let l = spectral::l_spectrum(g)?;
        let diff = q
            .values()
            .iter()
            .zip(l.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        rows.push(Row {
            graph_id: gid.clone(),
            source: label.into(),
            check: "bipartite_ql".into(),
            k: None,
            outcome: if diff <= 1e-9 {
                VerdictOutcome::HoldsFloat
            } else {
                VerdictOutcome::Inconclusive
            },
            margin: 1e-9 - diff,
            detail: format!("max |q_i - l_i| = {diff:.3e}"),
        });
    }

    if g.graph_class() == GraphClass::Tree && n >= 2 {
        let spec = spectral::q_spectrum(g)?;
        let e = g.edge_count();
        for k in 2..=n {
            let rhs = bounds::conjecture_rhs(e, k);
            let margin = rat_f64(&rhs) - spec.top_sum(k);
            let v = if margin >= FLOAT_MARGIN {
                Verdict {
                    outcome: VerdictOutcome::HoldsFloat,
                    margin,
                    detail: format!("tree strict: S_{k}^+ < rhs by float margin"),
                }
            } else {
                match opts.mode {
                    Mode::FloatOnly => Verdict {
                        outcome: VerdictOutcome::Inconclusive,
                        margin,
                        detail: "strictness within float tolerance; certified mode required"
                            .into(),
                    },
                    Mode::Certified => charpoly::certify_topk_sum_lt(g, k, &rhs)?,
                }
            };
            rows.push(verdict_row(&gid, label, "tree_strict", Some(k), v));
        }
    }

    if let Lemma410Outcome::Checked(v) = check_lemma_410(g)? {
        rows.push(verdict_row(&gid, label, "lemma_two_edge_deletion", Some(3), v));
    }

    Ok(rows)
}

fn graph_rows(label: &str, g: &Graph, opts: &SweepOptions) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    match opts.checks {
        Checks::Conjecture => rows.extend(conjecture_rows(label, g, opts)?),
        Checks::Bounds => rows.extend(bounds_rows(label, g, opts)?),
        Checks::Lemmas => rows.extend(lemma_rows(label, g, opts)?),
        Checks::All => {
            rows.extend(conjecture_rows(label, g, opts)?);
            rows.extend(bounds_rows(label, g, opts)?);
            rows.extend(lemma_rows(label, g, opts)?);
        }
    }
    Ok(rows)
}

/// Run the selected checks over every graph in the source. Graphs are
/// evaluated in parallel; rows are delivered to the callback in a
/// deterministic order independent of thread count.
pub fn sweep<F: FnMut(&Row)>(
    source: &SweepSource,
    opts: &SweepOptions,
    mut on_row: F,
) -> Result<SweepReport> {
    let start = Instant::now();
    let graphs = source_graphs(source)?;
    let per_graph: Vec<Result<Vec<Row>>> = graphs
        .par_iter()
        .map(|(label, g)| graph_rows(label, g, opts))
        .collect();

    let mut histogram: BTreeMap<String, u64> = BTreeMap::new();
    let mut worst: Option<WorstMargin> = None;
    let mut violations = Vec::new();
    let mut checks = 0u64;
    for rows in per_graph {
        for row in rows? {
            on_row(&row);
            checks += 1;
            *histogram.entry(outcome_key(row.outcome).to_string()).or_insert(0) += 1;
            if row.check == "conjecture"
                && worst.as_ref().map_or(true, |w| row.margin < w.margin)
            {
                worst = Some(WorstMargin {
                    graph_id: row.graph_id.clone(),
                    k: row.k.unwrap_or(0),
                    margin: row.margin,
                });
            }
            if row.outcome == VerdictOutcome::ViolatedCertified {
                violations.push(row);
            }
        }
    }

    Ok(SweepReport {
        spec: format!("{source} checks={:?} mode={:?}", opts.checks, opts.mode),
        counts: Counts { graphs: graphs.len() as u64, checks },
        verdict_histogram: histogram,
        worst_margin: worst,
        violations,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

// ----- counterexample search -----

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleWitness {
    pub graph_id: String,
    pub k: usize,
    pub s_plus: f64,
    pub rhs: f64,
    pub detail: String,
}

/// Scan graphs for a certified conjecture violation at any of the given k.
/// Cheap exact prunes first: if any applicable classical bound already sits
/// at or below the conjectured rhs, the conjecture holds there and no
/// spectral work is needed.
pub fn counterexample_search(
    graphs: &[Graph],
    ks: &[usize],
) -> Result<Option<CounterexampleWitness>> {
    for g in graphs {
        let n = g.vertex_count();
        let e = g.edge_count();
        let mut spec = None;
        for &k in ks {
            if k == 0 || k > n {
                continue;
            }
            let rhs = bounds::conjecture_rhs(e, k);
            // exact rational prunes via classical bounds
            let mut pruned = false;
            if g.min_degree() >= 1 {
                if let Ok(b) = bounds::no_isolated_bound(n, e, k) {
                    pruned |= b <= rhs;
                }
            }
            if !pruned && g.is_connected() {
                if let Ok(b) = bounds::connected_bound(n, e, k) {
                    pruned |= b <= rhs;
                }
            }
            if !pruned {
                if let Ok(b) = bounds::degree_bound(e, g.max_degree(), k) {
                    pruned |= b <= rhs;
                }
            }
            if pruned {
                continue;
            }
            if spec.is_none() {
                spec = Some(spectral::q_spectrum(g)?);
            }
            let s_k = spec.as_ref().unwrap().top_sum(k);
            if rat_f64(&rhs) - s_k >= FLOAT_MARGIN {
                continue;
            }
            let v = charpoly::certify_topk_sum_leq(g, k, &rhs)?;
            if v.outcome == VerdictOutcome::ViolatedCertified {
                return Ok(Some(CounterexampleWitness {
                    graph_id: graph6::encode(g),
                    k,
                    s_plus: s_k,
                    rhs: rat_f64(&rhs),
                    detail: v.detail,
                }));
            }
        }
    }
    Ok(None)
}
