//! Go/no-go acceptance battery. Each test checks one release criterion and
//! prints a single `ACCEPTANCE <id>: PASS/FAIL` line naming its tolerance
//! (visible under `cargo test -- --nocapture`); the assertion carries the
//! same text into the failure output.

use std::sync::OnceLock;
use std::time::Instant;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use slq_core::charpoly;
use slq_core::enumerate;
use slq_core::families;
use slq_core::graph6;
use slq_core::spectral::{self, ClosedForm};
use slq_core::verify;
use slq_core::{bounds, Graph, GraphClass, VerdictOutcome};

fn report(id: usize, ok: bool, desc: &str) {
    println!("ACCEPTANCE {id}: {} — {desc}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance criterion {id} failed — {desc}");
}

/// All connected graphs up to isomorphism, orders 1..=8, built once per
/// process and shared by the criteria that sweep them.
fn enumerated() -> &'static [Vec<Graph>] {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (1..=8)
            .map(|n| enumerate::connected_graphs(n).expect("enumeration up to 8"))
            .collect()
    })
}

/// Two-tier conjecture check: float margin >= 1e-6 accepts outright,
/// anything tighter is re-proved in exact arithmetic. Returns whether the
/// exact path ran; `Err` carries a description of a failure.
fn conjecture_two_tier(g: &Graph, k: usize, s_k: f64) -> Result<bool, String> {
    let rhs = bounds::conjecture_rhs(g.edge_count(), k);
    let margin = rhs.to_f64().unwrap() - s_k;
    if margin >= 1e-6 {
        return Ok(false);
    }
    let v = charpoly::certify_topk_sum_leq(g, k, &rhs).map_err(|e| e.to_string())?;
    match v.outcome {
        VerdictOutcome::HoldsCertified => Ok(true),
        other => Err(format!(
            "{} at k={k}: {:?} ({})",
            graph6::encode(g),
            other,
            v.detail
        )),
    }
}

/// Run the two-tier check over every k for every graph, in parallel.
/// Returns (checks, escalations, failures).
fn sweep_all_k(graphs: &[Graph]) -> (u64, u64, Vec<String>) {
    let results: Vec<Result<(u64, u64), String>> = graphs
        .par_iter()
        .map(|g| {
            let spec = spectral::q_spectrum(g).map_err(|e| e.to_string())?;
            let mut escalated = 0u64;
            for k in 1..=g.vertex_count() {
                if conjecture_two_tier(g, k, spec.top_sum(k))? {
                    escalated += 1;
                }
            }
            Ok((g.vertex_count() as u64, escalated))
        })
        .collect();
    let mut checks = 0;
    let mut escalated = 0;
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok((c, e)) => {
                checks += c;
                escalated += e;
            }
            Err(msg) => failures.push(msg),
        }
    }
    (checks, escalated, failures)
}

#[test]
fn criterion_01_exhaustive_sweep_to_order_8() {
    let start = Instant::now();
    let by_order = enumerated();
    let counts: Vec<usize> = by_order.iter().map(Vec::len).collect();
    let counts_ok = counts == [1, 1, 2, 6, 21, 112, 853, 11117];
    let mut checks = 0;
    let mut escalated = 0;
    let mut failures = Vec::new();
    for graphs in by_order {
        let (c, e, f) = sweep_all_k(graphs);
        checks += c;
        escalated += e;
        failures.extend(f);
    }
    let wall = start.elapsed().as_secs_f64();
    let ok = counts_ok && failures.is_empty() && checks == 95_717 && wall <= 900.0;
    report(
        1,
        ok,
        &format!(
            "exhaustive conjecture sweep over all {} connected graphs with n <= 8 \
             (isomorphism-class counts {counts:?}), every k: {checks} checks, \
             {escalated} near-ties below float margin 1e-6 re-proved exactly, \
             {} violations, {wall:.1}s <= 900s",
            counts.iter().sum::<usize>(),
            failures.len()
        ),
    );
}

#[test]
fn criterion_02_closed_form_spectra() {
    let mut worst = 0.0f64;
    for w in 1..=20 {
        let cases = [
            (
                ClosedForm::Complete { omega: w },
                families::complete(w).unwrap(),
            ),
            (
                ClosedForm::Star { delta: w },
                families::star(w + 1).unwrap(),
            ),
            (ClosedForm::Matching { m: w }, families::m_k2(w).unwrap()),
        ];
        for (form, g) in cases {
            let reference = spectral::closed_form_spectrum(form).unwrap();
            let solved = spectral::q_spectrum(&g).unwrap();
            assert_eq!(reference.len(), solved.values().len());
            for (a, b) in reference.iter().zip(solved.values()) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    report(
        2,
        worst <= 1e-10,
        &format!(
            "closed-form Q-spectra of complete, star, and disjoint-edge families \
             (parameters 1..=20) match the eigensolver; worst |Δq| = {worst:.2e} <= 1e-10"
        ),
    );
}

#[test]
fn criterion_03_bound_soundness_and_equality() {
    // (a) every applicable classical bound dominates S_k^+ across the whole
    // n <= 8 library, all k
    let mut worst_excess = f64::NEG_INFINITY;
    for graphs in enumerated() {
        let m = graphs
            .par_iter()
            .map(|g| {
                let mut local = f64::NEG_INFINITY;
                for k in 1..=g.vertex_count() {
                    let rep = bounds::best_applicable(g, k).unwrap();
                    for v in rep.bounds.iter().filter_map(|b| b.value) {
                        local = local.max(rep.s_plus - v);
                    }
                }
                local
            })
            .reduce(|| f64::NEG_INFINITY, f64::max);
        worst_excess = worst_excess.max(m);
    }

    // (b) structured family grid up to n = 60
    let mut grid: Vec<Graph> = Vec::new();
    for n in [10, 25, 40, 60] {
        grid.push(families::path(n).unwrap());
        grid.push(families::cycle(n).unwrap());
        grid.push(families::star(n).unwrap());
    }
    for w in [5, 12, 20] {
        grid.push(families::complete(w).unwrap());
    }
    for m in [5, 15, 30] {
        grid.push(families::m_k2(m).unwrap());
    }
    grid.push(families::theta_graph(10, 10, 2).unwrap());
    grid.push(families::theta_graph(25, 25, 8).unwrap());
    grid.push(families::theta_graph(31, 31, 2).unwrap());
    grid.push(families::infinity_graph(5, 5, 1).unwrap());
    grid.push(families::infinity_graph(12, 17, 4).unwrap());
    grid.push(families::infinity_graph(30, 29, 3).unwrap());
    grid.push(families::u1(27, 27).unwrap());
    grid.push(families::u1(40, 0).unwrap());
    grid.push(families::u2(28, 24).unwrap());
    grid.push(families::t_star(55, 3).unwrap());
    grid.push(families::infinity_prime_331(50).unwrap());
    grid.push(families::theta_pendants(2, 1, 2, 25, 25).unwrap());
    for g in &grid {
        let n = g.vertex_count();
        let mut ks = vec![1, 2, 3, n / 2, n];
        ks.sort_unstable();
        ks.dedup();
        for k in ks.into_iter().filter(|&k| k >= 1 && k <= n) {
            let rep = bounds::best_applicable(g, k).unwrap();
            for v in rep.bounds.iter().filter_map(|b| b.value) {
                worst_excess = worst_excess.max(rep.s_plus - v);
            }
        }
    }

    // (c) equality cases reproduce equality: the clique bound on K_w for
    // k <= w, and the connectivity bound on K_2 at k = 1
    let mut worst_eq = 0.0f64;
    for w in 2..=12 {
        let g = families::complete(w).unwrap();
        let spec = spectral::q_spectrum(&g).unwrap();
        let e = g.edge_count();
        for k in 1..=w {
            let b = bounds::clique_bound(e, w, k).unwrap().to_f64().unwrap();
            worst_eq = worst_eq.max((b - spec.top_sum(k)).abs());
        }
    }
    let k2 = families::complete(2).unwrap();
    let s1 = spectral::q_spectrum(&k2).unwrap().top_sum(1);
    let cb = bounds::connected_bound(2, 1, 1).unwrap().to_f64().unwrap();
    worst_eq = worst_eq.max((cb - s1).abs());

    let ok = worst_excess <= 1e-6 && worst_eq <= 1e-9;
    report(
        3,
        ok,
        &format!(
            "clique/degree/matching/connectivity/no-isolated/tree bounds dominate \
             S_k^+ over the n <= 8 library and a {} -graph family grid up to n = 60 \
             (worst excess {worst_excess:.2e} <= 1e-6); equality cases K_w at k <= w \
             and K_2 at k = 1 reproduce equality (worst |Δ| = {worst_eq:.2e} <= 1e-9)",
            grid.len()
        ),
    );
}

#[test]
fn criterion_04_double_triangle_polynomial_identity() {
    let mut bad = 0usize;
    let mut rows_seen = 0usize;
    for n in 5..=40 {
        for row in verify::check_theorem_46(n).unwrap() {
            rows_seen += 1;
            if row.outcome != VerdictOutcome::HoldsCertified {
                bad += 1;
            }
        }
    }
    // independent reconstruction of the same polynomials through the pendant
    // recursion, starting from the 5-vertex double triangle
    let seed = families::infinity_prime_331(5).unwrap();
    let mut recursion_ok = true;
    for n in [6usize, 13, 25, 40] {
        let by_recursion = charpoly::pendant_recursion(&seed, 0, n - 5).unwrap();
        let direct =
            charpoly::char_poly_q(&families::infinity_prime_331(n).unwrap()).unwrap();
        recursion_ok &= by_recursion == direct;
    }
    let ok = bad == 0 && rows_seen == 2 * 36 && recursion_ok;
    report(
        4,
        ok,
        &format!(
            "double-triangle identity psi = (x-1)^(n-4) (x-3) (x^3-(n+3)x^2+3nx-8) \
             holds with exact integer coefficients for n = 5..=40, S_3^+ < n+7 \
             certified ({rows_seen} rows, {bad} failures); pendant recursion \
             rebuilds the same polynomials"
        ),
    );
}

#[test]
fn criterion_05_triangle_pendant_lemma() {
    let mut rows_seen = 0usize;
    let mut bad: Vec<String> = Vec::new();
    let expected_checks = [
        "u1_factorization",
        "u1_quintic_values",
        "u1_interleaving",
        "u1_q3_lt_2",
    ];
    for n in 5..=30 {
        let rows = verify::check_lemma_u1(n).unwrap();
        for name in expected_checks {
            assert!(rows.iter().any(|r| r.check == name), "missing {name} at n={n}");
        }
        for row in rows {
            rows_seen += 1;
            if row.outcome != VerdictOutcome::HoldsCertified {
                bad.push(format!("{} {}: {}", row.source, row.check, row.detail));
            }
        }
    }
    // the pinned quintic evaluations, exactly, for every admissible (a, b)
    let mut evals_ok = true;
    let two = BigRational::from_integer(2.into());
    for n in 5i64..=30 {
        for a in 2..=(n - 3) {
            let b = n - 3 - a;
            if a < b {
                continue;
            }
            let f = charpoly::u1_quintic(n as usize, a as usize).unwrap();
            evals_ok &= f.eval_rat(&BigRational::zero())
                == BigRational::from_integer((-4).into());
            evals_ok &=
                f.eval_rat(&BigRational::one()) == BigRational::from_integer((-(a * b)).into());
            evals_ok &=
                f.eval_rat(&two) == BigRational::from_integer((2 * a + 2 * b - 2).into());
        }
    }
    let ok = bad.is_empty() && evals_ok;
    report(
        5,
        ok,
        &format!(
            "triangle-with-pendants battery, n = 5..=30, a >= max(b,2) \
             ({rows_seen} certified rows: exact factorization psi = (x-1)^(n-5) f, \
             f(0) = -4, f(1) = -ab, f(2) = 2a+2b-2 exact, root interleaving, \
             q_3 < 2 certified){}{}",
            if bad.is_empty() { "" } else { "; failures: " },
            bad.join("; ")
        ),
    );
}

#[test]
fn criterion_06_quadrangle_pendant_lemma() {
    let mut q3_rows = 0usize;
    let mut ql_rows = 0usize;
    let mut bad: Vec<String> = Vec::new();
    for n in 9..=30 {
        for row in verify::check_lemma_u2(n).unwrap() {
            match row.check.as_str() {
                "u2_q3_eq_2" => {
                    q3_rows += 1;
                    if row.outcome != VerdictOutcome::HoldsCertified {
                        bad.push(format!("{}: {}", row.source, row.detail));
                    }
                }
                "u2_bipartite_ql" => {
                    ql_rows += 1;
                    // margin = 1e-9 - max|q_i - l_i| must be nonnegative
                    if row.outcome != VerdictOutcome::HoldsFloat || row.margin < 0.0 {
                        bad.push(format!("{}: {}", row.source, row.detail));
                    }
                }
                other => bad.push(format!("unexpected check {other}")),
            }
        }
    }
    let ok = bad.is_empty() && q3_rows > 0 && ql_rows > 0;
    report(
        6,
        ok,
        &format!(
            "quadrangle-with-pendants battery, n = 9..=30, a >= b >= 0: \
             q_3 = 2 certified exactly ({q3_rows} rows) and Q/L spectra of these \
             bipartite graphs agree within 1e-9 ({ql_rows} rows){}{}",
            if bad.is_empty() { "" } else { "; failures: " },
            bad.join("; ")
        ),
    );
}

#[test]
fn criterion_07_subdivided_star_window() {
    let mut rows_seen = 0usize;
    let mut bad: Vec<String> = Vec::new();
    for n in 6..=40 {
        for row in verify::check_lemma_413(n).unwrap() {
            rows_seen += 1;
            if row.outcome != VerdictOutcome::HoldsCertified {
                bad.push(format!("{} {}: {}", row.source, row.check, row.detail));
            }
        }
    }
    // i = 2 contributes from n = 6, i = 3 from n = 7; two rows per instance
    let expected = 2 * (35 + 34);
    let ok = bad.is_empty() && rows_seen == expected;
    report(
        7,
        ok,
        &format!(
            "subdivided-star battery: 1 < q_2 < 27/10 and S_2^+ < e+2 certified \
             for the 2-subdivision at n = 6..=40 and the 3-subdivision at \
             n = 7..=40 ({rows_seen} rows){}{}",
            if bad.is_empty() { "" } else { "; failures: " },
            bad.join("; ")
        ),
    );
}

#[test]
fn criterion_08_bicyclic_replication() {
    let start = Instant::now();
    // every bicyclic graph from the exhaustive library
    let mut graphs: Vec<Graph> = Vec::new();
    for gs in enumerated() {
        graphs.extend(
            gs.iter()
                .filter(|g| g.graph_class() == GraphClass::Bicyclic)
                .cloned(),
        );
    }
    let enum_count = graphs.len();

    // theta cores with short paths and pendant loads, orders up to 30
    let mut families_ok = true;
    for s1 in 0..=2usize {
        for s2 in s1.max(1)..=2 {
            for s3 in s2..=2 {
                for a in [0usize, 2, 5, 11] {
                    for b in [0usize, 3, 8] {
                        let g = families::theta_pendants(s1, s2, s3, a, b).unwrap();
                        if g.vertex_count() <= 30 {
                            families_ok &= g.graph_class() == GraphClass::Bicyclic;
                            graphs.push(g);
                        }
                    }
                }
            }
        }
    }
    // infinity and plain theta grids
    for p in 3..=8usize {
        for q in p..=8 {
            for t in 1..=4 {
                let g = families::infinity_graph(p, q, t).unwrap();
                families_ok &= g.graph_class() == GraphClass::Bicyclic;
                graphs.push(g);
            }
        }
    }
    for (p, q, t) in [(10, 12, 5), (13, 13, 1), (12, 11, 7)] {
        graphs.push(families::infinity_graph(p, q, t).unwrap());
    }
    for p in 3..=10usize {
        for q in p..=10 {
            for t in 2..=(p + 2) / 2 {
                if 2 * t <= q + 2 {
                    let g = families::theta_graph(p, q, t).unwrap();
                    families_ok &= g.graph_class() == GraphClass::Bicyclic;
                    graphs.push(g);
                }
            }
        }
    }
    let family_count = graphs.len() - enum_count;

    let (checks, escalated, failures) = sweep_all_k(&graphs);
    let wall = start.elapsed().as_secs_f64();
    let ok = families_ok && failures.is_empty() && wall <= 600.0;
    report(
        8,
        ok,
        &format!(
            "bicyclic replication: {enum_count} bicyclic graphs from the n <= 8 \
             library plus {family_count} theta/infinity family instances up to \
             n = 30, every k including k = 3 ({checks} checks, {escalated} \
             escalated to exact arithmetic): {} certified violations, \
             {wall:.1}s <= 600s",
            failures.len()
        ),
    );
}

#[test]
fn criterion_09_subadditivity_random_partitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = f64::NEG_INFINITY;
    let trials = 1000;
    for _ in 0..trials {
        let n = rng.gen_range(2..=10);
        let p: f64 = rng.gen_range(0.15..0.85);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let parts = rng.gen_range(2..=4usize);
        let mut part_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); parts];
        for &e in &edges {
            part_edges[rng.gen_range(0..parts)].push(e);
        }
        let whole = spectral::q_spectrum(&g).unwrap();
        let part_specs: Vec<_> = part_edges
            .iter()
            .map(|es| spectral::q_spectrum(&Graph::from_edges(n, es).unwrap()).unwrap())
            .collect();
        for k in 1..=n {
            let lhs = whole.top_sum(k);
            let rhs: f64 = part_specs.iter().map(|s| s.top_sum(k)).sum();
            worst = worst.max(lhs - rhs);
        }
    }
    report(
        9,
        worst <= 1e-8,
        &format!(
            "top-k spectral-sum subadditivity over {trials} seeded random \
             edge partitions (n <= 10, 2..=4 parts, every k): \
             worst excess {worst:.2e} <= 1e-8"
        ),
    );
}

#[test]
fn criterion_10_float_vs_certified_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    // isolation width 2^-35 ~ 3e-11, well inside the 1e-9 agreement budget
    let width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 35));
    let trials = 500;
    let mut worst = 0.0f64;
    let mut structure_ok = true;
    for _ in 0..trials {
        let n = rng.gen_range(1..=12usize);
        let p: f64 = rng.gen_range(0.1..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let mut float: Vec<f64> = spectral::q_spectrum(&g).unwrap().values().to_vec();
        float.reverse(); // ascending, to match isolation order
        let poly = charpoly::char_poly_q(&g).unwrap();
        let roots = charpoly::isolate_roots(&poly, &width).unwrap();
        let mut envelopes: Vec<(f64, f64)> = Vec::new();
        for r in &roots.0 {
            let (lo, hi) = match &r.exact {
                Some(x) => {
                    let v = x.to_f64().unwrap();
                    (v, v)
                }
                None => (r.lo.to_f64().unwrap(), r.hi.to_f64().unwrap()),
            };
            for _ in 0..r.multiplicity {
                envelopes.push((lo, hi));
            }
        }
        if envelopes.len() != float.len() {
            structure_ok = false;
            continue;
        }
        for (f, (lo, hi)) in float.iter().zip(&envelopes) {
            let d = if f < lo {
                lo - f
            } else if f > hi {
                f - hi
            } else {
                0.0
            };
            worst = worst.max(d);
        }
    }
    let ok = structure_ok && worst <= 1e-9;
    report(
        10,
        ok,
        &format!(
            "float eigenvalues vs certified root isolation on {trials} seeded \
             random graphs with n <= 12 (isolation width 2^-35): multiplicity \
             structure consistent, worst disagreement {worst:.2e} <= 1e-9"
        ),
    );
}
