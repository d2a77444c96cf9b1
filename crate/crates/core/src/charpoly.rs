//! Exact path: integer characteristic polynomials and certified eigenvalue
//! facts via Sturm sequences over the rationals.
//!
//! The float eigensolver answers "approximately where are the eigenvalues";
//! this module answers "provably on which side of a rational threshold".
//! Everything here is exact integer/rational arithmetic — no floats feed any
//! certified verdict.
//!
//! Pipeline:
//!   1. char_poly_q: psi(G, x) = det(xI - Q(G)) by Faddeev–LeVerrier over
//!      BigInt (division-free except the exact /k steps), exploiting the
//!      sparsity of Q so each polynomial costs O(n^2 * nnz) big-int work.
//!   2. sturm_count: number of distinct real roots in a half-open rational
//!      interval (lo, hi], with endpoint roots handled by exact deflation.
//!   3. isolate_roots: disjoint rational isolating intervals with
//!      multiplicities, by bisection on the square-free part; rational roots
//!      hit by the dyadic grid are detected and reported exactly.
//!   4. certify_*: top-k eigenvalue sums vs rational bounds and single
//!      eigenvalue positions vs rational thresholds, as Verdict values.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::spectral;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Largest order accepted by the exact pipeline. Faddeev–LeVerrier big-int
/// coefficient growth is comfortable well beyond this, but sweep budgets are
/// not, so be explicit.
pub const MAX_EXACT_N: usize = 64;

/// Outcome of a check. Float outcomes come from the dense eigensolver;
/// Certified outcomes only ever come from exact arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictOutcome {
    HoldsFloat,
    HoldsCertified,
    ViolatedCertified,
    Inconclusive,
}

/// A checked claim with its slack. `margin` is bound minus quantity
/// (positive = holds with room); for certified outcomes it is a float
/// rendering of an exact rational, attached for reporting only.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Verdict {
    pub outcome: VerdictOutcome,
    pub margin: f64,
    pub detail: String,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self.outcome, VerdictOutcome::HoldsFloat | VerdictOutcome::HoldsCertified)
    }
}

/// Comparison relation for eigenvalue position certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

/// One isolated root: exactly one real root of the queried polynomial lies in
/// (lo, hi]. When the root is known exactly (rational), `exact` carries it and
/// lo == hi == root.
#[derive(Debug, Clone)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
    pub exact: Option<BigRational>,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        use num::ToPrimitive;
        if let Some(r) = &self.exact {
            r.to_f64().unwrap_or(f64::NAN)
        } else {
            ((&self.lo + &self.hi) / BigRational::from(BigInt::from(2)))
                .to_f64()
                .unwrap_or(f64::NAN)
        }
    }
}

/// Isolated real roots, ascending, pairwise disjoint.
#[derive(Debug, Clone)]
pub struct RootIntervals(pub Vec<RootInterval>);

impl RootIntervals {
    /// Total number of real roots counted with multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.0.iter().map(|r| r.multiplicity).sum()
    }
}

// ----- characteristic polynomials -----

/// psi(G, x) = det(xI - Q(G)), monic of degree n. Guarded at n <= 64.
pub fn char_poly_q(g: &Graph) -> Result<IntPoly> {
    let n = g.vertex_count();
    if n > MAX_EXACT_N {
        return Err(Error::SizeGuard { what: "char_poly_q", limit: MAX_EXACT_N, got: n });
    }
    // sparse Q: diagonal degrees + unit entries on edges
    let mut entries: Vec<(usize, usize, BigInt)> = Vec::with_capacity(n + 2 * g.edge_count());
    for v in 0..n {
        let d = g.degree(v);
        if d > 0 {
            entries.push((v, v, BigInt::from(d)));
        }
        for u in g.neighbors(v) {
            entries.push((v, u, BigInt::one()));
        }
    }
    Ok(char_poly_sparse(n, &entries))
}

/// Faddeev–LeVerrier on a sparse integer matrix:
///   M := I, c_n = 1
///   repeat k = 1..n: P := A*M, c_{n-k} := -tr(P)/k, M := P + c_{n-k} I
/// All divisions are exact.
fn char_poly_sparse(n: usize, entries: &[(usize, usize, BigInt)]) -> IntPoly {
    if n == 0 {
        return IntPoly::one();
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<BigInt> = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    for k in 1..=n {
        let mut p = vec![BigInt::zero(); n * n];
        for (i, l, v) in entries {
            for j in 0..n {
                let t = v * &m[l * n + j];
                p[i * n + j] += t;
            }
        }
        let tr: BigInt = (0..n).map(|i| p[i * n + i].clone()).sum();
        let c = -tr / BigInt::from(k); // exact by construction
        coeffs[n - k] = c.clone();
        if k < n {
            for i in 0..n {
                p[i * n + i] += &c;
            }
            m = p;
        }
    }
    IntPoly::from_bigints(coeffs)
}

/// Characteristic polynomial of a dense integer matrix (used for the
/// vertex-deleted principal submatrices in the pendant recursion).
pub(crate) fn char_poly_dense(mat: &[Vec<BigInt>]) -> IntPoly {
    let n = mat.len();
    let mut entries = Vec::new();
    for (i, row) in mat.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                entries.push((i, j, v.clone()));
            }
        }
    }
    char_poly_sparse(n, &entries)
}

/// psi of the graph obtained from H by attaching t pendant vertices at v:
///
///   (x-1)^t psi(H, x)  -  t x (x-1)^(t-1) psi_v(H, x)
///
/// where psi_v is the characteristic polynomial of Q(H) with row/column v
/// removed (degrees stay those of H).
pub fn pendant_recursion(h: &Graph, v: usize, t: usize) -> Result<IntPoly> {
    let n = h.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    if n + t > MAX_EXACT_N {
        return Err(Error::SizeGuard { what: "pendant_recursion", limit: MAX_EXACT_N, got: n + t });
    }
    let psi_h = char_poly_q(h)?;
    if t == 0 {
        return Ok(psi_h);
    }
    // principal submatrix of Q(H) without row/col v
    let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
    let sub: Vec<Vec<BigInt>> = keep
        .iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| {
                    if i == j {
                        BigInt::from(h.degree(i))
                    } else if h.has_edge(i, j) {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let psi_sub = char_poly_dense(&sub);
    let xm1 = IntPoly::from_i64(&[-1, 1]);
    let a = xm1.pow(t).mul(&psi_h);
    let b = IntPoly::from_i64(&[0, t as i64]).mul(&xm1.pow(t - 1)).mul(&psi_sub);
    Ok(a.sub(&b))
}

/// The quintic factor of psi for the triangle-with-pendants family on n
/// vertices with a pendants at one triangle vertex (b = n-3-a at another):
///
///   x^5 - (n+5)x^4 + [(a+5)n - a^2 - 3a + 7]x^3
///       - [(2a+7)n - 2a^2 - 6a + 7]x^2 + (3n+8)x - 4
pub fn u1_quintic(n: usize, a: usize) -> Result<IntPoly> {
    if n < 5 || a + 3 > n {
        return Err(Error::InvalidFamily(format!(
            "u1_quintic needs n >= 5 and 0 <= a <= n-3, got n={n}, a={a}"
        )));
    }
    let (n, a) = (n as i64, a as i64);
    Ok(IntPoly::from_i64(&[
        -4,
        3 * n + 8,
        -((2 * a + 7) * n - 2 * a * a - 6 * a + 7),
        (a + 5) * n - a * a - 3 * a + 7,
        -(n + 5),
        1,
    ]))
}

// ----- Sturm machinery -----

/// Sturm chain: s0 = p, s1 = p', s_{i+1} = -rem(s_{i-1}, s_i), each element
/// rescaled by a positive constant (primitive part), which preserves the
/// sign-variation property.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.primitive_part()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_part());
    loop {
        let len = chain.len();
        let r = chain[len - 2].prem_sign_preserving(&chain[len - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().primitive_part());
    }
    chain
}

fn variations_at(chain: &[IntPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of p in the half-open interval (lo, hi].
/// Roots at the endpoints are handled exactly: a root at lo is excluded, a
/// root at hi is included (both are deflated before the variation count).
pub fn sturm_count(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    assert!(lo < hi, "empty interval");
    let mut p = p.primitive_part();
    let mut hi_root = 0usize;
    while p.degree() >= 1 && p.sign_at(hi) == 0 {
        p = p.exact_div(&IntPoly::linear_from_root(hi))?;
        hi_root = 1;
    }
    while p.degree() >= 1 && p.sign_at(lo) == 0 {
        p = p.exact_div(&IntPoly::linear_from_root(lo))?;
    }
    if p.degree() == 0 {
        return Ok(hi_root);
    }
    let chain = sturm_chain(&p);
    Ok(variations_at(&chain, lo) - variations_at(&chain, hi) + hi_root)
}

/// Strict upper bound (power of two) on the magnitude of every root.
fn root_bound_pow2(p: &IntPoly) -> BigRational {
    let lead = p.leading().abs();
    let mut maxc = BigInt::zero();
    for c in p.coeffs() {
        let a = c.abs();
        if a > maxc {
            maxc = a;
        }
    }
    // Cauchy: |r| < 1 + max|a_i| / |a_d|
    let bound = BigInt::one() + maxc / lead + BigInt::one();
    let mut b = BigInt::one();
    while b < bound {
        b *= 2;
    }
    BigRational::from(b)
}

fn half(x: &BigRational) -> BigRational {
    x / BigRational::from(BigInt::from(2))
}

/// Isolate all real roots of p: disjoint rational intervals, each containing
/// exactly one distinct real root, each no wider than `width` (exact rational
/// roots are reported as points). Multiplicities are recovered from the
/// squarefree decomposition, so they sum to the number of real roots of p
/// counted with multiplicity.
pub fn isolate_roots(p: &IntPoly, width: &BigRational) -> Result<RootIntervals> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    assert!(width > &BigRational::zero());
    if p.degree() == 0 {
        return Ok(RootIntervals(Vec::new()));
    }
    let original_sf = p.squarefree_part()?;
    let bound = root_bound_pow2(&original_sf);

    // exact rational roots discovered at probe points get deflated out and
    // collected separately; isolation restarts on the deflated polynomial
    let mut exact_roots: Vec<BigRational> = Vec::new();
    let mut sf = original_sf.clone();
    let mut open_intervals: Vec<(BigRational, BigRational)> = Vec::new();
    'restart: loop {
        open_intervals.clear();
        if sf.degree() == 0 {
            break;
        }
        let chain = sturm_chain(&sf);
        let var = |x: &BigRational| variations_at(&chain, x);
        let lo0 = -bound.clone();
        let hi0 = bound.clone();
        let mut stack = vec![(lo0.clone(), hi0.clone(), var(&lo0), var(&hi0))];
        while let Some((lo, hi, vlo, vhi)) = stack.pop() {
            let count = vlo - vhi;
            if count == 0 {
                continue;
            }
            // a probe point that lands on a root turns into an exact root;
            // deflate and redo the (now lower-degree) isolation
            if sf.sign_at(&hi) == 0 {
                exact_roots.push(hi.clone());
                sf = sf.exact_div(&IntPoly::linear_from_root(&hi))?;
                continue 'restart;
            }
            if count == 1 {
                let (mut lo, mut hi, mut vlo) = (lo, hi, vlo);
                while &hi - &lo > *width {
                    let mid = half(&(&lo + &hi));
                    if sf.sign_at(&mid) == 0 {
                        exact_roots.push(mid.clone());
                        sf = sf.exact_div(&IntPoly::linear_from_root(&mid))?;
                        continue 'restart;
                    }
                    let vmid = var(&mid);
                    if vlo - vmid == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                        vlo = vmid;
                    }
                }
                open_intervals.push((lo, hi));
            } else {
                let mid = half(&(&lo + &hi));
                if sf.sign_at(&mid) == 0 {
                    exact_roots.push(mid.clone());
                    sf = sf.exact_div(&IntPoly::linear_from_root(&mid))?;
                    continue 'restart;
                }
                let vmid = var(&mid);
                stack.push((lo, mid.clone(), vlo, vmid));
                stack.push((mid, hi, vmid, vhi));
            }
        }
        break;
    }

    // shrink open intervals until no previously deflated exact root sits
    // inside one (each must isolate exactly one root of the original p)
    let chain = sturm_chain(&sf);
    let var = |x: &BigRational| variations_at(&chain, x);
    let mut shrunk: Vec<(BigRational, BigRational)> = Vec::new();
    for (mut lo, mut hi) in open_intervals {
        while exact_roots.iter().any(|r| *r > lo && *r <= hi) {
            let mut mid = half(&(&lo + &hi));
            while sf.sign_at(&mid) == 0 {
                mid = half(&(&lo + &mid));
            }
            if var(&lo) - var(&mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        shrunk.push((lo, hi));
    }

    // assemble, sort, attach multiplicities via the squarefree decomposition:
    // each distinct root lies in exactly one factor f_m and has multiplicity m
    let mut items: Vec<RootInterval> = Vec::new();
    for r in &exact_roots {
        items.push(RootInterval {
            lo: r.clone(),
            hi: r.clone(),
            multiplicity: 0,
            exact: Some(r.clone()),
        });
    }
    for (lo, hi) in shrunk {
        items.push(RootInterval { lo, hi, multiplicity: 0, exact: None });
    }
    items.sort_by(|a, b| a.hi.cmp(&b.hi));

    let decomposition = p.squarefree_decomposition()?;
    for item in &mut items {
        let mut mult = 0;
        for (m, f) in &decomposition {
            let has = match &item.exact {
                Some(r) => f.sign_at(r) == 0,
                None => sturm_count(f, &item.lo, &item.hi)? > 0,
            };
            if has {
                mult = *m;
                break;
            }
        }
        debug_assert!(mult >= 1);
        item.multiplicity = mult;
    }
    Ok(RootIntervals(items))
}

// ----- certification -----

enum SumCmp {
    Below { slack: BigRational },
    Equal,
    Above { excess: BigRational },
    Undecided { lo: BigRational, hi: BigRational },
}

/// Exact comparison of S_k^+(G) against a rational bound via interval
/// refinement on isolated roots.
fn compare_topk_sum(g: &Graph, k: usize, bound: &BigRational) -> Result<SumCmp> {
    let n = g.vertex_count();
    let k = k.min(n);
    if k == 0 {
        // empty sum: S = 0
        return Ok(match BigRational::zero().cmp(bound) {
            std::cmp::Ordering::Less => SumCmp::Below { slack: bound.clone() },
            std::cmp::Ordering::Equal => SumCmp::Equal,
            std::cmp::Ordering::Greater => SumCmp::Above { excess: -bound.clone() },
        });
    }
    let p = char_poly_q(g)?;
    let mut width = BigRational::new(BigInt::one(), BigInt::from(1024));
    let floor = BigRational::new(BigInt::one(), BigInt::one() << 160);
    loop {
        let roots = isolate_roots(&p, &width)?;
        debug_assert_eq!(roots.total_multiplicity(), n, "Q spectrum is real");
        // walk from the largest root down, consuming multiplicities
        let mut need = k;
        let mut sum_lo = BigRational::zero();
        let mut sum_hi = BigRational::zero();
        for item in roots.0.iter().rev() {
            if need == 0 {
                break;
            }
            let take = need.min(item.multiplicity);
            let t = BigRational::from(BigInt::from(take));
            match &item.exact {
                Some(r) => {
                    sum_lo += r * &t;
                    sum_hi += r * &t;
                }
                None => {
                    sum_lo += &item.lo * &t;
                    sum_hi += &item.hi * &t;
                }
            }
            need -= take;
        }
        if &sum_hi < bound {
            return Ok(SumCmp::Below { slack: bound - sum_hi });
        }
        if &sum_lo > bound {
            return Ok(SumCmp::Above { excess: sum_lo - bound });
        }
        if sum_lo == sum_hi {
            // exact sum (all contributing roots rational)
            return Ok(if &sum_hi == bound {
                SumCmp::Equal
            } else if &sum_hi < bound {
                SumCmp::Below { slack: bound - sum_hi }
            } else {
                SumCmp::Above { excess: sum_lo - bound }
            });
        }
        width = &width / BigRational::from(BigInt::from(256));
        if width < floor {
            return Ok(SumCmp::Undecided { lo: sum_lo, hi: sum_hi });
        }
    }
}

fn rat_f64(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Certify S_k^+(G) <= bound. HoldsCertified / ViolatedCertified come from
/// exact arithmetic only; Inconclusive means the interval refinement hit its
/// width floor while straddling the bound.
pub fn certify_topk_sum_leq(g: &Graph, k: usize, bound: &BigRational) -> Result<Verdict> {
    if k == 0 {
        return Err(Error::KOutOfRange { k, reason: "k must be >= 1" });
    }
    Ok(match compare_topk_sum(g, k, bound)? {
        SumCmp::Below { slack } => Verdict {
            outcome: VerdictOutcome::HoldsCertified,
            margin: rat_f64(&slack),
            detail: format!("certified: top-{k} sum <= bound with exact slack {slack}"),
        },
        SumCmp::Equal => Verdict {
            outcome: VerdictOutcome::HoldsCertified,
            margin: 0.0,
            detail: format!("certified: top-{k} sum equals the bound exactly"),
        },
        SumCmp::Above { excess } => Verdict {
            outcome: VerdictOutcome::ViolatedCertified,
            margin: -rat_f64(&excess),
            detail: format!("certified: top-{k} sum exceeds bound by at least {excess}"),
        },
        SumCmp::Undecided { lo, hi } => Verdict {
            outcome: VerdictOutcome::Inconclusive,
            margin: rat_f64(&(bound - half(&(&lo + &hi)))),
            detail: "interval refinement hit the width floor while straddling the bound".into(),
        },
    })
}

/// Strict variant: certify S_k^+(G) < bound (exact equality is a violation).
pub fn certify_topk_sum_lt(g: &Graph, k: usize, bound: &BigRational) -> Result<Verdict> {
    if k == 0 {
        return Err(Error::KOutOfRange { k, reason: "k must be >= 1" });
    }
    Ok(match compare_topk_sum(g, k, bound)? {
        SumCmp::Below { slack } => Verdict {
            outcome: VerdictOutcome::HoldsCertified,
            margin: rat_f64(&slack),
            detail: format!("certified: top-{k} sum < bound with exact slack {slack}"),
        },
        SumCmp::Equal => Verdict {
            outcome: VerdictOutcome::ViolatedCertified,
            margin: 0.0,
            detail: format!("certified: top-{k} sum equals the bound (strict inequality fails)"),
        },
        SumCmp::Above { excess } => Verdict {
            outcome: VerdictOutcome::ViolatedCertified,
            margin: -rat_f64(&excess),
            detail: format!("certified: top-{k} sum exceeds bound by at least {excess}"),
        },
        SumCmp::Undecided { lo, hi } => Verdict {
            outcome: VerdictOutcome::Inconclusive,
            margin: rat_f64(&(bound - half(&(&lo + &hi)))),
            detail: "interval refinement hit the width floor while straddling the bound".into(),
        },
    })
}

/// Certify the position of the rank-th largest eigenvalue (1-based, with
/// multiplicity) relative to a rational threshold. Always decides: the count
/// of roots above the threshold and the threshold's own multiplicity are both
/// exact integers.
pub fn certify_eigenvalue_position(
    g: &Graph,
    rank: usize,
    relation: Relation,
    threshold: &BigRational,
) -> Result<Verdict> {
    let n = g.vertex_count();
    if rank == 0 || rank > n {
        return Err(Error::KOutOfRange { k: rank, reason: "rank must be in 1..=n" });
    }
    let p = char_poly_q(g)?;
    let bound = root_bound_pow2(&p);
    let hi = if *threshold >= bound { threshold + BigRational::one() } else { bound };

    // count roots strictly above the threshold, with multiplicity: the
    // squarefree decomposition p ~ prod f_m^m reduces every Sturm count to a
    // squarefree factor, which stays cheap even when p has highly repeated
    // eigenvalues
    let mut count_gt = 0usize;
    let mut mult_at = 0usize;
    for (m, f) in p.squarefree_decomposition()? {
        count_gt += m * sturm_count(&f, threshold, &hi)?;
        if f.sign_at(threshold) == 0 {
            mult_at += m;
        }
    }

    let claim_true = match relation {
        Relation::Greater => rank <= count_gt,
        Relation::Equal => count_gt < rank && rank <= count_gt + mult_at,
        Relation::Less => rank > count_gt + mult_at,
    };
    // informational float distance
    let q = spectral::q_spectrum(g)?;
    let margin = q.values()[rank - 1] - rat_f64(threshold);
    let rel = match relation {
        Relation::Less => "<",
        Relation::Equal => "=",
        Relation::Greater => ">",
    };
    Ok(Verdict {
        outcome: if claim_true {
            VerdictOutcome::HoldsCertified
        } else {
            VerdictOutcome::ViolatedCertified
        },
        margin,
        detail: format!(
            "certified: {count_gt} eigenvalues > {threshold}, multiplicity {mult_at} at it; \
             claim q_{rank} {rel} {threshold}"
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn k2_char_poly() {
        let p = char_poly_q(&families::complete(2).unwrap()).unwrap();
        assert_eq!(p, IntPoly::from_i64(&[0, -2, 1])); // x^2 - 2x
    }

    #[test]
    fn c3_char_poly() {
        // (x-4)(x-1)^2 = x^3 - 6x^2 + 9x - 4
        let p = char_poly_q(&families::cycle(3).unwrap()).unwrap();
        assert_eq!(p, IntPoly::from_i64(&[-4, 9, -6, 1]));
    }

    #[test]
    fn star_char_poly_formula() {
        // x (x-1)^(n-2) (x-n)
        for n in 2..=9 {
            let p = char_poly_q(&families::star(n).unwrap()).unwrap();
            let want = IntPoly::from_i64(&[0, 1])
                .mul(&IntPoly::from_i64(&[-1, 1]).pow(n - 2))
                .mul(&IntPoly::from_i64(&[-(n as i64), 1]));
            assert_eq!(p, want, "star n={n}");
        }
    }

    #[test]
    fn char_poly_second_coefficient_is_trace() {
        for n in 1..=6 {
            for g in crate::enumerate::connected_graphs(n).unwrap() {
                let p = char_poly_q(&g).unwrap();
                let c = &p.coeffs()[n - 1];
                assert_eq!(*c, BigInt::from(-2 * g.edge_count() as i64));
            }
        }
    }

    #[test]
    fn pendant_recursion_matches_direct() {
        // spot sample: every connected H on <= 5 vertices, every v, t <= 3
        for nh in 1..=5 {
            for h in crate::enumerate::connected_graphs(nh).unwrap() {
                for v in 0..nh {
                    for t in 0..=3 {
                        let via_rec = pendant_recursion(&h, v, t).unwrap();
                        let mut edges = h.edges();
                        for i in 0..t {
                            edges.push((v, nh + i));
                        }
                        let g = Graph::from_edges(nh + t, &edges).unwrap();
                        let direct = char_poly_q(&g).unwrap();
                        assert_eq!(via_rec, direct, "H={h:?} v={v} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn u1_quintic_values() {
        // f(0) = -4, f(1) = -ab, f(2) = 2a + 2b - 2 for all valid (n, a)
        for n in 5..=14i64 {
            for a in 0..=(n - 3) {
                let b = n - 3 - a;
                let f = u1_quintic(n as usize, a as usize).unwrap();
                assert_eq!(f.eval_big(&BigInt::from(0)), BigInt::from(-4));
                assert_eq!(f.eval_big(&BigInt::from(1)), BigInt::from(-a * b));
                assert_eq!(f.eval_big(&BigInt::from(2)), BigInt::from(2 * a + 2 * b - 2));
            }
        }
    }

    #[test]
    fn u1_factorization() {
        // psi(u1(a,b)) = (x-1)^(a+b-2) * quintic, 5 <= n <= 12
        for n in 5usize..=12 {
            for a in 0..=(n - 3) {
                let b = n - 3 - a;
                if a < b {
                    continue;
                }
                let g = families::u1(a, b).unwrap();
                let psi = char_poly_q(&g).unwrap();
                let want = IntPoly::from_i64(&[-1, 1])
                    .pow(a + b - 2)
                    .mul(&u1_quintic(n, a).unwrap());
                assert_eq!(psi, want, "n={n} a={a} b={b}");
            }
        }
    }

    #[test]
    fn sturm_counts() {
        let p = IntPoly::from_i64(&[0, -2, 1]); // roots 0, 2
        assert_eq!(sturm_count(&p, &rat(-1, 1), &rat(3, 1)).unwrap(), 2);
        assert_eq!(sturm_count(&p, &rat(0, 1), &rat(1, 1)).unwrap(), 0); // 0 excluded
        assert_eq!(sturm_count(&p, &rat(-1, 1), &rat(0, 1)).unwrap(), 1); // 0 included
        assert_eq!(sturm_count(&p, &rat(1, 1), &rat(2, 1)).unwrap(), 1); // 2 included

        // triple root at 1: (x-1)^3, distinct-root count is 1
        let c = IntPoly::from_i64(&[-1, 3, -3, 1]);
        assert_eq!(sturm_count(&c, &rat(0, 1), &rat(2, 1)).unwrap(), 1);

        // q_1(C_5) = 4 exactly: one root in (39/10, 41/10]
        let p5 = char_poly_q(&families::cycle(5).unwrap()).unwrap();
        assert_eq!(sturm_count(&p5, &rat(39, 10), &rat(41, 10)).unwrap(), 1);
    }

    #[test]
    fn isolate_multiplicities() {
        // (x-1)^3 (x-2): multiplicities 3 and 1
        let p = IntPoly::from_i64(&[-1, 3, -3, 1]).mul(&IntPoly::from_i64(&[-2, 1]));
        let roots = isolate_roots(&p, &rat(1, 1024)).unwrap();
        assert_eq!(roots.0.len(), 2);
        assert_eq!(roots.0[0].multiplicity, 3);
        assert_eq!(roots.0[1].multiplicity, 1);
        assert_eq!(roots.total_multiplicity(), 4);
        // rational roots come back exact
        assert!(roots.0.iter().all(|r| r.exact.is_some()));
    }

    #[test]
    fn isolate_irrational() {
        // x^2 - 2: two irrational roots in narrow disjoint intervals
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let w = rat(1, 1 << 20);
        let roots = isolate_roots(&p, &w).unwrap();
        assert_eq!(roots.0.len(), 2);
        for r in &roots.0 {
            assert!(r.exact.is_none());
            assert!(r.width() <= w);
        }
        assert!((roots.0[1].midpoint_f64() - std::f64::consts::SQRT_2).abs() < 1e-5);
        // disjoint and sorted
        assert!(roots.0[0].hi < roots.0[1].lo || roots.0[0].hi <= roots.0[1].lo);
    }

    #[test]
    fn certify_examples() {
        // K2, k=1, bound 2: equality holds with zero margin
        let v = certify_topk_sum_leq(&families::complete(2).unwrap(), 1, &rat(2, 1)).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::HoldsCertified);
        assert_eq!(v.margin, 0.0);

        // K4, k=2, bound 8: S_2^+ = 6 + 2 = 8 exactly
        let v = certify_topk_sum_leq(&families::complete(4).unwrap(), 2, &rat(8, 1)).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::HoldsCertified);

        // C5, k=2, bound 13/2: S_2^+ = 6.618... > 6.5
        let v = certify_topk_sum_leq(&families::cycle(5).unwrap(), 2, &rat(13, 2)).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::ViolatedCertified);

        // strict: K4 S_2^+ < 8 fails (equality), < 17/2 holds
        let v = certify_topk_sum_lt(&families::complete(4).unwrap(), 2, &rat(8, 1)).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::ViolatedCertified);
        let v = certify_topk_sum_lt(&families::complete(4).unwrap(), 2, &rat(17, 2)).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::HoldsCertified);
    }

    #[test]
    fn position_certificates() {
        // q_3(u1(2,2)) < 2
        let g = families::u1(2, 2).unwrap();
        let v = certify_eigenvalue_position(&g, 3, Relation::Less, &rat(2, 1)).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::HoldsCertified);

        // q_3(u2(3,2)) = 2 (9 vertices)
        let g = families::u2(3, 2).unwrap();
        let v = certify_eigenvalue_position(&g, 3, Relation::Equal, &rat(2, 1)).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::HoldsCertified);

        // q_1(K2) = 2: greater-than fails, equal holds
        let k2 = families::complete(2).unwrap();
        let v = certify_eigenvalue_position(&k2, 1, Relation::Greater, &rat(2, 1)).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::ViolatedCertified);
        let v = certify_eigenvalue_position(&k2, 1, Relation::Equal, &rat(2, 1)).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::HoldsCertified);
    }

    #[test]
    fn size_guard() {
        let g = Graph::empty(65);
        assert!(matches!(
            char_poly_q(&g),
            Err(Error::SizeGuard { limit: 64, got: 65, .. })
        ));
    }
}
