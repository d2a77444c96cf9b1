//! Dense univariate polynomials over the integers (BigInt coefficients).
//!
//! Coefficients are stored low-to-high with no trailing zero at the top
//! (the zero polynomial is the empty vector).  This is the exact-arithmetic
//! substrate for characteristic polynomials and Sturm sequences; everything
//! here is straightforward schoolbook arithmetic, which is plenty at the
//! degrees involved (<= 64).

use crate::error::{Error, Result};
use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>, // coeffs[i] multiplies x^i; invariant: last != 0
}

impl std::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntPoly[{}]", self.dump())
    }
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::from_bigints(vec![BigInt::one()])
    }

    pub fn from_bigints(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_bigints(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial c * x^k.
    pub fn monomial(c: BigInt, k: usize) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly { coeffs: v }
    }

    /// x - r for rational r = c/d (in lowest terms): the primitive factor d*x - c.
    pub fn linear_from_root(r: &BigRational) -> IntPoly {
        IntPoly::from_bigints(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0 by convention (check is_zero first).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        IntPoly::from_bigints(v)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::from_bigints(v)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    /// Integer power (repeated multiplication; exponents here are tiny).
    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_bigints(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_big(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Sign of p(c/d) for d > 0 without rational arithmetic:
    /// sign of sum a_i c^i d^(deg-i).
    pub fn sign_at(&self, r: &BigRational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let c = r.numer();
        let d = r.denom();
        debug_assert!(d.is_positive());
        let deg = self.degree();
        let mut cpow = BigInt::one();
        let mut acc = BigInt::zero();
        // accumulate a_i c^i d^(deg-i); compute d powers from the top down
        let mut dpows = Vec::with_capacity(deg + 1);
        let mut dp = BigInt::one();
        for _ in 0..=deg {
            dpows.push(dp.clone());
            dp *= d;
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc += a * &cpow * &dpows[deg - i];
            }
            cpow *= c;
        }
        match acc.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Sign at +infinity (-infinity with `neg = true`).
    pub fn sign_at_infinity(&self, neg: bool) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let lead = self.leading();
        let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
        if neg && self.degree() % 2 == 1 {
            s = -s;
        }
        s
    }

    /// Content: gcd of coefficients, always positive (0 for the zero poly).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide by the (positive) content; preserves the sign pattern.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Exact division: self = q * divisor with integer q, error otherwise.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let dl = divisor.leading();
        let dd = divisor.degree();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for qi in (0..q.len()).rev() {
            let lead = rem[qi + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let (qc, r) = lead.div_rem(&dl);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                let t = dc * &qc;
                rem[qi + k] -= t;
            }
            q[qi] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::from_bigints(q))
    }

    /// Pseudo-remainder scaled by a positive constant: the returned polynomial
    /// equals |lc(g)|^s * (self mod g) for some s >= 0, so its sign at every
    /// point agrees with the true remainder's.
    pub fn prem_sign_preserving(&self, g: &IntPoly) -> IntPoly {
        assert!(!g.is_zero());
        let lg = g.leading();
        let mut r = self.clone();
        let mut steps = 0usize;
        while !r.is_zero() && r.degree() >= g.degree() {
            let k = r.degree() - g.degree();
            let lr = r.leading();
            r = r.scale(&lg).sub(&g.shift(k).scale(&lr));
            steps += 1;
        }
        if lg.is_negative() && steps % 2 == 1 {
            r.neg()
        } else {
            r
        }
    }

    /// Polynomial gcd, primitive with positive leading coefficient.
    pub fn gcd_poly(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return normalize_sign(b);
        }
        while !b.is_zero() {
            let r = a.prem_sign_preserving(&b).primitive_part();
            a = b;
            b = r;
        }
        normalize_sign(a)
    }

    /// self / gcd(self, self'): same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == 0 {
            return Ok(IntPoly::one());
        }
        let g = self.gcd_poly(&self.derivative());
        if g.degree() == 0 {
            return Ok(self.primitive_part());
        }
        self.exact_div(&g).map(|q| q.primitive_part())
    }

    /// Yun's squarefree decomposition: returns (m, f_m) pairs with each f_m
    /// squarefree, pairwise coprime, deg f_m >= 1, such that up to a rational
    /// constant self = prod f_m^m. Much cheaper than walking the full
    /// derivative-gcd chain when roots have high multiplicity.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(usize, IntPoly)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.primitive_part();
        let mut out = Vec::new();
        if p.degree() == 0 {
            return Ok(out);
        }
        let dp = p.derivative();
        let g = p.gcd_poly(&dp);
        if g.degree() == 0 {
            out.push((1, p));
            return Ok(out);
        }
        // all divisions below are exact over Z (Gauss's lemma: every divisor
        // is primitive); b and c must stay coupled, so no content stripping
        let mut b = p.exact_div(&g)?;
        let mut c = dp.exact_div(&g)?;
        let mut m = 1usize;
        while b.degree() > 0 {
            let z = c.sub(&b.derivative());
            if z.is_zero() {
                out.push((m, normalize_sign(b)));
                break;
            }
            let f = b.gcd_poly(&z);
            if f.degree() > 0 {
                out.push((m, f.clone()));
                b = b.exact_div(&f)?;
            }
            c = z.exact_div(&f)?;
            m += 1;
        }
        Ok(out)
    }

    /// Coefficients low-to-high, decimal, space-separated.
    pub fn dump(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    if p.leading().is_negative() {
        p.neg()
    } else {
        p
    }
}
