//! Divisibility in `O[[x₀, …, x_d]]` truncated at total degree `M`, and the
//! specialization criterion: if `F` divides `G` modulo `(x₀ − a_i, F)` for
//! infinitely many `a_i ∈ pO`, then `F` divides `G`.
//!
//! Specializations are taken modulo `m^M` with `m = (p, x₁, …, x_d)`, so the
//! coefficient of a monomial of degree `t` is known modulo `p^{min(N, M−t)}`.
//! With that convention `x₀ ↦ a` is an exact ring map.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg;
use crate::padic::{PadicElt, PrimeCtx};

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug)]
pub struct MSeries {
    pub ctx: PrimeCtx,
    pub nvars: usize,
    pub deg_cap: u32,
    pub coeffs: BTreeMap<Exponent, PadicElt>,
}

fn total(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// All exponents in `nvars` variables of total degree `< cap`, graded.
pub fn monomials(nvars: usize, cap: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for d in 0..cap {
        let mut cur = vec![0u32; nvars];
        fill(&mut out, &mut cur, 0, d);
    }
    out
}

fn fill(out: &mut Vec<Exponent>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if i + 1 >= cur.len() {
        if cur.is_empty() {
            if left == 0 {
                out.push(Vec::new());
            }
            return;
        }
        cur[i] = left;
        out.push(cur.clone());
        cur[i] = 0;
        return;
    }
    for a in (0..=left).rev() {
        cur[i] = a;
        fill(out, cur, i + 1, left - a);
    }
    cur[i] = 0;
}

impl MSeries {
    pub fn zero(ctx: PrimeCtx, nvars: usize, deg_cap: u32) -> Self {
        MSeries { ctx, nvars, deg_cap, coeffs: BTreeMap::new() }
    }

    pub fn constant(ctx: PrimeCtx, nvars: usize, deg_cap: u32, c: PadicElt) -> Self {
        let mut s = Self::zero(ctx, nvars, deg_cap);
        s.set(vec![0; nvars], c);
        s
    }

    /// The variable `x_i`.
    pub fn var(ctx: PrimeCtx, nvars: usize, deg_cap: u32, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut s = Self::zero(ctx, nvars, deg_cap);
        s.set(e, PadicElt::one(ctx));
        s
    }

    pub fn from_terms(ctx: PrimeCtx, nvars: usize, deg_cap: u32, terms: &[(Exponent, i64)]) -> Result<Self> {
        let mut s = Self::zero(ctx, nvars, deg_cap);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch);
            }
            let cur = s.coeff(e);
            s.set(e.clone(), cur + PadicElt::from_i64(ctx, *c));
        }
        Ok(s)
    }

    pub fn coeff(&self, e: &[u32]) -> PadicElt {
        self.coeffs.get(e).copied().unwrap_or_else(|| PadicElt::zero(self.ctx))
    }

    pub fn set(&mut self, e: Exponent, c: PadicElt) {
        if total(&e) >= self.deg_cap {
            return;
        }
        self.coeffs.insert(e, c);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.deg_cap = self.deg_cap.min(o.deg_cap);
        r.coeffs.retain(|e, _| total(e) < r.deg_cap);
        for (e, c) in &o.coeffs {
            let cur = r.coeff(e);
            r.set(e.clone(), cur + *c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        for c in r.coeffs.values_mut() {
            *c = -*c;
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cap = self.deg_cap.min(o.deg_cap);
        let mut r = Self::zero(self.ctx, self.nvars, cap);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &o.coeffs {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if total(&e) >= cap {
                    continue;
                }
                let cur = r.coeff(&e);
                r.set(e, cur + *c1 * *c2);
            }
        }
        r
    }

    /// Some coefficient is a unit.
    pub fn has_unit_content(&self) -> bool {
        self.coeffs.values().any(|c| c.is_unit())
    }

    /// Lowest total degree carrying a unit coefficient.
    pub fn effective_degree(&self) -> Option<u32> {
        self.coeffs.iter().filter(|(_, c)| c.is_unit()).map(|(e, _)| total(e)).min()
    }

    /// Weighted-precision equality: degree-`t` coefficients compared modulo
    /// their known precision.
    pub fn approx_eq(&self, o: &Self) -> bool {
        let cap = self.deg_cap.min(o.deg_cap);
        monomials(self.nvars, cap).iter().all(|e| self.coeff(e) == o.coeff(e))
    }
}

/// `F(a, x₁, …, x_d)` modulo `(p, x₁, …, x_d)^M`.
pub fn specialize(f: &MSeries, a: PadicElt) -> Result<MSeries> {
    if f.nvars == 0 {
        return Err(Error::DimensionMismatch);
    }
    if a.valuation().is_some_and(|v| v < f.ctx.e() as i64) {
        return Err(Error::InvalidContext("specialization point must lie in pO"));
    }
    let nv = f.nvars - 1;
    let cap = f.deg_cap;
    let n = f.ctx.prec();
    let mut r = MSeries::zero(f.ctx, nv, cap);
    for e in monomials(nv, cap) {
        let t = total(&e);
        let mut s = PadicElt::zero(f.ctx);
        let mut ap = PadicElt::one(f.ctx);
        for i in 0..(cap - t) {
            let mut full = vec![i];
            full.extend_from_slice(&e);
            if let Some(c) = f.coeffs.get(&full) {
                s += *c * ap;
            }
            ap = ap * a;
        }
        r.coeffs.insert(e, s.with_prec(n.min(cap - t)));
    }
    Ok(r)
}

/// Outcome of the graded solve for `G = F·H`.
#[derive(Clone, Debug)]
pub struct TruncDivision {
    pub quotient: Option<MSeries>,
    /// `G ≡ F·H` holds in all degrees below `window`.
    pub window: u32,
    /// First degree whose graded piece is obstructed.
    pub obstruction: Option<u32>,
    /// Digits of `p` that survive the solve.
    pub prec: u32,
}

fn solve_window(f: &MSeries, g: &MSeries, w: u32) -> Option<(MSeries, u32)> {
    let ctx = f.ctx;
    let mons = monomials(f.nvars, w);
    let index: BTreeMap<&Exponent, usize> = mons.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut a = vec![vec![PadicElt::zero(ctx); mons.len()]; mons.len()];
    let mut b = Vec::with_capacity(mons.len());
    for (row, mu) in mons.iter().enumerate() {
        let gm = g.coeff(mu);
        let rp = gm.prec();
        for (fe, fc) in &f.coeffs {
            if fe.iter().zip(mu).any(|(x, y)| x > y) {
                continue;
            }
            let nu: Exponent = mu.iter().zip(fe).map(|(y, x)| y - x).collect();
            a[row][index[&nu]] = fc.with_prec(rp);
        }
        b.push(gm);
    }
    let sol = linalg::solve(&a, &b)?;
    let mut h = MSeries::zero(ctx, f.nvars, w);
    for (e, c) in mons.into_iter().zip(sol.particular) {
        if !c.is_zero() {
            h.coeffs.insert(e, c);
        }
    }
    Some((h, ctx.prec().saturating_sub(sol.loss.div_ceil(ctx.e()))))
}

/// Decide `F | G` in the truncated ring by solving the graded linear system.
pub fn divides_trunc(f: &MSeries, g: &MSeries) -> Result<TruncDivision> {
    if f.nvars != g.nvars {
        return Err(Error::DimensionMismatch);
    }
    if f.is_zero() || !f.has_unit_content() {
        return Err(Error::NonUnit);
    }
    let cap = f.deg_cap.min(g.deg_cap);
    if let Some((h, prec)) = solve_window(f, g, cap) {
        return Ok(TruncDivision { quotient: Some(h), window: cap, obstruction: None, prec });
    }
    // Solvable windows are downward closed; find the largest.
    let mut w = cap - 1;
    let mut prec = 0;
    while w > 0 {
        if let Some((_, pr)) = solve_window(f, g, w) {
            prec = pr;
            break;
        }
        w -= 1;
    }
    Ok(TruncDivision { quotient: None, window: w, obstruction: Some(w), prec })
}

/// Specialization points `a_i ∈ pO`, pairwise distinct.
#[derive(Clone, Debug)]
pub struct SpecFamily {
    pub points: Vec<PadicElt>,
}

impl SpecFamily {
    pub fn new(points: Vec<PadicElt>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidContext("empty specialization family"));
        }
        for (i, a) in points.iter().enumerate() {
            if a.valuation().is_some_and(|v| v < a.ctx().e() as i64) {
                return Err(Error::InvalidContext("specialization point must lie in pO"));
            }
            if points[..i].iter().any(|b| b == a) {
                return Err(Error::InvalidContext("specialization points must be distinct"));
            }
        }
        Ok(SpecFamily { points })
    }
}

#[derive(Clone, Debug)]
pub struct PointResult {
    pub point: PadicElt,
    pub divides: bool,
    pub window: u32,
}

#[derive(Clone, Debug)]
pub struct ChevalleyReport {
    /// `ϖ ∤ F·G`.
    pub content: bool,
    /// `x₀ ∤ F`.
    pub x0_coprime: bool,
    /// Divisibility after each specialization.
    pub points: Vec<PointResult>,
    pub specializations: bool,
    /// Direct truncated division, attempted only when every hypothesis holds.
    pub direct: Option<bool>,
}

impl ChevalleyReport {
    pub fn all_hypotheses(&self) -> bool {
        self.content && self.x0_coprime && self.specializations
    }
}

pub fn chevalley_check(f: &MSeries, g: &MSeries, fam: &SpecFamily) -> Result<ChevalleyReport> {
    let content = f.has_unit_content() && g.has_unit_content();
    let x0_coprime = !specialize(f, PadicElt::zero(f.ctx))?.is_zero();
    let mut points = Vec::with_capacity(fam.points.len());
    for a in &fam.points {
        let fa = specialize(f, *a)?;
        let ga = specialize(g, *a)?;
        let (divides, window) = match divides_trunc(&fa, &ga) {
            Ok(d) => (d.quotient.is_some(), d.window),
            Err(_) => (false, 0),
        };
        points.push(PointResult { point: *a, divides, window });
    }
    let specializations = points.iter().all(|r| r.divides);
    let direct =
        if content && x0_coprime && specializations { Some(divides_trunc(f, g)?.quotient.is_some()) } else { None };
    Ok(ChevalleyReport { content, x0_coprime, points, specializations, direct })
}

/// Coefficients of `g_n = ∏_{i≤n}(x₀ − a_i)`, lowest degree first.
pub fn g_product(fam: &SpecFamily, n: usize) -> Vec<PadicElt> {
    let ctx = fam.points[0].ctx();
    let mut c = vec![PadicElt::one(ctx)];
    for a in fam.points.iter().take(n) {
        let mut next = vec![PadicElt::zero(ctx); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] += *ci;
            next[i] -= *ci * *a;
        }
        c = next;
    }
    c
}

/// `g_n ∈ m^n`: the degree-`t` coefficient has valuation at least `n − t`.
pub fn chevalley_witness(fam: &SpecFamily, n: usize) -> bool {
    let e = fam.points[0].ctx().e() as i64;
    g_product(fam, n).iter().enumerate().all(|(t, c)| c.valuation().is_none_or(|v| v >= (n as i64 - t as i64) * e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_plus_x_divides_one_minus_x_squared() {
        let ctx = PrimeCtx::new(5, 8).unwrap();
        let f = MSeries::from_terms(ctx, 2, 6, &[(vec![0, 0], 1), (vec![1, 0], 1)]).unwrap();
        let g = MSeries::from_terms(ctx, 2, 6, &[(vec![0, 0], 1), (vec![2, 0], -1)]).unwrap();
        let d = divides_trunc(&f, &g).unwrap();
        let h = MSeries::from_terms(ctx, 2, 6, &[(vec![0, 0], 1), (vec![1, 0], -1)]).unwrap();
        assert!(d.quotient.unwrap().approx_eq(&h));
    }

    #[test]
    fn top_degree_obstruction() {
        let ctx = PrimeCtx::new(5, 8).unwrap();
        let m = 5;
        let f = MSeries::from_terms(ctx, 2, m, &[(vec![1, 0], 1), (vec![0, 1], 1)]).unwrap();
        let h = MSeries::from_terms(ctx, 2, m, &[(vec![0, 0], 2), (vec![1, 1], 3)]).unwrap();
        let g = f.mul(&h).add(&MSeries::from_terms(ctx, 2, m, &[(vec![0, m - 1], 1)]).unwrap());
        let d = divides_trunc(&f, &g).unwrap();
        assert!(d.quotient.is_none());
        assert_eq!(d.obstruction, Some(m - 1));
        assert_eq!(d.window, m - 1);
    }

    #[test]
    fn specialize_basics() {
        let ctx = PrimeCtx::new(5, 8).unwrap();
        let a = PadicElt::from_u64(ctx, 10);
        let x0 = MSeries::var(ctx, 2, 4, 0);
        let s = specialize(&x0, a).unwrap();
        assert_eq!(s.coeff(&[0]), a.with_prec(4));
        let f = x0.sub(&MSeries::constant(ctx, 2, 4, a));
        assert!(specialize(&f, a).unwrap().is_zero());
    }
}
