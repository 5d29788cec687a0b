//! The ring `A⁺ = O[[π]]` at finite truncation.
//!
//! `T = 1 + π` throughout. Frobenius is `π ↦ T^p − 1`, `ψ` acts on the
//! `T`-power basis by `T^a ↦ T^{a/p}` (zero when `p ∤ a`), and `σ_a` sends
//! `π ↦ T^a − 1`. The Mellin transform is `λ ↦ λ·T`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::padic::{zmod, PadicElt, PrimeCtx};

/// Truncated element of `O[[π]]`, value `p^{-denom} · Σ coeffs[i] π^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct PiSeries {
    pub ctx: PrimeCtx,
    pub coeffs: Vec<PadicElt>,
    pub denom: u32,
}

/// Binomial coefficients `C(i, j) mod p^N` for `i < n`.
pub(crate) fn binom_table(ctx: PrimeCtx, n: usize) -> Vec<Vec<u64>> {
    let m = ctx.modulus();
    let mut t: Vec<Vec<u64>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![0u64; i + 1];
        row[0] = 1 % m;
        row[i] = 1 % m;
        for j in 1..i {
            row[j] = zmod::add(t[i - 1][j - 1], t[i - 1][j], m);
        }
        t.push(row);
    }
    t
}

/// `C(a, j)` for an integer `a ≥ 0`, as `(p-adic valuation, unit part mod p^N)`.
/// The first return lists `j = 0..len`.
pub(crate) fn binom_column(ctx: PrimeCtx, a: u64, len: usize) -> Vec<PadicElt> {
    let p = ctx.p();
    let m = ctx.modulus();
    let mut out = Vec::with_capacity(len);
    let mut v: i64 = 0;
    let mut u: u64 = 1 % m;
    let mut dead = false;
    for j in 0..len {
        if j > 0 {
            let num = a as i128 - j as i128 + 1;
            if num <= 0 {
                dead = true;
            }
            if !dead {
                let num = num as u64;
                let vn = zmod::vp(num, p);
                let un = num / p.pow(vn);
                let jj = j as u64;
                let vd = zmod::vp(jj, p);
                let ud = jj / p.pow(vd);
                v += vn as i64 - vd as i64;
                u = zmod::mul(zmod::mul(u, un % m, m), zmod::inv(ud % m, m).unwrap(), m);
            }
        }
        if dead {
            out.push(PadicElt::zero(ctx));
        } else {
            out.push(PadicElt::from_u64(ctx, u).mul_p_pow(v as u32).with_prec(ctx.prec()));
        }
    }
    out
}

fn vp_factorial(j: u64, p: u64) -> u32 {
    let mut s = 0;
    let mut q = j / p;
    while q > 0 {
        s += q as u32;
        q /= p;
    }
    s
}

impl PiSeries {
    pub fn zero(ctx: PrimeCtx, deg_cap: usize) -> Self {
        PiSeries { ctx, coeffs: vec![PadicElt::zero(ctx); deg_cap], denom: 0 }
    }

    pub fn from_coeffs(ctx: PrimeCtx, mut coeffs: Vec<PadicElt>, deg_cap: usize) -> Self {
        coeffs.resize(deg_cap, PadicElt::zero(ctx));
        PiSeries { ctx, coeffs, denom: 0 }
    }

    pub fn constant(c: PadicElt, deg_cap: usize) -> Self {
        let mut s = Self::zero(c.ctx(), deg_cap);
        if deg_cap > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(ctx: PrimeCtx, deg_cap: usize) -> Self {
        Self::constant(PadicElt::one(ctx), deg_cap)
    }

    pub fn pi(ctx: PrimeCtx, deg_cap: usize) -> Self {
        let mut s = Self::zero(ctx, deg_cap);
        if deg_cap > 1 {
            s.coeffs[1] = PadicElt::one(ctx);
        }
        s
    }

    /// `(1+π)^a` for an integer `a ≥ 0`.
    pub fn t_pow(ctx: PrimeCtx, a: u64, deg_cap: usize) -> Self {
        PiSeries { ctx, coeffs: binom_column(ctx, a, deg_cap), denom: 0 }
    }

    /// `(1+π)^a` for `a ∈ Z_p` known modulo `p^{prec(a)}`; coefficient `j`
    /// is known modulo `p^{prec(a) − v_p(j!)}`.
    pub fn t_pow_padic(a: &PadicElt, deg_cap: usize) -> Result<Self> {
        let ctx = a.ctx();
        if !a.in_base() {
            return Err(Error::Unsupported("Γ-action by a non-rational exponent"));
        }
        let a0 = a.canonical_coords()[0];
        let mut s = Self::t_pow(ctx, a0, deg_cap);
        for (j, c) in s.coeffs.iter_mut().enumerate() {
            let loss = vp_factorial(j as u64, ctx.p());
            *c = c.with_prec(a.prec().saturating_sub(loss));
        }
        Ok(s)
    }

    pub fn deg_cap(&self) -> usize {
        self.coeffs.len()
    }

    fn aligned(&self, o: &Self) -> (Vec<PadicElt>, Vec<PadicElt>, u32) {
        let d = self.denom.max(o.denom);
        let a = self.coeffs.iter().map(|c| c.mul_p_pow(d - self.denom)).collect();
        let b = o.coeffs.iter().map(|c| c.mul_p_pow(d - o.denom)).collect();
        (a, b, d)
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b, d) = self.aligned(o);
        let cap = a.len().min(b.len());
        PiSeries { ctx: self.ctx, coeffs: (0..cap).map(|i| a[i] + b[i]).collect(), denom: d }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let (a, b, d) = self.aligned(o);
        let cap = a.len().min(b.len());
        PiSeries { ctx: self.ctx, coeffs: (0..cap).map(|i| a[i] - b[i]).collect(), denom: d }
    }

    pub fn scale(&self, c: PadicElt) -> Self {
        PiSeries { ctx: self.ctx, coeffs: self.coeffs.iter().map(|x| *x * c).collect(), denom: self.denom }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cap = self.deg_cap().min(o.deg_cap());
        let mut out = vec![PadicElt::zero(self.ctx); cap];
        for (i, a) in self.coeffs.iter().enumerate().take(cap) {
            if a.is_zero() && a.prec() == self.ctx.prec() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(cap - i) {
                out[i + j] += *a * *b;
            }
        }
        PiSeries { ctx: self.ctx, coeffs: out, denom: self.denom + o.denom }
    }

    /// `f(g)` for `g` with zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs.first().is_none_or(|c| c.is_zero()) || g.denom != 0 {
            return Err(Error::Unsupported("composition needs an integral g with g(0) = 0"));
        }
        let cap = self.deg_cap().min(g.deg_cap());
        let g = PiSeries { ctx: g.ctx, coeffs: g.coeffs[..cap].to_vec(), denom: 0 };
        let mut r = Self::zero(self.ctx, cap);
        for i in (0..cap).rev() {
            r = r.mul(&g);
            r.coeffs[0] += self.coeffs[i];
        }
        r.denom = self.denom;
        Ok(r)
    }

    /// `φ(π) = (1+π)^p − 1` at the given truncation.
    pub fn phi_pi(ctx: PrimeCtx, deg_cap: usize) -> Self {
        let mut s = Self::t_pow(ctx, ctx.p(), deg_cap);
        if deg_cap > 0 {
            s.coeffs[0] = PadicElt::zero(ctx);
        }
        s
    }

    /// Frobenius `f(π) ↦ f((1+π)^p − 1)`.
    pub fn frobenius(&self) -> Result<Self> {
        if self.deg_cap() <= self.ctx.p() as usize {
            return Err(Error::PrecisionLoss);
        }
        self.compose(&Self::phi_pi(self.ctx, self.deg_cap()))
    }

    /// `q = φ(π)/π`.
    pub fn q(ctx: PrimeCtx, deg_cap: usize) -> Self {
        let phi = Self::t_pow(ctx, ctx.p(), deg_cap + 1);
        Self::from_coeffs(ctx, phi.coeffs[1..].to_vec(), deg_cap)
    }

    /// Coefficients on the `T`-power basis (exact for polynomials of degree < deg_cap).
    pub fn to_t_basis(&self) -> Vec<PadicElt> {
        let m = self.deg_cap();
        let tab = binom_table(self.ctx, m);
        let mut b = vec![PadicElt::zero(self.ctx); m];
        for i in 0..m {
            let fi = self.coeffs[i];
            if fi.is_zero() && fi.prec() == self.ctx.prec() {
                continue;
            }
            for a in 0..=i {
                let c = PadicElt::from_u64(self.ctx, tab[i][a]);
                if (i - a) % 2 == 0 {
                    b[a] += fi * c;
                } else {
                    b[a] -= fi * c;
                }
            }
        }
        b
    }

    /// Inverse of [`to_t_basis`](Self::to_t_basis).
    pub fn from_t_basis(ctx: PrimeCtx, b: &[PadicElt], deg_cap: usize, denom: u32) -> Self {
        let mut f = vec![PadicElt::zero(ctx); deg_cap];
        for (a, ba) in b.iter().enumerate() {
            if ba.is_zero() && ba.prec() == ctx.prec() {
                continue;
            }
            let col = binom_column(ctx, a as u64, deg_cap);
            for j in 0..deg_cap.min(a + 1) {
                f[j] += *ba * col[j];
            }
        }
        PiSeries { ctx, coeffs: f, denom }
    }

    /// `ψ`, computed through the `T`-power basis.
    pub fn psi(&self) -> Self {
        let p = self.ctx.p() as usize;
        let b = self.to_t_basis();
        let mut c = vec![PadicElt::zero(self.ctx); b.len().div_ceil(p)];
        for (a, ba) in b.iter().enumerate() {
            if a % p == 0 {
                c[a / p] = *ba;
            }
        }
        Self::from_t_basis(self.ctx, &c, self.deg_cap(), self.denom)
    }

    /// `σ_a` for an exact integer `a` prime to `p`.
    pub fn gamma_act_int(&self, a: u64) -> Result<Self> {
        if a.is_multiple_of(self.ctx.p()) {
            return Err(Error::NonUnit);
        }
        let mut g = Self::t_pow(self.ctx, a, self.deg_cap());
        g.coeffs[0] = PadicElt::zero(self.ctx);
        self.compose(&g)
    }

    /// `σ_a` for a unit `a ∈ Z_p`.
    pub fn gamma_act(&self, a: &PadicElt) -> Result<Self> {
        if !a.is_unit() {
            return Err(Error::NonUnit);
        }
        let mut g = Self::t_pow_padic(a, self.deg_cap())?;
        g.coeffs[0] = PadicElt::zero(self.ctx);
        self.compose(&g)
    }

    /// Inverse of a series with unit constant term.
    pub fn inv_unit(&self) -> Result<Self> {
        if self.denom != 0 {
            return Err(Error::Unsupported("inverse of a non-integral series"));
        }
        let m = self.deg_cap();
        let c0 = self.coeffs.first().ok_or(Error::NonUnit)?.inv()?;
        let mut g = vec![PadicElt::zero(self.ctx); m];
        if m > 0 {
            g[0] = c0;
        }
        for k in 1..m {
            let mut s = PadicElt::zero(self.ctx);
            for i in 1..=k {
                s += self.coeffs[i] * g[k - i];
            }
            g[k] = -(s * c0);
        }
        Ok(PiSeries { ctx: self.ctx, coeffs: g, denom: 0 })
    }

    /// `ξ = p/(q − π^{p−1})`, a unit of `A⁺`.
    pub fn xi(ctx: PrimeCtx, deg_cap: usize) -> Result<Self> {
        let p = ctx.p() as usize;
        let mut h = Self::q(ctx, deg_cap);
        if p - 1 < deg_cap {
            h.coeffs[p - 1] -= PadicElt::one(ctx);
        }
        let h =
            PiSeries { ctx, coeffs: h.coeffs.iter().map(|c| c.div_p_pow(1)).collect::<Result<Vec<_>>>()?, denom: 0 };
        h.inv_unit()
    }

    /// Equality at common truncation and known precision.
    pub fn approx_eq(&self, o: &Self) -> bool {
        let d = self.sub(o);
        d.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Sparse polynomial in `T = 1 + π`: `p^{-denom} · Σ c_a T^a`.
#[derive(Clone, Debug, PartialEq)]
pub struct TPoly {
    pub ctx: PrimeCtx,
    pub terms: BTreeMap<u64, PadicElt>,
    pub denom: u32,
}

impl TPoly {
    pub fn zero(ctx: PrimeCtx) -> Self {
        TPoly { ctx, terms: BTreeMap::new(), denom: 0 }
    }

    pub fn monomial(c: PadicElt, a: u64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(a, c);
        TPoly { ctx: c.ctx(), terms, denom: 0 }
    }

    pub fn constant(c: PadicElt) -> Self {
        Self::monomial(c, 0)
    }

    /// `q = φ(π)/π = Σ_{j<p} T^j`.
    pub fn q(ctx: PrimeCtx) -> Self {
        let mut t = Self::zero(ctx);
        for j in 0..ctx.p() {
            t.terms.insert(j, PadicElt::one(ctx));
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }

    fn prune(mut self) -> Self {
        self.terms.retain(|_, c| !(c.is_zero() && c.prec() == c.ctx().prec()));
        self
    }

    pub fn with_denom(mut self, denom: u32) -> Self {
        self.denom += denom;
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let d = self.denom.max(o.denom);
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            terms.insert(*a, c.mul_p_pow(d - self.denom));
        }
        for (a, c) in &o.terms {
            let c = c.mul_p_pow(d - o.denom);
            let e = terms.entry(*a).or_insert(PadicElt::zero(self.ctx));
            *e += c;
        }
        TPoly { ctx: self.ctx, terms, denom: d }.prune()
    }

    pub fn neg(&self) -> Self {
        TPoly { ctx: self.ctx, terms: self.terms.iter().map(|(a, c)| (*a, -*c)).collect(), denom: self.denom }
    }

    pub fn scale(&self, c: PadicElt) -> Self {
        TPoly { ctx: self.ctx, terms: self.terms.iter().map(|(a, x)| (*a, *x * c)).collect(), denom: self.denom }
            .prune()
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let mut terms: BTreeMap<u64, PadicElt> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e = a.checked_add(*b).ok_or(Error::Overflow)?;
                let v = terms.entry(e).or_insert(PadicElt::zero(self.ctx));
                *v += *x * *y;
            }
        }
        Ok(TPoly { ctx: self.ctx, terms, denom: self.denom + o.denom }.prune())
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut r = Self::constant(PadicElt::one(self.ctx));
        for _ in 0..k {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// `φ^i`: `T ↦ T^{p^i}`.
    pub fn frob_pow(&self, i: u32) -> Result<Self> {
        let f = self.ctx.p().checked_pow(i).ok_or(Error::Overflow)?;
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            terms.insert(a.checked_mul(f).ok_or(Error::Overflow)?, *c);
        }
        Ok(TPoly { ctx: self.ctx, terms, denom: self.denom })
    }

    pub fn max_exponent(&self) -> u64 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    /// `ψ(h) = 0` exactly: no surviving term with `p | a`.
    pub fn psi_vanishes(&self) -> bool {
        self.terms.iter().all(|(a, c)| a % self.ctx.p() != 0 || c.is_zero())
    }

    /// Expansion in powers of `π` truncated at `deg_cap`.
    pub fn to_piseries(&self, deg_cap: usize) -> PiSeries {
        let mut f = vec![PadicElt::zero(self.ctx); deg_cap];
        for (a, c) in &self.terms {
            let col = binom_column(self.ctx, *a, deg_cap);
            for j in 0..deg_cap {
                f[j] += *c * col[j];
            }
        }
        PiSeries { ctx: self.ctx, coeffs: f, denom: self.denom }
    }
}

/// Element of `O[(Z/p^{n+1})^×]`, keyed by residues `a ∈ [1, p^{n+1})` prime to `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGroupRingElt {
    pub ctx: PrimeCtx,
    pub level: u32,
    pub coeffs: BTreeMap<u64, PadicElt>,
    pub denom: u32,
}

impl FiniteGroupRingElt {
    pub fn modulus(ctx: PrimeCtx, level: u32) -> u64 {
        ctx.p().pow(level + 1)
    }

    pub fn zero(ctx: PrimeCtx, level: u32) -> Self {
        FiniteGroupRingElt { ctx, level, coeffs: BTreeMap::new(), denom: 0 }
    }

    /// The group element `[a]`.
    pub fn sigma(ctx: PrimeCtx, level: u32, a: u64) -> Result<Self> {
        if a.is_multiple_of(ctx.p()) {
            return Err(Error::NonUnit);
        }
        let mut s = Self::zero(ctx, level);
        s.coeffs.insert(a % Self::modulus(ctx, level), PadicElt::one(ctx));
        Ok(s)
    }

    pub fn identity(ctx: PrimeCtx, level: u32) -> Self {
        Self::sigma(ctx, level, 1).unwrap()
    }

    /// All residues `a ∈ [1, p^{n+1})` prime to `p`, in increasing order.
    pub fn index_set(ctx: PrimeCtx, level: u32) -> Vec<u64> {
        let m = Self::modulus(ctx, level);
        (1..m).filter(|a| a % ctx.p() != 0).collect()
    }

    fn prune(mut self) -> Self {
        self.coeffs.retain(|_, c| !(c.is_zero() && c.prec() == c.ctx().prec()));
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut c = self.coeffs.clone();
        for (a, x) in &o.coeffs {
            let e = c.entry(*a).or_insert(PadicElt::zero(self.ctx));
            *e += *x;
        }
        FiniteGroupRingElt { coeffs: c, ..self.clone() }.prune()
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut c = self.coeffs.clone();
        for (a, x) in &o.coeffs {
            let e = c.entry(*a).or_insert(PadicElt::zero(self.ctx));
            *e -= *x;
        }
        FiniteGroupRingElt { coeffs: c, ..self.clone() }.prune()
    }

    /// Convolution product.
    pub fn mul(&self, o: &Self) -> Self {
        let m = Self::modulus(self.ctx, self.level);
        let mut c: BTreeMap<u64, PadicElt> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &o.coeffs {
                let e = c.entry(zmod::mul(*a, *b, m)).or_insert(PadicElt::zero(self.ctx));
                *e += *x * *y;
            }
        }
        FiniteGroupRingElt { ctx: self.ctx, level: self.level, coeffs: c, denom: self.denom + o.denom }.prune()
    }

    /// Image under `(Z/p^{n+2})^× → (Z/p^{n+1})^×`.
    pub fn project(&self) -> Result<Self> {
        if self.level == 0 {
            return Err(Error::Unsupported("no lower level"));
        }
        let m = Self::modulus(self.ctx, self.level - 1);
        let mut c: BTreeMap<u64, PadicElt> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            let e = c.entry(a % m).or_insert(PadicElt::zero(self.ctx));
            *e += *x;
        }
        Ok(FiniteGroupRingElt { ctx: self.ctx, level: self.level - 1, coeffs: c, denom: self.denom }.prune())
    }

    /// Projection `e_i` onto the `ω^i`-isotypic part for `Δ = μ_{p−1}`.
    pub fn theta_component(&self, i: u32) -> Result<Self> {
        let ctx = self.ctx;
        let p = ctx.p();
        let m = Self::modulus(ctx, self.level);
        let mut e = Self::zero(ctx, self.level);
        let inv_pm1 = PadicElt::from_u64(ctx, p - 1).inv()?;
        for r in 1..p {
            let w = PadicElt::teichmuller(ctx, r)?;
            // Teichmüller representative of r modulo p^{n+1}
            let mut key = r % m;
            for _ in 0..(self.level + 1) {
                key = zmod::pow(key, p, m);
            }
            let wi = w.pow(((p - 1) - (i as u64 % (p - 1))) % (p - 1));
            e.coeffs.insert(key, wi * inv_pm1);
        }
        Ok(self.mul(&e))
    }
}

/// Mellin transform `λ ↦ λ·(1+π)`, truncated at `π^{p^{n+1}}`.
pub fn mellin(lambda: &FiniteGroupRingElt) -> PiSeries {
    let cap = FiniteGroupRingElt::modulus(lambda.ctx, lambda.level) as usize;
    let t = TPoly { ctx: lambda.ctx, terms: lambda.coeffs.clone(), denom: lambda.denom };
    t.to_piseries(cap)
}

/// Inverse Mellin transform at level `n`, solved on the basis `{T^a : a ∈ (Z/p^{n+1})^×}`.
pub fn mellin_inverse(h: &PiSeries, n: u32) -> Result<FiniteGroupRingElt> {
    let ctx = h.ctx;
    let m = FiniteGroupRingElt::modulus(ctx, n) as usize;
    if h.deg_cap() < m {
        return Err(Error::InsufficientDegree { needed: m, have: h.deg_cap() });
    }
    let trunc = PiSeries { ctx, coeffs: h.coeffs[..m].to_vec(), denom: h.denom };
    let b = trunc.to_t_basis();
    let p = ctx.p() as usize;
    let mut out = FiniteGroupRingElt::zero(ctx, n);
    out.denom = h.denom;
    for (a, ba) in b.iter().enumerate() {
        if a % p == 0 {
            if !ba.is_zero() {
                return Err(Error::NotInImage);
            }
        } else if !(ba.is_zero() && ba.prec() == ctx.prec()) {
            out.coeffs.insert(a as u64, *ba);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrimeCtx {
        PrimeCtx::new(5, 10).unwrap()
    }

    #[test]
    fn frobenius_of_pi() {
        let c = ctx();
        let pi = PiSeries::pi(c, 25);
        let phi = pi.frobenius().unwrap();
        assert_eq!(phi, PiSeries::phi_pi(c, 25));
        assert_eq!(PiSeries::pi(c, 5).frobenius(), Err(Error::PrecisionLoss));
    }

    #[test]
    fn psi_kills_prime_to_p_powers() {
        let c = ctx();
        for a in 1..20u64 {
            let s = PiSeries::t_pow(c, a, 30).psi();
            if a % 5 == 0 {
                assert!(s.approx_eq(&PiSeries::t_pow(c, a / 5, 30)));
            } else {
                assert!(s.coeffs.iter().all(|x| x.is_zero()));
            }
        }
        assert!(PiSeries::one(c, 30).psi().approx_eq(&PiSeries::one(c, 30)));
    }

    #[test]
    fn mellin_of_x() {
        let c = ctx();
        let u = 6;
        let h = PiSeries::t_pow(c, u, 125).sub(&PiSeries::t_pow(c, 1, 125));
        let x = mellin_inverse(&h, 2).unwrap();
        let expect = FiniteGroupRingElt::sigma(c, 2, u).unwrap().sub(&FiniteGroupRingElt::identity(c, 2));
        assert_eq!(x, expect);
        assert_eq!(mellin_inverse(&PiSeries::t_pow(c, 1, 125), 2).unwrap(), FiniteGroupRingElt::identity(c, 2));
        assert!(matches!(mellin_inverse(&PiSeries::one(c, 125), 2), Err(Error::NotInImage)));
        assert!(matches!(mellin_inverse(&PiSeries::one(c, 25), 2), Err(Error::InsufficientDegree { .. })));
    }
}
