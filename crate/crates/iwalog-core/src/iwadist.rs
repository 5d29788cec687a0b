//! The Iwasawa algebra `O[[X]]` and distribution algebras at finite truncation.
//!
//! `X = γ − 1` where `γ` acts on `Z_p(1)` through `u = 1 + p`. A series is
//! either an exact polynomial or a power series known modulo `X^D`, and carries
//! a denominator exponent (`value = coeffs / p^denom`) and a growth tag `r`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::CycElt;
use crate::cycser::{binom_column, TPoly};
use crate::error::{Error, Result};
use crate::linalg;
use crate::padic::{zmod, PadicElt, PrimeCtx};

/// Non-negative rational growth order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Growth {
    pub num: u32,
    pub den: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Growth {
    pub const ZERO: Growth = Growth { num: 0, den: 1 };

    pub fn new(num: u32, den: u32) -> Self {
        assert!(den > 0);
        let g = gcd(num, den).max(1);
        Growth { num: num / g, den: den / g }
    }

    pub fn add(self, o: Growth) -> Growth {
        Growth::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }

    pub fn max(self, o: Growth) -> Growth {
        if (self.num as u64) * (o.den as u64) >= (o.num as u64) * (self.den as u64) {
            self
        } else {
            o
        }
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl core::str::FromStr for Growth {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = Error::Unsupported("growth must be a non-negative rational");
        match s.split_once('/') {
            Some((a, b)) => {
                let a = a.trim().parse().map_err(|_| bad.clone())?;
                let b: u32 = b.trim().parse().map_err(|_| bad.clone())?;
                if b == 0 {
                    return Err(bad);
                }
                Ok(Growth::new(a, b))
            }
            None => Ok(Growth::new(s.trim().parse().map_err(|_| bad)?, 1)),
        }
    }
}

/// Evaluation point `X = ζ·u^j − 1` with `ζ` of exact order `p^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CharPoint {
    pub t: u32,
    pub j: i64,
}

/// Value of a series at a [`CharPoint`]: `value / p^denom` in `O[ζ_{p^t}]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharValue {
    pub value: CycElt,
    pub denom: u32,
}

impl CharValue {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// Truncated element of `Λ_O(Γ₁) ⊗ Q` or of a distribution algebra `H_r`.
#[derive(Clone, Debug)]
pub struct IwaSeries {
    pub ctx: PrimeCtx,
    pub coeffs: Vec<PadicElt>,
    /// `true` when the element is the polynomial `coeffs` with no hidden tail.
    pub exact: bool,
    pub denom: u32,
    pub growth: Growth,
}

fn exact_zero(c: &PadicElt) -> bool {
    c.coords() == [0, 0] && c.prec() == c.ctx().prec()
}

/// `u^j` for `u = 1 + p`.
pub fn u_pow(ctx: PrimeCtx, j: i64) -> PadicElt {
    let u = PadicElt::from_u64(ctx, 1 + ctx.p());
    let e = j.unsigned_abs();
    if j >= 0 {
        u.pow(e)
    } else {
        u.inv().expect("u is a unit").pow(e)
    }
}

/// `log_u(a)` modulo `p^k` for an integer `a ≡ 1 (mod p)`.
pub fn log_u(p: u64, a: u64, k: u32) -> Result<u64> {
    if a % p != 1 % p {
        return Err(Error::Unsupported("exponent outside 1 + pZ_p"));
    }
    let m = zmod::ipow(p, k + 1).filter(|&m| m < (1u64 << 62)).ok_or(Error::Overflow)?;
    let u = 1 + p;
    let uinv = zmod::inv(u, m).unwrap();
    let mut x = a % m;
    let mut ell = 0u64;
    let mut pr = 1u64;
    // u^{p^r} ≡ 1 + p^{r+1} (mod p^{r+2})
    let mut ur_inv = uinv;
    for _ in 0..k {
        let q = pr * p;
        let digit = (x / q) % p;
        let digit = if x % q == 1 % q { digit } else { return Err(Error::Overflow) };
        ell += digit * pr;
        x = zmod::mul(x, zmod::pow(ur_inv, digit, m), m);
        ur_inv = zmod::pow(ur_inv, p, m);
        pr = q;
    }
    Ok(ell)
}

impl IwaSeries {
    pub fn zero(ctx: PrimeCtx) -> Self {
        IwaSeries { ctx, coeffs: vec![PadicElt::zero(ctx)], exact: true, denom: 0, growth: Growth::ZERO }
    }

    pub fn constant(c: PadicElt) -> Self {
        IwaSeries { ctx: c.ctx(), coeffs: vec![c], exact: true, denom: 0, growth: Growth::ZERO }
    }

    pub fn one(ctx: PrimeCtx) -> Self {
        Self::constant(PadicElt::one(ctx))
    }

    pub fn x(ctx: PrimeCtx) -> Self {
        Self::poly(ctx, vec![PadicElt::zero(ctx), PadicElt::one(ctx)])
    }

    pub fn poly(ctx: PrimeCtx, coeffs: Vec<PadicElt>) -> Self {
        let coeffs = if coeffs.is_empty() { vec![PadicElt::zero(ctx)] } else { coeffs };
        IwaSeries { ctx, coeffs, exact: true, denom: 0, growth: Growth::ZERO }.trim()
    }

    /// A power series known modulo `X^{coeffs.len()}`.
    pub fn series(ctx: PrimeCtx, coeffs: Vec<PadicElt>) -> Self {
        IwaSeries { ctx, coeffs, exact: false, denom: 0, growth: Growth::ZERO }
    }

    pub fn from_i64s(ctx: PrimeCtx, c: &[i64]) -> Self {
        Self::poly(ctx, c.iter().map(|&x| PadicElt::from_i64(ctx, x)).collect())
    }

    pub fn with_growth(mut self, g: Growth) -> Self {
        self.growth = g;
        self
    }

    pub fn with_denom(mut self, d: u32) -> Self {
        self.denom = d;
        self
    }

    /// Number of stored coefficients (the truncation degree for series).
    pub fn deg_cap(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> PadicElt {
        self.coeffs.get(i).copied().unwrap_or_else(|| PadicElt::zero(self.ctx))
    }

    fn trim(mut self) -> Self {
        if self.exact {
            while self.coeffs.len() > 1 && exact_zero(self.coeffs.last().unwrap()) {
                self.coeffs.pop();
            }
        }
        self
    }

    /// Degree of an exact polynomial (`None` for the zero polynomial).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Truncate to a power series known modulo `X^cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        let mut c = self.coeffs.clone();
        if !self.exact && cap > c.len() {
            c.truncate(cap);
        } else {
            c.resize(cap, PadicElt::zero(self.ctx));
        }
        IwaSeries { coeffs: c, exact: false, ..self.clone() }
    }

    /// Exact polynomial padded to `cap` coefficients; fails when it does not fit.
    pub fn fit(&self, cap: usize) -> Result<Self> {
        if !self.exact {
            return Ok(self.truncate(cap.min(self.deg_cap())));
        }
        let d = self.degree().unwrap_or(0);
        if d >= cap {
            return Err(Error::InsufficientDegree { needed: d + 1, have: cap });
        }
        Ok(self.clone())
    }

    /// Numerators rescaled to the denominator `p^d` (`d ≥ self.denom`).
    fn numerators_at(&self, d: u32) -> Vec<PadicElt> {
        self.coeffs.iter().map(|c| c.mul_p_pow(d - self.denom)).collect()
    }

    fn combine<F: Fn(PadicElt, PadicElt) -> PadicElt>(&self, o: &Self, f: F) -> Self {
        let d = self.denom.max(o.denom);
        let a = self.numerators_at(d);
        let b = o.numerators_at(d);
        let exact = self.exact && o.exact;
        let len = match (self.exact, o.exact) {
            (true, true) => a.len().max(b.len()),
            (false, true) => a.len(),
            (true, false) => b.len(),
            (false, false) => a.len().min(b.len()),
        };
        let z = PadicElt::zero(self.ctx);
        let coeffs = (0..len).map(|i| f(a.get(i).copied().unwrap_or(z), b.get(i).copied().unwrap_or(z))).collect();
        IwaSeries { ctx: self.ctx, coeffs, exact, denom: d, growth: self.growth.max(o.growth) }.trim()
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, |x, y| x + y)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, |x, y| x - y)
    }

    pub fn neg(&self) -> Self {
        IwaSeries { coeffs: self.coeffs.iter().map(|c| -*c).collect(), ..self.clone() }
    }

    pub fn scale(&self, c: PadicElt) -> Self {
        IwaSeries { coeffs: self.coeffs.iter().map(|x| *x * c).collect(), ..self.clone() }.trim()
    }

    /// Divide by `p^k` (denominator bookkeeping only).
    pub fn div_p_pow(&self, k: u32) -> Self {
        IwaSeries { denom: self.denom + k, ..self.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let exact = self.exact && o.exact;
        let cap = match (self.exact, o.exact) {
            (true, true) => self.coeffs.len() + o.coeffs.len() - 1,
            (false, true) => self.coeffs.len(),
            (true, false) => o.coeffs.len(),
            (false, false) => self.coeffs.len().min(o.coeffs.len()),
        };
        let mut out = vec![PadicElt::zero(self.ctx); cap];
        for (i, a) in self.coeffs.iter().enumerate().take(cap) {
            if exact_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(cap - i) {
                out[i + j] += *a * *b;
            }
        }
        IwaSeries { ctx: self.ctx, coeffs: out, exact, denom: self.denom + o.denom, growth: self.growth.add(o.growth) }
            .trim()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.ctx);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Strip a common power of `p` from the numerators into the denominator.
    pub fn normalize(&self) -> Self {
        let e = self.ctx.e() as i64;
        let v = self
            .coeffs
            .iter()
            .map(|c| match c.valuation() {
                Some(v) => v / e,
                None => c.prec() as i64,
            })
            .min()
            .unwrap_or(0);
        let k = (v.max(0) as u32).min(self.denom);
        if k == 0 {
            return self.clone();
        }
        let coeffs = self.coeffs.iter().map(|c| c.div_p_pow(k).expect("content divides")).collect();
        IwaSeries { coeffs, denom: self.denom - k, ..self.clone() }
    }

    /// Equality as elements of `O[[X]] ⊗ Q` at common truncation and precision.
    pub fn approx_eq(&self, o: &Self) -> bool {
        self.sub(o).coeffs.iter().all(|c| c.is_zero())
    }

    /// Unit of `Λ`: integral with unit constant term.
    pub fn is_unit(&self) -> bool {
        let n = self.normalize();
        n.denom == 0 && n.coeff(0).is_unit()
    }

    /// `Tw^j`, the substitution `X ↦ u^j(1+X) − 1`.
    pub fn twist(&self, j: i64) -> Self {
        if j == 0 {
            return self.clone();
        }
        let ctx = self.ctx;
        let s = u_pow(ctx, j);
        let s1 = s - PadicElt::one(ctx);
        let len = self.coeffs.len();
        let mut r = vec![PadicElt::zero(ctx); len];
        for i in (0..len).rev() {
            // r ← r·(s1 + s·X) + c_i
            let mut next = vec![PadicElt::zero(ctx); len];
            for k in 0..len {
                if exact_zero(&r[k]) {
                    continue;
                }
                next[k] += r[k] * s1;
                if k + 1 < len {
                    next[k + 1] += r[k] * s;
                }
            }
            next[0] += self.coeffs[i];
            r = next;
        }
        if !self.exact {
            let v = (zmod::vp(j.unsigned_abs(), ctx.p()) + 1) as usize;
            for (i, c) in r.iter_mut().enumerate() {
                let bound = ((len - i) * v).min(u32::MAX as usize) as u32;
                *c = c.with_prec(bound.min(c.prec()));
            }
        }
        IwaSeries { coeffs: r, ..self.clone() }.trim()
    }

    /// `F(ζ·u^j − 1)`.
    pub fn eval_at(&self, pt: CharPoint) -> Result<CharValue> {
        let ctx = self.ctx;
        let one = CycElt::constant(pt.t, PadicElt::one(ctx))?;
        let x = CycElt::zeta_pow(ctx, pt.t, 1)?.scale(u_pow(ctx, pt.j)).sub(&one);
        let mut acc = CycElt::constant(pt.t, PadicElt::zero(ctx))?;
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&x).add(&CycElt::constant(pt.t, *c)?);
        }
        if !self.exact {
            let d = self.coeffs.len() as u64;
            let bound = if pt.t >= 1 {
                d / CycElt::degree(ctx, pt.t)? as u64
            } else if pt.j != 0 {
                d * (zmod::vp(pt.j.unsigned_abs(), ctx.p()) as u64 + 1)
            } else {
                u64::MAX
            };
            let b = bound.min(ctx.prec() as u64) as u32;
            for c in acc.coeffs.iter_mut() {
                *c = c.with_prec(b.min(c.prec()));
            }
        }
        Ok(CharValue { value: acc, denom: self.denom })
    }

    /// Coefficient-valuation proxy for membership in `H_r`:
    /// `v_p(c_i) ≥ −r·⌈log_p(i+1)⌉ − slack` for every known coefficient.
    pub fn growth_proxy_ok(&self, slack: i64) -> bool {
        let p = self.ctx.p();
        let e = self.ctx.e() as i64;
        self.coeffs.iter().enumerate().all(|(i, c)| {
            let Some(v) = c.valuation() else { return true };
            // v_p(c_i) as a fraction with denominator e, minus the global denominator
            let lhs = v - e * self.denom as i64;
            let mut l = 0i64;
            let mut q = 1u64;
            while q < (i as u64 + 1) {
                q = q.saturating_mul(p);
                l += 1;
            }
            let r = self.growth;
            // lhs/e ≥ −(num/den)·l − slack
            lhs * r.den as i64 >= -(r.num as i64) * l * e - slack * e * r.den as i64
        })
    }

    /// Remainder modulo an exact polynomial `w` with unit leading coefficient.
    ///
    /// For series inputs the result is known to precision `⌊D / deg w⌋` when
    /// `w` is distinguished.
    pub fn reduce_mod(&self, w: &IwaSeries) -> Result<IwaSeries> {
        if !w.exact || w.denom != 0 {
            return Err(Error::Unsupported("modulus must be an integral polynomial"));
        }
        let d = w.degree().ok_or(Error::NotDivisible)?;
        let lead_inv = w.coeffs[d].inv()?;
        let wn: Vec<PadicElt> = w.coeffs[..=d].iter().map(|c| *c * lead_inv).collect();
        let mut r = self.coeffs.clone();
        if r.len() < d {
            r.resize(d, PadicElt::zero(self.ctx));
        }
        for k in (d..r.len()).rev() {
            let c = r[k];
            if exact_zero(&c) {
                continue;
            }
            r[k] = PadicElt::zero(self.ctx);
            for i in 0..d {
                let t = c * wn[i];
                r[k - d + i] -= t;
            }
        }
        r.truncate(d.max(1));
        if d == 0 {
            r = vec![PadicElt::zero(self.ctx)];
        }
        if !self.exact {
            let distinguished = wn[..d].iter().all(|c| !c.is_unit());
            let bound = if distinguished { (self.coeffs.len() / d.max(1)) as u32 } else { 0 };
            for c in r.iter_mut() {
                *c = c.with_prec(bound.min(c.prec()));
            }
        }
        Ok(IwaSeries { ctx: self.ctx, coeffs: r, exact: true, denom: self.denom, growth: self.growth })
    }

    /// `self ≡ 0` modulo `(p^N, w)` after clearing denominators.
    pub fn is_zero_mod(&self, w: &IwaSeries) -> Result<bool> {
        Ok(self.reduce_mod(w)?.coeffs.iter().all(|c| c.is_zero()))
    }

    /// `H` with `self = g·H`.
    ///
    /// Exact polynomial division is tried first; otherwise the quotient is a
    /// power series found by Weierstrass-style iteration, with per-coefficient
    /// precision reflecting the truncation.
    pub fn divide_exact(&self, g: &IwaSeries) -> Result<IwaSeries> {
        let ctx = self.ctx;
        let gn = g.normalize();
        let e = ctx.e() as i64;
        let vmin = gn.coeffs.iter().filter_map(|c| c.valuation()).min().ok_or(Error::NotDivisible)?;
        let content = (vmin / e) as u32;
        let mut gc: Vec<PadicElt> = gn.coeffs.iter().map(|c| c.div_p_pow(content)).collect::<Result<_>>()?;
        // A leftover uniformizer: 1/π_e = π_e/(c·p).
        let odd = vmin % e == 1;
        let mut shift = gn.denom as i64 - self.denom as i64 - content as i64;
        let mut post = PadicElt::one(ctx);
        if odd {
            gc = gc.iter().map(|c| c.div_uniformizer()).collect::<Result<_>>()?;
            if let crate::padic::Ext::Ramified { c } = ctx.ext() {
                post = PadicElt::generator(ctx)? * PadicElt::from_u64(ctx, c).inv()?;
            }
            shift -= 1;
        }
        let finish = |mut h: IwaSeries| -> IwaSeries {
            if odd {
                h.coeffs = h.coeffs.iter().map(|c| *c * post).collect();
            }
            if shift >= 0 {
                h.coeffs = h.coeffs.iter().map(|c| c.mul_p_pow(shift as u32)).collect();
                h.denom = 0;
            } else {
                h.denom = (-shift) as u32;
            }
            h.growth = self.growth;
            h
        };
        if self.exact && gn.exact {
            if let Some(h) = poly_divide(&self.coeffs, &gc) {
                return Ok(finish(IwaSeries::poly(ctx, h)));
            }
        }
        let cap = if self.exact {
            if gn.exact {
                self.coeffs.len() + gc.len()
            } else {
                gc.len()
            }
        } else if gn.exact {
            self.coeffs.len()
        } else {
            self.coeffs.len().min(gc.len())
        };
        let mut f = self.coeffs.clone();
        f.resize(cap, PadicElt::zero(ctx));
        let mut gs = gc.clone();
        gs.resize(cap, PadicElt::zero(ctx));
        let h = series_divide(&f, &gs)?;
        Ok(finish(IwaSeries::series(ctx, h)))
    }

    /// A unit `u` with `self ≡ u·g (mod p^N, w)`.
    ///
    /// Solves the linear system for `u mod w` and returns a solution whose
    /// constant term is a unit, after checking the congruence directly.
    pub fn equal_up_to_unit_mod(&self, g: &IwaSeries, w: &IwaSeries) -> Result<IwaSeries> {
        let ctx = self.ctx;
        let d = w.degree().ok_or(Error::NoUnitWitness)?;
        let den = self.denom.max(g.denom);
        let f_num = IwaSeries { denom: 0, ..self.clone() };
        let f_num = IwaSeries { coeffs: f_num.numerators_at_from(self.denom, den), ..f_num };
        let g_num = IwaSeries { coeffs: g.numerators_at_from(g.denom, den), denom: 0, ..g.clone() };
        let fr = f_num.reduce_mod(w)?;
        let mut col = g_num.reduce_mod(w)?;
        let mut cols: Vec<Vec<PadicElt>> = Vec::with_capacity(d);
        let xw = IwaSeries::x(ctx);
        for _ in 0..d {
            let mut c = col.coeffs.clone();
            c.resize(d, PadicElt::zero(ctx));
            cols.push(c);
            col = col.mul(&xw).reduce_mod(w)?;
        }
        let a: Vec<Vec<PadicElt>> = (0..d).map(|i| (0..d).map(|j| cols[j][i]).collect()).collect();
        let mut b = fr.coeffs.clone();
        b.resize(d, PadicElt::zero(ctx));
        let sol = linalg::solve(&a, &b).ok_or(Error::NoUnitWitness)?;
        let mut cands = vec![sol.particular.clone()];
        for k in &sol.kernel {
            cands.push(sol.particular.iter().zip(k).map(|(x, y)| *x + *y).collect());
        }
        for u in cands {
            if !u[0].is_unit() {
                continue;
            }
            let uu = IwaSeries::poly(ctx, u);
            let diff = f_num.sub(&uu.mul(&g_num));
            if diff.is_zero_mod(w)? {
                return Ok(uu);
            }
        }
        Err(Error::NoUnitWitness)
    }

    fn numerators_at_from(&self, own: u32, d: u32) -> Vec<PadicElt> {
        self.coeffs.iter().map(|c| c.mul_p_pow(d - own)).collect()
    }

    /// `∏_{i<m} Tw^{−i}(self)`.
    pub fn twisted_product(&self, m: u32) -> Self {
        let mut r = Self::one(self.ctx);
        for i in 0..m {
            r = r.mul(&self.twist(-(i as i64)));
        }
        r
    }
}

/// Long division by a polynomial with unit leading coefficient; `None` if the
/// remainder is nonzero.
fn poly_divide(f: &[PadicElt], g: &[PadicElt]) -> Option<Vec<PadicElt>> {
    let ctx = g[0].ctx();
    let dg = g.iter().rposition(|c| !c.is_zero())?;
    let lead_inv = g[dg].inv().ok()?;
    let mut r = f.to_vec();
    let df = match r.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return Some(vec![PadicElt::zero(ctx)]),
    };
    if df < dg {
        return None;
    }
    let mut q = vec![PadicElt::zero(ctx); df - dg + 1];
    for k in (0..=(df - dg)).rev() {
        let c = r[k + dg] * lead_inv;
        q[k] = c;
        for i in 0..=dg {
            let t = c * g[i];
            r[k + i] -= t;
        }
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

/// Quotient of power series known modulo `X^D`; `g` must have a unit coefficient.
fn series_divide(f: &[PadicElt], g: &[PadicElt]) -> Result<Vec<PadicElt>> {
    let ctx = g[0].ctx();
    let dcap = f.len();
    let e = g.iter().position(|c| c.is_unit()).ok_or(Error::NotDivisible)?;
    if e >= dcap {
        return Err(Error::NotDivisible);
    }
    let hcap = dcap - e;
    let b = &g[..e];
    let uinv = inv_series(&g[e..], hcap)?;
    let beta = b.iter().filter_map(|c| c.valuation()).min();
    let iters = match beta {
        None => 1,
        Some(bv) => (ctx.prec() as i64 * ctx.e() as i64 / bv.max(1)) as usize + 2,
    };
    let mut h = vec![PadicElt::zero(ctx); hcap];
    for _ in 0..iters {
        // r = F − B·H, restricted to indices e..D
        let mut r: Vec<PadicElt> = f[e..].to_vec();
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            for i in 0..hcap {
                let idx = i + e;
                if idx < j || idx - j >= hcap {
                    continue;
                }
                r[i] -= *bj * h[idx - j];
            }
        }
        let mut nh = vec![PadicElt::zero(ctx); hcap];
        for i in 0..hcap {
            if exact_zero(&r[i]) {
                continue;
            }
            for k in 0..(hcap - i) {
                nh[i + k] += r[i] * uinv[k];
            }
        }
        h = nh;
    }
    // residual below X^e
    for m in 0..e {
        let mut s = f[m];
        for j in 0..=m {
            s -= b[j] * h[m - j];
        }
        if !s.is_zero() {
            return Err(Error::NotDivisible);
        }
    }
    if let Some(bv) = beta {
        if e > 0 {
            let eram = ctx.e() as usize;
            for (i, c) in h.iter_mut().enumerate() {
                let steps = (hcap - i).div_ceil(e);
                let bound = (bv as usize * steps) / eram;
                *c = c.with_prec((bound.min(u32::MAX as usize) as u32).min(c.prec()));
            }
        }
    }
    Ok(h)
}

fn inv_series(g: &[PadicElt], cap: usize) -> Result<Vec<PadicElt>> {
    let ctx = g[0].ctx();
    let c0 = g[0].inv()?;
    let mut r = vec![PadicElt::zero(ctx); cap];
    if cap == 0 {
        return Ok(r);
    }
    r[0] = c0;
    for k in 1..cap {
        let mut s = PadicElt::zero(ctx);
        for i in 1..=k.min(g.len() - 1) {
            s += g[i] * r[k - i];
        }
        r[k] = -(s * c0);
    }
    Ok(r)
}

/// `ω_n = (1+X)^{p^n} − 1`.
pub fn omega(ctx: PrimeCtx, n: u32) -> Result<IwaSeries> {
    let pn = ctx.p().checked_pow(n).ok_or(Error::Overflow)?;
    let mut c = binom_column(ctx, pn, pn as usize + 1);
    c[0] = PadicElt::zero(ctx);
    Ok(IwaSeries::poly(ctx, c))
}

/// `Φ_n = ω_n / ω_{n−1} = Σ_{i<p} (1+X)^{i·p^{n−1}}` (`Φ_0 = X`).
pub fn phi_cyc(ctx: PrimeCtx, n: u32) -> Result<IwaSeries> {
    if n == 0 {
        return Ok(IwaSeries::x(ctx));
    }
    let p = ctx.p();
    let step = p.checked_pow(n - 1).ok_or(Error::Overflow)?;
    let deg = (step * (p - 1)) as usize;
    let mut acc = vec![PadicElt::zero(ctx); deg + 1];
    for i in 0..p {
        let col = binom_column(ctx, i * step, deg + 1);
        for (a, b) in acc.iter_mut().zip(col) {
            *a += b;
        }
    }
    Ok(IwaSeries::poly(ctx, acc))
}

/// `ω_{n,m} = ∏_{i<m} Tw^{−i}(ω_n)`.
pub fn omega_tw(ctx: PrimeCtx, n: u32, m: u32) -> Result<IwaSeries> {
    Ok(omega(ctx, n)?.twisted_product(m))
}

/// `Φ_{n,m} = ∏_{i<m} Tw^{−i}(Φ_n)`.
pub fn phi_tw(ctx: PrimeCtx, n: u32, m: u32) -> Result<IwaSeries> {
    Ok(phi_cyc(ctx, n)?.twisted_product(m))
}

/// `δ_m = ∏_{i<m} Tw^{−i}(X)`.
pub fn delta(ctx: PrimeCtx, m: u32) -> IwaSeries {
    IwaSeries::x(ctx).twisted_product(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `+` collects even `k`, `−` odd `k`.
    pub fn takes(self, k: u32) -> bool {
        match self {
            Sign::Plus => k.is_multiple_of(2),
            Sign::Minus => k % 2 == 1,
        }
    }

    pub fn other(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// `∏_{k≤n, k of the sign's parity} Φ_k/p`, before twisting.
fn halflog_base(ctx: PrimeCtx, sign: Sign, n: u32) -> Result<IwaSeries> {
    let mut r = IwaSeries::one(ctx);
    for k in 1..=n {
        if sign.takes(k) {
            r = r.mul(&phi_cyc(ctx, k)?).div_p_pow(1);
        }
    }
    Ok(r)
}

/// Truncated half-logarithm `log^±_{p,m}` at level `n`.
pub fn halflog(ctx: PrimeCtx, sign: Sign, m: u32, n: u32) -> Result<IwaSeries> {
    Ok(halflog_base(ctx, sign, n)?.twisted_product(m).with_growth(Growth::new(m, 2)))
}

/// `∏_{i<m} Tw^{−i}(X·∏_{k≤n} Φ_k/p) = ω_{n,m}/p^{mn}`.
pub fn log_tw(ctx: PrimeCtx, m: u32, n: u32) -> Result<IwaSeries> {
    let mut base = IwaSeries::x(ctx);
    for k in 1..=n {
        base = base.mul(&phi_cyc(ctx, k)?).div_p_pow(1);
    }
    Ok(base.twisted_product(m).with_growth(Growth::new(m, 1)))
}

/// `∏_{k≤n, parity} Φ_{k,m}`: the integral polynomial behind `log^±`.
pub fn omega_pm(ctx: PrimeCtx, sign: Sign, n: u32, m: u32) -> Result<IwaSeries> {
    let mut r = IwaSeries::one(ctx);
    for k in 1..=n {
        if sign.takes(k) {
            r = r.mul(&phi_tw(ctx, k, m)?);
        }
    }
    Ok(r)
}

/// `m^{-1}(Σ c_a (1+π)^a)` for exponents `a ≡ 1 (mod p)`, as a power series
/// modulo `X^cap`: `[a] ↦ (1+X)^{log_u a}`.
pub fn from_t_poly_series(tp: &TPoly, cap: usize) -> Result<IwaSeries> {
    let ctx = tp.ctx;
    let p = ctx.p();
    let mut lg = 0u32;
    let mut q = 1u64;
    while q < cap as u64 {
        q = q.saturating_mul(p);
        lg += 1;
    }
    let k = ctx.prec() + lg + 1;
    let mut acc = vec![PadicElt::zero(ctx); cap];
    for (a, c) in &tp.terms {
        if c.is_zero() && c.prec() == ctx.prec() {
            continue;
        }
        let ell = log_u(p, *a, k)?;
        let col = binom_column(ctx, ell, cap);
        for (x, b) in acc.iter_mut().zip(col) {
            *x += *c * b;
        }
    }
    Ok(IwaSeries { ctx, coeffs: acc, exact: false, denom: tp.denom, growth: Growth::ZERO })
}

/// `(1+X)^e mod w` by square-and-multiply.
pub fn one_plus_x_pow_mod(ctx: PrimeCtx, mut e: u64, w: &IwaSeries) -> Result<IwaSeries> {
    let mut base = IwaSeries::from_i64s(ctx, &[1, 1]).reduce_mod(w)?;
    let mut r = IwaSeries::one(ctx).reduce_mod(w)?;
    while e > 0 {
        if e & 1 == 1 {
            r = r.mul(&base).reduce_mod(w)?;
        }
        base = base.mul(&base).reduce_mod(w)?;
        e >>= 1;
    }
    Ok(r)
}

/// `m^{-1}(Σ c_a (1+π)^a)` reduced modulo `w`, computed in `Λ/w` with
/// `log_u a` taken modulo `p^k`.
pub fn from_t_poly_mod(tp: &TPoly, w: &IwaSeries, k: u32) -> Result<IwaSeries> {
    let ctx = tp.ctx;
    let mut acc = IwaSeries::zero(ctx);
    for (a, c) in &tp.terms {
        if c.is_zero() && c.prec() == ctx.prec() {
            continue;
        }
        let ell = log_u(ctx.p(), *a, k)?;
        acc = acc.add(&one_plus_x_pow_mod(ctx, ell, w)?.scale(*c));
    }
    let mut r = acc.reduce_mod(w)?;
    r.denom = tp.denom;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> PrimeCtx {
        PrimeCtx::new(3, 20).unwrap()
    }

    #[test]
    fn omega_and_phi_small() {
        let ctx = c3();
        assert!(omega(ctx, 1).unwrap().approx_eq(&IwaSeries::from_i64s(ctx, &[0, 3, 3, 1])));
        assert!(phi_cyc(ctx, 1).unwrap().approx_eq(&IwaSeries::from_i64s(ctx, &[3, 3, 1])));
        let q = omega(ctx, 1).unwrap().divide_exact(&IwaSeries::x(ctx)).unwrap();
        assert!(q.exact && q.approx_eq(&phi_cyc(ctx, 1).unwrap()));
    }

    #[test]
    fn delta_two() {
        let ctx = c3();
        let ui = u_pow(ctx, -1);
        let expect = IwaSeries::x(ctx).mul(&IwaSeries::poly(ctx, vec![ui - PadicElt::one(ctx), ui]));
        assert!(delta(ctx, 2).approx_eq(&expect));
        assert!(delta(ctx, 1).approx_eq(&IwaSeries::x(ctx)));
    }

    #[test]
    fn discrete_log() {
        let p = 3;
        let ell = log_u(p, 4u64.pow(5) % 3u64.pow(10), 9).unwrap();
        assert_eq!(ell % 3u64.pow(9), 5);
        assert_eq!(log_u(p, 1, 5).unwrap(), 0);
    }

    #[test]
    fn series_division_by_non_monic() {
        let ctx = PrimeCtx::new(3, 8).unwrap();
        let g = phi_cyc(ctx, 2).unwrap();
        let h = IwaSeries::from_i64s(ctx, &[1, 2, 0, 5, 7]);
        let one_plus = IwaSeries::from_i64s(ctx, &[1, 3]);
        // g·h·(1+3X) divided by g·(1+3X)
        let f = g.mul(&h).mul(&one_plus).truncate(120);
        let q = f.divide_exact(&g.mul(&one_plus)).unwrap();
        for i in 0..5 {
            assert_eq!(q.coeff(i), h.coeff(i), "coefficient {i}");
        }
    }
}
