//! Elements of `O/p^N` where `O` is `Z_p` or a quadratic extension of it.
//!
//! The unramified extension is `Z_p[θ]` with `θ² = d` for a non-residue `d`.
//! The ramified extension is `Z_p[π_e]` with `π_e² = c·p` for a unit `c`.
//! Valuations are reported in units of the uniformizer (half-units when ramified).

use core::fmt;

use crate::error::{Error, Result};

/// Modular helpers on `u64` residues.
pub mod zmod {
    #[inline]
    pub fn mul(a: u64, b: u64, m: u64) -> u64 {
        ((a as u128 * b as u128) % m as u128) as u64
    }
    #[inline]
    pub fn add(a: u64, b: u64, m: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % m as u128) as u64
    }
    #[inline]
    pub fn sub(a: u64, b: u64, m: u64) -> u64 {
        let (a, b) = (a % m, b % m);
        if a >= b {
            a - b
        } else {
            a + (m - b)
        }
    }
    pub fn pow(mut b: u64, mut e: u64, m: u64) -> u64 {
        let mut r = 1 % m;
        b %= m;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b, m);
            }
            b = mul(b, b, m);
            e >>= 1;
        }
        r
    }
    /// Inverse modulo `m`, if `gcd(a, m) = 1`.
    pub fn inv(a: u64, m: u64) -> Option<u64> {
        let (mut r0, mut r1) = (m as i128, (a % m) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 != 1 {
            return None;
        }
        Some(t0.rem_euclid(m as i128) as u64)
    }
    /// p-adic valuation of a nonzero integer.
    pub fn vp(mut x: u64, p: u64) -> u32 {
        let mut v = 0;
        while x != 0 && x.is_multiple_of(p) {
            x /= p;
            v += 1;
        }
        v
    }
    pub fn ipow(p: u64, e: u32) -> Option<u64> {
        let mut r: u64 = 1;
        for _ in 0..e {
            r = r.checked_mul(p)?;
        }
        Some(r)
    }
    pub fn from_i64(x: i64, m: u64) -> u64 {
        (x as i128).rem_euclid(m as i128) as u64
    }
    pub fn from_i128(x: i128, m: u64) -> u64 {
        x.rem_euclid(m as i128) as u64
    }
    pub fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }
    pub fn legendre(a: u64, p: u64) -> i32 {
        let a = a % p;
        if a == 0 {
            return 0;
        }
        if pow(a, (p - 1) / 2, p) == 1 {
            1
        } else {
            -1
        }
    }
    /// Square root modulo an odd prime (Tonelli-Shanks).
    pub fn sqrt_mod_p(a: u64, p: u64) -> Option<u64> {
        let a = a % p;
        if a == 0 {
            return Some(0);
        }
        if legendre(a, p) != 1 {
            return None;
        }
        let (mut q, mut s) = (p - 1, 0);
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while legendre(z, p) != -1 {
            z += 1;
        }
        let mut m = s;
        let mut c = pow(z, q, p);
        let mut t = pow(a, q, p);
        let mut r = pow(a, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = mul(tt, tt, p);
                i += 1;
            }
            let b = pow(c, 1 << (m - i - 1), p);
            m = i;
            c = mul(b, b, p);
            t = mul(t, c, p);
            r = mul(r, b, p);
        }
        Some(r)
    }
}

/// Quadratic extension descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ext {
    None,
    /// `θ² = d`, `d` a quadratic non-residue mod p.
    Unramified {
        d: u64,
    },
    /// `π_e² = c·p`, `c` a unit.
    Ramified {
        c: u64,
    },
}

/// Prime, working precision and coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeCtx {
    p: u64,
    n: u32,
    pn: u64,
    ext: Ext,
}

impl PrimeCtx {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if p < 3 || !zmod::is_prime(p) {
            return Err(Error::InvalidContext("p must be an odd prime"));
        }
        if n == 0 {
            return Err(Error::InvalidContext("precision must be positive"));
        }
        let pn =
            zmod::ipow(p, n).filter(|&m| m < (1u64 << 62)).ok_or(Error::InvalidContext("p^N must be below 2^62"))?;
        Ok(PrimeCtx { p, n, pn, ext: Ext::None })
    }

    pub fn with_unramified(self, d: u64) -> Result<Self> {
        if zmod::legendre(d, self.p) != -1 {
            return Err(Error::InvalidContext("unramified extension needs a non-residue"));
        }
        Ok(PrimeCtx { ext: Ext::Unramified { d: d % self.pn }, ..self })
    }

    pub fn with_ramified(self, c: u64) -> Result<Self> {
        if c.is_multiple_of(self.p) {
            return Err(Error::InvalidContext("Eisenstein constant must be a unit"));
        }
        Ok(PrimeCtx { ext: Ext::Ramified { c: c % self.pn }, ..self })
    }

    /// Same prime and extension at another precision.
    pub fn with_prec(self, n: u32) -> Result<Self> {
        let base = PrimeCtx::new(self.p, n)?;
        let ext = match self.ext {
            Ext::None => Ext::None,
            Ext::Unramified { d } => Ext::Unramified { d: d % base.pn },
            Ext::Ramified { c } => Ext::Ramified { c: c % base.pn },
        };
        Ok(PrimeCtx { ext, ..base })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }
    #[inline]
    pub fn prec(&self) -> u32 {
        self.n
    }
    /// `p^N`.
    #[inline]
    pub fn modulus(&self) -> u64 {
        self.pn
    }
    #[inline]
    pub fn ext(&self) -> Ext {
        self.ext
    }
    /// Ramification index.
    pub fn e(&self) -> u32 {
        match self.ext {
            Ext::Ramified { .. } => 2,
            _ => 1,
        }
    }
    pub fn has_ext(&self) -> bool {
        self.ext != Ext::None
    }
    pub fn pow_p(&self, k: u32) -> u64 {
        if k >= self.n {
            0
        } else {
            zmod::ipow(self.p, k).unwrap()
        }
    }
}

/// Extended rational valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Val {
    /// `num / den` with `den` the ramification index.
    Finite {
        num: i64,
        den: u8,
    },
    Infinite,
}

impl Val {
    pub fn is_finite(&self) -> bool {
        matches!(self, Val::Finite { .. })
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Infinite => write!(f, "inf"),
            Val::Finite { num, den: 1 } => write!(f, "{num}"),
            Val::Finite { num, den } => {
                if num % (*den as i64) == 0 {
                    write!(f, "{}", num / *den as i64)
                } else {
                    write!(f, "{num}/{den}")
                }
            }
        }
    }
}

/// An element of `O` known modulo `p^prec`.
#[derive(Clone, Copy, Debug)]
pub struct PadicElt {
    ctx: PrimeCtx,
    c: [u64; 2],
    prec: u32,
}

impl PartialEq for PadicElt {
    /// Equality at the common known precision.
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && (*self - *other).is_zero()
    }
}

impl PadicElt {
    pub fn zero(ctx: PrimeCtx) -> Self {
        PadicElt { ctx, c: [0, 0], prec: ctx.n }
    }
    pub fn one(ctx: PrimeCtx) -> Self {
        Self::from_u64(ctx, 1)
    }
    pub fn from_u64(ctx: PrimeCtx, x: u64) -> Self {
        PadicElt { ctx, c: [x % ctx.pn, 0], prec: ctx.n }
    }
    pub fn from_i64(ctx: PrimeCtx, x: i64) -> Self {
        PadicElt { ctx, c: [zmod::from_i64(x, ctx.pn), 0], prec: ctx.n }
    }
    pub fn from_i128(ctx: PrimeCtx, x: i128) -> Self {
        PadicElt { ctx, c: [zmod::from_i128(x, ctx.pn), 0], prec: ctx.n }
    }
    /// `c0 + c1·g` with `g` the extension generator (θ or π_e).
    pub fn from_coords(ctx: PrimeCtx, c0: u64, c1: u64) -> Self {
        let c1 = if ctx.ext == Ext::None { 0 } else { c1 % ctx.pn };
        PadicElt { ctx, c: [c0 % ctx.pn, c1], prec: ctx.n }
    }
    /// The extension generator θ or π_e.
    pub fn generator(ctx: PrimeCtx) -> Result<Self> {
        if ctx.ext == Ext::None {
            return Err(Error::InvalidContext("no extension declared"));
        }
        Ok(Self::from_coords(ctx, 0, 1))
    }
    pub fn with_prec(mut self, prec: u32) -> Self {
        self.prec = prec.min(self.ctx.n);
        self
    }

    #[inline]
    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }
    #[inline]
    pub fn prec(&self) -> u32 {
        self.prec
    }
    /// Raw coordinates modulo `p^N`.
    #[inline]
    pub fn coords(&self) -> [u64; 2] {
        self.c
    }
    /// Coordinates reduced to `[0, p^prec)`.
    pub fn canonical_coords(&self) -> [u64; 2] {
        let m = zmod::ipow(self.ctx.p, self.prec).unwrap();
        [self.c[0] % m, self.c[1] % m]
    }

    fn coord_val(&self, i: usize) -> Option<u32> {
        let m = zmod::ipow(self.ctx.p, self.prec).unwrap();
        let x = self.c[i] % m;
        if x == 0 {
            None
        } else {
            Some(zmod::vp(x, self.ctx.p))
        }
    }

    /// Lower bound for the valuation in whole `p`-digits.
    fn digit_val(&self) -> u32 {
        match self.valuation() {
            Some(v) => v as u32 / self.ctx.e(),
            None => self.prec,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coord_val(0).is_none() && self.coord_val(1).is_none()
    }

    /// Valuation in uniformizer units; `None` when zero at known precision.
    pub fn valuation(&self) -> Option<i64> {
        let v0 = self.coord_val(0);
        let v1 = self.coord_val(1);
        match self.ctx.ext {
            Ext::Ramified { .. } => {
                let a = v0.map(|v| 2 * v as i64);
                let b = v1.map(|v| 2 * v as i64 + 1);
                match (a, b) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                }
            }
            _ => match (v0, v1) {
                (Some(x), Some(y)) => Some(x.min(y) as i64),
                (x, y) => x.or(y).map(|v| v as i64),
            },
        }
    }

    pub fn val(&self) -> Val {
        match self.valuation() {
            None => Val::Infinite,
            Some(v) => Val::Finite { num: v, den: self.ctx.e() as u8 },
        }
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    fn mk(&self, c0: u64, c1: u64, prec: u32) -> Self {
        PadicElt { ctx: self.ctx, c: [c0, c1], prec }
    }

    pub fn neg(&self) -> Self {
        let m = self.ctx.pn;
        self.mk(zmod::sub(0, self.c[0], m), zmod::sub(0, self.c[1], m), self.prec)
    }

    pub fn mul_u64(&self, k: u64) -> Self {
        let m = self.ctx.pn;
        self.mk(zmod::mul(self.c[0], k % m, m), zmod::mul(self.c[1], k % m, m), self.prec)
    }

    /// Multiply by `p^k`; precision grows by `k`.
    pub fn mul_p_pow(&self, k: u32) -> Self {
        if k == 0 {
            return *self;
        }
        let f = self.ctx.pow_p(k);
        let mut r = self.mul_u64(f);
        r.prec = (self.prec + k).min(self.ctx.n);
        r
    }

    /// Exact division by `p^k`; precision drops by `k`.
    pub fn div_p_pow(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(*self);
        }
        if self.prec < k {
            return Err(Error::PrecisionLoss);
        }
        let m = zmod::ipow(self.ctx.p, self.prec).unwrap();
        let f = zmod::ipow(self.ctx.p, k).unwrap();
        let (a, b) = (self.c[0] % m, self.c[1] % m);
        if a % f != 0 || b % f != 0 {
            return Err(Error::NotDivisible);
        }
        Ok(self.mk(a / f, b / f, self.prec - k))
    }

    /// Multiply by the uniformizer (p, or π_e when ramified).
    pub fn mul_uniformizer(&self) -> Self {
        match self.ctx.ext {
            Ext::Ramified { c } => {
                let m = self.ctx.pn;
                let c0 = zmod::mul(zmod::mul(self.c[1], c, m), self.ctx.p, m);
                self.mk(c0, self.c[0], self.prec)
            }
            _ => self.mul_p_pow(1),
        }
    }

    /// Exact division by the uniformizer.
    pub fn div_uniformizer(&self) -> Result<Self> {
        match self.ctx.ext {
            Ext::Ramified { c } => {
                if self.prec == 0 {
                    return Err(Error::PrecisionLoss);
                }
                let m = zmod::ipow(self.ctx.p, self.prec).unwrap();
                let a = self.c[0] % m;
                if !a.is_multiple_of(self.ctx.p) {
                    return Err(Error::NotDivisible);
                }
                let cinv = zmod::inv(c, self.ctx.pn).unwrap();
                let c1 = zmod::mul(a / self.ctx.p, cinv, self.ctx.pn);
                Ok(self.mk(self.c[1] % m, c1, self.prec - 1))
            }
            _ => self.div_p_pow(1),
        }
    }

    /// Exact division by `ϖ^k`, losing `⌈k/e⌉` digits of precision.
    pub fn div_unif_pow(&self, k: u32) -> Result<Self> {
        let ctx = self.ctx;
        let r = self.div_p_pow(k / ctx.e())?;
        match ctx.ext {
            Ext::Ramified { c } => {
                let r = r * PadicElt::from_u64(ctx, c).inv()?.pow((k / 2) as u64);
                if k % 2 == 1 {
                    r.div_uniformizer()
                } else {
                    Ok(r)
                }
            }
            _ => Ok(r),
        }
    }

    /// Galois conjugate (`θ ↦ −θ`, `π_e ↦ −π_e`).
    pub fn conj(&self) -> Self {
        self.mk(self.c[0], zmod::sub(0, self.c[1], self.ctx.pn), self.prec)
    }

    /// Norm to `Z_p`.
    pub fn norm(&self) -> Self {
        let r = *self * self.conj();
        r.mk(r.c[0], 0, r.prec)
    }

    pub fn inv(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NonUnit);
        }
        let n = self.norm();
        let ninv = zmod::inv(n.c[0], self.ctx.pn).ok_or(Error::NonUnit)?;
        let r = self.conj().mul_u64(ninv);
        Ok(r.with_prec(self.prec))
    }

    /// `self / other` when the quotient is integral.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        let vo = other.valuation().ok_or(Error::NotDivisible)?;
        if self.is_zero() {
            return Ok(Self::zero(self.ctx).with_prec(self.prec.saturating_sub(vo as u32)));
        }
        let vs = self.valuation().unwrap();
        if vs < vo {
            return Err(Error::NotDivisible);
        }
        let mut a = *self;
        let mut b = *other;
        for _ in 0..vo {
            a = a.div_uniformizer()?;
            b = b.div_uniformizer()?;
        }
        Ok(a * b.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut r = Self::one(self.ctx).with_prec(self.prec);
        let mut b = *self;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b;
            }
            b = b * b;
            e >>= 1;
        }
        r
    }

    /// Residue of the leading unit digit used for canonical choices.
    fn leading_digit(&self) -> Option<u64> {
        let m = zmod::ipow(self.ctx.p, self.prec).unwrap();
        for i in 0..2 {
            let x = self.c[i] % m;
            if x != 0 {
                let v = zmod::vp(x, self.ctx.p);
                return Some((x / zmod::ipow(self.ctx.p, v).unwrap()) % self.ctx.p);
            }
        }
        None
    }

    /// Canonical square root.
    ///
    /// Of the two roots, returns the one whose leading unit digit (first nonzero
    /// coordinate) lies in `[1, (p-1)/2]`.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NoRoot);
        }
        let ctx = self.ctx;
        let p = ctx.p;
        let root = if self.coord_val(1).is_none() {
            let v = self.coord_val(0).unwrap();
            let unit = self.with_c1_zero().div_p_pow(v)?;
            let u0 = unit.c[0] % p;
            match (v % 2, zmod::legendre(u0, p), ctx.ext) {
                (0, 1, _) => sqrt_unit_zp(&unit)?.mul_p_pow(v / 2),
                (0, -1, Ext::Unramified { d }) => {
                    let dinv = zmod::inv(d, ctx.pn).ok_or(Error::NoRoot)?;
                    let r = sqrt_unit_zp(&unit.mul_u64(dinv))?;
                    r.mk(0, r.c[0], r.prec).mul_p_pow(v / 2)
                }
                (1, _, Ext::Ramified { c }) => {
                    let cinv = zmod::inv(c, ctx.pn).unwrap();
                    let w = unit.mul_u64(cinv);
                    if zmod::legendre(w.c[0] % p, p) != 1 {
                        return Err(Error::NoRoot);
                    }
                    let r = sqrt_unit_zp(&w)?;
                    r.mk(0, r.c[0], r.prec).mul_p_pow((v - 1) / 2)
                }
                _ => return Err(Error::NoRoot),
            }
        } else {
            if !self.is_unit() {
                return Err(Error::NoRoot);
            }
            // Brute-force a residue root, then Newton iterate.
            let mut start = None;
            'outer: for a in 0..p {
                for b in 0..p {
                    let x = Self::from_coords(ctx, a, b);
                    if x.is_unit() && (x * x - *self).valuation().is_none_or(|v| v > 0) {
                        start = Some(x);
                        break 'outer;
                    }
                }
            }
            let mut x = start.ok_or(Error::NoRoot)?;
            let half = zmod::inv(2, ctx.pn).unwrap();
            for _ in 0..(ctx.n + 2) {
                x = (x + self.div_exact(&x)?).mul_u64(half);
            }
            x.with_prec(self.prec)
        };
        let d = root.leading_digit().ok_or(Error::NoRoot)?;
        if d >= 1 && d <= (p - 1) / 2 {
            Ok(root)
        } else {
            Ok(root.neg())
        }
    }

    fn with_c1_zero(&self) -> Self {
        self.mk(self.c[0], 0, self.prec)
    }

    /// Teichmüller lift of a nonzero residue.
    pub fn teichmuller(ctx: PrimeCtx, a: u64) -> Result<Self> {
        if a.is_multiple_of(ctx.p) {
            return Err(Error::NonUnit);
        }
        let mut x = a % ctx.pn;
        for _ in 0..ctx.n {
            x = zmod::pow(x, ctx.p, ctx.pn);
        }
        Ok(Self::from_u64(ctx, x))
    }

    /// Returns `true` when the element lies in `Z_p` (second coordinate zero).
    pub fn in_base(&self) -> bool {
        self.coord_val(1).is_none()
    }
}

fn sqrt_unit_zp(u: &PadicElt) -> Result<PadicElt> {
    let ctx = u.ctx;
    let m = ctx.pn;
    let r0 = zmod::sqrt_mod_p(u.c[0] % ctx.p, ctx.p).ok_or(Error::NoRoot)?;
    let mut x = r0;
    let mut k = 1u32;
    while k < ctx.n + 1 {
        // x ← x − (x² − u)/(2x)
        let fx = zmod::sub(zmod::mul(x, x, m), u.c[0], m);
        let d = zmod::inv(zmod::mul(2, x, m), m).ok_or(Error::NoRoot)?;
        x = zmod::sub(x, zmod::mul(fx, d, m), m);
        k *= 2;
    }
    Ok(PadicElt { ctx, c: [x, 0], prec: u.prec })
}

impl core::ops::Add for PadicElt {
    type Output = PadicElt;
    #[inline]
    fn add(self, o: PadicElt) -> PadicElt {
        debug_assert_eq!(self.ctx, o.ctx);
        let m = self.ctx.pn;
        PadicElt {
            ctx: self.ctx,
            c: [zmod::add(self.c[0], o.c[0], m), zmod::add(self.c[1], o.c[1], m)],
            prec: self.prec.min(o.prec),
        }
    }
}

impl core::ops::Sub for PadicElt {
    type Output = PadicElt;
    #[inline]
    fn sub(self, o: PadicElt) -> PadicElt {
        debug_assert_eq!(self.ctx, o.ctx);
        let m = self.ctx.pn;
        PadicElt {
            ctx: self.ctx,
            c: [zmod::sub(self.c[0], o.c[0], m), zmod::sub(self.c[1], o.c[1], m)],
            prec: self.prec.min(o.prec),
        }
    }
}

impl core::ops::Neg for PadicElt {
    type Output = PadicElt;
    fn neg(self) -> PadicElt {
        PadicElt::neg(&self)
    }
}

impl core::ops::Mul for PadicElt {
    type Output = PadicElt;
    #[inline]
    fn mul(self, o: PadicElt) -> PadicElt {
        debug_assert_eq!(self.ctx, o.ctx);
        let m = self.ctx.pn;
        let prec = if self.prec >= self.ctx.n && o.prec >= self.ctx.n {
            self.ctx.n
        } else {
            (self.prec + o.digit_val()).min(o.prec + self.digit_val()).min(self.ctx.n)
        };
        let [a, b] = self.c;
        let [c, d] = o.c;
        let c = match self.ctx.ext {
            Ext::None => [zmod::mul(a, c, m), 0],
            Ext::Unramified { d: d0 } => {
                let bd = zmod::mul(b, d, m);
                [
                    zmod::add(zmod::mul(a, c, m), zmod::mul(bd, d0, m), m),
                    zmod::add(zmod::mul(a, d, m), zmod::mul(b, c, m), m),
                ]
            }
            Ext::Ramified { c: c0 } => {
                let bd = zmod::mul(b, d, m);
                let cp = zmod::mul(c0, self.ctx.p, m);
                [
                    zmod::add(zmod::mul(a, c, m), zmod::mul(bd, cp, m), m),
                    zmod::add(zmod::mul(a, d, m), zmod::mul(b, c, m), m),
                ]
            }
        };
        PadicElt { ctx: self.ctx, c, prec }
    }
}

impl core::ops::AddAssign for PadicElt {
    fn add_assign(&mut self, o: PadicElt) {
        *self = *self + o;
    }
}

impl core::ops::SubAssign for PadicElt {
    fn sub_assign(&mut self, o: PadicElt) {
        *self = *self - o;
    }
}

impl fmt::Display for PadicElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.canonical_coords();
        match self.ctx.ext {
            Ext::None => write!(f, "{a}"),
            Ext::Unramified { .. } => write!(f, "{a}+{b}*theta"),
            Ext::Ramified { .. } => write!(f, "{a}+{b}*pi_e"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> PrimeCtx {
        PrimeCtx::new(5, 3).unwrap()
    }

    #[test]
    fn documented_values() {
        let ctx = c5();
        assert_eq!(PadicElt::from_u64(ctx, 2).inv().unwrap().coords()[0], 63);
        assert_eq!(PadicElt::teichmuller(ctx, 2).unwrap().coords()[0], 57);
        assert_eq!(PadicElt::teichmuller(ctx, 4).unwrap().coords()[0], 124);
        assert_eq!(PadicElt::from_i64(ctx, -1).sqrt().unwrap().coords()[0], 57);
        assert_eq!(PadicElt::one(ctx).sqrt().unwrap().coords()[0], 1);
        assert_eq!(PadicElt::from_u64(ctx, 5).inv(), Err(Error::NonUnit));
        assert_eq!(PadicElt::from_u64(ctx, 5).sqrt(), Err(Error::NoRoot));
    }

    #[test]
    fn valuations() {
        let ctx = PrimeCtx::new(3, 20).unwrap();
        assert_eq!(PadicElt::from_u64(ctx, 12).val(), Val::Finite { num: 1, den: 1 });
        assert_eq!(PadicElt::zero(ctx).val(), Val::Infinite);
        let r = ctx.with_ramified(2).unwrap();
        let pi = PadicElt::generator(r).unwrap();
        assert_eq!(pi.val(), Val::Finite { num: 1, den: 2 });
        assert_eq!((pi * pi).coords(), [6, 0]);
    }

    #[test]
    fn ramified_sqrt_and_division() {
        let ctx = PrimeCtx::new(3, 10).unwrap().with_ramified(2).unwrap();
        let x = PadicElt::from_u64(ctx, 6);
        let r = x.sqrt().unwrap();
        assert_eq!(r * r, x);
        let pi = PadicElt::generator(ctx).unwrap();
        let q = PadicElt::from_u64(ctx, 7).mul_uniformizer().div_uniformizer().unwrap();
        assert_eq!(q, PadicElt::from_u64(ctx, 7).with_prec(9));
        assert_eq!(pi.mul_uniformizer(), x);
    }

    #[test]
    fn unramified_sqrt() {
        let ctx = PrimeCtx::new(5, 6).unwrap().with_unramified(2).unwrap();
        let x = PadicElt::from_u64(ctx, 3);
        let r = x.sqrt().unwrap();
        assert_eq!(r * r, x);
        let y = PadicElt::from_coords(ctx, 3, 2);
        let s = y.sqrt().unwrap();
        assert_eq!(s * s, y);
    }
}
