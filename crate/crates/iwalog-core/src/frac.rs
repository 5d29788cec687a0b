//! Elements of the fraction field `K = O[1/p]` as `num / ϖ^den`, and small
//! dense matrices over `K`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::padic::{Ext, PadicElt, PrimeCtx};

/// `num / ϖ^den` with `ϖ` the uniformizer of `O`.
#[derive(Clone, Copy, Debug)]
pub struct Frac {
    pub num: PadicElt,
    pub den: u32,
}

fn unif_pow(x: PadicElt, k: u32) -> PadicElt {
    let mut r = x;
    for _ in 0..k {
        r = r.mul_uniformizer();
    }
    r
}

/// `c^{-m}` when `π_e² = c·p`, so that `1/π_e^{2m} = c^{-m}/p^m`.
fn ram_cinv_pow(ctx: PrimeCtx, m: u32) -> PadicElt {
    match ctx.ext() {
        Ext::Ramified { c } => PadicElt::from_u64(ctx, c).inv().expect("c is a unit").pow(m as u64),
        _ => PadicElt::one(ctx),
    }
}

impl Frac {
    pub fn new(num: PadicElt, den: u32) -> Self {
        Frac { num, den }
    }

    pub fn int(x: PadicElt) -> Self {
        Frac { num: x, den: 0 }
    }

    pub fn from_i64(ctx: PrimeCtx, x: i64) -> Self {
        Self::int(PadicElt::from_i64(ctx, x))
    }

    pub fn zero(ctx: PrimeCtx) -> Self {
        Self::int(PadicElt::zero(ctx))
    }

    pub fn one(ctx: PrimeCtx) -> Self {
        Self::int(PadicElt::one(ctx))
    }

    /// `1 / p^k`.
    pub fn inv_p_pow(ctx: PrimeCtx, k: u32) -> Self {
        match ctx.ext() {
            Ext::Ramified { c } => Frac { num: PadicElt::from_u64(ctx, c).pow(k as u64), den: 2 * k },
            _ => Frac { num: PadicElt::one(ctx), den: k },
        }
    }

    pub fn ctx(&self) -> PrimeCtx {
        self.num.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Valuation in uniformizer units.
    pub fn valuation(&self) -> Option<i64> {
        self.num.valuation().map(|v| v - self.den as i64)
    }

    /// Cancel common powers of the uniformizer.
    pub fn reduce(self) -> Self {
        match self.num.valuation() {
            None => Frac { num: self.num, den: 0 },
            Some(v) => {
                let k = (v as u32).min(self.den);
                match PadicElt::div_unif_pow(&self.num, k) {
                    Ok(n) => Frac { num: n, den: self.den - k },
                    Err(_) => self,
                }
            }
        }
    }

    fn align(self, o: Self) -> (PadicElt, PadicElt, u32) {
        let d = self.den.max(o.den);
        (unif_pow(self.num, d - self.den), unif_pow(o.num, d - o.den), d)
    }

    pub fn add(self, o: Self) -> Self {
        let (a, b, d) = self.align(o);
        Frac { num: a + b, den: d }.reduce()
    }

    pub fn sub(self, o: Self) -> Self {
        let (a, b, d) = self.align(o);
        Frac { num: a - b, den: d }.reduce()
    }

    pub fn neg(self) -> Self {
        Frac { num: -self.num, den: self.den }
    }

    pub fn mul(self, o: Self) -> Self {
        Frac { num: self.num * o.num, den: self.den + o.den }.reduce()
    }

    pub fn inv(self) -> Result<Self> {
        let v = self.num.valuation().ok_or(Error::NonUnit)? as u32;
        let unit = PadicElt::div_unif_pow(&self.num, v)?;
        let ui = unit.inv()?;
        if self.den >= v {
            Ok(Frac { num: unif_pow(ui, self.den - v), den: 0 })
        } else {
            Ok(Frac { num: ui, den: v - self.den })
        }
    }

    pub fn div(self, o: Self) -> Result<Self> {
        Ok(self.mul(o.inv()?))
    }

    /// Rewrite as `n / p^k` with `n ∈ O`.
    pub fn to_p_denom(self) -> (PadicElt, u32) {
        let f = self.reduce();
        match f.ctx().ext() {
            Ext::Ramified { .. } if f.den % 2 == 1 => {
                // 1/π_e = π_e / (c·p)
                let k = f.den.div_ceil(2);
                let pe = PadicElt::generator(f.ctx()).unwrap();
                (f.num * pe * ram_cinv_pow(f.ctx(), k), k)
            }
            Ext::Ramified { .. } => (f.num * ram_cinv_pow(f.ctx(), f.den / 2), f.den / 2),
            _ => (f.num, f.den),
        }
    }

    /// Equality at the common known precision.
    pub fn approx_eq(&self, o: &Self) -> bool {
        self.sub(*o).is_zero()
    }

    pub fn in_integers(&self) -> bool {
        let r = self.reduce();
        r.den == 0 || r.num.is_zero()
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/unif^{}", self.num, self.den)
        }
    }
}

/// Dense square matrix over `K`.
pub type FracMat = Vec<Vec<Frac>>;

pub fn identity(ctx: PrimeCtx, n: usize) -> FracMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { Frac::one(ctx) } else { Frac::zero(ctx) }).collect()).collect()
}

pub fn mat_mul(a: &FracMat, b: &FracMat) -> FracMat {
    let ctx = a[0][0].ctx();
    let (n, m, l) = (a.len(), b.len(), b[0].len());
    let mut out = vec![vec![Frac::zero(ctx); l]; n];
    for i in 0..n {
        for j in 0..l {
            let mut s = Frac::zero(ctx);
            for k in 0..m {
                s = s.add(a[i][k].mul(b[k][j]));
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn mat_approx_eq(a: &FracMat, b: &FracMat) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(r, s)| r.len() == s.len() && r.iter().zip(s).all(|(x, y)| x.approx_eq(y)))
}

pub fn det2(a: &FracMat) -> Frac {
    a[0][0].mul(a[1][1]).sub(a[0][1].mul(a[1][0]))
}

/// Inverse by Gauss–Jordan elimination with pivots of minimal valuation.
pub fn mat_inv(a: &FracMat) -> Result<FracMat> {
    let n = a.len();
    let ctx = a[0][0].ctx();
    let mut m: Vec<Vec<Frac>> = a.to_vec();
    let mut inv = identity(ctx, n);
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].valuation().unwrap_or(i64::MAX))
            .ok_or(Error::NonUnit)?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let pinv = m[col][col].inv()?;
        for j in 0..n {
            m[col][j] = m[col][j].mul(pinv);
            inv[col][j] = inv[col][j].mul(pinv);
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col];
            for j in 0..n {
                let t = f.mul(m[col][j]);
                m[r][j] = m[r][j].sub(t);
                let t = f.mul(inv[col][j]);
                inv[r][j] = inv[r][j].sub(t);
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramified_denominators() {
        let ctx = PrimeCtx::new(3, 10).unwrap().with_ramified(2).unwrap();
        let pe = Frac::int(PadicElt::generator(ctx).unwrap());
        let inv = pe.inv().unwrap();
        assert_eq!(inv.den, 1);
        let (n, k) = inv.to_p_denom();
        // n / 3^k · π_e = 1
        let back = Frac::int(n * PadicElt::generator(ctx).unwrap()).mul(Frac::inv_p_pow(ctx, k));
        assert!(back.approx_eq(&Frac::one(ctx)));
        let third = Frac::from_i64(ctx, 1).div(Frac::from_i64(ctx, 3)).unwrap();
        assert!(third.approx_eq(&Frac::inv_p_pow(ctx, 1)));
        assert!(third.mul(Frac::from_i64(ctx, 9)).approx_eq(&Frac::from_i64(ctx, 3)));
    }

    #[test]
    fn inverse_of_small_matrix() {
        let ctx = PrimeCtx::new(5, 8).unwrap();
        let f = |x: i64| Frac::from_i64(ctx, x);
        let a = vec![vec![f(5), f(1)], vec![f(2), f(25)]];
        let ai = mat_inv(&a).unwrap();
        assert!(mat_approx_eq(&mat_mul(&a, &ai), &identity(ctx, 2)));
    }
}
