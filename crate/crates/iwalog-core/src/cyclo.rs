//! The ring `O[ζ]/p^N` with `ζ` a primitive `p^t`-th root of unity.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::padic::{PadicElt, PrimeCtx};

/// Largest cyclotomic degree accepted for evaluation.
pub const MAX_CYCLO_DEGREE: usize = 4096;

/// Element of `O[x]/(Φ_{p^t}(x))`, coefficients on `1, ζ, …, ζ^{φ(p^t)−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CycElt {
    pub t: u32,
    pub coeffs: Vec<PadicElt>,
}

impl CycElt {
    pub fn degree(ctx: PrimeCtx, t: u32) -> Result<usize> {
        if t == 0 {
            return Ok(1);
        }
        let p = ctx.p() as usize;
        let mut d = p - 1;
        for _ in 1..t {
            d = d.checked_mul(p).ok_or(Error::ExtensionTooLarge { degree: usize::MAX })?;
        }
        if d > MAX_CYCLO_DEGREE {
            return Err(Error::ExtensionTooLarge { degree: d });
        }
        Ok(d)
    }

    pub fn constant(t: u32, c: PadicElt) -> Result<Self> {
        let d = Self::degree(c.ctx(), t)?;
        let mut coeffs = vec![PadicElt::zero(c.ctx()); d];
        coeffs[0] = c;
        Ok(CycElt { t, coeffs })
    }

    /// `ζ^k`.
    pub fn zeta_pow(ctx: PrimeCtx, t: u32, k: u64) -> Result<Self> {
        let d = Self::degree(ctx, t)?;
        if t == 0 {
            return Self::constant(0, PadicElt::one(ctx));
        }
        let order = ctx.p().pow(t);
        let k = (k % order) as usize;
        let mut v = vec![PadicElt::zero(ctx); order as usize];
        v[k] = PadicElt::one(ctx);
        Ok(CycElt { t, coeffs: reduce(ctx, t, v, d) })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        CycElt { t: self.t, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| *a + *b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CycElt { t: self.t, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| *a - *b).collect() }
    }

    pub fn scale(&self, c: PadicElt) -> Self {
        CycElt { t: self.t, coeffs: self.coeffs.iter().map(|a| *a * c).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.coeffs.len();
        let ctx = self.coeffs[0].ctx();
        let mut v = vec![PadicElt::zero(ctx); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() && a.prec() == ctx.prec() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += *a * *b;
            }
        }
        CycElt { t: self.t, coeffs: reduce(ctx, self.t, v, d) }
    }

    /// Smallest coordinate valuation (uniformizer units of `O`), `None` if zero.
    pub fn min_coord_valuation(&self) -> Option<i64> {
        self.coeffs.iter().filter_map(|c| c.valuation()).min()
    }
}

/// Reduce a polynomial in `x` modulo `Φ_{p^t}(x) = Σ_{i<p} x^{i p^{t−1}}`.
fn reduce(ctx: PrimeCtx, t: u32, mut v: Vec<PadicElt>, d: usize) -> Vec<PadicElt> {
    if t == 0 {
        let mut s = PadicElt::zero(ctx);
        for c in v {
            s += c;
        }
        return vec![s];
    }
    let p = ctx.p() as usize;
    let step = d / (p - 1);
    for k in (d..v.len()).rev() {
        let c = v[k];
        if c.is_zero() && c.prec() == ctx.prec() {
            continue;
        }
        v[k] = PadicElt::zero(ctx);
        // x^k = x^{k−d} · x^d and x^d = −Σ_{i<p−1} x^{i·step}
        for i in 0..(p - 1) {
            let idx = k - d + i * step;
            v[idx] -= c;
        }
    }
    v.truncate(d);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_has_order() {
        let ctx = PrimeCtx::new(3, 6).unwrap();
        let z = CycElt::zeta_pow(ctx, 2, 1).unwrap();
        let mut acc = CycElt::constant(2, PadicElt::one(ctx)).unwrap();
        for _ in 0..9 {
            acc = acc.mul(&z);
        }
        assert_eq!(acc, CycElt::constant(2, PadicElt::one(ctx)).unwrap());
        let mut s = CycElt::constant(2, PadicElt::zero(ctx)).unwrap();
        for k in 0..9u64 {
            s = s.add(&CycElt::zeta_pow(ctx, 2, 3 * k % 9).unwrap());
        }
        assert!(s.is_zero());
    }
}
