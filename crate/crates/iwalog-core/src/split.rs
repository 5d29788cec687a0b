//! Signed splitting: recovering bounded `(L_+, L_−)` from `(L_α, L_β)`, the
//! antisymmetric determinant algebra, and the log-divisibility test.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::frac::{Frac, FracMat};
use crate::iwadist::{CharPoint, Growth, IwaSeries};
use crate::logmat::LogMatrix;

#[derive(Clone, Debug)]
pub struct SignedPair {
    pub plus: IwaSeries,
    pub minus: IwaSeries,
    pub level: u32,
}

#[derive(Clone, Debug)]
pub struct AlphaBetaPair {
    pub alpha: IwaSeries,
    pub beta: IwaSeries,
    pub level: u32,
}

/// `[L_α; L_β] = (Q^{-1}M)·[L_+; L_−]`.
pub fn forward(pair: &SignedPair, qinv_m: &LogMatrix) -> Result<AlphaBetaPair> {
    if qinv_m.dim != 2 {
        return Err(Error::DimensionMismatch);
    }
    let e = &qinv_m.entries;
    let a = e[0][0].mul(&pair.plus).add(&e[0][1].mul(&pair.minus));
    let b = e[1][0].mul(&pair.plus).add(&e[1][1].mul(&pair.minus));
    Ok(AlphaBetaPair { alpha: a, beta: b, level: pair.level.min(qinv_m.level) })
}

/// Inverse of [`forward`] for matrices of the `a_p = 0` shape
/// `[[x, y], [−x, y]]`: `L_− = (L_α + L_β)/(2y)` and `L_+ = (L_α − L_β)/(2x)`.
///
/// Each quotient must exist in `Λ` and carry denominator exponent at most
/// `denom_budget`; otherwise the input is not the image of a signed pair.
pub fn signed_split(ab: &AlphaBetaPair, qinv_m: &LogMatrix, n: u32, denom_budget: u32) -> Result<SignedPair> {
    if qinv_m.dim != 2 {
        return Err(Error::DimensionMismatch);
    }
    if qinv_m.level < n {
        return Err(Error::Unsupported("matrix level below the requested level"));
    }
    let e = &qinv_m.entries;
    if !e[0][0].add(&e[1][0]).approx_eq(&IwaSeries::zero(e[0][0].ctx)) || !e[0][1].approx_eq(&e[1][1]) {
        return Err(Error::Unsupported("matrix is not of the a_p = 0 shape"));
    }
    let sum = ab.alpha.add(&ab.beta);
    let diff = ab.alpha.sub(&ab.beta);
    let two_y = e[0][1].add(&e[1][1]);
    let two_x = e[0][0].sub(&e[1][0]);
    let solve = |num: &IwaSeries, den: &IwaSeries, sign: char| -> Result<IwaSeries> {
        let q = num.divide_exact(den).map_err(|err| match err {
            Error::NotDivisible | Error::NonUnit => Error::NoBoundedSolution { sign },
            other => other,
        })?;
        let q = q.normalize();
        if q.denom > denom_budget {
            return Err(Error::NoBoundedSolution { sign });
        }
        Ok(q.with_growth(Growth::ZERO))
    };
    let plus = solve(&diff, &two_x, '+')?;
    let minus = solve(&sum, &two_y, '-')?;
    Ok(SignedPair { plus, minus, level: n })
}

/// `L / det(Q^{-1}M)`.
pub fn antisym_factor(l: &IwaSeries, qinv_m: &LogMatrix) -> Result<IwaSeries> {
    let d = qinv_m.det2()?;
    if l.coeffs.iter().all(|c| c.is_zero()) {
        return Ok(IwaSeries::zero(l.ctx));
    }
    l.divide_exact(&d)
}

/// Does `L` vanish at every `ζ_{p^t}·u^j − 1` with `0 ≤ t ≤ n`, `0 ≤ j ≤ k`?
/// These are exactly the zeros of the level-`n` truncation of `log_{p,k+1}`.
pub fn logdiv_check(l: &IwaSeries, k: u32, n: u32) -> Result<bool> {
    for t in 0..=n {
        for j in 0..=k {
            if !l.eval_at(CharPoint { t, j: j as i64 })?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `T·A·Tᵗ`.
pub fn congruence_transform(t: &FracMat, a: &FracMat) -> FracMat {
    let n = t.len();
    let ctx = t[0][0].ctx();
    let mut out = vec![vec![Frac::zero(ctx); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Frac::zero(ctx);
            for k in 0..n {
                for l in 0..n {
                    s = s.add(t[i][k].mul(a[k][l]).mul(t[j][l]));
                }
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn is_antisymmetric(a: &FracMat) -> bool {
    let n = a.len();
    (0..n).all(|i| a[i][i].is_zero() && (0..n).all(|j| a[i][j].add(a[j][i]).is_zero()))
}

/// `R·[[0, c], [−c, 0]]·Rᵗ` over series; its off-diagonal entry is `det(R)·c`.
pub fn antisym_transport(r: &LogMatrix, c: &IwaSeries) -> Result<Vec<Vec<IwaSeries>>> {
    if r.dim != 2 {
        return Err(Error::DimensionMismatch);
    }
    let z = IwaSeries::zero(c.ctx);
    let a = [[z.clone(), c.clone()], [c.neg(), z.clone()]];
    let e = &r.entries;
    let mut out = vec![vec![z.clone(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let mut s = z.clone();
            for k in 0..2 {
                for l in 0..2 {
                    s = s.add(&e[i][k].mul(&a[k][l]).mul(&e[j][l]));
                }
            }
            out[i][j] = s;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iwadist::{halflog, log_tw, Sign};
    use crate::padic::PrimeCtx;

    #[test]
    fn logdiv_examples() {
        let ctx = PrimeCtx::new(3, 6).unwrap();
        let r = IwaSeries::from_i64s(ctx, &[2, 1, 1]);
        assert!(logdiv_check(&log_tw(ctx, 2, 2).unwrap().mul(&r), 1, 2).unwrap());
        assert!(!logdiv_check(&IwaSeries::one(ctx), 1, 2).unwrap());
        assert!(!logdiv_check(&halflog(ctx, Sign::Plus, 2, 2).unwrap().mul(&r), 1, 2).unwrap());
    }
}
