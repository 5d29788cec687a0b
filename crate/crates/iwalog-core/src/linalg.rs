//! Linear systems over the chain ring `O/p^N`.
//!
//! Full pivoting on the minimal valuation brings the matrix to diagonal form
//! `R·A·C = diag(ϖ^{e_i})`, from which the whole solution set is read off.

use alloc::vec;
use alloc::vec::Vec;

use crate::padic::PadicElt;

/// Solution set of `A·x ≡ b`: `particular + span(kernel)`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Vec<PadicElt>,
    pub kernel: Vec<Vec<PadicElt>>,
    /// Largest pivot valuation used, in uniformizer units.
    pub loss: u32,
}

fn mul_unif_pow(x: PadicElt, k: u32) -> PadicElt {
    let mut r = x;
    for _ in 0..k {
        r = r.mul_uniformizer();
    }
    r
}

fn div_unif_pow(x: PadicElt, k: u32) -> Option<PadicElt> {
    x.div_unif_pow(k).ok()
}

/// Solve `A·x ≡ b (mod p^N)`; `None` when inconsistent.
pub fn solve(a: &[Vec<PadicElt>], b: &[PadicElt]) -> Option<Solution> {
    let m = a.len();
    assert_eq!(m, b.len());
    let n = if m == 0 { 0 } else { a[0].len() };
    let ctx = b.first().map(|x| x.ctx()).or_else(|| a.first().and_then(|r| r.first()).map(|x| x.ctx()))?;
    let total = ctx.prec() * ctx.e();
    let mut a: Vec<Vec<PadicElt>> = a.to_vec();
    let mut b: Vec<PadicElt> = b.to_vec();
    let mut cmat: Vec<Vec<PadicElt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { PadicElt::one(ctx) } else { PadicElt::zero(ctx) }).collect())
        .collect();
    let mut pivots: Vec<u32> = Vec::new();
    let mut r = 0;
    while r < m.min(n) {
        let mut best: Option<(usize, usize, i64)> = None;
        for i in r..m {
            for j in r..n {
                // A nonzero entry whose unit part is unknown counts as zero.
                if a[i][j].valuation().is_some_and(|v| (v as u32).div_ceil(ctx.e()) >= a[i][j].prec()) {
                    a[i][j] = PadicElt::zero(ctx).with_prec(a[i][j].prec());
                }
                if let Some(v) = a[i][j].valuation() {
                    if best.is_none_or(|(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                        if v == 0 {
                            break;
                        }
                    }
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((pi, pj, v)) = best else { break };
        let v = v as u32;
        a.swap(r, pi);
        b.swap(r, pi);
        if pj != r {
            for row in a.iter_mut() {
                row.swap(r, pj);
            }
            for row in cmat.iter_mut() {
                row.swap(r, pj);
            }
        }
        let unit = div_unif_pow(a[r][r], v).expect("pivot divisible by its valuation");
        let uinv = unit.inv().expect("unit part invertible");
        for j in r..n {
            a[r][j] = a[r][j] * uinv;
        }
        b[r] = b[r] * uinv;
        for i in (r + 1)..m {
            if a[i][r].is_zero() {
                continue;
            }
            let f = div_unif_pow(a[i][r], v).expect("entries dominate pivot");
            for j in r..n {
                let t = f * a[r][j];
                a[i][j] -= t;
            }
            let t = f * b[r];
            b[i] -= t;
        }
        for j in (r + 1)..n {
            if a[r][j].is_zero() {
                continue;
            }
            let g = div_unif_pow(a[r][j], v).expect("entries dominate pivot");
            a[r][j] = PadicElt::zero(ctx);
            for row in cmat.iter_mut() {
                let t = g * row[r];
                row[j] -= t;
            }
        }
        pivots.push(v);
        r += 1;
    }
    for bi in b.iter().skip(r) {
        if !bi.is_zero() {
            return None;
        }
    }
    let mut y = vec![PadicElt::zero(ctx); n];
    for i in 0..r {
        if b[i].is_zero() {
            continue;
        }
        let vb = b[i].valuation().unwrap() as u32;
        if vb < pivots[i] {
            return None;
        }
        y[i] = div_unif_pow(b[i], pivots[i])?;
    }
    let apply = |yv: &[PadicElt]| -> Vec<PadicElt> {
        (0..n)
            .map(|i| {
                let mut s = PadicElt::zero(ctx);
                for j in 0..n {
                    s += cmat[i][j] * yv[j];
                }
                s
            })
            .collect()
    };
    let particular = apply(&y);
    let mut kernel = Vec::new();
    for i in 0..n {
        let scale = if i < r {
            if pivots[i] == 0 {
                continue;
            }
            total.saturating_sub(pivots[i])
        } else {
            0
        };
        let mut e = vec![PadicElt::zero(ctx); n];
        e[i] = mul_unif_pow(PadicElt::one(ctx), scale);
        kernel.push(apply(&e));
    }
    Some(Solution { particular, kernel, loss: pivots.iter().copied().max().unwrap_or(0) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PrimeCtx;

    #[test]
    fn solves_with_non_unit_pivots() {
        let ctx = PrimeCtx::new(3, 6).unwrap();
        let e = |x: i64| PadicElt::from_i64(ctx, x);
        let a = vec![vec![e(3), e(1)], vec![e(6), e(2)]];
        let sol = solve(&a, &[e(5), e(10)]).unwrap();
        let x = &sol.particular;
        assert_eq!(e(3) * x[0] + x[1], e(5));
        assert!(solve(&a, &[e(5), e(11)]).is_none());
        assert!(!sol.kernel.is_empty());
    }
}
