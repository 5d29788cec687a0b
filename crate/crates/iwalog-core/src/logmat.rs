//! Change-of-basis matrices, Frobenius matrices and logarithmic matrices.
//!
//! The logarithmic matrix at level `n` is
//! `m^{-1}((1+π)·A^{n+1}·φ^n(P^{-1})···φ(P^{-1}))`, built as a sparse
//! polynomial in `T = 1+π` and pushed to `Λ` either as a power series modulo
//! `X^D` or as an exact class modulo a twisted `ω`-polynomial.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cycser::TPoly;
use crate::error::{Error, Result};
use crate::frac::{self, Frac, FracMat};
use crate::iwadist::{self, Growth, IwaSeries};
use crate::padic::{zmod, PadicElt, PrimeCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `a_p = 0`: `β = −α`, `α² = −ε(p)p^{k+1}`.
    ApZero,
    /// Caller supplies the Wach Frobenius matrix.
    FlSupplied,
}

#[derive(Clone, Copy, Debug)]
pub struct CrystalParams {
    pub ctx: PrimeCtx,
    pub k: u32,
    pub eps: PadicElt,
    pub alpha: PadicElt,
    pub beta: PadicElt,
    pub mode: Mode,
}

impl CrystalParams {
    /// `a_p = 0` data; the coefficient ring is enlarged so that `α` exists.
    pub fn ap_zero(p: u64, prec: u32, k: u32, eps: i64) -> Result<Self> {
        let base = PrimeCtx::new(p, prec)?;
        let minus_eps = zmod::from_i64(-eps, base.modulus());
        if minus_eps.is_multiple_of(p) {
            return Err(Error::NonUnit);
        }
        let ctx = if k.is_multiple_of(2) {
            base.with_ramified(minus_eps)?
        } else if zmod::legendre(minus_eps, p) == 1 {
            base
        } else {
            base.with_unramified(minus_eps)?
        };
        let eps_e = PadicElt::from_i64(ctx, eps);
        let sq = (-eps_e).mul_p_pow(k + 1);
        let alpha = sq.sqrt()?;
        Ok(CrystalParams { ctx, k, eps: eps_e, alpha, beta: -alpha, mode: Mode::ApZero })
    }

    /// Eigenvalue pair supplied directly; requires `αβ = ε p^{k+1}` and `α ≠ β`.
    pub fn fl_supplied(ctx: PrimeCtx, k: u32, eps: PadicElt, alpha: PadicElt, beta: PadicElt) -> Result<Self> {
        if alpha == beta {
            return Err(Error::DegenerateEigenvalues);
        }
        if alpha * beta != eps.mul_p_pow(k + 1) {
            return Err(Error::InvalidContext("αβ must equal ε(p)p^{k+1}"));
        }
        Ok(CrystalParams { ctx, k, eps, alpha, beta, mode: Mode::FlSupplied })
    }

    pub fn a_p(&self) -> PadicElt {
        self.alpha + self.beta
    }

    /// Matrix of `φ` on the basis `{ω, φ(ω)}`:
    /// `[[0, −1/(εp^{k+1})], [1, a_p/(εp^{k+1})]]`.
    pub fn a_matrix(&self) -> Result<FracMat> {
        let ctx = self.ctx;
        let inv = Frac::int(self.eps).inv()?.mul(Frac::inv_p_pow(ctx, self.k + 1));
        Ok(vec![vec![Frac::zero(ctx), inv.neg()], vec![Frac::one(ctx), Frac::int(self.a_p()).mul(inv)]])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QForm {
    F,
    G,
}

/// `Q_f = (1/(α−β))[[α−β, 0], [αβ, −αβ]]`, `Q_g = (1/(α−β))[[α, −β], [−αβ, αβ]]`.
pub fn q_matrix(params: &CrystalParams, which: QForm) -> Result<FracMat> {
    let a = Frac::int(params.alpha);
    let b = Frac::int(params.beta);
    let diff = a.sub(b);
    if diff.is_zero() {
        return Err(Error::DegenerateEigenvalues);
    }
    let s = diff.inv()?;
    let ab = a.mul(b);
    let zero = Frac::zero(params.ctx);
    let m = match which {
        QForm::F => vec![vec![diff, zero], vec![ab, ab.neg()]],
        QForm::G => vec![vec![a, b.neg()], vec![ab.neg(), ab]],
    };
    Ok(m.into_iter().map(|r| r.into_iter().map(|x| x.mul(s)).collect()).collect())
}

/// `n / q^{q_pow}` with `n` a polynomial in `T`.
#[derive(Clone, Debug, PartialEq)]
pub struct QFrac {
    pub num: TPoly,
    pub q_pow: u32,
}

/// The pair `(A′, P′^{-1})` for `a_p = 0`, with `P′^{-1} = [[0, 1], [−ε q^{k+1}, 0]]`.
pub fn wach_matrices_ap0(params: &CrystalParams) -> Result<(FracMat, Vec<Vec<TPoly>>)> {
    if params.mode != Mode::ApZero {
        return Err(Error::WrongMode);
    }
    let ctx = params.ctx;
    let a = params.a_matrix()?;
    let qk = TPoly::q(ctx).pow(params.k + 1)?;
    let pinv = vec![
        vec![TPoly::zero(ctx), TPoly::constant(PadicElt::one(ctx))],
        vec![qk.scale(-params.eps), TPoly::zero(ctx)],
    ];
    Ok((a, pinv))
}

/// `P′ = [[0, −1/(ε q^{k+1})], [1, 0]]`.
pub fn p_prime_ap0(params: &CrystalParams) -> Result<Vec<Vec<QFrac>>> {
    if params.mode != Mode::ApZero {
        return Err(Error::WrongMode);
    }
    let ctx = params.ctx;
    let z = QFrac { num: TPoly::zero(ctx), q_pow: 0 };
    Ok(vec![
        vec![z.clone(), QFrac { num: TPoly::constant(-params.eps.inv()?), q_pow: params.k + 1 }],
        vec![QFrac { num: TPoly::constant(PadicElt::one(ctx)), q_pow: 0 }, z],
    ])
}

fn tpoly_scale_frac(t: &TPoly, c: Frac) -> TPoly {
    let (n, d) = c.to_p_denom();
    t.scale(n).with_denom(d)
}

fn tmat_mul(a: &[Vec<TPoly>], b: &[Vec<TPoly>]) -> Result<Vec<Vec<TPoly>>> {
    let ctx = a[0][0].ctx;
    let mut out = vec![vec![TPoly::zero(ctx); b[0].len()]; a.len()];
    for i in 0..a.len() {
        for j in 0..b[0].len() {
            let mut s = TPoly::zero(ctx);
            for k in 0..b.len() {
                s = s.add(&a[i][k].mul(&b[k][j])?);
            }
            out[i][j] = s;
        }
    }
    Ok(out)
}

fn const_tmat(a: &FracMat) -> Vec<Vec<TPoly>> {
    a.iter()
        .map(|r| r.iter().map(|c| tpoly_scale_frac(&TPoly::constant(PadicElt::one(c.ctx())), *c)).collect())
        .collect()
}

/// `(1+π)·A^{n+1}·φ^n(P^{-1})···φ(P^{-1})` as sparse `T`-polynomials.
pub fn wach_product(a: &FracMat, pinv: &[Vec<TPoly>], n: u32) -> Result<Vec<Vec<TPoly>>> {
    let ctx = a[0][0].ctx();
    let dim = a.len();
    let mut y = const_tmat(&frac::identity(ctx, dim));
    for i in (1..=n).rev() {
        let f: Vec<Vec<TPoly>> =
            pinv.iter().map(|r| r.iter().map(|t| t.frob_pow(i)).collect::<Result<_>>()).collect::<Result<_>>()?;
        y = tmat_mul(&y, &f)?;
    }
    let mut an = frac::identity(ctx, dim);
    for _ in 0..=n {
        an = frac::mat_mul(&an, a);
    }
    let y = tmat_mul(&const_tmat(&an), &y)?;
    let t = TPoly::monomial(PadicElt::one(ctx), 1);
    y.iter().map(|r| r.iter().map(|e| t.mul(e)).collect()).collect()
}

/// How `m^{-1}` is realized.
#[derive(Clone, Debug)]
pub enum Route {
    /// Power series modulo `X^cap`.
    Series { cap: usize },
    /// Exact classes modulo the given integral polynomial.
    Quotient { modulus: IwaSeries },
}

#[derive(Clone, Debug)]
pub struct LogMatrix {
    pub dim: usize,
    pub level: u32,
    pub entries: Vec<Vec<IwaSeries>>,
    pub provenance: String,
}

impl LogMatrix {
    pub fn entry(&self, i: usize, j: usize) -> &IwaSeries {
        &self.entries[i][j]
    }

    pub fn det2(&self) -> Result<IwaSeries> {
        if self.dim != 2 {
            return Err(Error::DimensionMismatch);
        }
        let e = &self.entries;
        Ok(e[0][0].mul(&e[1][1]).sub(&e[0][1].mul(&e[1][0])))
    }

    pub fn map<F: Fn(&IwaSeries) -> Result<IwaSeries>>(&self, f: F) -> Result<LogMatrix> {
        Ok(LogMatrix {
            entries: self.entries.iter().map(|r| r.iter().map(&f).collect::<Result<_>>()).collect::<Result<_>>()?,
            ..self.clone()
        })
    }

    pub fn reduce_mod(&self, w: &IwaSeries) -> Result<LogMatrix> {
        self.map(|e| e.reduce_mod(w))
    }

    pub fn twist(&self, j: i64) -> LogMatrix {
        self.map(|e| Ok(e.twist(j))).unwrap()
    }

    pub fn mul(&self, o: &LogMatrix) -> Result<LogMatrix> {
        if self.dim != o.dim {
            return Err(Error::DimensionMismatch);
        }
        let ctx = self.entries[0][0].ctx;
        let n = self.dim;
        let mut out = vec![vec![IwaSeries::zero(ctx); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = IwaSeries::zero(ctx);
                for k in 0..n {
                    s = s.add(&self.entries[i][k].mul(&o.entries[k][j]));
                }
                out[i][j] = s;
            }
        }
        Ok(LogMatrix { dim: n, level: self.level.min(o.level), entries: out, provenance: self.provenance.clone() })
    }
}

/// Scale a series by an element of `K`.
pub fn scale_frac(s: &IwaSeries, c: Frac) -> IwaSeries {
    let (n, d) = c.to_p_denom();
    s.scale(n).div_p_pow(d)
}

/// `C·M` for a constant matrix `C`.
pub fn const_times(c: &FracMat, m: &LogMatrix) -> Result<LogMatrix> {
    if c.len() != m.dim {
        return Err(Error::DimensionMismatch);
    }
    let ctx = m.entries[0][0].ctx;
    let n = m.dim;
    let mut out = vec![vec![IwaSeries::zero(ctx); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = IwaSeries::zero(ctx);
            for k in 0..n {
                if c[i][k].is_zero() {
                    continue;
                }
                s = s.add(&scale_frac(&m.entries[k][j], c[i][k]));
            }
            out[i][j] = s;
        }
    }
    Ok(LogMatrix { entries: out, ..m.clone() })
}

/// Number of base-`p` digits of `log_u` giving a stable class modulo `w`.
fn stable_digits(tp: &TPoly, w: &IwaSeries) -> Result<(IwaSeries, u32)> {
    let ctx = tp.ctx;
    let p = ctx.p();
    let mut k = ctx.prec() + 2;
    let max_k = (1..64).take_while(|&e| zmod::ipow(p, e + 1).is_some_and(|m| m < (1u64 << 62))).last().unwrap_or(1);
    let mut prev = iwadist::from_t_poly_mod(tp, w, k.min(max_k))?;
    while k + 2 <= max_k {
        let next = iwadist::from_t_poly_mod(tp, w, k + 2)?;
        if next.approx_eq(&prev) {
            return Ok((next, k + 2));
        }
        prev = next;
        k += 2;
    }
    Err(Error::PrecisionLoss)
}

/// Push a `T`-polynomial matrix through `m^{-1}`.
pub fn mellin_inverse_matrix(y: &[Vec<TPoly>], route: &Route, growth: Growth) -> Result<Vec<Vec<IwaSeries>>> {
    y.iter()
        .map(|r| {
            r.iter()
                .map(|t| {
                    if !t.psi_vanishes() {
                        return Err(Error::NotInImage);
                    }
                    let s = match route {
                        Route::Series { cap } => iwadist::from_t_poly_series(t, *cap)?,
                        Route::Quotient { modulus } => stable_digits(t, modulus)?.0,
                    };
                    Ok(s.with_growth(growth))
                })
                .collect()
        })
        .collect()
}

/// Logarithmic matrix at level `n` from a Frobenius pair `(A, P^{-1})`.
pub fn log_matrix_from_wach(a: &FracMat, pinv: &[Vec<TPoly>], k: u32, n: u32, route: &Route) -> Result<LogMatrix> {
    let y = wach_product(a, pinv, n)?;
    if let Route::Series { cap } = route {
        let p = a[0][0].ctx().p();
        let need = p.checked_pow(n + 1).ok_or(Error::Overflow)? as usize;
        if *cap < need {
            return Err(Error::InsufficientDegree { needed: need, have: *cap });
        }
    }
    let entries = mellin_inverse_matrix(&y, route, Growth::new(k + 1, 2))?;
    Ok(LogMatrix { dim: a.len(), level: n, entries, provenance: String::from("wach-product") })
}

/// `M′_g` at level `n` for `a_p = 0`.
pub fn log_matrix_ap0(params: &CrystalParams, n: u32, route: &Route) -> Result<LogMatrix> {
    let (a, pinv) = wach_matrices_ap0(params)?;
    let mut m = log_matrix_from_wach(&a, &pinv, params.k, n, route)?;
    m.provenance = String::from("ap-zero");
    Ok(m)
}

/// Closed form of the `a_p = 0` product: `diag(E_n, F_n)·A′` with
/// `E_n = ∏_{even 2≤i≤n} r_i`, `F_n = ∏_{odd i≤n} r_i`, `r_i = φ^i(q)^{k+1}/p^{k+1}`.
pub fn ap0_closed_form(params: &CrystalParams, n: u32) -> Result<Vec<Vec<TPoly>>> {
    let ctx = params.ctx;
    let a = params.a_matrix()?;
    let qk = TPoly::q(ctx).pow(params.k + 1)?;
    let mut e = TPoly::monomial(PadicElt::one(ctx), 1);
    let mut f = e.clone();
    for i in 1..=n {
        let r = qk.frob_pow(i)?.with_denom(params.k + 1);
        if i % 2 == 0 {
            e = e.mul(&r)?;
        } else {
            f = f.mul(&r)?;
        }
    }
    let ctx0 = TPoly::zero(ctx);
    Ok(vec![vec![ctx0.clone(), tpoly_scale_frac(&e, a[0][1])], vec![f, ctx0]])
}

/// `[[u_f·M_g, 0], [*, ℓ′_f·Tw^{k_f+1}(M_g)]]` with `ℓ′_f = log_{p,k_f+1}/δ_{k_f+1}`.
pub fn semi_ordinary_block(
    mg: &LogMatrix,
    k_f: u32,
    u_f: &IwaSeries,
    lower_left: &[Vec<IwaSeries>],
    n: u32,
) -> Result<LogMatrix> {
    if mg.dim != 2 || lower_left.len() != 2 || lower_left.iter().any(|r| r.len() != 2) {
        return Err(Error::DimensionMismatch);
    }
    let ctx = u_f.ctx;
    let ell = iwadist::log_tw(ctx, k_f + 1, n)?.divide_exact(&iwadist::delta(ctx, k_f + 1))?;
    let tw = mg.twist(k_f as i64 + 1);
    let mut e = vec![vec![IwaSeries::zero(ctx); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            e[i][j] = u_f.mul(&mg.entries[i][j]);
            e[i + 2][j] = lower_left[i][j].clone();
            e[i + 2][j + 2] = ell.mul(&tw.entries[i][j]);
        }
    }
    Ok(LogMatrix { dim: 4, level: mg.level, entries: e, provenance: String::from("semi-ordinary-block") })
}

/// `Q_{f,g} = [[Q_g, 0], [c·Q_g, −c·Q_g]]` with `c = α_fβ_f/(α_f−β_f)`.
pub fn q_fg_block(qg: &FracMat, alpha_f: Frac, beta_f: Frac) -> Result<FracMat> {
    let c = fg_constant(alpha_f, beta_f)?;
    let ctx = alpha_f.ctx();
    let mut m = vec![vec![Frac::zero(ctx); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = qg[i][j];
            m[i + 2][j] = c.mul(qg[i][j]);
            m[i + 2][j + 2] = c.neg().mul(qg[i][j]);
        }
    }
    Ok(m)
}

pub fn fg_constant(alpha_f: Frac, beta_f: Frac) -> Result<Frac> {
    let d = alpha_f.sub(beta_f);
    if d.is_zero() {
        return Err(Error::DegenerateEigenvalues);
    }
    alpha_f.mul(beta_f).div(d)
}

/// Block inverse `[[Q_g^{-1}, 0], [Q_g^{-1}, −c^{-1}Q_g^{-1}]]`.
pub fn q_fg_block_inverse(qg: &FracMat, alpha_f: Frac, beta_f: Frac) -> Result<FracMat> {
    let c = fg_constant(alpha_f, beta_f)?;
    let qi = frac::mat_inv(qg)?;
    let ci = c.inv()?.neg();
    let ctx = alpha_f.ctx();
    let mut m = vec![vec![Frac::zero(ctx); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = qi[i][j];
            m[i + 2][j] = qi[i][j];
            m[i + 2][j + 2] = ci.mul(qi[i][j]);
        }
    }
    Ok(m)
}

/// `Q_{f,g}^{-1}·M_{f,g}`.
pub fn combined(q_inv: &FracMat, m: &LogMatrix) -> Result<LogMatrix> {
    let mut r = const_times(q_inv, m)?;
    r.provenance = String::from("qinv-times-m");
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_matrix_diagonalizes() {
        let ctx = PrimeCtx::new(5, 12).unwrap();
        let eps = PadicElt::one(ctx);
        let alpha = PadicElt::from_u64(ctx, 7);
        let beta = eps.mul_p_pow(3).div_exact(&alpha).unwrap();
        let prm = CrystalParams::fl_supplied(ctx, 2, eps, alpha, beta).unwrap();
        let q = q_matrix(&prm, QForm::G).unwrap();
        let d = frac::mat_mul(&frac::mat_mul(&frac::mat_inv(&q).unwrap(), &prm.a_matrix().unwrap()), &q);
        let ai = Frac::int(alpha).inv().unwrap();
        let bi = Frac::int(beta).inv().unwrap();
        let z = Frac::zero(ctx);
        assert!(frac::mat_approx_eq(&d, &vec![vec![ai, z], vec![z, bi]]));
    }

    #[test]
    fn generic_product_matches_closed_form() {
        for k in 0..2 {
            let prm = CrystalParams::ap_zero(3, 10, k, 1).unwrap();
            let (a, pinv) = wach_matrices_ap0(&prm).unwrap();
            for n in 1..4 {
                let y = wach_product(&a, &pinv, n).unwrap();
                let c = ap0_closed_form(&prm, n).unwrap();
                for i in 0..2 {
                    for j in 0..2 {
                        assert!(y[i][j].add(&c[i][j].neg()).is_zero(), "k={k} n={n} ({i},{j})");
                    }
                }
            }
        }
    }
}
