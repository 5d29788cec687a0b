//! q-expansions: θ-series of Hecke characters of class-number-one imaginary
//! quadratic fields, p-depletion, depleted Eisenstein series with cyclotomic
//! coefficients, and Dirichlet coefficients of Euler products.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::padic::zmod;

pub const CLASS_NUMBER_ONE: [i64; 9] = [-3, -4, -7, -8, -11, -19, -43, -67, -163];

/// Coefficient ring; elements are integer vectors in a fixed `Z`-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Integers,
    /// `O_K = Z[w]`, basis `1, w`.
    Quadratic {
        disc: i64,
    },
    /// `Z[x]/(Φ_m)`, basis `1, x, …, x^{φ(m)−1}`.
    Cyclotomic {
        m: u64,
    },
}

impl Ring {
    pub fn descriptor(&self) -> String {
        match self {
            Ring::Integers => String::from("integers"),
            Ring::Quadratic { disc } => format!("quadratic:{disc}"),
            Ring::Cyclotomic { m } => format!("cyclotomic:{m}"),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Ring::Integers => 1,
            Ring::Quadratic { .. } => 2,
            Ring::Cyclotomic { m } => cyclotomic_poly(*m).len() - 1,
        }
    }

    pub fn mul(&self, a: &[i128], b: &[i128]) -> Result<Vec<i128>> {
        match self {
            Ring::Integers => Ok(vec![a[0].checked_mul(b[0]).ok_or(Error::Overflow)?]),
            Ring::Quadratic { disc } => {
                let q = QuadInt::new(*disc);
                let x = q.mul((a[0], a[1]), (b[0], b[1]))?;
                Ok(vec![x.0, x.1])
            }
            Ring::Cyclotomic { m } => {
                let phi = cyclotomic_poly(*m);
                let mut prod = vec![0i128; a.len() + b.len()];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        prod[i + j] = prod[i + j]
                            .checked_add(x.checked_mul(*y).ok_or(Error::Overflow)?)
                            .ok_or(Error::Overflow)?;
                    }
                }
                Ok(poly_rem(prod, &phi))
            }
        }
    }
}

/// `Φ_m` with integer coefficients, lowest degree first.
pub fn cyclotomic_poly(m: u64) -> Vec<i128> {
    // x^m − 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i128; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn poly_div_exact(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i128; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for j in 0..=db {
            r[i + j] -= c * b[j];
        }
    }
    q
}

/// Remainder modulo a monic polynomial, padded to its degree.
fn poly_rem(mut a: Vec<i128>, m: &[i128]) -> Vec<i128> {
    let dm = m.len() - 1;
    for i in (dm..a.len()).rev() {
        let c = a[i];
        if c != 0 {
            for j in 0..=dm {
                a[i - dm + j] -= c * m[j];
            }
        }
    }
    a.resize(dm, 0);
    a
}

/// `Z[w]` with `w = (1+√D)/2` for `D ≡ 1 (mod 4)` and `w = √(D/4)` otherwise.
#[derive(Clone, Copy, Debug)]
pub struct QuadInt {
    pub disc: i64,
}

pub type QElt = (i128, i128);

impl QuadInt {
    pub fn new(disc: i64) -> Self {
        QuadInt { disc }
    }

    fn odd(&self) -> bool {
        self.disc.rem_euclid(4) == 1
    }

    pub fn norm(&self, (a, b): QElt) -> i128 {
        let d = self.disc as i128;
        if self.odd() {
            a * a + a * b + b * b * (1 - d) / 4
        } else {
            a * a - b * b * (d / 4)
        }
    }

    pub fn mul(&self, (a, b): QElt, (c, e): QElt) -> Result<QElt> {
        let d = self.disc as i128;
        let ac = a.checked_mul(c).ok_or(Error::Overflow)?;
        let be = b.checked_mul(e).ok_or(Error::Overflow)?;
        let cross =
            a.checked_mul(e).and_then(|x| b.checked_mul(c).and_then(|y| x.checked_add(y))).ok_or(Error::Overflow)?;
        if self.odd() {
            // w² = w − (1−D)/4
            let k = (1 - d) / 4;
            Ok((ac - be * k, cross + be))
        } else {
            Ok((ac + be * (d / 4), cross))
        }
    }

    pub fn pow(&self, x: QElt, t: u32) -> Result<QElt> {
        let mut r = (1, 0);
        for _ in 0..t {
            r = self.mul(r, x)?;
        }
        Ok(r)
    }

    pub fn units(&self) -> Vec<QElt> {
        match self.disc {
            -4 => vec![(1, 0), (0, 1), (-1, 0), (0, -1)],
            // w = (1+√−3)/2 is a primitive sixth root of unity.
            -3 => vec![(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)],
            _ => vec![(1, 0), (-1, 0)],
        }
    }

    pub fn conj(&self, (a, b): QElt) -> QElt {
        if self.odd() {
            (a + b, -b)
        } else {
            (a, -b)
        }
    }
}

/// Kronecker symbol `(D/ℓ)` for a prime `ℓ`.
pub fn kronecker(d: i64, l: u64) -> i8 {
    if l == 2 {
        return match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    zmod::legendre(zmod::from_i64(d, l), l) as i8
}

/// A quadratic finite-order character on `(O_K/f)^×` given by its values on
/// residues `(a mod f, b mod f)` of `a + b·w`.
#[derive(Clone, Debug, Default)]
pub struct FinChar {
    pub modulus: u64,
    pub table: BTreeMap<(u64, u64), i8>,
}

impl FinChar {
    fn value(&self, (a, b): QElt) -> Option<i8> {
        if self.modulus <= 1 {
            return Some(1);
        }
        let m = self.modulus as i128;
        self.table.get(&(a.rem_euclid(m) as u64, b.rem_euclid(m) as u64)).copied()
    }
}

#[derive(Clone, Debug)]
pub struct ImagQuadCtx {
    pub disc: i64,
    /// Infinity-type exponent `t = k_g + 1`.
    pub t: u32,
    pub chi: FinChar,
    pub unit_consistent: bool,
}

impl ImagQuadCtx {
    pub fn new(disc: i64, t: u32, chi: FinChar) -> Result<Self> {
        if !CLASS_NUMBER_ONE.contains(&disc) {
            return Err(Error::Unsupported("discriminant outside the class-number-one list"));
        }
        let q = QuadInt::new(disc);
        let mut ok = true;
        for u in q.units() {
            let v = q.pow(u, t)?;
            let c = chi.value(u).unwrap_or(0) as i128;
            ok &= (v.0 * c, v.1 * c) == (1, 0);
        }
        Ok(ImagQuadCtx { disc, t, chi, unit_consistent: ok })
    }

    pub fn trivial(disc: i64, t: u32) -> Result<Self> {
        Self::new(disc, t, FinChar::default())
    }

    pub fn conductor_norm(&self) -> u64 {
        self.chi.modulus.max(1).pow(2)
    }

    pub fn level(&self) -> u64 {
        self.disc.unsigned_abs() * self.conductor_norm()
    }

    /// `ψ(α) = α^t·χ_fin(α)`, or `None` when `(α)` meets the conductor.
    pub fn psi(&self, x: QElt) -> Result<Option<QElt>> {
        let q = QuadInt::new(self.disc);
        let n = q.norm(x) as u64;
        if self.chi.modulus > 1 && gcd(n, self.chi.modulus) != 1 {
            return Ok(None);
        }
        let Some(c) = self.chi.value(x) else { return Ok(None) };
        let v = q.pow(x, self.t)?;
        Ok(Some((v.0 * c as i128, v.1 * c as i128)))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    pub ring: Ring,
    pub nmax: usize,
    /// `coeffs[n−1] = a_n`.
    pub coeffs: Vec<Vec<i128>>,
}

impl QExpansion {
    pub fn a(&self, n: usize) -> &[i128] {
        &self.coeffs[n - 1]
    }
}

/// Generators of the ideals of norm at most `nmax`, one per unit orbit.
pub fn ideal_generators(disc: i64, nmax: usize) -> Vec<QElt> {
    let q = QuadInt::new(disc);
    let units = q.units();
    let bound = 2 * (nmax as u64).isqrt() as i128 + 2;
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let n = q.norm((a, b));
            if n < 1 || n as usize > nmax {
                continue;
            }
            let rep = units.iter().map(|&u| q.mul(u, (a, b)).unwrap()).min().unwrap();
            if rep == (a, b) {
                out.push(rep);
            }
        }
    }
    out
}

pub fn theta_series(ctx: &ImagQuadCtx, nmax: usize) -> Result<QExpansion> {
    if !ctx.unit_consistent {
        return Err(Error::UnitInconsistent);
    }
    let q = QuadInt::new(ctx.disc);
    let mut acc = vec![(0i128, 0i128); nmax];
    for x in ideal_generators(ctx.disc, nmax) {
        if let Some(v) = ctx.psi(x)? {
            let n = q.norm(x) as usize;
            let s = &mut acc[n - 1];
            *s = (s.0.checked_add(v.0).ok_or(Error::Overflow)?, s.1.checked_add(v.1).ok_or(Error::Overflow)?);
        }
    }
    if acc.iter().all(|x| x.1 == 0) {
        Ok(QExpansion { ring: Ring::Integers, nmax, coeffs: acc.into_iter().map(|x| vec![x.0]).collect() })
    } else {
        Ok(QExpansion {
            ring: Ring::Quadratic { disc: ctx.disc },
            nmax,
            coeffs: acc.into_iter().map(|x| vec![x.0, x.1]).collect(),
        })
    }
}

/// `a_n ↦ 0` whenever `p | n`.
pub fn deplete(f: &QExpansion, p: u64) -> QExpansion {
    let mut g = f.clone();
    let z = vec![0; f.ring.rank()];
    for (i, c) in g.coeffs.iter_mut().enumerate() {
        if (i as u64 + 1).is_multiple_of(p) {
            *c = z.clone();
        }
    }
    g
}

/// `E^{[p]}_k = Σ_{p∤n} (Σ_{d|n} d^{k−1}(ζ^d + (−1)^k ζ^{−d})) q^n` with
/// `ζ = x^{zeta_index}` in `Z[x]/(Φ_M)`.
pub fn eisenstein_depleted(k: u32, m: u64, zeta_index: u64, p: u64, nmax: usize) -> Result<QExpansion> {
    if m == 0 || gcd(zeta_index % m, m) != 1 && m > 1 {
        return Err(Error::InvalidContext("ζ index must be coprime to M"));
    }
    let ring = Ring::Cyclotomic { m };
    let phi = cyclotomic_poly(m);
    let r = phi.len() - 1;
    // x^e mod Φ_M for 0 ≤ e < M.
    let powers: Vec<Vec<i128>> = (0..m)
        .map(|e| {
            let mut v = vec![0i128; e as usize + 1];
            v[e as usize] = 1;
            poly_rem(v, &phi)
        })
        .collect();
    let zeta_pow = |d: u64, sign: i64| -> &Vec<i128> {
        let e = (zeta_index as i128 * d as i128 * sign as i128).rem_euclid(m as i128) as usize;
        &powers[e]
    };
    let sgn: i128 = if k.is_multiple_of(2) { 1 } else { -1 };
    let mut coeffs = Vec::with_capacity(nmax);
    for n in 1..=nmax as u64 {
        let mut c = vec![0i128; r];
        if n % p != 0 {
            for d in (1..=n).filter(|d| n % d == 0) {
                let w = (d as i128).checked_pow(k.saturating_sub(1)).ok_or(Error::Overflow)?;
                let w = if k == 0 { 0 } else { w };
                for i in 0..r {
                    let t = zeta_pow(d, 1)[i] + sgn * zeta_pow(d, -1)[i];
                    c[i] = c[i].checked_add(w.checked_mul(t).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                }
            }
        }
        coeffs.push(c);
    }
    Ok(QExpansion { ring, nmax, coeffs })
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Coefficients `t_1..t_{nmax}` of `∏_ℓ P_ℓ(ℓ^{−s})^{-1}`, where each local
/// factor `P_ℓ(Y) = 1 + c_1 Y + c_2 Y² + …` is given by its coefficients.
/// Primes without a listed factor contribute `1`.
pub fn dirichlet_from_euler(local: &BTreeMap<u64, Vec<i128>>, nmax: usize) -> Result<Vec<i128>> {
    let mut series: BTreeMap<u64, Vec<i128>> = BTreeMap::new();
    for (&l, poly) in local {
        if poly.first() != Some(&1) {
            return Err(Error::InvalidContext("local factor must have constant term 1"));
        }
        let mut len = 1;
        let mut q = l;
        while q <= nmax as u64 {
            len += 1;
            q = q.saturating_mul(l);
        }
        // Power-series inverse of P_ℓ.
        let mut inv = vec![0i128; len];
        inv[0] = 1;
        for m in 1..len {
            let mut s = 0i128;
            for j in 1..=m.min(poly.len() - 1) {
                s = s.checked_sub(poly[j].checked_mul(inv[m - j]).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
            }
            inv[m] = s;
        }
        series.insert(l, inv);
    }
    let mut out = Vec::with_capacity(nmax);
    for n in 1..=nmax as u64 {
        let mut t = 1i128;
        for (l, e) in factor(n) {
            let v = series.get(&l).map_or(0, |s| s[e as usize]);
            t = t.checked_mul(v).ok_or(Error::Overflow)?;
        }
        out.push(t);
    }
    Ok(out)
}

/// `ε_ψ(ℓ) = (D/ℓ)·χ_fin(ℓ)`.
pub fn nebentype_value(ctx: &ImagQuadCtx, l: u64) -> Result<i8> {
    if !zmod::is_prime(l)
        || ctx.disc.unsigned_abs().is_multiple_of(l)
        || (ctx.chi.modulus > 1 && ctx.chi.modulus.is_multiple_of(l))
    {
        return Err(Error::BadPrime(l));
    }
    let c = ctx.chi.value((l as i128, 0)).ok_or(Error::BadPrime(l))?;
    Ok(kronecker(ctx.disc, l) * c)
}

/// Local Euler factor `1 − a_ℓ Y + ε(ℓ)ℓ^t Y²` of `θ(ψ)` at a good prime.
pub fn theta_local_factor(ctx: &ImagQuadCtx, theta: &QExpansion, l: u64) -> Result<Vec<i128>> {
    if theta.ring != Ring::Integers {
        return Err(Error::Unsupported("integer coefficients required"));
    }
    let eps = nebentype_value(ctx, l)? as i128;
    let lt = (l as i128).checked_pow(ctx.t).ok_or(Error::Overflow)?;
    Ok(vec![1, -theta.a(l as usize)[0], eps * lt])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_theta() {
        let ctx = ImagQuadCtx::trivial(-4, 4).unwrap();
        let th = theta_series(&ctx, 30).unwrap();
        assert_eq!(th.a(1), &[1]);
        assert_eq!(th.a(2), &[-4]);
        assert_eq!(th.a(3), &[0]);
        assert_eq!(th.a(5), &[-14]);
        assert_eq!(th.a(7), &[0]);
        assert_eq!(th.a(25), &[-429]);
    }

    #[test]
    fn unit_inconsistency() {
        let ctx = ImagQuadCtx::trivial(-4, 3).unwrap();
        assert!(!ctx.unit_consistent);
        assert_eq!(theta_series(&ctx, 10), Err(Error::UnitInconsistent));
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
    }

    #[test]
    fn divisor_function_square() {
        let mut local = BTreeMap::new();
        local.insert(2, vec![1, -2, 1]);
        let t = dirichlet_from_euler(&local, 16).unwrap();
        assert_eq!([t[0], t[1], t[3], t[7], t[15]], [1, 2, 3, 4, 5]);
        assert_eq!(t[2], 0);
    }
}
