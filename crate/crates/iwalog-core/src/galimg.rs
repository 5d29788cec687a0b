//! Finite matrix groups over `F_p` and `F_{p²}`: closures, Goursat-type
//! product checks, dihedral induced representations and the search for an
//! element with minimal polynomial `(X−1)²(X+1)²`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::padic::zmod;

/// `F_p`, or `F_p(√d)` for a non-residue `d`. Elements are encoded as `a + b·p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    pub p: u64,
    pub d: Option<u64>,
}

pub type Fq = u32;

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if !zmod::is_prime(p) || p > 46_000 {
            return Err(Error::BadPrime(p));
        }
        Ok(Field { p, d: None })
    }

    /// `F_{p²}` realized with the smallest quadratic non-residue.
    pub fn quadratic(p: u64) -> Result<Self> {
        let f = Self::prime(p)?;
        if p == 2 {
            return Err(Error::BadPrime(p));
        }
        let d = (2..p).find(|&x| zmod::legendre(x, p) == -1).ok_or(Error::BadPrime(p))?;
        Ok(Field { d: Some(d), ..f })
    }

    pub fn order(&self) -> u64 {
        if self.d.is_some() {
            self.p * self.p
        } else {
            self.p
        }
    }

    pub fn elt(&self, a: i64, b: i64) -> Fq {
        let p = self.p;
        let a = zmod::from_i64(a, p);
        let b = if self.d.is_some() { zmod::from_i64(b, p) } else { 0 };
        (a + b * p) as Fq
    }

    pub fn from_i64(&self, a: i64) -> Fq {
        self.elt(a, 0)
    }

    fn parts(&self, x: Fq) -> (u64, u64) {
        let x = x as u64;
        (x % self.p, x / self.p)
    }

    fn pack(&self, a: u64, b: u64) -> Fq {
        (a + b * self.p) as Fq
    }

    pub fn add(&self, x: Fq, y: Fq) -> Fq {
        let ((a, b), (c, d)) = (self.parts(x), self.parts(y));
        self.pack((a + c) % self.p, (b + d) % self.p)
    }

    pub fn neg(&self, x: Fq) -> Fq {
        let (a, b) = self.parts(x);
        self.pack((self.p - a) % self.p, (self.p - b) % self.p)
    }

    pub fn sub(&self, x: Fq, y: Fq) -> Fq {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Fq, y: Fq) -> Fq {
        let p = self.p;
        let ((a, b), (c, d)) = (self.parts(x), self.parts(y));
        let dd = self.d.unwrap_or(0);
        let re = (a * c + b * d % p * dd) % p;
        let im = (a * d + b * c) % p;
        self.pack(re, im)
    }

    pub fn inv(&self, x: Fq) -> Option<Fq> {
        let p = self.p;
        let (a, b) = self.parts(x);
        let dd = self.d.unwrap_or(0);
        // (a + b√d)^{-1} = (a − b√d)/(a² − d b²)
        let n = (a * a % p + p - b * b % p * dd % p) % p;
        let ni = zmod::inv(n, p)?;
        Some(self.pack(a * ni % p, (p - b) % p * ni % p))
    }

    pub fn is_zero(&self, x: Fq) -> bool {
        x == 0
    }
}

/// Square matrix over a [`Field`], row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat {
    pub n: usize,
    pub e: Vec<Fq>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Mat { n, e }
    }

    pub fn zero(n: usize) -> Self {
        Mat { n, e: vec![0; n * n] }
    }

    pub fn from_rows(f: &Field, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        Ok(Mat { n, e: rows.iter().flat_map(|r| r.iter().map(|&x| f.from_i64(x))).collect() })
    }

    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.e[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Fq>> {
        self.e.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, o: &Mat, f: &Field) -> Mat {
        let n = self.n;
        let mut e = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.e[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    e[i * n + j] = f.add(e[i * n + j], f.mul(a, o.e[k * n + j]));
                }
            }
        }
        Mat { n, e }
    }

    pub fn add(&self, o: &Mat, f: &Field) -> Mat {
        Mat { n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| f.add(*a, *b)).collect() }
    }

    pub fn scale(&self, c: Fq, f: &Field) -> Mat {
        Mat { n: self.n, e: self.e.iter().map(|a| f.mul(*a, c)).collect() }
    }

    /// `self − c·I`.
    pub fn minus_scalar(&self, c: Fq, f: &Field) -> Mat {
        let mut m = self.clone();
        for i in 0..self.n {
            m.e[i * self.n + i] = f.sub(m.e[i * self.n + i], c);
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    pub fn rank(&self, f: &Field) -> usize {
        rank_of(self.rows(), f)
    }

    pub fn det(&self, f: &Field) -> Fq {
        let n = self.n;
        let mut m = self.rows();
        let mut det = 1;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| m[r][c] != 0) else { return 0 };
            if piv != c {
                m.swap(piv, c);
                det = f.neg(det);
            }
            det = f.mul(det, m[c][c]);
            let inv = f.inv(m[c][c]).unwrap();
            for r in (c + 1)..n {
                let fac = f.mul(m[r][c], inv);
                for j in c..n {
                    let t = f.mul(fac, m[c][j]);
                    m[r][j] = f.sub(m[r][j], t);
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &Field) -> Option<Mat> {
        let n = self.n;
        let mut m = self.rows();
        let mut inv = Mat::identity(n).rows();
        for c in 0..n {
            let piv = (c..n).find(|&r| m[r][c] != 0)?;
            m.swap(piv, c);
            inv.swap(piv, c);
            let pi = f.inv(m[c][c])?;
            for j in 0..n {
                m[c][j] = f.mul(m[c][j], pi);
                inv[c][j] = f.mul(inv[c][j], pi);
            }
            for r in 0..n {
                if r == c || m[r][c] == 0 {
                    continue;
                }
                let fac = m[r][c];
                for j in 0..n {
                    let t = f.mul(fac, m[c][j]);
                    m[r][j] = f.sub(m[r][j], t);
                    let t = f.mul(fac, inv[c][j]);
                    inv[r][j] = f.sub(inv[r][j], t);
                }
            }
        }
        Some(Mat { n, e: inv.into_iter().flatten().collect() })
    }
}

fn rank_of(mut m: Vec<Vec<Fq>>, f: &Field) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(piv, r);
        let inv = f.inv(m[r][c]).unwrap();
        for i in (r + 1)..rows {
            let fac = f.mul(m[i][c], inv);
            if fac == 0 {
                continue;
            }
            for j in c..cols {
                let t = f.mul(fac, m[r][j]);
                m[i][j] = f.sub(m[i][j], t);
            }
        }
        r += 1;
    }
    r
}

/// Kronecker product with basis order `e₁⊗f₁, e₁⊗f₂, e₂⊗f₁, e₂⊗f₂`.
pub fn kron(a: &Mat, b: &Mat, f: &Field) -> Mat {
    let (n, m) = (a.n, b.n);
    let mut out = Mat::zero(n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out.e[(i * m + k) * (n * m) + (j * m + l)] = f.mul(a.get(i, j), b.get(k, l));
                }
            }
        }
    }
    out
}

/// Block-diagonal `diag(a, b)`.
pub fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let n = a.n + b.n;
    let mut out = Mat::zero(n);
    for i in 0..a.n {
        for j in 0..a.n {
            out.e[i * n + j] = a.get(i, j);
        }
    }
    for i in 0..b.n {
        for j in 0..b.n {
            out.e[(a.n + i) * n + a.n + j] = b.get(i, j);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct MatGroupGen {
    pub field: Field,
    pub dim: usize,
    pub gens: Vec<Mat>,
}

impl MatGroupGen {
    pub fn new(field: Field, dim: usize, gens: Vec<Mat>) -> Result<Self> {
        for g in &gens {
            if g.n != dim {
                return Err(Error::DimensionMismatch);
            }
            if g.det(&field) == 0 {
                return Err(Error::NonUnit);
            }
        }
        Ok(MatGroupGen { field, dim, gens })
    }

    /// `[[1,1],[0,1]]` and `[[0,−1],[1,0]]`, which generate `SL₂(F_p)`.
    pub fn sl2_standard(field: Field) -> Self {
        let t = Mat::from_rows(&field, &[vec![1, 1], vec![0, 1]]).unwrap();
        let s = Mat::from_rows(&field, &[vec![0, -1], vec![1, 0]]).unwrap();
        MatGroupGen { field, dim: 2, gens: vec![t, s] }
    }
}

/// An enumerated finite group.
#[derive(Clone, Debug)]
pub struct Group {
    pub field: Field,
    pub dim: usize,
    pub elements: BTreeSet<Mat>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        let f = &self.field;
        let els: Vec<&Mat> = self.elements.iter().collect();
        els.iter().all(|a| els.iter().all(|b| a.mul(b, f) == b.mul(a, f)))
    }
}

/// Breadth-first closure under right multiplication by the generators.
pub fn closure(g: &MatGroupGen, budget: usize) -> Result<Group> {
    let f = g.field;
    let mut seen = BTreeSet::new();
    let id = Mat::identity(g.dim);
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in &g.gens {
            let y = x.mul(s, &f);
            if !seen.contains(&y) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(Group { field: f, dim: g.dim, elements: seen })
}

/// `|SL₂(F_q)| = q(q² − 1)`.
pub fn sl2_order(q: u64) -> u64 {
    q * (q * q - 1)
}

fn commutator(a: &Mat, b: &Mat, f: &Field) -> Mat {
    let ai = a.inverse(f).unwrap();
    let bi = b.inverse(f).unwrap();
    a.mul(b, f).mul(&ai, f).mul(&bi, f)
}

/// Derived subgroup: normal closure of the generator commutators.
pub fn derived_subgroup(g: &MatGroupGen, budget: usize) -> Result<MatGroupGen> {
    let f = g.field;
    let mut gens: Vec<Mat> = Vec::new();
    for a in &g.gens {
        for b in &g.gens {
            let c = commutator(a, b, &f);
            if !c.is_identity() && !gens.contains(&c) {
                gens.push(c);
            }
        }
    }
    loop {
        let h = MatGroupGen { field: f, dim: g.dim, gens: gens.clone() };
        let cl = closure(&h, budget)?;
        let mut added = false;
        for s in &gens.clone() {
            for x in &g.gens {
                let xi = x.inverse(&f).unwrap();
                let c = x.mul(s, &f).mul(&xi, &f);
                if !cl.elements.contains(&c) {
                    gens.push(c);
                    added = true;
                }
            }
        }
        if !added {
            return Ok(h);
        }
    }
}

pub fn is_solvable(g: &MatGroupGen, budget: usize) -> Result<bool> {
    let mut cur = g.clone();
    let mut order = closure(&cur, budget)?.order();
    loop {
        if order == 1 {
            return Ok(true);
        }
        let d = derived_subgroup(&cur, budget)?;
        let o = closure(&d, budget)?.order();
        if o == order {
            return Ok(false);
        }
        cur = d;
        order = o;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoursatVerdict {
    pub order_h: usize,
    pub order_1: usize,
    pub order_2: usize,
    pub full_product: bool,
    pub pr2_solvable: bool,
    pub pr1_is_sl2: bool,
}

/// Is `H ≤ G₁ × G₂`, generated by the given pairs, the full product of its projections?
pub fn goursat_product_check(field: Field, pairs: &[(Mat, Mat)], budget: usize) -> Result<GoursatVerdict> {
    let (n1, n2) = match pairs.first() {
        Some((a, b)) => (a.n, b.n),
        None => return Err(Error::InvalidContext("no generators")),
    };
    if pairs.iter().any(|(a, b)| a.n != n1 || b.n != n2) {
        return Err(Error::DimensionMismatch);
    }
    let h = MatGroupGen::new(field, n1 + n2, pairs.iter().map(|(a, b)| block_diag(a, b)).collect())?;
    let g1 = MatGroupGen::new(field, n1, pairs.iter().map(|(a, _)| a.clone()).collect())?;
    let g2 = MatGroupGen::new(field, n2, pairs.iter().map(|(_, b)| b.clone()).collect())?;
    let oh = closure(&h, budget)?.order();
    let c1 = closure(&g1, budget)?;
    let o2 = closure(&g2, budget)?.order();
    let pr1_is_sl2 =
        n1 == 2 && c1.order() as u64 == sl2_order(field.order()) && c1.elements.iter().all(|m| m.det(&field) == 1);
    Ok(GoursatVerdict {
        order_h: oh,
        order_1: c1.order(),
        order_2: o2,
        full_product: oh == c1.order() * o2,
        pr2_solvable: is_solvable(&g2, budget)?,
        pr1_is_sl2,
    })
}

/// Character data for an induced representation from an index-two subgroup.
#[derive(Clone, Debug)]
pub struct DihedralData {
    pub field: Field,
    /// `(ψ̂^{-1}(σ), ψ̂^{-1}(cσc^{-1}))` for classes inside the subgroup.
    pub inner: Vec<(Fq, Fq)>,
    /// `(x, x′)` for classes outside it.
    pub outer: Vec<(Fq, Fq)>,
    /// Words in `inner` indices that must evaluate to `1` in both coordinates.
    pub relations: Vec<Vec<usize>>,
}

pub fn dihedral_rep(d: &DihedralData) -> Result<MatGroupGen> {
    let f = d.field;
    if d.inner.iter().chain(&d.outer).any(|&(a, b)| a == 0 || b == 0) {
        return Err(Error::InconsistentCharacter);
    }
    for rel in &d.relations {
        let (mut x, mut y) = (1, 1);
        for &i in rel {
            let (a, b) = *d.inner.get(i).ok_or(Error::InconsistentCharacter)?;
            x = f.mul(x, a);
            y = f.mul(y, b);
        }
        if x != 1 || y != 1 {
            return Err(Error::InconsistentCharacter);
        }
    }
    let mut gens = Vec::new();
    for &(a, b) in &d.inner {
        gens.push(Mat { n: 2, e: vec![a, 0, 0, b] });
    }
    for &(x, xp) in &d.outer {
        gens.push(Mat { n: 2, e: vec![0, x, xp, 0] });
    }
    MatGroupGen::new(f, 2, gens)
}

/// Does the group have an abelian subgroup of index at most two, namely its
/// diagonal part when it is generated by monomial matrices?
pub fn has_abelian_diagonal_index_le2(g: &Group) -> bool {
    let diag: Vec<&Mat> = g.elements.iter().filter(|m| m.get(0, 1) == 0 && m.get(1, 0) == 0).collect();
    let f = &g.field;
    let abelian = diag.iter().all(|a| diag.iter().all(|b| a.mul(b, f) == b.mul(a, f)));
    abelian && 2 * diag.len() >= g.order()
}

/// Monic minimal polynomial, lowest coefficient first, via the Krylov sequence
/// of powers of `t` in `M_n(F)`.
pub fn min_poly(t: &Mat, f: &Field) -> Vec<Fq> {
    let n = t.n;
    let mut powers = vec![Mat::identity(n)];
    loop {
        let k = powers.len();
        // Solve Σ c_i t^i = −t^k over the earlier powers if possible.
        let cur = powers[k - 1].mul(t, f);
        let mut rows: Vec<Vec<Fq>> = (0..n * n)
            .map(|idx| {
                let mut r: Vec<Fq> = powers.iter().map(|m| m.e[idx]).collect();
                r.push(f.neg(cur.e[idx]));
                r
            })
            .collect();
        if let Some(c) = solve_square_free(&mut rows, k, f) {
            let mut out = c;
            out.push(1);
            return out;
        }
        powers.push(cur);
    }
}

/// Solve the augmented system (last column is the right-hand side) when the
/// first `k` columns are independent; `None` if inconsistent.
fn solve_square_free(rows: &mut [Vec<Fq>], k: usize, f: &Field) -> Option<Vec<Fq>> {
    let m = rows.len();
    let mut r = 0;
    let mut pivcol = Vec::new();
    for c in 0..k {
        let piv = (r..m).find(|&i| rows[i][c] != 0)?;
        rows.swap(piv, r);
        let inv = f.inv(rows[r][c]).unwrap();
        for j in 0..=k {
            rows[r][j] = f.mul(rows[r][j], inv);
        }
        for i in 0..m {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let fac = rows[i][c];
            for j in 0..=k {
                let t = f.mul(fac, rows[r][j]);
                rows[i][j] = f.sub(rows[i][j], t);
            }
        }
        pivcol.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[k] != 0) {
        return None;
    }
    let mut x = vec![0; k];
    for (i, &c) in pivcol.iter().enumerate() {
        x[c] = rows[i][k];
    }
    Some(x)
}

/// `(X−1)²(X+1)² = X⁴ − 2X² + 1`.
pub fn target_min_poly(f: &Field) -> Vec<Fq> {
    vec![1, 0, f.from_i64(-2), 0, 1]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauCertificate {
    pub element: Mat,
    pub min_poly: Vec<Fq>,
    pub rank_t_minus_1: usize,
    /// `4 − rank(t − 1)`: rank of the coinvariant quotient `V/(t−1)V`.
    pub quotient_rank: usize,
    /// Ranks of `(t−1)^i`, `i = 1..=n`; they determine the Jordan type at `1`.
    pub ranks_minus: Vec<usize>,
    /// Ranks of `(t+1)^i`, `i = 1..=n`.
    pub ranks_plus: Vec<usize>,
}

pub fn certify(t: &Mat, f: &Field) -> TauCertificate {
    let n = t.n;
    let pows = |m: Mat| -> Vec<usize> {
        let mut acc = m.clone();
        let mut out = vec![acc.rank(f)];
        for _ in 1..n {
            acc = acc.mul(&m, f);
            out.push(acc.rank(f));
        }
        out
    };
    let tm = t.minus_scalar(1, f);
    let tp = t.minus_scalar(f.from_i64(-1), f);
    let r = tm.rank(f);
    TauCertificate {
        element: t.clone(),
        min_poly: min_poly(t, f),
        rank_t_minus_1: r,
        quotient_rank: n - r,
        ranks_minus: pows(tm),
        ranks_plus: pows(tp),
    }
}

/// Search the closure for an element with minimal polynomial `(X−1)²(X+1)²`.
pub fn find_tau(g: &MatGroupGen, budget: usize) -> Result<Option<TauCertificate>> {
    if g.dim != 4 {
        return Err(Error::DimensionMismatch);
    }
    let f = g.field;
    let target = target_min_poly(&f);
    let grp = closure(g, budget)?;
    for t in &grp.elements {
        // Cheap filter: (t² − 1)² = 0.
        let s = t.mul(t, &f).minus_scalar(1, &f);
        if !s.mul(&s, &f).is_zero() {
            continue;
        }
        if min_poly(t, &f) == target {
            return Ok(Some(certify(t, &f)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic() {
        let f = Field::quadratic(7).unwrap();
        let x = f.elt(3, 5);
        assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
        let r = f.elt(0, 1);
        assert_eq!(f.mul(r, r), f.from_i64(f.d.unwrap() as i64));
    }

    #[test]
    fn sl2_orders() {
        for p in [3u64, 5, 7] {
            let f = Field::prime(p).unwrap();
            assert_eq!(closure(&MatGroupGen::sl2_standard(f), 10_000).unwrap().order() as u64, sl2_order(p));
        }
    }

    #[test]
    fn kron_certificate() {
        let f = Field::prime(7).unwrap();
        let m1 = Mat::from_rows(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let m2 = Mat::from_rows(&f, &[vec![0, 1], vec![1, 0]]).unwrap();
        let c = certify(&kron(&m1, &m2, &f), &f);
        assert_eq!(c.min_poly, target_min_poly(&f));
        assert_eq!(c.rank_t_minus_1, 3);
        assert_eq!(c.ranks_minus, vec![3, 2, 2, 2]);
    }

    #[test]
    fn sl2_is_not_solvable_but_dihedral_is() {
        let f = Field::prime(5).unwrap();
        assert!(!is_solvable(&MatGroupGen::sl2_standard(f), 1000).unwrap());
        let r = Mat::from_rows(&f, &[vec![0, -1], vec![1, 0]]).unwrap();
        let s = Mat::from_rows(&f, &[vec![1, 0], vec![0, -1]]).unwrap();
        let d8 = MatGroupGen::new(f, 2, vec![r, s]).unwrap();
        assert_eq!(closure(&d8, 100).unwrap().order(), 8);
        assert!(is_solvable(&d8, 100).unwrap());
    }
}
