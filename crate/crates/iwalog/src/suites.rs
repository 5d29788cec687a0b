//! Named invariant suites, one per acceptance row.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Result};
use iwalog_core::cycser::{self, FiniteGroupRingElt};
use iwalog_core::frac::{self, Frac};
use iwalog_core::galimg::{self, Field, Mat, MatGroupGen};
use iwalog_core::iwadist::{delta, halflog, log_tw, omega, omega_tw, phi_cyc, IwaSeries, Sign};
use iwalog_core::logmat::{self, combined, log_matrix_ap0, q_matrix, CrystalParams, LogMatrix, QForm, Route};
use iwalog_core::qexp::{self, ImagQuadCtx};
use iwalog_core::regdiv::{self, MSeries, SpecFamily};
use iwalog_core::split::{self, AlphaBetaPair, SignedPair};
use iwalog_core::{Error, PadicElt, PrimeCtx};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const SUITES: [&str; 10] = [
    "cyclotomic-identities",
    "halflog-product",
    "mellin-roundtrip",
    "logmatrix-structure",
    "det-identity",
    "signed-split",
    "antisym",
    "regdiv",
    "galimg",
    "theta",
];

#[derive(Clone, Debug, Serialize)]
pub struct Property {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub criterion: usize,
    pub seed: u64,
    pub pass: bool,
    pub properties: Vec<Property>,
}

#[derive(Default)]
struct Props(Vec<Property>);

impl Props {
    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.0.push(Property { name: name.into(), pass, detail: detail.into(), counterexample: None });
    }

    /// A property over many trials; the first failure is kept as the counterexample.
    fn trials(&mut self, name: impl Into<String>, ok: usize, total: usize, first_bad: Option<String>, need: usize) {
        self.0.push(Property {
            name: name.into(),
            pass: ok >= need,
            detail: format!("{ok}/{total}"),
            counterexample: first_bad,
        });
    }
}

pub fn criterion_of(suite: &str) -> Option<usize> {
    SUITES.iter().position(|s| *s == suite).map(|i| i + 1)
}

pub fn run(suite: &str, seed: u64) -> Result<SuiteReport> {
    let criterion =
        criterion_of(suite).ok_or_else(|| anyhow!("unknown suite {suite:?}; known: {}", SUITES.join(", ")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = Props::default();
    match criterion {
        1 => cyclotomic(&mut p)?,
        2 => halflog_product(&mut p)?,
        3 => mellin_roundtrip(&mut p, &mut rng)?,
        4 => logmatrix_structure(&mut p)?,
        5 => det_identity(&mut p)?,
        6 => signed_split(&mut p, &mut rng)?,
        7 => antisym(&mut p, &mut rng)?,
        8 => regdiv_suite(&mut p, &mut rng)?,
        9 => galimg_suite(&mut p)?,
        10 => theta(&mut p, &mut rng)?,
        _ => unreachable!(),
    }
    let pass = p.0.iter().all(|x| x.pass);
    Ok(SuiteReport { suite: suite.to_string(), criterion, seed, pass, properties: p.0 })
}

fn full_prec(s: &IwaSeries) -> bool {
    s.coeffs.iter().all(|c| c.prec() == s.ctx.prec())
}

/// Equal as exact polynomials with every coefficient known to full precision.
fn exact_eq(a: &IwaSeries, b: &IwaSeries) -> bool {
    a.exact && b.exact && full_prec(a) && full_prec(b) && a.approx_eq(b)
}

/// `(1+X)^{p^n} − 1` from the binomial theorem over the integers.
fn omega_oracle(ctx: PrimeCtx, n: u32) -> IwaSeries {
    let e = ctx.p().pow(n) as usize;
    let mut row = vec![PadicElt::one(ctx)];
    for i in 1..=e {
        let mut next = vec![PadicElt::one(ctx); i + 1];
        for j in 1..i {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[0] = PadicElt::zero(ctx);
    IwaSeries::poly(ctx, row)
}

fn cyclotomic(props: &mut Props) -> Result<()> {
    for p in [3u64, 5, 7] {
        let ctx = PrimeCtx::new(p, 20)?;
        for n in 0..=4 {
            let mut prod = IwaSeries::x(ctx);
            for m in 1..=n {
                prod = prod.mul(&phi_cyc(ctx, m)?);
            }
            let w = omega(ctx, n)?;
            props.check(
                format!("p{p}.n{n}.product"),
                exact_eq(&w, &prod),
                format!("degree {}", w.degree().unwrap_or(0)),
            );
            props.check(format!("p{p}.n{n}.binomial"), exact_eq(&w, &omega_oracle(ctx, n)), "");
        }
    }
    Ok(())
}

fn halflog_product(props: &mut Props) -> Result<()> {
    for p in [3u64, 5] {
        let ctx = PrimeCtx::new(p, 20)?;
        for m in 0..=2 {
            for n in 0..=3 {
                let lhs = halflog(ctx, Sign::Plus, m, n)?.mul(&halflog(ctx, Sign::Minus, m, n)?).mul(&delta(ctx, m));
                let rhs = omega(ctx, n)?.twisted_product(m).div_p_pow(m * n);
                props.check(
                    format!("p{p}.m{m}.n{n}"),
                    exact_eq(&lhs, &rhs),
                    format!("denominator p^{}", rhs.normalize().denom),
                );
            }
        }
    }
    Ok(())
}

fn mellin_roundtrip(props: &mut Props, rng: &mut ChaCha8Rng) -> Result<()> {
    let ctx = PrimeCtx::new(5, 10)?;
    let level = 2;
    let idx = FiniteGroupRingElt::index_set(ctx, level);
    let bound = 5u64.pow(10);
    let (mut ok, mut bad) = (0, None);
    for trial in 0..100 {
        let mut lam = FiniteGroupRingElt::zero(ctx, level);
        for &a in &idx {
            if rng.gen_bool(0.7) {
                lam.coeffs.insert(a, PadicElt::from_u64(ctx, rng.gen_range(0..bound)));
            }
        }
        lam.coeffs.retain(|_, c| !c.is_zero());
        let back = cycser::mellin_inverse(&cycser::mellin(&lam), level)?;
        if back == lam {
            ok += 1;
        } else if bad.is_none() {
            bad = Some(format!("trial {trial}: {} terms in, {} out", lam.coeffs.len(), back.coeffs.len()));
        }
    }
    props.trials("roundtrip", ok, 100, bad, 100);
    Ok(())
}

const LOG_PREC: u32 = 8;

fn log_params(k: u32) -> Result<CrystalParams> {
    Ok(CrystalParams::ap_zero(3, LOG_PREC, k, 1)?)
}

fn m_mod(prm: &CrystalParams, n: u32, modulus_level: u32) -> Result<LogMatrix> {
    let w = omega_tw(prm.ctx, modulus_level, prm.k + 1)?;
    Ok(log_matrix_ap0(prm, n, &Route::Quotient { modulus: w })?)
}

fn p_pow(ctx: PrimeCtx, k: u32) -> PadicElt {
    PadicElt::one(ctx).mul_p_pow(k)
}

/// Property-name prefixes that fail for mathematical reasons (see the README).
pub const KNOWN_RED: [(usize, &str); 2] = [(4, "k1.coherence"), (7, "lgeo.as-stated")];

pub fn is_known_red(criterion: usize, property: &str) -> bool {
    KNOWN_RED.iter().any(|(c, prefix)| *c == criterion && property.starts_with(prefix))
}

fn logmatrix_structure(props: &mut Props) -> Result<()> {
    for k in [0u32, 1] {
        let prm = log_params(k)?;
        let ctx = prm.ctx;
        let mut mats = BTreeMap::new();
        for n in 0..=3 {
            mats.insert(n, m_mod(&prm, n, n)?);
        }
        for (&n, m) in &mats {
            let w = omega_tw(ctx, n, k + 1)?;
            let diag = m.entry(0, 0).is_zero_mod(&w)? && m.entry(1, 1).is_zero_mod(&w)?;
            props.check(format!("k{k}.n{n}.diagonal"), diag, "M(1,1), M(2,2) vanish mod ω_{n,k+1}");
            let lm = halflog(ctx, Sign::Minus, k + 1, n)?;
            let r21 = m.entry(1, 0).equal_up_to_unit_mod(&lm, &w);
            props.check(format!("k{k}.n{n}.entry21"), r21.is_ok(), witness(&r21, "M(2,1) ~ log⁻"));
            let lp = halflog(ctx, Sign::Plus, k + 1, n)?;
            let r12 = m.entry(0, 1).scale(p_pow(ctx, k + 1)).equal_up_to_unit_mod(&lp, &w);
            props.check(format!("k{k}.n{n}.entry12"), r12.is_ok(), witness(&r12, "p^{k+1}·M(1,2) ~ log⁺"));
        }
        for n in 0..3 {
            let w = omega_tw(ctx, n, k + 1)?;
            let (lo, hi) = (&mats[&n], &mats[&(n + 1)]);
            let mut same = true;
            let mut where_ = None;
            for i in 0..2 {
                for j in 0..2 {
                    if !hi.entry(i, j).sub(lo.entry(i, j)).is_zero_mod(&w)? {
                        same = false;
                        where_.get_or_insert(format!("entry ({}, {})", i + 1, j + 1));
                    }
                }
            }
            props.0.push(Property {
                name: format!("k{k}.coherence.n{n}-n{}", n + 1),
                pass: same,
                detail: format!("level {} ≡ level {n} mod ω_{{{n},{}}}", n + 1, k + 1),
                counterexample: where_,
            });
        }
    }
    Ok(())
}

fn witness(r: &std::result::Result<IwaSeries, Error>, what: &str) -> String {
    match r {
        Ok(u) => format!("{what}, unit constant term {}", u.coeff(0)),
        Err(e) => format!("{what}: {e}"),
    }
}

fn det_identity(props: &mut Props) -> Result<()> {
    for k in [0u32, 1] {
        let prm = log_params(k)?;
        let ctx = prm.ctx;
        for n in 1..=3 {
            let m = m_mod(&prm, n, n + 1)?;
            let lhs = m.det2()?.mul(&delta(ctx, k + 1)).scale(p_pow(ctx, k + 1));
            let rhs = log_tw(ctx, k + 1, n)?;
            for (label, lvl) in [("as-stated", n - 1), ("strong", n + 1)] {
                let w = omega_tw(ctx, lvl, k + 1)?;
                let r = lhs.equal_up_to_unit_mod(&rhs, &w);
                props.check(
                    format!("k{k}.n{n}.{label}"),
                    r.is_ok(),
                    witness(&r, &format!("mod ω_{{{lvl},{}}}", k + 1)),
                );
            }
        }
    }
    Ok(())
}

fn qinv_m(prm: &CrystalParams, m: &LogMatrix) -> Result<LogMatrix> {
    let qi = frac::mat_inv(&q_matrix(prm, QForm::G)?)?;
    Ok(combined(&qi, m)?)
}

fn random_poly(ctx: PrimeCtx, rng: &mut ChaCha8Rng, deg: usize, lo: i64, hi: i64) -> IwaSeries {
    let d = rng.gen_range(0..=deg);
    let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(lo..=hi)).collect();
    IwaSeries::from_i64s(ctx, &c)
}

const SPLIT_PREC: u32 = 15;
const SPLIT_CAP: usize = 260;
const SPLIT_TOL: u32 = 8;

fn signed_split(props: &mut Props, rng: &mut ChaCha8Rng) -> Result<()> {
    let (k, n) = (0u32, 3u32);
    let prm = CrystalParams::ap_zero(3, SPLIT_PREC, k, 1)?;
    let ctx = prm.ctx;
    let r = qinv_m(&prm, &log_matrix_ap0(&prm, n, &Route::Series { cap: SPLIT_CAP })?)?;
    let w = omega_tw(ctx, n, k + 1)?;
    let (mut ok, mut bad) = (0, None);
    let mut min_prec = u32::MAX;
    for trial in 0..100 {
        let lp = random_poly(ctx, rng, 4, -40, 40);
        let lm = random_poly(ctx, rng, 4, -40, 40);
        let pair = SignedPair { plus: lp.clone(), minus: lm.clone(), level: n };
        let ab = split::forward(&pair, &r)?;
        let verdict = match split::signed_split(&ab, &r, n, 0) {
            Ok(s) => {
                let d1 = s.plus.sub(&lp).reduce_mod(&w)?;
                let d2 = s.minus.sub(&lm).reduce_mod(&w)?;
                let prec = d1.coeffs.iter().chain(&d2.coeffs).map(|c| c.prec()).min().unwrap_or(ctx.prec());
                min_prec = min_prec.min(prec);
                let zero = d1.coeffs.iter().chain(&d2.coeffs).all(|c| c.with_prec(SPLIT_TOL).is_zero());
                if zero && prec >= SPLIT_TOL {
                    Ok(())
                } else {
                    Err(format!("recovered pair differs (precision {prec})"))
                }
            }
            Err(e) => Err(e.to_string()),
        };
        match verdict {
            Ok(()) => ok += 1,
            Err(e) => {
                bad.get_or_insert(format!("trial {trial}: {e}"));
            }
        }
    }
    props.trials("roundtrip", ok, 100, bad, 100);
    props.check("roundtrip.precision", min_prec >= SPLIT_TOL, format!("least digits known {min_prec}"));
    let one = AlphaBetaPair { alpha: IwaSeries::one(ctx), beta: IwaSeries::zero(ctx), level: n };
    let res = split::signed_split(&one, &r, n, 0);
    props.check(
        "inconsistent-input",
        matches!(res, Err(Error::NoBoundedSolution { .. })),
        match &res {
            Ok(_) => String::from("a bounded pair was returned"),
            Err(e) => e.to_string(),
        },
    );
    let zero = AlphaBetaPair { alpha: IwaSeries::zero(ctx), beta: IwaSeries::zero(ctx), level: n };
    let z = split::signed_split(&zero, &r, n, 0)?;
    props.check("zero-input", z.plus.approx_eq(&IwaSeries::zero(ctx)) && z.minus.approx_eq(&IwaSeries::zero(ctx)), "");
    Ok(())
}

fn antisym(props: &mut Props, rng: &mut ChaCha8Rng) -> Result<()> {
    let prm = CrystalParams::ap_zero(3, 12, 0, 1)?;
    let ctx = prm.ctx;
    let r = qinv_m(&prm, &m_mod(&prm, 2, 3)?)?;
    let det = r.det2()?;
    let (mut ok, mut bad) = (0, None);
    for trial in 0..100 {
        let g = random_poly(ctx, rng, 4, -40, 40);
        match split::antisym_factor(&det.mul(&g), &r) {
            Ok(h) if h.approx_eq(&g) => ok += 1,
            Ok(_) => {
                bad.get_or_insert(format!("trial {trial}: wrong quotient"));
            }
            Err(e) => {
                bad.get_or_insert(format!("trial {trial}: {e}"));
            }
        }
    }
    props.trials("recover", ok, 100, bad, 100);

    for k in [0u32, 1] {
        let prm = CrystalParams::ap_zero(3, 12, k, 1)?;
        let ctx = prm.ctx;
        for n in [1u32, 2] {
            let r = qinv_m(&prm, &m_mod(&prm, n, n + 1)?)?;
            let det = r.det2()?;
            let g = random_poly(ctx, rng, 3, -40, 40);
            let ba = Frac::int(prm.beta - prm.alpha).inv()?;
            let l = logmat::scale_frac(&log_tw(ctx, k + 1, n)?.mul(&g), ba);
            let dg = det.mul(&delta(ctx, k + 1)).mul(&g);
            let w = omega_tw(ctx, n + 1, k + 1)?;
            let plain = l.equal_up_to_unit_mod(&dg, &w);
            props.check(
                format!("lgeo.as-stated.k{k}.n{n}"),
                plain.is_ok(),
                witness(&plain, "L ~ det·δ·G mod ω_{n+1,k+1}"),
            );
            let scaled = l.equal_up_to_unit_mod(&dg.scale(p_pow(ctx, k + 1)), &w);
            props.check(
                format!("lgeo.scaled.k{k}.n{n}"),
                scaled.is_ok(),
                witness(&scaled, "L ~ p^{k+1}·det·δ·G mod ω_{n+1,k+1}"),
            );
        }
    }
    Ok(())
}

const RD_PREC: u32 = 8;
const RD_CAP: u32 = 5;

fn random_mseries(ctx: PrimeCtx, rng: &mut ChaCha8Rng, max_deg: u32, density: f64) -> MSeries {
    let mut f = MSeries::zero(ctx, 2, RD_CAP);
    for e in regdiv::monomials(2, max_deg + 1) {
        if rng.gen_bool(density) {
            f.set(e, PadicElt::from_i64(ctx, rng.gen_range(-13..=13)));
        }
    }
    f
}

/// `F ∈ m` with a unit `x₁` coefficient, so `x₀ ∤ F`.
fn random_f(ctx: PrimeCtx, rng: &mut ChaCha8Rng) -> MSeries {
    let mut f = random_mseries(ctx, rng, 2, 0.5);
    f.set(vec![0, 0], PadicElt::from_i64(ctx, 3 * rng.gen_range(-4..=4)));
    f.set(vec![0, 1], PadicElt::from_i64(ctx, 3 * rng.gen_range(-4..=4) + 1));
    f
}

fn random_points(ctx: PrimeCtx, rng: &mut ChaCha8Rng, count: usize) -> Result<SpecFamily> {
    let mut picked = std::collections::BTreeSet::new();
    while picked.len() < count {
        picked.insert(rng.gen_range(1..=200i64));
    }
    Ok(SpecFamily::new(picked.into_iter().map(|a| PadicElt::from_i64(ctx, 3 * a)).collect())?)
}

fn regdiv_suite(props: &mut Props, rng: &mut ChaCha8Rng) -> Result<()> {
    let ctx = PrimeCtx::new(3, RD_PREC)?;
    let (mut ok, mut bad) = (0, None);
    for trial in 0..200 {
        let f = random_f(ctx, rng);
        let mut h = random_mseries(ctx, rng, 2, 0.5);
        h.set(vec![0, 0], PadicElt::from_i64(ctx, 3 * rng.gen_range(-4..=4) + 1));
        let g = f.mul(&h);
        let rep = regdiv::chevalley_check(&f, &g, &random_points(ctx, rng, 10)?)?;
        if rep.all_hypotheses() && rep.direct == Some(true) {
            ok += 1;
        } else {
            bad.get_or_insert(format!("trial {trial}: hypotheses {} direct {:?}", rep.all_hypotheses(), rep.direct));
        }
    }
    props.trials("positive", ok, 200, bad, 200);

    let (mut failed_c, mut bad) = (0, None);
    let mut trial = 0;
    while trial < 200 {
        let f = random_f(ctx, rng);
        let g = random_mseries(ctx, rng, RD_CAP - 1, 0.6);
        if !g.has_unit_content() {
            continue;
        }
        let rep = regdiv::chevalley_check(&f, &g, &random_points(ctx, rng, 10)?)?;
        if !rep.specializations {
            failed_c += 1;
        } else {
            bad.get_or_insert(format!("trial {trial}: every specialization divides"));
        }
        trial += 1;
    }
    props.trials("coprime.fails-c", failed_c, 200, bad, 198);

    let f = random_f(ctx, rng);
    let mut h = random_mseries(ctx, rng, 2, 0.5);
    h.set(vec![0, 0], PadicElt::one(ctx));
    let (a1, a2, a3) = (3i64, 6i64, 9i64);
    let x0 = MSeries::var(ctx, 2, RD_CAP, 0);
    let lin = |a: i64| x0.sub(&MSeries::constant(ctx, 2, RD_CAP, PadicElt::from_i64(ctx, a)));
    let g = f.mul(&h).add(&lin(a1).mul(&lin(a2)));
    let at = |pts: &[i64]| SpecFamily::new(pts.iter().map(|&a| PadicElt::from_i64(ctx, a)).collect());
    let two = regdiv::chevalley_check(&f, &g, &at(&[a1, a2])?)?;
    props.check("counterexample.passes-at-two-points", two.all_hypotheses(), format!("points {a1}, {a2}"));
    props.check("counterexample.direct-fails", two.direct == Some(false), format!("direct {:?}", two.direct));
    let fresh = regdiv::chevalley_check(&f, &g, &at(&[a3])?)?;
    props.check("counterexample.fails-at-fresh-point", !fresh.specializations, format!("point {a3}"));

    let wctx = PrimeCtx::new(3, 16)?;
    let fam = random_points(wctx, rng, 12)?;
    let w = (0..=12).all(|n| regdiv::chevalley_witness(&fam, n));
    props.check("witness.g-products", w, "g_n → 0 m-adically for n ≤ 12");
    Ok(())
}

fn galimg_suite(props: &mut Props) -> Result<()> {
    const BUDGET: usize = 100_000;
    for q in [5u64, 7] {
        let f = Field::prime(q)?;
        let ord = galimg::closure(&MatGroupGen::sl2_standard(f), BUDGET)?.order() as u64;
        props.check(
            format!("sl2.f{q}.order"),
            ord == galimg::sl2_order(q) && ord == q * (q * q - 1),
            format!("order {ord}"),
        );
    }
    let f = Field::prime(5)?;
    let id = galimg::closure(&MatGroupGen::new(f, 2, vec![Mat::identity(2)])?, BUDGET)?.order();
    props.check("identity.order", id == 1, format!("order {id}"));

    let f7 = Field::prime(7)?;
    let m1 = Mat::from_rows(&f7, &[vec![1, 1], vec![0, 1]])?;
    let m2 = Mat::from_rows(&f7, &[vec![0, 1], vec![1, 0]])?;
    let t = galimg::kron(&m1, &m2, &f7);
    let cert = galimg::certify(&t, &f7);
    props.check("tau.min-poly", cert.min_poly == galimg::target_min_poly(&f7), format!("{:?}", cert.min_poly));
    props.check("tau.rank", cert.rank_t_minus_1 == 3, format!("rank(t−1) = {}", cert.rank_t_minus_1));
    let t2 = t.mul(&t, &f7);
    let sq = t2.minus_scalar(f7.from_i64(1), &f7);
    props.check("tau.direct", !t2.is_identity() && sq.mul(&sq, &f7).is_zero(), "(t²−1)² = 0, t² ≠ 1");

    let sl = MatGroupGen::sl2_standard(f);
    let h = Mat::from_rows(&f, &[vec![2]])?;
    let pairs = vec![(sl.gens[0].clone(), Mat::identity(1)), (sl.gens[1].clone(), h)];
    let v = galimg::goursat_product_check(f, &pairs, BUDGET)?;
    props.check(
        "goursat.sl2-by-cyclic",
        v.full_product && v.order_h == 480 && v.order_1 == 120 && v.order_2 == 4,
        format!("|H| = {}, |G1| = {}, |G2| = {}", v.order_h, v.order_1, v.order_2),
    );
    let diag: Vec<(Mat, Mat)> = sl.gens.iter().map(|g| (g.clone(), g.clone())).collect();
    let d = galimg::goursat_product_check(f, &diag, BUDGET)?;
    props.check("goursat.diagonal", !d.full_product && d.order_h == 120, format!("|H| = {}", d.order_h));
    Ok(())
}

fn gauss_oracle(nmax: usize) -> Vec<i128> {
    let mut a = vec![0i128; nmax + 1];
    let r = (nmax as f64).sqrt() as i128 + 1;
    for x in -r..=r {
        for y in -r..=r {
            let n = (x * x + y * y) as usize;
            if n >= 1 && n <= nmax {
                a[n] += x.pow(4) - 6 * x * x * y * y + y.pow(4);
            }
        }
    }
    a.iter().map(|v| v / 4).collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn theta(props: &mut Props, rng: &mut ChaCha8Rng) -> Result<()> {
    let ctx = ImagQuadCtx::trivial(-4, 4)?;
    let th = qexp::theta_series(&ctx, 200)?;
    let oracle = gauss_oracle(200);
    let mism: Vec<usize> = (1..=200).filter(|&n| th.a(n)[0] != oracle[n]).collect();
    props.0.push(Property {
        name: "brute-force".into(),
        pass: mism.is_empty(),
        detail: format!("{} of 200 coefficients differ", mism.len()),
        counterexample: mism.first().map(|n| format!("a_{n} = {} vs {}", th.a(*n)[0], oracle[*n])),
    });
    for (n, want) in [(1usize, 1i128), (2, -4), (5, -14)] {
        props.check(format!("a{n}"), th.a(n)[0] == want, format!("a_{n} = {}", th.a(n)[0]));
    }
    let inert: Vec<u64> = (3..=200).filter(|&l| is_prime(l) && l % 4 == 3).collect();
    let nz: Vec<u64> = inert.iter().copied().filter(|&l| th.a(l as usize)[0] != 0).collect();
    props.check("inert-vanish", nz.is_empty(), format!("{} inert primes, nonzero at {nz:?}", inert.len()));

    let big = qexp::theta_series(&ctx, 10_000)?;
    let (mut ok, mut bad, mut done) = (0, None, 0);
    while done < 500 {
        let (m, n) = (rng.gen_range(1..=100usize), rng.gen_range(1..=100usize));
        if gcd(m, n) != 1 {
            continue;
        }
        done += 1;
        if big.a(m * n)[0] == big.a(m)[0] * big.a(n)[0] {
            ok += 1;
        } else {
            bad.get_or_insert(format!("a_{} ≠ a_{m}·a_{n}", m * n));
        }
    }
    props.trials("multiplicative", ok, 500, bad, 500);

    let mut local = BTreeMap::new();
    for l in (2..=50u64).filter(|&l| is_prime(l)) {
        let al = oracle[l as usize];
        let f = if l == 2 { vec![1, -al] } else { vec![1, -al, qexp::kronecker(-4, l) as i128 * (l as i128).pow(4)] };
        local.insert(l, f);
    }
    let t = qexp::dirichlet_from_euler(&local, 50)?;
    let bad_n: Vec<usize> = (1..=50).filter(|&n| t[n - 1] != oracle[n]).collect();
    props.check("euler-product", bad_n.is_empty(), format!("n ≤ 50, differing at {bad_n:?}"));
    let lib: Result<Vec<bool>> = (3..=50u64)
        .filter(|&l| is_prime(l))
        .map(|l| Ok(qexp::theta_local_factor(&ctx, &th, l)? == local[&l]))
        .collect();
    props.check("local-factors", lib?.iter().all(|b| *b), "library factors match the hand-built ones");
    Ok(())
}

/// Fails with a readable message when the suite name is unknown.
pub fn ensure_known(suite: &str) -> Result<()> {
    if criterion_of(suite).is_none() {
        bail!("unknown suite {suite:?}; known: {}", SUITES.join(", "));
    }
    Ok(())
}
