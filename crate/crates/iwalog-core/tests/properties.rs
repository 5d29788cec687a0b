use iwalog_core::cycser::PiSeries;
use iwalog_core::frac::Frac;
use iwalog_core::galimg::{self, Field, Mat, MatGroupGen};
use iwalog_core::iwadist::{self, CharPoint, IwaSeries};
use iwalog_core::qexp::{self, ImagQuadCtx};
use iwalog_core::regdiv::{self, MSeries};
use iwalog_core::split;
use iwalog_core::{PadicElt, PrimeCtx};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn ctxs() -> Vec<PrimeCtx> {
    let base = PrimeCtx::new(5, 9).unwrap();
    vec![base, base.with_unramified(2).unwrap(), base.with_ramified(2).unwrap()]
}

fn elt(ctx: PrimeCtx, a: u64, b: u64) -> PadicElt {
    PadicElt::from_coords(ctx, a, b)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(which in 0usize..3, a in any::<(u64, u64)>(), b in any::<(u64, u64)>(), c in any::<(u64, u64)>()) {
        let ctx = ctxs()[which];
        let (x, y, z) = (elt(ctx, a.0, a.1), elt(ctx, b.0, b.1), elt(ctx, c.0, c.1));
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!(x - x, PadicElt::zero(ctx));
    }

    #[test]
    fn inverse_is_an_involution(which in 0usize..3, a in 1u64..1_000_000, b in any::<u64>()) {
        let ctx = ctxs()[which];
        let x = elt(ctx, a * 5 + 1, b);
        prop_assert!(x.is_unit());
        prop_assert_eq!(x.inv().unwrap().inv().unwrap(), x);
        prop_assert_eq!(x * x.inv().unwrap(), PadicElt::one(ctx));
    }

    #[test]
    fn teichmuller_has_order_dividing_p_minus_one(a in 1u64..5) {
        let ctx = PrimeCtx::new(5, 12).unwrap();
        let w = PadicElt::teichmuller(ctx, a).unwrap();
        prop_assert_eq!(w.pow(4), PadicElt::one(ctx));
    }

    /// Perturbing inputs below their known precision never changes a result
    /// above its claimed precision.
    #[test]
    fn precision_contract(which in 0usize..3, a in any::<(u64, u64)>(), b in any::<(u64, u64)>(),
                          pa in 1u32..9, pb in 1u32..9, r in any::<(u64, u64)>(), s in any::<(u64, u64)>(), k in 0u32..4) {
        let ctx = ctxs()[which];
        let x = elt(ctx, a.0, a.1).mul_p_pow(k).with_prec(pa);
        let y = elt(ctx, b.0, b.1).with_prec(pb);
        let xp = x.with_prec(9) + elt(ctx, r.0, r.1).mul_p_pow(pa);
        let yp = y.with_prec(9) + elt(ctx, s.0, s.1).mul_p_pow(pb);
        let prod = x * y;
        prop_assert_eq!((xp * yp).with_prec(prod.prec()), prod);
        let sum = x + y;
        prop_assert_eq!(sum.prec(), pa.min(pb));
        prop_assert_eq!((xp + yp).with_prec(sum.prec()), sum);
        if k <= pa {
            let q = x.div_p_pow(k).unwrap();
            prop_assert_eq!(q.prec(), pa - k);
            prop_assert_eq!(xp.div_p_pow(k).unwrap().with_prec(q.prec()), q);
        }
    }

    #[test]
    fn frobenius_commutes_with_gamma(cs in prop::collection::vec(0i64..125, 1..8), a in 1u64..25) {
        prop_assume!(a % 5 != 0);
        let ctx = PrimeCtx::new(5, 6).unwrap();
        let cap = 40;
        let f = PiSeries::from_coeffs(ctx, cs.iter().map(|&c| PadicElt::from_i64(ctx, c)).collect(), cap);
        let lhs = f.frobenius().unwrap().gamma_act_int(a).unwrap();
        let rhs = f.gamma_act_int(a).unwrap().frobenius().unwrap();
        prop_assert!(lhs.approx_eq(&rhs));
    }

    #[test]
    fn psi_projection_formula(fs in prop::collection::vec(0i64..27, 1..10), gs in prop::collection::vec(0i64..27, 1..4)) {
        let ctx = PrimeCtx::new(3, 8).unwrap();
        let cap = 30;
        let f = PiSeries::from_coeffs(ctx, fs.iter().map(|&c| PadicElt::from_i64(ctx, c)).collect(), cap);
        let g = PiSeries::from_coeffs(ctx, gs.iter().map(|&c| PadicElt::from_i64(ctx, c)).collect(), cap);
        let lhs = f.mul(&g.frobenius().unwrap()).psi();
        let rhs = f.psi().mul(&g);
        let d = lhs.deg_cap().min(rhs.deg_cap()) / 3;
        for i in 0..d {
            prop_assert_eq!(lhs.coeffs[i], rhs.coeffs[i]);
        }
    }

    #[test]
    fn twist_is_multiplicative(fs in prop::collection::vec(-20i64..20, 1..6), gs in prop::collection::vec(-20i64..20, 1..6), j in -3i64..4) {
        let ctx = PrimeCtx::new(3, 10).unwrap();
        let f = IwaSeries::from_i64s(ctx, &fs);
        let g = IwaSeries::from_i64s(ctx, &gs);
        prop_assert!(f.mul(&g).twist(j).approx_eq(&f.twist(j).mul(&g.twist(j))));
        prop_assert!(f.twist(j).twist(-j).approx_eq(&f));
    }

    #[test]
    fn twist_shifts_evaluation(fs in prop::collection::vec(-20i64..20, 1..6), k in -2i64..3, j in 0i64..3, t in 0u32..3) {
        let ctx = PrimeCtx::new(3, 10).unwrap();
        let f = IwaSeries::from_i64s(ctx, &fs);
        let lhs = f.twist(k).eval_at(CharPoint { t, j }).unwrap();
        let rhs = f.eval_at(CharPoint { t, j: j + k }).unwrap();
        prop_assert!(lhs.value.sub(&rhs.value).is_zero());
    }

    #[test]
    fn congruence_preserves_antisymmetry(c in any::<u64>(), t in prop::collection::vec(any::<u64>(), 4)) {
        let ctx = PrimeCtx::new(7, 6).unwrap();
        let f = |x: u64| Frac::int(PadicElt::from_u64(ctx, x));
        let a = vec![vec![Frac::zero(ctx), f(c)], vec![f(c).neg(), Frac::zero(ctx)]];
        let tm = vec![vec![f(t[0]), f(t[1])], vec![f(t[2]), f(t[3])]];
        prop_assert!(split::is_antisymmetric(&split::congruence_transform(&tm, &a)));
    }

    #[test]
    fn specialize_is_a_ring_map(fs in prop::collection::vec((0u32..3, 0u32..3, -9i64..9), 1..6),
                                gs in prop::collection::vec((0u32..3, 0u32..3, -9i64..9), 1..6), a in 1i64..40) {
        let ctx = PrimeCtx::new(3, 8).unwrap();
        let mk = |ts: &[(u32, u32, i64)]| {
            let terms: Vec<(Vec<u32>, i64)> = ts.iter().map(|&(i, j, c)| (vec![i, j], c)).collect();
            MSeries::from_terms(ctx, 2, 6, &terms).unwrap()
        };
        let (f, g) = (mk(&fs), mk(&gs));
        let pt = PadicElt::from_i64(ctx, 3 * a);
        let s = |h: &MSeries| regdiv::specialize(h, pt).unwrap();
        prop_assert!(s(&f.mul(&g)).approx_eq(&s(&f).mul(&s(&g))));
        prop_assert!(s(&f.add(&g)).approx_eq(&s(&f).add(&s(&g))));
    }

    #[test]
    fn chevalley_products_shrink(pts in prop::collection::btree_set(1i64..500, 12)) {
        let ctx = PrimeCtx::new(3, 16).unwrap();
        let fam = regdiv::SpecFamily::new(pts.iter().map(|&a| PadicElt::from_i64(ctx, 3 * a)).collect()).unwrap();
        for n in 0..=12 {
            prop_assert!(regdiv::chevalley_witness(&fam, n));
        }
    }

    #[test]
    fn goursat_verdict_is_monotone(c in 1i64..5, extra in 0i64..5) {
        let f = Field::prime(5).unwrap();
        let sl = MatGroupGen::sl2_standard(f);
        let one = Mat::identity(1);
        let h = Mat::from_rows(&f, &[vec![c]]).unwrap();
        let base = vec![(sl.gens[0].clone(), one.clone()), (sl.gens[1].clone(), h)];
        let v = galimg::goursat_product_check(f, &base, 10_000).unwrap();
        let mut more = base.clone();
        more.push((Mat::identity(2), Mat::from_rows(&f, &[vec![extra.max(1)]]).unwrap()));
        let w = galimg::goursat_product_check(f, &more, 10_000).unwrap();
        prop_assert!(!v.full_product || w.full_product);
    }

    #[test]
    fn dihedral_images_have_abelian_index_two(a in 1i64..7, b in 1i64..7, x in 1i64..7, y in 1i64..7) {
        let f = Field::prime(7).unwrap();
        let d = galimg::DihedralData { field: f, inner: vec![(f.from_i64(a), f.from_i64(b))], outer: vec![(f.from_i64(x), f.from_i64(y))], relations: vec![] };
        let g = galimg::dihedral_rep(&d).unwrap();
        let grp = galimg::closure(&g, 10_000).unwrap();
        prop_assert!(galimg::has_abelian_diagonal_index_le2(&grp));
    }

    #[test]
    fn theta_is_multiplicative(m in 1usize..60, n in 1usize..60) {
        prop_assume!(gcd(m, n) == 1);
        let ctx = ImagQuadCtx::trivial(-4, 4).unwrap();
        let th = qexp::theta_series(&ctx, 3600).unwrap();
        prop_assert_eq!(th.a(m * n)[0], th.a(m)[0] * th.a(n)[0]);
    }

    #[test]
    fn deplete_is_idempotent(disc_ix in 0usize..3, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let disc = [-3i64, -4, -7][disc_ix];
        let t = if disc == -3 { 6 } else if disc == -4 { 4 } else { 2 };
        let th = qexp::theta_series(&ImagQuadCtx::trivial(disc, t).unwrap(), 80).unwrap();
        let d = qexp::deplete(&th, p);
        prop_assert_eq!(qexp::deplete(&d, p), d);
    }

    #[test]
    fn euler_products_are_multiplicative(c2 in -5i128..5, c3 in -5i128..5, d3 in -5i128..5) {
        let mut local = BTreeMap::new();
        local.insert(2u64, vec![1, c2]);
        local.insert(3u64, vec![1, c3, d3]);
        let t = qexp::dirichlet_from_euler(&local, 72).unwrap();
        for m in 1..=72usize {
            for n in 1..=72usize {
                if m * n <= 72 && gcd(m, n) == 1 {
                    prop_assert_eq!(t[m * n - 1], t[m - 1] * t[n - 1]);
                }
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn omega_factors_into_cyclotomic_pieces() {
    for p in [3, 5] {
        let ctx = PrimeCtx::new(p, 12).unwrap();
        for n in 0..=3 {
            let mut prod = IwaSeries::x(ctx);
            for m in 1..=n {
                prod = prod.mul(&iwadist::phi_cyc(ctx, m).unwrap());
            }
            assert!(prod.approx_eq(&iwadist::omega(ctx, n).unwrap()));
        }
    }
}

#[test]
fn xi_is_a_unit() {
    for p in [3, 5, 7] {
        let ctx = PrimeCtx::new(p, 8).unwrap();
        let xi = PiSeries::xi(ctx, 30).unwrap();
        assert!(xi.coeffs[0].is_unit());
    }
}

#[test]
fn tau_certificates_have_rank_three() {
    let f = Field::prime(7).unwrap();
    let m1 = Mat::from_rows(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
    let m2 = Mat::from_rows(&f, &[vec![0, 1], vec![1, 0]]).unwrap();
    let g = MatGroupGen::new(f, 4, vec![galimg::kron(&m1, &m2, &f)]).unwrap();
    let cert = galimg::find_tau(&g, 1000).unwrap().expect("certificate");
    assert_eq!(cert.min_poly, galimg::target_min_poly(&f));
    assert_eq!(cert.rank_t_minus_1, 3);
    assert_eq!(cert.quotient_rank, 1);
}
