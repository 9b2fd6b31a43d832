mod common;

use common::*;
use ncq::helix::{
    eta_pullback, pic_combination, quadratic_periodicity, translate_admissible, translate_stepwise,
    CurvePoint, Helix, PicClass, Translation, WeierstrassCurve,
};
use ncq::linalg::{Field, Matrix, PrimeField, Rationals, Subspace};
use ncq::pointscheme::{
    classify_quintuple, enumerate_points, factor_22, form_points, gamma_form, Classification, Side,
};
use ncq::quintuple::random::{
    random_basis_change, random_geometric, random_gl2, random_quintuple, rng,
};
use ncq::quintuple::{
    build_prequadric, linear_detect, linear_tensor, relations_from_w, rotate, theta_maps,
};
use ncq::zalgebra::{compress_periodic, dim_table, expected_dim, AlgebraKind};
use proptest::prelude::*;
use rand::Rng;

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 5, 7, 11, 13])
}

fn matrix(p: u32, seed: u64, rows: usize, cols: usize) -> Matrix<PrimeField> {
    let f = PrimeField::new(p).unwrap();
    let mut r = rng(seed);
    let data: Vec<u32> = (0..rows * cols).map(|_| r.gen_range(0..p)).collect();
    Matrix::from_vec(&f, rows, cols, data).unwrap()
}

fn geometric_draw(p: u32, seed: u64) -> ncq::quintuple::Quintuple<PrimeField> {
    random_geometric(&PrimeField::new(p).unwrap(), &mut rng(seed)).unwrap()
}

fn curve() -> impl Strategy<Value = WeierstrassCurve> {
    (
        prop::sample::select(vec![5u32, 7, 11, 13, 17]),
        0i64..17,
        0i64..17,
    )
        .prop_filter_map("singular", |(p, a, b)| WeierstrassCurve::new(p, a, b).ok())
}

fn point(c: &WeierstrassCurve, k: usize) -> CurvePoint {
    let pts = c.points();
    pts[k % pts.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(p in prime(), seed in any::<u64>(), rows in 1usize..6, cols in 1usize..7) {
        let m = matrix(p, seed, rows, cols);
        let once = m.rref();
        let twice = once.reduced.rref();
        prop_assert_eq!(&twice.reduced, &once.reduced);
        prop_assert_eq!(once.rank, m.transpose().rank());
        prop_assert_eq!(once.kernel.dim() + once.rank, cols);
    }

    #[test]
    fn subspace_is_canonical(p in prime(), seed in any::<u64>()) {
        let f = PrimeField::new(p).unwrap();
        let m = matrix(p, seed, 3, 5);
        let mut r = rng(seed ^ 1);
        let g = loop {
            let g = matrix(p, r.gen(), 3, 3);
            if g.inverse().is_some() {
                break g;
            }
        };
        prop_assert_eq!(Subspace::row_space(&m), Subspace::row_space(&g.mul(&m).unwrap()));
        let s = Subspace::row_space(&m);
        for v in s.basis_vectors() {
            prop_assert!(s.contains(&v));
        }
        prop_assert!(Subspace::full(&f, 5).contains_subspace(&s));
    }

    #[test]
    fn sum_and_intersection_dimensions(p in prime(), seed in any::<u64>(), ra in 0usize..5, rb in 0usize..5) {
        let a = Subspace::row_space(&matrix(p, seed, ra.max(1), 5));
        let b = Subspace::row_space(&matrix(p, seed.wrapping_add(7), rb.max(1), 5));
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(s.contains_subspace(&a) && s.contains_subspace(&b));
        prop_assert!(a.contains_subspace(&i) && b.contains_subspace(&i));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn connected_and_bounded(p in prime(), seed in any::<u64>()) {
        let q = geometric_draw(p, seed);
        let pres = cubic_presentation(&q);
        for i in 0..4 {
            let t = dim_table(&pres, i, 6).unwrap();
            prop_assert_eq!(t.values[0], 1);
            prop_assert_eq!(t.values[1], 2);
            prop_assert_eq!(t.values[2], 4);
            for n in 0..=6 {
                let tensor = pres.tensor_slice_dim(i, i + n as i64).unwrap();
                prop_assert!(t.values[n] <= tensor);
            }
        }
    }

    #[test]
    fn adding_relations_shrinks_slices(seed in any::<u64>()) {
        let pres = gfp_presentation("free_cubic_gf7.json");
        let f = *pres.field();
        let q = geometric_draw(7, seed);
        let r0 = relations_from_w(q.w(), 0).unwrap();
        let one = Subspace::from_rows(&f, 8, &[r0.basis_vectors()[0].clone()]).unwrap();
        let smaller = pres.with_relations(0, one.clone()).unwrap();
        let smallest = smaller.with_relations(0, r0).unwrap();
        let (a, b, c) = (
            dim_table(&pres, 0, 5).unwrap().values,
            dim_table(&smaller, 0, 5).unwrap().values,
            dim_table(&smallest, 0, 5).unwrap().values,
        );
        for n in 0..=5 {
            prop_assert!(a[n] >= b[n] && b[n] >= c[n]);
        }
    }

    #[test]
    fn shift_moves_the_base(p in prime(), seed in any::<u64>(), n in -5i64..5) {
        let pres = cubic_presentation(&geometric_draw(p, seed));
        let shifted = pres.shift(n);
        for i in 0..4 {
            prop_assert_eq!(dim_table(&shifted, i, 5).unwrap(), {
                let mut t = dim_table(&pres, i + n, 5).unwrap();
                t.base = i;
                t
            });
        }
        let round = pres.shift(4);
        prop_assert_eq!(round.all_relations(), pres.all_relations());
    }

    #[test]
    fn rotation_is_a_group_action(p in prime(), seed in any::<u64>(), a in -6i64..6, b in -6i64..6) {
        let q = random_quintuple(&PrimeField::new(p).unwrap(), &mut rng(seed));
        prop_assert_eq!(q.rotated(a).rotated(b), q.rotated(a + b));
        prop_assert_eq!(q.rotated(4), q.clone());
        prop_assert_eq!(rotate(q.w(), a).permute_slots(&[0, 1, 2, 3]), rotate(q.w(), a));
    }

    #[test]
    fn relations_follow_rotation(p in prime(), seed in any::<u64>(), i in -4i64..8) {
        let q = geometric_draw(p, seed);
        prop_assert_eq!(
            relations_from_w(&rotate(q.w(), 1), i).unwrap(),
            relations_from_w(q.w(), i + 1).unwrap()
        );
        prop_assert_eq!(relations_from_w(q.w(), i).unwrap(), relations_from_w(q.w(), i + 4).unwrap());
    }

    #[test]
    fn prequadric_round_trip(p in prime(), seed in any::<u64>()) {
        let q = geometric_draw(p, seed);
        let pq = build_prequadric(&q).unwrap();
        prop_assert!(pq.w_ok());
        for i in 0..4 {
            let span = Subspace::from_rows(q.field(), 16, &[rotate(q.w(), i).coeffs().to_vec()]).unwrap();
            prop_assert_eq!(ncq::zalgebra::w_space(&pq.presentation, i).unwrap(), span);
        }
    }

    #[test]
    fn linear_orbit_stays_linear(p in prime(), seed in any::<u64>()) {
        let f = PrimeField::new(p).unwrap();
        let q = linear_tensor(&f).transform(&random_basis_change(&f, &mut rng(seed))).unwrap();
        prop_assert!(linear_detect(&q).unwrap());
        prop_assert_eq!(classify_quintuple(&q).classification, Classification::Linear);
        let pres = cubic_presentation(&q);
        prop_assert_eq!(dim_table(&pres, 0, 8).unwrap().first_mismatch(AlgebraKind::Cubic), None);
    }

    #[test]
    fn theta_is_identity_and_invariant(p in prime(), seed in any::<u64>(), s in 1u32..3) {
        let q = geometric_draw(p, seed);
        let f = *q.field();
        let scaled = q.scale(&f.from_i64(s as i64)).unwrap();
        let t = theta_maps(&q).unwrap();
        prop_assert_eq!(&t, &theta_maps(&scaled).unwrap());
        let moved = q.transform(&random_basis_change(&f, &mut rng(seed ^ 3))).unwrap();
        for maps in t.iter().chain(&theta_maps(&moved).unwrap()) {
            prop_assert_eq!(&maps.theta, &Matrix::identity(&f, 2));
            prop_assert_eq!(&maps.theta_prime, &Matrix::identity(&f, 2));
        }
    }

    #[test]
    fn gamma_forms_vanish_together(p in prime(), seed in any::<u64>(), linear in any::<bool>()) {
        let f = PrimeField::new(p).unwrap();
        let q = if linear {
            linear_tensor(&f).transform(&random_basis_change(&f, &mut rng(seed))).unwrap()
        } else {
            geometric_draw(p, seed)
        };
        for i in 0..4 {
            let r = relations_from_w(q.w(), i).unwrap();
            prop_assert_eq!(
                gamma_form(&r, Side::S01).unwrap().is_zero(),
                gamma_form(&r, Side::S12).unwrap().is_zero()
            );
        }
    }

    #[test]
    fn points_project_into_forms(p in prime(), seed in any::<u64>()) {
        let q = geometric_draw(p, seed);
        let pres = cubic_presentation(&q);
        let r = pres.relations(0);
        let g01 = form_points(&gamma_form(r, Side::S01).unwrap());
        let g12 = form_points(&gamma_form(r, Side::S12).unwrap());
        for t in enumerate_points(&pres, 0).unwrap() {
            prop_assert!(g01.contains(&[t[0], t[1]]));
            prop_assert!(g12.contains(&[t[1], t[2]]));
        }
    }

    #[test]
    fn classification_is_basis_free(p in prime(), seed in any::<u64>()) {
        let f = PrimeField::new(p).unwrap();
        let q = random_quintuple(&f, &mut rng(seed));
        let moved = q.transform(&random_basis_change(&f, &mut rng(seed ^ 5))).unwrap();
        let (a, b) = (classify_quintuple(&q), classify_quintuple(&moved));
        prop_assert_eq!(a.classification, b.classification);
        prop_assert_eq!(a.strongly_nondegenerate, b.strongly_nondegenerate);
        prop_assert_eq!(a.geometric, b.geometric);
    }

    #[test]
    fn factors_multiply_back(p in prop::sample::select(vec![3u32, 5, 7]), seed in any::<u64>()) {
        let q = geometric_draw(p, seed);
        let r0 = relations_from_w(q.w(), 0).unwrap();
        let form = gamma_form(&r0, Side::S01).unwrap();
        prop_assume!(!form.is_zero());
        let fac = factor_22(&form).unwrap();
        prop_assert_eq!(fac.product(q.field(), (2, 2)), form);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn compression_keeps_dimensions(entries in prop::collection::vec(-3i64..4, 9)) {
        let pres = rational_presentation("commutative_p2_rational.json");
        let rows: Vec<&[i64]> = entries.chunks(3).collect();
        let phi = Matrix::from_i64_rows(&Rationals, &rows);
        prop_assume!(phi.inverse().is_some());
        let b = compress_periodic(&pres, &phi).unwrap();
        let dims = b.dims(5).unwrap();
        let want: Vec<usize> = (0..=5).map(|n| expected_dim(AlgebraKind::Quadratic, n)).collect();
        prop_assert_eq!(dims, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(c in curve(), i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let (a, b, d) = (point(&c, i), point(&c, j), point(&c, k));
        prop_assert_eq!(c.add(&a, &CurvePoint::Infinity), a);
        prop_assert_eq!(c.add(&a, &c.neg(&a)), CurvePoint::Infinity);
        prop_assert_eq!(c.add(&a, &b), c.add(&b, &a));
        prop_assert_eq!(c.add(&c.add(&a, &b), &d), c.add(&a, &c.add(&b, &d)));
        prop_assert_eq!(c.mul(c.order() as i64, &a), CurvePoint::Infinity);
        prop_assert!(c.contains(&c.add(&a, &b)));
    }

    #[test]
    fn helix_residuals_and_degrees(c in curve(), seeds in prop::collection::vec(any::<usize>(), 3), quad in any::<bool>()) {
        let h = if quad {
            Helix::quadratic(c, PicClass::new(3, point(&c, seeds[0])), PicClass::new(3, point(&c, seeds[1]))).unwrap()
        } else {
            let s: Vec<PicClass> = seeds.iter().map(|&k| PicClass::new(2, point(&c, k))).collect();
            Helix::cubic(c, s[0], s[1], s[2]).unwrap()
        };
        let deg = if quad { 3 } else { 2 };
        for i in -10..10 {
            prop_assert_eq!(h.term(i).degree, deg);
            prop_assert_eq!(h.residual(i), PicClass::trivial());
        }
        for (k, s) in h.seeds().iter().enumerate() {
            prop_assert_eq!(h.term(k as i64), *s);
        }
    }

    #[test]
    fn eta_is_an_action(c in curve(), i in any::<usize>(), j in any::<usize>(), k in any::<usize>(), deg in 0i64..5) {
        let a = PicClass::new(0, point(&c, i));
        let b = PicClass::new(0, point(&c, j));
        let x = PicClass::new(deg, point(&c, k));
        let ab = pic_combination(&c, &[(1, &a), (1, &b)]);
        let lhs = eta_pullback(&c, &a, &eta_pullback(&c, &b, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, eta_pullback(&c, &ab, &x).unwrap());
        prop_assert_eq!(eta_pullback(&c, &PicClass::trivial(), &x).unwrap(), x);
    }

    #[test]
    fn coprime_order_gives_witness(c in curve(), i in any::<usize>(), j in any::<usize>()) {
        prop_assume!(c.order() % 3 != 0);
        let (l0, l1) = (PicClass::new(3, point(&c, i)), PicClass::new(3, point(&c, j)));
        prop_assert!(quadratic_periodicity(&c, &l0, &l1).unwrap().is_some());
    }

    #[test]
    fn stepwise_translation_agrees(c in curve(), seeds in prop::collection::vec(any::<usize>(), 3), n in -3i64..4) {
        let s: Vec<PicClass> = seeds.iter().map(|&k| PicClass::new(2, point(&c, k))).collect();
        let h = Helix::cubic(c, s[0], s[1], s[2]).unwrap();
        if let Translation::Admissible { seeds, pattern_ok } = translate_admissible(&h, n).unwrap() {
            prop_assert!(pattern_ok);
            if let Some(step) = translate_stepwise(&h, n).unwrap() {
                prop_assert_eq!(step, seeds);
            }
        }
    }
}

#[test]
fn random_gl2_is_invertible() {
    let f = PrimeField::new(5).unwrap();
    let mut r = rng(1);
    for _ in 0..50 {
        assert!(random_gl2(&f, &mut r).inverse().is_some());
    }
}
