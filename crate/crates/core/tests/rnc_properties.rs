use proptest::prelude::*;
use rnc_core::exactgeom::{LinearSubspace, ProjPoint, Projectivity, Rng, Scalar};
use rnc_core::poly::{HomogeneousForm, MonomialBasis};
use rnc_core::rnc::{
    apply_projectivity, evaluate, gcd, intersection_degree, is_rnc, param, restrict_form,
    rnc_through_points, standard_rnc, BinaryForm, RationalCurve,
};

fn random_projectivity(n: usize, rng: &mut Rng) -> Projectivity {
    loop {
        if let Ok(g) = Projectivity::new((0..=n).map(|_| rng.vector(n + 1)).collect()) {
            return g;
        }
    }
}

fn random_rnc(n: usize, rng: &mut Rng) -> RationalCurve {
    apply_projectivity(&standard_rnc(n), &random_projectivity(n, rng))
}

fn linear_product(roots: &[(i64, i64)]) -> BinaryForm {
    roots
        .iter()
        .fold(BinaryForm::constant(Scalar::from_integer(1.into())), |acc, &(s, t)| {
            acc.mul(&BinaryForm::vanishing_at(&param(s, t)))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn curve_through_generic_points(n in 2usize..7, seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let pts: Vec<ProjPoint> = (0..n + 3).map(|_| ProjPoint::new(rng.nonzero_vector(n + 1)).unwrap()).collect();
        let (c, params) = rnc_through_points(&pts).unwrap();
        prop_assert!(is_rnc(&c));
        for (p, a) in pts.iter().zip(&params) {
            prop_assert_eq!(&evaluate(&c, a), p);
        }
    }

    #[test]
    fn span_of_curve_points_meets_in_those_points(n in 3usize..7, k in 0usize..3, seed in any::<u64>()) {
        prop_assume!(k + 2 <= n);
        let mut rng = Rng::new(seed);
        let c = random_rnc(n, &mut rng);
        let rows = (0..=k as i64).map(|i| evaluate(&c, &param(1, i + 2)).coords().to_vec()).collect();
        let l = LinearSubspace::from_rows(n, rows).unwrap();
        prop_assert_eq!(intersection_degree(&c, &l).unwrap(), k + 1);
    }

    #[test]
    fn gcd_of_products_with_common_factor(
        common in proptest::collection::vec((-9i64..10, 1i64..10), 0..4),
        f in proptest::collection::vec((10i64..20, 1i64..5), 1..3),
        g in proptest::collection::vec((-20i64..-10, 1i64..5), 1..3),
    ) {
        let h = linear_product(&common);
        let a = linear_product(&f).mul(&h);
        let b = linear_product(&g).mul(&h);
        prop_assert_eq!(gcd(&[a, b]).unwrap(), h.normalized());
    }
}

#[test]
fn intersection_degree_is_projectively_invariant() {
    let mut rng = Rng::new(101);
    for n in 3..6 {
        let c = random_rnc(n, &mut rng);
        let on_curve = evaluate(&c, &param(2, 5));
        let mut rows = vec![on_curve.coords().to_vec()];
        rows.push(rng.nonzero_vector(n + 1));
        let l = LinearSubspace::from_rows(n, rows).unwrap();
        let base = intersection_degree(&c, &l).unwrap();
        assert_eq!(base, 1);
        for _ in 0..10 {
            let g = random_projectivity(n, &mut rng);
            assert_eq!(intersection_degree(&apply_projectivity(&c, &g), &g.apply_subspace(&l)).unwrap(), base);
        }
    }
}

/// Restricting a degree-d form to a degree-n curve gives a binary form of degree dn that
/// agrees with the composition at every parameter.
#[test]
fn bezout_identity_on_random_pairs() {
    let mut rng = Rng::with_height(77, 50);
    for i in 0..100 {
        let n = 2 + i % 4;
        let d = 1 + i % 3;
        let basis = MonomialBasis::new(n + 1, d);
        let f = HomogeneousForm::from_coeffs(n + 1, d, rng.vector(basis.len()));
        let c = random_rnc(n, &mut rng);
        let r = restrict_form(&f, &c);
        assert_eq!(r.degree(), d * n);
        assert!(!r.is_zero());
        for _ in 0..3 {
            let a = ProjPoint::new(rng.nonzero_vector(2)).unwrap();
            let on_curve: Vec<Scalar> = c.forms().iter().map(|b| b.evaluate(&a)).collect();
            assert_eq!(r.evaluate(&a), f.evaluate(&on_curve));
        }
    }
}
