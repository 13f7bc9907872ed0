use proptest::prelude::*;

use octassoc::{
    additive_associator, additive_commutator, associator_between, cayley_dickson,
    multiplicative_associator, multiplicative_commutator, parse, schafer_residual,
    AssociatorMatrix, ExactOctonion, Expr, Octonion, ProductTree, Rational, Scalar,
};

type Q = ExactOctonion;

fn coeff() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Rational::from_ratio(p, q))
}

fn octonion() -> impl Strategy<Value = Q> {
    proptest::array::uniform8(coeff()).prop_map(Octonion::new)
}

fn nonzero() -> impl Strategy<Value = Q> {
    octonion().prop_filter("nonzero", |x| !x.is_zero())
}

fn one() -> Q {
    Q::one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugation_is_an_anti_involution(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert_eq!((&x * &y).conjugate(), &y.conjugate() * &x.conjugate());
    }

    #[test]
    fn norm_is_the_real_part_of_x_times_conjugate(x in octonion()) {
        let n = x.norm_sq();
        prop_assert_eq!(&x * &x.conjugate(), Q::real(n.clone()));
        prop_assert_eq!(n.is_zero(), x.is_zero());
    }

    #[test]
    fn norm_is_multiplicative(x in octonion(), y in octonion()) {
        prop_assert_eq!((&x * &y).norm_sq(), x.norm_sq() * y.norm_sq());
    }

    #[test]
    fn inverses_are_two_sided(x in nonzero()) {
        let inv = x.inverse().unwrap();
        prop_assert_eq!(&x * &inv, one());
        prop_assert_eq!(&inv * &x, one());
    }

    #[test]
    fn alternative_and_moufang_laws(x in octonion(), y in octonion(), z in octonion()) {
        let xx = &x * &x;
        prop_assert_eq!(&x * &(&x * &y), &xx * &y);
        prop_assert_eq!(&(&y * &x) * &x, &y * &xx);
        prop_assert_eq!(&(&(&x * &y) * &x) * &z, &x * &(&y * &(&x * &z)));
    }

    #[test]
    fn table_agrees_with_recursive_doubling(x in octonion(), y in octonion()) {
        let recursive = cayley_dickson::product(x.coeffs(), y.coeffs());
        prop_assert_eq!(x.multiply(&y), Q::from_slice(&recursive).unwrap());
    }

    #[test]
    fn additive_associator_is_alternating(x in octonion(), y in octonion()) {
        prop_assert!(additive_associator(&x, &x, &y).is_zero());
        prop_assert!(additive_associator(&x, &y, &x).is_zero());
        prop_assert!(additive_associator(&y, &x, &x).is_zero());
    }

    #[test]
    fn additive_commutator_is_imaginary(x in octonion(), y in octonion()) {
        prop_assert!(additive_commutator(&x, &y).is_imaginary());
    }

    #[test]
    fn associator_converts_bracketings(x in nonzero(), y in nonzero(), z in nonzero()) {
        let a = multiplicative_associator(&x, &y, &z).unwrap();
        let left = &(&x * &y) * &z;
        let right = &x * &(&y * &z);
        prop_assert_eq!(&left * &a, right.clone());
        prop_assert_eq!(left.clone(), &right * &a.conjugate());
        prop_assert_eq!(a.clone(), &left.inverse().unwrap() * &right);
        prop_assert_eq!(a.norm_sq(), <Rational as Scalar>::one());
        let z_inv = z.inverse().unwrap();
        let yx_inv = &y.inverse().unwrap() * &x.inverse().unwrap();
        prop_assert_eq!(left.inverse().unwrap(), &z_inv * &yx_inv);
        prop_assert_eq!(
            additive_associator(&x, &y, &z).is_zero(),
            a == one()
        );
    }

    #[test]
    fn commutator_converts_orders(x in nonzero(), y in nonzero()) {
        let c = multiplicative_commutator(&x, &y).unwrap();
        let xy = &x * &y;
        let yx = &y * &x;
        prop_assert_eq!(&xy * &c, yx.clone());
        prop_assert_eq!(xy, &yx * &c.conjugate());
        prop_assert_eq!(c.norm_sq(), <Rational as Scalar>::one());
        prop_assert_eq!(additive_commutator(&x, &y).is_zero(), c == one());
    }

    #[test]
    fn commutator_is_independent_of_bracketing(x in nonzero(), y in nonzero()) {
        let factors = [
            y.inverse().unwrap(),
            x.inverse().unwrap(),
            y.clone(),
            x.clone(),
        ];
        let c = multiplicative_commutator(&x, &y).unwrap();
        for tree in octassoc::enumerate_trees(4).unwrap() {
            prop_assert_eq!(tree.evaluate(&factors).unwrap(), c.clone());
        }
    }

    #[test]
    fn schafer_identity(a in octonion(), x in octonion(), y in octonion(), z in octonion()) {
        prop_assert!(schafer_residual(&a, &x, &y, &z).is_zero());
    }

    #[test]
    fn two_tree_associator_is_the_multiplicative_associator(
        x in nonzero(), y in nonzero(), z in nonzero()
    ) {
        let f = [x.clone(), y.clone(), z.clone()];
        let a = associator_between(&ProductTree::left_comb(3), &ProductTree::right_comb(3), &f)
            .unwrap();
        prop_assert_eq!(a, multiplicative_associator(&x, &y, &z).unwrap());
    }

    #[test]
    fn matrix_invariants(factors in proptest::collection::vec(nonzero(), 3..=5)) {
        let m = AssociatorMatrix::new(&factors).unwrap();
        let zero = Rational::from_ratio(0, 1);
        prop_assert!(m.has_unit_diagonal(&zero).unwrap());
        prop_assert!(m.is_conjugate_symmetric(&zero).unwrap());
        prop_assert!(m.all_unit_norm(&zero).unwrap());
        for i in 0..m.size() {
            for j in 0..m.size() {
                prop_assert_eq!(&(&m.products()[i] * m.entry(i, j)), &m.products()[j]);
            }
        }
    }

    #[test]
    fn text_format_round_trips(x in octonion()) {
        prop_assert_eq!(x.to_string().parse::<Q>().unwrap(), x);
    }

    #[test]
    fn float_text_format_round_trips(c in proptest::array::uniform8(-1e6f64..1e6)) {
        let x = Octonion::new(c);
        prop_assert_eq!(x.to_string().parse::<Octonion<f64>>().unwrap(), x);
    }
}

fn expr_strategy() -> impl Strategy<Value = Expr<Rational>> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["x", "y", "z", "w_2", "e8"]).prop_map(Expr::var),
        octonion().prop_map(Expr::Literal),
        (0usize..8).prop_map(|k| Expr::Literal(Q::unit(k))),
    ];
    leaf.prop_recursive(5, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::product(l, r)),
            inner.clone().prop_map(Expr::conj),
            inner.prop_map(Expr::inv),
        ]
    })
}

proptest! {
    #[test]
    fn rendered_expressions_reparse(expr in expr_strategy()) {
        let parsed = parse::<Rational>(&expr.to_string()).unwrap();
        prop_assert_eq!(parsed.expr, expr);
        prop_assert!(parsed.defaulted.is_empty());
    }
}

#[test]
fn parallel_matrix_matches_sequential_evaluation() {
    let mut rng = octassoc::sample::case_rng(5, 0);
    let factors: Vec<Q> = (0..6)
        .map(|_| octassoc::sample::nonzero_octonion(&mut rng))
        .collect();
    let m = AssociatorMatrix::new(&factors).unwrap();
    let trees = m.trees().to_vec();
    for (i, ti) in trees.iter().enumerate().step_by(7) {
        for (j, tj) in trees.iter().enumerate().step_by(5) {
            let direct = associator_between(ti, tj, &factors).unwrap();
            assert_eq!(m.entry(i, j), &direct);
        }
    }
    assert_eq!(m, AssociatorMatrix::new(&factors).unwrap());
}
