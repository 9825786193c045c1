use freestar::groebner::{complete, IdealPresentation};
use freestar::quotients::{hat_member, regular_representation, toeplitz_canon};
use freestar::repvar::{evaluate_at, zero_class, MatrixTuple, ZeroClass};
use freestar::scalar::rat;
use freestar::span::two_sided_span;
use freestar::trace::trace_normal_form;
use freestar::word::compare_words;
use freestar::{format_poly, parse_poly, GaussianRational, Letter, Matrix, Polynomial, RatPoly, Rational, Word};
use num_traits::Zero;
use proptest::prelude::*;

fn letter(g: usize) -> impl Strategy<Value = Letter> {
    (1..=g as u16, any::<bool>()).prop_map(|(i, s)| Letter::new(i, s))
}

fn word(g: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(g), 0..=max_len).prop_map(Word::from_letters)
}

fn coeff() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly(g: usize, max_len: usize, terms: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec((word(g, max_len), coeff()), 0..=terms).prop_map(move |ts| Polynomial::from_terms(g, ts))
}

fn gauss_poly(g: usize, max_len: usize, terms: usize) -> impl Strategy<Value = Polynomial<GaussianRational>> {
    prop::collection::vec((word(g, max_len), coeff(), coeff()), 0..=terms).prop_map(move |ts| {
        Polynomial::from_terms(
            g,
            ts.into_iter().map(|(w, re, im)| (w, GaussianRational::new(re, im))),
        )
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| rat(v[i * n + j], 1)))
}

fn tuple(g: usize, n: usize) -> impl Strategy<Value = MatrixTuple<Rational>> {
    prop::collection::vec(matrix(n), g).prop_map(|ms| MatrixTuple::new(ms).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_is_graded_and_multiplicative(u in word(2, 4), v in word(2, 4), a in word(2, 2), b in word(2, 2)) {
        let ord = compare_words(&u, &v, 2).unwrap();
        if u.degree() != v.degree() {
            prop_assert_eq!(ord, u.degree().cmp(&v.degree()));
        }
        prop_assert_eq!(ord, compare_words(&u.sandwich(&a, &b), &v.sandwich(&a, &b), 2).unwrap());
        prop_assert_eq!(ord.reverse(), compare_words(&v, &u, 2).unwrap());
    }

    #[test]
    fn involution_reverses_products(p in gauss_poly(2, 3, 4), q in gauss_poly(2, 3, 4)) {
        prop_assert_eq!((&p * &q).star(), &q.star() * &p.star());
        prop_assert_eq!(p.star().star(), p.clone());
        prop_assert_eq!((&p + &q).star(), &p.star() + &q.star());
    }

    #[test]
    fn multiplication_is_associative_and_graded(p in poly(2, 3, 3), q in poly(2, 3, 3), r in poly(2, 3, 3)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        if !p.is_zero() && !q.is_zero() {
            prop_assert_eq!((&p * &q).degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
        }
    }

    #[test]
    fn format_then_parse_is_identity(p in poly(3, 4, 5)) {
        prop_assert_eq!(parse_poly::<Rational>(&format_poly(&p), 3).unwrap(), p);
    }

    #[test]
    fn gaussian_format_then_parse_is_identity(p in gauss_poly(2, 3, 4)) {
        prop_assert_eq!(parse_poly::<GaussianRational>(&format_poly(&p), 2).unwrap(), p);
    }

    #[test]
    fn trace_normal_form_preserves_traces(p in poly(2, 4, 5), x in tuple(2, 3)) {
        let lhs = evaluate_at(&p, &x).unwrap().trace();
        let rhs = evaluate_at(&trace_normal_form(&p), &x).unwrap().trace();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(trace_normal_form(&trace_normal_form(&p)), trace_normal_form(&p));
    }

    #[test]
    fn evaluation_is_a_star_homomorphism(p in poly(2, 3, 4), q in poly(2, 3, 4), x in tuple(2, 2)) {
        let ep = evaluate_at(&p, &x).unwrap();
        let eq = evaluate_at(&q, &x).unwrap();
        prop_assert_eq!(evaluate_at(&(&p * &q), &x).unwrap(), &ep * &eq);
        prop_assert_eq!(evaluate_at(&p.star(), &x).unwrap(), ep.adjoint());
        prop_assert_eq!(evaluate_at(&RatPoly::one(2), &x).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3), b in matrix(3)) {
        prop_assert_eq!((&a * &b).determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
    }

    #[test]
    fn kernel_vectors_are_annihilated(a in prop::collection::vec(-2i64..=2, 12)) {
        let m = Matrix::from_fn(3, 4, |i, j| rat(a[i * 4 + j], 1));
        let ker = m.kernel();
        prop_assert_eq!(ker.len(), 4 - m.rank());
        for v in ker {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn soft_zeros_are_multiplicative(p in poly(1, 2, 3), a in poly(1, 2, 2), b in poly(1, 2, 2)) {
        let x = MatrixTuple::new(vec![Matrix::from_rows(vec![vec![rat(0, 1), rat(1, 1)], vec![rat(0, 1), rat(0, 1)]]).unwrap()]).unwrap();
        if zero_class(&p, &x).unwrap() != ZeroClass::Nonzero {
            prop_assert_ne!(zero_class(&(&(&a * &p) * &b), &x).unwrap(), ZeroClass::Nonzero);
        }
        prop_assert_eq!(zero_class(&RatPoly::zero(1), &x).unwrap(), ZeroClass::Hard);
    }

    #[test]
    fn toeplitz_canonical_forms(p in poly(1, 5, 5)) {
        let c = toeplitz_canon(&p).unwrap();
        prop_assert_eq!(toeplitz_canon(&c).unwrap(), c.clone());
        for w in c.support() {
            let starred: Vec<bool> = w.letters().iter().map(|l| l.starred).collect();
            prop_assert!(starred.windows(2).all(|s| s[0] <= s[1]), "{} is not x^i x'^j", w);
        }
    }
}

fn commutator_gb() -> freestar::groebner::GroebnerBasis<Rational> {
    let gens = vec![parse_poly("x1*x2 - x2*x1", 2).unwrap()];
    complete(&IdealPresentation::new(2, gens).unwrap(), 6).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_is_idempotent_linear_and_sound(p in poly(2, 4, 4), q in poly(2, 4, 4), c in coeff()) {
        let gb = commutator_gb();
        let rp = gb.reduce(&p);
        prop_assert_eq!(gb.reduce(&rp), rp.clone());
        let mut combo = p.clone();
        combo.add_scaled(&q, &c);
        let mut expected = rp.clone();
        expected.add_scaled(&gb.reduce(&q), &c);
        prop_assert_eq!(gb.reduce(&combo), expected);
        prop_assert!(rp.support().all(|w| gb.is_standard(w)));
        let span = two_sided_span(2, &IdealPresentation::new(2, vec![parse_poly("x1*x2 - x2*x1", 2).unwrap()]).unwrap().star_generators(), 4);
        prop_assert!(span.contains(&(&p - &rp)));
    }

    #[test]
    fn basis_vanishes_where_generators_do(d1 in prop::collection::vec(-4i64..=4, 3), d2 in prop::collection::vec(-4i64..=4, 3)) {
        let diag = |d: &[i64]| Matrix::from_fn(3, 3, |i, j| if i == j { rat(d[i], 1) } else { rat(0, 1) });
        let x = MatrixTuple::new(vec![diag(&d1), diag(&d2)]).unwrap();
        for r in commutator_gb().rules() {
            prop_assert!(evaluate_at(r, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn regular_representation_is_multiplicative(p in poly(1, 3, 3), q in poly(1, 3, 3), iota in poly(1, 2, 2)) {
        let x = MatrixTuple::new(vec![Matrix::from_rows(vec![vec![rat(0, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]]).unwrap()]).unwrap();
        let gens = freestar::repvar::vanishing_ideal(&[x], 3).unwrap();
        let gb = complete(&IdealPresentation::new(1, gens.clone()).unwrap(), 6).unwrap();
        let quotient = regular_representation(&gb).unwrap();
        prop_assert_eq!(
            quotient.matrix_of(&(&p * &q)).unwrap(),
            &quotient.matrix_of(&p).unwrap() * &quotient.matrix_of(&q).unwrap()
        );
        let member = &(&iota * &gens[0]) + &gens[1];
        let shifted = &p + &member;
        prop_assert_eq!(quotient.matrix_of(&shifted).unwrap(), quotient.matrix_of(&p).unwrap());
        prop_assert_eq!(hat_member(&shifted, &quotient).unwrap(), hat_member(&p, &quotient).unwrap());
    }
}
