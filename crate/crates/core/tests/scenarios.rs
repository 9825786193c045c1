use freestar::functional::{build_functional, build_functional_with, ConstantPolicy};
use freestar::gns::{bounded_family, build_witness, verify_witness};
use freestar::groebner::{complete, CodimVerdict, IdealPresentation, MembershipVerdict};
use freestar::quotients::{regular_representation, z_ideal};
use freestar::repvar::{commutant_type, left_vanishing_ideal, vanishing_ideal, CommutantLabel, MatrixTuple};
use freestar::scalar::{gauss, rat};
use freestar::trace::trace_obstruction;
use freestar::{parse_poly, GaussPoly, GaussianRational, Matrix, RatPoly, Rational};

fn p(s: &str, g: usize) -> RatPoly {
    parse_poly(s, g).unwrap()
}

fn ideal(g: usize, gens: &[&str]) -> IdealPresentation<Rational> {
    IdealPresentation::new(g, gens.iter().map(|s| p(s, g)).collect()).unwrap()
}

#[test]
fn commutator_pipeline() {
    let i = ideal(2, &["x1*x2 - x2*x1"]);
    let gb = complete(&i, 6).unwrap();
    assert!(gb.complete());
    assert_eq!(gb.rules().len(), 2);
    assert!(gb.star_split_check().unwrap().holds);
    assert_eq!(gb.member(&p("x1*x2*x1 - x1*x1*x2", 2)), MembershipVerdict::Member);
    assert_eq!(gb.member(&p("x1*x2' - x2'*x1", 2)), MembershipVerdict::NonMember);
    assert_eq!(gb.finite_codimension().0, CodimVerdict::Infinite);

    let l = build_functional(&gb, 2).unwrap();
    assert!(l.verify(2).unwrap().passed());

    let w = build_witness(&i, 1).unwrap();
    let probes = [p("x1", 2), p("x2'", 2), p("1", 2)];
    assert!(verify_witness(&w, &i, &probes).unwrap().passed());
}

#[test]
fn toeplitz_functional_needs_decreasing_constants() {
    let gb = complete(&ideal(1, &["x1'*x1 - 1"]), 6).unwrap();
    assert!(gb.complete());
    let l = build_functional(&gb, 3).unwrap();
    let report = l.verify(3).unwrap();
    assert!(report.passed(), "{report:?}");
    assert!(l.constants()[0] > l.constants()[1]);
    assert!(build_functional_with(&gb, 3, ConstantPolicy::Unit).is_err());
}

#[test]
fn gaussian_coefficients_are_supported() {
    let gens: Vec<GaussPoly> = vec![parse_poly("x1*x2 - i*x2*x1", 2).unwrap()];
    let i = IdealPresentation::new(2, gens).unwrap();
    let gb = complete(&i, 5).unwrap();
    assert!(gb.star_split_check().unwrap().holds);
    let l = build_functional(&gb, 2).unwrap();
    assert!(l.verify(2).unwrap().passed());
    let w = build_witness(&i, 1).unwrap();
    let probe: GaussPoly = parse_poly("x1 + i*x2", 2).unwrap();
    assert!(verify_witness(&w, &i, &[probe]).unwrap().passed());
}

#[test]
fn contractive_family_for_a_monomial_ideal() {
    let family = bounded_family(&ideal(2, &["x1*x1"]), 2).unwrap();
    assert_eq!(family.len(), 2);
    for s in &family {
        assert!(s.norm_sq_bound <= rat(1, 1));
        assert!(s.evaluate(&p("x1*x1", 2)).unwrap().is_zero());
    }
}

#[test]
fn weyl_relation_has_no_matrix_zeros() {
    assert_eq!(trace_obstruction(&p("x1*x2 - x2*x1 + 1", 2)), Some(rat(1, 1)));
    assert_eq!(trace_obstruction(&p("x1*x2 - x2*x1", 2)), None);
}

#[test]
fn irreducible_rotation_left_and_two_sided_agree() {
    let j = Matrix::from_rows(vec![vec![rat(0, 1), rat(-1, 1)], vec![rat(1, 1), rat(0, 1)]]).unwrap();
    let x = MatrixTuple::new(vec![j]).unwrap();
    assert_eq!(commutant_type(&x).unwrap().label, CommutantLabel::ComplexType);
    for v in [[rat(1, 1), rat(0, 1)], [rat(2, 1), rat(-3, 5)]] {
        let left = left_vanishing_ideal(&x, &v, 4).unwrap();
        assert_eq!(z_ideal(1, &left, 4).unwrap(), vanishing_ideal(&[x.clone()], 3).unwrap());
    }
}

#[test]
fn vanishing_ideal_of_a_pair_has_the_expected_quotient() {
    let a = Matrix::from_rows(vec![vec![gauss(0, 0), gauss(0, 1)], vec![gauss(0, 0), gauss(0, 0)]]).unwrap();
    let x = MatrixTuple::<GaussianRational>::new(vec![a]).unwrap();
    assert_eq!(commutant_type(&x).unwrap().label, CommutantLabel::FullComplex);
    let gens = vanishing_ideal(&[x], 4).unwrap();
    let gb = complete(&IdealPresentation::new(1, gens).unwrap(), 8).unwrap();
    assert_eq!(gb.finite_codimension(), (CodimVerdict::Finite, Some(4)));
    assert_eq!(regular_representation(&gb).unwrap().dim(), 4);
}
