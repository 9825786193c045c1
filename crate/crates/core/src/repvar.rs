//! Matrix tuples: evaluation, hard and soft zeros, vanishing ideals and
//! commutant typing.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::scalar::{FieldMode, Rational, Scalar};
use crate::word::{Letter, Word};

/// `g` square matrices of one size; the adjoint of each is its conjugate
/// transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTuple<S: Scalar> {
    n: usize,
    mats: Vec<Matrix<S>>,
}

impl<S: Scalar> MatrixTuple<S> {
    pub fn new(mats: Vec<Matrix<S>>) -> Result<Self> {
        let Some(first) = mats.first() else {
            return Err(Error::Dimension("a tuple needs at least one matrix".into()));
        };
        let n = first.rows();
        if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Dimension("tuple entries must be square of one size".into()));
        }
        Ok(MatrixTuple { n, mats })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> usize {
        self.mats.len()
    }

    pub fn field(&self) -> FieldMode {
        S::FIELD
    }

    pub fn matrices(&self) -> &[Matrix<S>] {
        &self.mats
    }

    pub fn adjoints(&self) -> Vec<Matrix<S>> {
        self.mats.iter().map(Matrix::adjoint).collect()
    }

    /// The tuple with each matrix multiplied by `c`.
    pub fn scaled(&self, c: &S) -> Self {
        MatrixTuple {
            n: self.n,
            mats: self.mats.iter().map(|m| m.scale(c)).collect(),
        }
    }
}

/// Evaluates `p` with `x_i ↦ ops[i-1]` and `x_i* ↦ adjs[i-1]`.
pub fn evaluate_with<S: Scalar>(p: &Polynomial<S>, ops: &[Matrix<S>], adjs: &[Matrix<S>]) -> Result<Matrix<S>> {
    if ops.len() != p.g() || adjs.len() != p.g() {
        return Err(Error::AlgebraMismatch {
            left: p.g(),
            right: ops.len(),
        });
    }
    let n = ops
        .first()
        .map(Matrix::rows)
        .ok_or_else(|| Error::Dimension("no matrices".into()))?;
    let mut cache: HashMap<Word, Matrix<S>> = HashMap::new();
    let mut out = Matrix::zeros(n, n);
    for (w, c) in p.terms() {
        let m = word_matrix(w, ops, adjs, n, &mut cache);
        out = &out + &m.scale(c);
    }
    Ok(out)
}

fn letter_matrix<'a, S: Scalar>(l: Letter, ops: &'a [Matrix<S>], adjs: &'a [Matrix<S>]) -> &'a Matrix<S> {
    let i = usize::from(l.index) - 1;
    if l.starred {
        &adjs[i]
    } else {
        &ops[i]
    }
}

fn word_matrix<S: Scalar>(
    w: &Word,
    ops: &[Matrix<S>],
    adjs: &[Matrix<S>],
    n: usize,
    cache: &mut HashMap<Word, Matrix<S>>,
) -> Matrix<S> {
    if let Some(m) = cache.get(w) {
        return m.clone();
    }
    let m = match w.letters().split_last() {
        None => Matrix::identity(n),
        Some((&last, init)) => {
            let prefix = word_matrix(&Word::from_letters(init.to_vec()), ops, adjs, n, cache);
            &prefix * letter_matrix(last, ops, adjs)
        }
    };
    cache.insert(w.clone(), m.clone());
    m
}

/// The *-homomorphic evaluation `p(X)`.
pub fn evaluate_at<S: Scalar>(p: &Polynomial<S>, x: &MatrixTuple<S>) -> Result<Matrix<S>> {
    evaluate_with(p, &x.mats, &x.adjoints())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZeroClass {
    Hard,
    SoftOnly,
    Nonzero,
}

impl ZeroClass {
    pub fn tag(self) -> &'static str {
        match self {
            ZeroClass::Hard => "hard",
            ZeroClass::SoftOnly => "soft_only",
            ZeroClass::Nonzero => "nonzero",
        }
    }
}

pub fn zero_class<S: Scalar>(p: &Polynomial<S>, x: &MatrixTuple<S>) -> Result<ZeroClass> {
    let m = evaluate_at(p, x)?;
    Ok(if m.is_zero() {
        ZeroClass::Hard
    } else if m.determinant()?.is_zero() {
        ZeroClass::SoftOnly
    } else {
        ZeroClass::Nonzero
    })
}

/// Kernel of the linear map given by `columns` (one vector per word), as
/// polynomials; words in increasing order give each kernel vector a unique
/// leading word.
fn kernel_polys<S: Scalar>(g: usize, words: &[Word], columns: &[Vec<S>]) -> Vec<Polynomial<S>> {
    let rows = columns.first().map_or(0, Vec::len);
    let m = Matrix::from_fn(rows, words.len(), |i, j| columns[j][i].clone());
    m.kernel()
        .into_iter()
        .map(|v| Polynomial::from_terms(g, words.iter().cloned().zip(v)))
        .collect()
}

fn word_images<S: Scalar>(x: &MatrixTuple<S>, words: &[Word]) -> Vec<Matrix<S>> {
    let adjs = x.adjoints();
    let mut cache = HashMap::new();
    words
        .iter()
        .map(|w| word_matrix(w, &x.mats, &adjs, x.n, &mut cache))
        .collect()
}

fn check_common_g<S: Scalar>(tuples: &[MatrixTuple<S>]) -> Result<usize> {
    let g = tuples
        .first()
        .map(MatrixTuple::g)
        .ok_or_else(|| Error::Precondition("at least one tuple is required".into()))?;
    if let Some(t) = tuples.iter().find(|t| t.g() != g) {
        return Err(Error::AlgebraMismatch { left: g, right: t.g() });
    }
    Ok(g)
}

/// Reduced echelon basis of `{p : deg p ≤ d, p(X) = 0 for all X in tuples}`.
pub fn vanishing_ideal<S: Scalar>(tuples: &[MatrixTuple<S>], d: usize) -> Result<Vec<Polynomial<S>>> {
    let g = check_common_g(tuples)?;
    let words = Word::all_up_to_degree(g, d);
    let mut columns: Vec<Vec<S>> = vec![Vec::new(); words.len()];
    for x in tuples {
        for (col, m) in columns.iter_mut().zip(word_images(x, &words)) {
            col.extend(m.entries().iter().cloned());
        }
    }
    Ok(kernel_polys(g, &words, &columns))
}

/// Reduced echelon basis of `{p : deg p ≤ d, p(X)v = 0}`.
pub fn left_vanishing_ideal<S: Scalar>(x: &MatrixTuple<S>, v: &[S], d: usize) -> Result<Vec<Polynomial<S>>> {
    if v.len() != x.n() {
        return Err(Error::Dimension(format!("vector of length {} for size {}", v.len(), x.n())));
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::Precondition("the vector must be nonzero".into()));
    }
    let words = Word::all_up_to_degree(x.g(), d);
    let columns: Vec<Vec<S>> = word_images(x, &words).iter().map(|m| m.mul_vec(v)).collect();
    Ok(kernel_polys(x.g(), &words, &columns))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommutantLabel {
    Reducible,
    FullReal,
    ComplexType,
    QuaternionType,
    FullComplex,
}

impl CommutantLabel {
    pub fn tag(self) -> &'static str {
        match self {
            CommutantLabel::Reducible => "reducible",
            CommutantLabel::FullReal => "full_real",
            CommutantLabel::ComplexType => "complex_type",
            CommutantLabel::QuaternionType => "quaternion_type",
            CommutantLabel::FullComplex => "full_complex",
        }
    }

    pub fn is_irreducible(self) -> bool {
        self != CommutantLabel::Reducible
    }
}

impl fmt::Display for CommutantLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantType {
    pub n: usize,
    pub commutant_dim: usize,
    /// Dimension of the algebra generated by `1, X_i, X_i*`.
    pub algebra_dim: usize,
    pub label: CommutantLabel,
}

fn flatten<S: Scalar>(m: &Matrix<S>) -> Vec<S> {
    m.entries().to_vec()
}

fn unflatten<S: Scalar>(n: usize, v: &[S]) -> Matrix<S> {
    Matrix::from_fn(n, n, |i, j| v[i * n + j].clone())
}

/// Basis of `{T : T·Y = Y·T for all Y in gens}`.
pub fn commutant_basis<S: Scalar>(n: usize, gens: &[Matrix<S>]) -> Vec<Matrix<S>> {
    let nn = n * n;
    let mut rows: Vec<Vec<S>> = Vec::new();
    for y in gens {
        // (T·Y − Y·T)_{ab} = Σ_k T_{ak} Y_{kb} − Y_{ak} T_{kb}
        for a in 0..n {
            for b in 0..n {
                let mut row = vec![S::zero(); nn];
                for k in 0..n {
                    row[a * n + k] = row[a * n + k].clone() + y[(k, b)].clone();
                    row[k * n + b] = row[k * n + b].clone() - y[(a, k)].clone();
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return (0..nn)
            .map(|k| {
                let mut v = vec![S::zero(); nn];
                v[k] = S::one();
                unflatten(n, &v)
            })
            .collect();
    }
    let sys = Matrix::from_rows(rows).expect("rectangular system");
    sys.kernel().iter().map(|v| unflatten(n, v)).collect()
}

/// Dimension of the unital algebra generated by `gens`.
pub fn generated_algebra_dim<S: Scalar>(n: usize, gens: &[Matrix<S>]) -> usize {
    let mut span: Vec<(usize, Vec<S>)> = Vec::new();
    let mut queue = vec![Matrix::identity(n)];
    while let Some(m) = queue.pop() {
        if insert_vector(&mut span, flatten(&m)) {
            for y in gens {
                queue.push(y * &m);
            }
        }
    }
    span.len()
}

/// Echelon insertion of a dense vector; returns whether it was independent.
fn insert_vector<S: Scalar>(span: &mut Vec<(usize, Vec<S>)>, mut v: Vec<S>) -> bool {
    for (pivot, row) in span.iter() {
        if !v[*pivot].is_zero() {
            let f = v[*pivot].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a = a.clone() - f.mul_ref(b);
                }
            }
        }
    }
    let Some(p) = v.iter().position(|a| !a.is_zero()) else {
        return false;
    };
    let inv = S::one() / v[p].clone();
    let v: Vec<S> = v.iter().map(|a| a.mul_ref(&inv)).collect();
    for (_, row) in span.iter_mut() {
        if !row[p].is_zero() {
            let f = row[p].clone();
            for (a, b) in row.iter_mut().zip(&v) {
                if !b.is_zero() {
                    *a = a.clone() - f.mul_ref(b);
                }
            }
        }
    }
    span.push((p, v));
    true
}

/// Classifies the tuple by its commutant. Over `Q` (standing for the reals)
/// the tuple is irreducible iff the commutant is a division algebra:
/// `R` (dim 1), `C` (dim 2, `T² = αT + β` with `α² + 4β < 0`) or `H`
/// (dim 4, central, trace form negative definite on trace-zero elements).
/// Over `Q(i)` irreducible means a one-dimensional commutant.
pub fn commutant_type<S: Scalar>(x: &MatrixTuple<S>) -> Result<CommutantType> {
    let n = x.n();
    let mut gens = x.matrices().to_vec();
    gens.extend(x.adjoints());
    let basis = commutant_basis(n, &gens);
    let algebra_dim = generated_algebra_dim(n, &gens);
    let dim = basis.len();
    let label = match (S::FIELD, dim) {
        (FieldMode::GaussianRational, 1) => CommutantLabel::FullComplex,
        (FieldMode::GaussianRational, _) => CommutantLabel::Reducible,
        (FieldMode::Rational, 1) => CommutantLabel::FullReal,
        (FieldMode::Rational, 2) => {
            if is_complex_field(n, &basis)? {
                CommutantLabel::ComplexType
            } else {
                CommutantLabel::Reducible
            }
        }
        (FieldMode::Rational, 4) => {
            if is_quaternion_algebra(n, &basis)? {
                CommutantLabel::QuaternionType
            } else {
                CommutantLabel::Reducible
            }
        }
        _ => CommutantLabel::Reducible,
    };
    Ok(CommutantType {
        n,
        commutant_dim: dim,
        algebra_dim,
        label,
    })
}

/// Coordinates of `target` in the span of `basis`, if it lies there.
fn express<S: Scalar>(basis: &[Matrix<S>], target: &Matrix<S>) -> Option<Vec<S>> {
    let cols: Vec<Vec<S>> = basis.iter().map(flatten).collect();
    let t = flatten(target);
    let k = cols.len();
    let aug = Matrix::from_fn(t.len(), k + 1, |i, j| if j < k { cols[j][i].clone() } else { t[i].clone() });
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut coords = vec![S::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        coords[c] = r[(row, k)].clone();
    }
    Some(coords)
}

fn is_complex_field<S: Scalar>(n: usize, basis: &[Matrix<S>]) -> Result<bool> {
    let id = Matrix::identity(n);
    let t = basis
        .iter()
        .find(|b| express(&[id.clone()], b).is_none())
        .ok_or_else(|| Error::Internal("commutant lacks a non-scalar element".into()))?;
    let coords = express(&[t.clone(), id], &(t * t))
        .ok_or_else(|| Error::Internal("commutant is not closed under products".into()))?;
    let (alpha, beta) = (coords[0].real_part(), coords[1].real_part());
    let four = Rational::from_integer(4.into());
    Ok(&alpha * &alpha + four * beta < Rational::zero())
}

fn is_quaternion_algebra<S: Scalar>(n: usize, basis: &[Matrix<S>]) -> Result<bool> {
    // Center must be the scalars.
    let center = commutant_basis(n, basis)
        .into_iter()
        .filter(|z| express(basis, z).is_some())
        .count();
    if center != 1 {
        return Ok(false);
    }
    // Trace-zero part of the commutant.
    let traces: Vec<S> = basis.iter().map(Matrix::trace).collect();
    let tr_row = Matrix::from_rows(vec![traces]).expect("one row");
    let pure: Vec<Matrix<S>> = tr_row
        .kernel()
        .iter()
        .map(|v| {
            v.iter()
                .zip(basis)
                .fold(Matrix::zeros(n, n), |acc, (c, b)| &acc + &b.scale(c))
        })
        .collect();
    if pure.len() != 3 {
        return Ok(false);
    }
    let neg_form = Matrix::from_fn(3, 3, |i, j| -(&pure[i] * &pure[j]).trace());
    neg_form.is_positive_definite()
}

/// Whether the image algebra has no zero divisors, i.e. every soft zero of
/// the tuple is hard. For an irreducible tuple the image algebra is
/// `M_k(D)` with `D` the commutant, so this holds iff `k = 1`.
pub fn soft_equals_hard<S: Scalar>(x: &MatrixTuple<S>) -> Result<bool> {
    let t = commutant_type(x)?;
    if !t.label.is_irreducible() {
        return Err(Error::Precondition("the tuple is reducible".into()));
    }
    Ok(t.algebra_dim == t.commutant_dim)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftRepOutcome {
    pub index: usize,
    pub soft_zero: bool,
    pub hard_zero: bool,
    pub soft_equals_hard: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoftConditionReport {
    pub reps: Vec<SoftRepOutcome>,
    /// Every irreducible soft zero has `I_soft = I_hard`.
    pub soft_equals_hard_holds: bool,
    /// Every soft zero is a hard zero.
    pub soft_implies_hard_holds: bool,
}

pub fn soft_condition_check<S: Scalar>(p: &Polynomial<S>, reps: &[MatrixTuple<S>]) -> Result<SoftConditionReport> {
    let mut out = Vec::with_capacity(reps.len());
    for (index, x) in reps.iter().enumerate() {
        let seh = soft_equals_hard(x)?;
        let class = zero_class(p, x)?;
        out.push(SoftRepOutcome {
            index,
            soft_zero: class != ZeroClass::Nonzero,
            hard_zero: class == ZeroClass::Hard,
            soft_equals_hard: seh,
        });
    }
    let soft: Vec<&SoftRepOutcome> = out.iter().filter(|r| r.soft_zero).collect();
    Ok(SoftConditionReport {
        soft_equals_hard_holds: soft.iter().all(|r| r.soft_equals_hard),
        soft_implies_hard_holds: soft.iter().all(|r| r.hard_zero),
        reps: out,
    })
}

/// `Σ (x_i − λ_i)*(x_i − λ_i) + Σ (x_i − λ_i)(x_i − λ_i)*`, whose zeros are
/// exactly the scalar point `λ`.
pub fn point_polynomial<S: Scalar>(lambda: &[S]) -> Polynomial<S> {
    let g = lambda.len();
    let mut out = Polynomial::zero(g);
    for (i, l) in lambda.iter().enumerate() {
        let shifted = &Polynomial::var(g, (i + 1) as u16) - &Polynomial::constant(g, l.clone());
        out = &out + &(&shifted.star() * &shifted);
        out = &out + &(&shifted * &shifted.star());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, rat, GaussianRational};
    use crate::syntax::parse_poly;

    type P = Polynomial<Rational>;

    fn p(s: &str, g: usize) -> P {
        parse_poly(s, g).unwrap()
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect()).unwrap()
    }

    fn jordan() -> MatrixTuple<Rational> {
        MatrixTuple::new(vec![m(&[&[0, 1], &[0, 0]])]).unwrap()
    }

    fn rotation() -> MatrixTuple<Rational> {
        MatrixTuple::new(vec![m(&[&[0, -1], &[1, 0]])]).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let x = jordan();
        assert_eq!(evaluate_at(&p("x1'*x1 - 1", 1), &x).unwrap(), m(&[&[-1, 0], &[0, 0]]));
        assert_eq!(evaluate_at(&p("1", 1), &x).unwrap(), Matrix::identity(2));
        let pair = MatrixTuple::new(vec![m(&[&[1, 2], &[0, 3]]), m(&[&[0, 1], &[5, -1]])]).unwrap();
        let v = evaluate_at(&p("x1*x2 - x2*x1 + 1", 2), &pair).unwrap();
        assert_eq!(v.trace(), rat(2, 1));
    }

    #[test]
    fn zero_classes() {
        assert_eq!(zero_class(&p("x1", 1), &jordan()).unwrap(), ZeroClass::SoftOnly);
        let id = MatrixTuple::new(vec![Matrix::<Rational>::identity(2)]).unwrap();
        assert_eq!(zero_class(&p("x1'*x1 - 1", 1), &id).unwrap(), ZeroClass::Hard);
        assert_eq!(zero_class(&p("x1 + 1", 1), &jordan()).unwrap(), ZeroClass::Nonzero);
        let lambda = [rat(2, 1), rat(-1, 3)];
        let point = MatrixTuple::new(lambda.iter().map(|l| Matrix::from_rows(vec![vec![l.clone()]]).unwrap()).collect()).unwrap();
        assert_eq!(zero_class(&point_polynomial(&lambda), &point).unwrap(), ZeroClass::Hard);
    }

    #[test]
    fn vanishing_ideal_examples() {
        let zero = MatrixTuple::new(vec![m(&[&[0]])]).unwrap();
        assert_eq!(vanishing_ideal(&[zero], 1).unwrap(), vec![p("x1", 1), p("x1'", 1)]);
        let one = MatrixTuple::new(vec![m(&[&[1]])]).unwrap();
        assert_eq!(vanishing_ideal(&[one], 1).unwrap(), vec![p("x1 - 1", 1), p("x1' - 1", 1)]);
        let v = vanishing_ideal(&[jordan()], 2).unwrap();
        let span = crate::span::LinearSpan::from_polys(1, &v);
        assert!(span.contains(&p("x1^2", 1)));
        assert!(span.contains(&p("x1'^2", 1)));
        assert!(!span.contains(&p("x1*x1' - x1'*x1", 1)));
    }

    #[test]
    fn left_vanishing_examples() {
        let zero = MatrixTuple::new(vec![m(&[&[0]])]).unwrap();
        assert_eq!(
            left_vanishing_ideal(&zero, &[rat(1, 1)], 1).unwrap(),
            vec![p("x1", 1), p("x1'", 1)]
        );
        let left = left_vanishing_ideal(&jordan(), &[rat(1, 1), rat(0, 1)], 1).unwrap();
        let span = crate::span::LinearSpan::from_polys(1, &left);
        assert!(span.contains(&p("x1", 1)));
        assert!(!span.contains(&p("x1'", 1)));
        assert!(left_vanishing_ideal(&jordan(), &[rat(0, 1), rat(0, 1)], 1).is_err());
        for q in vanishing_ideal(&[jordan()], 3).unwrap() {
            assert!(span_of(&jordan(), &[rat(0, 1), rat(1, 1)], 3).contains(&q));
        }
    }

    fn span_of(x: &MatrixTuple<Rational>, v: &[Rational], d: usize) -> crate::span::LinearSpan<Rational> {
        crate::span::LinearSpan::from_polys(x.g(), &left_vanishing_ideal(x, v, d).unwrap())
    }

    #[test]
    fn commutant_examples() {
        let t = commutant_type(&jordan()).unwrap();
        assert_eq!((t.commutant_dim, t.algebra_dim, t.label), (1, 4, CommutantLabel::FullReal));
        let diag = MatrixTuple::new(vec![m(&[&[0, 0], &[0, 1]])]).unwrap();
        let t = commutant_type(&diag).unwrap();
        assert_eq!((t.commutant_dim, t.label), (2, CommutantLabel::Reducible));
        let t = commutant_type(&rotation()).unwrap();
        assert_eq!((t.commutant_dim, t.algebra_dim, t.label), (2, 2, CommutantLabel::ComplexType));
        assert!(!soft_equals_hard(&jordan()).unwrap());
        assert!(soft_equals_hard(&rotation()).unwrap());
        assert!(soft_equals_hard(&MatrixTuple::new(vec![m(&[&[7]])]).unwrap()).unwrap());
        assert!(soft_equals_hard(&diag).is_err());
    }

    #[test]
    fn quaternion_type() {
        // Left multiplication by i and j on H = R^4.
        let qi = m(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let qj = m(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]);
        let x = MatrixTuple::new(vec![qi, qj]).unwrap();
        let t = commutant_type(&x).unwrap();
        assert_eq!((t.commutant_dim, t.algebra_dim, t.label), (4, 4, CommutantLabel::QuaternionType));
        assert!(soft_equals_hard(&x).unwrap());
        // Two copies of the rotation: commutant M_2(R) ⊗ ... is 4-dimensional but not division.
        let j = m(&[&[0, -1], &[1, 0]]);
        let twice = MatrixTuple::new(vec![j.direct_sum(&j)]).unwrap();
        assert_eq!(commutant_type(&twice).unwrap().label, CommutantLabel::Reducible);
    }

    #[test]
    fn complex_field_commutants() {
        let jm: Matrix<GaussianRational> = Matrix::from_rows(vec![
            vec![gauss(0, 0), gauss(-1, 0)],
            vec![gauss(1, 0), gauss(0, 0)],
        ])
        .unwrap();
        let t = commutant_type(&MatrixTuple::new(vec![jm]).unwrap()).unwrap();
        assert_eq!(t.label, CommutantLabel::Reducible);
        let e12: Matrix<GaussianRational> = Matrix::from_rows(vec![
            vec![gauss(0, 0), gauss(0, 1)],
            vec![gauss(0, 0), gauss(0, 0)],
        ])
        .unwrap();
        let t = commutant_type(&MatrixTuple::new(vec![e12]).unwrap()).unwrap();
        assert_eq!((t.commutant_dim, t.algebra_dim, t.label), (1, 4, CommutantLabel::FullComplex));
    }

    #[test]
    fn soft_conditions() {
        let r = soft_condition_check(&p("x1", 1), &[jordan()]).unwrap();
        assert!(!r.soft_equals_hard_holds);
        let lambda = [rat(3, 2)];
        let point = MatrixTuple::new(vec![Matrix::from_rows(vec![lambda.to_vec()]).unwrap()]).unwrap();
        let r = soft_condition_check(&point_polynomial(&lambda), &[point]).unwrap();
        assert!(r.soft_equals_hard_holds && r.soft_implies_hard_holds);
        assert!(r.reps[0].soft_zero && r.reps[0].hard_zero);
        let r = soft_condition_check(&p("x1 + 5", 1), &[rotation()]).unwrap();
        assert!(r.reps.iter().all(|o| !o.soft_zero));
        assert!(r.soft_equals_hard_holds && r.soft_implies_hard_holds);
    }
}
