//! Positive hermitian functionals vanishing on a *-ideal, with constants
//! chosen degree by degree and certified by exact positive definiteness.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::rewrite::RewriteSystem;
use crate::scalar::{Rational, Scalar};
use crate::word::Word;

/// How the search for each `c_d` starts; every policy doubles until the
/// moment matrix is positive definite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ConstantPolicy {
    /// `c_0 = 1`, and the search for `c_d` starts at `c_{d-1} / 2`.
    #[default]
    Geometric,
    /// Every search starts at 1.
    Unit,
}

impl ConstantPolicy {
    pub fn tag(self) -> &'static str {
        match self {
            ConstantPolicy::Geometric => "geometric",
            ConstantPolicy::Unit => "unit",
        }
    }
}

pub const MAX_DOUBLINGS: usize = 64;

/// A value of `L̃` or `L` as a linear form in the constants `c_0..c_D`.
type CForm<S> = Vec<S>;

pub struct MomentFunctional<S: Scalar> {
    gb: GroebnerBasis<S>,
    normal: RewriteSystem<S>,
    symmetric: bool,
    c: Vec<Rational>,
    cache: RwLock<HashMap<Word, CForm<S>>>,
}

impl<S: Scalar> Clone for MomentFunctional<S> {
    fn clone(&self) -> Self {
        MomentFunctional {
            gb: self.gb.clone(),
            normal: self.normal.clone(),
            symmetric: self.symmetric,
            c: self.c.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl<S: Scalar> std::fmt::Debug for MomentFunctional<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MomentFunctional")
            .field("c", &self.c)
            .field("max_eval_degree", &self.max_eval_degree())
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentMatrix<S: Scalar> {
    pub words: Vec<Word>,
    pub entries: Matrix<S>,
}

impl<S: Scalar> MomentMatrix<S> {
    pub fn is_positive_definite(&self) -> Result<bool> {
        self.entries.is_positive_definite()
    }
}

/// Hermitian positive definiteness of a moment matrix, by exact leading
/// principal minors.
pub fn is_positive_definite<S: Scalar>(m: &Matrix<S>) -> Result<bool> {
    m.is_positive_definite()
}

pub fn build_functional<S: Scalar>(gb: &GroebnerBasis<S>, degree: usize) -> Result<MomentFunctional<S>> {
    build_functional_with(gb, degree, ConstantPolicy::default())
}

pub fn build_functional_with<S: Scalar>(
    gb: &GroebnerBasis<S>,
    degree: usize,
    policy: ConstantPolicy,
) -> Result<MomentFunctional<S>> {
    check_preconditions(gb, degree)?;
    let mut f = MomentFunctional::unfinished(gb, Vec::with_capacity(degree + 1));
    let two = Rational::from_integer(2.into());
    for d in 0..=degree {
        let words = gb.standard_words_unchecked(d);
        let forms = f.form_matrix(&words, degree)?;
        let mut candidate = match (policy, f.c.last()) {
            (ConstantPolicy::Geometric, Some(prev)) => prev / &two,
            _ => Rational::one(),
        };
        let mut found = false;
        for _ in 0..=MAX_DOUBLINGS {
            let mut trial = f.c.clone();
            trial.push(candidate.clone());
            trial.resize(degree + 1, Rational::zero());
            if substitute(&forms, &trial).is_positive_definite()? {
                found = true;
                break;
            }
            candidate = &candidate * &two;
        }
        if !found {
            return Err(Error::NoPositiveConstant {
                degree: d,
                attempts: MAX_DOUBLINGS,
            });
        }
        f.c.push(candidate);
    }
    Ok(f)
}

fn check_preconditions<S: Scalar>(gb: &GroebnerBasis<S>, degree: usize) -> Result<()> {
    if gb.is_improper() {
        return Err(Error::ImproperIdeal);
    }
    if !gb.exact_up_to(2 * degree) {
        return Err(Error::Precondition(format!(
            "reduction is not certified up to degree {}",
            2 * degree
        )));
    }
    Ok(())
}

fn substitute<S: Scalar>(forms: &[Vec<CForm<S>>], c: &[Rational]) -> Matrix<S> {
    let n = forms.len();
    Matrix::from_fn(n, n, |i, j| dot(&forms[i][j], c))
}

fn dot<S: Scalar>(form: &CForm<S>, c: &[Rational]) -> S {
    let mut acc = S::zero();
    for (a, cj) in form.iter().zip(c) {
        if !a.is_zero() && !cj.is_zero() {
            acc = acc + a.mul_ref(&S::from_rational(cj.clone()));
        }
    }
    acc
}

impl<S: Scalar> MomentFunctional<S> {
    /// A functional with explicitly given constants. No positivity is
    /// checked here; [`MomentFunctional::verify`] certifies the result.
    pub fn with_constants(gb: &GroebnerBasis<S>, c: Vec<Rational>) -> Result<Self> {
        let Some(degree) = c.len().checked_sub(1) else {
            return Err(Error::Precondition("at least c_0 is required".into()));
        };
        check_preconditions(gb, degree)?;
        Ok(Self::unfinished(gb, c))
    }

    fn unfinished(gb: &GroebnerBasis<S>, c: Vec<Rational>) -> Self {
        let (normal, symmetric) = match gb.star_symmetric_system() {
            Some(sys) => (sys, true),
            None => (gb.system().clone(), false),
        };
        MomentFunctional {
            gb: gb.clone(),
            normal,
            symmetric,
            c,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// Whether `L̃` is read off the star-closed complement (analytic
    /// generators) rather than the basis's standard words.
    pub fn star_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn gb(&self) -> &GroebnerBasis<S> {
        &self.gb
    }

    pub fn constants(&self) -> &[Rational] {
        &self.c
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn max_eval_degree(&self) -> usize {
        2 * self.degree()
    }

    /// `L̃(w)` as a form in the constants, for `deg w ≤ 2·degree`: zero on
    /// the ideal, and on a normal word `c_j` if it is a square of degree
    /// `2j`, else zero.
    fn tilde_form(&self, w: &Word, degree: usize) -> CForm<S> {
        if let Some(f) = self.cache.read().expect("cache lock").get(w) {
            return f.clone();
        }
        let mut form = vec![S::zero(); degree + 1];
        let r = self.normal.reduce(&Polynomial::word(self.gb.g(), w.clone()));
        for (u, coef) in r.terms() {
            if u.is_square() {
                let j = u.degree() / 2;
                form[j] = form[j].clone() + coef.clone();
            }
        }
        self.cache
            .write()
            .expect("cache lock")
            .insert(w.clone(), form.clone());
        form
    }

    /// `L(w) = ½ L̃(w) + ½ conj(L̃(w*))` as a form in the constants.
    fn word_form(&self, w: &Word, degree: usize) -> CForm<S> {
        let a = self.tilde_form(w, degree);
        let b = self.tilde_form(&w.star(), degree);
        let half = S::from_rational(Rational::new(1.into(), 2.into()));
        a.into_iter()
            .zip(b)
            .map(|(x, y)| (x + y.conj()).mul_ref(&half))
            .collect()
    }

    fn form_matrix(&self, words: &[Word], degree: usize) -> Result<Vec<Vec<CForm<S>>>> {
        Ok(words
            .iter()
            .map(|u| {
                let us = u.star();
                words
                    .iter()
                    .map(|v| self.word_form(&us.concat(v), degree))
                    .collect()
            })
            .collect())
    }

    pub fn evaluate_word(&self, w: &Word) -> Result<S> {
        if w.degree() > self.max_eval_degree() {
            return Err(Error::DegreeBound {
                requested: w.degree(),
                bound: self.max_eval_degree(),
            });
        }
        Ok(dot(&self.word_form(w, self.degree()), &self.c))
    }

    pub fn evaluate(&self, p: &Polynomial<S>) -> Result<S> {
        let mut acc = S::zero();
        for (w, c) in p.terms() {
            let v = self.evaluate_word(w)?;
            if !v.is_zero() {
                acc = acc + c.mul_ref(&v);
            }
        }
        Ok(acc)
    }

    /// The hermitian matrix `L(star(u)·v)` over the given standard words.
    pub fn moment_matrix(&self, words: &[Word]) -> Result<MomentMatrix<S>> {
        for w in words {
            if !self.gb.is_standard(w) {
                return Err(Error::Precondition(format!(
                    "moment matrix rows must be standard monomials, got {w}"
                )));
            }
            if 2 * w.degree() > self.max_eval_degree() {
                return Err(Error::DegreeBound {
                    requested: 2 * w.degree(),
                    bound: self.max_eval_degree(),
                });
            }
        }
        let forms = self.form_matrix(words, self.degree())?;
        Ok(MomentMatrix {
            words: words.to_vec(),
            entries: substitute(&forms, &self.c),
        })
    }

    /// Checks hermitian symmetry on all words of degree `≤ 2d`, vanishing on
    /// the spanning set `u·rule·v` of the ideal in degree `≤ 2d`, and
    /// positive definiteness of the moment matrix in degree `≤ d`.
    pub fn verify(&self, d: usize) -> Result<FunctionalReport<S>> {
        if 2 * d > self.max_eval_degree() {
            return Err(Error::DegreeBound {
                requested: 2 * d,
                bound: self.max_eval_degree(),
            });
        }
        let g = self.gb.g();
        let words = Word::all_up_to_degree(g, 2 * d);
        let mut hermitian = true;
        for w in &words {
            if self.evaluate_word(&w.star())? != self.evaluate_word(w)?.conj() {
                hermitian = false;
                break;
            }
        }
        let mut vanishes = true;
        let mut ideal_elements = 0;
        'rules: for rule in self.gb.rules() {
            let rd = rule.degree().unwrap_or(0);
            if rd > 2 * d {
                continue;
            }
            let slack = 2 * d - rd;
            for left in 0..=slack {
                for u in Word::all_of_degree(g, left) {
                    for v in Word::all_up_to_degree(g, slack - left) {
                        ideal_elements += 1;
                        if !self.evaluate(&rule.sandwich(&u, &v))?.is_zero() {
                            vanishes = false;
                            break 'rules;
                        }
                    }
                }
            }
        }
        let std = self.gb.standard_monomials(d)?;
        let mm = self.moment_matrix(&std)?;
        let minors = mm.entries.leading_principal_minors()?;
        let positive_definite = mm.entries.is_hermitian()
            && minors.iter().all(|m| m.is_real() && m.real_part() > Rational::zero());
        Ok(FunctionalReport {
            degree: d,
            hermitian,
            words_checked: words.len(),
            vanishes_on_ideal: vanishes,
            ideal_elements_checked: ideal_elements,
            positive_definite,
            moment_size: std.len(),
            minors,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalReport<S: Scalar> {
    pub degree: usize,
    pub hermitian: bool,
    pub words_checked: usize,
    pub vanishes_on_ideal: bool,
    pub ideal_elements_checked: usize,
    pub positive_definite: bool,
    pub moment_size: usize,
    pub minors: Vec<S>,
}

impl<S: Scalar> FunctionalReport<S> {
    pub fn passed(&self) -> bool {
        self.hermitian && self.vanishes_on_ideal && self.positive_definite
    }
}
