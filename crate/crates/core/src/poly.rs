//! Polynomials in the free *-algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::word::{Letter, Word};

/// Shape of a polynomial's support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Analytic,
    Antianalytic,
    Constant,
    Mixed,
}

/// A finitely supported map from words to nonzero coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by the monomial order, so iteration
/// is deterministic and the last entry is the leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<S: Scalar> {
    g: usize,
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(g: usize) -> Self {
        Polynomial {
            g,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(g: usize) -> Self {
        Self::constant(g, S::one())
    }

    pub fn constant(g: usize, c: S) -> Self {
        Self::monomial(g, Word::one(), c)
    }

    pub fn monomial(g: usize, w: Word, c: S) -> Self {
        let mut p = Self::zero(g);
        p.add_term(w, c);
        p
    }

    pub fn word(g: usize, w: Word) -> Self {
        Self::monomial(g, w, S::one())
    }

    pub fn letter(g: usize, l: Letter) -> Self {
        Self::word(g, Word::letter(l))
    }

    /// `x_i`
    pub fn var(g: usize, i: u16) -> Self {
        Self::letter(g, Letter::x(i))
    }

    /// `x_i*`
    pub fn var_star(g: usize, i: u16) -> Self {
        Self::letter(g, Letter::x_star(i))
    }

    pub fn from_terms(g: usize, terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut p = Self::zero(g);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Checks that every letter index is at most `g`.
    pub fn validate(&self) -> Result<()> {
        for w in self.terms.keys() {
            let m = usize::from(w.max_index());
            if m > self.g {
                return Err(Error::VariableCount {
                    expected: self.g,
                    found: m,
                });
            }
        }
        Ok(())
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &S)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, S> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = &Word> {
        self.terms.keys()
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::degree)
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &Polynomial<S>, c: &S) {
        debug_assert_eq!(self.g, other.g);
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a.mul_ref(c));
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.g);
        }
        Polynomial {
            g: self.g,
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.mul_ref(c)))
                .collect(),
        }
    }

    /// The `≺`-maximal word and its coefficient.
    pub fn leading_term(&self) -> Result<(Word, S)> {
        self.terms
            .iter()
            .next_back()
            .map(|(w, c)| (w.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.terms.values().next_back()
    }

    /// Scales so that the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&(S::one() / c.clone())),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &S::one());
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.g);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.mul_ref(b));
            }
        }
        Ok(out)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.g != other.g {
            return Err(Error::AlgebraMismatch {
                left: self.g,
                right: other.g,
            });
        }
        Ok(())
    }

    /// `u · self · v` for words `u`, `v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> Self {
        Polynomial {
            g: self.g,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(u, v), c.clone()))
                .collect(),
        }
    }

    /// The involution: conjugate coefficients, star every word.
    pub fn star(&self) -> Self {
        Polynomial {
            g: self.g,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.star(), c.conj()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.g);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn homogeneous_components(&self) -> BTreeMap<usize, Polynomial<S>> {
        let mut out: BTreeMap<usize, Polynomial<S>> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.degree())
                .or_insert_with(|| Polynomial::zero(self.g))
                .terms
                .insert(w.clone(), c.clone());
        }
        out
    }

    /// The top-degree homogeneous component.
    pub fn leading_component(&self) -> Polynomial<S> {
        self.homogeneous_components()
            .into_iter()
            .next_back()
            .map(|(_, p)| p)
            .unwrap_or_else(|| Polynomial::zero(self.g))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Word::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn classify(&self) -> Classification {
        if self.terms.keys().all(Word::is_one) {
            Classification::Constant
        } else if self.terms.keys().all(Word::is_analytic) {
            Classification::Analytic
        } else if self.terms.keys().all(Word::is_antianalytic) {
            Classification::Antianalytic
        } else {
            Classification::Mixed
        }
    }

    pub fn is_analytic(&self) -> bool {
        self.terms.keys().all(Word::is_analytic)
    }

    pub fn is_antianalytic(&self) -> bool {
        self.terms.keys().all(Word::is_antianalytic)
    }

    /// Constant term, or `None` if the polynomial is not a constant.
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Word::one()).cloned(),
            _ => None,
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Polynomial<T> {
        Polynomial::from_terms(self.g, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }
}

impl<S: Scalar> fmt::Debug for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::format_poly(self))
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::format_poly(self))
    }
}

// Operator impls panic on mismatched `g`; use the `try_*` methods when the
// operands come from untrusted input.

impl<S: Scalar> Add for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Polynomial<S> {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<S: Scalar> Sub for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Polynomial<S> {
        assert_eq!(self.g, rhs.g, "polynomial subtraction across algebras");
        let mut out = self.clone();
        out.add_scaled(rhs, &-S::one());
        out
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Polynomial<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Polynomial<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        -&self
    }
}
