//! Finite-dimensional subspaces of the free algebra, kept in echelon form
//! over the word basis.

use std::collections::BTreeMap;

use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::word::Word;

/// A subspace spanned by polynomials, stored as monic rows keyed by
/// distinct leading words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSpan<S: Scalar> {
    g: usize,
    rows: BTreeMap<Word, Polynomial<S>>,
}

impl<S: Scalar> LinearSpan<S> {
    pub fn new(g: usize) -> Self {
        LinearSpan {
            g,
            rows: BTreeMap::new(),
        }
    }

    pub fn from_polys<'a>(g: usize, polys: impl IntoIterator<Item = &'a Polynomial<S>>) -> Self {
        let mut s = Self::new(g);
        for p in polys {
            s.insert(p);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// Remainder of `p` after eliminating every pivot word.
    pub fn reduce(&self, p: &Polynomial<S>) -> Polynomial<S> {
        let mut work = p.clone();
        let mut out = Polynomial::zero(self.g);
        while let Ok((w, c)) = work.leading_term() {
            match self.rows.get(&w) {
                Some(row) => work.add_scaled(row, &-c),
                None => {
                    work.add_term(w.clone(), -c.clone());
                    out.add_term(w, c);
                }
            }
        }
        out
    }

    pub fn contains(&self, p: &Polynomial<S>) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p`; returns whether the dimension grew.
    pub fn insert(&mut self, p: &Polynomial<S>) -> bool {
        let r = self.reduce(p);
        match r.leading_word() {
            Some(w) => {
                let w = w.clone();
                self.rows.insert(w, r.monic());
                true
            }
            None => false,
        }
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Word> {
        self.rows.keys()
    }

    /// The unique reduced echelon basis, in increasing order of leading word.
    pub fn reduced_basis(&self) -> Vec<Polynomial<S>> {
        let mut done = LinearSpan::new(self.g);
        let mut out = Vec::with_capacity(self.rows.len());
        for (w, row) in &self.rows {
            let c = row.coeff(w);
            let mut tail = row.clone();
            tail.add_term(w.clone(), -c.clone());
            let mut r = done.reduce(&tail);
            r.add_term(w.clone(), c);
            done.rows.insert(w.clone(), r.clone());
            out.push(r);
        }
        out
    }

    pub fn equals(&self, other: &LinearSpan<S>) -> bool {
        self.dim() == other.dim() && self.rows.values().all(|p| other.contains(p))
    }
}

/// The span of all `u·f·v` with `f` among `gens` and total degree at most
/// `d`: the degree-`d` part of the two-sided ideal as far as products of
/// bounded degree reach.
pub fn two_sided_span<S: Scalar>(g: usize, gens: &[Polynomial<S>], d: usize) -> LinearSpan<S> {
    let mut span = LinearSpan::new(g);
    for f in gens {
        let Some(fd) = f.degree() else { continue };
        if fd > d {
            continue;
        }
        let slack = d - fd;
        for left_deg in 0..=slack {
            let lefts = Word::all_of_degree(g, left_deg);
            let rights = Word::all_up_to_degree(g, slack - left_deg);
            for u in &lefts {
                for v in &rights {
                    span.insert(&f.sandwich(u, v));
                }
            }
        }
    }
    span
}
