//! Linear rewriting by a finite set of rules `lead → lead - rule`.

use std::collections::HashMap;

use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::word::{Letter, Word};

/// One rewriting step recorded by [`RewriteSystem::reduce_tracked`]:
/// `coeff · left · rules[rule] · right` was subtracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactor<S: Scalar> {
    pub coeff: S,
    pub left: Word,
    pub rule: usize,
    pub right: Word,
}

/// Rules with designated leading words; each rule has coefficient 1 on its
/// leading word. The designated word need not be the largest in the rule, so
/// termination is the caller's responsibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem<S: Scalar> {
    g: usize,
    rules: Vec<Polynomial<S>>,
    leads: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl<S: Scalar> RewriteSystem<S> {
    /// `rules[k]` must have coefficient 1 on `leads[k]`.
    pub fn new(g: usize, leads: Vec<Word>, rules: Vec<Polynomial<S>>) -> Self {
        debug_assert!(leads.iter().zip(&rules).all(|(w, r)| r.coeff(w).is_one()));
        let index = leads.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        RewriteSystem {
            g,
            rules,
            leads,
            index,
        }
    }

    /// Rules given by their largest words.
    pub fn from_monic(g: usize, rules: Vec<Polynomial<S>>) -> Self {
        let leads = rules
            .iter()
            .map(|r| r.leading_word().expect("nonzero rule").clone())
            .collect();
        Self::new(g, leads, rules)
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn rules(&self) -> &[Polynomial<S>] {
        &self.rules
    }

    pub fn leads(&self) -> &[Word] {
        &self.leads
    }

    pub fn has_empty_lead(&self) -> bool {
        self.index.contains_key(&Word::one())
    }

    /// Leftmost occurrence of a leading word in `w`, shortest first at each
    /// position. Returns the position and the rule index.
    pub fn find(&self, w: &Word) -> Option<(usize, usize)> {
        if let Some(&id) = self.index.get(&Word::one()) {
            return Some((0, id));
        }
        let letters = w.letters();
        for start in 0..letters.len() {
            for end in start + 1..=letters.len() {
                if let Some(&id) = self.index.get(&Word::from_letters(letters[start..end].to_vec())) {
                    return Some((start, id));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find(w).is_none()
    }

    pub fn reduce(&self, p: &Polynomial<S>) -> Polynomial<S> {
        self.reduce_inner(p, None)
    }

    /// Reduction that also returns the rewriting steps, so that
    /// `p - reduce(p) = Σ coeff · left · rules[rule] · right`.
    pub fn reduce_tracked(&self, p: &Polynomial<S>) -> (Polynomial<S>, Vec<Cofactor<S>>) {
        let mut steps = Vec::new();
        let r = self.reduce_inner(p, Some(&mut steps));
        (r, steps)
    }

    fn reduce_inner(&self, p: &Polynomial<S>, mut steps: Option<&mut Vec<Cofactor<S>>>) -> Polynomial<S> {
        let mut work = p.clone();
        let mut out = Polynomial::zero(self.g);
        while let Ok((w, c)) = work.leading_term() {
            match self.find(&w) {
                Some((pos, id)) => {
                    let a = w.subword(0, pos);
                    let b = w.subword(pos + self.leads[id].degree(), w.degree());
                    work.add_scaled(&self.rules[id].sandwich(&a, &b), &-c.clone());
                    if let Some(s) = steps.as_deref_mut() {
                        s.push(Cofactor {
                            coeff: c,
                            left: a,
                            rule: id,
                            right: b,
                        });
                    }
                }
                None => {
                    work.add_term(w.clone(), -c.clone());
                    out.add_term(w, c);
                }
            }
        }
        out
    }

    /// Normal words of degree at most `d`, in increasing order.
    pub fn normal_words(&self, d: usize) -> Vec<Word> {
        if self.has_empty_lead() {
            return Vec::new();
        }
        let alphabet = Letter::alphabet(self.g);
        let mut out = vec![Word::one()];
        let mut layer = vec![Word::one()];
        for _ in 0..d {
            let mut next = Vec::new();
            for w in &layer {
                for &l in &alphabet {
                    let mut nw = w.clone();
                    nw.push(l);
                    if !self.ends_with_lead(&nw) {
                        next.push(nw);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    fn ends_with_lead(&self, w: &Word) -> bool {
        let n = w.degree();
        (0..n).any(|s| self.index.contains_key(&w.subword(s, n)))
    }
}
