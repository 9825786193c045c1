//! Letters and words of the free monoid on `x1..xg, x1*..xg*`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// One of the `2g` generators: `x_index` or `x_index*`.
///
/// Letters are ordered `x1 < ... < xg < x1* < ... < xg*`, which is the
/// derived ordering on `(starred, index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub starred: bool,
    pub index: u16,
}

impl Letter {
    pub fn new(index: u16, starred: bool) -> Self {
        assert!(index >= 1, "letter indices start at 1");
        Letter { starred, index }
    }

    pub fn x(index: u16) -> Self {
        Letter::new(index, false)
    }

    pub fn x_star(index: u16) -> Self {
        Letter::new(index, true)
    }

    pub fn star(self) -> Self {
        Letter {
            starred: !self.starred,
            ..self
        }
    }

    /// All `2g` letters in increasing order.
    pub fn alphabet(g: usize) -> Vec<Letter> {
        let g = g as u16;
        (1..=g)
            .map(Letter::x)
            .chain((1..=g).map(Letter::x_star))
            .collect()
    }

    /// Position in [`Letter::alphabet`].
    pub fn rank(self, g: usize) -> usize {
        let base = usize::from(self.index) - 1;
        if self.starred {
            g + base
        } else {
            base
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.starred {
            write!(f, "x{}'", self.index)
        } else {
            write!(f, "x{}", self.index)
        }
    }
}

/// A word; the empty word is the identity `1`.
///
/// `Ord` is the graded left-lexicographic monomial order: shorter words come
/// first, equal lengths compare letter by letter from the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Reverses the word and flips every star.
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.star()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `prefix · self · suffix`
    pub fn sandwich(&self, prefix: &Word, suffix: &Word) -> Word {
        let mut v = Vec::with_capacity(prefix.0.len() + self.0.len() + suffix.0.len());
        v.extend_from_slice(&prefix.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&suffix.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// First position at which `factor` occurs.
    pub fn find_factor(&self, factor: &Word) -> Option<usize> {
        let n = factor.degree();
        if n > self.degree() {
            return None;
        }
        if n == 0 {
            return Some(0);
        }
        self.0.windows(n).position(|w| w == factor.letters())
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        self.find_factor(factor).is_some()
    }

    pub fn is_analytic(&self) -> bool {
        self.0.iter().all(|l| !l.starred)
    }

    pub fn is_antianalytic(&self) -> bool {
        self.0.iter().all(|l| l.starred)
    }

    /// Largest letter index, 0 for the empty word.
    pub fn max_index(&self) -> u16 {
        self.0.iter().map(|l| l.index).max().unwrap_or(0)
    }

    /// The `≺`-least cyclic rotation.
    pub fn least_rotation(&self) -> Word {
        let n = self.0.len();
        (0..n.max(1))
            .map(|k| {
                let mut v = self.0[k.min(n)..].to_vec();
                v.extend_from_slice(&self.0[..k.min(n)]);
                Word(v)
            })
            .min()
            .unwrap_or_default()
    }

    /// Is this word of the form `star(v)·v`?
    pub fn is_square(&self) -> bool {
        let n = self.0.len();
        if n % 2 == 1 {
            return false;
        }
        let half = n / 2;
        (0..half).all(|k| self.0[half - 1 - k] == self.0[half + k].star())
    }

    /// All words of degree exactly `d` over the alphabet of `g` variables,
    /// in increasing order.
    pub fn all_of_degree(g: usize, d: usize) -> Vec<Word> {
        let alphabet = Letter::alphabet(g);
        let mut layer = vec![Word::one()];
        for _ in 0..d {
            let mut next = Vec::with_capacity(layer.len() * alphabet.len());
            for w in &layer {
                for &l in &alphabet {
                    let mut nw = w.clone();
                    nw.push(l);
                    next.push(nw);
                }
            }
            layer = next;
        }
        layer
    }

    /// All words of degree at most `d`, in increasing order.
    pub fn all_up_to_degree(g: usize, d: usize) -> Vec<Word> {
        (0..=d).flat_map(|k| Word::all_of_degree(g, k)).collect()
    }

    /// All analytic words of degree exactly `d`, in increasing order.
    pub fn analytic_of_degree(g: usize, d: usize) -> Vec<Word> {
        let mut layer = vec![Word::one()];
        for _ in 0..d {
            layer = layer
                .iter()
                .flat_map(|w| {
                    (1..=g as u16).map(move |i| {
                        let mut nw = w.clone();
                        nw.push(Letter::x(i));
                        nw
                    })
                })
                .collect();
        }
        layer
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Self {
        Word::letter(l)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Compares two words over `g` variables in the monomial order.
pub fn compare_words(u: &Word, v: &Word, g: usize) -> Result<Ordering> {
    for w in [u, v] {
        if usize::from(w.max_index()) > g {
            return Err(Error::VariableCount {
                expected: g,
                found: usize::from(w.max_index()),
            });
        }
    }
    Ok(u.cmp(v))
}
