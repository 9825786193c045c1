//! Degree-truncated completion of two-sided *-ideals into reduced Gröbner
//! bases, with reduction, membership and standard monomials.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::poly::{Classification, Polynomial};
pub use crate::rewrite::Cofactor;
use crate::rewrite::RewriteSystem;
use crate::scalar::Scalar;
use crate::word::{Letter, Word};

/// A generating set for a *-ideal together with flags computed from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation<S: Scalar> {
    g: usize,
    generators: Vec<Polynomial<S>>,
    star_closed: bool,
    homogeneous: bool,
    analytic_generated: bool,
}

impl<S: Scalar> IdealPresentation<S> {
    /// Rejects zero generators and nonzero constants (which make the ideal
    /// improper). An empty list presents the zero ideal.
    pub fn new(g: usize, generators: Vec<Polynomial<S>>) -> Result<Self> {
        for p in &generators {
            if p.g() != g {
                return Err(Error::AlgebraMismatch {
                    left: g,
                    right: p.g(),
                });
            }
            p.validate()?;
            if p.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            if p.degree() == Some(0) {
                return Err(Error::ImproperIdeal);
            }
        }
        let star_closed = generators.iter().all(|p| {
            let s = p.star().monic();
            generators.iter().any(|q| q.monic() == s)
        });
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        let analytic_generated = generators
            .iter()
            .all(|p| matches!(p.classify(), Classification::Analytic | Classification::Antianalytic));
        Ok(IdealPresentation {
            g,
            generators,
            star_closed,
            homogeneous,
            analytic_generated,
        })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn generators(&self) -> &[Polynomial<S>] {
        &self.generators
    }

    /// Whether the generator list is closed under the involution up to
    /// nonzero scalar multiples.
    pub fn star_closed(&self) -> bool {
        self.star_closed
    }

    pub fn homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn analytic_generated(&self) -> bool {
        self.analytic_generated
    }

    pub fn max_degree(&self) -> usize {
        self.generators
            .iter()
            .filter_map(Polynomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// Generators with their adjoints adjoined.
    pub fn star_generators(&self) -> Vec<Polynomial<S>> {
        star_ideal_generators(&self.generators).expect("validated generators")
    }
}

/// `P ∪ star(P)`, deduplicated up to nonzero scalar multiples, keeping the
/// first occurrence. The two-sided ideal of the result is the *-ideal of `P`.
pub fn star_ideal_generators<S: Scalar>(ps: &[Polynomial<S>]) -> Result<Vec<Polynomial<S>>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in ps {
        if p.is_zero() {
            return Err(Error::ZeroGenerator);
        }
    }
    for p in ps.iter().cloned().chain(ps.iter().map(Polynomial::star)) {
        let key = format!("{:?}", p.monic());
        if seen.insert(key) {
            out.push(p);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MembershipVerdict {
    Member,
    NonMember,
    UnknownBeyondBound,
}

impl MembershipVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            MembershipVerdict::Member => "member",
            MembershipVerdict::NonMember => "non_member",
            MembershipVerdict::UnknownBeyondBound => "unknown_beyond_bound",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodimVerdict {
    Finite,
    Infinite,
    Unknown,
}

impl CodimVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            CodimVerdict::Finite => "finite",
            CodimVerdict::Infinite => "infinite",
            CodimVerdict::Unknown => "unknown",
        }
    }
}

/// Interreduced monic rewrite system, sorted by leading word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<S: Scalar> {
    system: RewriteSystem<S>,
    completion_degree: usize,
    complete: bool,
    homogeneous: bool,
    analytic_generated: bool,
    discarded: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Obstruction {
    overlap: Word,
    left: usize,
    right: usize,
    shared: usize,
}

struct Completion<S: Scalar> {
    g: usize,
    bound: usize,
    rules: Vec<Option<Polynomial<S>>>,
    index: HashMap<Word, usize>,
    queue: BTreeSet<Obstruction>,
    discarded: BTreeSet<(usize, usize)>,
    overflow: bool,
    collapsed: bool,
}

impl<S: Scalar> Completion<S> {
    fn find_rule(&self, w: &Word) -> Option<(usize, usize)> {
        find_factor_rule(&self.index, w)
    }

    fn reduce(&self, p: &Polynomial<S>) -> Polynomial<S> {
        let mut work = p.clone();
        let mut out = Polynomial::zero(self.g);
        while let Ok((w, c)) = work.leading_term() {
            match self.find_rule(&w) {
                Some((pos, id)) => {
                    let rule = self.rules[id].as_ref().expect("indexed rule is active");
                    let lead_len = rule.leading_word().expect("nonzero").degree();
                    let a = w.subword(0, pos);
                    let b = w.subword(pos + lead_len, w.degree());
                    work.add_scaled(&rule.sandwich(&a, &b), &-c);
                }
                None => {
                    work.add_term(w.clone(), -c.clone());
                    out.add_term(w, c);
                }
            }
        }
        out
    }

    fn add(&mut self, p: Polynomial<S>) {
        let mut pending = VecDeque::from([p]);
        while let Some(p) = pending.pop_front() {
            if self.collapsed {
                return;
            }
            let r = self.reduce(&p);
            let Some(deg) = r.degree() else { continue };
            if deg == 0 {
                self.collapsed = true;
                return;
            }
            if deg > self.bound {
                self.overflow = true;
                continue;
            }
            let r = r.monic();
            let lead = r.leading_word().expect("nonzero").clone();
            let id = self.rules.len();
            // Older rules whose leading word contains the new one are retired
            // and fed back through reduction.
            let retired: Vec<usize> = self
                .index
                .iter()
                .filter(|(w, _)| w.contains_factor(&lead))
                .map(|(_, &i)| i)
                .collect();
            let mut retired = retired;
            retired.sort_unstable();
            for i in retired {
                let old = self.rules[i].take().expect("active");
                self.index.remove(old.leading_word().expect("nonzero"));
                pending.push_back(old);
            }
            self.rules.push(Some(r));
            self.index.insert(lead.clone(), id);
            let active: Vec<usize> = {
                let mut v: Vec<usize> = self.index.values().copied().collect();
                v.sort_unstable();
                v
            };
            for other in active {
                let other_lead = self.rules[other]
                    .as_ref()
                    .expect("active")
                    .leading_word()
                    .expect("nonzero")
                    .clone();
                self.schedule(id, &lead, other, &other_lead);
                if other != id {
                    self.schedule(other, &other_lead, id, &lead);
                }
            }
        }
    }

    /// Queues every overlap where a proper suffix of `u` is a proper prefix of `v`.
    fn schedule(&mut self, i: usize, u: &Word, j: usize, v: &Word) {
        let max = u.degree().min(v.degree());
        for k in 1..max {
            if u.letters()[u.degree() - k..] == v.letters()[..k] {
                let overlap = u.concat(&v.subword(k, v.degree()));
                if overlap.degree() > self.bound {
                    self.discarded.insert((i, j));
                } else {
                    self.queue.insert(Obstruction {
                        overlap,
                        left: i,
                        right: j,
                        shared: k,
                    });
                }
            }
        }
    }

    fn run(&mut self) {
        while let Some(ob) = self.queue.pop_first() {
            if self.collapsed {
                return;
            }
            let (Some(f), Some(h)) = (&self.rules[ob.left], &self.rules[ob.right]) else {
                continue;
            };
            let u = f.leading_word().expect("nonzero");
            let v = h.leading_word().expect("nonzero");
            let c = v.subword(ob.shared, v.degree());
            let a = u.subword(0, u.degree() - ob.shared);
            let s = &f.sandwich(&Word::one(), &c) - &h.sandwich(&a, &Word::one());
            self.add(s);
        }
    }
}

/// Leftmost occurrence of any indexed leading word in `w`, shortest first at
/// each position. Returns the position and the rule id.
fn find_factor_rule(index: &HashMap<Word, usize>, w: &Word) -> Option<(usize, usize)> {
    if let Some(&id) = index.get(&Word::one()) {
        return Some((0, id));
    }
    let letters = w.letters();
    for start in 0..letters.len() {
        for end in start + 1..=letters.len() {
            if let Some(&id) = index.get(&Word::from_letters(letters[start..end].to_vec())) {
                return Some((start, id));
            }
        }
    }
    None
}

/// Completes the *-ideal of `ideal` (adjoints always adjoined) up to
/// overlap degree `bound`.
pub fn complete<S: Scalar>(ideal: &IdealPresentation<S>, bound: usize) -> Result<GroebnerBasis<S>> {
    let degree = ideal.max_degree();
    if bound < degree {
        return Err(Error::DegreeBelowGenerators { bound, degree });
    }
    let g = ideal.g();
    let mut c = Completion {
        g,
        bound,
        rules: Vec::new(),
        index: HashMap::new(),
        queue: BTreeSet::new(),
        discarded: BTreeSet::new(),
        overflow: false,
        collapsed: false,
    };
    for p in ideal.star_generators() {
        c.add(p);
    }
    c.run();

    let base = GroebnerBasis {
        system: RewriteSystem::new(g, Vec::new(), Vec::new()),
        completion_degree: bound,
        complete: true,
        homogeneous: ideal.homogeneous(),
        analytic_generated: ideal.analytic_generated(),
        discarded: 0,
    };
    if c.collapsed {
        return Ok(base.with_rules(vec![Polynomial::one(g)]));
    }
    let active: BTreeSet<usize> = c.index.values().copied().collect();
    let relevant = c
        .discarded
        .iter()
        .filter(|(i, j)| active.contains(i) && active.contains(j))
        .count();
    // Final tail interreduction yields the unique reduced basis.
    let mut by_lead: BTreeMap<Word, Polynomial<S>> = BTreeMap::new();
    for &id in &active {
        let rule = c.rules[id].as_ref().expect("active");
        let (lead, _) = rule.leading_term().expect("nonzero");
        let mut tail = rule.clone();
        tail.add_term(lead.clone(), -S::one());
        let mut reduced = c.reduce(&tail);
        reduced.add_term(lead.clone(), S::one());
        by_lead.insert(lead, reduced);
    }
    let mut gb = base.with_rules(by_lead.into_values().collect());
    gb.discarded = relevant;
    gb.complete = relevant == 0 && !c.overflow;
    Ok(gb)
}

impl<S: Scalar> GroebnerBasis<S> {
    fn with_rules(mut self, rules: Vec<Polynomial<S>>) -> Self {
        self.system = RewriteSystem::from_monic(self.system.g(), rules);
        self
    }

    /// Assembles a basis from rules that are already known to be a reduced
    /// Gröbner basis (for instance the single Toeplitz rule).
    pub fn from_reduced_rules(
        g: usize,
        rules: Vec<Polynomial<S>>,
        completion_degree: usize,
        complete: bool,
    ) -> Self {
        let homogeneous = rules.iter().all(Polynomial::is_homogeneous);
        let analytic_generated = rules
            .iter()
            .all(|p| matches!(p.classify(), Classification::Analytic | Classification::Antianalytic));
        let mut rules: Vec<Polynomial<S>> = rules.iter().map(Polynomial::monic).collect();
        rules.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
        GroebnerBasis {
            system: RewriteSystem::new(g, Vec::new(), Vec::new()),
            completion_degree,
            complete,
            homogeneous,
            analytic_generated,
            discarded: 0,
        }
        .with_rules(rules)
    }

    pub fn g(&self) -> usize {
        self.system.g()
    }

    pub fn rules(&self) -> &[Polynomial<S>] {
        self.system.rules()
    }

    pub fn leading_words(&self) -> &[Word] {
        self.system.leads()
    }

    pub fn system(&self) -> &RewriteSystem<S> {
        &self.system
    }

    pub fn completion_degree(&self) -> usize {
        self.completion_degree
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn analytic_generated(&self) -> bool {
        self.analytic_generated
    }

    /// Number of obstructions between final rules that were skipped for
    /// exceeding the completion degree.
    pub fn discarded_obstructions(&self) -> usize {
        self.discarded
    }

    /// The basis is `{1}`: the ideal is the whole algebra.
    pub fn is_improper(&self) -> bool {
        self.system.has_empty_lead()
    }

    /// Whether reduction decides membership exactly for degree `d`.
    pub fn exact_up_to(&self, d: usize) -> bool {
        self.complete || (self.homogeneous && d <= self.completion_degree)
    }

    pub fn is_standard(&self, w: &Word) -> bool {
        self.system.is_normal(w)
    }

    pub fn reduce(&self, p: &Polynomial<S>) -> Polynomial<S> {
        self.system.reduce(p)
    }

    /// Reduction that also returns the rewriting steps, so that
    /// `p - reduce(p) = Σ coeff · left · rules[rule] · right`.
    pub fn reduce_tracked(&self, p: &Polynomial<S>) -> (Polynomial<S>, Vec<Cofactor<S>>) {
        self.system.reduce_tracked(p)
    }

    pub fn member(&self, p: &Polynomial<S>) -> MembershipVerdict {
        let r = self.reduce(p);
        if r.is_zero() {
            MembershipVerdict::Member
        } else if self.exact_up_to(p.degree().unwrap_or(0)) {
            MembershipVerdict::NonMember
        } else {
            MembershipVerdict::UnknownBeyondBound
        }
    }

    /// Words of degree at most `d` avoiding every leading word, in
    /// increasing order.
    pub fn standard_monomials(&self, d: usize) -> Result<Vec<Word>> {
        if d > self.completion_degree && !self.complete {
            return Err(Error::DegreeBound {
                requested: d,
                bound: self.completion_degree,
            });
        }
        Ok(self.standard_words_unchecked(d))
    }

    pub(crate) fn standard_words_unchecked(&self, d: usize) -> Vec<Word> {
        self.system.normal_words(d)
    }

    /// Finite codimension via the automaton of words avoiding all leading
    /// words: finite iff its reachable part is acyclic.
    pub fn finite_codimension(&self) -> (CodimVerdict, Option<usize>) {
        if !self.complete {
            return (CodimVerdict::Unknown, None);
        }
        if self.is_improper() {
            return (CodimVerdict::Finite, Some(0));
        }
        let automaton = Automaton::new(self.g(), self.leading_words());
        match automaton.count_accepted() {
            Some(n) => (CodimVerdict::Finite, Some(n)),
            None => (CodimVerdict::Infinite, None),
        }
    }

    /// Splits the rules into analytic and antianalytic parts. `holds` is
    /// false if some rule is mixed or constant.
    pub fn star_split_check(&self) -> Result<StarSplit<S>> {
        if !self.analytic_generated {
            return Err(Error::Precondition(
                "split check requires analytic or antianalytic generators".into(),
            ));
        }
        let mut split = StarSplit {
            holds: true,
            analytic: Vec::new(),
            antianalytic: Vec::new(),
        };
        for r in self.rules() {
            match r.classify() {
                Classification::Analytic => split.analytic.push(r.clone()),
                Classification::Antianalytic => split.antianalytic.push(r.clone()),
                Classification::Constant | Classification::Mixed => split.holds = false,
            }
        }
        Ok(split)
    }
    /// For an analytic-generated ideal whose basis splits as `G ∪ H*`, the
    /// rewrite system `G ∪ star(G)`: each analytic block is reduced by `G`
    /// and each antianalytic block by the adjoint rules. Its normal words
    /// span a star-closed complement of the ideal, which the basis's own
    /// standard words in general do not.
    pub fn star_symmetric_system(&self) -> Option<RewriteSystem<S>> {
        let split = self.star_split_check().ok()?;
        if !split.holds {
            return None;
        }
        let mut leads = Vec::new();
        let mut rules = Vec::new();
        for r in &split.analytic {
            leads.push(r.leading_word().expect("nonzero").clone());
            rules.push(r.clone());
        }
        for r in &split.analytic {
            leads.push(r.leading_word().expect("nonzero").star());
            rules.push(r.star());
        }
        Some(RewriteSystem::new(self.g(), leads, rules))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSplit<S: Scalar> {
    pub holds: bool,
    pub analytic: Vec<Polynomial<S>>,
    pub antianalytic: Vec<Polynomial<S>>,
}

/// Aho–Corasick automaton over the leading words.
struct Automaton {
    delta: Vec<Vec<usize>>,
    dead: Vec<bool>,
}

impl Automaton {
    fn new(g: usize, patterns: &[Word]) -> Self {
        let alphabet = Letter::alphabet(g);
        let k = alphabet.len();
        let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; k]];
        let mut dead = vec![false];
        for p in patterns {
            let mut s = 0;
            for l in p.letters() {
                let r = l.rank(g);
                s = match children[s][r] {
                    Some(t) => t,
                    None => {
                        children.push(vec![None; k]);
                        dead.push(false);
                        let t = children.len() - 1;
                        children[s][r] = Some(t);
                        t
                    }
                };
            }
            dead[s] = true;
        }
        let n = children.len();
        let mut delta = vec![vec![0; k]; n];
        let mut fail = vec![0; n];
        let mut queue = VecDeque::new();
        for r in 0..k {
            match children[0][r] {
                Some(t) => {
                    delta[0][r] = t;
                    queue.push_back(t);
                }
                None => delta[0][r] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            dead[s] = dead[s] || dead[fail[s]];
            for r in 0..k {
                match children[s][r] {
                    Some(t) => {
                        fail[t] = delta[fail[s]][r];
                        delta[s][r] = t;
                        queue.push_back(t);
                    }
                    None => delta[s][r] = delta[fail[s]][r],
                }
            }
        }
        Automaton { delta, dead }
    }

    /// Number of accepted words (paths from the root through live states),
    /// or `None` if a live cycle is reachable.
    fn count_accepted(&self) -> Option<usize> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done,
        }
        let n = self.delta.len();
        let mut mark = vec![Mark::New; n];
        let mut count = vec![0usize; n];
        if self.dead[0] {
            return Some(0);
        }
        // Iterative DFS with post-order accumulation.
        let mut stack = vec![(0usize, 0usize)];
        mark[0] = Mark::Open;
        while let Some(&mut (s, ref mut next)) = stack.last_mut() {
            if *next < self.delta[s].len() {
                let t = self.delta[s][*next];
                *next += 1;
                if self.dead[t] {
                    continue;
                }
                match mark[t] {
                    Mark::Open => return None,
                    Mark::New => {
                        mark[t] = Mark::Open;
                        stack.push((t, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                let total = 1 + self.delta[s]
                    .iter()
                    .filter(|&&t| !self.dead[t])
                    .map(|&t| count[t])
                    .sum::<usize>();
                count[s] = total;
                mark[s] = Mark::Done;
                stack.pop();
            }
        }
        Some(count[0])
    }
}
