//! Finite matrix witnesses for homogeneous analytic *-ideals, built from a
//! positive functional by compressing the GNS representation.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::functional::{build_functional_with, ConstantPolicy, MomentFunctional};
use crate::groebner::{complete, star_ideal_generators, GroebnerBasis, IdealPresentation, MembershipVerdict};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::repvar::evaluate_with;
use crate::scalar::{sqrt_upper_bound, Rational, Scalar};
use crate::word::Word;

fn check_homogeneous_analytic<S: Scalar>(ideal: &IdealPresentation<S>) -> Result<()> {
    if !ideal.analytic_generated() {
        return Err(Error::Precondition(
            "generators must be analytic or antianalytic".into(),
        ));
    }
    if !ideal.homogeneous() {
        return Err(Error::Precondition("generators must be homogeneous".into()));
    }
    Ok(())
}

/// `I` together with every analytic monomial of degree `d + 1`, star-closed.
pub fn truncate_ideal<S: Scalar>(ideal: &IdealPresentation<S>, d: usize) -> Result<IdealPresentation<S>> {
    check_homogeneous_analytic(ideal)?;
    let g = ideal.g();
    let mut gens = ideal.generators().to_vec();
    gens.extend(
        Word::analytic_of_degree(g, d + 1)
            .into_iter()
            .map(|w| Polynomial::word(g, w)),
    );
    IdealPresentation::new(g, star_ideal_generators(&gens)?)
}

#[derive(Clone, Debug)]
pub struct GnsWitness<S: Scalar> {
    pub d: usize,
    /// The spanning words `a·b` kept as basis, in increasing order.
    pub basis_words: Vec<Word>,
    /// Their normal forms modulo the truncated ideal.
    pub basis: Vec<Polynomial<S>>,
    pub gram: Matrix<S>,
    pub xop: Vec<Matrix<S>>,
    pub xadj: Vec<Matrix<S>>,
    pub functional: MomentFunctional<S>,
}

pub fn build_witness<S: Scalar>(ideal: &IdealPresentation<S>, d: usize) -> Result<GnsWitness<S>> {
    build_witness_with(ideal, d, ConstantPolicy::default())
}

pub fn build_witness_with<S: Scalar>(
    ideal: &IdealPresentation<S>,
    d: usize,
    policy: ConstantPolicy,
) -> Result<GnsWitness<S>> {
    let truncated = truncate_ideal(ideal, d)?;
    let g = ideal.g();
    let gb = complete(&truncated, (4 * d).max(truncated.max_degree()))?;
    let functional = build_functional_with(&gb, 2 * d, policy)?;

    let mut candidates = BTreeSet::new();
    for da in 0..=d {
        for a in Word::analytic_of_degree(g, da) {
            for b in Word::all_up_to_degree(g, d) {
                candidates.insert(a.concat(&b));
            }
        }
    }
    let candidates: Vec<Word> = candidates.into_iter().collect();
    let forms: Vec<Polynomial<S>> = candidates
        .iter()
        .map(|w| gb.reduce(&Polynomial::word(g, w.clone())))
        .collect();

    // Column pivots of the full Gram matrix pick, in increasing order, the
    // candidates whose bordered Gram determinant is nonzero.
    let n = candidates.len();
    let mut full = Matrix::zeros(n, n);
    for j in 0..n {
        let bj = forms[j].star();
        for k in 0..n {
            full[(j, k)] = functional.evaluate(&(&bj * &forms[k]))?;
        }
    }
    let (_, pivots) = full.rref();
    let basis_words: Vec<Word> = pivots.iter().map(|&k| candidates[k].clone()).collect();
    let basis: Vec<Polynomial<S>> = pivots.iter().map(|&k| forms[k].clone()).collect();
    let m = pivots.len();
    let gram = Matrix::from_fn(m, m, |j, k| full[(pivots[j], pivots[k])].clone());
    if !gram.is_positive_definite()? {
        return Err(Error::Internal("selected Gram matrix is not positive definite".into()));
    }

    let mut witness = GnsWitness {
        d,
        basis_words,
        basis,
        gram,
        xop: Vec::with_capacity(g),
        xadj: Vec::with_capacity(g),
        functional,
    };
    let gram_inv = witness.gram.inverse()?;
    for i in 1..=g as u16 {
        let xi = Polynomial::var(g, i);
        let mut op = Matrix::zeros(m, m);
        for k in 0..m {
            let image = gb.reduce(&(&xi * &witness.basis[k]));
            let coords = witness.coordinates(&image)?;
            let mut back = Polynomial::zero(g);
            for (c, b) in coords.iter().zip(&witness.basis) {
                back.add_scaled(b, c);
            }
            if gb.reduce(&back) != image {
                return Err(Error::Internal(format!(
                    "left multiplication by x{i} leaves the witness space"
                )));
            }
            for (j, c) in coords.into_iter().enumerate() {
                op[(j, k)] = c;
            }
        }
        let adj = &(&gram_inv * &op.adjoint()) * &witness.gram;
        witness.xop.push(op);
        witness.xadj.push(adj);
    }
    Ok(witness)
}

impl<S: Scalar> GnsWitness<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn g(&self) -> usize {
        self.xop.len()
    }

    pub fn gb(&self) -> &GroebnerBasis<S> {
        self.functional.gb()
    }

    /// Coordinates of the Gram-orthogonal projection of `[q]` onto the
    /// witness space: the solution of `gram · α = (L(star(b_j)·q))_j`.
    pub fn coordinates(&self, q: &Polynomial<S>) -> Result<Vec<S>> {
        let rhs: Vec<S> = self
            .basis
            .iter()
            .map(|b| self.functional.evaluate(&(&b.star() * q)))
            .collect::<Result<_>>()?;
        Ok(self.gram.solve(&Matrix::column(rhs))?.col_vec(0))
    }

    /// `p(X)` with `x_i ↦ Xop_i` and `x_i* ↦ Xadj_i`.
    pub fn evaluate(&self, p: &Polynomial<S>) -> Result<Matrix<S>> {
        evaluate_with(p, &self.xop, &self.xadj)
    }

    /// `p(X)` applied to the coordinate vector of `[1]`.
    pub fn apply_to_one(&self, p: &Polynomial<S>) -> Result<Vec<S>> {
        let mut e0 = vec![S::zero(); self.dim()];
        e0[0] = S::one();
        Ok(self.evaluate(p)?.mul_vec(&e0))
    }

    /// `gram · X_i = Xadj_i^H · gram` for every `i`.
    pub fn adjoint_identity_holds(&self) -> bool {
        self.xop
            .iter()
            .zip(&self.xadj)
            .all(|(x, a)| &self.gram * x == &a.adjoint() * &self.gram)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeOutcome<S: Scalar> {
    pub probe: Polynomial<S>,
    pub verdict: MembershipVerdict,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport<S: Scalar> {
    pub generators_vanish: bool,
    pub adjoint_identity: bool,
    pub probes: Vec<ProbeOutcome<S>>,
}

impl<S: Scalar> WitnessReport<S> {
    pub fn passed(&self) -> bool {
        self.generators_vanish && self.adjoint_identity && self.probes.iter().all(|p| p.passed)
    }
}

/// Generator vanishing, `q(X)·[1] = [q] ≠ 0` for non-members, `q(X) = 0`
/// for members, and the Gram-adjoint identity.
pub fn verify_witness<S: Scalar>(
    w: &GnsWitness<S>,
    ideal: &IdealPresentation<S>,
    probes: &[Polynomial<S>],
) -> Result<WitnessReport<S>> {
    for q in probes {
        let deg = q.degree().unwrap_or(0);
        if deg > w.d {
            return Err(Error::DegreeBound {
                requested: deg,
                bound: w.d,
            });
        }
    }
    let mut generators_vanish = true;
    for gen in ideal.star_generators() {
        if !w.evaluate(&gen)?.is_zero() {
            generators_vanish = false;
        }
    }
    let gb = complete(ideal, w.d.max(ideal.max_degree()))?;
    let mut outcomes = Vec::with_capacity(probes.len());
    for q in probes {
        let verdict = gb.member(q);
        let passed = match verdict {
            MembershipVerdict::Member => w.evaluate(q)?.is_zero(),
            MembershipVerdict::NonMember => {
                let image = w.apply_to_one(q)?;
                let coords = w.coordinates(q)?;
                image == coords && image.iter().any(|c| !c.is_zero())
            }
            MembershipVerdict::UnknownBeyondBound => false,
        };
        outcomes.push(ProbeOutcome {
            probe: q.clone(),
            verdict,
            passed,
        });
    }
    Ok(WitnessReport {
        generators_vanish,
        adjoint_identity: w.adjoint_identity_holds(),
        probes: outcomes,
    })
}

/// A witness scaled by `scale`, with the certified bound
/// `‖scale · X_i‖² ≤ norm_sq_bound ≤ 1` in the Gram inner product.
#[derive(Clone, Debug)]
pub struct ScaledWitness<S: Scalar> {
    pub witness: GnsWitness<S>,
    pub scale: Rational,
    pub xop: Vec<Matrix<S>>,
    pub xadj: Vec<Matrix<S>>,
    pub norm_sq_bound: Rational,
}

impl<S: Scalar> ScaledWitness<S> {
    pub fn evaluate(&self, p: &Polynomial<S>) -> Result<Matrix<S>> {
        evaluate_with(p, &self.xop, &self.xadj)
    }
}

/// Upper bound for `max_i ‖X_i‖²`: the spectral radius of the Gram-self-adjoint
/// `Xadj_i · X_i` is at most its max row sum of `|re| + |im|`.
pub fn norm_sq_upper_bound<S: Scalar>(xop: &[Matrix<S>], xadj: &[Matrix<S>]) -> Rational {
    xop.iter()
        .zip(xadj)
        .map(|(x, a)| (a * x).max_row_sum_bound())
        .max()
        .unwrap_or_else(Rational::zero)
}

pub fn bounded_family<S: Scalar>(ideal: &IdealPresentation<S>, d_max: usize) -> Result<Vec<ScaledWitness<S>>> {
    (1..=d_max)
        .map(|d| {
            let witness = build_witness(ideal, d)?;
            let r = norm_sq_upper_bound(&witness.xop, &witness.xadj);
            let scale = if r <= Rational::one() {
                Rational::one()
            } else {
                Rational::one() / sqrt_upper_bound(&r, 16)
            };
            let lam = S::from_rational(scale.clone());
            let xop: Vec<Matrix<S>> = witness.xop.iter().map(|m| m.scale(&lam)).collect();
            let xadj: Vec<Matrix<S>> = witness.xadj.iter().map(|m| m.scale(&lam)).collect();
            let norm_sq_bound = &scale * &scale * &r;
            Ok(ScaledWitness {
                witness,
                scale,
                xop,
                xadj,
                norm_sq_bound,
            })
        })
        .collect()
}

/// Block-diagonal direct sum of a family, as one pair of operator lists.
pub fn direct_sum<S: Scalar>(family: &[ScaledWitness<S>]) -> (Vec<Matrix<S>>, Vec<Matrix<S>>) {
    let Some(first) = family.first() else {
        return (Vec::new(), Vec::new());
    };
    let mut ops = first.xop.clone();
    let mut adjs = first.xadj.clone();
    for w in &family[1..] {
        for i in 0..ops.len() {
            ops[i] = ops[i].direct_sum(&w.xop[i]);
            adjs[i] = adjs[i].direct_sum(&w.xadj[i]);
        }
    }
    (ops, adjs)
}
