use freestar::functional::{build_functional_with, ConstantPolicy, MomentFunctional};
use freestar::gns::{bounded_family, build_witness_with, direct_sum, norm_sq_upper_bound, verify_witness};
use freestar::groebner::{complete, CodimVerdict, GroebnerBasis, IdealPresentation, MembershipVerdict};
use freestar::quotients::{
    from_left_ideal, hat_member, qweyl_canon, regular_representation, spanning_degree, toeplitz_canon,
    verify_qweyl_identities, z_ideal, FiniteQuotient, QWeylSystem,
};
use freestar::repvar::{
    commutant_type, evaluate_at, left_vanishing_ideal, soft_condition_check, soft_equals_hard, vanishing_ideal,
    zero_class, MatrixTuple,
};
use freestar::trace::{trace_normal_form, trace_obstruction};
use freestar::{parse_poly, Letter, Polynomial, Rational, Scalar};
use serde_json::{json, Map, Value};

use crate::error::{CliError, EXIT_NEGATIVE, EXIT_OK};
use crate::problem::{parse_q, Problem, ProblemFile};
use crate::render;
use crate::{Algebra, Command, Options, Policy};

type Out = Result<(Value, i32), CliError>;

/// Default completion degree of the q-deformed system.
const QWEYL_BOUND: usize = 8;
const QWEYL_M_MAX: usize = 4;

struct Ctx<'a, S: Scalar> {
    opts: &'a Options,
    problem: Option<Problem<S>>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn code_if(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

impl<S: Scalar> Ctx<'_, S> {
    fn problem(&self) -> Result<&Problem<S>, CliError> {
        self.problem
            .as_ref()
            .ok_or_else(|| usage("this command needs --problem FILE"))
    }

    /// The number of variables: from the problem file, else the largest
    /// index among the `--poly` arguments.
    fn g(&self) -> Result<usize, CliError> {
        if let Some(p) = &self.problem {
            return Ok(p.g);
        }
        let mut g = 1;
        for s in &self.opts.polys {
            let p: Polynomial<S> = parse_poly(s, usize::from(u16::MAX))?;
            g = g.max(p.support().map(|w| usize::from(w.max_index())).max().unwrap_or(1));
        }
        Ok(g)
    }

    fn polys_in(&self, g: usize) -> Result<Vec<Polynomial<S>>, CliError> {
        if self.opts.polys.is_empty() {
            return Err(usage("this command needs at least one --poly EXPR"));
        }
        Ok(self
            .opts
            .polys
            .iter()
            .map(|s| parse_poly(s, g))
            .collect::<freestar::Result<_>>()?)
    }

    fn polys(&self) -> Result<Vec<Polynomial<S>>, CliError> {
        self.polys_in(self.g()?)
    }

    fn ideal(&self) -> Result<IdealPresentation<S>, CliError> {
        let p = self.problem()?;
        Ok(IdealPresentation::new(p.g, p.generators.clone())?)
    }

    /// `--degree`, else the problem file's degree.
    fn degree(&self) -> Result<usize, CliError> {
        self.opts
            .degree
            .or(self.problem.as_ref().and_then(|p| p.degree))
            .ok_or_else(|| usage("a degree is required (--degree N or \"degree\" in the problem file)"))
    }

    /// `--degree`, which is mandatory for this command.
    fn explicit_degree(&self) -> Result<usize, CliError> {
        self.opts.degree.ok_or_else(|| usage("this command needs --degree N"))
    }

    fn file_degree(&self) -> usize {
        self.problem.as_ref().and_then(|p| p.degree).unwrap_or(0)
    }

    fn gb(&self, bound: usize) -> Result<GroebnerBasis<S>, CliError> {
        let ideal = self.ideal()?;
        Ok(complete(&ideal, bound.max(ideal.max_degree()))?)
    }

    fn policy(&self) -> ConstantPolicy {
        match self.opts.policy {
            Some(Policy::Unit) => ConstantPolicy::Unit,
            Some(Policy::Geometric) | None => ConstantPolicy::Geometric,
        }
    }

    fn q(&self) -> Result<Rational, CliError> {
        match (&self.opts.q, self.problem.as_ref().and_then(|p| p.q.clone())) {
            (Some(s), _) => parse_q(s),
            (None, Some(q)) => Ok(q),
            (None, None) => Err(usage("this command needs --q p/q")),
        }
    }

    /// Selected tuples, or every tuple in the problem file.
    fn tuples(&self) -> Result<Vec<(String, MatrixTuple<S>)>, CliError> {
        let p = self.problem()?;
        if self.opts.tuples.is_empty() {
            if p.matrices.is_empty() {
                return Err(usage("the problem file has no matrix tuples"));
            }
            return Ok(p.matrices.iter().map(|(k, v)| (k.clone(), v.clone())).collect());
        }
        self.opts
            .tuples
            .iter()
            .map(|name| {
                p.matrices
                    .get(name)
                    .map(|t| (name.clone(), t.clone()))
                    .ok_or_else(|| usage(format!("no tuple named {name:?}")))
            })
            .collect()
    }

    fn tuple(&self) -> Result<(String, MatrixTuple<S>), CliError> {
        let mut ts = self.tuples()?;
        if ts.len() != 1 {
            return Err(usage("select one tuple with --tuple NAME"));
        }
        Ok(ts.remove(0))
    }

    fn vector(&self) -> Result<Option<(String, Vec<S>)>, CliError> {
        let Some(name) = &self.opts.vector else {
            return Ok(None);
        };
        let p = self.problem()?;
        p.vectors
            .get(name)
            .map(|v| Some((name.clone(), v.clone())))
            .ok_or_else(|| usage(format!("no vector named {name:?}")))
    }
}

pub fn dispatch<S: Scalar>(command: Command, opts: &Options, file: Option<&ProblemFile>) -> Out {
    let ctx = Ctx {
        opts,
        problem: file.map(Problem::<S>::from_file).transpose()?,
    };
    let (body, code) = match command {
        Command::Gb => gb(&ctx),
        Command::Reduce => reduce(&ctx),
        Command::Member => member(&ctx),
        Command::StandardMonomials => standard_monomials(&ctx),
        Command::Codim => codim(&ctx),
        Command::SplitCheck => split_check(&ctx),
        Command::Functional => functional(&ctx),
        Command::VerifyFunctional => verify_functional(&ctx),
        Command::Witness => witness(&ctx),
        Command::VerifyWitness => verify_witness_cmd(&ctx),
        Command::BoundedFamily => bounded_family_cmd(&ctx),
        Command::Eval => eval(&ctx),
        Command::ZeroClass => zero_class_cmd(&ctx),
        Command::VanishingIdeal => vanishing(&ctx),
        Command::LeftVanishingIdeal => left_vanishing(&ctx),
        Command::Commutant => commutant(&ctx),
        Command::SoftCheck => soft_check(&ctx),
        Command::Regrep => regrep(&ctx),
        Command::ZIdeal => z_ideal_cmd(&ctx),
        Command::HatMember => hat_member_cmd(&ctx),
        Command::Canon => canon(&ctx),
        Command::QweylIdentities => qweyl_identities(&ctx),
        Command::TraceForm => trace_form(&ctx),
    }?;
    let mut out = Map::new();
    out.insert("command".into(), Value::String(command.name()));
    out.insert("field".into(), Value::String(S::FIELD.tag().into()));
    match body {
        Value::Object(m) => out.extend(m),
        other => {
            out.insert("result".into(), other);
        }
    }
    Ok((Value::Object(out), code))
}

fn gb_summary<S: Scalar>(gb: &GroebnerBasis<S>) -> Value {
    json!({
        "g": gb.g(),
        "completion_degree": gb.completion_degree(),
        "complete": gb.complete(),
        "homogeneous": gb.homogeneous(),
        "analytic_generated": gb.analytic_generated(),
        "discarded_obstructions": gb.discarded_obstructions(),
        "leading_words": render::words(gb.leading_words()),
        "rules": render::polys(gb.rules()),
    })
}

fn gb<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let gb = ctx.gb(ctx.degree()?)?;
    Ok((gb_summary(&gb), EXIT_OK))
}

fn reduce<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let gb = ctx.gb(ctx.degree()?)?;
    let results: Vec<Value> = ctx
        .polys()?
        .iter()
        .map(|p| {
            json!({
                "input": render::poly(p),
                "normal_form": render::poly(&gb.reduce(p)),
                "exact": gb.exact_up_to(p.degree().unwrap_or(0)),
            })
        })
        .collect();
    Ok((json!({ "completion_degree": gb.completion_degree(), "results": results }), EXIT_OK))
}

fn member<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let gb = ctx.gb(ctx.degree()?)?;
    let mut all = true;
    let results: Vec<Value> = ctx
        .polys()?
        .iter()
        .map(|p| {
            let v = gb.member(p);
            all &= v == MembershipVerdict::Member;
            json!({ "input": render::poly(p), "verdict": v.tag() })
        })
        .collect();
    Ok((json!({ "completion_degree": gb.completion_degree(), "results": results }), code_if(all)))
}

fn standard_monomials<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let d = ctx.degree()?;
    let gb = ctx.gb(d.max(ctx.file_degree()))?;
    let words = gb.standard_monomials(d)?;
    Ok((
        json!({ "degree": d, "count": words.len(), "words": render::words(&words) }),
        EXIT_OK,
    ))
}

fn codim<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let gb = ctx.gb(ctx.degree()?)?;
    let (verdict, dim) = gb.finite_codimension();
    let code = code_if(verdict != CodimVerdict::Unknown);
    Ok((
        json!({ "completion_degree": gb.completion_degree(), "verdict": verdict.tag(), "dimension": dim }),
        code,
    ))
}

fn split_check<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let gb = ctx.gb(ctx.degree()?)?;
    let split = gb.star_split_check()?;
    Ok((
        json!({
            "holds": split.holds,
            "analytic": render::polys(&split.analytic),
            "antianalytic": render::polys(&split.antianalytic),
        }),
        code_if(split.holds),
    ))
}

fn functional_for<S: Scalar>(ctx: &Ctx<S>, d: usize) -> Result<MomentFunctional<S>, CliError> {
    let gb = ctx.gb((2 * d).max(ctx.file_degree()))?;
    Ok(build_functional_with(&gb, d, ctx.policy())?)
}

fn functional<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let d = ctx.explicit_degree()?;
    let l = functional_for(ctx, d)?;
    let words = l.gb().standard_monomials(d)?;
    let mm = l.moment_matrix(&words)?;
    Ok((
        json!({
            "degree": d,
            "policy": ctx.policy().tag(),
            "constants": l.constants().iter().map(render::rational).collect::<Vec<_>>(),
            "star_symmetric": l.star_symmetric(),
            "moment_words": render::words(&mm.words),
            "moment_matrix": render::matrix(&mm.entries),
        }),
        EXIT_OK,
    ))
}

fn verify_functional<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let d = ctx.explicit_degree()?;
    let l = functional_for(ctx, d)?;
    let r = l.verify(d)?;
    Ok((
        json!({
            "degree": d,
            "policy": ctx.policy().tag(),
            "constants": l.constants().iter().map(render::rational).collect::<Vec<_>>(),
            "hermitian": r.hermitian,
            "words_checked": r.words_checked,
            "vanishes_on_ideal": r.vanishes_on_ideal,
            "ideal_elements_checked": r.ideal_elements_checked,
            "positive_definite": r.positive_definite,
            "moment_size": r.moment_size,
            "minors": render::vector(&r.minors),
            "passed": r.passed(),
        }),
        code_if(r.passed()),
    ))
}

fn witness<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let d = ctx.explicit_degree()?;
    let ideal = ctx.ideal()?;
    let w = build_witness_with(&ideal, d, ctx.policy())?;
    let mut vanish = true;
    let gens: Vec<Value> = ideal
        .star_generators()
        .iter()
        .map(|q| {
            let zero = w.evaluate(q).map(|m| m.is_zero())?;
            vanish &= zero;
            Ok(json!({ "generator": render::poly(q), "zero": zero }))
        })
        .collect::<Result<_, CliError>>()?;
    Ok((
        json!({
            "degree": d,
            "policy": ctx.policy().tag(),
            "dim": w.dim(),
            "constants": w.functional.constants().iter().map(render::rational).collect::<Vec<_>>(),
            "basis_words": render::words(&w.basis_words),
            "basis": render::polys(&w.basis),
            "gram": render::matrix(&w.gram),
            "operators": render::matrices(&w.xop),
            "adjoints": render::matrices(&w.xadj),
            "generators": gens,
            "generators_vanish": vanish,
            "adjoint_identity": w.adjoint_identity_holds(),
        }),
        EXIT_OK,
    ))
}

fn verify_witness_cmd<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let d = ctx.explicit_degree()?;
    let ideal = ctx.ideal()?;
    let probes = ctx.polys_in(ideal.g())?;
    let w = build_witness_with(&ideal, d, ctx.policy())?;
    let r = verify_witness(&w, &ideal, &probes)?;
    let probes: Vec<Value> = r
        .probes
        .iter()
        .map(|o| json!({ "probe": render::poly(&o.probe), "verdict": o.verdict.tag(), "passed": o.passed }))
        .collect();
    Ok((
        json!({
            "degree": d,
            "dim": w.dim(),
            "generators_vanish": r.generators_vanish,
            "adjoint_identity": r.adjoint_identity,
            "probes": probes,
            "passed": r.passed(),
        }),
        code_if(r.passed()),
    ))
}

fn bounded_family_cmd<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let d_max = ctx.explicit_degree()?;
    let family = bounded_family(&ctx.ideal()?, d_max)?;
    let members: Vec<Value> = family
        .iter()
        .map(|s| {
            json!({
                "degree": s.witness.d,
                "dim": s.witness.dim(),
                "scale": render::rational(&s.scale),
                "norm_sq_bound": render::rational(&s.norm_sq_bound),
                "gram": render::matrix(&s.witness.gram),
                "operators": render::matrices(&s.xop),
                "adjoints": render::matrices(&s.xadj),
            })
        })
        .collect();
    let (ops, adjs) = direct_sum(&family);
    let sum_bound = norm_sq_upper_bound(&ops, &adjs);
    let contractive = family.iter().all(|s| s.norm_sq_bound <= Rational::from_integer(1.into()));
    Ok((
        json!({
            "max_degree": d_max,
            "family": members,
            "direct_sum_dim": ops.first().map_or(0, |m| m.rows()),
            "direct_sum_norm_sq_bound": render::rational(&sum_bound),
            "contractive": contractive,
        }),
        code_if(contractive),
    ))
}

fn eval<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let (name, x) = ctx.tuple()?;
    let results: Vec<Value> = ctx
        .polys()?
        .iter()
        .map(|p| Ok(json!({ "input": render::poly(p), "value": render::matrix(&evaluate_at(p, &x)?) })))
        .collect::<Result<_, CliError>>()?;
    Ok((json!({ "tuple": name, "results": results }), EXIT_OK))
}

fn zero_class_cmd<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let (name, x) = ctx.tuple()?;
    let results: Vec<Value> = ctx
        .polys()?
        .iter()
        .map(|p| Ok(json!({ "input": render::poly(p), "class": zero_class(p, &x)?.tag() })))
        .collect::<Result<_, CliError>>()?;
    Ok((json!({ "tuple": name, "results": results }), EXIT_OK))
}

fn vanishing<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let d = ctx.degree()?;
    let named = ctx.tuples()?;
    let tuples: Vec<MatrixTuple<S>> = named.iter().map(|(_, t)| t.clone()).collect();
    let basis = vanishing_ideal(&tuples, d)?;
    Ok((
        json!({
            "degree": d,
            "tuples": named.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
            "dim": basis.len(),
            "basis": render::polys(&basis),
        }),
        EXIT_OK,
    ))
}

fn required_vector<S: Scalar>(ctx: &Ctx<S>) -> Result<(String, Vec<S>), CliError> {
    ctx.vector()?.ok_or_else(|| usage("this command needs --vector NAME"))
}

fn left_vanishing<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let d = ctx.degree()?;
    let (name, x) = ctx.tuple()?;
    let (vname, v) = required_vector(ctx)?;
    let basis = left_vanishing_ideal(&x, &v, d)?;
    Ok((
        json!({ "degree": d, "tuple": name, "vector": vname, "dim": basis.len(), "basis": render::polys(&basis) }),
        EXIT_OK,
    ))
}

fn commutant<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let (name, x) = ctx.tuple()?;
    let t = commutant_type(&x)?;
    let seh = if t.label.is_irreducible() {
        Value::Bool(soft_equals_hard(&x)?)
    } else {
        Value::Null
    };
    Ok((
        json!({
            "tuple": name,
            "n": t.n,
            "commutant_dim": t.commutant_dim,
            "algebra_dim": t.algebra_dim,
            "label": t.label.tag(),
            "irreducible": t.label.is_irreducible(),
            "soft_equals_hard": seh,
        }),
        EXIT_OK,
    ))
}

fn soft_check<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let mut ps = ctx.polys()?;
    if ps.len() != 1 {
        return Err(usage("soft-check takes exactly one --poly"));
    }
    let p = ps.remove(0);
    let named = ctx.tuples()?;
    let tuples: Vec<MatrixTuple<S>> = named.iter().map(|(_, t)| t.clone()).collect();
    let r = soft_condition_check(&p, &tuples)?;
    let reps: Vec<Value> = r
        .reps
        .iter()
        .map(|o| {
            json!({
                "tuple": named[o.index].0,
                "soft_zero": o.soft_zero,
                "hard_zero": o.hard_zero,
                "soft_equals_hard": o.soft_equals_hard,
            })
        })
        .collect();
    let ok = r.soft_equals_hard_holds && r.soft_implies_hard_holds;
    Ok((
        json!({
            "input": render::poly(&p),
            "reps": reps,
            "soft_equals_hard_holds": r.soft_equals_hard_holds,
            "soft_implies_hard_holds": r.soft_implies_hard_holds,
        }),
        code_if(ok),
    ))
}

/// The quotient named by the flags: the left ideal of a tuple and vector,
/// the two-sided vanishing ideal of a tuple, or the problem's ideal.
fn quotient<S: Scalar>(ctx: &Ctx<S>) -> Result<(String, FiniteQuotient<S>), CliError> {
    let d = ctx.degree()?;
    if ctx.opts.tuples.is_empty() {
        let gb = ctx.gb(d)?;
        return Ok(("ideal".into(), regular_representation(&gb)?));
    }
    let (name, x) = ctx.tuple()?;
    if let Some((vname, v)) = ctx.vector()? {
        let left = left_vanishing_ideal(&x, &v, d)?;
        return Ok((format!("left:{name}:{vname}"), from_left_ideal(x.g(), &left, d)?));
    }
    let gens = vanishing_ideal(&[x.clone()], d)?;
    let gb = complete(&IdealPresentation::new(x.g(), gens)?, 2 * d)?;
    Ok((format!("vanishing:{name}"), regular_representation(&gb)?))
}

fn regrep<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let (source, q) = quotient(ctx)?;
    let mut mult = Map::new();
    for l in Letter::alphabet(q.g()) {
        mult.insert(l.to_string(), render::matrix(q.left_mult(l)));
    }
    Ok((
        json!({ "source": source, "dim": q.dim(), "basis": render::words(q.basis()), "left_mult": mult }),
        EXIT_OK,
    ))
}

fn z_ideal_cmd<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let d = ctx.degree()?;
    let (g, left, source) = if ctx.opts.tuples.is_empty() {
        let p = ctx.problem()?;
        (p.g, p.generators.clone(), "generators".to_string())
    } else {
        let (name, x) = ctx.tuple()?;
        let (vname, v) = required_vector(ctx)?;
        (x.g(), left_vanishing_ideal(&x, &v, d)?, format!("left:{name}:{vname}"))
    };
    let s = spanning_degree(g, &left, d);
    let z = z_ideal(g, &left, d)?;
    Ok((
        json!({
            "source": source,
            "degree": d,
            "spanning_degree": s,
            "degree_cap": d - s,
            "dim": z.len(),
            "basis": render::polys(&z),
        }),
        EXIT_OK,
    ))
}

fn hat_member_cmd<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let (source, q) = quotient(ctx)?;
    let mut all = true;
    let results: Vec<Value> = ctx
        .polys_in(q.g())?
        .iter()
        .map(|p| {
            let m = hat_member(p, &q)?;
            all &= m;
            Ok(json!({ "input": render::poly(p), "hat_member": m }))
        })
        .collect::<Result<_, CliError>>()?;
    Ok((json!({ "source": source, "dim": q.dim(), "results": results }), code_if(all)))
}

fn qweyl_system<S: Scalar>(ctx: &Ctx<S>, min_bound: usize) -> Result<QWeylSystem<S>, CliError> {
    let bound = ctx.opts.degree.unwrap_or(QWEYL_BOUND).max(min_bound);
    Ok(QWeylSystem::new(ctx.q()?, bound)?)
}

fn canon<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let algebra = ctx.opts.algebra.ok_or_else(|| usage("canon needs --algebra toeplitz|qweyl"))?;
    match algebra {
        Algebra::Toeplitz => {
            let results: Vec<Value> = ctx
                .polys_in(1)?
                .iter()
                .map(|p| Ok(json!({ "input": render::poly(p), "canonical": render::poly(&toeplitz_canon(p)?) })))
                .collect::<Result<_, CliError>>()?;
            Ok((json!({ "algebra": "toeplitz", "results": results }), EXIT_OK))
        }
        Algebra::Qweyl => {
            let sys = qweyl_system(ctx, 0)?;
            let results: Vec<Value> = ctx
                .polys_in(2)?
                .iter()
                .map(|p| Ok(json!({ "input": render::poly(p), "canonical": render::poly(&qweyl_canon(p, &sys)?) })))
                .collect::<Result<_, CliError>>()?;
            Ok((
                json!({
                    "algebra": "qweyl",
                    "q": render::rational(sys.q()),
                    "system": gb_summary(sys.gb()),
                    "results": results,
                }),
                EXIT_OK,
            ))
        }
    }
}

fn qweyl_identities<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let m_max = ctx.opts.degree.unwrap_or(QWEYL_M_MAX);
    let sys = qweyl_system(ctx, 2 * m_max)?;
    let ks: Vec<Rational> = if ctx.opts.ks.is_empty() {
        [1, 2, 7].iter().map(|&k| Rational::from_integer(k.into())).collect()
    } else {
        ctx.opts.ks.iter().map(|s| parse_q(s)).collect::<Result<_, _>>()?
    };
    let r = verify_qweyl_identities(&sys, m_max, &ks)?;
    let pairs = |v: &[(usize, bool)]| v.iter().map(|(m, ok)| json!({ "m": m, "zero": ok })).collect::<Vec<_>>();
    Ok((
        json!({
            "q": render::rational(sys.q()),
            "m_max": m_max,
            "k_identity": r.k_identity.iter().map(|(k, ok)| json!({ "k": render::rational(k), "zero": ok })).collect::<Vec<_>>(),
            "lower_power": pairs(&r.lower_power),
            "upper_power": pairs(&r.upper_power),
            "passed": r.passed(),
        }),
        code_if(r.passed()),
    ))
}

fn trace_form<S: Scalar>(ctx: &Ctx<S>) -> Out {
    let results: Vec<Value> = ctx
        .polys()?
        .iter()
        .map(|p| {
            json!({
                "input": render::poly(p),
                "trace_normal_form": render::poly(&trace_normal_form(p)),
                "obstruction": trace_obstruction(p).as_ref().map(render::scalar),
            })
        })
        .collect();
    Ok((json!({ "results": results }), EXIT_OK))
}
