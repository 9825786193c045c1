//! Normal form modulo commutators, the algebraic shadow of the matrix trace.

use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Replaces every word by the least word in its cyclic class and collects
/// coefficients. `Tr(p(X)) = Tr(trace_normal_form(p)(X))` for every tuple.
pub fn trace_normal_form<S: Scalar>(p: &Polynomial<S>) -> Polynomial<S> {
    let mut out = Polynomial::zero(p.g());
    for (w, c) in p.terms() {
        out.add_term(w.least_rotation(), c.clone());
    }
    out
}

/// If the trace normal form is a nonzero constant, `p` has no hard zero in
/// any matrix size. Returns that constant.
pub fn trace_obstruction<S: Scalar>(p: &Polynomial<S>) -> Option<S> {
    let t = trace_normal_form(p);
    t.as_constant().filter(|c| !c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};
    use crate::syntax::parse_poly;

    fn p(s: &str, g: usize) -> Polynomial<Rational> {
        parse_poly(s, g).unwrap()
    }

    #[test]
    fn commutator_plus_one() {
        assert_eq!(trace_normal_form(&p("x1*x2 - x2*x1 + 1", 2)), p("1", 2));
        assert_eq!(trace_normal_form(&p("x1*x2 - x2*x1", 2)), p("0", 2));
        assert_eq!(trace_obstruction(&p("x1*x2 - x2*x1 + 1", 2)), Some(rat(1, 1)));
    }

    #[test]
    fn weyl_relation() {
        assert_eq!(trace_normal_form(&p("x1*x1' - x1'*x1 - 1", 1)), p("-1", 1));
    }

    #[test]
    fn idempotent() {
        let q = p("x2*x1*x1' + 3*x1'*x2*x1 - x1*x1'*x2 + x2'", 2);
        let t = trace_normal_form(&q);
        assert_eq!(trace_normal_form(&t), t);
        assert_eq!(trace_obstruction(&q), None);
    }
}
