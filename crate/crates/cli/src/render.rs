//! JSON rendering of library values. Scalars are strings the polynomial
//! parser accepts; matrices are row-major arrays.

use freestar::scalar::{format_rational, format_scalar};
use freestar::{format_poly, Matrix, Polynomial, Rational, Scalar, Word};
use serde_json::{json, Value};

pub fn scalar<S: Scalar>(s: &S) -> Value {
    Value::String(format_scalar(s))
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn poly<S: Scalar>(p: &Polynomial<S>) -> Value {
    Value::String(format_poly(p))
}

pub fn polys<S: Scalar>(ps: &[Polynomial<S>]) -> Value {
    Value::Array(ps.iter().map(poly).collect())
}

pub fn word(w: &Word) -> Value {
    Value::String(w.to_string())
}

pub fn words(ws: &[Word]) -> Value {
    Value::Array(ws.iter().map(word).collect())
}

pub fn vector<S: Scalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn matrix<S: Scalar>(m: &Matrix<S>) -> Value {
    Value::Array((0..m.rows()).map(|i| vector(m.row(i))).collect())
}

pub fn matrices<S: Scalar>(ms: &[Matrix<S>]) -> Value {
    Value::Array(ms.iter().map(matrix).collect())
}

pub fn error(kind: &str, message: &str) -> Value {
    json!({ "error": kind, "message": message })
}
