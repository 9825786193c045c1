//! Dense matrices over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Rational, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn column(v: Vec<S>) -> Self {
        let n = v.len();
        Matrix {
            rows: n,
            cols: 1,
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vec(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_mul_assign(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn determinant(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(S::one());
        }
        let (mut a, _) = self.integral_scaled();
        let mut sign = S::one();
        let mut prev = S::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return Ok(S::zero()),
                }
            }
            a.bareiss_step(k, &prev);
            prev = a[(k, k)].clone();
        }
        let det_scaled = sign * a[(n - 1, n - 1)].clone();
        let (_, factor) = self.integral_scaled_factor();
        let denom = S::from_rational(Rational::from_integer(factor.pow(n as u32)));
        Ok(det_scaled / denom)
    }

    /// All leading principal minors `det(A[..k, ..k])`, `k = 1..=n`.
    pub fn leading_principal_minors(&self) -> Result<Vec<S>> {
        if !self.is_square() {
            return Err(Error::Dimension("minors of a non-square matrix".into()));
        }
        let n = self.rows;
        let (mut a, factor) = self.integral_scaled();
        let mut minors = Vec::with_capacity(n);
        let mut prev = S::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                // Elimination without pivoting stalls; finish with separate determinants.
                for m in k + 1..=n {
                    minors.push(self.leading_block(m).determinant()?);
                }
                return Ok(minors);
            }
            let unscale = S::from_rational(Rational::from_integer(factor.pow((k + 1) as u32)));
            minors.push(a[(k, k)].clone() / unscale);
            if k + 1 < n {
                a.bareiss_step(k, &prev);
                prev = a[(k, k)].clone();
            }
        }
        Ok(minors)
    }

    /// Exact positive definiteness: hermitian with all leading principal
    /// minors positive. Stops at the first nonpositive pivot.
    pub fn is_positive_definite(&self) -> Result<bool> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let n = self.rows;
        let (mut a, _) = self.integral_scaled();
        let mut prev = S::one();
        for k in 0..n {
            let pivot = &a[(k, k)];
            // Pivots of a hermitian matrix under Bareiss are real minors (scaled).
            let re = pivot.real_part();
            if !pivot.is_real() {
                return Err(Error::Internal("non-real pivot in hermitian elimination".into()));
            }
            if re <= Rational::zero() {
                return Ok(false);
            }
            if k + 1 < n {
                a.bareiss_step(k, &prev);
                prev = a[(k, k)].clone();
            }
        }
        Ok(true)
    }

    fn leading_block(&self, k: usize) -> Self {
        Self::from_fn(k, k, |i, j| self[(i, j)].clone())
    }

    /// One Bareiss step on pivot `k`: rows below are updated with the exact
    /// division by the previous pivot.
    fn bareiss_step(&mut self, k: usize, prev: &S) {
        let n = self.rows;
        let m = self.cols;
        let pivot = self[(k, k)].clone();
        let pivot_row: Vec<S> = self.row(k).to_vec();
        for i in k + 1..n {
            let lead = self[(i, k)].clone();
            for j in k + 1..m {
                let aij = &self.data[i * m + j];
                let mut v = if aij.is_zero() {
                    S::zero()
                } else {
                    pivot.mul_ref(aij)
                };
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v = v - lead.mul_ref(&pivot_row[j]);
                }
                if !v.is_zero() && !prev.is_one() {
                    v = v / prev.clone();
                }
                self.data[i * m + j] = v;
            }
            self.data[i * m + k] = S::zero();
        }
    }

    fn integral_scaled_factor(&self) -> (Matrix<S>, BigInt) {
        let mut l = BigInt::one();
        for a in &self.data {
            if !a.is_zero() {
                l = l.lcm(&a.denominator_lcm());
            }
        }
        let c = S::from_rational(Rational::from_integer(l.clone()));
        (self.scale(&c), l)
    }

    /// Multiplies by the common denominator so that all entries are integral
    /// (Gaussian integers in the complex case).
    fn integral_scaled(&self) -> (Matrix<S>, BigInt) {
        self.integral_scaled_factor()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = S::one() / a[(r, c)].clone();
            for j in c..a.cols {
                let v = a[(r, j)].mul_ref(&inv);
                a[(r, j)] = v;
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..a.cols {
                    if a[(r, j)].is_zero() {
                        continue;
                    }
                    let v = a[(i, j)].clone() - f.mul_ref(&a[(r, j)]);
                    a[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one vector per free column. The vector for
    /// free column `f` has a 1 at `f` and nonzeros only at earlier pivot
    /// columns.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f].is_some() {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[f] = S::one();
            for (row, &c) in pivots.iter().enumerate() {
                if c < f {
                    v[c] = -r[(row, f)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self · X = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if !self.is_square() || self.rows != rhs.rows {
            return Err(Error::Dimension("solve: incompatible shapes".into()));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, n + rhs.cols, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - n)].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Dimension("singular system".into()));
        }
        Ok(Self::from_fn(n, rhs.cols, |i, j| r[(i, n + j)].clone()))
    }

    pub fn inverse(&self) -> Result<Matrix<S>> {
        self.solve(&Self::identity(self.rows))
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Matrix<S>) -> Matrix<S> {
        let (r1, c1) = (self.rows, self.cols);
        Self::from_fn(r1 + other.rows, c1 + other.cols, |i, j| {
            if i < r1 && j < c1 {
                self[(i, j)].clone()
            } else if i >= r1 && j >= c1 {
                other[(i - r1, j - c1)].clone()
            } else {
                S::zero()
            }
        })
    }

    /// `max_i Σ_j |a_ij|` with `|·|` replaced by the rational bound `|re| + |im|`.
    pub fn max_row_sum_bound(&self) -> Rational {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .fold(Rational::zero(), |acc, a| acc + a.modulus_bound())
            })
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: Self) -> Matrix<S> {
        self.try_mul(rhs).expect("matrix product shapes")
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: Self) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: Self) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, rat, GaussianRational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Cofactor expansion, used as an independent determinant oracle.
    fn det_cofactor(a: &Matrix<Rational>) -> Rational {
        let n = a.rows();
        if n == 0 {
            return rat(1, 1);
        }
        let mut total = rat(0, 1);
        for j in 0..n {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                a[(r + 1, if c < j { c } else { c + 1 })].clone()
            });
            let term = a[(0, j)].clone() * det_cofactor(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn positive_definite_examples() {
        assert!(m(&[&[1]]).is_positive_definite().unwrap());
        assert!(!m(&[&[1, 2], &[2, 1]]).is_positive_definite().unwrap());
        assert!(m(&[&[2, 1], &[1, 2]]).is_positive_definite().unwrap());
        assert_eq!(
            m(&[&[1, 2], &[2, 1]]).leading_principal_minors().unwrap(),
            vec![rat(1, 1), rat(-3, 1)]
        );
        assert_eq!(
            m(&[&[2, 1], &[1, 2]]).leading_principal_minors().unwrap(),
            vec![rat(2, 1), rat(3, 1)]
        );
        assert_eq!(
            m(&[&[1, 2], &[3, 4]]).is_positive_definite(),
            Err(Error::NotHermitian)
        );
    }

    #[test]
    fn gaussian_hermitian_minors_are_real() {
        let a = Matrix::from_rows(vec![
            vec![gauss(2, 0), gauss(1, 1)],
            vec![gauss(1, -1), gauss(3, 0)],
        ])
        .unwrap();
        let minors = a.leading_principal_minors().unwrap();
        assert_eq!(minors, vec![gauss(2, 0), gauss(4, 0)]);
        assert!(a.is_positive_definite().unwrap());
        let b: Matrix<GaussianRational> = Matrix::from_rows(vec![
            vec![gauss(1, 0), gauss(0, 2)],
            vec![gauss(0, -2), gauss(1, 0)],
        ])
        .unwrap();
        assert!(!b.is_positive_definite().unwrap());
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        let a = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(0, 1), rat(3, 1), rat(-1, 3)],
            vec![rat(0, 1), rat(0, 1), rat(2, 5), rat(1, 1)],
            vec![rat(-2, 1), rat(7, 4), rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1)],
        ])
        .unwrap();
        assert_eq!(a.determinant().unwrap(), det_cofactor(&a));
        let singular = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(singular.determinant().unwrap(), rat(0, 1));
        let minors = a.leading_principal_minors().unwrap();
        for (k, minor) in minors.iter().enumerate() {
            let block = Matrix::from_fn(k + 1, k + 1, |i, j| a[(i, j)].clone());
            assert_eq!(*minor, det_cofactor(&block));
        }
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = a.kernel();
        assert_eq!(k, vec![vec![rat(-1, 1), rat(1, 1), rat(0, 1)]]);
        let sq = m(&[&[2, 1], &[1, 3]]);
        let inv = sq.inverse().unwrap();
        assert_eq!(&sq * &inv, Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }
}
