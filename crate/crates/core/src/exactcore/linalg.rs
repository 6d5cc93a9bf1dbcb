//! Exact linear algebra: dense matrices over a field (rationals or rational
//! functions), fraction-free integer determinants, Smith normal form, integer
//! kernels and rational signatures.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, ExactResult, MultiPoly, Rational, RationalFunction};

/// Field operations needed by the generic elimination.
pub trait FieldElem: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl FieldElem for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl FieldElem for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        RationalFunction::div(self, other).expect("division by zero entry")
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Dense rectangular matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type QMatrix = Mat<Rational>;
pub type RFMatrix = Mat<RationalFunction>;

impl<T: Clone> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: FieldElem> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(other.at(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).sub(other.at(i, j)))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Row-reduce a copy; returns (reduced matrix, pivot columns).
    fn row_echelon(&self) -> (Mat<T>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.at(r, j).clone();
                let v = m.at(p, j).clone();
                m.set(r, j, v);
                m.set(p, j, tmp);
            }
            let inv = m.at(r, c).clone();
            for j in 0..m.cols {
                let v = m.at(r, j).div(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.at(i, j).sub(&f.mul(m.at(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = T::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                return T::zero();
            };
            if p != c {
                det = det.neg();
                for j in 0..m.cols {
                    let tmp = m.at(c, j).clone();
                    let v = m.at(p, j).clone();
                    m.set(c, j, v);
                    m.set(p, j, tmp);
                }
            }
            let piv = m.at(c, c).clone();
            det = det.mul(&piv);
            for i in c + 1..m.rows {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).div(&piv);
                for j in c..m.cols {
                    let v = m.at(i, j).sub(&f.mul(m.at(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (m, pivots) = self.row_echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![T::zero(); self.cols];
            v[f] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m.at(r, f).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `A x = b`: particular solution (if consistent) plus kernel basis.
    pub fn solve(&self, b: &[T]) -> LinearSolution<T> {
        assert_eq!(self.rows, b.len(), "rhs length");
        let aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (m, pivots) = aug.row_echelon();
        if pivots.contains(&self.cols) {
            return LinearSolution { particular: None, nullspace: self.nullspace() };
        }
        let mut x = vec![T::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m.at(r, self.cols).clone();
        }
        LinearSolution { particular: Some(x), nullspace: self.nullspace() }
    }
}

/// Result of an exact linear solve.
#[derive(Debug, Clone)]
pub struct LinearSolution<T> {
    /// `None` when the system is inconsistent.
    pub particular: Option<Vec<T>>,
    pub nullspace: Vec<Vec<T>>,
}

// ---------------------------------------------------------------------------
// integer matrices
// ---------------------------------------------------------------------------

/// Dense integer matrix with fraction-free algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IMat {
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IMat {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IMat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        IMat::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IMat {
        IMat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn matmul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows);
        IMat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.at(i, k) * other.at(k, j);
            }
            acc
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn to_rational(&self) -> QMatrix {
        Mat::from_fn(self.rows, self.cols, |i, j| Rational::from_integer(self.at(i, j).clone()))
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.at(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    let a = m.at(k, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(k, j, b);
                    m.set(p, j, a);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }

    /// Smith normal form: returns the diagonal (elementary divisors, each
    /// dividing the next, zeros last).
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let mut m = self.clone();
        let (r, c) = (m.rows, m.cols);
        let n = r.min(c);
        let mut diag = Vec::with_capacity(n);
        let mut top = 0usize;
        while top < n {
            // find smallest nonzero entry in the working block
            let mut pivot: Option<(usize, usize)> = None;
            for i in top..r {
                for j in top..c {
                    if !m.at(i, j).is_zero() {
                        match pivot {
                            None => pivot = Some((i, j)),
                            Some((pi, pj)) => {
                                if m.at(i, j).abs() < m.at(pi, pj).abs() {
                                    pivot = Some((i, j));
                                }
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            m.swap_rows(top, pi);
            m.swap_cols(top, pj);
            // eliminate; restart if a remainder becomes the new smaller pivot
            let mut clean = true;
            for i in top + 1..r {
                if !m.at(i, top).is_zero() {
                    let q = div_round(m.at(i, top), m.at(top, top));
                    m.row_sub(i, top, &q);
                    if !m.at(i, top).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in top + 1..c {
                if !m.at(top, j).is_zero() {
                    let q = div_round(m.at(top, j), m.at(top, top));
                    m.col_sub(j, top, &q);
                    if !m.at(top, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // divisibility sweep for the remaining block
            let mut needs_more = false;
            'outer: for i in top + 1..r {
                for j in top + 1..c {
                    if !(m.at(i, j) % m.at(top, top)).is_zero() {
                        m.row_add(top, i);
                        needs_more = true;
                        break 'outer;
                    }
                }
            }
            if needs_more {
                continue;
            }
            diag.push(m.at(top, top).abs());
            top += 1;
        }
        while diag.len() < n {
            diag.push(BigInt::zero());
        }
        diag
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let x = self.at(a, j).clone();
            let y = self.at(b, j).clone();
            self.set(a, j, y);
            self.set(b, j, x);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let x = self.at(i, a).clone();
            let y = self.at(i, b).clone();
            self.set(i, a, y);
            self.set(i, b, x);
        }
    }

    fn row_sub(&mut self, i: usize, k: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.at(i, j) - q * self.at(k, j);
            self.set(i, j, v);
        }
    }

    fn col_sub(&mut self, j: usize, k: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.at(i, j) - q * self.at(i, k);
            self.set(i, j, v);
        }
    }

    fn row_add(&mut self, i: usize, k: usize) {
        for j in 0..self.cols {
            let v = self.at(i, j) + self.at(k, j);
            self.set(i, j, v);
        }
    }

    /// Basis of the integer kernel `{x : A x = 0}` as rows.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        // Row-reduce [A^T | I] over Z; rows whose A^T-part vanished give the
        // kernel lattice of A.
        let at = self.transpose();
        let n = at.rows; // = self.cols
        let mut m = IMat::from_fn(n, at.cols + n, |i, j| {
            if j < at.cols {
                at.at(i, j).clone()
            } else if j - at.cols == i {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        let mut row = 0usize;
        for col in 0..at.cols {
            // euclidean elimination in this column below `row`
            loop {
                let mut best: Option<usize> = None;
                for i in row..n {
                    if !m.at(i, col).is_zero() {
                        match best {
                            None => best = Some(i),
                            Some(b) => {
                                if m.at(i, col).abs() < m.at(b, col).abs() {
                                    best = Some(i);
                                }
                            }
                        }
                    }
                }
                let Some(b) = best else { break };
                m.swap_rows(row, b);
                let mut done = true;
                for i in row + 1..n {
                    if !m.at(i, col).is_zero() {
                        let q = div_round(m.at(i, col), m.at(row, col));
                        m.row_sub(i, row, &q);
                        if !m.at(i, col).is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    row += 1;
                    break;
                }
            }
            if row == n {
                break;
            }
        }
        let mut ker = Vec::new();
        for i in 0..n {
            if (0..at.cols).all(|j| m.at(i, j).is_zero()) {
                ker.push((0..n).map(|j| m.at(i, at.cols + j).clone()).collect());
            }
        }
        ker
    }

    /// Signature (positive, negative inertia) of a symmetric matrix; errors on
    /// a degenerate form.
    pub fn signature(&self) -> ExactResult<(usize, usize)> {
        signature_rational(&self.to_rational())
    }
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // quotient minimizing |a - qb|
    let (q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.sign() == b.sign()) || (-&r).sign() != b.sign() && r.sign() != num_bigint::Sign::NoSign {
            // adjust toward reducing remainder magnitude
            if r.sign() == b.sign() {
                return q + 1;
            }
            return q - 1;
        }
    }
    q
}

/// Inertia of a symmetric rational matrix via symmetric congruence pivoting.
pub fn signature_rational(m: &QMatrix) -> ExactResult<(usize, usize)> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(ExactError::Dimension("signature needs a square matrix".into()));
    }
    let mut a = m.clone();
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut k = 0usize;
    while k < n {
        if num_traits::Zero::is_zero(a.at(k, k)) {
            // look for a later nonzero diagonal entry to swap in
            if let Some(p) = (k + 1..n).find(|&i| !num_traits::Zero::is_zero(a.at(i, i))) {
                sym_swap(&mut a, k, p);
            } else if let Some((i, j)) = find_offdiag(&a, k) {
                // congruence "add row/col j to i" makes the diagonal nonzero
                sym_add(&mut a, i, j);
                sym_swap(&mut a, k, i);
            } else {
                return Err(ExactError::Degenerate);
            }
        }
        let piv = a.at(k, k).clone();
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if num_traits::Zero::is_zero(a.at(i, k)) {
                continue;
            }
            let f = a.at(i, k) / &piv;
            for j in k..n {
                let v = a.at(i, j) - &f * a.at(k, j);
                a.set(i, j, v);
            }
            for j in k..n {
                let v = a.at(j, i).clone() - &f * a.at(j, k);
                a.set(j, i, v);
            }
        }
        k += 1;
    }
    Ok((pos, neg))
}

fn find_offdiag(a: &QMatrix, k: usize) -> Option<(usize, usize)> {
    for i in k..a.nrows() {
        for j in i + 1..a.nrows() {
            if !num_traits::Zero::is_zero(a.at(i, j)) {
                return Some((i, j));
            }
        }
    }
    None
}

fn sym_swap(a: &mut QMatrix, i: usize, j: usize) {
    let n = a.nrows();
    for c in 0..n {
        let x = a.at(i, c).clone();
        let y = a.at(j, c).clone();
        a.set(i, c, y);
        a.set(j, c, x);
    }
    for r in 0..n {
        let x = a.at(r, i).clone();
        let y = a.at(r, j).clone();
        a.set(r, i, y);
        a.set(r, j, x);
    }
}

fn sym_add(a: &mut QMatrix, i: usize, j: usize) {
    let n = a.nrows();
    for c in 0..n {
        let v = a.at(i, c) + a.at(j, c);
        a.set(i, c, v);
    }
    for r in 0..n {
        let v = a.at(r, i) + a.at(r, j);
        a.set(r, i, v);
    }
}

/// Convenience: an RF matrix from polynomial-expression strings
/// (`"num | den"` entries, see [`RationalFunction::parse`]).
pub fn rf_matrix(entries: &[&[&str]], vars: &[&str]) -> ExactResult<RFMatrix> {
    let rows = entries.len();
    let cols = entries.first().map(|r| r.len()).unwrap_or(0);
    let mut data = Vec::with_capacity(rows * cols);
    for row in entries {
        if row.len() != cols {
            return Err(ExactError::Dimension("ragged matrix literal".into()));
        }
        for src in *row {
            data.push(RationalFunction::parse(src, vars)?);
        }
    }
    Ok(Mat { rows, cols, data })
}

/// A polynomial matrix entry-wise promoted to rational functions.
pub fn poly_to_rf(m: &Mat<MultiPoly>) -> RFMatrix {
    m.map(|p| RationalFunction::from_poly(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{rat_i, Rational};

    #[test]
    fn identity_solve() {
        let a: QMatrix = Mat::identity(3);
        let b = vec![rat_i(1), rat_i(2), rat_i(3)];
        let s = a.solve(&b);
        assert_eq!(s.particular.unwrap(), b);
        assert!(s.nullspace.is_empty());
    }

    #[test]
    fn nullspace_of_1x2() {
        // [l, m] . x = 0 over the rational function field
        let l = RationalFunction::var("l");
        let m = RationalFunction::var("m");
        let a: RFMatrix = Mat::from_rows(vec![vec![l.clone(), m.clone()]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        // check A . n = 0
        let v = &ns[0];
        let r = &(&l * &v[0]) + &(&m * &v[1]);
        assert!(r.is_zero());
    }

    #[test]
    fn inconsistent_reported() {
        let a: QMatrix = Mat::from_rows(vec![vec![rat_i(1), rat_i(1)], vec![rat_i(1), rat_i(1)]]);
        let s = a.solve(&[rat_i(0), rat_i(1)]);
        assert!(s.particular.is_none());
        assert_eq!(s.nullspace.len(), 1);
    }

    #[test]
    fn bareiss_det() {
        let m = IMat::from_rows_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.det(), BigInt::from(-1));
        let m2 = IMat::from_rows_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
        assert_eq!(m2.det(), BigInt::from(4));
    }

    #[test]
    fn smith_and_kernel() {
        let m = IMat::from_rows_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let d = m.smith_diagonal();
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
        let a = IMat::from_rows_i64(&[vec![1, 1, 1, 1]]);
        let k = a.kernel();
        assert_eq!(k.len(), 3);
        for v in &k {
            let s: BigInt = v.iter().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn signature_hyperbolic() {
        let u = IMat::from_rows_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(u.signature().unwrap(), (1, 1));
        let d = IMat::from_rows_i64(&[vec![2, 1], vec![1, -2]]);
        assert_eq!(d.signature().unwrap(), (1, 1));
        let dg = IMat::from_rows_i64(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(dg.signature(), Err(crate::exactcore::ExactError::Degenerate));
    }

    #[test]
    fn det_field_matches_bareiss() {
        let m = IMat::from_rows_i64(&[vec![3, 1, 2], vec![0, -2, 5], vec![7, 1, 1]]);
        let q = m.to_rational();
        assert_eq!(q.det(), Rational::from_integer(m.det()));
    }
}
