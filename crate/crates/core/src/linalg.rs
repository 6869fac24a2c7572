//! Exact scalars, dense matrices and canonical subspaces.
//!
//! Every routine takes the field as an explicit context so that the same code
//! runs over the rationals and over any prime field.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// A field given as a context object.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; division by zero is rejected.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, Error>;
    /// Short name recorded in reports, e.g. `Q` or `F_7`.
    fn describe(&self) -> String;
    fn format(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a - b * c`, the elimination kernel.
    fn mul_sub(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(b, c))
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, Error> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn describe(&self) -> String {
        "Q".to_string()
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
}

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Result<u64, Error> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2)
        let mut base = *a;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Ok(acc)
    }
    fn describe(&self) -> String {
        format!("F_{}", self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<E>], zero: E) -> Self {
        let mut m = Matrix::filled(rows, columns.len(), zero);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix column");
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        let mut out = vec![f.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !f.is_zero(a) {
                    *o = f.add(o, &f.mul(a, x));
                }
            }
        }
        out
    }

    /// `self * other`.
    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !f.is_zero(b) {
                        let cur = out.get(r, c).clone();
                        out.set(r, c, f.add(&cur, &f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Matrix<E> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        let mut rows = self.to_rows();
        rref(f, &mut rows, self.cols).len()
    }
}

/// Reduces `rows` in place to reduced row-echelon form, drops zero rows and
/// returns the pivot columns.
pub fn rref<F: Field>(f: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !f.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(next, found);
        let inv = f.inv(&rows[next][col]).expect("pivot is nonzero");
        if !f.is_one(&inv) {
            for x in rows[next].iter_mut() {
                if !f.is_zero(x) {
                    *x = f.mul(x, &inv);
                }
            }
        }
        let support: Vec<usize> = (col..ncols)
            .filter(|&c| !f.is_zero(&rows[next][c]))
            .collect();
        let pivot_row = std::mem::take(&mut rows[next]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || f.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for &c in &support {
                row[c] = f.mul_sub(&row[c], &factor, &pivot_row[c]);
            }
        }
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

/// A subspace of `K^n` held by its canonical reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full<F: Field<Elem = E>>(f: &F, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(f, ambient, i)).collect();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of the given vectors.
    pub fn span<F: Field<Elem = E>>(f: &F, ambient: usize, vectors: Vec<Vec<E>>) -> Self {
        let mut rows = vectors;
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length differs from ambient");
        }
        let pivots = rref(f, &mut rows, ambient);
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Standard coordinates not used as pivots; their unit vectors span a
    /// complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Subtracts the pivot components; the result vanishes on pivot columns and
    /// is zero exactly when `v` lies in the subspace.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&out[p]) {
                continue;
            }
            let factor = out[p].clone();
            for (c, x) in row.iter().enumerate() {
                if !f.is_zero(x) {
                    out[c] = f.mul_sub(&out[c], &factor, x);
                }
            }
        }
        out
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        self.reduce(f, v).iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coords<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        if !self.contains(f, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Subspace::span(f, self.ambient, rows))
    }

    pub fn intersection<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        // x = Σ a_i u_i = Σ b_j v_j  <=>  (a, -b) in the kernel of [U; V]^T
        let n = self.dim() + other.dim();
        let mut rows = Vec::with_capacity(self.ambient);
        for c in 0..self.ambient {
            let mut row = Vec::with_capacity(n);
            row.extend(self.basis.iter().map(|u| u[c].clone()));
            row.extend(other.basis.iter().map(|v| v[c].clone()));
            rows.push(row);
        }
        let kernel = kernel_of_rows(f, rows, n);
        let vectors = kernel
            .basis
            .iter()
            .map(|coeffs| {
                let mut x = vec![f.zero(); self.ambient];
                for (a, u) in coeffs.iter().zip(&self.basis) {
                    if f.is_zero(a) {
                        continue;
                    }
                    for (xi, ui) in x.iter_mut().zip(u) {
                        *xi = f.add(xi, &f.mul(a, ui));
                    }
                }
                x
            })
            .collect();
        Ok(Subspace::span(f, self.ambient, vectors))
    }

    pub fn is_subset<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<bool, Error> {
        self.check_ambient(other)?;
        Ok(self.basis.iter().all(|v| other.contains(f, v)))
    }

    /// `dim self - dim (self ∩ other)`.
    pub fn quotient_dim<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Result<usize, Error> {
        Ok(self.dim() - self.intersection(f, other)?.dim())
    }

    fn check_ambient(&self, other: &Self) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

pub fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Solutions `x` of `A x = 0`, where `A` is given by its rows.
pub fn kernel_of_rows<F: Field>(f: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> Subspace<F::Elem> {
    let mut rows = rows;
    let pivots = rref(f, &mut rows, ncols);
    let mut is_pivot = vec![None; ncols];
    for (r, &p) in pivots.iter().enumerate() {
        is_pivot[p] = Some(r);
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut x = vec![f.zero(); ncols];
        x[free] = f.one();
        for (r, &p) in pivots.iter().enumerate() {
            if !f.is_zero(&rows[r][free]) {
                x[p] = f.neg(&rows[r][free]);
            }
        }
        basis.push(x);
    }
    Subspace::span(f, ncols, basis)
}

/// Kernel of a matrix acting on column vectors.
pub fn kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    kernel_of_rows(f, m.to_rows(), m.cols())
}

/// Image (column space) of a matrix.
pub fn image<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    Subspace::span(f, m.rows(), m.transpose().to_rows())
}

/// Solves `A x = b` for one particular solution.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let mut rows: Vec<Vec<F::Elem>> = (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = rref(f, &mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![f.zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = rows[r][n].clone();
    }
    Some(x)
}

/// Incremental independence tracker that also records how each stored vector
/// is combined from the vectors offered so far.
#[derive(Clone, Debug)]
pub struct Tracker<E> {
    ambient: usize,
    // reduced rows, pivot column, combination of accepted originals
    rows: Vec<(Vec<E>, usize, Vec<E>)>,
    accepted: usize,
}

impl<E: Clone + PartialEq> Tracker<E> {
    pub fn new(ambient: usize) -> Self {
        Tracker {
            ambient,
            rows: Vec::new(),
            accepted: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.accepted
    }

    pub fn is_empty(&self) -> bool {
        self.accepted == 0
    }

    pub fn is_full(&self) -> bool {
        self.accepted == self.ambient
    }

    fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> (Vec<E>, Vec<E>) {
        let mut residual = v.to_vec();
        let mut combo = vec![f.zero(); self.accepted];
        for (row, p, row_combo) in &self.rows {
            if f.is_zero(&residual[*p]) {
                continue;
            }
            let factor = residual[*p].clone();
            for (c, x) in row.iter().enumerate() {
                if !f.is_zero(x) {
                    residual[c] = f.mul_sub(&residual[c], &factor, x);
                }
            }
            for (k, x) in row_combo.iter().enumerate() {
                if !f.is_zero(x) {
                    combo[k] = f.add(&combo[k], &f.mul(&factor, x));
                }
            }
        }
        (residual, combo)
    }

    /// Accepts `v` if it is independent of the accepted vectors.
    pub fn offer<F: Field<Elem = E>>(&mut self, f: &F, v: &[E]) -> bool {
        let (residual, combo) = self.reduce(f, v);
        let Some(p) = residual.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&residual[p]).expect("nonzero pivot");
        let row: Vec<E> = residual.iter().map(|x| f.mul(x, &inv)).collect();
        // row = (v - Σ combo_k orig_k) * inv
        let mut row_combo: Vec<E> = combo.iter().map(|x| f.neg(&f.mul(x, &inv))).collect();
        row_combo.push(inv);
        for (_, _, c) in self.rows.iter_mut() {
            c.push(f.zero());
        }
        self.rows.push((row, p, row_combo));
        self.accepted += 1;
        true
    }

    /// Coordinates of `v` in terms of the accepted vectors, in order.
    pub fn coords<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        let (residual, combo) = self.reduce(f, v);
        if residual.iter().any(|x| !f.is_zero(x)) {
            return None;
        }
        Some(combo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        Rationals.from_i64(v)
    }

    fn vecq(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn echelon_examples() {
        let f = Rationals;
        let id = Subspace::span(&f, 3, (0..3).map(|i| unit(&f, 3, i)).collect());
        assert_eq!(id.dim(), 3);
        let z = Subspace::span(&f, 3, vec![vecq(&[0, 0, 0]), vecq(&[0, 0, 0])]);
        assert_eq!(z.dim(), 0);
        let s = Subspace::span(&f, 2, vec![vecq(&[1, 1]), vecq(&[2, 2])]);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis()[0], vecq(&[1, 1]));
    }

    #[test]
    fn subspace_operations() {
        let f = Rationals;
        let a = Subspace::span(&f, 2, vec![vecq(&[1, 0])]);
        let b = Subspace::span(&f, 2, vec![vecq(&[0, 1])]);
        assert_eq!(a.sum(&f, &b).unwrap().dim(), 2);
        assert_eq!(a.intersection(&f, &b).unwrap().dim(), 0);
        assert_eq!(a.intersection(&f, &a).unwrap(), a);
        assert_eq!(a.quotient_dim(&f, &a).unwrap(), 0);
        let full = Subspace::full(&f, 4);
        assert_eq!(full.quotient_dim(&f, &Subspace::zero(4)).unwrap(), 4);
        assert!(a.sum(&f, &Subspace::zero(3)).is_err());
    }

    #[test]
    fn solve_linear_examples() {
        let f = Rationals;
        assert_eq!(kernel_of_rows(&f, vec![], 3).dim(), 3);
        assert_eq!(kernel(&f, &Matrix::identity(&f, 3)).dim(), 0);
        let k = kernel_of_rows(&f, vec![vecq(&[1, 1])], 2);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&f, &vecq(&[1, -1])));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &f.inv(&3).unwrap()), 1);
        assert_eq!(f.from_i64(-1), 6);
        assert!(PrimeField::new(8).is_err());
        assert!(f.inv(&0).is_err());
        let s = Subspace::span(&f, 2, vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn tracker_coordinates() {
        let f = Rationals;
        let mut t = Tracker::new(3);
        assert!(t.offer(&f, &vecq(&[1, 1, 0])));
        assert!(t.offer(&f, &vecq(&[0, 1, 1])));
        assert!(!t.offer(&f, &vecq(&[1, 2, 1])));
        assert_eq!(t.coords(&f, &vecq(&[2, 3, 1])).unwrap(), vecq(&[2, 1]));
        assert!(t.coords(&f, &vecq(&[1, 0, 0])).is_none());
    }

    #[test]
    fn solve_particular() {
        let f = Rationals;
        let a = Matrix::from_rows(2, vec![vecq(&[1, 1]), vecq(&[0, 2])]);
        let x = solve(&f, &a, &vecq(&[3, 4])).unwrap();
        assert_eq!(a.apply(&f, &x), vecq(&[3, 4]));
        let singular = Matrix::from_rows(2, vec![vecq(&[1, 1]), vecq(&[1, 1])]);
        assert!(solve(&f, &singular, &vecq(&[1, 2])).is_none());
    }
}
