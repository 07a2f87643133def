use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use super::field::{mod_inv, FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Arithmetic over one concrete field representation.
pub(crate) trait Arith {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    /// a <- a - f * b
    fn sub_mul_assign(&self, a: &mut Self::E, f: &Self::E, b: &Self::E);
    fn to_scalar(&self, a: &Self::E) -> Scalar;
    fn embed_scalar(&self, s: &Scalar) -> Self::E;
    fn wrap(v: Vec<Self::E>) -> Entries;
}

#[derive(Clone, Copy)]
pub(crate) struct ModP(pub u32);

pub(crate) struct Rat;

impl Arith for ModP {
    type E = u32;
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.0 as u64) as u32
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.0 as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        mod_inv(*a, self.0).expect("inverse of zero")
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn sub_mul_assign(&self, a: &mut u32, f: &u32, b: &u32) {
        let p = self.0 as u64;
        let prod = (*f as u64 * *b as u64) % p;
        *a = ((*a as u64 + p - prod) % p) as u32;
    }
    fn to_scalar(&self, a: &u32) -> Scalar {
        Scalar::Mod {
            value: *a,
            modulus: self.0,
        }
    }
    fn embed_scalar(&self, s: &Scalar) -> u32 {
        match s {
            Scalar::Mod { value, modulus } if *modulus == self.0 => *value,
            _ => panic!("scalar from a different field"),
        }
    }
    fn wrap(v: Vec<u32>) -> Entries {
        Entries::Mod(v)
    }
}

impl Arith for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub_mul_assign(&self, a: &mut BigRational, f: &BigRational, b: &BigRational) {
        if !f.is_zero() && !b.is_zero() {
            *a = &*a - f * b;
        }
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rat(a.clone())
    }
    fn embed_scalar(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rat(q) => q.clone(),
            _ => panic!("scalar from a different field"),
        }
    }
    fn wrap(v: Vec<BigRational>) -> Entries {
        Entries::Rat(v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum Entries {
    Mod(Vec<u32>),
    Rat(Vec<BigRational>),
}

/// Dense row-major matrix over a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Entries,
}

macro_rules! with_arith {
    ($field:expr, $entries:expr, |$k:ident, $d:ident| $body:expr) => {
        match $entries {
            Entries::Mod($d) => {
                let $k = ModP($field.characteristic());
                $body
            }
            Entries::Rat($d) => {
                let $k = Rat;
                $body
            }
        }
    };
}

macro_rules! with_arith2 {
    ($field:expr, $e1:expr, $e2:expr, |$k:ident, $a:ident, $b:ident| $body:expr) => {
        match ($e1, $e2) {
            (Entries::Mod($a), Entries::Mod($b)) => {
                let $k = ModP($field.characteristic());
                $body
            }
            (Entries::Rat($a), Entries::Rat($b)) => {
                let $k = Rat;
                $body
            }
            _ => panic!("matrices over different fields"),
        }
    };
}

/// Reduced row echelon form together with its pivot data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Result of solving `a * x = b` column by column.
#[derive(Clone, Debug)]
pub struct Solution {
    /// A particular solution when every column of `b` is consistent.
    pub particular: Option<Mat>,
    /// Per-column particular solutions; `None` marks an inconsistent column.
    pub columns: Vec<Option<Mat>>,
    /// Columns span the kernel of `a`.
    pub kernel: Mat,
}

fn rref_in_place<K: Arith>(k: &K, d: &mut [K::E], rows: usize, cols: usize, pivot_limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_limit.min(cols) {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !k.is_zero(&d[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                d.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(&d[r * cols + c]);
        for j in c..cols {
            let v = k.mul(&d[r * cols + j], &inv);
            d[r * cols + j] = v;
        }
        let pivot_row: Vec<K::E> = d[r * cols + c..(r + 1) * cols].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = d[i * cols + c].clone();
            if k.is_zero(&f) {
                continue;
            }
            for (off, pv) in pivot_row.iter().enumerate() {
                if !k.is_zero(pv) {
                    k.sub_mul_assign(&mut d[i * cols + c + off], &f, pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn matmul<K: Arith>(k: &K, a: &[K::E], ar: usize, ac: usize, b: &[K::E], bc: usize) -> Vec<K::E> {
    let mut out = vec![k.zero(); ar * bc];
    for i in 0..ar {
        for t in 0..ac {
            let x = &a[i * ac + t];
            if k.is_zero(x) {
                continue;
            }
            let row = &b[t * bc..(t + 1) * bc];
            let dst = &mut out[i * bc..(i + 1) * bc];
            for (o, y) in dst.iter_mut().zip(row) {
                if !k.is_zero(y) {
                    *o = k.add(o, &k.mul(x, y));
                }
            }
        }
    }
    out
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let data = match field.characteristic() {
            0 => Entries::Rat(vec![BigRational::zero(); rows * cols]),
            _ => Entries::Mod(vec![0; rows * cols]),
        };
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        let one = field.one();
        for i in 0..n {
            m.set(i, i, &one);
        }
        m
    }

    pub fn from_scalars(field: FieldSpec, rows: usize, cols: usize, entries: &[Scalar]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InputShape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|s| s.field() != field) {
            return Err(Error::InvalidField("entry from a different field".into()));
        }
        let data = match field.characteristic() {
            0 => Entries::Rat(entries.iter().map(|s| Rat.embed_scalar(s)).collect()),
            p => Entries::Mod(entries.iter().map(|s| ModP(p).embed_scalar(s)).collect()),
        };
        Ok(Mat {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds from small integers, reduced into the field.
    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        let s: Vec<Scalar> = entries.iter().map(|&v| field.from_i64(v)).collect();
        Mat::from_scalars(field, rows, cols, &s).expect("shape checked")
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat::from_scalars(field, rows, cols, &entries).expect("shape checked")
    }

    /// Column vector from scalars.
    pub fn column_vector(field: FieldSpec, entries: &[Scalar]) -> Result<Self> {
        Mat::from_scalars(field, entries.len(), 1, entries)
    }

    /// The `i`-th standard basis column of length `n`.
    pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut v = Mat::zeros(field, n, 1);
        v.set(i, 0, &field.one());
        v
    }

    pub fn random<R: Rng + ?Sized>(field: FieldSpec, rows: usize, cols: usize, rng: &mut R) -> Self {
        Mat::from_fn(field, rows, cols, |_, _| random_scalar(field, rng))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
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

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        with_arith!(self.field, &self.data, |k, d| k.to_scalar(&d[i * self.cols + j]))
    }

    pub fn set(&mut self, i: usize, j: usize, v: &Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let idx = i * self.cols + j;
        let field = self.field;
        with_arith!(field, &mut self.data, |k, d| d[idx] = k.embed_scalar(v))
    }

    pub fn entries(&self) -> Vec<Scalar> {
        with_arith!(self.field, &self.data, |k, d| d
            .iter()
            .map(|x| k.to_scalar(x))
            .collect())
    }

    pub fn row_scalars(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        with_arith!(self.field, &self.data, |k, d| d.iter().all(|x| k.is_zero(x)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(self.field, self.rows)
    }

    #[allow(clippy::clone_on_copy)]
    pub fn transpose(&self) -> Mat {
        let (r, c) = (self.rows, self.cols);
        let data = with_arith!(self.field, &self.data, |k, d| {
            let _ = &k;
            let mut out = Vec::with_capacity(r * c);
            for j in 0..c {
                for i in 0..r {
                    out.push(d[i * c + j].clone());
                }
            }
            wrap_like(&k, out)
        });
        Mat {
            field: self.field,
            rows: c,
            cols: r,
            data,
        }
    }

    pub fn mul_mat(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let data = with_arith2!(self.field, &self.data, &other.data, |k, a, b| {
            wrap_like(&k, matmul(&k, a, self.rows, self.cols, b, other.cols))
        });
        Mat {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    fn zip_with(&self, other: &Mat, sub: bool) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = with_arith2!(self.field, &self.data, &other.data, |k, a, b| {
            let out: Vec<_> = a
                .iter()
                .zip(b)
                .map(|(x, y)| if sub { k.add(x, &k.neg(y)) } else { k.add(x, y) })
                .collect();
            wrap_like(&k, out)
        });
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let data = with_arith!(self.field, &self.data, |k, d| {
            let f = k.embed_scalar(s);
            let out: Vec<_> = d.iter().map(|x| k.mul(x, &f)).collect();
            wrap_like(&k, out)
        });
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `Σ coeffs[i] * mats[i]`; all matrices share one shape.
    pub fn linear_combination(field: FieldSpec, rows: usize, cols: usize, coeffs: &[Scalar], mats: &[&Mat]) -> Mat {
        assert_eq!(coeffs.len(), mats.len());
        let mut acc = Mat::zeros(field, rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            if !c.is_zero() {
                acc.add_scaled_assign(c, m);
            }
        }
        acc
    }

    /// self <- self + c * other
    pub fn add_scaled_assign(&mut self, c: &Scalar, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let field = self.field;
        match (&mut self.data, &other.data) {
            (Entries::Mod(a), Entries::Mod(b)) => {
                let k = ModP(field.characteristic());
                let f = k.neg(&k.embed_scalar(c));
                for (x, y) in a.iter_mut().zip(b) {
                    k.sub_mul_assign(x, &f, y);
                }
            }
            (Entries::Rat(a), Entries::Rat(b)) => {
                let f = Rat.embed_scalar(c);
                for (x, y) in a.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = &*x + &f * y;
                    }
                }
            }
            _ => panic!("matrices over different fields"),
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let c = self.cols;
        let data = with_arith!(self.field, &self.data, |k, d| {
            let mut out = Vec::with_capacity(idx.len() * c);
            for &i in idx {
                assert!(i < self.rows, "row index out of range");
                out.extend_from_slice(&d[i * c..(i + 1) * c]);
            }
            wrap_like(&k, out)
        });
        Mat {
            field: self.field,
            rows: idx.len(),
            cols: c,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let t = self.transpose().select_rows(idx);
        t.transpose()
    }

    pub fn column(&self, j: usize) -> Mat {
        self.select_cols(&[j])
    }

    pub fn columns(&self) -> Vec<Mat> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Mat {
        assert!(
            r0 + rows <= self.rows && c0 + cols <= self.cols,
            "submatrix out of range"
        );
        let idx: Vec<usize> = (r0..r0 + rows).collect();
        let cidx: Vec<usize> = (c0..c0 + cols).collect();
        self.select_rows(&idx).select_cols(&cidx)
    }

    /// Writes `block` with its top-left corner at (r0, c0).
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        assert!(
            r0 + block.rows <= self.rows && c0 + block.cols <= self.cols,
            "block out of range"
        );
        let (sc, bc) = (self.cols, block.cols);
        let field = self.field;
        match (&mut self.data, &block.data) {
            (Entries::Mod(a), Entries::Mod(b)) => {
                for i in 0..block.rows {
                    a[(r0 + i) * sc + c0..(r0 + i) * sc + c0 + bc].copy_from_slice(&b[i * bc..(i + 1) * bc]);
                }
            }
            (Entries::Rat(a), Entries::Rat(b)) => {
                for i in 0..block.rows {
                    a[(r0 + i) * sc + c0..(r0 + i) * sc + c0 + bc].clone_from_slice(&b[i * bc..(i + 1) * bc]);
                }
            }
            _ => panic!("matrices over different fields: {field}"),
        }
    }

    pub fn hstack(field: FieldSpec, rows: usize, parts: &[&Mat]) -> Mat {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut c = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            out.set_block(0, c, m);
            c += m.cols;
        }
        out
    }

    pub fn vstack(field: FieldSpec, cols: usize, parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut r = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            out.set_block(r, 0, m);
            r += m.rows;
        }
        out
    }

    pub fn block_diag(field: FieldSpec, parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for m in parts {
            out.set_block(r, c, m);
            r += m.rows;
            c += m.cols;
        }
        out
    }

    /// Kronecker product with `self` as the outer factor.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.set_block(i * other.rows, j * other.cols, &other.scale(&a));
                }
            }
        }
        out
    }

    /// Column-major flattening into a single column.
    pub fn vectorize(&self) -> Mat {
        let t = self.transpose();
        Mat {
            field: self.field,
            rows: self.rows * self.cols,
            cols: 1,
            data: t.data,
        }
    }

    /// Inverse of [`Mat::vectorize`].
    pub fn unvectorize(v: &Mat, rows: usize, cols: usize) -> Mat {
        assert_eq!(v.rows * v.cols, rows * cols, "unvectorize size");
        let t = Mat {
            field: v.field,
            rows: cols,
            cols: rows,
            data: v.data.clone(),
        };
        t.transpose()
    }

    fn rref_limited(&self, pivot_limit: usize) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let field = m.field;
        let pivots = with_arith!(field, &mut m.data, |k, d| rref_in_place(&k, d, rows, cols, pivot_limit));
        (m, pivots)
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let (reduced, pivots) = self.rref_limited(self.cols);
        let rank = pivots.len();
        Rref { reduced, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols || self.cols == 0 {
            self.rref().rank
        } else {
            self.transpose().rref().rank
        }
    }

    /// Columns form a basis of the null space.
    pub fn kernel(&self) -> Mat {
        let Rref { reduced, pivots, .. } = self.rref();
        kernel_from_rref(&reduced, &pivots, self.cols)
    }

    pub fn solve(&self, b: &Mat) -> Result<Solution> {
        if self.rows != b.rows {
            return Err(Error::InputShape(format!(
                "system has {} rows but right-hand side has {}",
                self.rows, b.rows
            )));
        }
        let n = self.cols;
        let aug = Mat::hstack(self.field, self.rows, &[self, b]);
        let (red, pivots) = aug.rref_limited(n);
        let rank = pivots.len();
        let kernel = kernel_from_rref(&red.submatrix(0, self.rows, 0, n), &pivots, n);
        let mut columns = Vec::with_capacity(b.cols);
        for c in 0..b.cols {
            let consistent = (rank..self.rows).all(|i| red.get(i, n + c).is_zero());
            if !consistent {
                columns.push(None);
                continue;
            }
            let mut x = Mat::zeros(self.field, n, 1);
            for (i, &p) in pivots.iter().enumerate() {
                x.set(p, 0, &red.get(i, n + c));
            }
            columns.push(Some(x));
        }
        let particular = if columns.iter().all(Option::is_some) {
            let cols: Vec<&Mat> = columns.iter().map(|c| c.as_ref().unwrap()).collect();
            Some(Mat::hstack(self.field, n, &cols))
        } else {
            None
        };
        Ok(Solution {
            particular,
            columns,
            kernel,
        })
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve_particular(&self, b: &Mat) -> Option<Mat> {
        self.solve(b).ok().and_then(|s| s.particular)
    }

    /// The columns of `self` at the pivot positions: a basis of the column space.
    pub fn column_space(&self) -> Mat {
        let pivots = self.rref().pivots;
        self.select_cols(&pivots)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let sol = self.solve(&Mat::identity(self.field, n)).ok()?;
        if sol.kernel.cols > 0 {
            return None;
        }
        sol.particular
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// A left inverse `l` with `l * self = I` for a matrix of full column rank.
    pub fn left_inverse(&self) -> Option<Mat> {
        let t = self.transpose();
        // l * self = I  <=>  self^T * l^T = I
        let sol = t.solve(&Mat::identity(self.field, self.cols)).ok()?;
        sol.particular.map(|x| x.transpose())
    }

    /// Standard basis columns completing the column span of `self` to a basis.
    pub fn complement_basis(&self) -> Mat {
        let pivots = self.transpose().rref().pivots;
        let free: Vec<usize> = (0..self.rows).filter(|c| !pivots.contains(c)).collect();
        Mat::identity(self.field, self.rows).select_cols(&free)
    }

    /// Whether every column of `other` lies in the column span of `self`.
    pub fn spans(&self, other: &Mat) -> bool {
        let r = self.rank();
        Mat::hstack(self.field, self.rows, &[self, other]).rank() == r
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

fn wrap_like<K: Arith>(_k: &K, v: Vec<K::E>) -> Entries {
    K::wrap(v)
}

fn kernel_from_rref(red: &Mat, pivots: &[usize], n: usize) -> Mat {
    let field = red.field;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut k = Mat::zeros(field, n, free.len());
    for (col, &f) in free.iter().enumerate() {
        k.set(f, col, &field.one());
        for (i, &p) in pivots.iter().enumerate() {
            let v = red.get(i, f);
            if !v.is_zero() {
                k.set(p, col, &-&v);
            }
        }
    }
    k
}

pub fn random_scalar<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> Scalar {
    match field.characteristic() {
        0 => {
            let n: i64 = rng.random_range(-9..=9);
            let d: i64 = rng.random_range(1..=4);
            Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
        }
        p => Scalar::Mod {
            value: rng.random_range(0..p),
            modulus: p,
        },
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.mul_mat(rhs)
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        self.zip_with(rhs, false)
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        self.zip_with(rhs, true)
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.scale(&-&self.field.one())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for row in self.to_string_rows() {
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
