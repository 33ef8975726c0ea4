//! Dense exact linear algebra: reduced row echelon forms, ranks, kernels,
//! solution spaces and subspace arithmetic over GF(p) or the rationals.
//!
//! Matrices are stored row-major. Elimination is implemented once, generically
//! over a tiny arithmetic context, and monomorphizes to a tight `u64` loop for
//! prime fields and to `BigRational` for the rationals. All outputs are
//! canonical: the RREF of a matrix is unique, kernel and subspace bases are
//! re-echelonized, so value equality is subspace equality.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use num::BigRational;
use num::Zero;
use std::fmt;

/// A dense matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {} [", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).encode()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for e in row {
                if !field.owns(&e) {
                    return Err(Error::FieldMismatch(field.name(), "entry".into()));
                }
                entries.push(e);
            }
        }
        Ok(Mat {
            field,
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Mat {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mat {
            field,
            rows,
            cols,
            entries,
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.at(r, c).is_one()
                    } else {
                        self.at(r, c).is_zero()
                    }
                })
            })
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "add {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "sub {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn neg(&self) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| self.field.neg(e)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| self.field.mul(e, s)).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Mat::zero(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = f.add(out.at(r, c), &f.mul(a, b));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "apply {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = f.zero();
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                acc = f.add(&acc, &f.mul(a, &v[c]));
            }
            out[r] = acc;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `self` left of `other`.
    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack".into()));
        }
        let mut out = Mat::zero(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn block_diag(field: FieldSpec, blocks: &[Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zero(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(ro + r, co + c, b.at(r, c).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, rows.len(), cols.len(), |r, c| {
            self.at(rows[r], cols[c]).clone()
        })
    }

    /// Canonical byte encoding, used for cache keys and determinism checks.
    pub fn encode(&self) -> String {
        let mut s = format!("{}:{}x{}[", self.field.name(), self.rows, self.cols);
        for e in &self.entries {
            s.push_str(&e.encode());
            s.push(',');
        }
        s.push(']');
        s
    }
}

// ---------------------------------------------------------------------------
// elimination core
// ---------------------------------------------------------------------------

trait Arith {
    type E: Clone + PartialEq;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// a - b*c
    fn sub_mul(&self, a: &Self::E, b: &Self::E, c: &Self::E) -> Self::E;
}

struct FpArith {
    p: u64,
}

impl Arith for FpArith {
    type E = u64;
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn inv(&self, a: &u64) -> u64 {
        // p is prime and a != 0
        mod_pow(*a, self.p - 2, self.p)
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn sub_mul(&self, a: &u64, b: &u64, c: &u64) -> u64 {
        (a + self.p - b * c % self.p) % self.p
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

struct RatArith;

impl Arith for RatArith {
    type E = BigRational;
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub_mul(&self, a: &BigRational, b: &BigRational, c: &BigRational) -> BigRational {
        a - b * c
    }
}

/// Fully reduces `rows` in place; returns pivot column indices.
fn rref_in_place<A: Arith>(ctx: &A, rows: &mut [Vec<A::E>], cols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut lead = 0usize;
    for col in 0..cols {
        let Some(pr) = (lead..nrows).find(|&r| !ctx.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(lead, pr);
        let inv = ctx.inv(&rows[lead][col]);
        for c in col..cols {
            rows[lead][c] = ctx.mul(&rows[lead][c], &inv);
        }
        for r in 0..nrows {
            if r != lead && !ctx.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    rows[r][c] = ctx.sub_mul(&rows[r][c], &factor, &rows[lead][c]);
                }
            }
        }
        pivots.push(col);
        lead += 1;
        if lead == nrows {
            break;
        }
    }
    pivots
}

/// Forward elimination only; returns the rank.
fn rank_in_place<A: Arith>(ctx: &A, rows: &mut [Vec<A::E>], cols: usize) -> usize {
    let nrows = rows.len();
    let mut lead = 0usize;
    for col in 0..cols {
        let Some(pr) = (lead..nrows).find(|&r| !ctx.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(lead, pr);
        let inv = ctx.inv(&rows[lead][col]);
        let pivot_row = std::mem::take(&mut rows[lead]);
        for r in lead + 1..nrows {
            if !ctx.is_zero(&rows[r][col]) {
                let factor = ctx.mul(&rows[r][col], &inv);
                for c in col..cols {
                    rows[r][c] = ctx.sub_mul(&rows[r][c], &factor, &pivot_row[c]);
                }
            }
        }
        rows[lead] = pivot_row;
        lead += 1;
        if lead == nrows {
            break;
        }
    }
    lead
}

fn to_fp_rows(m: &Mat) -> Vec<Vec<u64>> {
    (0..m.rows)
        .map(|r| {
            (0..m.cols)
                .map(|c| match m.at(r, c) {
                    Scalar::Fp(x) => *x,
                    Scalar::Rat(_) => unreachable!("field tag mismatch"),
                })
                .collect()
        })
        .collect()
}

fn to_rat_rows(m: &Mat) -> Vec<Vec<BigRational>> {
    (0..m.rows)
        .map(|r| {
            (0..m.cols)
                .map(|c| match m.at(r, c) {
                    Scalar::Rat(x) => x.clone(),
                    Scalar::Fp(_) => unreachable!("field tag mismatch"),
                })
                .collect()
        })
        .collect()
}

fn fp_rows_to_mat(field: FieldSpec, rows: Vec<Vec<u64>>, cols: usize) -> Mat {
    let nrows = rows.len();
    let mut entries = Vec::with_capacity(nrows * cols);
    for row in rows {
        entries.extend(row.into_iter().map(Scalar::Fp));
    }
    Mat {
        field,
        rows: nrows,
        cols,
        entries,
    }
}

fn rat_rows_to_mat(field: FieldSpec, rows: Vec<Vec<BigRational>>, cols: usize) -> Mat {
    let nrows = rows.len();
    let mut entries = Vec::with_capacity(nrows * cols);
    for row in rows {
        entries.extend(row.into_iter().map(Scalar::Rat));
    }
    Mat {
        field,
        rows: nrows,
        cols,
        entries,
    }
}

/// Result of reduced row echelon computation.
pub struct Rref {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Unique reduced row echelon form, rank and pivot columns.
pub fn rref(m: &Mat) -> Rref {
    match m.field {
        FieldSpec::Prime(p) => {
            let mut rows = to_fp_rows(m);
            let pivots = rref_in_place(&FpArith { p }, &mut rows, m.cols);
            Rref {
                rank: pivots.len(),
                mat: fp_rows_to_mat(m.field, rows, m.cols),
                pivots,
            }
        }
        FieldSpec::Rationals => {
            let mut rows = to_rat_rows(m);
            let pivots = rref_in_place(&RatArith, &mut rows, m.cols);
            Rref {
                rank: pivots.len(),
                mat: rat_rows_to_mat(m.field, rows, m.cols),
                pivots,
            }
        }
    }
}

/// Rank by forward elimination (cheaper than full RREF).
pub fn rank(m: &Mat) -> usize {
    match m.field {
        FieldSpec::Prime(p) => {
            let mut rows = to_fp_rows(m);
            rank_in_place(&FpArith { p }, &mut rows, m.cols)
        }
        FieldSpec::Rationals => {
            let mut rows = to_rat_rows(m);
            rank_in_place(&RatArith, &mut rows, m.cols)
        }
    }
}

/// A linear subspace of `k^ambient`, stored as an echelonized row basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    pub field: FieldSpec,
    pub ambient: usize,
    /// Basis rows in RREF with strictly increasing pivots; no zero rows.
    pub basis: Mat,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of k^{}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Mat::zero(field, 0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace::from_rows(&Mat::identity(field, ambient))
    }

    /// Canonical subspace spanned by the rows of `m`.
    pub fn from_rows(m: &Mat) -> Subspace {
        let r = rref(m);
        let basis = Mat::from_fn(m.field, r.rank, m.cols, |i, j| r.mat.at(i, j).clone());
        Subspace {
            field: m.field,
            ambient: m.cols,
            basis,
            pivots: r.pivots,
        }
    }

    /// Canonical subspace spanned by the columns of `m`.
    pub fn from_cols(m: &Mat) -> Subspace {
        Subspace::from_rows(&m.transpose())
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Reduces `v` modulo the basis; the result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for c in 0..self.ambient {
                    let t = f.mul(&factor, self.basis.at(row, c));
                    v[c] = f.sub(&v[c], &t);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.basis.rows).all(|r| self.contains(&other.basis.row(r)))
    }

    /// Coordinates of `v` in the row basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.field;
        let mut v = v.to_vec();
        let mut coords = vec![f.zero(); self.dim()];
        for (row, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for c in 0..self.ambient {
                    let t = f.mul(&factor, self.basis.at(row, c));
                    v[c] = f.sub(&v[c], &t);
                }
                coords[row] = factor;
            }
        }
        if v.iter().all(Scalar::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        // solve a*U + b*V = 0 over rows of U and V; intersection = span of a*U parts
        let stacked = self.basis.transpose().hstack(&other.basis.transpose())?;
        let ker = kernel_basis(&stacked);
        if ker.dim() == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let du = self.dim();
        let mut rows = Vec::new();
        for r in 0..ker.dim() {
            let coeffs = ker.basis.row(r);
            let mut vec = vec![self.field.zero(); self.ambient];
            for (i, a) in coeffs[..du].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for c in 0..self.ambient {
                    let t = self.field.mul(a, self.basis.at(i, c));
                    vec[c] = self.field.add(&vec[c], &t);
                }
            }
            rows.push(vec);
        }
        Ok(Subspace::from_rows(&Mat::from_rows(self.field, rows)?))
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Ambient coordinates not used as pivots; these index a complement basis.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Basis of the right kernel {x : m x = 0}, canonicalized.
pub fn kernel_basis(m: &Mat) -> Subspace {
    let r = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !r.pivots.contains(c)).collect();
    if free.is_empty() {
        return Subspace::zero(m.field, m.cols);
    }
    let f = m.field;
    let mut rows = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![f.zero(); m.cols];
        v[fc] = f.one();
        for (i, &p) in r.pivots.iter().enumerate() {
            v[p] = f.neg(r.mat.at(i, fc));
        }
        rows.push(v);
    }
    Subspace::from_rows(&Mat::from_rows(f, rows).expect("rectangular"))
}

/// The full affine solution set of `m x = b`, or `None` when inconsistent.
pub struct Solution {
    pub particular: Vec<Scalar>,
    pub kernel: Subspace,
}

pub fn solve_all(m: &Mat, b: &[Scalar]) -> Result<Option<Solution>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "solve: {} rows vs rhs of length {}",
            m.rows,
            b.len()
        )));
    }
    let f = m.field;
    let bcol = Mat::from_fn(f, m.rows, 1, |r, _| b[r].clone());
    let aug = m.hstack(&bcol)?;
    let r = rref(&aug);
    if r.pivots.contains(&m.cols) {
        return Ok(None); // pivot in the rhs column: inconsistent
    }
    let mut particular = vec![f.zero(); m.cols];
    for (i, &p) in r.pivots.iter().enumerate() {
        particular[p] = r.mat.at(i, m.cols).clone();
    }
    Ok(Some(Solution {
        particular,
        kernel: kernel_basis(m),
    }))
}

/// Solves `m X = rhs` column-wise; `None` if any column is inconsistent.
pub fn solve_matrix(m: &Mat, rhs: &Mat) -> Result<Option<Mat>> {
    if rhs.rows != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "solve_matrix: {} vs {}",
            m.rows, rhs.rows
        )));
    }
    let f = m.field;
    let aug = m.hstack(rhs)?;
    let r = rref(&aug);
    if r.pivots.iter().any(|&p| p >= m.cols) {
        return Ok(None);
    }
    let mut out = Mat::zero(f, m.cols, rhs.cols);
    for (i, &p) in r.pivots.iter().enumerate() {
        for c in 0..rhs.cols {
            out.set(p, c, r.mat.at(i, m.cols + c).clone());
        }
    }
    Ok(Some(out))
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(m: &Mat) -> Option<Mat> {
    if m.rows != m.cols {
        return None;
    }
    let id = Mat::identity(m.field, m.rows);
    match solve_matrix(m, &id) {
        Ok(Some(inv)) => Some(inv),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf5() -> FieldSpec {
        FieldSpec::Prime(5)
    }

    fn m(field: FieldSpec, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Mat::identity(gf5(), 2);
        let r = rref(&id);
        assert_eq!(r.mat, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one_example() {
        // [[2,4],[1,2]] over GF(5) -> [[1,2],[0,0]], rank 1
        let a = m(gf5(), &[&[2, 4], &[1, 2]]);
        let r = rref(&a);
        assert_eq!(r.rank, 1);
        assert_eq!(r.mat, m(gf5(), &[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Mat::zero(gf5(), 3, 2);
        let r = rref(&z);
        assert_eq!(r.rank, 0);
        assert!(r.mat.is_zero());
    }

    #[test]
    fn rref_rationals() {
        let f = FieldSpec::Rationals;
        let a = m(f, &[&[2, 4], &[1, 3]]);
        let r = rref(&a);
        assert_eq!(r.rank, 2);
        assert!(r.mat.is_identity());
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let id = Mat::identity(gf5(), 3);
        assert_eq!(kernel_basis(&id).dim(), 0);
    }

    #[test]
    fn kernel_of_zero_is_full() {
        let z = Mat::zero(gf5(), 4, 4);
        let k = kernel_basis(&z);
        assert_eq!(k.dim(), 4);
    }

    #[test]
    fn kernel_row_example() {
        // [[1,2]] over GF(5): kernel = span{(3,1)}
        let a = m(gf5(), &[&[1, 2]]);
        let k = kernel_basis(&a);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[gf5().from_i64(3), gf5().from_i64(1)]));
    }

    #[test]
    fn solve_identity() {
        let id = Mat::identity(gf5(), 2);
        let b = vec![gf5().from_i64(2), gf5().from_i64(3)];
        let s = solve_all(&id, &b).unwrap().unwrap();
        assert_eq!(s.particular, b);
        assert_eq!(s.kernel.dim(), 0);
    }

    #[test]
    fn solve_inconsistent() {
        let z = Mat::zero(gf5(), 2, 2);
        let b = vec![gf5().from_i64(1), gf5().zero()];
        assert!(solve_all(&z, &b).unwrap().is_none());
    }

    #[test]
    fn solve_underdetermined() {
        let a = m(gf5(), &[&[1, 1]]);
        let s = solve_all(&a, &[gf5().zero()]).unwrap().unwrap();
        assert!(s.particular.iter().all(Scalar::is_zero));
        assert_eq!(s.kernel.dim(), 1);
    }

    #[test]
    fn subspace_sum_intersection() {
        let f = gf5();
        let e1 = Subspace::from_rows(&m(f, &[&[1, 0]]));
        let e2 = Subspace::from_rows(&m(f, &[&[0, 1]]));
        let sum = e1.sum(&e2).unwrap();
        assert_eq!(sum.dim(), 2);
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);

        // idempotence
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);

        // span{e1+e2} vs span{e1}
        let diag = Subspace::from_rows(&m(f, &[&[1, 1]]));
        assert_eq!(diag.sum(&e1).unwrap().dim(), 2);
        assert_eq!(diag.intersect(&e1).unwrap().dim(), 0);
    }

    #[test]
    fn subspace_mismatch_rejected() {
        let u = Subspace::zero(gf5(), 2);
        let v = Subspace::zero(gf5(), 3);
        assert!(u.sum(&v).is_err());
        let w = Subspace::zero(FieldSpec::Rationals, 2);
        assert!(u.sum(&w).is_err());
    }

    #[test]
    fn mixed_field_matrix_ops_rejected() {
        let a = Mat::identity(gf5(), 2);
        let b = Mat::identity(FieldSpec::Rationals, 2);
        assert!(a.mul(&b).is_err());
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn coordinates_round_trip() {
        let f = FieldSpec::Rationals;
        let s = Subspace::from_rows(&m(f, &[&[1, 2, 0], &[0, 0, 1]]));
        let v = vec![f.from_i64(2), f.from_i64(4), f.from_i64(-3)];
        let coords = s.coordinates(&v).unwrap();
        assert_eq!(coords, vec![f.from_i64(2), f.from_i64(-3)]);
        assert!(s.coordinates(&[f.from_i64(0), f.from_i64(1), f.zero()]).is_none());
    }
}
