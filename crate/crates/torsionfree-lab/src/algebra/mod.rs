//! Finite-dimensional associative unital algebras given by structure constants.
//!
//! An algebra knows its multiplication table, unit, and optionally a radical,
//! a complete set of primitive orthogonal idempotents and basis labels (bound
//! quiver algebras populate all of these). Right module structure is always
//! expressed through the transposed table, so one code path serves both sides.

mod builtin;
mod quiver;

pub use builtin::{builtin_algebra, builtin_names};
pub use quiver::{build_bound_quiver_algebra, QuiverPresentation, Relation};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{kernel_basis, Mat, Subspace};
use std::fmt;
use std::sync::Arc;

/// Which side a module lives on. Right modules are left modules over the
/// opposite algebra; `Side` selects the multiplication table orientation.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    /// Structure constants, flattened: `e_i e_j = sum_k c[i][j][k] e_k`.
    mult: Vec<Scalar>,
    /// Coordinates of the two-sided unit.
    pub unit: Vec<Scalar>,
    /// Jacobson radical, when known.
    pub radical: Option<Subspace>,
    /// Complete set of primitive orthogonal idempotents, when known.
    pub idempotents: Option<Vec<Vec<Scalar>>>,
    pub labels: Option<Vec<String>>,
    pub name: Option<String>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra({}, dim {}, over {})",
            self.name.as_deref().unwrap_or("anonymous"),
            self.dim,
            self.field
        )
    }
}

/// A violated algebra axiom together with its witnessing indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    Associativity { i: usize, j: usize, k: usize, l: usize },
    UnitLeft { i: usize },
    UnitRight { i: usize },
    RadicalNotIdeal,
    RadicalNotNilpotent,
    IdempotentNotIdempotent { i: usize },
    IdempotentsNotOrthogonal { i: usize, j: usize },
    IdempotentSumNotUnit,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Associativity { i, j, k, l } => {
                write!(f, "associativity fails at (i,j,k,l)=({i},{j},{k},{l})")
            }
            AxiomViolation::UnitLeft { i } => write!(f, "unit axiom fails: 1*e_{i} != e_{i}"),
            AxiomViolation::UnitRight { i } => write!(f, "unit axiom fails: e_{i}*1 != e_{i}"),
            AxiomViolation::RadicalNotIdeal => write!(f, "declared radical is not a two-sided ideal"),
            AxiomViolation::RadicalNotNilpotent => write!(f, "declared radical is not nilpotent"),
            AxiomViolation::IdempotentNotIdempotent { i } => {
                write!(f, "declared idempotent {i} is not idempotent")
            }
            AxiomViolation::IdempotentsNotOrthogonal { i, j } => {
                write!(f, "declared idempotents {i},{j} are not orthogonal")
            }
            AxiomViolation::IdempotentSumNotUnit => {
                write!(f, "declared idempotents do not sum to the unit")
            }
        }
    }
}

impl Algebra {
    pub fn new(
        field: FieldSpec,
        dim: usize,
        mult: Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<Algebra> {
        if mult.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "structure table has {} entries, expected {}",
                mult.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch("unit coordinate length".into()));
        }
        for e in mult.iter().chain(unit.iter()) {
            if !field.owns(e) {
                return Err(Error::FieldMismatch(field.name(), "table entry".into()));
            }
        }
        Ok(Algebra {
            field,
            dim,
            mult,
            unit,
            radical: None,
            idempotents: None,
            labels: None,
            name: None,
        })
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Structure constant of the side-oriented product `e_i *_s e_j`.
    #[inline]
    pub fn structure(&self, side: Side, i: usize, j: usize, k: usize) -> &Scalar {
        match side {
            Side::Left => self.c(i, j, k),
            Side::Right => self.c(j, i, k),
        }
    }

    /// Product of two coordinate vectors in the algebra.
    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = f.mul(&x[i], &y[j]);
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    out[k] = f.add(&out[k], &f.mul(&xy, c));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication `y -> x*y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Mat {
        let f = self.field;
        Mat::from_fn(f, self.dim, self.dim, |k, j| {
            let mut acc = f.zero();
            for i in 0..self.dim {
                if x[i].is_zero() {
                    continue;
                }
                let c = self.c(i, j, k);
                if !c.is_zero() {
                    acc = f.add(&acc, &f.mul(&x[i], c));
                }
            }
            acc
        })
    }

    /// Matrix of right multiplication `y -> y*x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Mat {
        let f = self.field;
        Mat::from_fn(f, self.dim, self.dim, |k, j| {
            let mut acc = f.zero();
            for i in 0..self.dim {
                if x[i].is_zero() {
                    continue;
                }
                let c = self.c(j, i, k);
                if !c.is_zero() {
                    acc = f.add(&acc, &f.mul(&x[i], c));
                }
            }
            acc
        })
    }

    /// Matrix of `y -> x *_s y` for the side-oriented product.
    pub fn side_mult(&self, side: Side, x: &[Scalar]) -> Mat {
        match side {
            Side::Left => self.left_mult(x),
            Side::Right => self.right_mult(x),
        }
    }

    /// Matrix of `y -> y *_s x` for the side-oriented product.
    pub fn side_comult(&self, side: Side, x: &[Scalar]) -> Mat {
        match side {
            Side::Left => self.right_mult(x),
            Side::Right => self.left_mult(x),
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// The opposite algebra: transposed table; radical, idempotents and labels
    /// carry over unchanged.
    pub fn opposite(&self) -> Algebra {
        let mut mult = vec![self.field.zero(); self.dim * self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    mult[(i * self.dim + j) * self.dim + k] = self.c(j, i, k).clone();
                }
            }
        }
        Algebra {
            field: self.field,
            dim: self.dim,
            mult,
            unit: self.unit.clone(),
            radical: self.radical.clone(),
            idempotents: self.idempotents.clone(),
            labels: self.labels.clone(),
            name: self.name.as_ref().map(|n| format!("{n}^op")),
        }
    }

    /// Checks every axiom and every optional claim; returns all violations.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let mut out = Vec::new();
        let f = self.field;
        let d = self.dim;
        // associativity: (e_i e_j) e_k = e_i (e_j e_k), coefficient of e_l
        'assoc: for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut lhs = f.zero();
                        let mut rhs = f.zero();
                        for m in 0..d {
                            lhs = f.add(&lhs, &f.mul(self.c(i, j, m), self.c(m, k, l)));
                            rhs = f.add(&rhs, &f.mul(self.c(j, k, m), self.c(i, m, l)));
                        }
                        if lhs != rhs {
                            out.push(AxiomViolation::Associativity { i, j, k, l });
                            break 'assoc;
                        }
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.mul_vec(&self.unit, &e) != e {
                out.push(AxiomViolation::UnitLeft { i });
            }
            if self.mul_vec(&e, &self.unit) != e {
                out.push(AxiomViolation::UnitRight { i });
            }
        }
        if let Some(rad) = &self.radical {
            if !self.is_ideal(rad) {
                out.push(AxiomViolation::RadicalNotIdeal);
            } else if self.nilpotency_index(rad).is_none() {
                out.push(AxiomViolation::RadicalNotNilpotent);
            }
        }
        if let Some(idems) = &self.idempotents {
            for (i, e) in idems.iter().enumerate() {
                if &self.mul_vec(e, e) != e {
                    out.push(AxiomViolation::IdempotentNotIdempotent { i });
                }
            }
            for i in 0..idems.len() {
                for j in 0..idems.len() {
                    if i != j {
                        let p = self.mul_vec(&idems[i], &idems[j]);
                        if p.iter().any(|s| !s.is_zero()) {
                            out.push(AxiomViolation::IdempotentsNotOrthogonal { i, j });
                        }
                    }
                }
            }
            let mut sum = vec![f.zero(); d];
            for e in idems {
                for (s, v) in sum.iter_mut().zip(e) {
                    *s = f.add(s, v);
                }
            }
            if sum != self.unit {
                out.push(AxiomViolation::IdempotentSumNotUnit);
            }
        }
        out
    }

    pub fn validated(self) -> Result<Algebra> {
        let violations = self.validate();
        if let Some(v) = violations.first() {
            return Err(Error::Validation(v.to_string()));
        }
        Ok(self)
    }

    /// Whether `s` is a two-sided ideal.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        for r in 0..s.dim() {
            let v = s.basis.row(r);
            for i in 0..self.dim {
                let e = self.basis_vector(i);
                if !s.contains(&self.mul_vec(&e, &v)) || !s.contains(&self.mul_vec(&v, &e)) {
                    return false;
                }
            }
        }
        true
    }

    /// Least `n` with `s^n = 0`, or `None` if `s` is not nilpotent.
    pub fn nilpotency_index(&self, s: &Subspace) -> Option<usize> {
        if s.dim() == 0 {
            return Some(1);
        }
        let mut power = s.clone();
        for n in 2..=self.dim + 1 {
            let mut rows = Vec::new();
            for r in 0..power.dim() {
                let x = power.basis.row(r);
                for b in 0..s.dim() {
                    rows.push(self.mul_vec(&x, &s.basis.row(b)));
                }
            }
            let next = Subspace::from_rows(&Mat::from_rows(self.field, rows).ok()?);
            if next.dim() == 0 {
                return Some(n);
            }
            if next.dim() >= power.dim() {
                return None; // stabilized without vanishing
            }
            power = next;
        }
        None
    }

    /// Jacobson radical. Uses the stored radical when present (bound quiver
    /// provenance); over the rationals falls back to the trace-form criterion.
    /// Prime-field structure-constant algebras without provenance are not
    /// supported: the characteristic-p radical algorithm is out of scope.
    pub fn compute_radical(&self) -> Result<Subspace> {
        if let Some(r) = &self.radical {
            return Ok(r.clone());
        }
        if self.field != FieldSpec::Rationals {
            return Err(Error::Unsupported(
                "radical of a prime-field structure-constant algebra without quiver provenance"
                    .into(),
            ));
        }
        let rad = self.trace_form_radical();
        // verify: two-sided nilpotent ideal whose quotient has zero radical
        if !self.is_ideal(&rad) {
            return Err(Error::Validation("trace-form radical is not an ideal".into()));
        }
        if self.nilpotency_index(&rad).is_none() {
            return Err(Error::Validation("trace-form radical is not nilpotent".into()));
        }
        let (quot, _) = self.quotient_by_ideal(&rad)?;
        if quot.trace_form_radical().dim() != 0 {
            return Err(Error::Validation(
                "quotient by trace-form radical is not semisimple".into(),
            ));
        }
        Ok(rad)
    }

    /// Radical of the trace form x,y -> tr(L_x L_y); equals the Jacobson
    /// radical in characteristic zero.
    fn trace_form_radical(&self) -> Subspace {
        let f = self.field;
        let d = self.dim;
        let lmats: Vec<Mat> = (0..d).map(|i| self.left_mult(&self.basis_vector(i))).collect();
        let gram = Mat::from_fn(f, d, d, |i, j| {
            let prod = lmats[i].mul(&lmats[j]).expect("same field");
            let mut tr = f.zero();
            for k in 0..d {
                tr = f.add(&tr, prod.at(k, k));
            }
            tr
        });
        kernel_basis(&gram)
    }

    /// Quotient algebra by a two-sided ideal. Returns the quotient and the
    /// projection matrix from `self` coordinates to quotient coordinates.
    pub fn quotient_by_ideal(&self, ideal: &Subspace) -> Result<(Algebra, Mat)> {
        if ideal.ambient != self.dim {
            return Err(Error::DimensionMismatch("ideal ambient".into()));
        }
        let f = self.field;
        let free = ideal.free_coordinates();
        let qdim = free.len();
        // projection: reduce mod ideal, then read off free coordinates
        let proj = Mat::from_fn(f, qdim, self.dim, |r, c| {
            let e = self.basis_vector(c);
            ideal.reduce(&e)[free[r]].clone()
        });
        let mut mult = vec![f.zero(); qdim * qdim * qdim];
        for (i, &fi) in free.iter().enumerate() {
            for (j, &fj) in free.iter().enumerate() {
                let prod = self.mul_vec(&self.basis_vector(fi), &self.basis_vector(fj));
                let red = ideal.reduce(&prod);
                for (k, &fk) in free.iter().enumerate() {
                    mult[(i * qdim + j) * qdim + k] = red[fk].clone();
                }
            }
        }
        let unit_red = ideal.reduce(&self.unit);
        let unit: Vec<Scalar> = free.iter().map(|&c| unit_red[c].clone()).collect();
        let q = Algebra::new(f, qdim, mult, unit)?;
        Ok((q, proj))
    }

    /// Whether minimal projective covers are available: we need the radical,
    /// a complete set of primitive orthogonal idempotents, and the semisimple
    /// quotient to be split basic (one copy of the base field per idempotent).
    pub fn supports_minimal(&self) -> bool {
        match (&self.radical, &self.idempotents) {
            (Some(rad), Some(idems)) => self.dim - rad.dim() == idems.len(),
            _ => false,
        }
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("algebra(dim {})", self.dim))
    }

    /// Canonical content string for cache keys and reports.
    pub fn encode(&self) -> String {
        let mut s = format!("{}:{}:", self.field.name(), self.dim);
        for e in &self.mult {
            s.push_str(&e.encode());
            s.push(',');
        }
        s.push(';');
        for e in &self.unit {
            s.push_str(&e.encode());
            s.push(',');
        }
        s
    }
}

pub type AlgebraRef = Arc<Algebra>;
