//! The category of finitely generated modules over a finite-dimensional
//! algebra, at desk scale.
//!
//! A module is a tuple of action matrices, one per algebra basis element;
//! right modules carry the opposite-table axiom, so the same representation
//! serves both sides. Homs are matrices intertwining the actions. Exact
//! sequences are chains of homs with machine-checked exactness certificates;
//! zero end terms are represented explicitly, which makes "exact at every
//! interior node" a single uniform condition.

pub mod ops;
pub mod projective;
pub mod seq;

use crate::algebra::{AlgebraRef, Side};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_basis, rank, Mat, Subspace};
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct Mod {
    pub algebra: AlgebraRef,
    pub side: Side,
    pub dim: usize,
    /// Action matrices of the algebra basis elements.
    pub action: Vec<Mat>,
}

pub type ModRef = Arc<Mod>;

impl PartialEq for Mod {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.dim == other.dim && self.action == other.action
    }
}

impl Eq for Mod {}

impl fmt::Debug for Mod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mod({} dim {} over {:?})", self.side, self.dim, self.algebra)
    }
}

impl Mod {
    pub fn new(algebra: AlgebraRef, side: Side, dim: usize, action: Vec<Mat>) -> Result<ModRef> {
        let m = Mod {
            algebra,
            side,
            dim,
            action,
        };
        m.validate()?;
        Ok(Arc::new(m))
    }

    /// Builds without the axiom check; used internally where the structure is
    /// correct by construction. Debug builds still verify.
    pub fn new_unchecked(algebra: AlgebraRef, side: Side, dim: usize, action: Vec<Mat>) -> ModRef {
        let m = Mod {
            algebra,
            side,
            dim,
            action,
        };
        debug_assert!(m.validate().is_ok(), "internal module violates axioms");
        Arc::new(m)
    }

    /// Checks the unit axiom and every structure-constant identity
    /// `rho(e_i) rho(e_j) = sum_k c_s[i][j][k] rho(e_k)`; reports the first
    /// violated pair.
    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        let f = a.field;
        if self.action.len() != a.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for algebra of dimension {}",
                self.action.len(),
                a.dim
            )));
        }
        for (i, m) in self.action.iter().enumerate() {
            if m.rows != self.dim || m.cols != self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix {i} is {}x{}, module dimension {}",
                    m.rows, m.cols, self.dim
                )));
            }
            if m.field != f {
                return Err(Error::FieldMismatch(f.name(), m.field.name()));
            }
        }
        if !self.action_of(&a.unit).is_identity() {
            return Err(Error::Validation("unit does not act as identity".into()));
        }
        for i in 0..a.dim {
            for j in 0..a.dim {
                let lhs = self.action[i].mul(&self.action[j])?;
                let mut rhs = Mat::zero(f, self.dim, self.dim);
                for k in 0..a.dim {
                    let c = a.structure(self.side, i, j, k);
                    if !c.is_zero() {
                        rhs = rhs.add(&self.action[k].scale(c))?;
                    }
                }
                if lhs != rhs {
                    return Err(Error::Validation(format!(
                        "action violates structure constants at pair ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Action matrix of a general algebra element.
    pub fn action_of(&self, x: &[Scalar]) -> Mat {
        let f = self.algebra.field;
        let mut out = Mat::zero(f, self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c)).expect("same shape");
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn zero_module(algebra: AlgebraRef, side: Side) -> ModRef {
        let f = algebra.field;
        let action = (0..algebra.dim).map(|_| Mat::zero(f, 0, 0)).collect();
        Arc::new(Mod {
            algebra,
            side,
            dim: 0,
            action,
        })
    }

    /// The regular module: the algebra acting on itself from the given side.
    pub fn regular(algebra: AlgebraRef, side: Side) -> ModRef {
        let action = (0..algebra.dim)
            .map(|i| algebra.side_mult(side, &algebra.basis_vector(i)))
            .collect();
        Arc::new(Mod {
            side,
            dim: algebra.dim,
            action,
            algebra,
        })
    }

    /// Free module of the given rank.
    pub fn free(algebra: AlgebraRef, rank: usize, side: Side) -> ModRef {
        let f = algebra.field;
        let reg = Mod::regular(algebra.clone(), side);
        let action = (0..algebra.dim)
            .map(|i| {
                let blocks: Vec<Mat> = (0..rank).map(|_| reg.action[i].clone()).collect();
                Mat::block_diag(f, &blocks)
            })
            .collect();
        Arc::new(Mod {
            side,
            dim: algebra.dim * rank,
            action,
            algebra,
        })
    }

    /// Vector-space dual with transposed actions; swaps the side.
    pub fn vector_dual(m: &ModRef) -> ModRef {
        Mod::new_unchecked(
            m.algebra.clone(),
            m.side.opposite(),
            m.dim,
            m.action.iter().map(Mat::transpose).collect(),
        )
    }

    /// Canonical content string; equal strings mean equal representations.
    pub fn encode(&self) -> String {
        let mut s = format!("{}:{}:", self.side.name(), self.dim);
        for m in &self.action {
            s.push_str(&m.encode());
            s.push('|');
        }
        s
    }
}

/// A homomorphism of modules over the same algebra and side, stored as a
/// `target_dim x source_dim` matrix.
#[derive(Clone)]
pub struct ModHom {
    pub source: ModRef,
    pub target: ModRef,
    pub matrix: Mat,
}

impl fmt::Debug for ModHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModHom({} -> {}, rank {})",
            self.source.dim,
            self.target.dim,
            rank(&self.matrix)
        )
    }
}

impl ModHom {
    pub fn new(source: ModRef, target: ModRef, matrix: Mat) -> Result<ModHom> {
        let h = ModHom {
            source,
            target,
            matrix,
        };
        h.verify()?;
        Ok(h)
    }

    pub fn new_unchecked(source: ModRef, target: ModRef, matrix: Mat) -> ModHom {
        let h = ModHom {
            source,
            target,
            matrix,
        };
        debug_assert!(h.verify().is_ok(), "internal hom fails intertwining");
        h
    }

    /// Checks shape, shared algebra/side, and every intertwining equation.
    pub fn verify(&self) -> Result<()> {
        if !Arc::ptr_eq(&self.source.algebra, &self.target.algebra)
            && self.source.algebra.encode() != self.target.algebra.encode()
        {
            return Err(Error::Validation("hom between different algebras".into()));
        }
        if self.source.side != self.target.side {
            return Err(Error::Validation("hom between different sides".into()));
        }
        if self.matrix.rows != self.target.dim || self.matrix.cols != self.source.dim {
            return Err(Error::DimensionMismatch(format!(
                "hom matrix {}x{} for map {} -> {}",
                self.matrix.rows, self.matrix.cols, self.source.dim, self.target.dim
            )));
        }
        for i in 0..self.source.algebra.dim {
            let lhs = self.matrix.mul(&self.source.action[i])?;
            let rhs = self.target.action[i].mul(&self.matrix)?;
            if lhs != rhs {
                return Err(Error::Validation(format!(
                    "matrix does not intertwine basis element {i}"
                )));
            }
        }
        Ok(())
    }

    pub fn zero(source: ModRef, target: ModRef) -> ModHom {
        let f = source.algebra.field;
        let matrix = Mat::zero(f, target.dim, source.dim);
        ModHom {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(m: &ModRef) -> ModHom {
        let f = m.algebra.field;
        ModHom {
            source: m.clone(),
            target: m.clone(),
            matrix: Mat::identity(f, m.dim),
        }
    }

    /// `self` after `first`: the composite `self . first`.
    pub fn compose(&self, first: &ModHom) -> Result<ModHom> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::DimensionMismatch("composition endpoint mismatch".into()));
        }
        Ok(ModHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix)?,
        })
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn is_zero_map(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn kernel_subspace(&self) -> Subspace {
        kernel_basis(&self.matrix)
    }

    pub fn image_subspace(&self) -> Subspace {
        Subspace::from_cols(&self.matrix)
    }
}

/// A direct sum together with its structural injections and projections.
pub struct DirectSum {
    pub module: ModRef,
    pub injections: Vec<ModHom>,
    pub projections: Vec<ModHom>,
}

/// Block-diagonal direct sum. All summands must share algebra and side.
pub fn direct_sum(summands: &[ModRef]) -> Result<DirectSum> {
    let Some(first) = summands.first() else {
        return Err(Error::BadArgument("direct sum of an empty family".into()));
    };
    let alg = first.algebra.clone();
    let side = first.side;
    let f = alg.field;
    for m in summands {
        if m.side != side || m.algebra.encode() != alg.encode() {
            return Err(Error::Validation("direct sum across algebras or sides".into()));
        }
    }
    let action = (0..alg.dim)
        .map(|i| {
            let blocks: Vec<Mat> = summands.iter().map(|m| m.action[i].clone()).collect();
            Mat::block_diag(f, &blocks)
        })
        .collect();
    let total: usize = summands.iter().map(|m| m.dim).sum();
    let module = Mod::new_unchecked(alg, side, total, action);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offset = 0;
    for m in summands {
        let inj = Mat::from_fn(f, total, m.dim, |r, c| {
            if r == offset + c {
                f.one()
            } else {
                f.zero()
            }
        });
        let proj = inj.transpose();
        injections.push(ModHom::new_unchecked(m.clone(), module.clone(), inj));
        projections.push(ModHom::new_unchecked(module.clone(), m.clone(), proj));
        offset += m.dim;
    }
    Ok(DirectSum {
        module,
        injections,
        projections,
    })
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;
    use crate::algebra::AlgebraRef;

    /// The simple module of a local algebra (the radical acts by zero).
    pub fn point_module(alg: &AlgebraRef, side: Side) -> ModRef {
        let f = alg.field;
        let idems = alg.idempotents.clone().unwrap();
        assert_eq!(idems.len(), 1, "point_module needs a local algebra");
        let action = (0..alg.dim)
            .map(|i| {
                let e = alg.basis_vector(i);
                let rad = alg.radical.as_ref().unwrap();
                let v = if rad.contains(&e) { f.zero() } else { f.one() };
                Mat::from_fn(f, 1, 1, |_, _| v.clone())
            })
            .collect();
        Mod::new(alg.clone(), side, 1, action).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_support::point_module;
    use super::*;
    use crate::algebra::builtin_algebra;
    use crate::field::FieldSpec;

    fn gf5() -> FieldSpec {
        FieldSpec::Prime(5)
    }

    #[test]
    fn regular_module_is_valid() {
        for name in ["K1", "DUAL2", "A2", "NG3", "NAKAYAMA(2,2)"] {
            let a = builtin_algebra(name, gf5()).unwrap();
            for side in [Side::Left, Side::Right] {
                let r = Mod::regular(a.clone(), side);
                assert!(r.validate().is_ok(), "{name} {side}");
                assert_eq!(r.dim, a.dim);
            }
        }
    }

    #[test]
    fn free_module_dimensions() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let f3 = Mod::free(a.clone(), 3, Side::Left);
        assert_eq!(f3.dim, 6);
        assert!(f3.validate().is_ok());
    }

    #[test]
    fn simple_over_dual2_valid_and_fake_rejected() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let s = point_module(&a, Side::Left);
        assert!(s.validate().is_ok());

        // a |-> 1 violates a^2 = 0
        let f = gf5();
        let bad = Mod {
            algebra: a.clone(),
            side: Side::Left,
            dim: 1,
            action: vec![Mat::identity(f, 1), Mat::from_fn(f, 1, 1, |_, _| f.one())],
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn direct_sum_block_structure() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let s = point_module(&a, Side::Left);
        let ds = direct_sum(&[s.clone(), s.clone()]).unwrap();
        assert_eq!(ds.module.dim, 2);
        // injection followed by projection is the identity
        let round = ds.projections[1].compose(&ds.injections[1]).unwrap();
        assert!(round.matrix.is_identity());
        // the radical generator acts by zero on S + S
        assert!(ds.module.action[1].is_zero());
    }

    #[test]
    fn vector_dual_swaps_side() {
        let a = builtin_algebra("A2", gf5()).unwrap();
        let r = Mod::regular(a.clone(), Side::Left);
        let d = Mod::vector_dual(&r);
        assert_eq!(d.side, Side::Right);
        assert!(d.validate().is_ok());
        assert_eq!(Mod::vector_dual(&d).as_ref(), r.as_ref());
    }

    #[test]
    fn regular_decomposes_by_idempotents_a2() {
        // regular(A2) has dim 3 and splits as A e0 + A e1 of dims 2, 1;
        // the splitting projections are the right multiplications by the
        // idempotents
        let a = builtin_algebra("A2", gf5()).unwrap();
        let r = Mod::regular(a.clone(), Side::Left);
        assert_eq!(r.dim, 3);
        let idems = a.idempotents.clone().unwrap();
        let d1 = rank(&a.right_mult(&idems[0]));
        let d2 = rank(&a.right_mult(&idems[1]));
        assert_eq!((d1, d2), (2, 1));
    }
}
