//! Finitely generated projective modules presented by generator idempotents,
//! and maps between them presented by matrices of algebra elements.
//!
//! A term `P = A e_{g1} + ... + A e_{gr}` is stored as the list of generator
//! idempotents (`None` meaning the unit, i.e. a full free summand). The dual
//! `Hom(P, A)` is again such a term over the opposite side with the *same*
//! idempotents, and the dual of a map is the entry-transposed matrix of the
//! same algebra elements. This makes double duals literally equal, which the
//! cosyzygy constructions exploit.

use super::{Mod, ModHom, ModRef};
use crate::algebra::{AlgebraRef, Side};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{solve_matrix, Mat, Subspace};

/// A projective module given by generator idempotents.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjTerm {
    pub side: Side,
    /// One entry per generator: index into the algebra's idempotent list, or
    /// `None` for a unit (free) generator.
    pub gens: Vec<Option<usize>>,
}

impl ProjTerm {
    pub fn free(side: Side, rank: usize) -> ProjTerm {
        ProjTerm {
            side,
            gens: vec![None; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// The dual term: same idempotents, opposite side.
    pub fn star(&self) -> ProjTerm {
        ProjTerm {
            side: self.side.opposite(),
            gens: self.gens.clone(),
        }
    }

    pub fn idempotent_vector(&self, alg: &AlgebraRef, g: usize) -> Vec<Scalar> {
        match self.gens[g] {
            None => alg.unit.clone(),
            Some(i) => alg.idempotents.as_ref().expect("idempotents required")[i].clone(),
        }
    }
}

/// A concrete realization of a projective term as a module, remembering the
/// per-generator block bases inside the algebra.
pub struct ProjRealization {
    pub term: ProjTerm,
    pub algebra: AlgebraRef,
    pub module: ModRef,
    /// block_bases[g]: columns form a basis of `A e_g` inside the algebra.
    pub block_bases: Vec<Mat>,
    pub block_offsets: Vec<usize>,
    /// Coordinates of the generator itself inside each block.
    pub gen_coords: Vec<Vec<Scalar>>,
}

impl ProjRealization {
    pub fn new(alg: &AlgebraRef, term: ProjTerm) -> Result<ProjRealization> {
        let f = alg.field;
        let side = term.side;
        let mut block_bases = Vec::with_capacity(term.rank());
        let mut block_actions: Vec<Vec<Mat>> = Vec::with_capacity(term.rank());
        let mut gen_coords = Vec::with_capacity(term.rank());
        for g in 0..term.rank() {
            let eps = term.idempotent_vector(alg, g);
            // block space = image of (x -> x *_s eps)
            let comult = alg.side_comult(side, &eps);
            let space = Subspace::from_cols(&comult);
            let basis = space.basis.transpose(); // columns
            // restrict each basis action to the block
            let mut acts = Vec::with_capacity(alg.dim);
            for i in 0..alg.dim {
                let big = alg.side_mult(side, &alg.basis_vector(i));
                let moved = big.mul(&basis)?;
                let restricted = solve_matrix(&basis, &moved)?
                    .ok_or_else(|| Error::Validation("projective block not invariant".into()))?;
                acts.push(restricted);
            }
            let gcoord = space
                .coordinates(&eps)
                .ok_or_else(|| Error::Validation("idempotent outside its own block".into()))?;
            block_bases.push(basis);
            block_actions.push(acts);
            gen_coords.push(gcoord);
        }
        let total: usize = block_bases.iter().map(|b| b.cols).sum();
        let mut offsets = Vec::with_capacity(term.rank());
        let mut off = 0;
        for b in &block_bases {
            offsets.push(off);
            off += b.cols;
        }
        let action = (0..alg.dim)
            .map(|i| {
                let blocks: Vec<Mat> = block_actions.iter().map(|a| a[i].clone()).collect();
                Mat::block_diag(f, &blocks)
            })
            .collect();
        let module = Mod::new_unchecked(alg.clone(), side, total, action);
        Ok(ProjRealization {
            term,
            algebra: alg.clone(),
            module,
            block_bases,
            block_offsets: offsets,
            gen_coords,
        })
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// Coordinates (in the realization) of the g-th generator.
    pub fn generator_vector(&self, g: usize) -> Vec<Scalar> {
        let f = self.algebra.field;
        let mut v = vec![f.zero(); self.dim()];
        for (i, c) in self.gen_coords[g].iter().enumerate() {
            v[self.block_offsets[g] + i] = c.clone();
        }
        v
    }

    /// Reads a realization vector back as one algebra element per generator.
    pub fn vector_to_entries(&self, v: &[Scalar]) -> Vec<Vec<Scalar>> {
        let f = self.algebra.field;
        let d = self.algebra.dim;
        let mut out = Vec::with_capacity(self.term.rank());
        for g in 0..self.term.rank() {
            let b = &self.block_bases[g];
            let mut amb = vec![f.zero(); d];
            for col in 0..b.cols {
                let coeff = &v[self.block_offsets[g] + col];
                if coeff.is_zero() {
                    continue;
                }
                for row in 0..d {
                    let t = f.mul(coeff, b.at(row, col));
                    amb[row] = f.add(&amb[row], &t);
                }
            }
            out.push(amb);
        }
        out
    }

    /// The module map sending generator g to `images[g]` (a coordinate vector
    /// in `target`). For idempotent-weighted generators the image must be
    /// fixed by that idempotent.
    pub fn hom_to(&self, target: &ModRef, images: &[Vec<Scalar>]) -> Result<ModHom> {
        if images.len() != self.term.rank() {
            return Err(Error::DimensionMismatch("one image per generator".into()));
        }
        let f = self.algebra.field;
        let mut matrix = Mat::zero(f, target.dim, self.dim());
        for g in 0..self.term.rank() {
            let b = &self.block_bases[g];
            for col in 0..b.cols {
                // basis column is the algebra element a = B[., col]; it maps to
                // rho_target(a) images[g]
                let a: Vec<Scalar> = (0..self.algebra.dim).map(|r| b.at(r, col).clone()).collect();
                let img = target.action_of(&a).apply(&images[g])?;
                for r in 0..target.dim {
                    matrix.set(r, self.block_offsets[g] + col, img[r].clone());
                }
            }
        }
        ModHom::new(self.module.clone(), target.clone(), matrix)
    }
}

/// A map of projective terms: `entries[t][s]` is the algebra element giving
/// the coefficient of target generator `t` in the image of source generator
/// `s`; it lies in `eps_s A eps_t` (side-oriented).
#[derive(Clone, Debug)]
pub struct ProjMap {
    pub algebra: AlgebraRef,
    pub source: ProjTerm,
    pub target: ProjTerm,
    pub entries: Vec<Vec<Vec<Scalar>>>,
}

impl ProjMap {
    pub fn new(
        algebra: AlgebraRef,
        source: ProjTerm,
        target: ProjTerm,
        entries: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<ProjMap> {
        if source.side != target.side {
            return Err(Error::Validation("projective map across sides".into()));
        }
        if entries.len() != target.rank() || entries.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::DimensionMismatch("projective map entry grid".into()));
        }
        Ok(ProjMap {
            algebra,
            source,
            target,
            entries,
        })
    }

    pub fn zero(algebra: AlgebraRef, source: ProjTerm, target: ProjTerm) -> ProjMap {
        let z = vec![algebra.field.zero(); algebra.dim];
        let entries = vec![vec![z; source.rank()]; target.rank()];
        ProjMap {
            algebra,
            source,
            target,
            entries,
        }
    }

    /// The dual map: transposed entry grid over the opposite side.
    pub fn star(&self) -> ProjMap {
        let entries = (0..self.source.rank())
            .map(|s| (0..self.target.rank()).map(|t| self.entries[t][s].clone()).collect())
            .collect();
        ProjMap {
            algebra: self.algebra.clone(),
            source: self.target.star(),
            target: self.source.star(),
            entries,
        }
    }

    /// Realizes the map between chosen realizations of source and target.
    pub fn realize(&self, src: &ProjRealization, tgt: &ProjRealization) -> Result<ModHom> {
        debug_assert_eq!(src.term, self.source);
        debug_assert_eq!(tgt.term, self.target);
        let f = self.algebra.field;
        let side = self.source.side;
        let tgt_spaces: Vec<Subspace> = tgt.block_bases.iter().map(Subspace::from_cols).collect();
        let mut matrix = Mat::zero(f, tgt.dim(), src.dim());
        for s in 0..self.source.rank() {
            let sb = &src.block_bases[s];
            for col in 0..sb.cols {
                let x: Vec<Scalar> = (0..self.algebra.dim).map(|r| sb.at(r, col).clone()).collect();
                // image of basis element x*gen_s: sum_t (x *_s a_ts) gen_t
                for t in 0..self.target.rank() {
                    let a = &self.entries[t][s];
                    if a.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    let prod = side_product(&self.algebra, side, &x, a);
                    let coords = tgt_spaces[t]
                        .coordinates(&prod)
                        .ok_or_else(|| Error::Validation("entry leaves target block".into()))?;
                    for (i, c) in coords.iter().enumerate() {
                        if !c.is_zero() {
                            let r = tgt.block_offsets[t] + i;
                            let v = f.add(matrix.at(r, src.block_offsets[s] + col), c);
                            matrix.set(r, src.block_offsets[s] + col, v);
                        }
                    }
                }
            }
        }
        ModHom::new(src.module.clone(), tgt.module.clone(), matrix)
    }
}

/// The side-oriented product `x *_s y`.
pub fn side_product(alg: &AlgebraRef, side: Side, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    match side {
        Side::Left => alg.mul_vec(x, y),
        Side::Right => alg.mul_vec(y, x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin_algebra;
    use crate::field::FieldSpec;

    fn gf5() -> FieldSpec {
        FieldSpec::Prime(5)
    }

    #[test]
    fn free_term_realizes_as_free_module() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let p = ProjRealization::new(&a, ProjTerm::free(Side::Left, 2)).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.module.as_ref(), Mod::free(a.clone(), 2, Side::Left).as_ref());
        // generators are the unit of each block
        let g0 = p.generator_vector(0);
        assert_eq!(g0[0], gf5().one());
        assert!(g0[1..].iter().all(Scalar::is_zero));
    }

    #[test]
    fn idempotent_blocks_of_a2() {
        let a = builtin_algebra("A2", gf5()).unwrap();
        // P0 = A e0 has dim 2, P1 = A e1 has dim 1
        let p0 = ProjRealization::new(
            &a,
            ProjTerm {
                side: Side::Left,
                gens: vec![Some(0)],
            },
        )
        .unwrap();
        let p1 = ProjRealization::new(
            &a,
            ProjTerm {
                side: Side::Left,
                gens: vec![Some(1)],
            },
        )
        .unwrap();
        assert_eq!(p0.dim(), 2);
        assert_eq!(p1.dim(), 1);
        // dual blocks: e0 A has dim 1, e1 A has dim 2
        let p0s = ProjRealization::new(&a, p0.term.star()).unwrap();
        let p1s = ProjRealization::new(&a, p1.term.star()).unwrap();
        assert_eq!(p0s.dim(), 1);
        assert_eq!(p1s.dim(), 2);
    }

    #[test]
    fn star_is_involutive_on_maps() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let t = ProjTerm::free(Side::Left, 1);
        // multiplication by a as a projective map
        let entry = a.basis_vector(1);
        let m = ProjMap::new(a.clone(), t.clone(), t.clone(), vec![vec![entry]]).unwrap();
        let ss = m.star().star();
        assert_eq!(ss.entries, m.entries);
        assert_eq!(ss.source, m.source);
    }

    #[test]
    fn realized_star_of_multiplication() {
        // over DUAL2: the dual of x -> x*a is left multiplication by a
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let t = ProjTerm::free(Side::Left, 1);
        let m = ProjMap::new(a.clone(), t.clone(), t.clone(), vec![vec![a.basis_vector(1)]]).unwrap();
        let src = ProjRealization::new(&a, t.clone()).unwrap();
        let h = m.realize(&src, &src).unwrap();
        assert_eq!(h.matrix, a.right_mult(&a.basis_vector(1)));
        let ms = m.star();
        let srcs = ProjRealization::new(&a, ms.source.clone()).unwrap();
        let hs = ms.realize(&srcs, &srcs).unwrap();
        // on the opposite side the map is x -> a *_op x = x*a in A... for the
        // commutative DUAL2 both sides coincide
        assert_eq!(hs.matrix, a.left_mult(&a.basis_vector(1)));
    }

    #[test]
    fn hom_to_sends_generators() {
        let a = builtin_algebra("A2", gf5()).unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        let p = ProjRealization::new(&a, ProjTerm::free(Side::Left, 1)).unwrap();
        // send the generator to e0+e1 = 1: the resulting map is the identity
        let h = p.hom_to(&reg, &[a.unit.clone()]).unwrap();
        assert!(h.matrix.is_identity());
    }
}
