//! Projective presentations and truncated resolutions.
//!
//! Minimal covers lift a basis of the semisimple top, one generator per
//! primitive idempotent weight space, so minimal resolutions exist exactly
//! when the algebra knows its radical and a split-basic idempotent system
//! (bound quiver algebras always do). Without that, covers are free on a full
//! vector-space basis — correct, but the ranks grow quickly, so non-minimal
//! resolutions are only used at small depth.

use super::HomologyCtx;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{solve_matrix, Mat, Subspace};
use crate::module::ops::radical_subspace;
use crate::module::projective::{ProjMap, ProjRealization, ProjTerm};
use crate::module::{ModHom, ModRef};
use std::sync::Arc;

/// A chosen cover of a module by a projective term.
pub struct Cover {
    pub term: ProjTerm,
    /// One image vector (in module coordinates) per generator.
    pub images: Vec<Vec<Scalar>>,
}

/// Minimal projective cover: generators lift an idempotent-split basis of the
/// top. Requires a split-basic algebra.
pub fn minimal_cover(m: &ModRef) -> Result<Cover> {
    let alg = &m.algebra;
    if !alg.supports_minimal() {
        return Err(Error::Unsupported(
            "minimal covers need the radical and a split-basic idempotent system".into(),
        ));
    }
    let f = alg.field;
    let radm = radical_subspace(m)?;
    let (top, proj) = crate::module::ops::quotient(m, &radm)?;
    let idems = alg.idempotents.as_ref().expect("split basic");
    let mut gens = Vec::new();
    let mut images = Vec::new();
    for (i, eps) in idems.iter().enumerate() {
        let projector = top.action_of(eps);
        let image = Subspace::from_cols(&projector);
        for r in 0..image.dim() {
            let t = image.basis.row(r);
            // any preimage of t, pinched into the idempotent weight space
            let tcol = Mat::from_fn(f, top.dim, 1, |row, _| t[row].clone());
            let pre = solve_matrix(&proj.matrix, &tcol)?
                .ok_or_else(|| Error::Validation("top projection not surjective".into()))?;
            let x0: Vec<Scalar> = (0..m.dim).map(|row| pre.at(row, 0).clone()).collect();
            let x = m.action_of(eps).apply(&x0)?;
            gens.push(Some(i));
            images.push(x);
        }
    }
    Ok(Cover {
        term: ProjTerm {
            side: m.side,
            gens,
        },
        images,
    })
}

/// Free cover on a full basis of the module.
pub fn free_cover(m: &ModRef) -> Cover {
    let f = m.algebra.field;
    let images = (0..m.dim)
        .map(|i| {
            let mut v = vec![f.zero(); m.dim];
            v[i] = f.one();
            v
        })
        .collect();
    Cover {
        term: ProjTerm::free(m.side, m.dim),
        images,
    }
}

pub fn cover(m: &ModRef, minimal: bool) -> Result<Cover> {
    if minimal {
        minimal_cover(m)
    } else {
        Ok(free_cover(m))
    }
}

/// One presentation step `P1 -> P0 -> m -> 0`.
pub struct Presentation {
    pub p0: Arc<ProjRealization>,
    pub p1: Arc<ProjRealization>,
    /// The differential as term-level data.
    pub map: ProjMap,
    /// The realized differential P1 -> P0.
    pub differential: ModHom,
    pub augmentation: ModHom,
    /// First syzygy: kernel of the augmentation, inside P0.
    pub syzygy: ModRef,
    pub syzygy_incl: ModHom,
    pub minimal: bool,
}

/// Builds a presentation; `minimal` requires cover support.
pub fn presentation(ctx: &HomologyCtx, m: &ModRef, minimal: bool) -> Result<Presentation> {
    let entry = ctx.resolution_entry(m, minimal)?;
    let mut res = entry.lock();
    res.extend_to(ctx, 1)?;
    Ok(Presentation {
        p0: res.terms[0].clone(),
        p1: res.terms[1].clone(),
        map: res.proj_maps[0].clone(),
        differential: res.hom_maps[0].clone(),
        augmentation: res.augmentation.clone(),
        syzygy: res.syzygies[0].0.clone(),
        syzygy_incl: res.syzygies[0].1.clone(),
        minimal,
    })
}

/// A truncated projective resolution
/// `P_len -> ... -> P_1 -> P_0 -> target -> 0`.
pub struct Resolution {
    pub target: ModRef,
    pub minimal: bool,
    /// terms[i] realizes P_i; always one more term than differentials.
    pub terms: Vec<Arc<ProjRealization>>,
    /// proj_maps[i]: P_{i+1} -> P_i as algebra-entry data.
    pub proj_maps: Vec<ProjMap>,
    /// realized differentials, same indexing.
    pub hom_maps: Vec<ModHom>,
    pub augmentation: ModHom,
    /// syzygies[i] = (Omega^{i+1}, inclusion into realize(P_i)).
    pub syzygies: Vec<(ModRef, ModHom)>,
}

impl Resolution {
    /// Starts a resolution with the degree-0 cover.
    pub fn start(_ctx: &HomologyCtx, target: ModRef, minimal: bool) -> Result<Resolution> {
        let alg = target.algebra.clone();
        let c = cover(&target, minimal)?;
        let p0 = Arc::new(ProjRealization::new(&alg, c.term)?);
        let augmentation = p0.hom_to(&target, &c.images)?;
        let ker = augmentation.kernel_subspace();
        let (syz, incl) = crate::module::ops::submodule(&p0.module, &ker)?;
        Ok(Resolution {
            target,
            minimal,
            terms: vec![p0],
            proj_maps: vec![],
            hom_maps: vec![],
            augmentation,
            syzygies: vec![(syz, incl)],
        })
    }

    /// Number of differentials computed so far.
    pub fn length(&self) -> usize {
        self.proj_maps.len()
    }

    /// Extends so that terms P_0..P_len and differentials d_1..d_len exist.
    pub fn extend_to(&mut self, _ctx: &HomologyCtx, len: usize) -> Result<()> {
        while self.length() < len {
            let alg = self.target.algebra.clone();
            let (prev_syz, prev_incl) = self.syzygies.last().expect("started").clone();
            let c = cover(&prev_syz, self.minimal)?;
            let p_next = Arc::new(ProjRealization::new(&alg, c.term)?);
            // differential = inclusion after the cover augmentation
            let into_syz = p_next.hom_to(&prev_syz, &c.images)?;
            let differential = prev_incl.compose(&into_syz)?;
            // entries of the differential in the previous term's blocks
            let prev_real = self.terms.last().expect("started");
            let entries: Vec<Vec<Vec<Scalar>>> = {
                let mut grid =
                    vec![vec![vec![]; p_next.term.rank()]; prev_real.term.rank()];
                for (s, _) in p_next.term.gens.iter().enumerate() {
                    let g = p_next.generator_vector(s);
                    let w = differential.matrix.apply(&g)?;
                    let entry = prev_real.vector_to_entries(&w);
                    for (t, e) in entry.into_iter().enumerate() {
                        grid[t][s] = e;
                    }
                }
                grid
            };
            let pm = ProjMap::new(
                alg.clone(),
                p_next.term.clone(),
                prev_real.term.clone(),
                entries,
            )?;
            let ker = differential.kernel_subspace();
            let (syz, incl) = crate::module::ops::submodule(&p_next.module, &ker)?;
            self.proj_maps.push(pm);
            self.hom_maps.push(differential);
            self.terms.push(p_next);
            self.syzygies.push((syz, incl));
        }
        Ok(())
    }

    /// Checks exactness at every computed spot.
    pub fn verify(&self) -> Result<()> {
        if !self.augmentation.is_surjective() {
            return Err(Error::Validation("augmentation not surjective".into()));
        }
        let mut prev_kernel = self.augmentation.kernel_subspace();
        for d in &self.hom_maps {
            if d.image_subspace() != prev_kernel {
                return Err(Error::Validation("resolution not exact".into()));
            }
            if self.minimal {
                // image inside radical * P
                let radp = radical_subspace(&d.target)?;
                for c in 0..d.matrix.cols {
                    if !radp.contains(&d.matrix.col(c)) {
                        return Err(Error::Validation("resolution not minimal".into()));
                    }
                }
            }
            prev_kernel = d.kernel_subspace();
        }
        Ok(())
    }
}

/// `Omega^n m`; syzygy(m, 0) is m itself.
pub fn syzygy(ctx: &HomologyCtx, m: &ModRef, n: usize, minimal: bool) -> Result<ModRef> {
    if n == 0 {
        return Ok(m.clone());
    }
    let entry = ctx.resolution_entry(m, minimal)?;
    let mut res = entry.lock();
    res.extend_to(ctx, n - 1)?;
    Ok(res.syzygies[n - 1].0.clone())
}
