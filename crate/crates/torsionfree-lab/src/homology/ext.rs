//! Ext dimensions via the cochain complex Hom(P_*, N).
//!
//! For a projective term with generator idempotents e_g, the hom space into N
//! is the direct sum of the images of rho_N(e_g); applying Hom(-, N) to a
//! term-level differential with entries a produces a block matrix with blocks
//! rho_N(a). Ranks of the induced differentials give every Ext dimension
//! without solving intertwining systems.

use super::HomologyCtx;
use crate::error::Result;
use crate::linalg::{rank, Mat, Subspace};
use crate::module::projective::{ProjMap, ProjRealization};
use crate::module::ModRef;

/// Basis data of the cochain space Hom(P_i, N).
struct Cochain {
    /// columns span the subspace of N^{rank} cut out by the idempotents
    basis: Mat,
    dim: usize,
}

fn cochain(term: &ProjRealization, n: &ModRef) -> Cochain {
    let f = n.algebra.field;
    let alg = &term.algebra;
    let blocks: Vec<Mat> = term
        .term
        .gens
        .iter()
        .enumerate()
        .map(|(g, _)| {
            let eps = term.term.idempotent_vector(alg, g);
            let proj = n.action_of(&eps);
            Subspace::from_cols(&proj).basis.transpose()
        })
        .collect();
    let basis = Mat::block_diag(f, &blocks);
    let dim = basis.cols;
    Cochain { basis, dim }
}

/// The big induced map Hom(P_{i-1}, N) -> Hom(P_i, N) on ambient blocks.
fn induced_block_matrix(d: &ProjMap, n: &ModRef) -> Result<Mat> {
    let f = n.algebra.field;
    let (src_rank, tgt_rank) = (d.source.rank(), d.target.rank());
    // output indexed by source generators of d (degree i), input by target
    // generators (degree i-1); block (j,k) = rho_N(entries[k][j])
    let nd = n.dim;
    let mut out = Mat::zero(f, src_rank * nd, tgt_rank * nd);
    for j in 0..src_rank {
        for k in 0..tgt_rank {
            let a = &d.entries[k][j];
            if a.iter().all(|s| s.is_zero()) {
                continue;
            }
            let block = n.action_of(a);
            for r in 0..nd {
                for c in 0..nd {
                    let v = block.at(r, c);
                    if !v.is_zero() {
                        out.set(j * nd + r, k * nd + c, v.clone());
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Dimensions of Ext^i(m, n) for i = 0..=max_i. Resolutions are cached in the
/// context; minimal resolutions are used when the algebra supports them.
pub fn ext_dims(ctx: &HomologyCtx, m: &ModRef, n: &ModRef, max_i: usize) -> Result<Vec<usize>> {
    ext_dims_with(ctx, m, n, max_i, ctx.minimal_supported())
}

/// Same, with an explicit choice of resolution kind (used by the
/// resolution-independence tests).
pub fn ext_dims_with(
    ctx: &HomologyCtx,
    m: &ModRef,
    n: &ModRef,
    max_i: usize,
    minimal: bool,
) -> Result<Vec<usize>> {
    let mkey = format!("{}#{}", minimal, m.encode());
    let nkey = n.encode();
    if let Some(cached) = ctx.cached_ext(&mkey, &nkey) {
        if cached.len() > max_i {
            return Ok(cached[..=max_i].to_vec());
        }
    }
    if m.dim == 0 || n.dim == 0 {
        return Ok(vec![0; max_i + 1]);
    }
    let entry = ctx.resolution_entry(m, minimal)?;
    let mut res = entry.lock();
    res.extend_to(ctx, max_i + 1)?;
    // cochain dims c_i and differential ranks r_i (D_i: C^{i-1} -> C^i)
    let mut cdims = Vec::with_capacity(max_i + 2);
    let mut cbases = Vec::with_capacity(max_i + 2);
    for i in 0..=max_i + 1 {
        let ch = cochain(&res.terms[i], n);
        cdims.push(ch.dim);
        cbases.push(ch.basis);
    }
    let mut ranks = vec![0usize; max_i + 2]; // ranks[i] = rank D_i, D_0 = 0
    for i in 1..=max_i + 1 {
        let big = induced_block_matrix(&res.proj_maps[i - 1], n)?;
        let restricted = big.mul(&cbases[i - 1])?;
        ranks[i] = rank(&restricted);
    }
    let mut dims = Vec::with_capacity(max_i + 1);
    for i in 0..=max_i {
        dims.push(cdims[i] - ranks[i + 1] - ranks[i]);
    }
    ctx.store_ext(mkey, nkey, dims.clone());
    Ok(dims)
}

/// Cocycle-level data for degree-1 extension classes; see
/// `constructions::extension_from_cocycle`.
pub(crate) struct Ext1Data {
    /// representative cocycles as coordinate vectors over the C^1 basis
    pub reps: Vec<Vec<crate::field::Scalar>>,
    pub c1_basis: Mat,
}

pub(crate) fn ext1_cocycles(ctx: &HomologyCtx, c: &ModRef, a: &ModRef) -> Result<Ext1Data> {
    let minimal = ctx.minimal_supported();
    let entry = ctx.resolution_entry(c, minimal)?;
    let mut res = entry.lock();
    res.extend_to(ctx, 2)?;
    let ch0 = cochain(&res.terms[0], a);
    let ch1 = cochain(&res.terms[1], a);
    let d1 = induced_block_matrix(&res.proj_maps[0], a)?;
    let d2 = induced_block_matrix(&res.proj_maps[1], a)?;
    // cocycles: z with d2 * (B1 z) = 0
    let z_space = crate::linalg::kernel_basis(&d2.mul(&ch1.basis)?);
    // coboundaries: coordinates of d1 * B0 in the C^1 basis
    let img = d1.mul(&ch0.basis)?;
    let coords = crate::linalg::solve_matrix(&ch1.basis, &img)?
        .expect("coboundaries live in the cochain subspace");
    let b_space = Subspace::from_cols(&coords);
    // reduce cocycle basis mod coboundaries, re-echelonize
    let f = a.algebra.field;
    let mut rows = Vec::new();
    for r in 0..z_space.dim() {
        let red = b_space.reduce(&z_space.basis.row(r));
        if red.iter().any(|s| !s.is_zero()) {
            rows.push(red);
        }
    }
    let reps = if rows.is_empty() {
        vec![]
    } else {
        let sub = Subspace::from_rows(&Mat::from_rows(f, rows)?);
        (0..sub.dim()).map(|r| sub.basis.row(r)).collect()
    };
    Ok(Ext1Data {
        reps,
        c1_basis: ch1.basis,
    })
}
