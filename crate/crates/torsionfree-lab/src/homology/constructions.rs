//! Constructive homological algebra: the horseshoe star sequences, extension
//! classes, cosyzygy embeddings, torsionfree compression, and embeddings into
//! modules of finite projective dimension. Every output carries a
//! machine-checked exactness certificate.

use super::dims::{inf_torsionfree_windowed, CertBool};
use super::ext::{ext1_cocycles, ext_dims};
use super::resolution::{presentation, Presentation};
use super::{DimResult, HomologyCtx};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{solve_matrix, Mat};
use crate::module::ops::{evaluation_hom, kernel_cokernel, pushout, submodule};
use crate::module::projective::{ProjMap, ProjRealization, ProjTerm};
use crate::module::seq::ExactSeq;
use crate::module::{Mod, ModHom, ModRef};
use std::sync::Arc;

/// Solves `M . proj = big` for a map defined on the quotient that `proj`
/// projects onto; `proj` must be surjective and `big` must kill its kernel.
fn descend(big: &Mat, proj: &Mat) -> Result<Mat> {
    let sol = solve_matrix(&proj.transpose(), &big.transpose())?
        .ok_or_else(|| Error::Validation("map does not descend to the quotient".into()))?;
    Ok(sol.transpose())
}

/// Solves `incl_tgt . M = big . incl_src`: the restriction of `big` to the
/// subobjects cut out by the two inclusions.
fn restrict(big: &Mat, incl_src: &Mat, incl_tgt: &Mat) -> Result<Mat> {
    let moved = big.mul(incl_src)?;
    solve_matrix(incl_tgt, &moved)?
        .ok_or_else(|| Error::Validation("map does not restrict to the subobject".into()))
}

/// Lifts `target_map: P -> Y` through the surjection `onto: X -> Y`, choosing
/// generator preimages pinched into their idempotent weight spaces.
fn lift_through(
    p: &ProjRealization,
    target_map: &ModHom,
    onto: &ModHom,
) -> Result<ModHom> {
    let alg = &p.algebra;
    let mut images = Vec::with_capacity(p.term.rank());
    for g in 0..p.term.rank() {
        let gen = p.generator_vector(g);
        let want = target_map.matrix.apply(&gen)?;
        let rhs = Mat::from_fn(alg.field, want.len(), 1, |r, _| want[r].clone());
        let pre = solve_matrix(&onto.matrix, &rhs)?
            .ok_or_else(|| Error::Validation("lift target misses the image".into()))?;
        let y0: Vec<Scalar> = (0..onto.source.dim).map(|r| pre.at(r, 0).clone()).collect();
        let eps = p.term.idempotent_vector(alg, g);
        let y = onto.source.action_of(&eps).apply(&y0)?;
        images.push(y);
    }
    p.hom_to(&onto.source, &images)
}

fn proj_entries_of(real_target: &ProjRealization, h: &ModHom, source: &ProjRealization) -> Vec<Vec<Vec<Scalar>>> {
    let mut grid = vec![vec![vec![]; source.term.rank()]; real_target.term.rank()];
    for s in 0..source.term.rank() {
        let g = source.generator_vector(s);
        let w = h.matrix.apply(&g).expect("shape");
        for (t, e) in real_target.vector_to_entries(&w).into_iter().enumerate() {
            grid[t][s] = e;
        }
    }
    grid
}

/// Identity-like projection / inclusion grids between concatenated terms.
fn block_projection(alg: &crate::algebra::AlgebraRef, whole: &ProjTerm, part: &ProjTerm, offset: usize) -> ProjMap {
    let z = vec![alg.field.zero(); alg.dim];
    let mut entries = vec![vec![z.clone(); whole.rank()]; part.rank()];
    for t in 0..part.rank() {
        let eps = match part.gens[t] {
            None => alg.unit.clone(),
            Some(i) => alg.idempotents.as_ref().expect("idempotents")[i].clone(),
        };
        entries[t][offset + t] = eps;
    }
    ProjMap::new(alg.clone(), whole.clone(), part.clone(), entries).expect("grid shape")
}

fn block_inclusion(alg: &crate::algebra::AlgebraRef, part: &ProjTerm, whole: &ProjTerm, offset: usize) -> ProjMap {
    let z = vec![alg.field.zero(); alg.dim];
    let mut entries = vec![vec![z.clone(); part.rank()]; whole.rank()];
    for s in 0..part.rank() {
        let eps = match part.gens[s] {
            None => alg.unit.clone(),
            Some(i) => alg.idempotents.as_ref().expect("idempotents")[i].clone(),
        };
        entries[offset + s][s] = eps;
    }
    ProjMap::new(alg.clone(), part.clone(), whole.clone(), entries).expect("grid shape")
}

/// The two exact sequences obtained by dualizing a short exact sequence
/// `0 -> A -> B -> C -> 0` along a horseshoe presentation of the middle term:
///
/// * `0 -> C* -> B* -> A* -> Coker f* -> 0`
/// * `0 -> Coker f* -> Tr C -> Tr B -> Tr A -> 0`
///
/// The transposes of B come from the induced (non-minimal) presentation.
pub struct StarOfSes {
    pub star_seq: ExactSeq,
    pub transpose_seq: ExactSeq,
    /// dim of Coker f*, handy for reports
    pub coker_dim: usize,
}

pub fn star_of_ses(ctx: &HomologyCtx, seq: &ExactSeq) -> Result<StarOfSes> {
    seq.verify()?;
    if seq.maps.len() != 4 {
        return Err(Error::Precondition(
            "star_of_ses expects a short exact sequence".into(),
        ));
    }
    let f = seq.maps[1].clone(); // A -> B
    let g = seq.maps[2].clone(); // B -> C
    let alg = ctx.algebra.clone();
    let minimal = ctx.minimal_supported();
    let a_mod = f.source.clone();
    let b_mod = f.target.clone();
    let c_mod = g.target.clone();

    let pa: Presentation = presentation(ctx, &a_mod, minimal)?;
    let pc: Presentation = presentation(ctx, &c_mod, minimal)?;

    // lift the C-augmentation through g
    let lambda = lift_through(&pc.p0, &pc.augmentation, &g)?;
    // middle presentation term P0B = P0A + P0C
    let p0b_term = ProjTerm {
        side: a_mod.side,
        gens: [pa.p0.term.gens.clone(), pc.p0.term.gens.clone()].concat(),
    };
    let p0b = Arc::new(ProjRealization::new(&alg, p0b_term.clone())?);
    let f_eps = f.compose(&pa.augmentation)?;
    let eps_b_images: Vec<Vec<Scalar>> = (0..pa.p0.term.rank())
        .map(|gidx| f_eps.matrix.apply(&pa.p0.generator_vector(gidx)).expect("shape"))
        .chain(
            (0..pc.p0.term.rank())
                .map(|gidx| lambda.matrix.apply(&pc.p0.generator_vector(gidx)).expect("shape")),
        )
        .collect();
    let eps_b = p0b.hom_to(&b_mod, &eps_b_images)?;
    if !eps_b.is_surjective() {
        return Err(Error::Validation("horseshoe cover not surjective".into()));
    }

    // filler h: P1C -> P0A with (f . epsA) . h = -(lambda . dC)
    let neg_lambda_dc = ModHom::new_unchecked(
        pc.p1.module.clone(),
        b_mod.clone(),
        lambda.matrix.mul(&pc.differential.matrix)?.neg(),
    );
    let h = lift_through(&pc.p1, &neg_lambda_dc, &f_eps)?;

    // middle differential as a block triangular matrix
    let p1b_term = ProjTerm {
        side: a_mod.side,
        gens: [pa.p1.term.gens.clone(), pc.p1.term.gens.clone()].concat(),
    };
    let p1b = Arc::new(ProjRealization::new(&alg, p1b_term.clone())?);
    let top = pa.differential.matrix.hstack(&h.matrix)?;
    let bottom = Mat::zero(alg.field, pc.p0.dim(), pa.p1.dim()).hstack(&pc.differential.matrix)?;
    let db = ModHom::new(p1b.module.clone(), p0b.module.clone(), top.vstack(&bottom)?)?;
    if db.image_subspace() != eps_b.kernel_subspace() {
        return Err(Error::Validation("horseshoe presentation not exact".into()));
    }
    let db_map = ProjMap::new(
        alg.clone(),
        p1b_term.clone(),
        p0b_term.clone(),
        proj_entries_of(&p0b, &db, &p1b),
    )?;

    // dualize all three presentations
    let star_data = |map: &ProjMap| -> Result<(Arc<ProjRealization>, Arc<ProjRealization>, ModHom)> {
        let s = map.star();
        let src = Arc::new(ProjRealization::new(&alg, s.source.clone())?);
        let tgt = Arc::new(ProjRealization::new(&alg, s.target.clone())?);
        let hom = s.realize(&src, &tgt)?;
        Ok((src, tgt, hom))
    };
    let (p0a_s, p1a_s, sa) = star_data(&pa.map)?;
    let (p0c_s, p1c_s, sc) = star_data(&pc.map)?;
    let (p0b_s, p1b_s, sb) = star_data(&db_map)?;

    let (astar, astar_incl) = submodule(&p0a_s.module, &sa.kernel_subspace())?;
    let (bstar, bstar_incl) = submodule(&p0b_s.module, &sb.kernel_subspace())?;
    let (cstar, cstar_incl) = submodule(&p0c_s.module, &sc.kernel_subspace())?;
    let kc_a = kernel_cokernel(&sa)?;
    let kc_b = kernel_cokernel(&sb)?;
    let kc_c = kernel_cokernel(&sc)?;
    let (tr_a, tr_a_proj) = (kc_a.cokernel, kc_a.coker_proj);
    let (tr_b, tr_b_proj) = (kc_b.cokernel, kc_b.coker_proj);
    let (tr_c, tr_c_proj) = (kc_c.cokernel, kc_c.coker_proj);

    // chain projections/inclusions and their duals
    let pi0 = block_projection(&alg, &p0b_term, &pc.p0.term, pa.p0.term.rank());
    let pi1 = block_projection(&alg, &p1b_term, &pc.p1.term, pa.p1.term.rank());
    let iota0 = block_inclusion(&alg, &pa.p0.term, &p0b_term, 0);
    let iota1 = block_inclusion(&alg, &pa.p1.term, &p1b_term, 0);
    let pi0_s = pi0.star().realize(&p0c_s, &p0b_s)?;
    let pi1_s = pi1.star().realize(&p1c_s, &p1b_s)?;
    let iota0_s = iota0.star().realize(&p0b_s, &p0a_s)?;
    let iota1_s = iota1.star().realize(&p1b_s, &p1a_s)?;

    // first sequence: 0 -> C* -> B* -> A* -> Coker f* -> 0
    let gstar = ModHom::new(
        cstar.clone(),
        bstar.clone(),
        restrict(&pi0_s.matrix, &cstar_incl.matrix, &bstar_incl.matrix)?,
    )?;
    let fstar = ModHom::new(
        bstar.clone(),
        astar.clone(),
        restrict(&iota0_s.matrix, &bstar_incl.matrix, &astar_incl.matrix)?,
    )?;
    let (coker_f, coker_f_proj) = {
        let im = fstar.image_subspace();
        crate::module::ops::quotient(&astar, &im)?
    };
    let proj_hom = coker_f_proj.compose(&ModHom::identity(&astar))?;
    let star_seq = ExactSeq::with_zero_caps(vec![gstar, fstar.clone(), proj_hom])?;
    star_seq.verify()?;

    // second sequence: 0 -> Coker f* -> Tr C -> Tr B -> Tr A -> 0
    let hs = {
        let s = ProjMap::new(
            alg.clone(),
            pc.p1.term.clone(),
            pa.p0.term.clone(),
            proj_entries_of(&pa.p0, &h, &pc.p1),
        )?
        .star();
        s.realize(&p0a_s, &p1c_s)?
    };
    // connecting map on representatives: A* >-> P0A* -h*-> P1C* ->> Tr C
    let conn_on_astar = tr_c_proj.matrix.mul(&hs.matrix)?.mul(&astar_incl.matrix)?;
    let delta = ModHom::new(
        coker_f.clone(),
        tr_c.clone(),
        descend(&conn_on_astar, &coker_f_proj.matrix)?,
    )?;
    let trc_to_trb = ModHom::new(
        tr_c.clone(),
        tr_b.clone(),
        descend(&tr_b_proj.matrix.mul(&pi1_s.matrix)?, &tr_c_proj.matrix)?,
    )?;
    let trb_to_tra = ModHom::new(
        tr_b.clone(),
        tr_a.clone(),
        descend(&tr_a_proj.matrix.mul(&iota1_s.matrix)?, &tr_b_proj.matrix)?,
    )?;
    let transpose_seq = ExactSeq::with_zero_caps(vec![delta, trc_to_trb, trb_to_tra])?;
    transpose_seq.verify()?;

    Ok(StarOfSes {
        coker_dim: coker_f.dim,
        star_seq,
        transpose_seq,
    })
}

/// Number of degree-1 extension classes of `c` by `a` (dim Ext^1(c, a)).
pub fn ext1_classes(ctx: &HomologyCtx, c: &ModRef, a: &ModRef) -> Result<usize> {
    Ok(ext1_cocycles(ctx, c, a)?.reps.len())
}

/// Builds the extension `0 -> a -> E -> c -> 0` for the chosen class.
/// Index 0 is the split extension; indices 1..=dim Ext^1 pick a cohomology
/// basis class in echelon order.
pub fn extension_from_cocycle(
    ctx: &HomologyCtx,
    c: &ModRef,
    a: &ModRef,
    class_index: usize,
) -> Result<ExactSeq> {
    let data = ext1_cocycles(ctx, c, a)?;
    if class_index > data.reps.len() {
        return Err(Error::BadArgument(format!(
            "extension class {class_index} out of range (dim Ext^1 = {})",
            data.reps.len()
        )));
    }
    let minimal = ctx.minimal_supported();
    let p = presentation(ctx, c, minimal)?;
    let f = ctx.algebra.field;
    let nd = a.dim;
    // cocycle as a hom P1 -> a
    let phi = if class_index == 0 {
        ModHom::zero(p.p1.module.clone(), a.clone())
    } else {
        let z = &data.reps[class_index - 1];
        let zcol = Mat::from_fn(f, z.len(), 1, |r, _| z[r].clone());
        let w = data.c1_basis.mul(&zcol)?;
        let images: Vec<Vec<Scalar>> = (0..p.p1.term.rank())
            .map(|g| (0..nd).map(|r| w.at(g * nd + r, 0).clone()).collect())
            .collect();
        p.p1.hom_to(a, &images)?
    };
    // factor through the syzygy: psi . q = phi with q: P1 ->> Omega c
    let q = solve_matrix(&p.syzygy_incl.matrix, &p.differential.matrix)?
        .ok_or_else(|| Error::Validation("differential misses its own syzygy".into()))?;
    let psi_t = solve_matrix(&q.transpose(), &phi.matrix.transpose())?
        .ok_or_else(|| Error::Validation("cocycle does not factor through the syzygy".into()))?;
    let psi = ModHom::new(p.syzygy.clone(), a.clone(), psi_t.transpose())?;
    // push out the canonical sequence 0 -> Omega c -> P0 -> c -> 0 along psi
    let (e, e_y, e_z) = pushout(&p.syzygy_incl, &psi)?;
    let proj_all = e_y.matrix.hstack(&e_z.matrix)?;
    let big = p
        .augmentation
        .matrix
        .hstack(&Mat::zero(f, c.dim, a.dim))?;
    let e_to_c = ModHom::new(e.clone(), c.clone(), descend(&big, &proj_all)?)?;
    let seq = ExactSeq::short(e_z, e_to_c)?;
    seq.verify()?;
    Ok(seq)
}

/// The cosyzygy embedding of an n-torsionfree module:
/// `0 -> m -> P_{n-1} -> ... -> P_0 -> tail -> 0` with projective middle
/// terms and `tail` in the n-th left-orthogonal class, so that `m` is
/// recovered as the n-th syzygy of `tail`.
pub struct CosyzygyEmbedding {
    pub seq: ExactSeq,
    pub tail: ModRef,
    /// Ext^i(tail, regular) for i = 1..=n, all zero
    pub tail_ext: Vec<usize>,
}

pub fn cosyzygy_embedding(ctx: &HomologyCtx, m: &ModRef, n: usize) -> Result<CosyzygyEmbedding> {
    if n == 0 {
        return Err(Error::BadArgument("cosyzygy embedding needs n >= 1".into()));
    }
    if !super::dims::is_n_torsionfree(ctx, m, n)? {
        return Err(Error::Precondition(format!(
            "module is not {n}-torsionfree"
        )));
    }
    let alg = ctx.algebra.clone();
    let minimal = ctx.minimal_supported();
    let p = presentation(ctx, m, minimal)?;

    // dualized presentation and the star module as a kernel
    let gs = p.map.star();
    let p0s = Arc::new(ProjRealization::new(&alg, gs.source.clone())?);
    let p1s = Arc::new(ProjRealization::new(&alg, gs.target.clone())?);
    let gsr = gs.realize(&p0s, &p1s)?;
    let (mstar, mstar_incl) = submodule(&p0s.module, &gsr.kernel_subspace())?;

    // resolve the star module on the opposite side
    let entry = ctx.resolution_entry(&mstar, minimal)?;
    let (q_terms, q_maps, q_aug) = {
        let mut res = entry.lock();
        res.extend_to(ctx, n - 1)?;
        (
            res.terms[..n].to_vec(),
            res.proj_maps[..n - 1].to_vec(),
            res.augmentation.clone(),
        )
    };

    // splice Q0 -> P0* and star the whole chain back
    let c0_hom = mstar_incl.compose(&q_aug)?;
    let c0 = ProjMap::new(
        alg.clone(),
        q_terms[0].term.clone(),
        gs.source.clone(),
        proj_entries_of(&p0s, &c0_hom, &q_terms[0]),
    )?;
    let c0s = c0.star(); // P0 -> Q0*
    let q_star_reals: Vec<Arc<ProjRealization>> = q_terms
        .iter()
        .map(|t| Ok(Arc::new(ProjRealization::new(&alg, t.term.star())?)))
        .collect::<Result<_>>()?;
    let c0s_hom = c0s.realize(&p.p0, &q_star_reals[0])?;

    // the first map factors through m = coker(differential)
    let mu = ModHom::new(
        m.clone(),
        q_star_reals[0].module.clone(),
        descend(&c0s_hom.matrix, &p.augmentation.matrix)?,
    )?;

    let mut chain: Vec<ModHom> = vec![mu];
    for i in 1..n {
        let his = q_maps[i - 1].star();
        chain.push(his.realize(&q_star_reals[i - 1], &q_star_reals[i])?);
    }
    let last = chain.last().expect("n >= 1");
    let kc = kernel_cokernel(last)?;
    let tail = kc.cokernel;
    chain.push(kc.coker_proj);
    let seq = ExactSeq::with_zero_caps(chain)?;
    seq.verify()?;

    let reg = Mod::regular(alg.clone(), m.side);
    let ext = ext_dims(ctx, &tail, &reg, n)?;
    if ext[1..=n].iter().any(|&d| d != 0) {
        return Err(Error::Validation(
            "cosyzygy tail misses the orthogonal class; this is a bug".into(),
        ));
    }
    Ok(CosyzygyEmbedding {
        seq,
        tail_ext: ext[1..=n].to_vec(),
        tail,
    })
}

/// Certificate-checked view of `0 -> T1 -> P -> W -> 0` with P projective and
/// W infinitely torsionfree inside the first orthogonal class.
struct FirstCosyzygy {
    p_module: ModRef,
    mu: ModHom,
    w_module: ModRef,
    w_proj: ModHom,
}

fn first_cosyzygy(ctx: &HomologyCtx, t1: &ModRef) -> Result<FirstCosyzygy> {
    let tr = super::dims::transpose(ctx, t1)?;
    if tr.module.dim == 0 && tr.from_minimal {
        // projective module: it embeds into itself with zero cokernel
        let zero = Mod::zero_module(ctx.algebra.clone(), t1.side);
        return Ok(FirstCosyzygy {
            p_module: t1.clone(),
            mu: ModHom::identity(t1),
            w_module: zero.clone(),
            w_proj: ModHom::zero(t1.clone(), zero),
        });
    }
    let d_op = super::dims::self_injective_dimension(ctx, t1.side.opposite(), ctx.bound)?
        .certified_finite()
        .ok_or_else(|| {
            Error::Precondition(
                "first cosyzygy of a non-projective module needs a certified opposite self-injective dimension"
                    .into(),
            )
        })?;
    let emb = cosyzygy_embedding(ctx, t1, d_op + 1)?;
    let mu = emb.seq.maps[1].clone();
    let kc = kernel_cokernel(&mu)?;
    // re-verify the certificates of W
    let reg = Mod::regular(ctx.algebra.clone(), t1.side);
    let e = ext_dims(ctx, &kc.cokernel, &reg, 1)?;
    if e[1] != 0 {
        return Err(Error::Validation("cosyzygy misses the orthogonal class".into()));
    }
    let tf = inf_torsionfree_windowed(ctx, &kc.cokernel, ctx.bound, 1)?;
    if !(tf.holds && tf.certified) {
        return Err(Error::Validation(
            "cosyzygy not certified infinitely torsionfree".into(),
        ));
    }
    Ok(FirstCosyzygy {
        p_module: mu.target.clone(),
        mu,
        w_module: kc.cokernel,
        w_proj: kc.coker_proj,
    })
}

/// Given an exact `0 -> M -> T1 -> T0 -> A -> 0` with infinitely torsionfree
/// middle terms, produces `0 -> M -> P -> T -> A -> 0` with P projective and
/// T infinitely torsionfree.
pub fn resolve_middle_term(
    ctx: &HomologyCtx,
    u: &ModHom, // M -> T1
    v: &ModHom, // T1 -> T0
    w: &ModHom, // T0 -> A
) -> Result<(ExactSeq, ModRef, ModRef)> {
    let t1 = u.target.clone();
    let t0 = v.target.clone();
    let a_end = w.target.clone();
    let f = ctx.algebra.field;

    let (imv, imv_incl) = submodule(&t0, &v.image_subspace())?;
    let q1 = ModHom::new(
        t1.clone(),
        imv.clone(),
        solve_matrix(&imv_incl.matrix, &v.matrix)?
            .ok_or_else(|| Error::Validation("image corestriction failed".into()))?,
    )?;
    let fc = first_cosyzygy(ctx, &t1)?;
    let (b_mod, b_y, b_z) = pushout(&q1, &fc.mu)?;
    let (t_mod, t_y, t_z) = pushout(&imv_incl, &b_y)?;

    let j_u = fc.mu.compose(u)?;
    let p_to_t = t_z.compose(&b_z)?;
    let proj_all = t_y.matrix.hstack(&t_z.matrix)?;
    let big = w.matrix.hstack(&Mat::zero(f, a_end.dim, b_mod.dim))?;
    let t_to_a = ModHom::new(t_mod.clone(), a_end.clone(), descend(&big, &proj_all)?)?;

    let seq = ExactSeq::with_zero_caps(vec![j_u, p_to_t, t_to_a])?;
    seq.verify()?;
    let tf = inf_torsionfree_windowed(ctx, &t_mod, ctx.bound, 1)?;
    if !(tf.holds && tf.certified) {
        return Err(Error::Validation(
            "resolved middle term not certified infinitely torsionfree".into(),
        ));
    }
    Ok((seq, fc.p_module, t_mod))
}

/// Output of the torsionfree compression: `0 -> H -> T -> M -> 0` with
/// `pd H <= n - 1` and T infinitely torsionfree, plus the projective witness
/// chain for H.
pub struct Compression {
    pub seq: ExactSeq,
    pub h_module: ModRef,
    pub t_module: ModRef,
    pub pd_h: DimResult,
    /// exact chain of projectives ending in a surjection onto H
    pub witness: Vec<ModHom>,
}

/// Verifies the torsionfree certificates on a resolution's interior terms
/// (all but the resolved module itself).
fn check_t_resolution(ctx: &HomologyCtx, tres: &ExactSeq) -> Result<Vec<CertBool>> {
    tres.verify()?;
    let interior = tres.interior();
    if interior.len() < 2 {
        return Err(Error::Precondition("resolution too short".into()));
    }
    let mut certs = Vec::new();
    for t in &interior[..interior.len() - 1] {
        let c = inf_torsionfree_windowed(ctx, t, ctx.bound, 1)?;
        if !(c.holds && c.certified) {
            return Err(Error::Precondition(format!(
                "resolution term of dimension {} is not certified infinitely torsionfree",
                t.dim
            )));
        }
        certs.push(c);
    }
    Ok(certs)
}

fn compress_rec(
    ctx: &HomologyCtx,
    target: &ModRef,
    tmaps: &[ModHom], // [T_n -> T_{n-1}, ..., T_1 -> T_0, T_0 -> target]
) -> Result<(ModHom, ModHom, Vec<ModHom>)> {
    let n = tmaps.len() - 1;
    if n == 0 {
        // 0 -> 0 -> T0 -> M -> 0 with T0 isomorphic to M
        let t0 = tmaps[0].source.clone();
        let zero = Mod::zero_module(ctx.algebra.clone(), target.side);
        return Ok((ModHom::zero(zero, t0), tmaps[0].clone(), vec![]));
    }
    if n == 1 {
        let zero = Mod::zero_module(ctx.algebra.clone(), target.side);
        let u = ModHom::zero(zero, tmaps[0].source.clone());
        let (seq, _p, _t) = resolve_middle_term(ctx, &u, &tmaps[0], &tmaps[1])?;
        // seq: 0 -> 0 -> P -> T -> M -> 0
        let p_to_t = seq.maps[2].clone();
        let t_to_m = seq.maps[3].clone();
        let (h, h_incl) = submodule(&p_to_t.target, &p_to_t.image_subspace())?;
        let onto_h = ModHom::new(
            p_to_t.source.clone(),
            h.clone(),
            solve_matrix(&h_incl.matrix, &p_to_t.matrix)?
                .ok_or_else(|| Error::Validation("corestriction failed".into()))?,
        )?;
        return Ok((h_incl, t_to_m, vec![onto_h]));
    }
    // n >= 2: recurse on K = ker(T_0 -> M) with the truncated resolution
    let aug = &tmaps[n];
    let (k_mod, k_incl) = submodule(&aug.source, &aug.kernel_subspace())?;
    let onto_k = ModHom::new(
        tmaps[n - 1].source.clone(),
        k_mod.clone(),
        solve_matrix(&k_incl.matrix, &tmaps[n - 1].matrix)?
            .ok_or_else(|| Error::Validation("corestriction failed".into()))?,
    )?;
    let mut trunc: Vec<ModHom> = tmaps[..n - 1].to_vec();
    trunc.push(onto_k);
    let (hp_incl, tp_to_k, wit) = compress_rec(ctx, &k_mod, &trunc)?;
    // 0 -> H' -> T'_1 -> T_0 -> M -> 0
    let u = hp_incl;
    let v = k_incl.compose(&tp_to_k)?;
    let (seq, _p, _t) = resolve_middle_term(ctx, &u, &v, aug)?;
    let j_u = seq.maps[1].clone(); // H' -> P_1
    let p_to_t = seq.maps[2].clone();
    let t_to_m = seq.maps[3].clone();
    let (h, h_incl) = submodule(&p_to_t.target, &p_to_t.image_subspace())?;
    let onto_h = ModHom::new(
        p_to_t.source.clone(),
        h.clone(),
        solve_matrix(&h_incl.matrix, &p_to_t.matrix)?
            .ok_or_else(|| Error::Validation("corestriction failed".into()))?,
    )?;
    // glue the witness: ... -> P_2 -> P_1 ->> H
    let mut witness = Vec::with_capacity(wit.len() + 1);
    if let Some((last, head)) = wit.split_last() {
        witness.extend(head.iter().cloned());
        witness.push(j_u.compose(last)?);
    }
    witness.push(onto_h);
    Ok((h_incl, t_to_m, witness))
}

/// Compresses a length-n torsionfree resolution into a single short exact
/// sequence `0 -> H -> T -> M -> 0` with `pd H <= n-1`.
pub fn torsionfree_compress(ctx: &HomologyCtx, m: &ModRef, tres: &ExactSeq) -> Result<Compression> {
    check_t_resolution(ctx, tres)?;
    let interior = tres.interior();
    let target = interior.last().expect("nonempty").clone();
    if target.as_ref() != m.as_ref() {
        return Err(Error::Precondition("resolution does not end at the module".into()));
    }
    let n = interior.len() - 2;
    let tmaps: Vec<ModHom> = tres.maps[1..tres.maps.len() - 1].to_vec();
    let (h_incl, t_to_m, witness) = compress_rec(ctx, m, &tmaps)?;
    let seq = ExactSeq::short(h_incl.clone(), t_to_m.clone())?;
    seq.verify()?;
    let h_module = h_incl.source.clone();
    let t_module = h_incl.target.clone();
    let tf = inf_torsionfree_windowed(ctx, &t_module, ctx.bound, 1)?;
    if !(tf.holds && tf.certified) {
        return Err(Error::Validation("compressed term not certified".into()));
    }
    let pd_h = super::dims::projective_dimension(ctx, &h_module, n.max(1))?;
    if !pd_h.certainly_at_most(n.saturating_sub(1)) {
        return Err(Error::Validation(format!(
            "compressed kernel has pd {} exceeding {}",
            pd_h.value,
            n.saturating_sub(1)
        )));
    }
    verify_witness_chain(&witness, &h_module)?;
    Ok(Compression {
        seq,
        h_module,
        t_module,
        pd_h,
        witness,
    })
}

fn verify_witness_chain(witness: &[ModHom], end: &ModRef) -> Result<()> {
    if witness.is_empty() {
        if end.dim != 0 {
            return Err(Error::Validation("empty witness for a nonzero module".into()));
        }
        return Ok(());
    }
    let last = witness.last().expect("nonempty");
    if last.target.as_ref() != end.as_ref() || !last.is_surjective() {
        return Err(Error::Validation("witness chain does not cover the module".into()));
    }
    for w in witness.windows(2) {
        if w[1].source.as_ref() != w[0].target.as_ref() {
            return Err(Error::Validation("witness chain endpoints mismatch".into()));
        }
        if w[0].image_subspace() != w[1].kernel_subspace() {
            return Err(Error::Validation("witness chain not exact".into()));
        }
    }
    // the head must be injective for the chain to be a resolution
    if let Some(first) = witness.first() {
        if !first.is_injective() {
            return Err(Error::Validation("witness chain head not injective".into()));
        }
    }
    Ok(())
}

/// Embeds a module of torsionfree dimension at most n into a module of
/// projective dimension at most n: `0 -> M -> N -> T -> 0` with T both in the
/// first orthogonal class and infinitely torsionfree.
pub struct FinitePdEmbedding {
    pub seq: ExactSeq,
    pub n_module: ModRef,
    pub t_module: ModRef,
    pub pd_n: DimResult,
}

pub fn embed_into_finite_pd(
    ctx: &HomologyCtx,
    m: &ModRef,
    tres: &ExactSeq,
) -> Result<FinitePdEmbedding> {
    let comp = torsionfree_compress(ctx, m, tres)?;
    let n = tres.interior().len() - 2;
    let h_incl = comp.seq.maps[1].clone(); // H -> T'
    let t_to_m = comp.seq.maps[2].clone(); // T' -> M
    let fc = first_cosyzygy(ctx, &comp.t_module)?;
    let h_into_p = fc.mu.compose(&h_incl)?;
    let kc = kernel_cokernel(&h_into_p)?;
    let n_module = kc.cokernel;
    let n_proj = kc.coker_proj;
    // M -> N induced on the quotients of T' and P
    let m_to_n = ModHom::new(
        m.clone(),
        n_module.clone(),
        descend(&n_proj.matrix.mul(&fc.mu.matrix)?, &t_to_m.matrix)?,
    )?;
    // N -> W induced from P ->> W
    let n_to_w = ModHom::new(
        n_module.clone(),
        fc.w_module.clone(),
        descend(&fc.w_proj.matrix, &n_proj.matrix)?,
    )?;
    let seq = ExactSeq::short(m_to_n, n_to_w)?;
    seq.verify()?;
    let pd_n = super::dims::projective_dimension(ctx, &n_module, n.max(1))?;
    if !pd_n.certainly_at_most(n) {
        return Err(Error::Validation(format!(
            "embedding target has pd {} exceeding {n}",
            pd_n.value
        )));
    }
    // W certificates: in the first orthogonal class and infinitely torsionfree
    let reg = Mod::regular(ctx.algebra.clone(), m.side);
    let e = ext_dims(ctx, &fc.w_module, &reg, 1)?;
    if e[1] != 0 {
        return Err(Error::Validation("cokernel misses the orthogonal class".into()));
    }
    Ok(FinitePdEmbedding {
        seq,
        n_module,
        t_module: fc.w_module,
        pd_n,
    })
}

/// Report of the evaluation-map bookkeeping
/// `0 -> Ext^1(Tr m, A) -> m -> m** -> Ext^2(Tr m, A) -> 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ABReport {
    pub ext1: usize,
    pub ext2: usize,
    pub ev_kernel: usize,
    pub ev_cokernel: usize,
    pub ok: bool,
}

pub fn auslander_bridger_check(ctx: &HomologyCtx, m: &ModRef) -> Result<ABReport> {
    let tr = super::dims::transpose(ctx, m)?;
    if !tr.from_minimal {
        return Err(Error::Unsupported(
            "the evaluation bookkeeping needs a minimal presentation".into(),
        ));
    }
    let op_reg = Mod::regular(ctx.algebra.clone(), m.side.opposite());
    let ext = ext_dims(ctx, &tr.module, &op_reg, 2)?;
    let (ev, _, dstar) = evaluation_hom(m)?;
    let r = ev.rank();
    let report = ABReport {
        ext1: ext[1],
        ext2: ext[2],
        ev_kernel: m.dim - r,
        ev_cokernel: dstar.module.dim - r,
        ok: ext[1] == m.dim - r && ext[2] == dstar.module.dim - r,
    };
    Ok(report)
}

/// The truncated minimal resolution `0 -> Omega^n m -> P_{n-1} -> ... -> P_0
/// -> m -> 0` as a certified exact sequence (a torsionfree resolution when
/// the syzygy is certified).
pub fn truncated_resolution_seq(ctx: &HomologyCtx, m: &ModRef, n: usize) -> Result<ExactSeq> {
    if n == 0 {
        return Err(Error::BadArgument("need n >= 1 for a truncation".into()));
    }
    let minimal = ctx.minimal_supported();
    let entry = ctx.resolution_entry(m, minimal)?;
    let res = {
        let mut r = entry.lock();
        r.extend_to(ctx, n - 1)?;
        (
            r.syzygies[n - 1].1.clone(),
            r.hom_maps[..n - 1].to_vec(),
            r.augmentation.clone(),
        )
    };
    let (syz_incl, homs, aug) = res;
    let mut maps = vec![syz_incl];
    for h in homs.iter().rev() {
        maps.push(h.clone());
    }
    maps.push(aug);
    let seq = ExactSeq::with_zero_caps(maps)?;
    seq.verify()?;
    Ok(seq)
}

impl DimResult {
    /// True when the result proves the dimension is at most `n`.
    pub fn certainly_at_most(&self, n: usize) -> bool {
        match self.value {
            super::DimValue::Finite(v) => self.certified && v <= n,
            _ => false,
        }
    }
}
