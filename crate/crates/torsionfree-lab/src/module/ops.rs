//! Kernels, cokernels, sub/quotient modules, pushouts, hom spaces, duals and
//! evaluation maps.

use super::{direct_sum, Mod, ModHom, ModRef};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_basis, solve_matrix, Mat, Subspace};

/// Submodule spanned by an action-invariant subspace, with its inclusion.
pub fn submodule(m: &ModRef, space: &Subspace) -> Result<(ModRef, ModHom)> {
    if space.ambient != m.dim {
        return Err(Error::DimensionMismatch("submodule ambient".into()));
    }
    let incl = space.basis.transpose(); // columns = basis vectors
    let mut action = Vec::with_capacity(m.action.len());
    for a in &m.action {
        let moved = a.mul(&incl)?;
        let restricted = solve_matrix(&incl, &moved)?
            .ok_or_else(|| Error::Validation("subspace is not action-invariant".into()))?;
        action.push(restricted);
    }
    let sub = Mod::new_unchecked(m.algebra.clone(), m.side, space.dim(), action);
    let hom = ModHom::new_unchecked(sub.clone(), m.clone(), incl);
    Ok((sub, hom))
}

/// Quotient by an action-invariant subspace, with its projection.
///
/// The quotient basis is indexed by the non-pivot coordinates of the
/// echelonized subspace, so the construction is canonical.
pub fn quotient(m: &ModRef, space: &Subspace) -> Result<(ModRef, ModHom)> {
    if space.ambient != m.dim {
        return Err(Error::DimensionMismatch("quotient ambient".into()));
    }
    let f = m.algebra.field;
    let free = space.free_coordinates();
    let qdim = free.len();
    // projection row r = coordinates of reduce(e_c) at free position r
    let proj = Mat::from_fn(f, qdim, m.dim, |r, c| {
        let mut e = vec![f.zero(); m.dim];
        e[c] = f.one();
        space.reduce(&e)[free[r]].clone()
    });
    // section: unit vectors at free coordinates
    let section = Mat::from_fn(f, m.dim, qdim, |r, c| {
        if r == free[c] {
            f.one()
        } else {
            f.zero()
        }
    });
    let mut action = Vec::with_capacity(m.action.len());
    for a in &m.action {
        // invariance check: a * space stays in space
        for row in 0..space.dim() {
            let moved = a.apply(&space.basis.row(row))?;
            if !space.contains(&moved) {
                return Err(Error::Validation("subspace is not action-invariant".into()));
            }
        }
        action.push(proj.mul(a)?.mul(&section)?);
    }
    let q = Mod::new_unchecked(m.algebra.clone(), m.side, qdim, action);
    let hom = ModHom::new_unchecked(m.clone(), q.clone(), proj);
    Ok((q, hom))
}

/// Kernel, image and cokernel of a hom, with their structural maps.
pub struct KerCoker {
    pub kernel: ModRef,
    pub kernel_incl: ModHom,
    pub image: ModRef,
    pub image_incl: ModHom,
    pub cokernel: ModRef,
    pub coker_proj: ModHom,
}

pub fn kernel_cokernel(h: &ModHom) -> Result<KerCoker> {
    let ker_space = kernel_basis(&h.matrix);
    let (kernel, kernel_incl) = submodule(&h.source, &ker_space)?;
    let im_space = Subspace::from_cols(&h.matrix);
    let (image, image_incl) = submodule(&h.target, &im_space)?;
    let (cokernel, coker_proj) = quotient(&h.target, &im_space)?;
    Ok(KerCoker {
        kernel,
        kernel_incl,
        image,
        image_incl,
        cokernel,
        coker_proj,
    })
}

/// Pushout of `f: X -> Y` and `g: X -> Z`: the quotient of `Y + Z` by the
/// antidiagonal image of `X`, with the two structural legs.
pub fn pushout(f: &ModHom, g: &ModHom) -> Result<(ModRef, ModHom, ModHom)> {
    if f.source.as_ref() != g.source.as_ref() {
        return Err(Error::Validation("pushout legs must share their source".into()));
    }
    let sum = direct_sum(&[f.target.clone(), g.target.clone()])?;
    let anti = f.matrix.vstack(&g.matrix.neg())?;
    let graph = ModHom::new_unchecked(f.source.clone(), sum.module.clone(), anti);
    let im = graph.image_subspace();
    let (p, proj) = quotient(&sum.module, &im)?;
    let leg_y = proj.compose(&sum.injections[0])?;
    let leg_z = proj.compose(&sum.injections[1])?;
    Ok((p, leg_y, leg_z))
}

/// Echelonized basis of the space of homomorphisms `m -> n`.
pub fn hom_space(m: &ModRef, n: &ModRef) -> Result<Vec<ModHom>> {
    if m.side != n.side {
        return Err(Error::Validation("hom between different sides".into()));
    }
    if m.algebra.encode() != n.algebra.encode() {
        return Err(Error::Validation("hom between different algebras".into()));
    }
    let f = m.algebra.field;
    let d = m.algebra.dim;
    let (ns, nt) = (m.dim, n.dim);
    let unknowns = ns * nt;
    if unknowns == 0 {
        return Ok(vec![]);
    }
    // equations: T rho_s(e_i) - rho_t(e_i) T = 0, T row-major (r, c) -> r*ns + c
    let mut rows = Vec::with_capacity(d * ns * nt);
    for i in 0..d {
        let rs = &m.action[i];
        let rt = &n.action[i];
        for r in 0..nt {
            for c in 0..ns {
                let mut row = vec![f.zero(); unknowns];
                // (T rs)[r][c] = sum_k T[r][k] rs[k][c]
                for k in 0..ns {
                    let v = rs.at(k, c);
                    if !v.is_zero() {
                        row[r * ns + k] = f.add(&row[r * ns + k], v);
                    }
                }
                // -(rt T)[r][c] = -sum_k rt[r][k] T[k][c]
                for k in 0..nt {
                    let v = rt.at(r, k);
                    if !v.is_zero() {
                        row[k * ns + c] = f.sub(&row[k * ns + c], v);
                    }
                }
                if row.iter().any(|s| !s.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = if rows.is_empty() {
        Mat::zero(f, 0, unknowns)
    } else {
        Mat::from_rows(f, rows)?
    };
    let ker = kernel_basis(&sys);
    let mut basis = Vec::with_capacity(ker.dim());
    for b in 0..ker.dim() {
        let v = ker.basis.row(b);
        let matrix = Mat::from_fn(f, nt, ns, |r, c| v[r * ns + c].clone());
        basis.push(ModHom::new_unchecked(m.clone(), n.clone(), matrix));
    }
    Ok(basis)
}

/// dim Hom(m, n) without materializing the basis.
pub fn hom_dim(m: &ModRef, n: &ModRef) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// The star dual `Hom(m, A)` as a module on the opposite side, together with
/// the hom basis realizing its coordinates.
pub struct StarDual {
    pub module: ModRef,
    /// basis[i] is the matrix of the i-th basis homomorphism m -> A.
    pub basis: Vec<Mat>,
}

pub fn star_dual(m: &ModRef) -> Result<StarDual> {
    let alg = m.algebra.clone();
    let f = alg.field;
    let reg = Mod::regular(alg.clone(), m.side);
    let homs = hom_space(m, &reg)?;
    let k = homs.len();
    let basis: Vec<Mat> = homs.into_iter().map(|h| h.matrix).collect();
    // coordinates matrix: columns are vectorized basis homs
    let coord_cols = Mat::from_fn(f, alg.dim * m.dim, k, |r, c| {
        let (row, col) = (r / m.dim, r % m.dim);
        basis[c].at(row, col).clone()
    });
    // action of e_i on phi: post-compose with multiplication on the other side
    let op_reg = Mod::regular(alg.clone(), m.side.opposite());
    let mut action = Vec::with_capacity(alg.dim);
    for i in 0..alg.dim {
        let post = &op_reg.action[i];
        let mut img = Mat::zero(f, alg.dim * m.dim, k);
        for (c, phi) in basis.iter().enumerate() {
            let moved = post.mul(phi)?;
            for row in 0..alg.dim {
                for col in 0..m.dim {
                    img.set(row * m.dim + col, c, moved.at(row, col).clone());
                }
            }
        }
        let coords = solve_matrix(&coord_cols, &img)?
            .ok_or_else(|| Error::Validation("dual action leaves the hom space".into()))?;
        action.push(coords);
    }
    let module = Mod::new_unchecked(alg, m.side.opposite(), k, action);
    Ok(StarDual { module, basis })
}

/// The evaluation homomorphism `m -> m**`, `ev(x)(phi) = phi(x)`.
///
/// Injectivity is torsionlessness, bijectivity is reflexivity.
pub fn evaluation_hom(m: &ModRef) -> Result<(ModHom, StarDual, StarDual)> {
    let alg = m.algebra.clone();
    let f = alg.field;
    let star = star_dual(m)?;
    let dstar = star_dual(&star.module)?;
    let k = star.module.dim;
    let l = dstar.module.dim;
    // Phi basis vectorized (each Phi_j is a (dim A) x k matrix)
    let coord_cols = Mat::from_fn(f, alg.dim * k, l, |r, c| {
        let (row, col) = (r / k, r % k);
        dstar.basis[c].at(row, col).clone()
    });
    let mut ev = Mat::zero(f, l, m.dim);
    if l > 0 {
        let mut rhs = Mat::zero(f, alg.dim * k, m.dim);
        for x in 0..m.dim {
            // E_x: column i = phi_i applied to basis vector x
            for (i, phi) in star.basis.iter().enumerate() {
                for row in 0..alg.dim {
                    rhs.set(row * k + i, x, phi.at(row, x).clone());
                }
            }
        }
        let coords = solve_matrix(&coord_cols, &rhs)?
            .ok_or_else(|| Error::Validation("evaluation image leaves the double dual".into()))?;
        ev = coords;
    }
    let hom = ModHom::new(m.clone(), dstar.module.clone(), ev)?;
    Ok((hom, star, dstar))
}

/// Quotient of `m` by `rad(A) m` together with the projection; the radical
/// acts by zero on the result.
pub fn semisimple_top(m: &ModRef) -> Result<(ModRef, ModHom)> {
    let rad = m
        .algebra
        .radical
        .clone()
        .ok_or_else(|| Error::Unsupported("semisimple top needs the radical".into()))?;
    let f = m.algebra.field;
    let mut rows = Vec::new();
    for r in 0..rad.dim() {
        let act = m.action_of(&rad.basis.row(r));
        for c in 0..m.dim {
            let col: Vec<Scalar> = (0..m.dim).map(|i| act.at(i, c).clone()).collect();
            if col.iter().any(|s| !s.is_zero()) {
                rows.push(col);
            }
        }
    }
    let radm = if rows.is_empty() {
        Subspace::zero(f, m.dim)
    } else {
        Subspace::from_rows(&Mat::from_rows(f, rows)?)
    };
    quotient(m, &radm)
}

/// `rad(A) m` as a subspace of `m` (the radical of `m` as a module when the
/// top is semisimple).
pub fn radical_subspace(m: &ModRef) -> Result<Subspace> {
    let rad = m
        .algebra
        .radical
        .clone()
        .ok_or_else(|| Error::Unsupported("radical subspace needs the algebra radical".into()))?;
    let f = m.algebra.field;
    let mut rows = Vec::new();
    for r in 0..rad.dim() {
        let act = m.action_of(&rad.basis.row(r));
        for c in 0..m.dim {
            let col: Vec<Scalar> = (0..m.dim).map(|i| act.at(i, c).clone()).collect();
            rows.push(col);
        }
    }
    Ok(if rows.is_empty() {
        Subspace::zero(f, m.dim)
    } else {
        Subspace::from_rows(&Mat::from_rows(f, rows)?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{builtin_algebra, Side};
    use crate::field::FieldSpec;
    use crate::module::test_support::point_module;

    fn gf5() -> FieldSpec {
        FieldSpec::Prime(5)
    }

    #[test]
    fn hom_from_regular_has_module_dimension() {
        for name in ["DUAL2", "A2", "NG3"] {
            let a = builtin_algebra(name, gf5()).unwrap();
            let reg = Mod::regular(a.clone(), Side::Left);
            assert_eq!(hom_dim(&reg, &reg).unwrap(), a.dim, "{name}");
        }
    }

    #[test]
    fn hom_simple_into_regular_dual2() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let s = point_module(&a, Side::Left);
        let reg = Mod::regular(a.clone(), Side::Left);
        // socle embedding only
        assert_eq!(hom_dim(&s, &reg).unwrap(), 1);
    }

    #[test]
    fn hom_s1_into_regular_a2_vanishes() {
        let a = builtin_algebra("A2", gf5()).unwrap();
        let f = gf5();
        // S1: concentrated at vertex 0
        let s1 = Mod::new(
            a.clone(),
            Side::Left,
            1,
            vec![
                Mat::identity(f, 1),
                Mat::zero(f, 1, 1),
                Mat::zero(f, 1, 1),
            ],
        )
        .unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        assert_eq!(hom_dim(&s1, &reg).unwrap(), 0);
    }

    #[test]
    fn kernel_cokernel_of_multiplication_by_a() {
        // x -> a*x on DUAL2: kernel and cokernel are both the simple
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        let mult_a = ModHom::new(reg.clone(), reg.clone(), a.left_mult(&a.basis_vector(1))).unwrap();
        let kc = kernel_cokernel(&mult_a).unwrap();
        assert_eq!(kc.kernel.dim, 1);
        assert_eq!(kc.image.dim, 1);
        assert_eq!(kc.cokernel.dim, 1);
        // radical acts by zero on both
        assert!(kc.kernel.action[1].is_zero());
        assert!(kc.cokernel.action[1].is_zero());
    }

    #[test]
    fn kernel_cokernel_of_zero_and_identity() {
        let a = builtin_algebra("A2", gf5()).unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        let z = ModHom::zero(reg.clone(), reg.clone());
        let kc = kernel_cokernel(&z).unwrap();
        assert_eq!(kc.kernel.dim, reg.dim);
        assert_eq!(kc.cokernel.dim, reg.dim);
        let id = ModHom::identity(&reg);
        let kc = kernel_cokernel(&id).unwrap();
        assert_eq!(kc.kernel.dim, 0);
        assert_eq!(kc.cokernel.dim, 0);
    }

    #[test]
    fn pushout_dimension_law() {
        // X=S, Y=A (socle inclusion), Z=S (identity) over DUAL2: dim P = 2
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        let s = point_module(&a, Side::Left);
        let socle = hom_space(&s, &reg).unwrap().remove(0);
        let idm = ModHom::identity(&s);
        let (p, leg_y, leg_z) = pushout(&socle, &idm).unwrap();
        assert_eq!(p.dim, 2);
        leg_y.verify().unwrap();
        leg_z.verify().unwrap();
        // pushout along the identity gives the other target back
        let (p2, _, _) = pushout(&idm, &socle).unwrap();
        assert_eq!(p2.dim, reg.dim);
    }

    #[test]
    fn star_of_regular_is_opposite_regular() {
        let a = builtin_algebra("A2", gf5()).unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        let star = star_dual(&reg).unwrap();
        assert_eq!(star.module.dim, a.dim);
        assert_eq!(star.module.side, Side::Right);
        star.module.validate().unwrap();
    }

    #[test]
    fn star_of_simples() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let s = point_module(&a, Side::Left);
        assert_eq!(star_dual(&s).unwrap().module.dim, 1);

        let a2 = builtin_algebra("A2", gf5()).unwrap();
        let f = gf5();
        let s1 = Mod::new(
            a2.clone(),
            Side::Left,
            1,
            vec![Mat::identity(f, 1), Mat::zero(f, 1, 1), Mat::zero(f, 1, 1)],
        )
        .unwrap();
        assert_eq!(star_dual(&s1).unwrap().module.dim, 0);
    }

    #[test]
    fn evaluation_free_is_bijective() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let fr = Mod::free(a.clone(), 2, Side::Left);
        let (ev, _, _) = evaluation_hom(&fr).unwrap();
        assert!(ev.is_bijective());
    }

    #[test]
    fn evaluation_on_ng3_simple() {
        // injective but not surjective: dim S** = 4
        let a = builtin_algebra("NG3", gf5()).unwrap();
        let s = point_module(&a, Side::Left);
        let (ev, star, dstar) = evaluation_hom(&s).unwrap();
        assert_eq!(star.module.dim, 2);
        assert_eq!(dstar.module.dim, 4);
        assert!(ev.is_injective());
        assert!(!ev.is_surjective());
    }

    #[test]
    fn evaluation_zero_for_s1_over_a2() {
        let a = builtin_algebra("A2", gf5()).unwrap();
        let f = gf5();
        let s1 = Mod::new(
            a.clone(),
            Side::Left,
            1,
            vec![Mat::identity(f, 1), Mat::zero(f, 1, 1), Mat::zero(f, 1, 1)],
        )
        .unwrap();
        let (ev, _, dstar) = evaluation_hom(&s1).unwrap();
        assert_eq!(dstar.module.dim, 0);
        assert!(ev.is_zero_map());
        assert!(!ev.is_injective());
    }

    #[test]
    fn top_of_regular_modules() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        let (top, proj) = semisimple_top(&reg).unwrap();
        assert_eq!(top.dim, 1);
        assert!(proj.is_surjective());
        // radical acts as zero on the top
        assert!(top.action[1].is_zero());

        let ng3 = builtin_algebra("NG3", gf5()).unwrap();
        let reg = Mod::regular(ng3.clone(), Side::Left);
        let (top, _) = semisimple_top(&reg).unwrap();
        assert_eq!(top.dim, 1);

        // top of a module with zero radical action is the identity quotient
        let s = point_module(&a, Side::Left);
        let (top, proj) = semisimple_top(&s).unwrap();
        assert_eq!(top.dim, s.dim);
        assert!(proj.matrix.is_identity());
    }

    #[test]
    fn duality_hom_dimension_oracle() {
        // dim Hom_A(M, N) = dim Hom_{A^op}(DN, DM)
        let a = builtin_algebra("NG3", gf5()).unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        let s = point_module(&a, Side::Left);
        for (m, n) in [(&reg, &s), (&s, &reg), (&reg, &reg), (&s, &s)] {
            let lhs = hom_dim(m, n).unwrap();
            let rhs = hom_dim(&Mod::vector_dual(n), &Mod::vector_dual(m)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
