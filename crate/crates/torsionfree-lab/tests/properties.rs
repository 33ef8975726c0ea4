//! Property-based invariants over seeded random matrices and modules.

use proptest::prelude::*;
use torsionfree_lab::algebra::{builtin_algebra, Side};
use torsionfree_lab::field::{FieldSpec, Scalar};
use torsionfree_lab::harness::{random_module, sample_suite, SizeParams};
use torsionfree_lab::homology::{
    ext_dims, gorenstein_dimension, inf_torsionfree_windowed, is_n_torsionfree,
    orthogonal_dimension, torsionfree_dimension_upper, HomologyCtx,
};
use torsionfree_lab::linalg::{kernel_basis, rank, rref, solve_all, Mat, Subspace};
use torsionfree_lab::module::ops::{evaluation_hom, hom_dim, hom_space, pushout, star_dual};
use torsionfree_lab::module::{direct_sum, Mod};
use torsionfree_lab::rng::SplitMix64;

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Prime(2)),
        Just(FieldSpec::Prime(5)),
        Just(FieldSpec::Prime(97)),
        Just(FieldSpec::Rationals),
    ]
}

fn seeded_mat(field: FieldSpec, seed: u64, max_dim: u64) -> Mat {
    let mut rng = SplitMix64::new(seed);
    let rows = 1 + rng.below(max_dim) as usize;
    let cols = 1 + rng.below(max_dim) as usize;
    let entries = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| match field {
                    FieldSpec::Prime(p) => Scalar::Fp(rng.below(p)),
                    FieldSpec::Rationals => field.from_i64(rng.signed(3)),
                })
                .collect()
        })
        .collect();
    Mat::from_rows(field, entries).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_idempotent_and_rank_transpose(field in fields(), seed in any::<u64>()) {
        let m = seeded_mat(field, seed, 7);
        let r = rref(&m);
        prop_assert_eq!(rref(&r.mat).mat, r.mat.clone());
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
        prop_assert_eq!(kernel_basis(&m).dim(), m.cols - r.rank);
    }

    #[test]
    fn solutions_satisfy_the_system(field in fields(), seed in any::<u64>()) {
        let m = seeded_mat(field, seed, 6);
        let mut rng = SplitMix64::new(seed ^ 0xb);
        let b: Vec<Scalar> = (0..m.rows).map(|_| match field {
            FieldSpec::Prime(p) => Scalar::Fp(rng.below(p)),
            FieldSpec::Rationals => field.from_i64(rng.signed(3)),
        }).collect();
        if let Some(sol) = solve_all(&m, &b).unwrap() {
            prop_assert_eq!(m.apply(&sol.particular).unwrap(), b);
        }
    }

    #[test]
    fn subspace_modular_law(field in fields(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let ambient = 5usize;
        let mk = |seed| {
            let mut m = seeded_mat(field, seed, 5);
            // force the right ambient dimension by padding/truncating columns
            let rows: Vec<Vec<Scalar>> = (0..m.rows).map(|r| {
                let mut row = m.row(r);
                row.resize(ambient, field.zero());
                row
            }).collect();
            m = Mat::from_rows(field, rows).unwrap();
            Subspace::from_rows(&m)
        };
        let u = mk(s1);
        let v = mk(s2);
        let sum = u.sum(&v).unwrap();
        let int = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + int.dim(), u.dim() + v.dim());
        prop_assert!(sum.contains_subspace(&u));
        prop_assert!(u.contains_subspace(&int));
    }
}

fn builtin_names() -> impl Strategy<Value = &'static str> {
    prop_oneof![
        Just("DUAL2"),
        Just("TRUNCPOLY(3)"),
        Just("A2"),
        Just("NG3"),
        Just("NAKAYAMA(2,2)"),
    ]
}

fn small() -> SizeParams {
    SizeParams {
        max_gens: 2,
        max_rels: 2,
        dim_cap: 10,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sampled_homs_intertwine(name in builtin_names(), seed in any::<u64>()) {
        let a = builtin_algebra(name, FieldSpec::Prime(5)).unwrap();
        let ctx = HomologyCtx::new(a.clone());
        let (m, _) = random_module(&ctx, Side::Left, seed, &small()).unwrap();
        let (n, _) = random_module(&ctx, Side::Left, seed ^ 1, &small()).unwrap();
        for h in hom_space(&m, &n).unwrap() {
            prop_assert!(h.verify().is_ok());
        }
        // the regular module represents the identity functor
        let reg = Mod::regular(a.clone(), Side::Left);
        prop_assert_eq!(hom_dim(&reg, &m).unwrap(), m.dim);
    }

    #[test]
    fn hom_duality_oracle(name in builtin_names(), seed in any::<u64>()) {
        let a = builtin_algebra(name, FieldSpec::Prime(5)).unwrap();
        let ctx = HomologyCtx::new(a.clone());
        let (m, _) = random_module(&ctx, Side::Left, seed, &small()).unwrap();
        let (n, _) = random_module(&ctx, Side::Left, seed ^ 2, &small()).unwrap();
        let lhs = hom_dim(&m, &n).unwrap();
        let rhs = hom_dim(&Mod::vector_dual(&n), &Mod::vector_dual(&m)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pushout_dimension_law(name in builtin_names(), seed in any::<u64>()) {
        let a = builtin_algebra(name, FieldSpec::Prime(5)).unwrap();
        let ctx = HomologyCtx::new(a.clone());
        let (x, _) = random_module(&ctx, Side::Left, seed, &small()).unwrap();
        let (z, _) = random_module(&ctx, Side::Left, seed ^ 3, &small()).unwrap();
        // an injective f: embed x into x + z, arbitrary g: x -> z from the hom basis
        let ds = direct_sum(&[x.clone(), z.clone()]).unwrap();
        let f = ds.injections[0].clone();
        let homs = hom_space(&x, &z).unwrap();
        let g = match homs.into_iter().next() {
            Some(g) => g,
            None => torsionfree_lab::module::ModHom::zero(x.clone(), z.clone()),
        };
        let (p, _, _) = pushout(&f, &g).unwrap();
        prop_assert_eq!(p.dim, ds.module.dim + z.dim - x.dim);
    }

    #[test]
    fn star_of_free_is_free_of_same_rank(name in builtin_names(), rank_r in 1usize..3) {
        let a = builtin_algebra(name, FieldSpec::Prime(5)).unwrap();
        let fr = Mod::free(a.clone(), rank_r, Side::Left);
        let star = star_dual(&fr).unwrap();
        prop_assert_eq!(star.module.dim, rank_r * a.dim);
        prop_assert_eq!(star.module.side, Side::Right);
        let (ev, _, _) = evaluation_hom(&fr).unwrap();
        prop_assert!(ev.is_bijective());
    }

    #[test]
    fn direct_sum_torsionfreeness(name in builtin_names(), seed in any::<u64>(), n in 1usize..3) {
        let a = builtin_algebra(name, FieldSpec::Prime(5)).unwrap();
        let ctx = HomologyCtx::new(a.clone());
        let (x, _) = random_module(&ctx, Side::Left, seed, &small()).unwrap();
        let (y, _) = random_module(&ctx, Side::Left, seed ^ 4, &small()).unwrap();
        let sum = direct_sum(&[x.clone(), y.clone()]).unwrap().module;
        let lhs = is_n_torsionfree(&ctx, &sum, n).unwrap();
        let rhs = is_n_torsionfree(&ctx, &x, n).unwrap() && is_n_torsionfree(&ctx, &y, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ext_independent_of_resolution(name in builtin_names(), seed in any::<u64>()) {
        let a = builtin_algebra(name, FieldSpec::Prime(5)).unwrap();
        let ctx = HomologyCtx::new(a.clone());
        let (m, _) = random_module(&ctx, Side::Left, seed, &small()).unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        let minimal = torsionfree_lab::homology::ext::ext_dims_with(&ctx, &m, &reg, 2, true).unwrap();
        let free = torsionfree_lab::homology::ext::ext_dims_with(&ctx, &m, &reg, 2, false).unwrap();
        prop_assert_eq!(&minimal[1..], &free[1..]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dimension_ordering_when_certified(seed in any::<u64>()) {
        // on an algebra with certified finite ids, orth <= gdim and the
        // torsionfree upper bound <= gdim
        for name in ["DUAL2", "A2", "NAKAYAMA(2,2)"] {
            let a = builtin_algebra(name, FieldSpec::Prime(5)).unwrap();
            let ctx = HomologyCtx::new(a.clone());
            let (m, _) = random_module(&ctx, Side::Left, seed, &small()).unwrap();
            let g = gorenstein_dimension(&ctx, &m, 6).unwrap();
            let o = orthogonal_dimension(&ctx, &m, 6).unwrap();
            let t = torsionfree_dimension_upper(&ctx, &m, 6).unwrap();
            let (Some(gv), Some(ov)) = (g.certified_finite(), o.certified_finite()) else {
                return Err(TestCaseError::fail("expected certified dimensions"));
            };
            prop_assert!(ov <= gv, "{}: orth {} > gdim {}", name, ov, gv);
            let Some(tu) = t.upper else {
                return Err(TestCaseError::fail("expected a torsionfree upper bound"));
            };
            prop_assert!(tu <= gv, "{}: tdim upper {} > gdim {}", name, tu, gv);
        }
    }

    #[test]
    fn self_injective_algebras_flatten_all_dimensions(seed in any::<u64>()) {
        let a = builtin_algebra("TRUNCPOLY(3)", FieldSpec::Prime(5)).unwrap();
        let ctx = HomologyCtx::new(a.clone());
        let (m, _) = random_module(&ctx, Side::Left, seed, &small()).unwrap();
        prop_assert_eq!(gorenstein_dimension(&ctx, &m, 4).unwrap().certified_finite(), Some(0));
        prop_assert_eq!(orthogonal_dimension(&ctx, &m, 4).unwrap().certified_finite(), Some(0));
        prop_assert_eq!(torsionfree_dimension_upper(&ctx, &m, 4).unwrap().exact, Some(0));
        let tf = inf_torsionfree_windowed(&ctx, &m, 4, 1).unwrap();
        prop_assert!(tf.holds && tf.certified);
    }

    #[test]
    fn suites_validate_and_reproduce(name in builtin_names(), seed in any::<u64>()) {
        let a = builtin_algebra(name, FieldSpec::Prime(5)).unwrap();
        let ctx = HomologyCtx::new(a.clone());
        let s1 = sample_suite(&ctx, Side::Right, 8, seed, &small()).unwrap();
        let s2 = sample_suite(&ctx, Side::Right, 8, seed, &small()).unwrap();
        for ((l1, m1), (l2, m2)) in s1.iter().zip(&s2) {
            prop_assert_eq!(l1, l2);
            prop_assert_eq!(m1.encode(), m2.encode());
            prop_assert!(m1.validate().is_ok());
        }
    }

    #[test]
    fn ext_duality_on_random_pairs(name in builtin_names(), seed in any::<u64>()) {
        let a = builtin_algebra(name, FieldSpec::Prime(5)).unwrap();
        let ctx = HomologyCtx::new(a.clone());
        let (m, _) = random_module(&ctx, Side::Left, seed, &small()).unwrap();
        let (n, _) = random_module(&ctx, Side::Left, seed ^ 9, &small()).unwrap();
        let fwd = ext_dims(&ctx, &m, &n, 2).unwrap();
        let bwd = ext_dims(&ctx, &Mod::vector_dual(&n), &Mod::vector_dual(&m), 2).unwrap();
        prop_assert_eq!(fwd, bwd);
    }
}

/// Rational-field spot checks mirroring the prime-field properties.
#[test]
fn rational_field_module_sampling() {
    let a = builtin_algebra("DUAL2", FieldSpec::Rationals).unwrap();
    let ctx = HomologyCtx::new(a.clone());
    for seed in 0..8u64 {
        let (m, _) = random_module(&ctx, Side::Left, seed, &small()).unwrap();
        assert!(m.validate().is_ok());
        assert_eq!(
            gorenstein_dimension(&ctx, &m, 4).unwrap().certified_finite(),
            Some(0)
        );
    }
}
