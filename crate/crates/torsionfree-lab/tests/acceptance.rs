//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Everything runs at desk scale (algebra dim <= 6, module dim <= 50,
//! bound <= 8) with exact arithmetic throughout.

use torsionfree_lab::algebra::{builtin_algebra, Side};
use torsionfree_lab::field::{FieldSpec, Scalar};
use torsionfree_lab::harness::{
    construction_roundtrips, falsify_claim, sample_suite, ClaimId, ClaimParams, ClaimStatus,
    SizeParams,
};
use torsionfree_lab::homology::{
    auslander_bridger_check, ext_dims, gorenstein_dimension, orthogonal_dimension,
    projective_dimension, self_injective_dimension, star_of_ses, torsionfree_dimension_upper,
    DimValue, HomologyCtx,
};
use torsionfree_lab::io;
use torsionfree_lab::linalg::{kernel_basis, rank, rref, solve_all, Mat};
use torsionfree_lab::module::ops::{hom_space, kernel_cokernel, semisimple_top};
use torsionfree_lab::module::seq::ExactSeq;
use torsionfree_lab::module::{Mod, ModRef};
use torsionfree_lab::rng::SplitMix64;

fn gf5() -> FieldSpec {
    FieldSpec::Prime(5)
}

fn ctx_for(name: &str) -> HomologyCtx {
    HomologyCtx::new(builtin_algebra(name, gf5()).unwrap())
}

fn s1_over_a2(ctx: &HomologyCtx) -> ModRef {
    let a = ctx.algebra.clone();
    let f = a.field;
    Mod::new(
        a,
        Side::Left,
        1,
        vec![Mat::identity(f, 1), Mat::zero(f, 1, 1), Mat::zero(f, 1, 1)],
    )
    .unwrap()
}

fn simple_local(ctx: &HomologyCtx) -> ModRef {
    semisimple_top(&Mod::regular(ctx.algebra.clone(), Side::Left))
        .unwrap()
        .0
}

fn random_mat(field: FieldSpec, rng: &mut SplitMix64) -> Mat {
    let rows = 1 + rng.below(6) as usize;
    let cols = 1 + rng.below(6) as usize;
    let entries: Vec<Vec<Scalar>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| match field {
                    FieldSpec::Prime(p) => Scalar::Fp(rng.below(p)),
                    FieldSpec::Rationals => field.from_i64(rng.signed(4)),
                })
                .collect()
        })
        .collect();
    Mat::from_rows(field, entries).unwrap()
}

/// Criterion 1: exact-arithmetic soundness of the linear kernel on 1,000
/// random small matrices over GF(5) and the rationals.
#[test]
fn acceptance_01_kernel_soundness() {
    for (field, seed) in [(gf5(), 11u64), (FieldSpec::Rationals, 12u64)] {
        let mut rng = SplitMix64::new(seed);
        for _ in 0..500 {
            let m = random_mat(field, &mut rng);
            let r = rref(&m);
            // idempotence, exact
            let again = rref(&r.mat);
            assert_eq!(again.mat, r.mat);
            assert_eq!(again.rank, r.rank);
            // rank-nullity
            let ker = kernel_basis(&m);
            assert_eq!(ker.dim(), m.cols - r.rank);
            // a consistent system solves exactly
            let b: Vec<Scalar> = (0..m.rows)
                .map(|_| match field {
                    FieldSpec::Prime(p) => Scalar::Fp(rng.below(p)),
                    FieldSpec::Rationals => field.from_i64(rng.signed(4)),
                })
                .collect();
            if let Some(sol) = solve_all(&m, &b).unwrap() {
                assert_eq!(m.apply(&sol.particular).unwrap(), b);
                for i in 0..sol.kernel.dim() {
                    let shift: Vec<Scalar> = sol
                        .particular
                        .iter()
                        .zip(sol.kernel.basis.row(i))
                        .map(|(x, k)| field.add(x, &k))
                        .collect();
                    assert_eq!(m.apply(&shift).unwrap(), b);
                }
            } else {
                // inconsistency means the augmented rank grew
                let bcol = Mat::from_fn(field, m.rows, 1, |r0, _| b[r0].clone());
                assert!(rank(&m.hstack(&bcol).unwrap()) > r.rank);
            }
        }
    }
    println!("acceptance 1: PASS - rref idempotence, rank-nullity and solve checks exact on 1000 matrices");
}

/// Criterion 2: the self-injective dimension table of the builtin algebras.
#[test]
fn acceptance_02_self_injective_dimension_table() {
    let table = [
        ("DUAL2", DimValue::Finite(0)),
        ("TRUNCPOLY(3)", DimValue::Finite(0)),
        ("A2", DimValue::Finite(1)),
        ("NAKAYAMA(2,2)", DimValue::Finite(0)),
        ("NG3", DimValue::GreaterThan(6)),
    ];
    for (name, expected) in table {
        let ctx = ctx_for(name);
        for side in [Side::Left, Side::Right] {
            let d = self_injective_dimension(&ctx, side, 6).unwrap();
            assert_eq!(d.value, expected, "{name} {side}");
            assert!(d.certified, "{name} {side}");
        }
    }
    println!("acceptance 2: PASS - self-injective dimensions (0,0) (0,0) (1,1) (0,0) (>6,>6)");
}

/// Criterion 3: on the two certified-self-injective algebras, 200 sampled
/// modules each report Gorenstein, torsionfree and orthogonal dimension 0.
#[test]
fn acceptance_03_theorem_1_4_at_zero() {
    for name in ["DUAL2", "NAKAYAMA(2,2)"] {
        let ctx = ctx_for(name);
        let params = ClaimParams {
            n: Some(0),
            samples: 100, // two suites of 100: left and right
            seed: 3,
            ..ClaimParams::default()
        };
        let rep = falsify_claim(&ctx, ClaimId::Thm1_4, &params).unwrap();
        assert_eq!(rep.status, ClaimStatus::NoCounterexample, "{name}: {:?}", rep.notes);
        assert_eq!(rep.checks_run, 200, "{name}");
    }
    println!("acceptance 3: PASS - 200 samples per self-injective algebra all have G-dim = T-dim = orth-dim = 0");
}

/// Criterion 4: the contrapositive on NG3: for each n <= 4 the premise fails
/// and a sampled module with certified orthogonal dimension > n is exhibited,
/// with overall status consistent (exit 0).
#[test]
fn acceptance_04_theorem_1_4_contrapositive_ng3() {
    let ctx = HomologyCtx::with_bound(builtin_algebra("NG3", gf5()).unwrap(), 5);
    for n in 0..=4usize {
        let params = ClaimParams {
            n: Some(n),
            bound: 5,
            samples: 10,
            seed: 4,
            size: SizeParams {
                max_gens: 2,
                max_rels: 2,
                dim_cap: 10,
            },
            ..ClaimParams::default()
        };
        let rep = falsify_claim(&ctx, ClaimId::Thm1_4, &params).unwrap();
        assert_eq!(rep.status, ClaimStatus::NoCounterexample, "n={n}: {:?}", rep.notes);
        assert!(
            rep.notes.iter().any(|s| s.contains("premise fails")),
            "n={n}: {:?}",
            rep.notes
        );
        assert!(
            !rep.witnesses.is_empty(),
            "n={n}: expected an exhibited module with orthogonal dimension > {n}"
        );
    }
    println!("acceptance 4: PASS - NG3 premise fails for n <= 4 with exhibited high-dimension samples, status consistent");
}

/// Criterion 5: exact small values over A2.
#[test]
fn acceptance_05_exact_values_over_a2() {
    let ctx = ctx_for("A2");
    let s1 = s1_over_a2(&ctx);
    let pd = projective_dimension(&ctx, &s1, 5).unwrap();
    assert_eq!(pd.value, DimValue::Finite(1));
    let orth = orthogonal_dimension(&ctx, &s1, 5).unwrap();
    assert_eq!(orth.value, DimValue::Finite(1));
    assert!(orth.certified);
    let g = gorenstein_dimension(&ctx, &s1, 5).unwrap();
    assert_eq!(g.value, DimValue::Finite(1));
    assert!(g.certified);
    let t = torsionfree_dimension_upper(&ctx, &s1, 5).unwrap();
    assert_eq!(t.exact, Some(1));
    let reg = Mod::regular(ctx.algebra.clone(), Side::Left);
    let ext = ext_dims(&ctx, &s1, &reg, 1).unwrap();
    assert_eq!(ext[1], 1);
    println!("acceptance 5: PASS - over A2: pd S1 = orth = G-dim = T-dim = 1 and dim Ext^1(S1, A) = 1");
}

/// Criterion 6: the evaluation-map bookkeeping passes on 100 samples per
/// example algebra; on the simple over NG3 the degree-2 term has dimension 3.
#[test]
fn acceptance_06_auslander_bridger_checks() {
    for name in ["DUAL2", "TRUNCPOLY(3)", "A2", "NAKAYAMA(2,2)", "NG3"] {
        let ctx = ctx_for(name);
        let suite = sample_suite(
            &ctx,
            Side::Left,
            100,
            6,
            &SizeParams {
                max_gens: 2,
                max_rels: 2,
                dim_cap: 12,
            },
        )
        .unwrap();
        for (label, m) in &suite {
            let r = auslander_bridger_check(&ctx, m).unwrap();
            assert!(r.ok, "{name} {label}: {r:?}");
        }
    }
    let ctx = ctx_for("NG3");
    let s = simple_local(&ctx);
    let r = auslander_bridger_check(&ctx, &s).unwrap();
    assert_eq!(r.ext1, 0);
    assert_eq!(r.ext2, 3);
    println!("acceptance 6: PASS - evaluation bookkeeping holds on 500 samples; NG3 simple has degree-2 term of dimension 3");
}

/// Criterion 7: the cosyzygy embedding round-trips on 50 applicable samples
/// per algebra, and the dualized-sequence lemma holds including the socle
/// sequence over DUAL2 whose middle transpose has dimension 2.
#[test]
fn acceptance_07_embedding_roundtrip_and_horseshoe() {
    for name in ["DUAL2", "A2", "NAKAYAMA(2,2)"] {
        let ctx = ctx_for(name);
        for n in [1usize, 2] {
            let params = ClaimParams {
                n: Some(n),
                samples: 50,
                seed: 7,
                ..ClaimParams::default()
            };
            let rep = falsify_claim(&ctx, ClaimId::Prop2_1, &params).unwrap();
            assert_eq!(rep.status, ClaimStatus::NoCounterexample, "{name} n={n}: {:?}", rep.notes);
            assert!(rep.checks_run >= 50, "{name} n={n}: only {} checks", rep.checks_run);
        }
        let params = ClaimParams {
            samples: 12,
            seed: 7,
            ..ClaimParams::default()
        };
        let rep = falsify_claim(&ctx, ClaimId::Lemma3_1, &params).unwrap();
        assert_eq!(rep.status, ClaimStatus::NoCounterexample, "{name}: {:?}", rep.notes);
    }
    // the socle sequence over DUAL2
    let ctx = ctx_for("DUAL2");
    let reg = Mod::regular(ctx.algebra.clone(), Side::Left);
    let s = simple_local(&ctx);
    let incl = hom_space(&s, &reg).unwrap().remove(0);
    let kc = kernel_cokernel(&incl).unwrap();
    let seq = ExactSeq::short(incl, kc.coker_proj).unwrap();
    let out = star_of_ses(&ctx, &seq).unwrap();
    assert_eq!(out.coker_dim, 0);
    assert_eq!(out.transpose_seq.interior()[2].dim, 2);
    println!("acceptance 7: PASS - embedding round-trips verified; socle-sequence horseshoe gives the dimension-2 middle transpose");
}

/// Criterion 8: compression and finite-pd embeddings certified on all
/// applicable samples over DUAL2 and A2.
#[test]
fn acceptance_08_embedding_certificates() {
    for name in ["DUAL2", "A2"] {
        let ctx = ctx_for(name);
        let params = ClaimParams {
            samples: 40,
            seed: 8,
            ..ClaimParams::default()
        };
        for id in [ClaimId::Prop3_4, ClaimId::Cor3_5] {
            let rep = falsify_claim(&ctx, id, &params).unwrap();
            assert_eq!(rep.status, ClaimStatus::NoCounterexample, "{name} {id}: {:?}", rep.notes);
            assert!(rep.checks_run > 0, "{name} {id}");
        }
        // and the full round-trip battery
        let rep = construction_roundtrips(&ctx, &params).unwrap();
        assert_eq!(rep.status, ClaimStatus::NoCounterexample, "{name}: {:?}", rep.notes);
    }
    println!("acceptance 8: PASS - compression and embedding certificates (exactness, pd bounds, orthogonality) verified");
}

/// Criterion 9: Ext duality against the vector-space dual on 100 pairs per
/// algebra, degrees up to 3, exact equality.
#[test]
fn acceptance_09_ext_duality_oracle() {
    for name in ["DUAL2", "TRUNCPOLY(3)", "A2", "NAKAYAMA(2,2)", "NG3"] {
        let ctx = ctx_for(name);
        let suite = sample_suite(
            &ctx,
            Side::Left,
            10,
            9,
            &SizeParams {
                max_gens: 2,
                max_rels: 2,
                dim_cap: 10,
            },
        )
        .unwrap();
        let mut pairs = 0;
        'outer: for (_, m) in &suite {
            for (_, n) in &suite {
                let fwd = ext_dims(&ctx, m, n, 3).unwrap();
                let dm = Mod::vector_dual(m);
                let dn = Mod::vector_dual(n);
                let bwd = ext_dims(&ctx, &dn, &dm, 3).unwrap();
                assert_eq!(fwd, bwd, "{name}: Ext duality failed");
                pairs += 1;
                if pairs >= 100 {
                    break 'outer;
                }
            }
        }
        assert_eq!(pairs, 100, "{name}");
    }
    println!("acceptance 9: PASS - dim Ext^i(M,N) = dim Ext^i(DN,DM) for i <= 3 on 100 pairs per algebra");
}

/// Criterion 10: Zaks consistency across the builtins and the certified
/// biconditional on A2 at n = 1.
#[test]
fn acceptance_10_zaks_and_cor_4_9() {
    for name in ["K1", "DUAL2", "TRUNCPOLY(3)", "A2", "NAKAYAMA(2,2)", "NG3"] {
        let ctx = ctx_for(name);
        let params = ClaimParams {
            bound: 6,
            samples: 10,
            ..ClaimParams::default()
        };
        let rep = falsify_claim(&ctx, ClaimId::Zaks, &params).unwrap();
        assert_ne!(rep.status, ClaimStatus::Counterexample, "{name}: {:?}", rep.notes);
    }
    let ctx = ctx_for("A2");
    let params = ClaimParams {
        n: Some(1),
        samples: 30,
        ..ClaimParams::default()
    };
    let rep = falsify_claim(&ctx, ClaimId::Cor4_9, &params).unwrap();
    assert_eq!(rep.status, ClaimStatus::NoCounterexample, "{:?}", rep.notes);
    assert_eq!(rep.status.exit_code(), 0);
    println!("acceptance 10: PASS - certified left/right self-injective dimensions agree; COR_4_9 on A2 at n=1 exits 0");
}

/// Criterion 11: identical run configurations give byte-identical reports.
#[test]
fn acceptance_11_determinism() {
    let run = || {
        let ctx = ctx_for("A2");
        let params = ClaimParams {
            n: Some(1),
            samples: 20,
            seed: 11,
            ..ClaimParams::default()
        };
        let rep = falsify_claim(&ctx, ClaimId::Prop4_1, &params).unwrap();
        serde_json::to_string_pretty(&io::claim_report_to_json(&rep, gf5())).unwrap()
    };
    let a = run();
    let b = run();
    assert_eq!(a, b);
    assert!(!a.contains("time"), "no timestamps in the payload");
    println!("acceptance 11: PASS - repeated runs with identical seeds produce byte-identical reports");
}
