//! Whole-catalog harness runs: every claim executes on representative
//! algebras with a sane status, and counterexample witnesses survive a
//! serialization round trip.

use torsionfree_lab::algebra::{builtin_algebra, Side};
use torsionfree_lab::field::FieldSpec;
use torsionfree_lab::harness::{
    construction_roundtrips, falsify_claim, reverify_witness, ClaimId, ClaimParams, ClaimStatus,
    SizeParams, Witness, ALL_CLAIMS,
};
use torsionfree_lab::homology::HomologyCtx;
use torsionfree_lab::io;
use torsionfree_lab::module::ops::semisimple_top;
use torsionfree_lab::module::Mod;

fn gf5() -> FieldSpec {
    FieldSpec::Prime(5)
}

fn params(n: Option<usize>, k: Option<usize>) -> ClaimParams {
    ClaimParams {
        n,
        k,
        bound: 5,
        samples: 10,
        seed: 17,
        size: SizeParams {
            max_gens: 2,
            max_rels: 2,
            dim_cap: 12,
        },
    }
}

fn default_args(id: ClaimId) -> ClaimParams {
    match id {
        ClaimId::Thm1_4 => params(Some(1), None),
        ClaimId::Prop2_1 => params(Some(1), None),
        ClaimId::Lemma2_3 => params(Some(2), None),
        ClaimId::Thm3_6 | ClaimId::Prop3_10 | ClaimId::Q5_2 => params(Some(1), None),
        ClaimId::Prop4_1 | ClaimId::Lemma4_5 | ClaimId::Cor4_8 | ClaimId::Cor4_9 => {
            params(Some(1), None)
        }
        ClaimId::Prop4_4 => params(Some(1), Some(1)),
        ClaimId::Thm4_7 => params(Some(1), Some(1)),
        _ => params(None, None),
    }
}

/// On algebras with certified finite self-injective dimension, no claim in
/// the catalog may produce a counterexample: the underlying statements are
/// theorems, so any counterexample is an engine bug.
#[test]
fn no_claim_falsifies_on_certified_algebras() {
    for name in ["DUAL2", "A2", "NAKAYAMA(2,2)"] {
        let ctx = HomologyCtx::with_bound(builtin_algebra(name, gf5()).unwrap(), 5);
        for &id in ALL_CLAIMS {
            let rep = falsify_claim(&ctx, id, &default_args(id)).unwrap();
            assert_ne!(
                rep.status,
                ClaimStatus::Counterexample,
                "{name} {id}: {:?} {:?}",
                rep.notes,
                rep.witnesses.iter().map(|w| &w.label).collect::<Vec<_>>()
            );
        }
    }
}

/// The catalog also runs start to finish on an uncertified algebra. Statuses
/// degrade to PREMISE_UNDECIDED rather than erroring out — except for the
/// torsionless-property check, which legitimately finds a witness (see the
/// dedicated test below).
#[test]
fn catalog_runs_on_uncertified_algebra() {
    let ctx = HomologyCtx::with_bound(builtin_algebra("NG3", gf5()).unwrap(), 4);
    let mut undecided = 0;
    for &id in ALL_CLAIMS {
        let mut p = default_args(id);
        p.bound = 4;
        p.samples = 6;
        p.size = SizeParams {
            max_gens: 1,
            max_rels: 2,
            dim_cap: 8,
        };
        let rep = falsify_claim(&ctx, id, &p).unwrap();
        if id == ClaimId::Prop4_1 {
            continue; // covered below: the property genuinely fails here
        }
        assert_ne!(
            rep.status,
            ClaimStatus::Counterexample,
            "NG3 {id}: {:?}",
            rep.notes
        );
        if rep.status == ClaimStatus::PremiseUndecided {
            undecided += 1;
        }
    }
    assert!(undecided >= 3, "expected several undecided premises on NG3");
}

/// Over NG3 the first orthogonal class really does contain non-torsionless
/// modules (the transpose of the opposite simple is one), so the
/// torsionless-property check must exit with a witness that re-verifies
/// after a serialization round trip.
#[test]
fn torsionless_property_fails_on_ng3() {
    let algebra = builtin_algebra("NG3", gf5()).unwrap();
    let ctx = HomologyCtx::with_bound(algebra.clone(), 4);
    let rep = falsify_claim(&ctx, ClaimId::Prop4_1, &params(Some(1), None)).unwrap();
    assert_eq!(rep.status, ClaimStatus::Counterexample, "{:?}", rep.notes);
    assert_eq!(rep.status.exit_code(), 1);
    let w = rep
        .witnesses
        .iter()
        .find(|w| w.check == "orth_member_not_torsionless")
        .expect("a torsionless-property witness");
    // mandatory re-verification from the serialized form
    let back = io::witness_from_json(&io::witness_to_json(w), &algebra).unwrap();
    assert!(reverify_witness(&ctx, &back).unwrap());
}

#[test]
fn roundtrips_pass_on_every_builtin() {
    for name in ["K1", "DUAL2", "TRUNCPOLY(3)", "A2", "NAKAYAMA(2,2)"] {
        let ctx = HomologyCtx::with_bound(builtin_algebra(name, gf5()).unwrap(), 5);
        let rep = construction_roundtrips(&ctx, &params(None, None)).unwrap();
        assert_eq!(
            rep.status,
            ClaimStatus::NoCounterexample,
            "{name}: {:?}",
            rep.notes
        );
        assert!(rep.checks_run > 0, "{name}");
    }
}

/// A genuine witness (built by hand, not by a failing claim) re-verifies
/// after passing through its JSON serialization; a non-violating one does
/// not.
#[test]
fn witness_reverification_round_trip() {
    let algebra = builtin_algebra("NG3", gf5()).unwrap();
    let ctx = HomologyCtx::with_bound(algebra.clone(), 4);
    let s = semisimple_top(&Mod::regular(algebra.clone(), Side::Left))
        .unwrap()
        .0;
    // the simple over NG3 really does have orthogonal dimension > 2
    let genuine = Witness {
        check: "orth_dim_exceeds".into(),
        label: "simple with persistent Ext".into(),
        modules: vec![("module".into(), s.clone())],
        params: vec![("n".into(), 2)],
    };
    let j = io::witness_to_json(&genuine);
    let back = io::witness_from_json(&j, &algebra).unwrap();
    assert!(reverify_witness(&ctx, &back).unwrap());

    // a free module does not witness anything
    let bogus = Witness {
        check: "orth_dim_exceeds".into(),
        label: "free module".into(),
        modules: vec![("module".into(), Mod::free(algebra.clone(), 1, Side::Left))],
        params: vec![("n".into(), 2)],
    };
    let j = io::witness_to_json(&bogus);
    let back = io::witness_from_json(&j, &algebra).unwrap();
    assert!(!reverify_witness(&ctx, &back).unwrap());

    // torsionlessness witnesses re-verify the same way
    let tdim_missing = Witness {
        check: "tdim_upper_missing".into(),
        label: "no torsionfree resolution".into(),
        modules: vec![("module".into(), s)],
        params: vec![("n".into(), 2)],
    };
    let back = io::witness_from_json(&io::witness_to_json(&tdim_missing), &algebra).unwrap();
    assert!(reverify_witness(&ctx, &back).unwrap());
}

/// Reports serialize deterministically together with their parameters.
#[test]
fn report_serialization_is_stable() {
    let ctx = HomologyCtx::with_bound(builtin_algebra("NAKAYAMA(2,2)", gf5()).unwrap(), 5);
    let p = params(Some(0), None);
    let r1 = falsify_claim(&ctx, ClaimId::Thm1_4, &p).unwrap();
    let r2 = falsify_claim(&ctx, ClaimId::Thm1_4, &p).unwrap();
    let j1 = serde_json::to_string(&io::claim_report_to_json(&r1, gf5())).unwrap();
    let j2 = serde_json::to_string(&io::claim_report_to_json(&r2, gf5())).unwrap();
    assert_eq!(j1, j2);
}

/// Claims that need parameters reject calls without them.
#[test]
fn missing_parameters_rejected() {
    let ctx = HomologyCtx::new(builtin_algebra("DUAL2", gf5()).unwrap());
    assert!(falsify_claim(&ctx, ClaimId::Thm1_4, &params(None, None)).is_err());
    assert!(falsify_claim(&ctx, ClaimId::Thm4_7, &params(Some(1), None)).is_err());
    assert!(falsify_claim(&ctx, ClaimId::Prop2_1, &params(Some(0), None)).is_err());
}

/// The open questions report sensibly on certified algebras.
#[test]
fn question_experiments() {
    let ctx = HomologyCtx::with_bound(builtin_algebra("DUAL2", gf5()).unwrap(), 5);
    let rep = falsify_claim(&ctx, ClaimId::Q5_1, &params(None, None)).unwrap();
    assert_eq!(rep.status, ClaimStatus::NoCounterexample, "{:?}", rep.notes);

    let ctx = HomologyCtx::with_bound(builtin_algebra("A2", gf5()).unwrap(), 5);
    let rep = falsify_claim(&ctx, ClaimId::Claim5_2N1, &params(None, None)).unwrap();
    assert_eq!(rep.status, ClaimStatus::NoCounterexample, "{:?}", rep.notes);
    let rep = falsify_claim(&ctx, ClaimId::Q5_2, &params(Some(1), None)).unwrap();
    assert_eq!(rep.status, ClaimStatus::NoCounterexample, "{:?}", rep.notes);
}
