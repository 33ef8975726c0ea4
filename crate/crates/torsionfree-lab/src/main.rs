//! Batch front-end: load algebras and modules, compute invariant tables, run
//! claim checks, emit JSON or text reports with stable exit codes.
//!
//! Exit codes: 0 = completed / no counterexample, 1 = counterexample found,
//! 2 = input or validation error, 3 = premise undecided.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::str::FromStr;
use torsionfree_lab::algebra::{builtin_algebra, AlgebraRef, Side};
use torsionfree_lab::error::Error;
use torsionfree_lab::harness::{
    construction_roundtrips, falsify_claim, reverify_witness, ClaimId, ClaimParams, ClaimStatus,
    SizeParams,
};
use torsionfree_lab::homology::{
    cosyzygy_embedding, embed_into_finite_pd, gorenstein_dimension,
    injective_coresolution_pd_profile, orthogonal_dimension, projective_dimension,
    self_injective_dimension, torsion_status, torsionfree_compress, torsionfree_dimension_upper,
    truncated_resolution_seq, HomologyCtx,
};
use torsionfree_lab::io;
use torsionfree_lab::module::seq::ExactSeq;
use torsionfree_lab::module::ModHom;
use torsionfree_lab::FieldSpec;

#[derive(Parser)]
#[command(
    name = "torsionfree-lab",
    about = "Exact homological invariants of finite-dimensional algebras, with a seeded claim-falsification harness"
)]
struct Cli {
    /// Base field: gf:<p> or qq
    #[arg(long, global = true, default_value = "gf:5")]
    field: String,
    /// Algebra description file (structure constants or bound quiver JSON)
    #[arg(long, global = true)]
    algebra: Option<PathBuf>,
    /// Builtin algebra name: K1, DUAL2, TRUNCPOLY(n), A2, NG3, NAKAYAMA(c,n)
    #[arg(long, global = true)]
    builtin: Option<String>,
    /// Search bound for all dimension computations
    #[arg(long, global = true, default_value_t = 8)]
    bound: usize,
    /// Master seed for sampling
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sample count per suite
    #[arg(long, global = true, default_value_t = 25)]
    samples: usize,
    /// Max generators/relations of random presentations
    #[arg(long, global = true, default_value_t = 3)]
    max_rank: usize,
    /// Random modules above this dimension are replaced by their base
    #[arg(long, global = true, default_value_t = 50)]
    dim_cap: usize,
    /// Output format: json or text
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Output path (stdout when absent)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra (and optionally a module) against every axiom
    Validate {
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Full dimension table for one module
    Invariants {
        #[arg(long)]
        module: PathBuf,
    },
    /// Self-injective dimension of the regular module, both sides
    Selfinjdim,
    /// Projective dimensions of the minimal injective coresolution terms
    CoresolutionProfile {
        #[arg(long, default_value = "left")]
        side: String,
        #[arg(long, default_value_t = 4)]
        length: usize,
    },
    /// Run a constructive proof on a module and emit the exact sequence
    Construct {
        /// one of: prop2.1, prop3.4, cor3.5
        what: String,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Falsification run for one claim
    Check {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
}

fn main() {
    configure_threads();
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn configure_threads() {
    if let Ok(v) = std::env::var("TORSIONFREE_LAB_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
}

fn parse_side(s: &str) -> Result<Side, Error> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(Error::BadArgument(format!(
            "side must be left or right, got {other:?}"
        ))),
    }
}

fn load_algebra(cli: &Cli) -> Result<AlgebraRef, Error> {
    let field = FieldSpec::parse(&cli.field)?;
    match (&cli.algebra, &cli.builtin) {
        (Some(path), None) => io::load_algebra(path, field),
        (None, Some(name)) => builtin_algebra(name, field),
        (None, None) => Err(Error::BadArgument(
            "provide either --algebra <file> or --builtin <name>".into(),
        )),
        (Some(_), Some(_)) => Err(Error::BadArgument(
            "--algebra and --builtin are mutually exclusive".into(),
        )),
    }
}

fn emit(cli: &Cli, v: &Value) -> Result<(), Error> {
    let body = match cli.format.as_str() {
        "json" => format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")),
        "text" => io::render_text(v),
        other => {
            return Err(Error::BadArgument(format!(
                "format must be json or text, got {other:?}"
            )))
        }
    };
    match &cli.out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn claim_params(cli: &Cli, n: Option<usize>, k: Option<usize>) -> ClaimParams {
    ClaimParams {
        n,
        k,
        bound: cli.bound,
        samples: cli.samples.max(1),
        seed: cli.seed,
        size: SizeParams {
            max_gens: cli.max_rank.max(1),
            max_rels: cli.max_rank,
            dim_cap: cli.dim_cap.max(1),
        },
    }
}

fn run(cli: &Cli) -> Result<i32, Error> {
    let algebra = load_algebra(cli)?;
    let ctx = HomologyCtx::with_bound(algebra.clone(), cli.bound.max(1));
    match &cli.command {
        Command::Validate { module } => {
            let violations = algebra.validate();
            if !violations.is_empty() {
                // load_algebra validates too, so this covers stored claims
                let v: Vec<String> = violations.iter().map(|x| x.to_string()).collect();
                emit(
                    cli,
                    &json!({"algebra": algebra.display_name(), "valid": false, "violations": v}),
                )?;
                return Ok(2);
            }
            let mut out = json!({
                "algebra": algebra.display_name(),
                "dim": algebra.dim,
                "field": io::field_to_json(algebra.field),
                "valid": true,
                "supports_minimal_resolutions": algebra.supports_minimal(),
            });
            if let Some(mpath) = module {
                let m = io::load_module(mpath, &algebra)?;
                out["module"] = json!({"dim": m.dim, "side": m.side.name(), "valid": true});
            }
            emit(cli, &out)?;
            Ok(0)
        }
        Command::Invariants { module } => {
            let m = io::load_module(module, &algebra)?;
            let pd = projective_dimension(&ctx, &m, cli.bound)?;
            let orth = orthogonal_dimension(&ctx, &m, cli.bound)?;
            let gdim = gorenstein_dimension(&ctx, &m, cli.bound)?;
            let tdim = torsionfree_dimension_upper(&ctx, &m, cli.bound)?;
            let torsion = torsion_status(&ctx, &m, cli.bound)?;
            emit(
                cli,
                &json!({
                    "algebra": algebra.display_name(),
                    "module": {"dim": m.dim, "side": m.side.name()},
                    "bound": cli.bound,
                    "pd": io::dim_result_to_json(&pd),
                    "orthogonal_dim": io::dim_result_to_json(&orth),
                    "gorenstein_dim": io::dim_result_to_json(&gdim),
                    "torsionfree_dim": io::tdim_to_json(&tdim),
                    "torsion": io::torsion_status_to_json(&torsion),
                }),
            )?;
            Ok(0)
        }
        Command::Selfinjdim => {
            let l = self_injective_dimension(&ctx, Side::Left, cli.bound)?;
            let r = self_injective_dimension(&ctx, Side::Right, cli.bound)?;
            emit(
                cli,
                &json!({
                    "algebra": algebra.display_name(),
                    "bound": cli.bound,
                    "left": io::dim_result_to_json(&l),
                    "right": io::dim_result_to_json(&r),
                }),
            )?;
            Ok(0)
        }
        Command::CoresolutionProfile { side, length } => {
            let side = parse_side(side)?;
            let profile = injective_coresolution_pd_profile(&ctx, side, *length, cli.bound)?;
            emit(
                cli,
                &json!({
                    "algebra": algebra.display_name(),
                    "side": side.name(),
                    "terms": profile.terms.iter().map(|t| json!({"dim": t.dim})).collect::<Vec<_>>(),
                    "pd": profile.pd.iter().map(io::dim_result_to_json).collect::<Vec<_>>(),
                    "terminated": profile.terminated,
                }),
            )?;
            Ok(0)
        }
        Command::Construct { what, module, n } => {
            let m = io::load_module(module, &algebra)?;
            match what.as_str() {
                "prop2.1" => {
                    let n = n.ok_or_else(|| Error::BadArgument("prop2.1 needs --n".into()))?;
                    let emb = cosyzygy_embedding(&ctx, &m, n)?;
                    emit(
                        cli,
                        &json!({
                            "construction": "cosyzygy_embedding",
                            "n": n,
                            "sequence": io::seq_to_json(&emb.seq),
                            "tail_ext": emb.tail_ext,
                        }),
                    )?;
                    Ok(0)
                }
                "prop3.4" | "cor3.5" => {
                    let t = torsionfree_dimension_upper(&ctx, &m, cli.bound)?;
                    let Some(u) = t.upper else {
                        emit(
                            cli,
                            &json!({
                                "construction": what,
                                "status": "PREMISE_UNDECIDED",
                                "note": t.note,
                            }),
                        )?;
                        return Ok(3);
                    };
                    let tres = if u == 0 {
                        ExactSeq::with_zero_caps(vec![ModHom::identity(&m)])?
                    } else {
                        truncated_resolution_seq(&ctx, &m, u)?
                    };
                    let out = if what == "prop3.4" {
                        let c = torsionfree_compress(&ctx, &m, &tres)?;
                        json!({
                            "construction": "torsionfree_compress",
                            "resolution_length": u,
                            "sequence": io::seq_to_json(&c.seq),
                            "pd_kernel": io::dim_result_to_json(&c.pd_h),
                        })
                    } else {
                        let e = embed_into_finite_pd(&ctx, &m, &tres)?;
                        json!({
                            "construction": "embed_into_finite_pd",
                            "resolution_length": u,
                            "sequence": io::seq_to_json(&e.seq),
                            "pd_target": io::dim_result_to_json(&e.pd_n),
                        })
                    };
                    emit(cli, &out)?;
                    Ok(0)
                }
                other => Err(Error::BadArgument(format!(
                    "unknown construction {other:?}; expected prop2.1, prop3.4 or cor3.5"
                ))),
            }
        }
        Command::Check { claim, n, k } => {
            let params = claim_params(cli, *n, *k);
            let report = if claim == "CONSTRUCTION_ROUNDTRIPS" {
                construction_roundtrips(&ctx, &params)?
            } else {
                let id = ClaimId::from_str(claim)?;
                falsify_claim(&ctx, id, &params)?
            };
            let mut out = io::claim_report_to_json(&report, algebra.field);
            // counterexample witnesses must re-verify after a round trip
            if report.status == ClaimStatus::Counterexample {
                let mut verified = Vec::new();
                for w in &report.witnesses {
                    let j = io::witness_to_json(w);
                    let back = io::witness_from_json(&j, &algebra)?;
                    verified.push(reverify_witness(&ctx, &back)?);
                }
                if verified.iter().any(|v| !v) {
                    eprintln!("warning: a counterexample witness failed re-verification");
                }
                out["witnesses_reverified"] = json!(verified);
            }
            emit(cli, &out)?;
            Ok(report.status.exit_code())
        }
    }
}
