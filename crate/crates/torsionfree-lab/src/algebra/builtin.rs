//! Named example algebras, all realized as bound quiver algebras so that
//! radicals, idempotents and minimal resolutions are available over any field.

use super::quiver::{build_bound_quiver_algebra, QuiverPresentation};
use super::{Algebra, AlgebraRef};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use std::sync::Arc;

pub fn builtin_names() -> &'static [&'static str] {
    &["K1", "DUAL2", "TRUNCPOLY(n)", "A2", "NG3", "NAKAYAMA(c,n)"]
}

/// Builds a named algebra over the given field:
///
/// * `K1` — the base field;
/// * `DUAL2` — k[x]/(x^2);
/// * `TRUNCPOLY(n)` — k[x]/(x^n);
/// * `A2` — the path algebra of the quiver `0 -> 1`;
/// * `NG3` — k<x,y>/(x,y)^2, local with radical square zero;
/// * `NAKAYAMA(c,n)` — the self-injective Nakayama algebra on a cyclic quiver
///   with `c` vertices and all paths of length `n` equal to zero.
pub fn builtin_algebra(name: &str, field: FieldSpec) -> Result<AlgebraRef> {
    let spec = parse_name(name)?;
    let q = match spec {
        Builtin::K1 => QuiverPresentation {
            vertices: 1,
            arrows: vec![],
            relations: vec![],
            nilpotency: 1,
        },
        Builtin::Dual2 => QuiverPresentation {
            vertices: 1,
            arrows: vec![(0, 0, "a".into())],
            relations: vec![],
            nilpotency: 2,
        },
        Builtin::TruncPoly(n) => QuiverPresentation {
            vertices: 1,
            arrows: vec![(0, 0, "x".into())],
            relations: vec![],
            nilpotency: n,
        },
        Builtin::A2 => QuiverPresentation {
            vertices: 2,
            arrows: vec![(0, 1, "a".into())],
            relations: vec![],
            nilpotency: 2,
        },
        Builtin::Ng3 => QuiverPresentation {
            vertices: 1,
            arrows: vec![(0, 0, "x".into()), (0, 0, "y".into())],
            relations: vec![],
            nilpotency: 2,
        },
        Builtin::Nakayama(c, n) => QuiverPresentation {
            vertices: c,
            arrows: (0..c).map(|i| (i, (i + 1) % c, format!("a{i}"))).collect(),
            relations: vec![],
            nilpotency: n,
        },
    };
    let mut alg: Algebra = build_bound_quiver_algebra(&q, field)?;
    alg.name = Some(canonical_name(&spec));
    Ok(Arc::new(alg))
}

enum Builtin {
    K1,
    Dual2,
    TruncPoly(usize),
    A2,
    Ng3,
    Nakayama(usize, usize),
}

fn canonical_name(b: &Builtin) -> String {
    match b {
        Builtin::K1 => "K1".into(),
        Builtin::Dual2 => "DUAL2".into(),
        Builtin::TruncPoly(n) => format!("TRUNCPOLY({n})"),
        Builtin::A2 => "A2".into(),
        Builtin::Ng3 => "NG3".into(),
        Builtin::Nakayama(c, n) => format!("NAKAYAMA({c},{n})"),
    }
}

fn parse_name(name: &str) -> Result<Builtin> {
    let s = name.trim();
    match s {
        "K1" => return Ok(Builtin::K1),
        "DUAL2" => return Ok(Builtin::Dual2),
        "A2" => return Ok(Builtin::A2),
        "NG3" => return Ok(Builtin::Ng3),
        _ => {}
    }
    if let Some(args) = strip_call(s, "TRUNCPOLY") {
        let n: usize = args
            .parse()
            .map_err(|_| Error::BadArgument(format!("bad TRUNCPOLY argument {args:?}")))?;
        if n == 0 {
            return Err(Error::BadArgument("TRUNCPOLY needs n >= 1".into()));
        }
        return Ok(Builtin::TruncPoly(n));
    }
    if let Some(args) = strip_call(s, "NAKAYAMA") {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::BadArgument("NAKAYAMA needs (cycle length, nilpotency)".into()));
        }
        let c: usize = parts[0]
            .parse()
            .map_err(|_| Error::BadArgument("bad NAKAYAMA cycle length".into()))?;
        let n: usize = parts[1]
            .parse()
            .map_err(|_| Error::BadArgument("bad NAKAYAMA nilpotency".into()))?;
        if c == 0 || n < 2 {
            return Err(Error::BadArgument(
                "NAKAYAMA needs cycle length >= 1 and nilpotency >= 2".into(),
            ));
        }
        return Ok(Builtin::Nakayama(c, n));
    }
    Err(Error::BadArgument(format!(
        "unknown builtin algebra {name:?}; known: {}",
        builtin_names().join(", ")
    )))
}

fn strip_call<'a>(s: &'a str, head: &str) -> Option<&'a str> {
    s.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
}
