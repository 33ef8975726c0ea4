//! Bound quiver algebras: kQ / (relations + arrow-ideal^N).
//!
//! Paths are stored in traversal order (first arrow first). The product `p*q`
//! is "traverse q, then p" and is defined when the target of `q` equals the
//! source of `p`; with this orientation `e_i * A * e_j` is spanned by the
//! paths from `j` to `i`, and left modules are the usual quiver
//! representations with an arrow `a: s -> t` acting from vertex space `s`
//! to vertex space `t`.
//!
//! The quotient is computed by closing the relation span under left and right
//! multiplication by vertices and arrows inside the finite space of paths of
//! length below the nilpotency bound, then eliminating. Basis order: vertices
//! first, then paths by length, then lexicographically by arrow indices; this
//! makes every derived structure deterministic.

use super::Algebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Mat, Subspace};
use std::collections::HashMap;

/// Hard cap on the path-space dimension before elimination.
const MAX_PATHS: usize = 20_000;

/// One relation: a linear combination of parallel-composable paths,
/// each path given by its arrow indices in traversal order.
pub type Relation = Vec<(Scalar, Vec<usize>)>;

#[derive(Clone, Debug)]
pub struct QuiverPresentation {
    pub vertices: usize,
    /// (source, target, label) per arrow.
    pub arrows: Vec<(usize, usize, String)>,
    pub relations: Vec<Relation>,
    /// N with (arrow ideal)^N contained in the defining ideal.
    pub nilpotency: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Path {
    source: usize,
    target: usize,
    /// Arrow indices in traversal order; empty for a vertex path.
    arrows: Vec<usize>,
}

impl Path {
    fn vertex(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: vec![],
        }
    }

    fn len(&self) -> usize {
        self.arrows.len()
    }
}

/// `p * q` = traverse q, then p. Defined when q ends where p starts.
fn compose(p: &Path, q: &Path) -> Option<Path> {
    if q.target != p.source {
        return None;
    }
    let mut arrows = q.arrows.clone();
    arrows.extend_from_slice(&p.arrows);
    Some(Path {
        source: q.source,
        target: p.target,
        arrows,
    })
}

struct PathSpace {
    paths: Vec<Path>,
    index: HashMap<Vec<usize>, usize>,
    vertex_count: usize,
}

impl PathSpace {
    /// Enumerates all paths of length below `max_len`, vertices first, then by
    /// length, then lexicographically.
    fn enumerate(q: &QuiverPresentation, max_len: usize) -> Result<PathSpace> {
        let mut paths: Vec<Path> = (0..q.vertices).map(Path::vertex).collect();
        let mut frontier: Vec<Path> = paths.clone();
        for _ in 1..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for (a, (src, tgt, _)) in q.arrows.iter().enumerate() {
                    if *src == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(Path {
                            source: p.source,
                            target: *tgt,
                            arrows,
                        });
                    }
                }
            }
            // frontier was lexicographically sorted and we extended in arrow
            // order, but interleaving across paths needs one sort per level
            next.sort_by(|x, y| x.arrows.cmp(&y.arrows));
            paths.extend(next.iter().cloned());
            if paths.len() > MAX_PATHS {
                return Err(Error::Unsupported(format!(
                    "path space exceeds {MAX_PATHS} elements"
                )));
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        let index = paths
            .iter()
            .enumerate()
            .filter(|(_, p)| p.len() > 0)
            .map(|(i, p)| (p.arrows.clone(), i))
            .collect();
        Ok(PathSpace {
            paths,
            index,
            vertex_count: q.vertices,
        })
    }

    fn lookup(&self, p: &Path) -> Option<usize> {
        if p.len() == 0 {
            (p.source < self.vertex_count).then_some(p.source)
        } else {
            self.index.get(&p.arrows).copied()
        }
    }
}

/// Incremental row-echelon accumulator over the path space.
struct EchelonSpan {
    field: FieldSpec,
    ambient: usize,
    /// rows with pairwise distinct pivots, normalized to pivot 1, reduced
    rows: Vec<Vec<Scalar>>,
    pivot_of_row: Vec<usize>,
}

impl EchelonSpan {
    fn new(field: FieldSpec, ambient: usize) -> EchelonSpan {
        EchelonSpan {
            field,
            ambient,
            rows: vec![],
            pivot_of_row: vec![],
        }
    }

    /// Reduces `v` against the span; inserts if nonzero. Returns true when the
    /// span grew.
    fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        let f = self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivot_of_row) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for c in 0..self.ambient {
                    let t = f.mul(&factor, &row[c]);
                    v[c] = f.sub(&v[c], &t);
                }
            }
        }
        let Some(pivot) = v.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = f.inv(&v[pivot]).expect("nonzero pivot");
        for c in 0..self.ambient {
            v[c] = f.mul(&v[c], &inv);
        }
        self.rows.push(v);
        self.pivot_of_row.push(pivot);
        true
    }

    fn into_subspace(self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::zero(self.field, self.ambient);
        }
        Subspace::from_rows(&Mat::from_rows(self.field, self.rows).expect("rectangular"))
    }
}

fn validate_presentation(q: &QuiverPresentation) -> Result<()> {
    if q.vertices == 0 {
        return Err(Error::Validation("quiver needs at least one vertex".into()));
    }
    if q.nilpotency == 0 {
        return Err(Error::Validation("nilpotency bound must be at least 1".into()));
    }
    for (i, (s, t, _)) in q.arrows.iter().enumerate() {
        if *s >= q.vertices || *t >= q.vertices {
            return Err(Error::Validation(format!(
                "arrow {i} references vertex outside 0..{}",
                q.vertices
            )));
        }
    }
    for (ri, rel) in q.relations.iter().enumerate() {
        if rel.is_empty() {
            return Err(Error::Validation(format!("relation {ri} is empty")));
        }
        for (_, arrows) in rel {
            if arrows.len() < 2 {
                return Err(Error::Validation(format!(
                    "relation {ri} contains a path of length {} (admissible ideals need length >= 2)",
                    arrows.len()
                )));
            }
            for w in arrows.windows(2) {
                let (a, b) = (w[0], w[1]);
                if a >= q.arrows.len() || b >= q.arrows.len() {
                    return Err(Error::Validation(format!(
                        "relation {ri} references arrow outside 0..{}",
                        q.arrows.len()
                    )));
                }
                if q.arrows[a].1 != q.arrows[b].0 {
                    return Err(Error::Validation(format!(
                        "relation {ri} contains a non-composable path"
                    )));
                }
            }
            if let Some(&a) = arrows.first() {
                if a >= q.arrows.len() {
                    return Err(Error::Validation(format!(
                        "relation {ri} references arrow outside 0..{}",
                        q.arrows.len()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Builds the quotient of the path algebra by the two-sided ideal generated
/// by the relations together with all paths of length >= nilpotency.
///
/// Relation terms of length >= nilpotency are already in the ideal and are
/// dropped (the admissibility invariant asks for lengths below the bound, but
/// redundant homogeneous relations such as "a^N with nilpotency N" are
/// accepted for convenience).
pub fn build_bound_quiver_algebra(q: &QuiverPresentation, field: FieldSpec) -> Result<Algebra> {
    validate_presentation(q)?;
    let n = q.nilpotency;
    let space = PathSpace::enumerate(q, n)?;
    let npaths = space.paths.len();
    let f = field;

    // relation vectors in path coordinates
    let mut ideal = EchelonSpan::new(f, npaths);
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for rel in &q.relations {
        let mut v = vec![f.zero(); npaths];
        let mut touched = false;
        for (coeff, arrows) in rel {
            if arrows.len() >= n {
                continue; // already inside the arrow-ideal power
            }
            let idx = space
                .index
                .get(arrows)
                .copied()
                .ok_or_else(|| Error::Validation("relation path not found".into()))?;
            if !f.owns(coeff) {
                return Err(Error::FieldMismatch(f.name(), "relation coefficient".into()));
            }
            v[idx] = f.add(&v[idx], coeff);
            touched = true;
        }
        if touched {
            queue.push(v);
        }
    }

    // close under left/right multiplication by vertices and arrows
    let multipliers: Vec<Path> = (0..q.vertices)
        .map(Path::vertex)
        .chain(q.arrows.iter().enumerate().map(|(i, (s, t, _))| Path {
            source: *s,
            target: *t,
            arrows: vec![i],
        }))
        .collect();
    while let Some(v) = queue.pop() {
        if !ideal.insert(v.clone()) {
            continue;
        }
        for m in &multipliers {
            for prod in [mult_vector(&space, f, m, &v, true), mult_vector(&space, f, m, &v, false)] {
                if prod.iter().any(|s| !s.is_zero()) {
                    queue.push(prod);
                }
            }
        }
    }
    let ideal = ideal.into_subspace();

    // basis := surviving (non-pivot) paths, in enumeration order
    let survivors = ideal.free_coordinates();
    let dim = survivors.len();
    let pos_of: HashMap<usize, usize> = survivors.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let mut mult = vec![f.zero(); dim * dim * dim];
    for (bi, &pi) in survivors.iter().enumerate() {
        for (bj, &pj) in survivors.iter().enumerate() {
            let Some(prod) = compose(&space.paths[pi], &space.paths[pj]) else {
                continue;
            };
            if prod.len() >= n {
                continue;
            }
            let idx = space.lookup(&prod).expect("product path enumerated");
            let mut v = vec![f.zero(); npaths];
            v[idx] = f.one();
            let red = ideal.reduce(&v);
            for (bk, &pk) in survivors.iter().enumerate() {
                if !red[pk].is_zero() {
                    mult[(bi * dim + bj) * dim + bk] = red[pk].clone();
                }
            }
        }
    }

    // unit = sum of vertex classes (vertices always survive: the ideal is
    // supported on paths of length >= 2)
    let mut unit = vec![f.zero(); dim];
    let mut idempotents = Vec::with_capacity(q.vertices);
    for v in 0..q.vertices {
        let b = *pos_of
            .get(&v)
            .ok_or_else(|| Error::Validation("vertex eliminated by ideal".into()))?;
        unit[b] = f.one();
        let mut e = vec![f.zero(); dim];
        e[b] = f.one();
        idempotents.push(e);
    }

    // radical = classes of paths of length >= 1
    let mut rad_rows = Vec::new();
    for (b, &p) in survivors.iter().enumerate() {
        if space.paths[p].len() >= 1 {
            let mut row = vec![f.zero(); dim];
            row[b] = f.one();
            rad_rows.push(row);
        }
    }
    let radical = if rad_rows.is_empty() {
        Subspace::zero(f, dim)
    } else {
        Subspace::from_rows(&Mat::from_rows(f, rad_rows)?)
    };

    let labels = survivors
        .iter()
        .map(|&p| {
            let path = &space.paths[p];
            if path.len() == 0 {
                format!("e{}", path.source)
            } else {
                path.arrows
                    .iter()
                    .map(|&a| q.arrows[a].2.clone())
                    .collect::<Vec<_>>()
                    .join("")
            }
        })
        .collect();

    let mut alg = Algebra::new(f, dim, mult, unit)?;
    alg.radical = Some(radical);
    alg.idempotents = Some(idempotents);
    alg.labels = Some(labels);
    alg.validated()
}

/// Multiplies every term of `v` by the path `m` on the given side
/// (left = m * term, right = term * m), truncating at the configured length.
fn mult_vector(space: &PathSpace, f: FieldSpec, m: &Path, v: &[Scalar], left: bool) -> Vec<Scalar> {
    let mut out = vec![f.zero(); v.len()];
    for (i, coeff) in v.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let p = &space.paths[i];
        let prod = if left { compose(m, p) } else { compose(p, m) };
        if let Some(prod) = prod {
            if let Some(idx) = space.lookup(&prod) {
                out[idx] = f.add(&out[idx], coeff);
            }
            // products reaching the nilpotency length are zero in the quotient
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf5() -> FieldSpec {
        FieldSpec::Prime(5)
    }

    fn loop_quiver(loops: &[&str], relations: Vec<Relation>, n: usize) -> QuiverPresentation {
        QuiverPresentation {
            vertices: 1,
            arrows: loops.iter().map(|l| (0, 0, l.to_string())).collect(),
            relations,
            nilpotency: n,
        }
    }

    #[test]
    fn a2_path_algebra() {
        let q = QuiverPresentation {
            vertices: 2,
            arrows: vec![(0, 1, "a".into())],
            relations: vec![],
            nilpotency: 2,
        };
        let alg = build_bound_quiver_algebra(&q, gf5()).unwrap();
        assert_eq!(alg.dim, 3);
        assert_eq!(alg.labels.as_ref().unwrap(), &["e0", "e1", "a"]);
        assert_eq!(alg.radical.as_ref().unwrap().dim(), 1);
        assert!(alg.supports_minimal());
    }

    #[test]
    fn dual_numbers_from_loop() {
        // quoting a redundant homogeneous relation is accepted
        let q = loop_quiver(&["a"], vec![vec![(gf5().one(), vec![0, 0])]], 2);
        let alg = build_bound_quiver_algebra(&q, gf5()).unwrap();
        assert_eq!(alg.dim, 2);
        assert_eq!(alg.radical.as_ref().unwrap().dim(), 1);
    }

    #[test]
    fn two_loops_radical_square_zero() {
        let q = loop_quiver(&["x", "y"], vec![], 2);
        let alg = build_bound_quiver_algebra(&q, gf5()).unwrap();
        assert_eq!(alg.dim, 3);
        assert_eq!(alg.radical.as_ref().unwrap().dim(), 2);
    }

    #[test]
    fn commutativity_relation_eliminates_one_path() {
        // k<x,y>/(xy - yx, x^2, y^2) truncated at length 3
        let f = gf5();
        let q = loop_quiver(
            &["x", "y"],
            vec![
                vec![(f.one(), vec![0, 1]), (f.neg(&f.one()), vec![1, 0])],
                vec![(f.one(), vec![0, 0])],
                vec![(f.one(), vec![1, 1])],
            ],
            3,
        );
        let alg = build_bound_quiver_algebra(&q, f).unwrap();
        // basis e, x, y, and one of the two mixed paths
        assert_eq!(alg.dim, 4);
    }

    #[test]
    fn truncated_polynomials() {
        let q = loop_quiver(&["x"], vec![], 3);
        let alg = build_bound_quiver_algebra(&q, gf5()).unwrap();
        assert_eq!(alg.dim, 3);
        assert_eq!(alg.radical.as_ref().unwrap().dim(), 2);
        // x * x = x^2 in the basis order {e, x, x^2}
        let x = alg.basis_vector(1);
        let sq = alg.mul_vec(&x, &x);
        assert_eq!(sq, alg.basis_vector(2));
        let cube = alg.mul_vec(&sq, &x);
        assert!(cube.iter().all(|s| s.is_zero()));
    }

    #[test]
    fn bad_indices_rejected() {
        let q = QuiverPresentation {
            vertices: 1,
            arrows: vec![(0, 3, "a".into())],
            relations: vec![],
            nilpotency: 2,
        };
        assert!(build_bound_quiver_algebra(&q, gf5()).is_err());
    }

    #[test]
    fn length_one_relation_rejected() {
        let q = loop_quiver(&["a"], vec![vec![(gf5().one(), vec![0])]], 3);
        assert!(build_bound_quiver_algebra(&q, gf5()).is_err());
    }

    #[test]
    fn path_product_orientation() {
        // arrows a: 0->1, b: 1->2; traversal "a then b" is the product b*a
        let q = QuiverPresentation {
            vertices: 3,
            arrows: vec![(0, 1, "a".into()), (1, 2, "b".into())],
            relations: vec![],
            nilpotency: 3,
        };
        let alg = build_bound_quiver_algebra(&q, gf5()).unwrap();
        assert_eq!(alg.dim, 6); // e0,e1,e2,a,b,ab
        let labels = alg.labels.as_ref().unwrap();
        let a = alg.basis_vector(labels.iter().position(|l| l == "a").unwrap());
        let b = alg.basis_vector(labels.iter().position(|l| l == "b").unwrap());
        let ab = labels.iter().position(|l| l == "ab").unwrap();
        // b * a = "a then b"
        assert_eq!(alg.mul_vec(&b, &a), alg.basis_vector(ab));
        // a * b is not composable
        assert!(alg.mul_vec(&a, &b).iter().all(|s| s.is_zero()));
    }
}
