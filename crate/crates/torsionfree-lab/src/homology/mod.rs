//! Homological invariants: resolutions, syzygies, transposes, Ext groups, and
//! the dimension theory built on them.
//!
//! All quantifiers of the form "Ext^i vanishes for every i >= 1" are
//! discharged honestly: either a finiteness certificate (a certified
//! self-injective dimension of the regular module bounds the degrees that can
//! be nonzero) or a `GREATER_THAN(bound)` verdict recording that every test up
//! to the bound was executed. A result is `certified` only in the first case
//! or when the verdict is a sound lower bound.

pub mod constructions;
pub mod dims;
pub mod ext;
pub mod resolution;

pub use constructions::{
    auslander_bridger_check, cosyzygy_embedding, embed_into_finite_pd, ext1_classes,
    extension_from_cocycle, resolve_middle_term, star_of_ses, torsionfree_compress,
    truncated_resolution_seq, ABReport, Compression, CosyzygyEmbedding, FinitePdEmbedding,
    StarOfSes,
};
pub use dims::{
    gorenstein_dimension, inf_torsionfree, inf_torsionfree_windowed,
    injective_coresolution_pd_profile, is_n_torsionfree, orthogonal_dimension,
    projective_dimension, self_injective_dimension, torsion_status,
    torsionfree_dimension_upper, transpose, CertBool, CoresolutionProfile, TdimResult,
    TorsionStatus, Transpose,
};
pub use ext::ext_dims;
pub use resolution::{presentation, Resolution};

use crate::algebra::{AlgebraRef, Side};
use crate::module::ModRef;
use parking_lot::Mutex;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Default search bound for all dimension computations. Syzygy ranks can
/// double per step on radical-square-zero algebras, so the default stays small.
pub const DEFAULT_BOUND: usize = 8;

/// The value part of a dimension computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimValue {
    Finite(usize),
    Infinity,
    /// Every candidate up to and including the bound was tested and excluded.
    GreaterThan(usize),
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Finite(n) => write!(f, "{n}"),
            DimValue::Infinity => write!(f, "infinity"),
            DimValue::GreaterThan(b) => write!(f, ">{b}"),
        }
    }
}

/// A dimension together with its certification status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimResult {
    pub value: DimValue,
    pub certified: bool,
    pub note: String,
}

impl DimResult {
    pub fn finite(n: usize, certified: bool, note: impl Into<String>) -> DimResult {
        DimResult {
            value: DimValue::Finite(n),
            certified,
            note: note.into(),
        }
    }

    pub fn greater_than(b: usize, certified: bool, note: impl Into<String>) -> DimResult {
        DimResult {
            value: DimValue::GreaterThan(b),
            certified,
            note: note.into(),
        }
    }

    pub fn infinity(note: impl Into<String>) -> DimResult {
        DimResult {
            value: DimValue::Infinity,
            certified: true,
            note: note.into(),
        }
    }

    pub fn as_finite(&self) -> Option<usize> {
        match self.value {
            DimValue::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn certified_finite(&self) -> Option<usize> {
        if self.certified {
            self.as_finite()
        } else {
            None
        }
    }

    /// True when the result proves the dimension exceeds `n`.
    pub fn certainly_exceeds(&self, n: usize) -> bool {
        match self.value {
            DimValue::Finite(v) => self.certified && v > n,
            DimValue::Infinity => true,
            DimValue::GreaterThan(b) => self.certified && b >= n,
        }
    }
}

impl fmt::Display for DimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}",
            self.value,
            if self.certified { "" } else { " (uncertified)" }
        )
    }
}

/// Shared computation context for one algebra: resolution, transpose, Ext and
/// self-injective-dimension caches. Reads are concurrent; extensions of a
/// cached resolution are serialized per entry.
pub struct HomologyCtx {
    pub algebra: AlgebraRef,
    pub bound: usize,
    resolutions: Mutex<HashMap<String, Arc<Mutex<Resolution>>>>,
    ext_tables: Mutex<HashMap<(String, String), Vec<usize>>>,
    transposes: Mutex<HashMap<String, Arc<dims::Transpose>>>,
    selfinj: Mutex<HashMap<Side, (usize, DimResult)>>,
}

impl HomologyCtx {
    pub fn new(algebra: AlgebraRef) -> HomologyCtx {
        HomologyCtx {
            algebra,
            bound: DEFAULT_BOUND,
            resolutions: Mutex::new(HashMap::new()),
            ext_tables: Mutex::new(HashMap::new()),
            transposes: Mutex::new(HashMap::new()),
            selfinj: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_bound(algebra: AlgebraRef, bound: usize) -> HomologyCtx {
        let mut ctx = HomologyCtx::new(algebra);
        ctx.bound = bound;
        ctx
    }

    /// Whether minimal resolutions are available.
    pub fn minimal_supported(&self) -> bool {
        self.algebra.supports_minimal()
    }

    pub(crate) fn resolution_entry(
        &self,
        m: &ModRef,
        minimal: bool,
    ) -> crate::error::Result<Arc<Mutex<Resolution>>> {
        let key = format!("{}#{}", minimal, m.encode());
        {
            let map = self.resolutions.lock();
            if let Some(e) = map.get(&key) {
                return Ok(e.clone());
            }
        }
        let fresh = Arc::new(Mutex::new(Resolution::start(self, m.clone(), minimal)?));
        let mut map = self.resolutions.lock();
        Ok(map.entry(key).or_insert(fresh).clone())
    }

    pub(crate) fn cached_ext(&self, mkey: &str, nkey: &str) -> Option<Vec<usize>> {
        self.ext_tables
            .lock()
            .get(&(mkey.to_string(), nkey.to_string()))
            .cloned()
    }

    pub(crate) fn store_ext(&self, mkey: String, nkey: String, dims: Vec<usize>) {
        let mut map = self.ext_tables.lock();
        let entry = map.entry((mkey, nkey)).or_default();
        if dims.len() > entry.len() {
            *entry = dims;
        }
    }

    pub(crate) fn cached_transpose(&self, key: &str) -> Option<Arc<dims::Transpose>> {
        self.transposes.lock().get(key).cloned()
    }

    pub(crate) fn store_transpose(&self, key: String, t: Arc<dims::Transpose>) {
        self.transposes.lock().entry(key).or_insert(t);
    }

    pub(crate) fn cached_selfinj(&self, side: Side, bound: usize) -> Option<DimResult> {
        let map = self.selfinj.lock();
        match map.get(&side) {
            Some((b, r)) if *b >= bound || matches!(r.value, DimValue::Finite(_)) && r.certified => {
                Some(r.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn store_selfinj(&self, side: Side, bound: usize, r: DimResult) {
        let mut map = self.selfinj.lock();
        let e = map.entry(side).or_insert((bound, r.clone()));
        if bound >= e.0 {
            *e = (bound, r);
        }
    }
}
