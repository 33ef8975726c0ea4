//! Exact sequences with machine-checked certificates.

use super::{Mod, ModHom, ModRef};
use crate::error::{Error, Result};

/// A chain of composable homs, including explicit zero modules at both ends,
/// exact at every interior node. `verify` recomputes the certificate.
#[derive(Clone, Debug)]
pub struct ExactSeq {
    pub maps: Vec<ModHom>,
}

impl ExactSeq {
    /// Wraps `maps` with zero caps: `0 -> source(first) -> ... -> target(last) -> 0`.
    pub fn with_zero_caps(maps: Vec<ModHom>) -> Result<ExactSeq> {
        let first = maps
            .first()
            .ok_or_else(|| Error::BadArgument("empty sequence".into()))?;
        let alg = first.source.algebra.clone();
        let side = first.source.side;
        let zero = Mod::zero_module(alg.clone(), side);
        let mut all = Vec::with_capacity(maps.len() + 2);
        all.push(ModHom::zero(zero.clone(), first.source.clone()));
        all.extend(maps);
        all.push(ModHom::zero(all.last().unwrap().target.clone(), zero));
        let seq = ExactSeq { maps: all };
        seq.check_composable()?;
        Ok(seq)
    }

    /// A short exact sequence `0 -> A -> B -> C -> 0`.
    pub fn short(f: ModHom, g: ModHom) -> Result<ExactSeq> {
        ExactSeq::with_zero_caps(vec![f, g])
    }

    fn check_composable(&self) -> Result<()> {
        for w in self.maps.windows(2) {
            if w[0].target.as_ref() != w[1].source.as_ref() {
                return Err(Error::Validation("sequence endpoints do not match".into()));
            }
        }
        Ok(())
    }

    /// The modules of the sequence, including the zero caps.
    pub fn modules(&self) -> Vec<ModRef> {
        let mut out: Vec<ModRef> = self.maps.iter().map(|m| m.source.clone()).collect();
        out.push(self.maps.last().expect("nonempty").target.clone());
        out
    }

    /// Interior modules (without the zero caps).
    pub fn interior(&self) -> Vec<ModRef> {
        self.modules()[1..self.maps.len()].to_vec()
    }

    /// Certifies exactness: at every interior node the image of the incoming
    /// map equals the kernel of the outgoing map.
    pub fn verify(&self) -> Result<()> {
        self.check_composable()?;
        for m in &self.maps {
            m.verify()?;
        }
        for (i, w) in self.maps.windows(2).enumerate() {
            let img = w[0].image_subspace();
            let ker = w[1].kernel_subspace();
            if img != ker {
                return Err(Error::Validation(format!(
                    "not exact at interior node {} (image dim {}, kernel dim {})",
                    i,
                    img.dim(),
                    ker.dim()
                )));
            }
        }
        Ok(())
    }

    /// Alternating sum of interior dimensions (zero for exact sequences).
    pub fn euler_characteristic(&self) -> i64 {
        let mut sign = 1i64;
        let mut acc = 0i64;
        for m in self.interior() {
            acc += sign * m.dim as i64;
            sign = -sign;
        }
        acc
    }
}
