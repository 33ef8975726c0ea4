//! Seeded falsification harness: samples modules, stress-tests the classical
//! equivalences between torsionfreeness, orthogonality classes, Gorenstein
//! dimensions and self-injective dimensions, and emits reproducible reports.
//!
//! Universally quantified statements are tested on samples only, so a clean
//! run is reported as `NO_COUNTEREXAMPLE`, never as a proof. Implications
//! whose premises depend on uncertified algebra-level quantities are skipped
//! with a note and surface as `PREMISE_UNDECIDED`. Counterexample witnesses
//! carry enough data to re-verify after a serialization round trip.

pub mod claims;
pub mod sampling;

pub use claims::{construction_roundtrips, falsify_claim, question_experiment, reverify_witness};
pub use sampling::{random_module, sample_suite, SizeParams};

use crate::algebra::Side;
use crate::module::ModRef;
use std::fmt;
use std::str::FromStr;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ClaimId {
    Thm1_4,
    Prop2_1,
    Lemma2_3,
    Lemma3_1,
    Prop3_2,
    Prop3_4,
    Cor3_5,
    Thm3_6,
    Prop3_10,
    Prop4_1,
    Prop4_2,
    Cor4_3,
    Prop4_4,
    Lemma4_5,
    Prop4_6,
    Thm4_7,
    Cor4_8,
    Cor4_9,
    Zaks,
    Q5_1,
    Q5_2,
    Claim5_2N1,
}

pub const ALL_CLAIMS: &[ClaimId] = &[
    ClaimId::Thm1_4,
    ClaimId::Prop2_1,
    ClaimId::Lemma2_3,
    ClaimId::Lemma3_1,
    ClaimId::Prop3_2,
    ClaimId::Prop3_4,
    ClaimId::Cor3_5,
    ClaimId::Thm3_6,
    ClaimId::Prop3_10,
    ClaimId::Prop4_1,
    ClaimId::Prop4_2,
    ClaimId::Cor4_3,
    ClaimId::Prop4_4,
    ClaimId::Lemma4_5,
    ClaimId::Prop4_6,
    ClaimId::Thm4_7,
    ClaimId::Cor4_8,
    ClaimId::Cor4_9,
    ClaimId::Zaks,
    ClaimId::Q5_1,
    ClaimId::Q5_2,
    ClaimId::Claim5_2N1,
];

impl ClaimId {
    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Thm1_4 => "THM_1_4",
            ClaimId::Prop2_1 => "PROP_2_1",
            ClaimId::Lemma2_3 => "LEMMA_2_3",
            ClaimId::Lemma3_1 => "LEMMA_3_1",
            ClaimId::Prop3_2 => "PROP_3_2",
            ClaimId::Prop3_4 => "PROP_3_4",
            ClaimId::Cor3_5 => "COR_3_5",
            ClaimId::Thm3_6 => "THM_3_6",
            ClaimId::Prop3_10 => "PROP_3_10",
            ClaimId::Prop4_1 => "PROP_4_1",
            ClaimId::Prop4_2 => "PROP_4_2",
            ClaimId::Cor4_3 => "COR_4_3",
            ClaimId::Prop4_4 => "PROP_4_4",
            ClaimId::Lemma4_5 => "LEMMA_4_5",
            ClaimId::Prop4_6 => "PROP_4_6",
            ClaimId::Thm4_7 => "THM_4_7",
            ClaimId::Cor4_8 => "COR_4_8",
            ClaimId::Cor4_9 => "COR_4_9",
            ClaimId::Zaks => "ZAKS",
            ClaimId::Q5_1 => "Q_5_1",
            ClaimId::Q5_2 => "Q_5_2",
            ClaimId::Claim5_2N1 => "CLAIM_5_2_N1",
        }
    }

    /// Human-readable statement of what the check tests.
    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::Thm1_4 => "both self-injective dimensions equal and at most n iff every module on both sides has Gorenstein, torsionfree and left-orthogonal dimension at most n",
            ClaimId::Prop2_1 => "a module is n-torsionfree iff it is an n-th syzygy of a module in the n-th orthogonal class",
            ClaimId::Lemma2_3 => "n-torsionfree and infinitely torsionfree modules are closed under finite direct sums and summands",
            ClaimId::Lemma3_1 => "a short exact sequence dualizes to the four-term star sequence and the four-term transpose sequence",
            ClaimId::Prop3_2 => "an exact sequence with torsionfree middle terms can be rebuilt with a projective second term",
            ClaimId::Prop3_4 => "torsionfree dimension at most n compresses to a short exact sequence with kernel of projective dimension below n",
            ClaimId::Cor3_5 => "a module of torsionfree dimension at most n embeds into a module of projective dimension at most n with torsionfree orthogonal cokernel",
            ClaimId::Thm3_6 => "if every module has torsionfree dimension at most n then the opposite self-injective dimension is at most n",
            ClaimId::Prop3_10 => "every module has left-orthogonal dimension at most n iff the self-injective dimension is at most n",
            ClaimId::Prop4_1 => "the torsionless property of the n-th orthogonal class and its five equivalent reformulations",
            ClaimId::Prop4_2 => "the torsionless property of the full orthogonal class and its reformulations",
            ClaimId::Cor4_3 => "the minimal torsionless-property levels agree on the two sides",
            ClaimId::Prop4_4 => "if m-th syzygies are n-torsionfree and the n-th orthogonal class is torsionless then the opposite self-injective dimension is at most m",
            ClaimId::Lemma4_5 => "under the torsionless property the first n+1 injective coresolution terms cogenerate",
            ClaimId::Prop4_6 => "finite opposite self-injective dimension iff some orthogonal class is torsionless and the coresolution terms have finite projective dimension",
            ClaimId::Thm4_7 => "torsionless property plus the g_n(k) condition bounds the opposite self-injective dimension by n+k-1",
            ClaimId::Cor4_8 => "under a coresolution pd bound, self-injective dimension at most n iff the torsionless property",
            ClaimId::Cor4_9 => "if the self-injective dimension is at most n, it equals the opposite one iff the n-th orthogonal class is torsionless",
            ClaimId::Zaks => "finite left and right self-injective dimensions are equal",
            ClaimId::Q5_1 => "is the class of modules of bounded torsionfree dimension closed under extensions and kernels of epimorphisms (open)",
            ClaimId::Q5_2 => "does opposite self-injective dimension at most n force torsionfree dimension at most n (open)",
            ClaimId::Claim5_2N1 => "the positive answer to the previous question for n = 1: first syzygies are infinitely torsionfree",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<ClaimId, Self::Err> {
        ALL_CLAIMS
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| crate::error::Error::BadArgument(format!("unknown claim {s:?}")))
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ClaimStatus {
    NoCounterexample,
    Counterexample,
    PremiseUndecided,
}

impl ClaimStatus {
    pub fn name(self) -> &'static str {
        match self {
            ClaimStatus::NoCounterexample => "NO_COUNTEREXAMPLE",
            ClaimStatus::Counterexample => "COUNTEREXAMPLE",
            ClaimStatus::PremiseUndecided => "PREMISE_UNDECIDED",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ClaimStatus::NoCounterexample => 0,
            ClaimStatus::Counterexample => 1,
            ClaimStatus::PremiseUndecided => 3,
        }
    }
}

/// A reproducible witness: the modules involved, the specific re-checkable
/// condition, and auxiliary parameters.
#[derive(Clone, Debug)]
pub struct Witness {
    /// machine tag naming the re-verification procedure
    pub check: String,
    pub label: String,
    /// (role, module) pairs; serialized alongside the report
    pub modules: Vec<(String, ModRef)>,
    /// auxiliary integers (class indices, degrees ...)
    pub params: Vec<(String, i64)>,
}

#[derive(Clone, Debug)]
pub struct ClaimParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub bound: usize,
    pub samples: usize,
    pub seed: u64,
    pub size: SizeParams,
}

impl Default for ClaimParams {
    fn default() -> ClaimParams {
        ClaimParams {
            n: None,
            k: None,
            bound: crate::homology::DEFAULT_BOUND,
            samples: 25,
            seed: 0,
            size: SizeParams::default(),
        }
    }
}

impl ClaimParams {
    pub fn require_n(&self) -> crate::error::Result<usize> {
        self.n
            .ok_or_else(|| crate::error::Error::BadArgument("this claim needs --n".into()))
    }
}

#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub claim: String,
    pub algebra: String,
    pub side_note: Option<Side>,
    pub params: ClaimParams,
    pub status: ClaimStatus,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    pub checks_run: usize,
}

impl ClaimReport {
    pub fn new(claim: impl Into<String>, algebra: String, params: &ClaimParams) -> ClaimReport {
        ClaimReport {
            claim: claim.into(),
            algebra,
            side_note: None,
            params: params.clone(),
            status: ClaimStatus::NoCounterexample,
            witnesses: Vec::new(),
            notes: Vec::new(),
            checks_run: 0,
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn counterexample(&mut self, w: Witness) {
        self.status = ClaimStatus::Counterexample;
        self.witnesses.push(w);
    }

    /// Attach a consistency exhibit without flipping the status.
    pub fn exhibit(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    pub fn undecided(&mut self, reason: impl Into<String>) {
        if self.status == ClaimStatus::NoCounterexample {
            self.status = ClaimStatus::PremiseUndecided;
        }
        self.notes.push(reason.into());
    }
}
