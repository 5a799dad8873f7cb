//! Brute-force checks of the statements behind the rank formula.
//!
//! Each check returns a [`LemmaVerdict`]. A failing verdict always carries a
//! counterexample with enough data to replay it.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

mod invariance;
mod kernel;
mod torus;
mod wdeco;

pub use invariance::{distinct_word_seeds, rank_invariance};
pub use kernel::{probe_kernel_vectors, verify_kernel_dimension, KernelProbe, SignVariant};
pub use torus::{
    random_skew, torus_degree, verify_torus, TorusOutcome, TorusSpec, COMMUTANT_TOLERANCE,
    DEFAULT_TORUS_CAP,
};
pub use wdeco::{verify_wdeco, verify_wdeco_for, weight_action};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma {
    /// `omega - w(omega)` is the sum of the convex-order roots indexed by `I_omega(w)`.
    Wdeco,
    /// `dim ker T = n - rk(w0 - w0_levi)`.
    KernelDimension,
    /// Explicit basis of `ker T1`.
    KernelVectors,
    /// Quantum torus representation of dimension `l^(rank/2)`.
    Torus,
    /// Rank of `T` independent of the reduced word and Levi convention.
    RankInvariance,
}

impl Lemma {
    pub fn id(self) -> &'static str {
        match self {
            Lemma::Wdeco => "wdeco",
            Lemma::KernelDimension => "kernel",
            Lemma::KernelVectors => "kernel-vectors",
            Lemma::Torus => "torus",
            Lemma::RankInvariance => "rank-invariance",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaVerdict {
    pub lemma: Lemma,
    pub instance: String,
    pub passed: bool,
    /// Number of individual identities checked.
    pub checks: usize,
    pub counterexample: Option<String>,
    pub notes: Vec<String>,
    pub seed: Option<u64>,
}

impl LemmaVerdict {
    pub fn new(lemma: Lemma, instance: String) -> Self {
        LemmaVerdict {
            lemma,
            instance,
            passed: true,
            checks: 0,
            counterexample: None,
            notes: Vec::new(),
            seed: None,
        }
    }

    /// Records one check; the first failure becomes the counterexample.
    pub(crate) fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.passed = false;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    pub(crate) fn note(&mut self, note: String) {
        self.notes.push(note);
    }
}

impl fmt::Display for LemmaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} [{}] ({} checks)",
            self.lemma, self.instance, self.checks
        )?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}
