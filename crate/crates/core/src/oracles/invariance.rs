use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::cartan::RootSystem;
use crate::degree;
use crate::oracles::{Lemma, LemmaVerdict};
use crate::weyl::{Convention, ParabolicDatum, ReducedWord};
use crate::Result;

/// Word seeds (`None` first, then `Some(1)`, `Some(2)`, ...) giving up to
/// `wanted` pairwise distinct factorized words of `w0`. Stops after
/// `16 * wanted` attempts, so types with fewer reduced words yield fewer seeds.
pub fn distinct_word_seeds(
    rs: &RootSystem,
    levi: &[usize],
    wanted: usize,
) -> Result<Vec<(Option<u64>, ParabolicDatum)>> {
    let mut seen: BTreeSet<ReducedWord> = BTreeSet::new();
    let mut out = Vec::new();
    let seeds = core::iter::once(None).chain((1..).map(Some));
    for seed in seeds.take(16 * wanted.max(1)) {
        let pd = ParabolicDatum::new(rs, levi, seed)?;
        if seen.insert(pd.word().clone()) {
            out.push((seed, pd));
            if out.len() == wanted {
                break;
            }
        }
    }
    Ok(out)
}

/// Recomputes `rank T mod l` for `trials` distinct reduced words and both
/// Levi conventions; passes when every rank agrees.
pub fn rank_invariance(
    rs: &RootSystem,
    levi: &[usize],
    l: u64,
    trials: usize,
) -> Result<LemmaVerdict> {
    let shown: Vec<usize> = levi.iter().map(|i| i + 1).collect();
    let mut verdict = LemmaVerdict::new(
        Lemma::RankInvariance,
        format!("{} levi={shown:?} l={l} trials={trials}", rs.cartan_type()),
    );
    let words = distinct_word_seeds(rs, levi, trials)?;
    let mut reference: Option<usize> = None;
    for (seed, pd) in &words {
        for convention in Convention::BOTH {
            let report = degree::report_for(pd, l, convention)?;
            let rank = report.rank_t_mod_l;
            let expected = *reference.get_or_insert(rank);
            verdict.check(rank == expected, || {
                format!(
                    "word {} (seed {seed:?}, {convention}) gives rank {rank}, first word gave {expected}",
                    pd.word()
                )
            });
        }
    }
    if words.len() < trials {
        verdict.note(format!(
            "found {} of {trials} requested distinct factorized words",
            words.len()
        ));
    }
    Ok(verdict)
}
