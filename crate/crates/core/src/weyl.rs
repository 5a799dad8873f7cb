//! Weyl group elements, reduced words and convex orders of positive roots.
//!
//! An element is stored as its integer matrix on the root lattice in
//! simple-root coordinates: column `j` holds `w(alpha_j)`. Two elements are
//! equal when their matrices are; a reduced word, when present, is metadata.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::cartan::{RootSystem, RootVector};
use crate::exactla::{self, IntMatrix};
use crate::{Error, Result};

/// Enumeration guard for [`enumerate_group`]: the order of `W(E6)`.
pub const DEFAULT_GROUP_GUARD: u128 = 51_840;

/// Sequence of simple-reflection indices whose product has length equal to
/// the number of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord(Vec::new())
    }

    /// Checks reducedness against `rs`.
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        convex_order(rs, &letters)?;
        Ok(ReducedWord(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters as Bourbaki indices (1-based).
    pub fn to_bourbaki(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
    word: Option<ReducedWord>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        WeylElement {
            rank: n,
            matrix,
            word: Some(ReducedWord::empty()),
        }
    }

    /// Product `s_{l_1} ... s_{l_k}` of arbitrary letters, without a word.
    pub fn product(rs: &RootSystem, letters: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(rs.rank());
        w.word = None;
        for &i in letters {
            w = w.compose(&simple_reflection(rs, i)?);
        }
        Ok(w)
    }

    /// Product of a reduced word, carrying that word.
    pub fn from_word(rs: &RootSystem, word: ReducedWord) -> Result<Self> {
        let mut w = Self::product(rs, word.letters())?;
        w.word = Some(word);
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Row-major matrix; column `j` is `w(alpha_j)`.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i * self.rank + j]
    }

    pub fn word(&self) -> Option<&ReducedWord> {
        self.word.as_ref()
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    pub fn apply_coords(&self, v: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[i * n + j] * v[j]).sum())
            .collect()
    }

    pub fn apply(&self, v: &RootVector) -> RootVector {
        RootVector::new(self.apply_coords(v.coords()))
    }

    /// `self * other` (apply `other` first). The result carries no word.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.matrix[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    matrix[i * n + j] += a * other.matrix[k * n + j];
                }
            }
        }
        WeylElement {
            rank: n,
            matrix,
            word: None,
        }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|b| self.apply(b).is_negative())
            .count()
    }

    /// `w(alpha_i) < 0`, i.e. `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.rank;
        (0..n).any(|r| self.matrix[r * n + i] < 0)
    }

    /// Reduced word obtained by stripping the smallest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> ReducedWord {
        if let Some(w) = &self.word {
            return w.clone();
        }
        let mut cur = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| cur.has_right_descent(i)) {
            cur = cur.compose(&simple_reflection(rs, i).expect("index in range"));
            rev.push(i);
        }
        rev.reverse();
        ReducedWord(rev)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let mut letters = self.reduced_word(rs).0;
        letters.reverse();
        let word = ReducedWord(letters);
        WeylElement::from_word(rs, word).expect("reversed reduced word")
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64(self.rank, self.rank, &self.matrix)
    }

    fn with_word(mut self, word: ReducedWord) -> Self {
        self.word = Some(word);
        self
    }
}

/// `s_i(v) = v - <v, alpha_i^vee> alpha_i`.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<WeylElement> {
    let n = rs.rank();
    check_index(i, n)?;
    let mut matrix = vec![0; n * n];
    for j in 0..n {
        matrix[j * n + j] = 1;
        matrix[i * n + j] -= rs.datum().entry(i, j);
    }
    Ok(WeylElement {
        rank: n,
        matrix,
        word: Some(ReducedWord(vec![i])),
    })
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    Ok(())
}

fn pick(candidates: &[usize], rng: &mut Option<ChaCha8Rng>) -> usize {
    match rng {
        None => candidates[0],
        Some(r) => candidates[(r.next_u64() % candidates.len() as u64) as usize],
    }
}

/// Longest element of the parabolic subgroup generated by `support`.
///
/// Without a seed, the smallest ascent is appended at each step, which makes
/// the word deterministic. With a seed the ascent is chosen at random, giving
/// other reduced words of the same element.
pub fn longest_element(
    rs: &RootSystem,
    support: &[usize],
    seed: Option<u64>,
) -> Result<WeylElement> {
    let n = rs.rank();
    for &i in support {
        check_index(i, n)?;
    }
    let mut support: Vec<usize> = support.to_vec();
    support.sort_unstable();
    support.dedup();
    let reflections: Vec<WeylElement> = (0..n)
        .map(|i| simple_reflection(rs, i))
        .collect::<Result<_>>()?;
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut w = WeylElement::identity(n);
    let mut letters = Vec::new();
    loop {
        let ascents: Vec<usize> = support
            .iter()
            .copied()
            .filter(|&i| !w.has_right_descent(i))
            .collect();
        if ascents.is_empty() {
            break;
        }
        let i = pick(&ascents, &mut rng);
        w = w.compose(&reflections[i]);
        letters.push(i);
    }
    Ok(w.with_word(ReducedWord(letters)))
}

/// Reduced word `(j_1..j_k, i_1..i_h)` of `w0` whose last `h` letters are the
/// word of `w0_levi`. Also returns `wbar = s_{j_1}..s_{j_k}` with its word.
pub fn coset_factorize(
    rs: &RootSystem,
    w0_levi: &WeylElement,
    seed: Option<u64>,
) -> Result<(WeylElement, ReducedWord)> {
    let n = rs.rank();
    let levi_word = w0_levi
        .word()
        .cloned()
        .unwrap_or_else(|| w0_levi.reduced_word(rs));
    let reflections: Vec<WeylElement> = (0..n)
        .map(|i| simple_reflection(rs, i))
        .collect::<Result<_>>()?;
    let mut rng = seed.map(|s| ChaCha8Rng::seed_from_u64(s ^ 0x9e37_79b9_7f4a_7c15));
    // Grow x = s_j ... w0_levi on the left while tracking y = x^{-1};
    // l(s_j x) > l(x) exactly when y(alpha_j) > 0.
    let mut y = w0_levi.inverse(rs);
    let mut prefix_rev = Vec::new();
    loop {
        let ascents: Vec<usize> = (0..n).filter(|&j| !y.has_right_descent(j)).collect();
        if ascents.is_empty() {
            break;
        }
        let j = pick(&ascents, &mut rng);
        y = y.compose(&reflections[j]);
        prefix_rev.push(j);
    }
    prefix_rev.reverse();
    let wbar = WeylElement::from_word(rs, ReducedWord(prefix_rev.clone()))?;
    let k = wbar.length(rs);
    let h = w0_levi.length(rs);
    if k != prefix_rev.len() || h != levi_word.len() || k + h != rs.num_positive() {
        return Err(Error::Internal(format!(
            "coset factorization is not length additive: k = {k}, h = {h}, N = {}",
            rs.num_positive()
        )));
    }
    let mut full = prefix_rev;
    full.extend_from_slice(levi_word.letters());
    let w0 = WeylElement::product(rs, &full)?;
    if w0.length(rs) != rs.num_positive() {
        return Err(Error::Internal(
            "factorized word is not a word for w0".into(),
        ));
    }
    Ok((wbar, ReducedWord(full)))
}

/// Reading of the Levi roots `beta^1_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    /// `beta^1_t = s_{i_1}..s_{i_{t-1}}(alpha_{i_t})`, inside the Levi root system.
    #[default]
    LeviInternal,
    /// `beta^1_t = wbar s_{i_1}..s_{i_{t-1}}(alpha_{i_t})`, the tail of the full order.
    Prefixed,
}

impl Convention {
    pub const BOTH: [Convention; 2] = [Convention::LeviInternal, Convention::Prefixed];

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::LeviInternal => "levi-internal",
            Convention::Prefixed => "literal-paper",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "levi-internal" => Ok(Convention::LeviInternal),
            "literal-paper" | "prefixed" => Ok(Convention::Prefixed),
            other => Err(format!(
                "unknown convention {other:?}; expected levi-internal or literal-paper"
            )),
        }
    }
}

/// `beta_t = s_{l_1}..s_{l_{t-1}}(alpha_{l_t})` for the letters `l` of a word.
///
/// Fails with [`Error::NotReduced`] as soon as some `beta_t` is negative.
pub fn convex_order(rs: &RootSystem, letters: &[usize]) -> Result<Vec<RootVector>> {
    let n = rs.rank();
    let mut prefix = WeylElement::identity(n);
    let mut out = Vec::with_capacity(letters.len());
    for &i in letters {
        check_index(i, n)?;
        let beta = prefix.apply(&RootVector::simple(n, i));
        if !beta.is_positive() {
            return Err(Error::NotReduced(letters.to_vec()));
        }
        out.push(beta);
        prefix = prefix.compose(&simple_reflection(rs, i)?);
    }
    Ok(out)
}

/// Parabolic datum for a subset of simple roots.
#[derive(Debug, Clone)]
pub struct ParabolicDatum {
    rs: RootSystem,
    levi: Vec<usize>,
    levi_positive_roots: Vec<RootVector>,
    w0: WeylElement,
    w0_levi: WeylElement,
    wbar: WeylElement,
    word: ReducedWord,
}

impl ParabolicDatum {
    pub fn new(rs: &RootSystem, levi: &[usize], seed: Option<u64>) -> Result<Self> {
        let n = rs.rank();
        let mut levi = levi.to_vec();
        levi.sort_unstable();
        levi.dedup();
        for &i in &levi {
            check_index(i, n)?;
        }
        let all: Vec<usize> = (0..n).collect();
        let w0 = longest_element(rs, &all, seed)?;
        let w0_levi = longest_element(rs, &levi, seed)?;
        let (wbar, word) = coset_factorize(rs, &w0_levi, seed)?;
        if wbar.compose(&w0_levi) != w0 {
            return Err(Error::Internal("w0 != wbar * w0_levi".into()));
        }
        Ok(ParabolicDatum {
            levi_positive_roots: rs.positive_roots_in(&levi),
            rs: rs.clone(),
            levi,
            w0,
            w0_levi,
            wbar,
            word,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// The subset of simple roots, sorted, 0-based.
    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    pub fn levi_positive_roots(&self) -> &[RootVector] {
        &self.levi_positive_roots
    }

    pub fn n(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.rs.num_positive()
    }

    pub fn h(&self) -> usize {
        self.levi_positive_roots.len()
    }

    pub fn k(&self) -> usize {
        self.num_positive() - self.h()
    }

    pub fn w0(&self) -> &WeylElement {
        &self.w0
    }

    pub fn w0_levi(&self) -> &WeylElement {
        &self.w0_levi
    }

    pub fn wbar(&self) -> &WeylElement {
        &self.wbar
    }

    /// The factorized word of `w0`: `k` letters of `wbar`, then `h` of `w0_levi`.
    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn levi_word(&self) -> ReducedWord {
        ReducedWord(self.word.letters()[self.k()..].to_vec())
    }

    pub fn wbar_word(&self) -> ReducedWord {
        ReducedWord(self.word.letters()[..self.k()].to_vec())
    }
}

/// Convex order of `R+` and its Levi / complement sublists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSequence {
    pub full: Vec<RootVector>,
    pub levi: Vec<RootVector>,
    pub complement: Vec<RootVector>,
    pub convention: Convention,
}

impl BetaSequence {
    /// Whether every Levi root lies in the Levi root system.
    pub fn levi_inside(&self, pd: &ParabolicDatum) -> bool {
        self.levi
            .iter()
            .all(|b| pd.levi_positive_roots().contains(b))
    }
}

pub fn beta_sequence(pd: &ParabolicDatum, convention: Convention) -> Result<BetaSequence> {
    let full = convex_order(&pd.rs, pd.word.letters())?;
    let k = pd.k();
    let complement = full[..k].to_vec();
    let levi = match convention {
        Convention::LeviInternal => convex_order(&pd.rs, pd.levi_word().letters())?,
        Convention::Prefixed => full[k..].to_vec(),
    };
    Ok(BetaSequence {
        full,
        levi,
        complement,
        convention,
    })
}

/// Rank over the rationals of `w0 - w0_levi` acting on the root lattice.
pub fn rank_w0_minus_w0levi(pd: &ParabolicDatum) -> usize {
    let n = pd.n();
    let diff: Vec<i64> = pd
        .w0
        .matrix()
        .iter()
        .zip(pd.w0_levi.matrix())
        .map(|(a, b)| a - b)
        .collect();
    exactla::rank_rational(&IntMatrix::from_i64(n, n, &diff))
}

/// Breadth-first enumeration of `W`; every element carries a reduced word
/// (the shortlex-first one for generators in index order).
pub fn enumerate_group(rs: &RootSystem, guard: u128) -> Result<GroupElements> {
    let order = rs.cartan_type().weyl_group_order();
    if order > guard {
        return Err(Error::GuardExceeded { order, guard });
    }
    let n = rs.rank();
    let generators = (0..n)
        .map(|i| simple_reflection(rs, i))
        .collect::<Result<_>>()?;
    let start = WeylElement::identity(n);
    let mut seen = BTreeSet::new();
    seen.insert(start.matrix.clone());
    Ok(GroupElements {
        generators,
        seen,
        queue: VecDeque::from([start]),
    })
}

pub struct GroupElements {
    generators: Vec<WeylElement>,
    seen: BTreeSet<Vec<i64>>,
    queue: VecDeque<WeylElement>,
}

impl Iterator for GroupElements {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        let w = self.queue.pop_front()?;
        let letters = w.word.as_ref().map(|r| r.0.clone()).unwrap_or_default();
        for (i, g) in self.generators.iter().enumerate() {
            let next = w.compose(g);
            if self.seen.insert(next.matrix.clone()) {
                let mut word = letters.clone();
                word.push(i);
                self.queue.push_back(next.with_word(ReducedWord(word)));
            }
        }
        Some(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanType, Family};

    fn rs(label: &str) -> RootSystem {
        RootSystem::of_type(label.parse::<CartanType>().unwrap())
    }

    fn rv(v: &[i64]) -> RootVector {
        RootVector::new(v.to_vec())
    }

    #[test]
    fn simple_reflection_examples() {
        let a2 = rs("A2");
        let s1 = simple_reflection(&a2, 0).unwrap();
        assert_eq!(s1.apply(&rv(&[0, 1])), rv(&[1, 1]));
        assert!(s1.compose(&s1).is_identity());
        let a1 = rs("A1");
        assert_eq!(
            simple_reflection(&a1, 0).unwrap().apply(&rv(&[1])),
            rv(&[-1])
        );
        assert_eq!(
            simple_reflection(&a2, 2).unwrap_err(),
            Error::IndexOutOfRange { index: 2, rank: 2 }
        );
    }

    #[test]
    fn lengths() {
        let a2 = rs("A2");
        assert_eq!(WeylElement::identity(2).length(&a2), 0);
        assert_eq!(longest_element(&a2, &[0, 1], None).unwrap().length(&a2), 3);
        let b2 = rs("B2");
        assert_eq!(longest_element(&b2, &[0, 1], None).unwrap().length(&b2), 4);
    }

    #[test]
    fn longest_element_examples() {
        let a2 = rs("A2");
        let w0 = longest_element(&a2, &[0, 1], None).unwrap();
        assert_eq!(w0.word().unwrap().letters(), &[0, 1, 0]);
        let e = longest_element(&a2, &[], None).unwrap();
        assert!(e.is_identity() && e.word().unwrap().is_empty());
        let s1 = longest_element(&a2, &[0], None).unwrap();
        assert_eq!(s1, simple_reflection(&a2, 0).unwrap());
        assert_eq!(s1.word().unwrap().letters(), &[0]);
    }

    #[test]
    fn coset_factorization_a2() {
        let a2 = rs("A2");
        let pd = ParabolicDatum::new(&a2, &[0], None).unwrap();
        assert_eq!(pd.wbar_word().letters(), &[0, 1]);
        assert_eq!(pd.levi_word().letters(), &[0]);
        assert_eq!(pd.word().letters(), &[0, 1, 0]);
        let full = ParabolicDatum::new(&a2, &[0, 1], None).unwrap();
        assert!(full.wbar_word().is_empty());
        assert_eq!(full.word(), full.w0().word().unwrap());
        let borel = ParabolicDatum::new(&a2, &[], None).unwrap();
        assert!(borel.levi_word().is_empty());
        assert_eq!(borel.word(), borel.w0().word().unwrap());
    }

    #[test]
    fn beta_examples() {
        let a2 = rs("A2");
        assert_eq!(
            convex_order(&a2, &[0, 1, 0]).unwrap(),
            [rv(&[1, 0]), rv(&[1, 1]), rv(&[0, 1])]
        );
        let pd = ParabolicDatum::new(&a2, &[0], None).unwrap();
        let inner = beta_sequence(&pd, Convention::LeviInternal).unwrap();
        assert_eq!(inner.levi, [rv(&[1, 0])]);
        assert!(inner.levi_inside(&pd));
        let prefixed = beta_sequence(&pd, Convention::Prefixed).unwrap();
        assert_eq!(prefixed.levi, [rv(&[0, 1])]);
        assert!(!prefixed.levi_inside(&pd));
        assert_eq!(
            convex_order(&a2, &[0, 0]).unwrap_err(),
            Error::NotReduced(vec![0, 0])
        );
    }

    #[test]
    fn rank_of_w0_minus_levi() {
        let a2 = rs("A2");
        assert_eq!(
            rank_w0_minus_w0levi(&ParabolicDatum::new(&a2, &[0, 1], None).unwrap()),
            0
        );
        assert_eq!(
            rank_w0_minus_w0levi(&ParabolicDatum::new(&a2, &[], None).unwrap()),
            1
        );
        let a1 = rs("A1");
        assert_eq!(
            rank_w0_minus_w0levi(&ParabolicDatum::new(&a1, &[], None).unwrap()),
            1
        );
    }

    #[test]
    fn group_orders() {
        for (label, order) in [
            ("A1", 2),
            ("A2", 6),
            ("B2", 8),
            ("G2", 12),
            ("A3", 24),
            ("B3", 48),
        ] {
            let r = rs(label);
            let elems: Vec<_> = enumerate_group(&r, DEFAULT_GROUP_GUARD).unwrap().collect();
            assert_eq!(elems.len(), order, "{label}");
            for w in &elems {
                assert_eq!(w.length(&r), w.word().unwrap().len());
            }
        }
        let e7 = RootSystem::of_type(CartanType::new(Family::E, 7).unwrap());
        assert!(matches!(
            enumerate_group(&e7, DEFAULT_GROUP_GUARD),
            Err(Error::GuardExceeded {
                order: 2_903_040,
                ..
            })
        ));
    }

    #[test]
    fn seeded_words_vary_but_agree() {
        let a3 = rs("A3");
        let all = [0, 1, 2];
        let base = longest_element(&a3, &all, None).unwrap();
        let mut words = BTreeSet::new();
        for seed in 0..20 {
            let w = longest_element(&a3, &all, Some(seed)).unwrap();
            assert_eq!(w, base);
            assert_eq!(w.word().unwrap().len(), 6);
            words.insert(w.word().unwrap().clone());
        }
        assert!(words.len() >= 3);
    }

    #[test]
    fn reduced_word_and_inverse() {
        let b3 = rs("B3");
        for w in enumerate_group(&b3, DEFAULT_GROUP_GUARD).unwrap() {
            let bare = WeylElement::product(&b3, w.word().unwrap().letters()).unwrap();
            let word = bare.reduced_word(&b3);
            assert_eq!(word.len(), w.length(&b3));
            assert!(w.compose(&w.inverse(&b3)).is_identity());
        }
    }
}
