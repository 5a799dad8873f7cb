//! Cartan data and root systems of the simple Lie algebras.
//!
//! Conventions: `c_ij = <alpha_i^vee, alpha_j>`, so `s_i(alpha_j) = alpha_j - c_ij alpha_i`,
//! and `(alpha_i | alpha_j) = d_i c_ij` with `d_i` minimal (short roots have `d_i = 1`).
//! Bourbaki numbering throughout:
//!
//! | type  | long / short                  | symmetrizers          |
//! |-------|-------------------------------|-----------------------|
//! | `B_n` | `alpha_n` short               | `(2, .., 2, 1)`       |
//! | `C_n` | `alpha_n` long                | `(1, .., 1, 2)`       |
//! | `D_n` | `alpha_{n-2}` is the branch node | all 1              |
//! | `E_n` | `alpha_2` attached to `alpha_4`  | all 1              |
//! | `F_4` | `alpha_1, alpha_2` long       | `(2, 2, 1, 1)`        |
//! | `G_2` | `alpha_1` short               | `(1, 3)`              |

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use num_integer::Integer;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
    }

    fn allowed_ranks(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B | Family::C => "n >= 2",
            Family::D => "n >= 3",
            Family::E => "n in {6, 7, 8}",
            Family::F => "n = 4",
            Family::G => "n = 2",
        }
    }

    fn admits(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated simple type such as `A3` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits(rank) {
            return Err(Error::InvalidType {
                family: family.letter(),
                rank,
                allowed: family.allowed_ranks(),
            });
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Order of the Weyl group, from the classical formulas.
    pub fn weyl_group_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Number of positive roots, from the classical formulas.
    pub fn num_positive_roots(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    ty: CartanType,
    cartan: Vec<i64>,
    symmetrizers: Vec<i64>,
}

impl CartanDatum {
    /// Bourbaki-numbered Cartan matrix with minimal symmetrizers.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::from_type(CartanType::new(family, rank)?))
    }

    pub fn from_type(ty: CartanType) -> Self {
        let n = ty.rank;
        let mut c = vec![0i64; n * n];
        let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
            c[i * n + j] = cij;
            c[j * n + i] = cji;
        };
        match ty.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1, -1, -1);
                }
                if ty.family == Family::B {
                    link(n - 2, n - 1, -1, -2);
                } else if ty.family == Family::C {
                    link(n - 2, n - 1, -2, -1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -3, -1),
        }
        for i in 0..n {
            c[i * n + i] = 2;
        }
        let symmetrizers = match ty.family {
            Family::A | Family::D | Family::E => vec![1; n],
            Family::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            }
            Family::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            }
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
        };
        CartanDatum {
            ty,
            cartan: c,
            symmetrizers,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn family(&self) -> Family {
        self.ty.family
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `c_ij`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank() + j]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// Rows of the Cartan matrix.
    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.cartan.chunks(self.rank())
    }

    /// `(alpha_i | alpha_j) = d_i c_ij`.
    pub fn form(&self, i: usize, j: usize) -> i64 {
        self.symmetrizers[i] * self.entry(i, j)
    }

    /// `<v, alpha_i^vee>` for `v` in simple-root coordinates.
    pub fn coroot_pairing(&self, v: &[i64], i: usize) -> i64 {
        let n = self.rank();
        (0..n).map(|j| self.cartan[i * n + j] * v[j]).sum()
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| self.coroot_pairing(v, i))
            .collect()
    }
}

/// Integer vector in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    /// The simple root `alpha_i`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Nonzero with all coordinates nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x <= 0)
    }

    /// Indices of the simple roots with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i)
    }

    pub fn scaled(&self, k: i64) -> RootVector {
        RootVector(self.0.iter().map(|x| x * k).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &RootVector {
    type Output = RootVector;

    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;

    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;

    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }
}

/// Positive roots of a simple type, sorted by height and then by coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    positive: Vec<RootVector>,
    index: BTreeMap<RootVector, usize>,
    highest: RootVector,
}

impl RootSystem {
    /// Closes the simple roots under the simple reflections.
    pub fn new(datum: CartanDatum) -> Self {
        let n = datum.rank();
        let mut seen: BTreeSet<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
        let mut frontier: Vec<RootVector> = seen.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for root in &frontier {
                for i in 0..n {
                    let image = reflect(&datum, i, root);
                    if image.is_positive() && seen.insert(image.clone()) {
                        next.push(image);
                    }
                }
            }
            frontier = next;
        }
        let mut positive: Vec<RootVector> = seen.into_iter().collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let index = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let highest = positive.last().cloned().expect("rank >= 1");
        RootSystem {
            datum,
            positive,
            index,
            highest,
        }
    }

    pub fn of_type(ty: CartanType) -> Self {
        Self::new(CartanDatum::from_type(ty))
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn cartan_type(&self) -> CartanType {
        self.datum.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    /// `N`, the number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// The highest root; its coordinates are the coefficients `a_i`.
    pub fn highest_root(&self) -> &RootVector {
        &self.highest
    }

    pub fn index_of(&self, root: &RootVector) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&-v)
    }

    /// Positive roots whose support lies in `subset`.
    pub fn positive_roots_in(&self, subset: &[usize]) -> Vec<RootVector> {
        self.positive
            .iter()
            .filter(|r| r.support().all(|i| subset.contains(&i)))
            .cloned()
            .collect()
    }

    /// The invariant form on the root lattice, `(alpha_i | alpha_j) = d_i c_ij`.
    pub fn inner_product(&self, v: &RootVector, w: &RootVector) -> i64 {
        inner_product_coords(&self.datum, v.coords(), w.coords())
    }

    /// `(omega_i | beta) = d_i b_i` where `beta = sum_j b_j alpha_j`.
    pub fn weight_pairing(&self, i: usize, beta: &RootVector) -> i64 {
        self.datum.symmetrizers[i] * beta.coords()[i]
    }

    pub fn reflect(&self, i: usize, v: &RootVector) -> RootVector {
        reflect(&self.datum, i, v)
    }

    /// `l` is odd, coprime to every highest-root coefficient, and to 3 in type `G`.
    pub fn is_good(&self, l: u64) -> bool {
        if l.is_multiple_of(2) {
            return false;
        }
        if self.datum.family() == Family::G && l.is_multiple_of(3) {
            return false;
        }
        self.highest
            .coords()
            .iter()
            .all(|&a| (a as u64).gcd(&l) == 1)
    }
}

pub(crate) fn inner_product_coords(datum: &CartanDatum, v: &[i64], w: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, &vi) in v.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &wj) in w.iter().enumerate() {
            acc += vi * datum.form(i, j) * wj;
        }
    }
    acc
}

fn reflect(datum: &CartanDatum, i: usize, v: &RootVector) -> RootVector {
    let mut out = v.clone();
    out.0[i] -= datum.coroot_pairing(v.coords(), i);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(CartanDatum::build(f, n).unwrap())
    }

    fn all_types(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for f in Family::ALL {
            for n in 1..=max_rank {
                if let Ok(t) = CartanType::new(f, n) {
                    out.push(t);
                }
            }
        }
        out
    }

    #[test]
    fn rank_one() {
        let d = CartanDatum::build(Family::A, 1).unwrap();
        assert_eq!(d.entry(0, 0), 2);
        assert_eq!(d.symmetrizers(), &[1]);
        let r = RootSystem::new(d);
        assert_eq!(r.positive_roots(), &[RootVector::simple(1, 0)]);
    }

    #[test]
    fn g2_is_symmetrizable() {
        let d = CartanDatum::build(Family::G, 2).unwrap();
        assert_eq!(d.symmetrizers(), &[1, 3]);
        assert_eq!(d.form(0, 1), d.form(1, 0));
        assert_eq!(d.form(1, 1), 6);
    }

    #[test]
    fn invalid_ranks_rejected() {
        for (f, n) in [
            (Family::E, 5),
            (Family::F, 3),
            (Family::G, 3),
            (Family::B, 1),
            (Family::D, 2),
            (Family::A, 0),
        ] {
            let err = CartanDatum::build(f, n).unwrap_err();
            assert!(matches!(err, Error::InvalidType { .. }), "{f}{n}");
        }
        assert!("X3".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
        assert_eq!(
            "b3".parse::<CartanType>().unwrap(),
            CartanType::new(Family::B, 3).unwrap()
        );
    }

    /// Brute-force search for the minimal positive symmetrizer.
    fn minimal_symmetrizer(d: &CartanDatum) -> Vec<i64> {
        let n = d.rank();
        let mut best: Option<Vec<i64>> = None;
        let total = 4usize.pow(n as u32);
        for code in 0..total {
            let cand: Vec<i64> = (0..n).map(|i| 1 + ((code >> (2 * i)) & 3) as i64).collect();
            let ok =
                (0..n).all(|i| (0..n).all(|j| cand[i] * d.entry(i, j) == cand[j] * d.entry(j, i)));
            if ok
                && best
                    .as_ref()
                    .is_none_or(|b| cand.iter().sum::<i64>() < b.iter().sum())
            {
                best = Some(cand);
            }
        }
        best.unwrap()
    }

    #[test]
    fn cartan_axioms_and_minimal_symmetrizers() {
        for ty in all_types(6) {
            let d = CartanDatum::from_type(ty);
            let n = d.rank();
            for i in 0..n {
                assert_eq!(d.entry(i, i), 2);
                for j in 0..n {
                    if i != j {
                        assert!(d.entry(i, j) <= 0);
                        assert_eq!(d.entry(i, j) == 0, d.entry(j, i) == 0);
                    }
                }
            }
            if n <= 6 {
                assert_eq!(d.symmetrizers(), minimal_symmetrizer(&d).as_slice(), "{ty}");
            }
        }
    }

    #[test]
    fn b3_double_bond_at_the_end() {
        let d = CartanDatum::build(Family::B, 3).unwrap();
        assert_eq!(d.entry(1, 2), -1);
        assert_eq!(d.entry(2, 1), -2);
        assert_eq!(d.symmetrizers(), &[2, 2, 1]);
    }

    #[test]
    fn inner_product_examples() {
        let a2 = rs(Family::A, 2);
        let a1 = RootVector::simple(2, 0);
        let a2v = RootVector::simple(2, 1);
        assert_eq!(a2.inner_product(&a1, &a1), 2);
        assert_eq!(a2.inner_product(&a1, &a2v), -1);
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.inner_product(&a2v, &a2v), 6);
    }

    #[test]
    fn weight_pairing_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.weight_pairing(0, &RootVector::simple(2, 0)), 1);
        assert_eq!(a2.weight_pairing(0, &RootVector::new(vec![1, 1])), 1);
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.weight_pairing(1, &RootVector::simple(2, 1)), 3);
    }

    #[test]
    fn small_root_systems() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            a2.positive_roots(),
            &[
                RootVector::new(vec![0, 1]),
                RootVector::new(vec![1, 0]),
                RootVector::new(vec![1, 1])
            ]
        );
        assert_eq!(a2.highest_root().coords(), &[1, 1]);
        let b2 = rs(Family::B, 2);
        assert_eq!(b2.num_positive(), 4);
        assert_eq!(b2.highest_root().coords(), &[1, 2]);
    }

    #[test]
    fn root_counts_match_closed_forms() {
        for ty in all_types(8) {
            let r = RootSystem::of_type(ty);
            assert_eq!(r.num_positive(), ty.num_positive_roots(), "{ty}");
        }
    }

    #[test]
    fn highest_root_coefficients() {
        let table: &[(&str, &[i64])] = &[
            ("A4", &[1, 1, 1, 1]),
            ("B4", &[1, 2, 2, 2]),
            ("C4", &[2, 2, 2, 1]),
            ("D5", &[1, 2, 2, 1, 1]),
            ("E6", &[1, 2, 2, 3, 2, 1]),
            ("E7", &[2, 2, 3, 4, 3, 2, 1]),
            ("E8", &[2, 3, 4, 6, 5, 4, 3, 2]),
            ("F4", &[2, 3, 4, 2]),
            ("G2", &[3, 2]),
        ];
        for (label, coeffs) in table {
            let r = RootSystem::of_type(label.parse().unwrap());
            assert_eq!(r.highest_root().coords(), *coeffs, "{label}");
        }
    }

    #[test]
    fn highest_root_dominates_and_is_long() {
        for ty in all_types(8) {
            let r = RootSystem::of_type(ty);
            let top = r.highest_root();
            assert!(top.coords().iter().all(|&a| a >= 1));
            let long = r.inner_product(top, top);
            for root in r.positive_roots() {
                assert!(top.coords().iter().zip(root.coords()).all(|(a, b)| a >= b));
                assert!(r.inner_product(root, root) <= long);
            }
        }
    }

    #[test]
    fn reflections_permute_roots() {
        for ty in all_types(5) {
            let r = RootSystem::of_type(ty);
            let n = r.rank();
            for i in 0..n {
                for root in r.positive_roots() {
                    let image = r.reflect(i, root);
                    assert!(r.is_root(&image));
                    if image.is_negative() {
                        assert_eq!(root, &RootVector::simple(n, i));
                    }
                }
            }
        }
    }

    /// In simply-laced types and B_n, G_2 the roots are exactly the lattice
    /// vectors whose norm is a root norm; enumerate a box and compare.
    #[test]
    fn roots_match_lattice_norm_enumeration() {
        for label in ["A3", "D4", "B3", "G2"] {
            let r = RootSystem::of_type(label.parse().unwrap());
            let n = r.rank();
            let norms: BTreeSet<i64> = (0..n).map(|i| 2 * r.datum().symmetrizers()[i]).collect();
            let bound = *r.highest_root().coords().iter().max().unwrap();
            let mut found = BTreeSet::new();
            let side = (bound + 1) as usize;
            for code in 1..side.pow(n as u32) {
                let mut c = code;
                let v: Vec<i64> = (0..n)
                    .map(|_| {
                        let x = (c % side) as i64;
                        c /= side;
                        x
                    })
                    .collect();
                let v = RootVector::new(v);
                if norms.contains(&r.inner_product(&v, &v)) {
                    found.insert(v);
                }
            }
            let listed: BTreeSet<RootVector> = r.positive_roots().iter().cloned().collect();
            assert_eq!(found, listed, "{label}");
        }
    }

    #[test]
    fn good_integers() {
        let a3 = rs(Family::A, 3);
        assert!(a3.is_good(5));
        assert!(!a3.is_good(2));
        let g2 = rs(Family::G, 2);
        assert!(!g2.is_good(9));
        assert!(g2.is_good(5));
        assert!(!g2.is_good(3));
        let e8 = RootSystem::of_type("E8".parse().unwrap());
        assert!(!e8.is_good(5));
        assert!(e8.is_good(7));
        let f4 = RootSystem::of_type("F4".parse().unwrap());
        assert!(!f4.is_good(3));
        assert!(f4.is_good(5));
    }

    #[test]
    fn weyl_orders() {
        let cases = [
            ("A2", 6),
            ("B2", 8),
            ("B3", 48),
            ("A3", 24),
            ("F4", 1152),
            ("E6", 51_840),
        ];
        for (label, order) in cases {
            let ty: CartanType = label.parse().unwrap();
            assert_eq!(ty.weyl_group_order(), order);
        }
    }
}
