//! The skew form `T` on `V+ (+) V0 (+) V-` and the degree report.
//!
//! With `beta_1..beta_N` the convex order of a reduced word of `w0` and
//! `beta^1_1..beta^1_h` the Levi roots,
//!
//! ```text
//!     A[i][j]      = (beta_i | beta_j)          i < j, skew
//!     A_levi[i][j] = (beta^1_i | beta^1_j)      i < j, skew
//!     B[i][j]      = (omega_i | beta_j)         n x N
//!     B_levi[i][j] = (omega_i | beta^1_j)       n x h
//!
//!         | A_levi   -B_levi^t    0  |   V+  (h)
//!     T = | B_levi       0       -B  |   V0  (n)
//!         |   0         B^t      -A  |   V-  (N)
//! ```
//!
//! For a good integer `l`, `rank T mod l = l(w0) + l(w0_levi) + rk(w0 - w0_levi)`
//! and the degree of the parabolic quantum group is `l^(rank/2)`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::cartan::{CartanType, RootSystem, RootVector};
use crate::exactla::{self, IntMatrix};
use crate::weyl::{self, BetaSequence, Convention, ParabolicDatum, ReducedWord};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMatrixBundle {
    pub a: IntMatrix,
    pub a_levi: IntMatrix,
    pub b: IntMatrix,
    pub b_levi: IntMatrix,
    pub t: IntMatrix,
    h: usize,
    n: usize,
    num_positive: usize,
}

impl DegreeMatrixBundle {
    /// Dimensions of `V+`, `V0`, `V-`.
    pub fn block_dims(&self) -> (usize, usize, usize) {
        (self.h, self.n, self.num_positive)
    }

    /// Rows of `T` for `V+` and `V-`: the operator `T1 = M_levi (+) M`.
    pub fn t1(&self) -> IntMatrix {
        let (h, n, big_n) = self.block_dims();
        self.t
            .row_block(0..h)
            .vstack(&self.t.row_block(h + n..h + n + big_n))
    }

    /// Middle block row `(B_levi, 0, -B)`.
    pub fn middle(&self) -> IntMatrix {
        let (h, n, _) = self.block_dims();
        self.t.row_block(h..h + n)
    }
}

fn skew_gram(rs: &RootSystem, roots: &[RootVector]) -> IntMatrix {
    let m = roots.len();
    IntMatrix::from_fn(m, m, |i, j| match i.cmp(&j) {
        core::cmp::Ordering::Less => rs.inner_product(&roots[i], &roots[j]),
        core::cmp::Ordering::Greater => -rs.inner_product(&roots[j], &roots[i]),
        core::cmp::Ordering::Equal => 0,
    })
}

fn weight_block(rs: &RootSystem, roots: &[RootVector]) -> IntMatrix {
    IntMatrix::from_fn(rs.rank(), roots.len(), |i, j| {
        rs.weight_pairing(i, &roots[j])
    })
}

pub fn assemble(pd: &ParabolicDatum, betas: &BetaSequence) -> Result<DegreeMatrixBundle> {
    let rs = pd.root_system();
    let (h, n, big_n) = (pd.h(), pd.n(), pd.num_positive());
    if betas.full.len() != big_n || betas.levi.len() != h || betas.complement.len() != pd.k() {
        return Err(Error::Internal(alloc::format!(
            "beta lists of lengths {}/{}/{} do not fit N = {big_n}, h = {h}",
            betas.full.len(),
            betas.levi.len(),
            betas.complement.len()
        )));
    }
    let a = skew_gram(rs, &betas.full);
    let a_levi = skew_gram(rs, &betas.levi);
    let b = weight_block(rs, &betas.full);
    let b_levi = weight_block(rs, &betas.levi);

    let dim = h + n + big_n;
    let mut t = IntMatrix::zeros(dim, dim);
    t.put_block(0, 0, &a_levi);
    t.put_block(0, h, &b_levi.transpose().neg());
    t.put_block(h, 0, &b_levi);
    t.put_block(h, h + n, &b.neg());
    t.put_block(h + n, h, &b.transpose());
    t.put_block(h + n, h + n, &a.neg());
    Ok(DegreeMatrixBundle {
        a,
        a_levi,
        b,
        b_levi,
        t,
        h,
        n,
        num_positive: big_n,
    })
}

/// How `rank_t_mod_l` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankMode {
    /// Field rank over `F_l`, `l` prime.
    Field,
    /// Count of Smith invariant factors coprime to a composite `l`.
    Extrapolated,
}

impl fmt::Display for RankMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankMode::Field => "field",
            RankMode::Extrapolated => "extrapolated",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub cartan_type: CartanType,
    /// 0-based indices of the Levi simple roots.
    pub levi: Vec<usize>,
    pub l: u64,
    pub good: bool,
    pub num_positive: usize,
    pub h: usize,
    pub k: usize,
    pub n: usize,
    pub len_w0: usize,
    pub len_w0_levi: usize,
    /// `rk(w0 - w0_levi)`.
    pub s: usize,
    pub rank_t_rational: usize,
    pub rank_t_mod_l: usize,
    pub rank_mode: RankMode,
    pub delta: usize,
    pub degree_exponent: usize,
    pub deg_tau_exponent: usize,
    pub identity_ok: bool,
    pub convention: Convention,
    pub word: ReducedWord,
}

impl DegreeReport {
    /// `rank T mod l == delta`.
    pub fn rank_matches(&self) -> bool {
        self.rank_t_mod_l == self.delta
    }

    /// A good `l` whose rank disagrees with `delta`.
    pub fn discrepancy(&self) -> bool {
        self.good && !self.rank_matches()
    }

    /// `l^(delta/2)`.
    pub fn degree(&self) -> BigUint {
        BigUint::from(self.l).pow(self.degree_exponent as u32)
    }

    /// `l^(n - s)`, the degree of the central character map.
    pub fn deg_tau(&self) -> BigUint {
        BigUint::from(self.l).pow(self.deg_tau_exponent as u32)
    }

    pub fn t_dim(&self) -> usize {
        self.h + self.n + self.num_positive
    }
}

pub(crate) fn check_modulus(l: u64) -> Result<()> {
    if l < 3 || l.is_multiple_of(2) {
        return Err(Error::InvalidModulus(l));
    }
    Ok(())
}

/// Rank of `m` modulo `l`: field rank for prime `l`, otherwise the number of
/// invariant factors coprime to `l`.
pub fn rank_mod_l(m: &IntMatrix, l: u64) -> (usize, RankMode) {
    match exactla::rank_mod_p(m, l) {
        Ok(r) => (r, RankMode::Field),
        Err(_) => (exactla::rank_coprime_to(m, l), RankMode::Extrapolated),
    }
}

/// Report for an already built parabolic datum, using its factorized word.
pub fn report_for(pd: &ParabolicDatum, l: u64, convention: Convention) -> Result<DegreeReport> {
    check_modulus(l)?;
    let rs = pd.root_system();
    let betas = weyl::beta_sequence(pd, convention)?;
    let bundle = assemble(pd, &betas)?;
    let rank_t_rational = exactla::rank_rational(&bundle.t);
    let (rank_t_mod_l, rank_mode) = rank_mod_l(&bundle.t, l);
    let len_w0 = pd.w0().length(rs);
    let len_w0_levi = pd.w0_levi().length(rs);
    let s = weyl::rank_w0_minus_w0levi(pd);
    let (n, big_n, h) = (pd.n(), pd.num_positive(), pd.h());
    let delta = len_w0 + len_w0_levi + s;
    Ok(DegreeReport {
        cartan_type: rs.cartan_type(),
        levi: pd.levi().to_vec(),
        l,
        good: rs.is_good(l),
        num_positive: big_n,
        h,
        k: pd.k(),
        n,
        len_w0,
        len_w0_levi,
        s,
        rank_t_rational,
        rank_t_mod_l,
        rank_mode,
        delta,
        degree_exponent: delta / 2,
        deg_tau_exponent: n - s,
        identity_ok: h + big_n + n == delta + (n - s),
        convention,
        word: pd.word().clone(),
    })
}

pub fn degree_report(
    ty: CartanType,
    levi: &[usize],
    l: u64,
    convention: Convention,
    word_seed: Option<u64>,
) -> Result<DegreeReport> {
    check_modulus(l)?;
    let rs = RootSystem::of_type(ty);
    let pd = ParabolicDatum::new(&rs, levi, word_seed)?;
    report_for(&pd, l, convention)
}

/// Subset with bit `i` set for each Levi simple root `i`.
pub fn subset_from_mask(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

/// One report per subset, ordered by bitmask.
pub fn sweep_table(
    ty: CartanType,
    l: u64,
    convention: Convention,
    word_seed: Option<u64>,
) -> Result<Vec<DegreeReport>> {
    check_modulus(l)?;
    let rs = RootSystem::of_type(ty);
    let n = rs.rank();
    (0..1u64 << n)
        .map(|mask| {
            let pd = ParabolicDatum::new(&rs, &subset_from_mask(n, mask), word_seed)?;
            report_for(&pd, l, convention)
        })
        .collect()
}
