//! Explicit irreducible representations of quantum tori at a root of unity.
//!
//! For `x_i x_j = e^{S_ij} x_j x_i` with `e` a primitive `l`-th root of unity,
//! reduce `S` modulo `l` to `r` hyperbolic pairs plus a radical. Each pair acts
//! on `C^l` by the clock `Z = diag(t^j)` and shift `X|j> = |j+1>`, which satisfy
//! `Z X = t X Z`; the tensor product over the pairs has dimension `l^r`.
//!
//! Relations are checked exactly with entries in `Z[t]/(t^l - 1)`.
//! Irreducibility is checked numerically: the commutant at `t = exp(2 pi i / l)`
//! must be one-dimensional.

#![allow(clippy::needless_range_loop)]

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::exactla::{self, inv_mod, IntMatrix};
use crate::oracles::{Lemma, LemmaVerdict};
use crate::{Error, Result};

pub const DEFAULT_TORUS_CAP: u128 = 243;
pub const COMMUTANT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSpec {
    s: IntMatrix,
    l: u64,
}

impl TorusSpec {
    pub fn new(s: IntMatrix, l: u64) -> Result<Self> {
        if !s.is_skew_symmetric() {
            return Err(Error::NotSkew);
        }
        if l < 3 || l.is_multiple_of(2) {
            return Err(Error::InvalidModulus(l));
        }
        if !exactla::is_prime(l) {
            return Err(Error::NotPrime(l));
        }
        Ok(TorusSpec { s, l })
    }

    pub fn generators(&self) -> usize {
        self.s.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.s
    }

    pub fn l(&self) -> u64 {
        self.l
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TorusOutcome {
    pub dimension: u128,
    pub rank_mod_l: usize,
    /// Every relation holds exactly in `Z[t]/(t^l - 1)`.
    pub relations_ok: bool,
    pub commutant_dim: usize,
    /// Largest defect of the computed commutant basis.
    pub residual: f64,
}

impl TorusOutcome {
    pub fn consistent(&self, l: u64) -> bool {
        self.relations_ok
            && self.commutant_dim == 1
            && self.residual < COMMUTANT_TOLERANCE
            && self.rank_mod_l.is_multiple_of(2)
            && Some(self.dimension) == (l as u128).checked_pow((self.rank_mod_l / 2) as u32)
    }
}

/// Symplectic basis over `F_l`: returns `Q` (rows indexed by the generators)
/// with `S = Q J Q^t` mod `l`, `J` being `r` standard hyperbolic blocks
/// followed by zeros, together with `r`.
fn symplectic_coordinates(s: &[Vec<u64>], l: u64) -> (Vec<Vec<u64>>, usize) {
    let m = s.len();
    let form = |u: &[u64], v: &[u64]| -> u64 {
        let mut acc = 0u128;
        for i in 0..m {
            if u[i] == 0 {
                continue;
            }
            for j in 0..m {
                acc += u[i] as u128 * s[i][j] as u128 % l as u128 * v[j] as u128;
            }
        }
        (acc % l as u128) as u64
    };
    let mut pool: Vec<Vec<u64>> = (0..m)
        .map(|i| (0..m).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut basis: Vec<Vec<u64>> = Vec::with_capacity(m);
    let mut pairs = 0;
    loop {
        let found = (0..pool.len())
            .flat_map(|a| (a + 1..pool.len()).map(move |b| (a, b)))
            .find(|&(a, b)| form(&pool[a], &pool[b]) != 0);
        let Some((a, b)) = found else { break };
        let f_raw = pool.remove(b);
        let e = pool.remove(a);
        let scale = inv_mod(form(&e, &f_raw), l);
        let f: Vec<u64> = f_raw.iter().map(|x| x * scale % l).collect();
        for w in pool.iter_mut() {
            let wf = form(w, &f);
            let we = form(w, &e);
            for k in 0..m {
                w[k] = (w[k] + (l - wf) * e[k] % l + we * f[k] % l) % l;
            }
        }
        basis.push(e);
        basis.push(f);
        pairs += 1;
    }
    basis.extend(pool);
    // Rows of `basis` form P with P S P^t = J; return Q = P^{-1}.
    (invert_mod(&basis, l), pairs)
}

fn invert_mod(p: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let m = p.len();
    let mut a: Vec<Vec<u64>> = p
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..m).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for col in 0..m {
        let piv = (col..m)
            .find(|&r| a[r][col] != 0)
            .expect("invertible basis change");
        a.swap(col, piv);
        let inv = inv_mod(a[col][col], l);
        for x in a[col].iter_mut() {
            *x = *x * inv % l;
        }
        for r in 0..m {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..2 * m {
                    a[r][c] = (a[r][c] + (l - f) * a[col][c] % l) % l;
                }
            }
        }
    }
    a.into_iter().map(|row| row[m..].to_vec()).collect()
}

/// Element of `Z[t]/(t^l - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CyclicPoly(Vec<i64>);

impl CyclicPoly {
    fn monomial(l: usize, k: usize) -> Self {
        let mut c = vec![0; l];
        c[k % l] = 1;
        CyclicPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn add_assign(&mut self, other: &CyclicPoly) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    fn mul(&self, other: &CyclicPoly) -> CyclicPoly {
        let l = self.0.len();
        let mut out = vec![0; l];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[(i + j) % l] += a * b;
            }
        }
        CyclicPoly(out)
    }

    fn shift(&self, k: usize) -> CyclicPoly {
        let l = self.0.len();
        let mut out = vec![0; l];
        for (i, &a) in self.0.iter().enumerate() {
            out[(i + k) % l] = a;
        }
        CyclicPoly(out)
    }
}

/// Sparse square matrix over `Z[t]/(t^l - 1)`, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
struct PolyMatrix {
    rows: Vec<Vec<(usize, CyclicPoly)>>,
}

impl PolyMatrix {
    fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: Vec<(usize, CyclicPoly)> = Vec::new();
                for (k, a) in row {
                    for (j, b) in &other.rows[*k] {
                        let term = a.mul(b);
                        match acc.iter_mut().find(|(c, _)| c == j) {
                            Some((_, p)) => p.add_assign(&term),
                            None => acc.push((*j, term)),
                        }
                    }
                }
                acc.retain(|(_, p)| !p.is_zero());
                acc.sort_by_key(|(c, _)| *c);
                acc
            })
            .collect();
        PolyMatrix { rows }
    }

    fn times_monomial(&self, k: usize) -> PolyMatrix {
        PolyMatrix {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|(c, p)| (*c, p.shift(k))).collect())
                .collect(),
        }
    }

    /// Column permutation and exponents if every column has exactly one
    /// entry, which must be a monomial `t^k`.
    fn as_monomial(&self, l: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let d = self.rows.len();
        let mut target = vec![usize::MAX; d];
        let mut power = vec![0; d];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, p) in row {
                if target[*c] != usize::MAX {
                    return None;
                }
                let k = (0..l).find(|&k| *p == CyclicPoly::monomial(l, k))?;
                target[*c] = r;
                power[*c] = k;
            }
        }
        target
            .iter()
            .all(|&t| t != usize::MAX)
            .then_some((target, power))
    }
}

/// `prod_k Z^{a_k} X^{b_k}` on `(C^l)^{(x) pairs}`, with the first factor
/// most significant.
fn weyl_operator(l: usize, pairs: usize, clock: &[usize], shift: &[usize]) -> PolyMatrix {
    let dim = l.pow(pairs as u32);
    let mut rows: Vec<Vec<(usize, CyclicPoly)>> = vec![Vec::new(); dim];
    for col in 0..dim {
        let mut digits = vec![0; pairs];
        let mut c = col;
        for k in (0..pairs).rev() {
            digits[k] = c % l;
            c /= l;
        }
        let mut row = 0;
        let mut power = 0;
        for k in 0..pairs {
            let j = (digits[k] + shift[k]) % l;
            power += clock[k] * j;
            row = row * l + j;
        }
        rows[row].push((col, CyclicPoly::monomial(l, power)));
    }
    PolyMatrix { rows }
}

fn root_of_unity(l: usize, k: usize) -> Complex64 {
    let theta = 2.0 * core::f64::consts::PI * (k % l) as f64 / l as f64;
    Complex64::from_polar(1.0, theta)
}

/// Solves `X G = G X` for all monomial generators `G` at `t = exp(2 pi i / l)`.
///
/// For monomial `G` with `G e_c = g_c e_{p(c)}` each equation reads
/// `X[p(r), p(c)] = (g_r / g_c) X[r, c]`, linking two unknowns. A connected
/// component of unknowns contributes one dimension exactly when going around
/// every cycle multiplies by 1. Returns the dimension and the largest cycle
/// defect among the components that were accepted.
fn commutant(l: usize, dim: usize, gens: &[(Vec<usize>, Vec<usize>)]) -> (usize, f64) {
    let unknowns = dim * dim;
    let mut value: Vec<Option<Complex64>> = vec![None; unknowns];
    let mut count = 0;
    let mut residual: f64 = 0.0;
    for start in 0..unknowns {
        if value[start].is_some() {
            continue;
        }
        value[start] = Some(Complex64::new(1.0, 0.0));
        let mut queue = VecDeque::from([start]);
        let mut defect: f64 = 0.0;
        while let Some(u) = queue.pop_front() {
            let (r, c) = (u / dim, u % dim);
            let xu = value[u].expect("visited");
            for (perm, power) in gens {
                let ratio = root_of_unity(l, power[r]) / root_of_unity(l, power[c]);
                // Permutations have finite order, so forward edges reach the
                // whole component.
                let next = perm[r] * dim + perm[c];
                let xn = xu * ratio;
                match value[next] {
                    Some(old) => defect = defect.max((old - xn).norm()),
                    None => {
                        value[next] = Some(xn);
                        queue.push_back(next);
                    }
                }
            }
        }
        if defect < COMMUTANT_TOLERANCE {
            count += 1;
            residual = residual.max(defect);
        }
    }
    (count, residual)
}

/// Builds the representation, checks it and returns its dimension.
pub fn torus_degree(spec: &TorusSpec, cap: u128) -> Result<TorusOutcome> {
    let l = spec.l;
    let lu = l as usize;
    let m = spec.generators();
    let residues = exactla::reduce_matrix(&spec.s, l);
    let (q, pairs) = symplectic_coordinates(&residues, l);
    let dimension = (l as u128).pow(pairs as u32);
    if dimension > cap {
        return Err(Error::DimensionCap {
            dim: dimension,
            cap,
        });
    }
    let dim = dimension as usize;
    let generators: Vec<PolyMatrix> = q
        .iter()
        .map(|row| {
            let clock: Vec<usize> = (0..pairs).map(|k| row[2 * k] as usize).collect();
            let shift: Vec<usize> = (0..pairs).map(|k| row[2 * k + 1] as usize).collect();
            weyl_operator(lu, pairs, &clock, &shift)
        })
        .collect();

    let mut relations_ok = true;
    for i in 0..m {
        for j in i + 1..m {
            let lhs = generators[i].mul(&generators[j]);
            let e = residues[i][j] as usize;
            let rhs = generators[j].mul(&generators[i]).times_monomial(e);
            relations_ok &= lhs == rhs;
        }
    }

    let monomial: Vec<(Vec<usize>, Vec<usize>)> = generators
        .iter()
        .map(|g| g.as_monomial(lu).expect("Weyl operators are monomial"))
        .collect();
    let (commutant_dim, residual) = if monomial.is_empty() {
        (dim * dim, 0.0)
    } else {
        commutant(lu, dim, &monomial)
    };
    Ok(TorusOutcome {
        dimension,
        rank_mod_l: exactla::rank_mod_p(&spec.s, l)?,
        relations_ok,
        commutant_dim,
        residual,
    })
}

/// Random skew matrix with `2..=max_m` generators and entries in `-5..=5`.
pub fn random_skew(rng: &mut ChaCha8Rng, max_m: usize) -> IntMatrix {
    let m = 2 + (rng.next_u64() % (max_m as u64 - 1)) as usize;
    let mut rows = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let x = (rng.next_u64() % 11) as i64 - 5;
            rows[i][j] = x;
            rows[j][i] = -x;
        }
    }
    IntMatrix::from_rows(&rows)
}

fn format_skew(s: &IntMatrix) -> String {
    let rows: Vec<String> = (0..s.rows())
        .map(|i| {
            let r: Vec<String> = s.row(i).iter().map(|x| format!("{x}")).collect();
            format!("[{}]", r.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Runs `trials` random tori (`m <= 6`) at the prime `l`.
pub fn verify_torus(l: u64, trials: usize, seed: u64, cap: u128) -> Result<LemmaVerdict> {
    let mut verdict = LemmaVerdict::new(Lemma::Torus, format!("l={l} trials={trials}"));
    verdict.seed = Some(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for trial in 0..trials {
        let s = random_skew(&mut rng, 6);
        let spec = TorusSpec::new(s.clone(), l)?;
        let outcome = torus_degree(&spec, cap)?;
        worst = worst.max(outcome.residual);
        verdict.check(outcome.consistent(l), || {
            format!(
                "trial {trial}: S = {}, l = {l}: dimension {}, rank mod l {}, relations {}, commutant dimension {}, residual {:e}",
                format_skew(&s),
                outcome.dimension,
                outcome.rank_mod_l,
                outcome.relations_ok,
                outcome.commutant_dim,
                outcome.residual
            )
        });
    }
    verdict.note(format!("max commutant residual {worst:e}"));
    Ok(verdict)
}
