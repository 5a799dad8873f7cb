use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::degree::{self, DegreeMatrixBundle};
use crate::exactla::{self, IntMatrix};
use crate::oracles::wdeco::weight_action;
use crate::oracles::{Lemma, LemmaVerdict};
use crate::weyl::{self, Convention, ParabolicDatum};
use crate::Result;

fn describe(pd: &ParabolicDatum) -> String {
    let levi: Vec<usize> = pd.levi().iter().map(|i| i + 1).collect();
    format!("{} levi={levi:?}", pd.root_system().cartan_type())
}

fn bundle_of(pd: &ParabolicDatum) -> Result<DegreeMatrixBundle> {
    let betas = weyl::beta_sequence(pd, Convention::LeviInternal)?;
    degree::assemble(pd, &betas)
}

/// `dim ker T = n - s` over the rationals (and over `F_l` for good prime `l`)
/// and `ker T` inside `ker T1`. Whether `T1` is onto `V+ (+) V-` is reported
/// as a note only: it fails for most nonempty Levi subsets.
pub fn verify_kernel_dimension(pd: &ParabolicDatum, l: u64) -> Result<LemmaVerdict> {
    let mut verdict = LemmaVerdict::new(Lemma::KernelDimension, format!("{} l={l}", describe(pd)));
    let bundle = bundle_of(pd)?;
    let t = &bundle.t;
    let dim = t.cols();
    let n = pd.n();
    let s = weyl::rank_w0_minus_w0levi(pd);
    let expected = n - s;

    let rank_q = exactla::rank_rational(t);
    verdict.check(dim - rank_q == expected, || {
        format!("dim_Q ker T = {} but n - s = {expected}", dim - rank_q)
    });

    let good_prime = exactla::is_prime(l) && pd.root_system().is_good(l);
    if good_prime {
        let rank_l = exactla::rank_mod_p(t, l)?;
        verdict.check(dim - rank_l == expected, || {
            format!("dim_F{l} ker T = {} but n - s = {expected}", dim - rank_l)
        });
        verdict.check(rank_l == rank_q, || {
            format!("rank over Q is {rank_q} but over F{l} it is {rank_l}")
        });
    } else {
        verdict.note(format!(
            "l = {l} is not a good prime; F_l kernel check skipped"
        ));
    }

    let basis = exactla::kernel_basis_rational(t);
    verdict.check(basis.len() == dim - rank_q, || {
        format!(
            "kernel basis has {} vectors, expected {}",
            basis.len(),
            dim - rank_q
        )
    });
    let t1 = bundle.t1();
    for (idx, v) in basis.iter().enumerate() {
        verdict.check(t.mul_vec(v).iter().all(Zero::is_zero), || {
            format!("kernel vector #{idx} {v:?} is not annihilated by T")
        });
        verdict.check(t1.mul_vec(v).iter().all(Zero::is_zero), || {
            format!("kernel vector #{idx} {v:?} of T is not in ker T1")
        });
    }

    let (h, _, big_n) = bundle.block_dims();
    let rank_t1 = exactla::rank_rational(&t1);
    if rank_t1 == h + big_n {
        verdict.note(String::from("T1 is onto V+ (+) V-"));
    } else {
        verdict.note(format!(
            "finding: T1 has rank {rank_t1}, not onto V+ (+) V- of dimension {}",
            h + big_n
        ));
    }
    Ok(verdict)
}

/// Middle coordinate of `v_omega`: `a * omega + b * w0(omega)` in
/// fundamental-weight coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVariant {
    pub omega: i64,
    pub w0_omega: i64,
}

impl SignVariant {
    /// `-omega - w0(omega)` comes first: the form written in the kernel lemma.
    pub const ALL: [SignVariant; 4] = [
        SignVariant {
            omega: -1,
            w0_omega: -1,
        },
        SignVariant {
            omega: 1,
            w0_omega: 1,
        },
        SignVariant {
            omega: -1,
            w0_omega: 1,
        },
        SignVariant {
            omega: 1,
            w0_omega: -1,
        },
    ];
}

impl fmt::Display for SignVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: i64| if x < 0 { "-" } else { "+" };
        write!(f, "{}omega{}w0(omega)", s(self.omega), s(self.w0_omega))
    }
}

/// Outcome of [`probe_kernel_vectors`].
#[derive(Debug, Clone)]
pub struct KernelProbe {
    pub verdict: LemmaVerdict,
    /// Sign variants for which every `v_omega` lies in `ker T1`.
    pub working: Vec<SignVariant>,
    /// `dim ker T1`; equals `n` exactly when `T1` is onto.
    pub ker_t1_dim: usize,
    /// Sign `c` with `N(v_omega) = c (w0(omega) - w0_levi(omega))` for the
    /// first working variant.
    pub middle_sign: Option<i64>,
}

/// Builds the candidates `v_omega` for the fundamental weights and tests them
/// against `T1` and the middle block row.
pub fn probe_kernel_vectors(pd: &ParabolicDatum) -> Result<KernelProbe> {
    let mut verdict = LemmaVerdict::new(Lemma::KernelVectors, describe(pd));
    let rs = pd.root_system();
    let datum = rs.datum();
    let bundle = bundle_of(pd)?;
    let (h, n, big_n) = bundle.block_dims();
    let t1 = bundle.t1();
    let middle = bundle.middle();
    let full_word = pd.word().letters().to_vec();
    let levi_word = pd.levi_word().letters().to_vec();

    let candidate = |i: usize, variant: SignVariant| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); h + n + big_n];
        for (t, &letter) in levi_word.iter().enumerate() {
            if letter == i {
                v[t] = 1.into();
            }
        }
        for (t, &letter) in full_word.iter().enumerate() {
            if letter == i {
                v[h + n + t] = 1.into();
            }
        }
        let mut omega = vec![0i64; n];
        omega[i] = 1;
        let image = weight_action(datum, &full_word, &omega);
        for k in 0..n {
            v[h + k] = (variant.omega * omega[k] + variant.w0_omega * image[k]).into();
        }
        v
    };

    // Variants producing identical vectors (e.g. when w0 = -1) count once.
    let mut seen: Vec<Vec<Vec<BigInt>>> = Vec::new();
    let mut working = Vec::new();
    for variant in SignVariant::ALL {
        let vectors: Vec<Vec<BigInt>> = (0..n).map(|i| candidate(i, variant)).collect();
        if seen.contains(&vectors) {
            continue;
        }
        let inside = vectors
            .iter()
            .all(|v| t1.mul_vec(v).iter().all(Zero::is_zero));
        seen.push(vectors);
        if inside {
            working.push(variant);
        }
    }
    verdict.check(!working.is_empty(), || {
        format!("no sign variant of v_omega lies in ker T1 for all {n} fundamental weights")
    });
    verdict.note(format!(
        "variants in ker T1: [{}]",
        working
            .iter()
            .map(|v| format!("{v}"))
            .collect::<Vec<_>>()
            .join(", ")
    ));

    let mut middle_sign = None;
    let ker_t1_dim = t1.cols() - exactla::rank_rational(&t1);
    if let Some(&variant) = working.first() {
        let mut stacked = Vec::with_capacity(n);
        for i in 0..n {
            let v = candidate(i, variant);
            let image = middle.mul_vec(&v);
            // N(v) has entries d_k * (root coordinate k); undo the symmetrizers.
            let mut root = Vec::with_capacity(n);
            let mut divisible = true;
            for (k, x) in image.iter().enumerate() {
                let (q, r) = x.div_rem(&BigInt::from(datum.symmetrizers()[k]));
                divisible &= r.is_zero();
                root.push(q.to_i64().expect("small entry"));
            }
            verdict.check(divisible, || {
                format!("N(v_omega{}) = {image:?} not divisible by d", i + 1)
            });
            let got = datum.root_to_weight(&root);
            let mut omega = vec![0i64; n];
            omega[i] = 1;
            let w0_img = weight_action(datum, &full_word, &omega);
            let levi_img = weight_action(datum, &levi_word, &omega);
            let target: Vec<i64> = w0_img.iter().zip(&levi_img).map(|(a, b)| a - b).collect();
            let sign = if got == target {
                Some(1)
            } else if got.iter().zip(&target).all(|(a, b)| *a == -b) {
                Some(-1)
            } else {
                None
            };
            let consistent = match (sign, middle_sign) {
                (Some(s), None) if target.iter().any(|&x| x != 0) => {
                    middle_sign = Some(s);
                    true
                }
                (Some(s), Some(prev)) if target.iter().any(|&x| x != 0) => s == prev,
                (Some(_), _) => true,
                (None, _) => false,
            };
            verdict.check(consistent, || {
                format!(
                    "N(v_omega{}) = {got:?} but w0(omega) - w0_levi(omega) = {target:?} (weight coordinates)",
                    i + 1
                )
            });
            stacked.extend(v);
        }
        let stacked = stacked
            .iter()
            .map(|x| x.to_i64().expect("small entry"))
            .collect::<Vec<_>>();
        let stacked = IntMatrix::from_i64(n, h + n + big_n, &stacked);
        let independent = exactla::rank_rational(&stacked);
        verdict.check(independent == n, || {
            format!("the {n} vectors v_omega span only a rank {independent} space")
        });
        // ker T = ker T1 cap ker N must sit inside span{v_omega}.
        let ker_t = exactla::kernel_basis_rational(&bundle.t);
        let mut joined = stacked.clone();
        for v in &ker_t {
            let row = IntMatrix::from_fn(1, v.len(), |_, j| v[j].to_i64().expect("small entry"));
            joined = joined.vstack(&row);
        }
        let joined_rank = exactla::rank_rational(&joined);
        verdict.check(joined_rank == n, || {
            format!("ker T (dim {}) is not inside span{{v_omega}}", ker_t.len())
        });
        if ker_t1_dim == n {
            verdict.note(String::from("v_omega span ker T1"));
        } else {
            verdict.note(format!(
                "finding: dim ker T1 = {ker_t1_dim} > n = {n}, so v_omega do not span ker T1"
            ));
        }
        verdict.note(format!("resolved middle coordinate {variant}"));
        if let Some(s) = middle_sign {
            verdict.note(format!(
                "N(v_omega) = {}(w0(omega) - w0_levi(omega))",
                if s > 0 { "+" } else { "-" }
            ));
        }
    }
    Ok(KernelProbe {
        verdict,
        working,
        ker_t1_dim,
        middle_sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanType, RootSystem};

    fn pd(label: &str, levi: &[usize]) -> ParabolicDatum {
        let rs = RootSystem::of_type(label.parse::<CartanType>().unwrap());
        ParabolicDatum::new(&rs, levi, None).unwrap()
    }

    #[test]
    fn kernel_dimensions() {
        let full = pd("A2", &[0, 1]);
        let v = verify_kernel_dimension(&full, 5).unwrap();
        assert!(v.passed, "{v}");
        let bundle = bundle_of(&full).unwrap();
        assert_eq!(exactla::kernel_basis_rational(&bundle.t).len(), 2);

        let a1 = pd("A1", &[]);
        assert!(verify_kernel_dimension(&a1, 5).unwrap().passed);
        assert!(exactla::kernel_basis_rational(&bundle_of(&a1).unwrap().t).is_empty());

        let p = pd("A2", &[0]);
        let s = weyl::rank_w0_minus_w0levi(&p);
        let k = exactla::kernel_basis_rational(&bundle_of(&p).unwrap().t).len();
        assert_eq!(k, 2 - s);
        assert!(verify_kernel_dimension(&p, 7).unwrap().passed);
    }

    #[test]
    fn probe_a1_borel() {
        let probe = probe_kernel_vectors(&pd("A1", &[])).unwrap();
        assert!(probe.verdict.passed, "{}", probe.verdict);
        assert_eq!(probe.working.len(), 1);
    }

    #[test]
    fn probe_full_levi_has_zero_middle_image() {
        let p = pd("B2", &[0, 1]);
        let probe = probe_kernel_vectors(&p).unwrap();
        assert!(probe.verdict.passed, "{}", probe.verdict);
        assert_eq!(probe.middle_sign, None);
        assert_eq!(probe.ker_t1_dim, 4);
    }

    #[test]
    fn a2_single_levi_has_no_working_variant() {
        // T1(v_omega1) = -B_levi^t (w0_levi(omega1) - w0(omega1)) pairs to -1 with alpha1.
        let probe = probe_kernel_vectors(&pd("A2", &[0])).unwrap();
        assert!(!probe.verdict.passed);
        assert!(probe.working.is_empty());
        assert_eq!(probe.ker_t1_dim, 2);
    }

    #[test]
    fn borel_t1_is_onto() {
        for label in ["A2", "B3", "G2"] {
            let probe = probe_kernel_vectors(&pd(label, &[])).unwrap();
            assert!(probe.verdict.passed, "{}", probe.verdict);
            let n = label[1..].parse::<usize>().unwrap();
            assert_eq!(probe.ker_t1_dim, n);
        }
    }

    #[test]
    fn probe_a2_borel_independent() {
        let probe = probe_kernel_vectors(&pd("A2", &[])).unwrap();
        assert!(probe.verdict.passed, "{}", probe.verdict);
    }
}
