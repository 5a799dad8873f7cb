use alloc::format;
use alloc::vec::Vec;

use crate::cartan::{CartanDatum, RootSystem};
use crate::oracles::{Lemma, LemmaVerdict};
use crate::weyl::{self, WeylElement};
use crate::Result;

/// Applies the word `l_1 .. l_k` to a weight given in fundamental-weight
/// coordinates, using `s_i(lambda) = lambda - lambda_i alpha_i`.
pub fn weight_action(datum: &CartanDatum, letters: &[usize], weight: &[i64]) -> Vec<i64> {
    let mut v = weight.to_vec();
    for &i in letters.iter().rev() {
        let coeff = v[i];
        if coeff == 0 {
            continue;
        }
        // alpha_i = sum_k c_ki omega_k
        for (k, x) in v.iter_mut().enumerate() {
            *x -= coeff * datum.entry(k, i);
        }
    }
    v
}

/// Checks `omega - w(omega) = sum_{t in I_omega(w)} beta_t` for every element
/// of `W` and every 0/1 combination of fundamental weights.
pub fn verify_wdeco(rs: &RootSystem, guard: u128) -> Result<LemmaVerdict> {
    let elements: Vec<WeylElement> = weyl::enumerate_group(rs, guard)?.collect();
    let mut verdict = verify_wdeco_for(rs, &elements)?;
    verdict.instance = format!("{} all |W| = {}", rs.cartan_type(), elements.len());
    Ok(verdict)
}

/// Same check for the given elements only, each with its stored (or
/// descent-stripped) reduced word.
pub fn verify_wdeco_for(rs: &RootSystem, elements: &[WeylElement]) -> Result<LemmaVerdict> {
    let datum = rs.datum();
    let n = rs.rank();
    let mut verdict = LemmaVerdict::new(
        Lemma::Wdeco,
        format!("{} {} elements", rs.cartan_type(), elements.len()),
    );
    for w in elements {
        let word = w.reduced_word(rs);
        let letters = word.letters();
        let betas = weyl::convex_order(rs, letters)?;
        // The weight action along the word must agree with the element's
        // root-lattice matrix on every simple root.
        for j in 0..n {
            let mut alpha = alloc::vec![0; n];
            alpha[j] = 1;
            let via_matrix = datum.root_to_weight(&w.apply_coords(&alpha));
            let via_word = weight_action(datum, letters, &datum.root_to_weight(&alpha));
            verdict.check(via_matrix == via_word, || {
                format!("word {word} does not act like its matrix on alpha{}", j + 1)
            });
        }
        for mask in 0u32..1 << n {
            let omega: Vec<i64> = (0..n).map(|i| i64::from(mask >> i & 1)).collect();
            let image = weight_action(datum, letters, &omega);
            let lhs: Vec<i64> = omega.iter().zip(&image).map(|(a, b)| a - b).collect();
            let mut rhs_root = alloc::vec![0i64; n];
            for (beta, &letter) in betas.iter().zip(letters) {
                if omega[letter] == 1 {
                    for (acc, c) in rhs_root.iter_mut().zip(beta.coords()) {
                        *acc += c;
                    }
                }
            }
            let rhs = datum.root_to_weight(&rhs_root);
            verdict.check(lhs == rhs, || {
                format!(
                    "w = {word}, omega mask = {mask:0n$b}, omega - w(omega) = {lhs:?}, sum of betas = {rhs:?} (weight coordinates)",
                    n = n
                )
            });
        }
    }
    Ok(verdict)
}
