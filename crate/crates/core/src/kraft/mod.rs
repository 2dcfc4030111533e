//! Exact Kraft-sum engine for the ω code (γ/δ as brute-force baselines).
//!
//! Block identity: I_k = {n : β(n) = k} holds 2^{k−1} integers, all with the
//! same ω length ℓω(k−1) + k, so S_1 = 1/2 and S_k = 2^{−ℓω(k−1)−1} for
//! k ≥ 2. Partial sums over blocks need only the K−1 small-argument
//! codelengths ℓω(1..K−1), which makes K = 2^24 cheap. Everything is exact
//! dyadic arithmetic; addition is associative and commutative, so block-level
//! parallel reduction is bit-identical regardless of thread count.

mod dyadic;

pub use dyadic::Dyadic;

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::codecs::gamma_delta::{delta_len_u64, gamma_len_u64};
use crate::codecs::omega::omega_len_u64;

/// Default cap on the number of blocks a partial sum may request.
pub const DEFAULT_MAX_BLOCKS: u64 = 1 << 26;

/// Cap on the per-integer brute-force oracle.
pub const BRUTE_ORACLE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KraftError {
    /// More work requested than the configured memory/time budget allows.
    #[error("requested {requested} exceeds the configured cap {cap}")]
    ResourceLimit { requested: u64, cap: u64 },
}

/// S_k = Σ_{n ∈ I_k} 2^{−ℓω(n)} via the closed form.
pub fn block_sum(k: u64) -> Dyadic {
    assert!(k >= 1, "blocks are numbered from 1");
    if k == 1 {
        return Dyadic::pow2_reciprocal(1);
    }
    Dyadic::pow2_reciprocal(omega_len_u64(k - 1) + 1)
}

/// Σ_{k=1}^{K} S_k = Σ_{n < 2^K} 2^{−ℓω(n)}, exactly.
pub fn partial_sum_beta_le(max_beta: u64) -> Result<Dyadic, KraftError> {
    partial_sum_beta_le_capped(max_beta, DEFAULT_MAX_BLOCKS)
}

/// As [`partial_sum_beta_le`] with an explicit block cap.
pub fn partial_sum_beta_le_capped(max_beta: u64, cap: u64) -> Result<Dyadic, KraftError> {
    assert!(max_beta >= 1);
    if max_beta > cap {
        return Err(KraftError::ResourceLimit {
            requested: max_beta,
            cap,
        });
    }
    // Bucket the K−1 block exponents ℓω(j)+1 (j = k−1 runs over 1..K); the
    // histogram merge is exact, so the reduction order cannot matter.
    let hist = (1..max_beta)
        .into_par_iter()
        .fold(
            || [0u64; HIST_BITS],
            |mut h, j| {
                h[omega_len_u64(j) as usize + 1] += 1;
                h
            },
        )
        .reduce(|| [0u64; HIST_BITS], merge_hist);
    let mut sum = block_sum(1);
    for (exp, &count) in hist.iter().enumerate() {
        if count > 0 {
            sum = &sum + &Dyadic::new(BigUint::from(count), exp as u32);
        }
    }
    Ok(sum)
}

// ℓω(j) ≤ 37 for j < 2^26, so exponents ℓω+1 stay well inside 64.
const HIST_BITS: usize = 64;

fn merge_hist(mut a: [u64; HIST_BITS], b: [u64; HIST_BITS]) -> [u64; HIST_BITS] {
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x += *y;
    }
    a
}

/// 1 − partial_sum_beta_le(K): strictly positive and strictly decreasing.
pub fn completeness_gap(max_beta: u64) -> Result<Dyadic, KraftError> {
    let partial = partial_sum_beta_le(max_beta)?;
    Ok(Dyadic::one()
        .checked_sub(&partial)
        .expect("partial Kraft sums stay below one"))
}

/// Independent oracle: Σ_{n=1}^{N} 2^{−ℓω(n)} by direct per-integer summation.
pub fn brute_partial_sum(n_max: u64) -> Result<Dyadic, KraftError> {
    brute_sum_with(n_max, omega_len_u64)
}

/// Baseline sanity: Σ 2^{−ℓγ(n)}, per integer.
pub fn brute_partial_sum_gamma(n_max: u64) -> Result<Dyadic, KraftError> {
    brute_sum_with(n_max, gamma_len_u64)
}

/// Baseline sanity: Σ 2^{−ℓδ(n)}, per integer.
pub fn brute_partial_sum_delta(n_max: u64) -> Result<Dyadic, KraftError> {
    brute_sum_with(n_max, delta_len_u64)
}

fn brute_sum_with(n_max: u64, len: fn(u64) -> u32) -> Result<Dyadic, KraftError> {
    if n_max > BRUTE_ORACLE_LIMIT {
        return Err(KraftError::ResourceLimit {
            requested: n_max,
            cap: BRUTE_ORACLE_LIMIT,
        });
    }
    let mut sum = Dyadic::zero();
    for n in 1..=n_max {
        sum = &sum + &Dyadic::pow2_reciprocal(len(n));
    }
    Ok(sum)
}
