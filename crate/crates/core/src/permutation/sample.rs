use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Permutation, QcSpec};
use crate::{Error, Result};

pub const DEFAULT_S_RANDOM_ATTEMPTS: usize = 100;

/// Draws σ uniformly among permutations of `0..n2` and each `X_j`
/// independently and uniformly in `0..n1`.
pub fn sample_qc(n1: usize, n2: usize, seed: u64) -> Result<QcSpec> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::Domain("n1 and n2 must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sigma: Vec<usize> = (0..n2).collect();
    sigma.shuffle(&mut rng);
    let shifts = (0..n2).map(|_| rng.random_range(0..n1)).collect();
    QcSpec::new(n1, n2, sigma, shifts)
}

/// Uniformly random permutation of `0..n` (Fisher–Yates).
pub fn sample_uniform(n: usize, seed: u64) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table: Vec<usize> = (0..n).collect();
    table.shuffle(&mut rng);
    Permutation::from_table(table)
}

/// `|π(i) − π(j)| > s` whenever `0 < |i − j| < s`.
pub fn satisfies_s_constraint(perm: &Permutation, s: usize) -> bool {
    let t = perm.table();
    (0..t.len()).all(|i| {
        (i + 1..t.len().min(i + s)).all(|j| t[i].abs_diff(t[j]) > s)
    })
}

/// S-random interleaver by randomized sequential fill.
///
/// Each attempt shuffles the values, then fills positions left to right with
/// the first remaining value compatible with the previous `s - 1` entries. An
/// attempt that gets stuck is restarted with fresh randomness.
pub fn sample_s_random(n: usize, s: usize, seed: u64, max_attempts: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if s == 0 {
        return Err(Error::Domain("S must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<usize> = Vec::with_capacity(n);
    let mut table: Vec<usize> = Vec::with_capacity(n);
    for _ in 0..max_attempts {
        pool.clear();
        pool.extend(0..n);
        pool.shuffle(&mut rng);
        table.clear();
        while table.len() < n {
            let i = table.len();
            let window = &table[i.saturating_sub(s - 1)..];
            let pick = pool
                .iter()
                .position(|&v| window.iter().all(|&w| v.abs_diff(w) > s));
            match pick {
                Some(k) => table.push(pool.swap_remove(k)),
                None => break,
            }
        }
        if table.len() == n {
            return Permutation::from_table(table);
        }
    }
    Err(Error::Construction {
        attempts: max_attempts,
        reason: format!(
            "no S-random permutation found for N = {n}, S = {s}; try S ≤ {}",
            ((n / 2) as f64).sqrt().floor()
        ),
    })
}
