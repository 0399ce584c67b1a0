//! Enumeration of M-cycling pairs `(r, x0)` and the statistic `Z`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::chain::build_chain;
use crate::permutation::{sample_qc, Permutation};
use crate::{Error, Result};

/// Largest M accepted by the exhaustive enumeration.
pub const MAX_CYCLING_M: usize = 12;

/// Every step vector `r` with odd length, nonzero entries and `‖r‖ < m`.
///
/// Ordered by norm, then length, then the magnitudes (lexicographic), then the
/// sign pattern with bit `i` set meaning `r_i < 0`. A magnitude of exactly
/// `n/2` is emitted with the positive sign only.
pub fn step_vectors(m: usize, n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for norm in 1..m {
        for len in (1..=norm).step_by(2) {
            let mut parts = Vec::with_capacity(len);
            compositions(norm, len, &mut parts, &mut |mags| {
                if mags.iter().any(|&a| 2 * a > n) {
                    return;
                }
                for signs in 0u32..1 << len {
                    let clash = mags
                        .iter()
                        .enumerate()
                        .any(|(i, &a)| 2 * a == n && signs >> i & 1 == 1);
                    if clash {
                        continue;
                    }
                    out.push(
                        mags.iter()
                            .enumerate()
                            .map(|(i, &a)| if signs >> i & 1 == 1 { -(a as i64) } else { a as i64 })
                            .collect(),
                    );
                }
            });
        }
    }
    out
}

fn compositions(total: usize, parts: usize, prefix: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if parts == 0 {
        if total == 0 {
            emit(prefix);
        }
        return;
    }
    if total < parts {
        return;
    }
    for first in 1..=total - (parts - 1) {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, emit);
        prefix.pop();
    }
}

/// Upper bound `N·3^M/2` on the number of enumerated pairs.
pub fn enumeration_bound(n: usize, m: usize) -> f64 {
    n as f64 * 3f64.powi(m as i32) / 2.0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclingCount {
    /// The number of M-cycling pairs.
    pub z: u64,
    /// Number of `(r, x0)` candidates examined.
    pub candidates: u64,
    /// The M-cycling pairs in enumeration order.
    pub pairs: Vec<(Vec<i64>, usize)>,
}

/// Counts the pairs `(r, x0)` with `‖r‖ < m` that M-cycle, i.e. `Z`.
pub fn count_m_cycling_pairs(perm: &Permutation, m: usize) -> Result<CyclingCount> {
    if m == 0 {
        return Err(Error::Domain("M must be at least 1".into()));
    }
    if m > MAX_CYCLING_M {
        return Err(Error::Resource(format!(
            "M = {m} exceeds {MAX_CYCLING_M}; the enumeration visits up to N·3^M/2 = {:.3e} pairs",
            enumeration_bound(perm.len(), m)
        )));
    }
    let n = perm.len();
    let rs = step_vectors(m, n);
    let hits: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|x0| {
            rs.iter()
                .enumerate()
                .filter(|(_, r)| build_chain(perm, r, x0).expect("valid steps").pi_weight <= m)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut pairs: Vec<(usize, usize)> = hits
        .iter()
        .enumerate()
        .flat_map(|(x0, v)| v.iter().map(move |&i| (i, x0)))
        .collect();
    pairs.sort_unstable();
    Ok(CyclingCount {
        z: pairs.len() as u64,
        candidates: (rs.len() * n) as u64,
        pairs: pairs.into_iter().map(|(i, x0)| (rs[i].clone(), x0)).collect(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZStatistics {
    pub values: Vec<u64>,
    pub mean: f64,
    /// Samples whose `Z` is not a multiple of `n1`.
    pub divisibility_violations: usize,
    /// `M·3^M·(1 − 1/n2)^{−1}`.
    pub bound: f64,
}

impl ZStatistics {
    pub fn within_bound(&self) -> bool {
        self.mean <= self.bound
    }
}

/// Mean of `Z` over `trials` random quasi-cyclic permutations of size `n1·n2`.
pub fn z_statistics(n1: usize, n2: usize, m: usize, trials: usize, seed: u64) -> Result<ZStatistics> {
    if m >= n2 {
        return Err(Error::Domain(format!("M = {m} must be smaller than n2 = {n2}")));
    }
    if trials == 0 {
        return Err(Error::Domain("at least one trial is required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..trials).map(|_| rng.random()).collect();
    let values = seeds
        .iter()
        .map(|&s| Ok(count_m_cycling_pairs(&sample_qc(n1, n2, s)?.build(), m)?.z))
        .collect::<Result<Vec<u64>>>()?;
    let mean = values.iter().sum::<u64>() as f64 / trials as f64;
    Ok(ZStatistics {
        divisibility_violations: values.iter().filter(|&&z| z % n1 as u64 != 0).count(),
        mean,
        bound: m as f64 * 3f64.powi(m as i32) / (1.0 - 1.0 / n2 as f64),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::residue_norm;
    use crate::permutation::{sample_uniform, QcSpec};

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn step_vector_count() {
        for m in 1..=9 {
            let got = step_vectors(m, 1000).len() as u64;
            let want: u64 = (1..m as u64)
                .map(|norm| {
                    (1..=norm)
                        .step_by(2)
                        .map(|l| (1u64 << l) * binom(norm - 1, l - 1))
                        .sum::<u64>()
                })
                .sum();
            assert_eq!(got, want, "m={m}");
            assert!((got * 1000) as f64 <= enumeration_bound(1000, m));
        }
        assert!(step_vectors(1, 25).is_empty());
        // magnitude n/2 has one sign only
        assert_eq!(step_vectors(3, 4), vec![vec![1], vec![-1], vec![2]]);
    }

    #[test]
    fn ordering_is_by_norm() {
        let rs = step_vectors(6, 100);
        let norms: Vec<usize> = rs.iter().map(|r| residue_norm(r, 100)).collect();
        assert!(norms.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(rs[0], vec![1]);
        assert_eq!(rs[1], vec![-1]);
    }

    #[test]
    fn identity_single_steps() {
        // ℓ = 1 with the identity: x1 = x0 ± 1, weight 2
        let perm = Permutation::identity(25);
        let got = count_m_cycling_pairs(&perm, 2).unwrap();
        let mut brute = 0;
        for x0 in 0..25usize {
            for r in [1i64, -1] {
                let x1 = (x0 as i64 + r).rem_euclid(25) as usize;
                let d = (x1 + 25 - x0) % 25;
                if d.min(25 - d) < 2 {
                    brute += 1;
                }
            }
        }
        assert_eq!(got.z, brute);
        assert_eq!(got.z, 50);
        assert_eq!(got.candidates, 50);
    }

    #[test]
    fn empty_when_m_is_one() {
        let got = count_m_cycling_pairs(&Permutation::identity(25), 1).unwrap();
        assert_eq!((got.z, got.candidates), (0, 0));
    }

    #[test]
    fn qc_counts_are_multiples_of_n1() {
        let perm = QcSpec::new(5, 5, vec![3, 2, 0, 4, 1], vec![0, 2, 1, 3, 4])
            .unwrap()
            .build();
        for m in 1..=6 {
            let c = count_m_cycling_pairs(&perm, m).unwrap();
            assert_eq!(c.z % 5, 0, "m={m}");
            // shift symmetry of each pair
            for (r, x0) in &c.pairs {
                assert!(c.pairs.contains(&(r.clone(), (x0 + 5) % 25)));
            }
        }
    }

    #[test]
    fn deterministic_and_limited() {
        let perm = sample_uniform(40, 5).unwrap();
        assert_eq!(count_m_cycling_pairs(&perm, 5).unwrap(), count_m_cycling_pairs(&perm, 5).unwrap());
        assert!(matches!(count_m_cycling_pairs(&perm, 13), Err(Error::Resource(_))));
    }

    #[test]
    fn z_statistics_small() {
        let s = z_statistics(10, 10, 4, 20, 1).unwrap();
        assert_eq!(s.divisibility_violations, 0);
        assert!(s.within_bound());
        assert!((s.bound - 360.0).abs() < 1e-9);
        assert!(z_statistics(10, 10, 10, 5, 1).is_err());
    }
}
