//! Interleavers: explicit permutation tables, the bi-dimensional
//! quasi-cyclic family, random baselines and their text format.

mod qc;
mod sample;
mod text;

pub use qc::{grid_to_index, index_to_grid, QcSpec};
pub use sample::{sample_qc, sample_s_random, sample_uniform, satisfies_s_constraint, DEFAULT_S_RANDOM_ATTEMPTS};
pub use text::InterleaverFile;

use crate::{Error, Result};

/// Bijection on `{0, …, n-1}` stored as its forward and inverse tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    /// Wraps a table with `table[x] = π(x)`, checking that it is a bijection.
    pub fn from_table(table: Vec<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::invalid("permutation", "empty table"));
        }
        let mut inverse = vec![usize::MAX; n];
        for (x, &y) in table.iter().enumerate() {
            if y >= n {
                return Err(Error::invalid(
                    "permutation",
                    format!("value {y} at position {x} is out of range 0..{n}"),
                ));
            }
            if inverse[y] != usize::MAX {
                return Err(Error::invalid(
                    "permutation",
                    format!("value {y} appears at positions {} and {x}", inverse[y]),
                ));
            }
            inverse[y] = x;
        }
        Ok(Self { table, inverse })
    }

    pub fn identity(n: usize) -> Self {
        let table: Vec<usize> = (0..n).collect();
        Self {
            inverse: table.clone(),
            table,
        }
    }

    /// Domain size N.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn inverse_table(&self) -> &[usize] {
        &self.inverse
    }

    /// π(x). Panics if `x` is out of range; see [`Permutation::try_apply`].
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// π⁻¹(y). Panics if `y` is out of range.
    #[inline]
    pub fn inverse_apply(&self, y: usize) -> usize {
        self.inverse[y]
    }

    pub fn try_apply(&self, x: usize) -> Result<usize> {
        self.table
            .get(x)
            .copied()
            .ok_or_else(|| Error::Domain(format!("index {x} outside 0..{}", self.len())))
    }

    pub fn try_inverse_apply(&self, y: usize) -> Result<usize> {
        self.inverse
            .get(y)
            .copied()
            .ok_or_else(|| Error::Domain(format!("index {y} outside 0..{}", self.len())))
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            table: self.inverse.clone(),
            inverse: self.table.clone(),
        }
    }

    /// Permuted copy of `data`: `out[x] = data[π(x)]`.
    ///
    /// This is the order in which the second constituent encoder sees the
    /// information sequence.
    pub fn interleave<T: Copy>(&self, data: &[T]) -> Vec<T> {
        debug_assert_eq!(data.len(), self.len());
        self.table.iter().map(|&y| data[y]).collect()
    }

    /// Inverse of [`Permutation::interleave`]: `out[π(x)] = data[x]`.
    pub fn deinterleave<T: Copy>(&self, data: &[T]) -> Vec<T> {
        debug_assert_eq!(data.len(), self.len());
        self.inverse.iter().map(|&x| data[x]).collect()
    }

    /// Checks `π(x + p mod N) = π(x) + p mod N` for every x.
    pub fn is_quasi_cyclic(&self, period: usize) -> Result<bool> {
        let n = self.len();
        if period == 0 || !n.is_multiple_of(period) {
            return Err(Error::Domain(format!(
                "period {period} does not divide N = {n}"
            )));
        }
        Ok((0..n).all(|x| self.table[(x + period) % n] == (self.table[x] + period) % n))
    }

    /// Smallest proper period p (p | N, p < N) for which the permutation is
    /// quasi-cyclic, if any.
    pub fn quasi_cyclic_period(&self) -> Option<usize> {
        let n = self.len();
        (1..n)
            .filter(|p| n.is_multiple_of(*p))
            .find(|&p| self.is_quasi_cyclic(p).unwrap_or(false))
    }

    /// Spread `min_{i≠j} |i−j| + |π(i)−π(j)|` (linear, not circular, distances).
    pub fn spread(&self) -> Result<usize> {
        let n = self.len();
        if n < 2 {
            return Err(Error::Domain("spread needs at least two elements".into()));
        }
        let mut best = usize::MAX;
        for i in 0..n {
            // pairs with j - i >= best cannot improve on best
            let stop = n.min(i.saturating_add(best));
            for j in (i + 1)..stop {
                let s = (j - i) + self.table[i].abs_diff(self.table[j]);
                best = best.min(s);
            }
        }
        Ok(best)
    }
}
