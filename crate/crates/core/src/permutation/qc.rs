use super::Permutation;
use crate::{Error, Result};

/// Compact description of an (n1, n2)-quasi-cyclic interleaver.
///
/// Positions are laid out row-major in an `n1 × n2` array. Column `j` is moved
/// to column `sigma[j]` and rotated down by `shifts[j]` rows:
/// `Π(i, j) = ((i + X_j) mod n1, σ(j))`, and the interleaver is `π = φ Π φ⁻¹`
/// with `φ(i, j) = i·n2 + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcSpec {
    n1: usize,
    n2: usize,
    sigma: Vec<usize>,
    shifts: Vec<usize>,
}

impl QcSpec {
    pub fn new(n1: usize, n2: usize, sigma: Vec<usize>, shifts: Vec<usize>) -> Result<Self> {
        let spec = Self {
            n1,
            n2,
            sigma,
            shifts,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let (n1, n2) = (self.n1, self.n2);
        if n1 == 0 || n2 == 0 {
            return Err(Error::invalid("qc spec", "n1 and n2 must be positive"));
        }
        if n1.checked_mul(n2).is_none_or(|n| n > u32::MAX as usize) {
            return Err(Error::invalid("qc spec", format!("N = {n1}×{n2} is too large")));
        }
        if self.sigma.len() != n2 {
            return Err(Error::invalid(
                "qc spec",
                format!("sigma has {} entries, expected n2 = {n2}", self.sigma.len()),
            ));
        }
        let mut seen = vec![false; n2];
        for (j, &s) in self.sigma.iter().enumerate() {
            if s >= n2 || std::mem::replace(&mut seen[s], true) {
                return Err(Error::invalid(
                    "qc spec",
                    format!("sigma is not a permutation of 0..{n2} (entry {j} = {s})"),
                ));
            }
        }
        if self.shifts.len() != n2 {
            return Err(Error::invalid(
                "qc spec",
                format!("X has {} entries, expected n2 = {n2}", self.shifts.len()),
            ));
        }
        if let Some((j, &x)) = self.shifts.iter().enumerate().find(|(_, &x)| x >= n1) {
            return Err(Error::invalid(
                "qc spec",
                format!("X[{j}] = {x} is not reduced mod n1 = {n1}"),
            ));
        }
        Ok(())
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Column rotations `X_j`.
    pub fn shifts(&self) -> &[usize] {
        &self.shifts
    }

    /// Same σ with every rotation negated mod n1.
    ///
    /// The 5×5 worked example that usually accompanies this construction prints
    /// `X = (0,3,4,2,1)` next to a listing that the formula only reproduces with
    /// `X = (0,2,1,3,4)`; the two readings differ exactly by this negation.
    pub fn negated_shifts(&self) -> QcSpec {
        QcSpec {
            n1: self.n1,
            n2: self.n2,
            sigma: self.sigma.clone(),
            shifts: self
                .shifts
                .iter()
                .map(|&x| (self.n1 - x) % self.n1)
                .collect(),
        }
    }

    /// Materializes π as an explicit table.
    pub fn build(&self) -> Permutation {
        let (n1, n2) = (self.n1, self.n2);
        let mut table = Vec::with_capacity(n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                table.push(((i + self.shifts[j]) % n1) * n2 + self.sigma[j]);
            }
        }
        Permutation::from_table(table).expect("a valid QcSpec always yields a bijection")
    }

    /// Number of integers the compact form stores (σ and X).
    pub fn storage_integers(&self) -> usize {
        2 * self.n2
    }
}

/// `φ(i, j) = i·n2 + j`.
pub fn grid_to_index(i: usize, j: usize, n1: usize, n2: usize) -> Result<usize> {
    if i >= n1 || j >= n2 {
        return Err(Error::Domain(format!(
            "grid position ({i}, {j}) outside {n1}×{n2}"
        )));
    }
    Ok(i * n2 + j)
}

/// `φ⁻¹(x) = (x div n2, x mod n2)`.
pub fn index_to_grid(x: usize, n1: usize, n2: usize) -> Result<(usize, usize)> {
    if n2 == 0 || x >= n1 * n2 {
        return Err(Error::Domain(format!("index {x} outside {n1}×{n2} grid")));
    }
    Ok((x / n2, x % n2))
}

#[cfg(test)]
mod tests {
    use super::*;

    const QC5_LISTING: [usize; 25] = [
        3, 12, 5, 19, 21, 8, 17, 10, 24, 1, 13, 22, 15, 4, 6, 18, 2, 20, 9, 11, 23, 7, 0, 14, 16,
    ];

    #[test]
    fn grid_mapping() {
        assert_eq!(grid_to_index(0, 3, 5, 5).unwrap(), 3);
        assert_eq!(grid_to_index(0, 0, 5, 7).unwrap(), 0);
        assert_eq!(grid_to_index(4, 4, 5, 5).unwrap(), 24);
        assert!(grid_to_index(5, 0, 5, 5).is_err());
        assert!(grid_to_index(0, 5, 5, 5).is_err());
        for x in 0..24 {
            let (i, j) = index_to_grid(x, 4, 6).unwrap();
            assert_eq!(grid_to_index(i, j, 4, 6).unwrap(), x);
        }
        assert!(index_to_grid(24, 4, 6).is_err());
    }

    #[test]
    fn worked_example_listing_uses_reconciled_shifts() {
        let spec = QcSpec::new(5, 5, vec![3, 2, 0, 4, 1], vec![0, 2, 1, 3, 4]).unwrap();
        assert_eq!(spec.build().table(), QC5_LISTING);
    }

    #[test]
    fn worked_example_printed_shifts_follow_formula() {
        // Evaluating Π directly with the printed rotations.
        let printed = QcSpec::new(5, 5, vec![3, 2, 0, 4, 1], vec![0, 3, 4, 2, 1]).unwrap();
        let p = printed.build();
        assert_eq!(&p.table()[..3], &[3, 17, 20]);
        assert_ne!(p.table(), QC5_LISTING);
        assert_eq!(printed.negated_shifts().build().table(), QC5_LISTING);
    }

    #[test]
    fn identity_spec() {
        let spec = QcSpec::new(2, 2, vec![0, 1], vec![0, 0]).unwrap();
        assert_eq!(spec.build(), Permutation::identity(4));
    }

    #[test]
    fn validation_errors() {
        assert!(QcSpec::new(0, 3, vec![], vec![]).is_err());
        assert!(QcSpec::new(3, 3, vec![0, 1], vec![0, 0, 0]).is_err());
        assert!(QcSpec::new(3, 3, vec![0, 1, 1], vec![0, 0, 0]).is_err());
        assert!(QcSpec::new(3, 3, vec![0, 1, 3], vec![0, 0, 0]).is_err());
        assert!(QcSpec::new(3, 3, vec![0, 1, 2], vec![0, 3, 0]).is_err());
        assert!(QcSpec::new(3, 3, vec![0, 1, 2], vec![0, 0]).is_err());
        let err = QcSpec::new(3, 3, vec![0, 1, 2], vec![0, 5, 0]).unwrap_err();
        assert!(err.to_string().contains("X[1]"));
    }

    #[test]
    fn non_square_is_quasi_cyclic() {
        let spec = QcSpec::new(3, 4, vec![2, 0, 3, 1], vec![1, 0, 2, 2]).unwrap();
        let p = spec.build();
        assert!(p.is_quasi_cyclic(4).unwrap());
        assert_eq!(spec.storage_integers(), 8);
    }
}
