//! Square matrices over GF(2) with at most 32 rows, one `u32` per row.

/// `rows[i]` bit `j` holds entry `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    dim: usize,
    rows: Vec<u32>,
}

impl BitMatrix {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 32, "BitMatrix supports at most 32 rows");
        Self {
            dim,
            rows: vec![0; dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.rows[i] = 1 << i;
        }
        m
    }

    /// Builds the matrix of a linear map given the images of the unit vectors.
    pub fn from_columns(columns: &[u32]) -> Self {
        let mut m = Self::zero(columns.len());
        for (j, &c) in columns.iter().enumerate() {
            for i in 0..m.dim {
                if c >> i & 1 == 1 {
                    m.rows[i] |= 1 << j;
                }
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn mul_vec(&self, v: u32) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &r)| acc | (((r & v).count_ones() & 1) << i))
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.dim);
        for (i, &r) in self.rows.iter().enumerate() {
            let mut acc = 0;
            for (k, &o) in other.rows.iter().enumerate() {
                if r >> k & 1 == 1 {
                    acc ^= o;
                }
            }
            out.rows[i] = acc;
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> BitMatrix {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        BitMatrix {
            dim: self.dim,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// Solves `self · x = b` by Gaussian elimination; `None` if singular.
    pub fn solve(&self, b: u32) -> Option<u32> {
        let n = self.dim;
        // augmented rows: bit n carries the right-hand side
        let mut aug: Vec<u64> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &r)| r as u64 | ((b as u64 >> i & 1) << n))
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| aug[r] >> col & 1 == 1)?;
            aug.swap(col, pivot);
            for r in 0..n {
                if r != col && aug[r] >> col & 1 == 1 {
                    aug[r] ^= aug[col];
                }
            }
        }
        Some((0..n).fold(0, |x, i| x | (((aug[i] >> n) as u32 & 1) << i)))
    }

    pub fn is_invertible(&self) -> bool {
        // a nonsingular matrix solves every right-hand side, in particular 0
        self.solve(0).is_some()
    }

    /// Multiplicative order: smallest `p ≥ 1` with `self^p = I`, searched up to `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let id = Self::identity(self.dim);
        let mut m = self.clone();
        for p in 1..=limit {
            if m == id {
                return Some(p);
            }
            m = m.mul(self);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn companion_7() -> BitMatrix {
        // shift register for 1 + D + D²: s' = (s << 1 | (s0 ^ s1)) & 3
        BitMatrix::from_columns(&[0b11, 0b01])
    }

    #[test]
    fn order_of_primitive_companion() {
        assert_eq!(companion_7().order(16), Some(3));
        assert_eq!(companion_7().pow(3), BitMatrix::identity(2));
        assert!(!companion_7().pow(3).add(&BitMatrix::identity(2)).is_invertible());
        assert!(companion_7().pow(4).add(&BitMatrix::identity(2)).is_invertible());
    }

    #[test]
    fn singular_solve_is_none() {
        let m = BitMatrix::from_columns(&[0b01, 0b01]);
        assert_eq!(m.solve(0b10), None);
        assert!(!m.is_invertible());
    }

    proptest! {
        #[test]
        fn solve_inverts_mul(cols in proptest::collection::vec(0u32..256, 8), x in 0u32..256) {
            let m = BitMatrix::from_columns(&cols);
            let b = m.mul_vec(x);
            match m.solve(b) {
                Some(y) => prop_assert_eq!(m.mul_vec(y), b),
                None => prop_assert!(!m.is_invertible()),
            }
            if m.is_invertible() {
                prop_assert_eq!(m.solve(b), Some(x));
            }
        }

        #[test]
        fn pow_matches_repeated_mul(cols in proptest::collection::vec(0u32..16, 4), e in 0u64..40) {
            let m = BitMatrix::from_columns(&cols);
            let mut acc = BitMatrix::identity(4);
            for _ in 0..e {
                acc = acc.mul(&m);
            }
            prop_assert_eq!(m.pow(e), acc);
        }
    }
}
