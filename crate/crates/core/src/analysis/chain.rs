use std::fmt;

use crate::permutation::Permutation;
use crate::{Error, Result};

/// Smallest `d ≥ 0` with `x + d ≡ y` or `x − d ≡ y (mod n)`.
pub fn circular_distance(x: usize, y: usize, n: usize) -> usize {
    let d = (y + n - x % n) % n;
    d.min(n - d) % n.max(1)
}

/// `|r|` for a residue mod `n`: the magnitude of the minimal absolute representative.
pub fn residue_magnitude(r: i64, n: usize) -> usize {
    let m = r.rem_euclid(n as i64) as usize;
    m.min(n - m)
}

/// `‖r‖ = Σ |r_i|`.
pub fn residue_norm(r: &[i64], n: usize) -> usize {
    r.iter().map(|&v| residue_magnitude(v, n)).sum()
}

/// The alternating sequence `x(r, x0)` with `y_i = π(x_i)`.
///
/// Odd steps move in the interleaved domain, `y_{2i+1} = y_{2i} + r_{2i+1}`;
/// even steps move in the natural domain, `x_{2i} = x_{2i−1} + r_{2i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub r: Vec<i64>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// `‖r‖ + d(x_0, x_ℓ)`.
    pub pi_weight: usize,
}

impl Chain {
    pub fn x0(&self) -> usize {
        self.x[0]
    }

    /// Number of steps ℓ.
    pub fn steps(&self) -> usize {
        self.r.len()
    }

    /// Whether the elements `x_0, …, x_ℓ` are pairwise distinct.
    pub fn is_distinct(&self) -> bool {
        let mut v = self.x.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let r: Vec<String> = self.r.iter().map(ToString::to_string).collect();
        write!(
            f,
            "r {}\nx {}\ny {}\npi_weight {}",
            r.join(" "),
            join(&self.x),
            join(&self.y),
            self.pi_weight
        )
    }
}

fn step(v: usize, r: i64, n: usize) -> usize {
    (v as i64 + r).rem_euclid(n as i64) as usize
}

/// Builds `x(r, x0)` over `perm`. Elements are not required to be distinct.
pub fn build_chain(perm: &Permutation, r: &[i64], x0: usize) -> Result<Chain> {
    let n = perm.len();
    if r.len().is_multiple_of(2) {
        return Err(Error::Domain(format!("chain needs an odd number of steps, got {}", r.len())));
    }
    if let Some(bad) = r.iter().find(|&&v| v.rem_euclid(n as i64) == 0) {
        return Err(Error::Domain(format!("step {bad} is zero mod {n}")));
    }
    let mut x = vec![x0];
    let mut y = vec![perm.try_apply(x0)?];
    for (i, &ri) in r.iter().enumerate() {
        let (px, py) = (x[i], y[i]);
        if i % 2 == 0 {
            let ny = step(py, ri, n);
            x.push(perm.inverse_apply(ny));
            y.push(ny);
        } else {
            let nx = step(px, ri, n);
            x.push(nx);
            y.push(perm.apply(nx));
        }
    }
    let pi_weight = residue_norm(r, n) + circular_distance(x0, *x.last().expect("nonempty"), n);
    Ok(Chain {
        r: r.to_vec(),
        x,
        y,
        pi_weight,
    })
}

/// Whether `r` M-cycles at `x0`, i.e. the chain's π-weight is at most `m`.
pub fn m_cycles_at(perm: &Permutation, r: &[i64], x0: usize, m: usize) -> Result<bool> {
    Ok(build_chain(perm, r, x0)?.pi_weight <= m)
}
