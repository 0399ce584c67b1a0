//! Forward–backward (BCJR) soft-in soft-out decoding of one constituent,
//! in the log domain.
//!
//! LLR convention: `L = ln P(bit = 0) − ln P(bit = 1)`. The branch metric of a
//! transition with input `u` and parity `p` is
//! `±½ (L_sys + L_prior) ± ½ L_par`, with the sign positive for a zero bit.

use crate::rsc::Trellis;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MapKind {
    /// Exact Jacobian logarithm `max(a,b) + ln(1 + e^{−|a−b|})`.
    #[default]
    LogMap,
    /// `max(a,b)` only.
    MaxLogMap,
}

/// Boundary conditions of the trellis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// Circular trellis decoded by passing the end metrics back to the start
    /// `wraps` times in each direction.
    WrapAround { wraps: usize },
    /// Circular trellis decoded exactly: one forward/backward pass per
    /// candidate initial state, summed. Costs a factor `2^ν` more.
    ExactTailBiting,
    /// Encoder started in the zero state, final state unknown.
    ZeroStart,
}

impl Default for Boundary {
    fn default() -> Self {
        Boundary::WrapAround { wraps: 2 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SisoOutput {
    /// A-posteriori LLRs of the information bits.
    pub app: Vec<f64>,
    /// `app − channel_sys − prior`.
    pub extrinsic: Vec<f64>,
}

const NEG_INF: f64 = f64::NEG_INFINITY;

#[inline(always)]
fn max_star(kind: MapKind, a: f64, b: f64) -> f64 {
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    match kind {
        MapKind::MaxLogMap => hi,
        MapKind::LogMap => {
            let d = hi - lo;
            // e^-40 is below f64 resolution relative to 1
            if d > 40.0 || lo == NEG_INF {
                hi
            } else {
                hi + (-d).exp().ln_1p()
            }
        }
    }
}

/// Per-time metrics of the four (input, parity) combinations.
#[inline(always)]
fn gamma(lu: f64, lp: f64, u: u8, p: u8) -> f64 {
    (if u == 0 { lu } else { -lu }) + (if p == 0 { lp } else { -lp })
}

struct Pass<'a> {
    trellis: &'a Trellis,
    kind: MapKind,
    lu: Vec<f64>,
    lp: Vec<f64>,
}

impl Pass<'_> {
    fn states(&self) -> usize {
        self.trellis.num_states()
    }

    /// `alpha[t]` for t = 0..=N given `alpha[0]`, normalized so that
    /// `max_s alpha[t][s] = 0`. Returns the normalizing offsets.
    fn forward(&self, alpha: &mut [f64], offsets: Option<&mut [f64]>) {
        let s_n = self.states();
        let n = self.lu.len();
        let mut offs = offsets;
        for t in 0..n {
            let (cur, next) = alpha[t * s_n..(t + 2) * s_n].split_at_mut(s_n);
            next.fill(NEG_INF);
            for (s, &a) in cur.iter().enumerate() {
                if a == NEG_INF {
                    continue;
                }
                for u in 0..2u8 {
                    let ns = self.trellis.next_state(s, u);
                    let m = a + gamma(self.lu[t], self.lp[t], u, self.trellis.parity(s, u));
                    next[ns] = max_star(self.kind, next[ns], m);
                }
            }
            let top = next.iter().copied().fold(NEG_INF, f64::max);
            next.iter_mut().for_each(|v| *v -= top);
            if let Some(o) = offs.as_deref_mut() {
                o[t + 1] = top;
            }
        }
    }

    /// `beta[t]` for t = N..=0 given `beta[N]`.
    fn backward(&self, beta: &mut [f64], offsets: Option<&mut [f64]>) {
        let s_n = self.states();
        let n = self.lu.len();
        let mut offs = offsets;
        for t in (0..n).rev() {
            let (cur, next) = beta[t * s_n..(t + 2) * s_n].split_at_mut(s_n);
            for (s, c) in cur.iter_mut().enumerate() {
                let mut acc = NEG_INF;
                for u in 0..2u8 {
                    let b = next[self.trellis.next_state(s, u)];
                    if b != NEG_INF {
                        let m = b + gamma(self.lu[t], self.lp[t], u, self.trellis.parity(s, u));
                        acc = max_star(self.kind, acc, m);
                    }
                }
                *c = acc;
            }
            let top = cur.iter().copied().fold(NEG_INF, f64::max);
            cur.iter_mut().for_each(|v| *v -= top);
            if let Some(o) = offs.as_deref_mut() {
                o[t] = top;
            }
        }
    }

    /// Accumulates the log-probabilities of input 0 and input 1 at time `t`.
    fn accumulate(&self, t: usize, alpha: &[f64], beta_next: &[f64], shift: f64, acc: &mut [f64; 2]) {
        for (s, &a) in alpha.iter().enumerate() {
            if a == NEG_INF {
                continue;
            }
            for u in 0..2u8 {
                let b = beta_next[self.trellis.next_state(s, u)];
                if b == NEG_INF {
                    continue;
                }
                let m = a + b + shift + gamma(self.lu[t], self.lp[t], u, self.trellis.parity(s, u));
                acc[u as usize] = max_star(self.kind, acc[u as usize], m);
            }
        }
    }
}

/// Runs one soft-in soft-out pass over a constituent trellis.
pub fn bcjr(
    trellis: &Trellis,
    channel_sys: &[f64],
    channel_par: &[f64],
    prior: &[f64],
    kind: MapKind,
    boundary: Boundary,
) -> Result<SisoOutput> {
    let n = channel_sys.len();
    if channel_par.len() != n || prior.len() != n {
        return Err(Error::Framing {
            expected: n,
            got: channel_par.len().min(prior.len()),
        });
    }
    if let Some(v) = channel_sys
        .iter()
        .chain(channel_par)
        .chain(prior)
        .find(|v| !v.is_finite())
    {
        return Err(Error::Numeric(format!("non-finite LLR {v}")));
    }
    if n == 0 {
        return Ok(SisoOutput {
            app: vec![],
            extrinsic: vec![],
        });
    }
    let pass = Pass {
        trellis,
        kind,
        lu: channel_sys
            .iter()
            .zip(prior)
            .map(|(s, p)| 0.5 * (s + p))
            .collect(),
        lp: channel_par.iter().map(|p| 0.5 * p).collect(),
    };
    let s_n = trellis.num_states();
    let mut acc = vec![[NEG_INF; 2]; n];

    match boundary {
        Boundary::WrapAround { wraps } => {
            if wraps == 0 {
                return Err(Error::Domain("wrap count must be at least 1".into()));
            }
            let mut alpha = vec![0.0; (n + 1) * s_n];
            let mut beta = vec![0.0; (n + 1) * s_n];
            for w in 0..wraps {
                if w > 0 {
                    alpha.copy_within(n * s_n.., 0);
                }
                pass.forward(&mut alpha, None);
            }
            for w in 0..wraps {
                if w > 0 {
                    beta.copy_within(..s_n, n * s_n);
                }
                pass.backward(&mut beta, None);
            }
            for (t, a) in acc.iter_mut().enumerate() {
                pass.accumulate(t, &alpha[t * s_n..(t + 1) * s_n], &beta[(t + 1) * s_n..(t + 2) * s_n], 0.0, a);
            }
        }
        Boundary::ZeroStart => {
            let mut alpha = vec![NEG_INF; (n + 1) * s_n];
            alpha[0] = 0.0;
            let mut beta = vec![0.0; (n + 1) * s_n];
            pass.forward(&mut alpha, None);
            pass.backward(&mut beta, None);
            for (t, a) in acc.iter_mut().enumerate() {
                pass.accumulate(t, &alpha[t * s_n..(t + 1) * s_n], &beta[(t + 1) * s_n..(t + 2) * s_n], 0.0, a);
            }
        }
        Boundary::ExactTailBiting => {
            // Per-start normalizations differ, so keep the offsets and add
            // their running sums back: log P(path) = Σ forward offsets +
            // Σ backward offsets + normalized metrics.
            let mut alpha = vec![NEG_INF; (n + 1) * s_n];
            let mut beta = vec![NEG_INF; (n + 1) * s_n];
            let mut fo = vec![0.0; n + 1];
            let mut bo = vec![0.0; n + 1];
            for start in 0..s_n {
                alpha.fill(NEG_INF);
                beta.fill(NEG_INF);
                alpha[start] = 0.0;
                beta[n * s_n + start] = 0.0;
                pass.forward(&mut alpha, Some(&mut fo));
                pass.backward(&mut beta, Some(&mut bo));
                if alpha[n * s_n + start] == NEG_INF {
                    continue;
                }
                // prefix sums of forward offsets up to t, suffix sums of backward offsets from t+1
                let mut fsum = 0.0;
                let mut bsum: f64 = bo[1..].iter().sum();
                for (t, a) in acc.iter_mut().enumerate() {
                    fsum += if t == 0 { 0.0 } else { fo[t] };
                    pass.accumulate(
                        t,
                        &alpha[t * s_n..(t + 1) * s_n],
                        &beta[(t + 1) * s_n..(t + 2) * s_n],
                        fsum + bsum,
                        a,
                    );
                    bsum -= bo[t + 1];
                }
            }
        }
    }

    let app: Vec<f64> = acc.iter().map(|a| a[0] - a[1]).collect();
    if let Some(v) = app.iter().find(|v| !v.is_finite()) {
        return Err(Error::Numeric(format!("non-finite a-posteriori LLR {v}")));
    }
    let extrinsic = app
        .iter()
        .zip(channel_sys.iter().zip(prior))
        .map(|(a, (s, p))| a - s - p)
        .collect();
    Ok(SisoOutput { app, extrinsic })
}
