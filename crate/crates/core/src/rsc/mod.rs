//! Rate-1/2 recursive systematic convolutional constituent codes.
//!
//! Generators are given in the usual octal notation, most significant bit
//! first: `(13, 15)` is feedback `1 + D² + D³` and feedforward `1 + D + D³`.
//!
//! The encoder is realized in controller canonical form. With `a_t` the
//! feedback register input,
//!
//! ```text
//! a_t = u_t ⊕ Σ_{k=1..ν} f_k a_{t−k}        p_t = Σ_{k=0..ν} g_k a_{t−k}
//! ```
//!
//! and the state is `(a_{t−1}, …, a_{t−ν})` packed with the most recent bit in
//! the least significant position.

mod encode;
mod events;
mod lambda;

use std::fmt;
use std::str::FromStr;

pub use events::{error_events, trellis_weight, ErrorEvent};
pub use lambda::Ratio;

use crate::gf2::BitMatrix;
use crate::{Bit, Error, Result};

/// Largest supported memory; 4096 states.
pub const MAX_MEMORY: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RscCode {
    feedback: u32,
    feedforward: u32,
    memory: usize,
    trellis: Trellis,
}

/// Transition tables indexed by `[state][input]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trellis {
    memory: usize,
    next: Vec<[u16; 2]>,
    parity: Vec<[Bit; 2]>,
}

impl Trellis {
    pub fn memory(&self) -> usize {
        self.memory
    }

    pub fn num_states(&self) -> usize {
        self.next.len()
    }

    #[inline]
    pub fn next_state(&self, state: usize, input: Bit) -> usize {
        self.next[state][input as usize] as usize
    }

    #[inline]
    pub fn parity(&self, state: usize, input: Bit) -> Bit {
        self.parity[state][input as usize]
    }
}

impl RscCode {
    /// Builds the code from octal generator values, e.g. `from_octal(0o13, 0o15)`.
    pub fn from_octal(feedback: u32, feedforward: u32) -> Result<Self> {
        if feedback == 0 || feedforward == 0 {
            return Err(Error::invalid("generators", "generators must be nonzero"));
        }
        let bits = 32 - feedback.max(feedforward).leading_zeros() as usize;
        let memory = bits - 1;
        if memory == 0 {
            return Err(Error::invalid("generators", "memory must be at least 1"));
        }
        if memory > MAX_MEMORY {
            return Err(Error::invalid(
                "generators",
                format!("memory {memory} exceeds {MAX_MEMORY}"),
            ));
        }
        if feedback >> memory != 1 {
            return Err(Error::invalid(
                "generators",
                format!("feedback {feedback:o} has no constant term (it is shorter than feedforward)"),
            ));
        }
        if feedback & 1 == 0 {
            return Err(Error::invalid(
                "generators",
                format!("feedback {feedback:o} has no D^{memory} term"),
            ));
        }
        let trellis = build_trellis(feedback, feedforward, memory);
        Ok(Self {
            feedback,
            feedforward,
            memory,
            trellis,
        })
    }

    pub fn feedback(&self) -> u32 {
        self.feedback
    }

    pub fn feedforward(&self) -> u32 {
        self.feedforward
    }

    /// ν
    pub fn memory(&self) -> usize {
        self.memory
    }

    pub fn num_states(&self) -> usize {
        1 << self.memory
    }

    pub fn trellis(&self) -> &Trellis {
        &self.trellis
    }

    /// Zero-input state update matrix A (`s' = A s ⊕ b u`).
    pub fn state_matrix(&self) -> BitMatrix {
        let cols: Vec<u32> = (0..self.memory)
            .map(|j| self.trellis.next_state(1 << j, 0) as u32)
            .collect();
        BitMatrix::from_columns(&cols)
    }

    /// Period of the zero-input state sequence (the multiplicative order of A).
    pub fn feedback_period(&self) -> usize {
        self.state_matrix()
            .order(1 << self.memory)
            .expect("A is invertible because the feedback has a D^ν term")
    }

    /// Whether a tail-biting state exists for every input of length `n`.
    pub fn supports_tail_biting(&self, n: usize) -> bool {
        self.state_matrix()
            .pow(n as u64)
            .add(&BitMatrix::identity(self.memory))
            .is_invertible()
    }
}

fn build_trellis(feedback: u32, feedforward: u32, memory: usize) -> Trellis {
    let coeff = |g: u32, k: usize| (g >> (memory - k)) & 1;
    let states = 1usize << memory;
    let mask = states - 1;
    let mut next = Vec::with_capacity(states);
    let mut parity = Vec::with_capacity(states);
    for s in 0..states {
        let mut ns = [0u16; 2];
        let mut ps = [0 as Bit; 2];
        for u in 0..2u32 {
            let mut a = u;
            let mut p = 0;
            for k in 1..=memory {
                let past = (s as u32 >> (k - 1)) & 1;
                a ^= coeff(feedback, k) & past;
                p ^= coeff(feedforward, k) & past;
            }
            p ^= coeff(feedforward, 0) & a;
            ns[u as usize] = (((s << 1) | a as usize) & mask) as u16;
            ps[u as usize] = p as Bit;
        }
        next.push(ns);
        parity.push(ps);
    }
    Trellis {
        memory,
        next,
        parity,
    }
}

impl fmt::Display for RscCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:o},{:o})", self.feedback, self.feedforward)
    }
}

/// Parses `"13,15"` (octal digits, optional parentheses and spaces).
impl FromStr for RscCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::invalid(
                "generators",
                format!("expected two octal generators like \"13,15\", got {s:?}"),
            ));
        }
        let parse = |p: &str| {
            u32::from_str_radix(p, 8)
                .map_err(|e| Error::invalid("generators", format!("{p:?} is not octal: {e}")))
        };
        RscCode::from_octal(parse(parts[0])?, parse(parts[1])?)
    }
}
