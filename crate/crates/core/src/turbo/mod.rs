//! Parallel turbo code: two copies of one RSC constituent joined by an
//! interleaver, optional parity puncturing to rate 1/2, iterative decoding.

mod bcjr;
mod decoder;

pub use bcjr::{bcjr, Boundary, MapKind, SisoOutput};
pub use decoder::{DecodeOutput, DecoderConfig, IterationStats};

use crate::permutation::Permutation;
use crate::rsc::RscCode;
use crate::{Bit, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Puncture {
    /// Rate 1/3: every parity bit is sent.
    #[default]
    None,
    /// Rate 1/2: parity 1 at even times, parity 2 at odd times.
    Alternate,
}

/// How each constituent trellis is closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Termination {
    /// Circular trellis; the encoder starts and ends in the same state.
    #[default]
    TailBiting,
    /// Starts in the zero state and is left unterminated. Only useful when the
    /// block length is a multiple of the feedback period, where no tail-biting
    /// state exists.
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TurboCode {
    code: RscCode,
    perm: Permutation,
    puncture: Puncture,
    termination: Termination,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TurboCodeword {
    pub systematic: Vec<Bit>,
    /// Parity of the constituent fed with `s`.
    pub parity1: Vec<Bit>,
    /// Parity of the constituent fed with `s^π = (s_{π(0)}, …, s_{π(N−1)})`.
    pub parity2: Vec<Bit>,
}

impl TurboCodeword {
    /// Hamming weight of the unpunctured rate-1/3 codeword.
    pub fn weight(&self) -> usize {
        self.systematic
            .iter()
            .chain(&self.parity1)
            .chain(&self.parity2)
            .filter(|&&b| b == 1)
            .count()
    }

    pub fn len(&self) -> usize {
        self.systematic.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systematic.is_empty()
    }
}

/// Channel LLRs of one frame, natural order, positive meaning bit 0.
/// Punctured positions hold exactly zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LlrFrame {
    pub channel_sys: Vec<f64>,
    pub channel_p1: Vec<f64>,
    pub channel_p2: Vec<f64>,
}

impl TurboCode {
    /// Rate-1/3 tail-biting turbo code.
    pub fn new(code: RscCode, perm: Permutation) -> Result<Self> {
        let n = perm.len();
        if !code.supports_tail_biting(n) {
            return Err(Error::UnsupportedLength {
                n,
                period: code.feedback_period(),
            });
        }
        Ok(Self {
            code,
            perm,
            puncture: Puncture::None,
            termination: Termination::TailBiting,
        })
    }

    pub fn with_puncture(mut self, puncture: Puncture) -> Self {
        self.puncture = puncture;
        self
    }

    /// Same code with an open (zero-start, unterminated) trellis.
    pub fn open(code: RscCode, perm: Permutation) -> Self {
        Self {
            code,
            perm,
            puncture: Puncture::None,
            termination: Termination::Open,
        }
    }

    pub fn code(&self) -> &RscCode {
        &self.code
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn puncture(&self) -> Puncture {
        self.puncture
    }

    pub fn termination(&self) -> Termination {
        self.termination
    }

    /// Information length N.
    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn rate(&self) -> f64 {
        match self.puncture {
            Puncture::None => 1.0 / 3.0,
            Puncture::Alternate => 0.5,
        }
    }

    /// Number of channel symbols per frame.
    pub fn transmitted_len(&self) -> usize {
        match self.puncture {
            Puncture::None => 3 * self.len(),
            Puncture::Alternate => 2 * self.len(),
        }
    }

    fn encode_branch(&self, bits: &[Bit]) -> Result<Vec<Bit>> {
        match self.termination {
            Termination::TailBiting => self.code.encode_tail_biting(bits),
            Termination::Open => Ok(self.code.encode_from(0, bits).0),
        }
    }

    pub fn encode(&self, s: &[Bit]) -> Result<TurboCodeword> {
        if s.len() != self.len() {
            return Err(Error::Framing {
                expected: self.len(),
                got: s.len(),
            });
        }
        let parity1 = self.encode_branch(s)?;
        let parity2 = self.encode_branch(&self.perm.interleave(s))?;
        Ok(TurboCodeword {
            systematic: s.to_vec(),
            parity1,
            parity2,
        })
    }

    /// Transmitted symbols: all systematic bits, then the surviving parity bits.
    pub fn puncture_symbols<T: Copy>(&self, sys: &[T], p1: &[T], p2: &[T]) -> Vec<T> {
        let mut out = Vec::with_capacity(self.transmitted_len());
        out.extend_from_slice(sys);
        match self.puncture {
            Puncture::None => {
                out.extend_from_slice(p1);
                out.extend_from_slice(p2);
            }
            Puncture::Alternate => {
                out.extend((0..sys.len()).map(|t| if t % 2 == 0 { p1[t] } else { p2[t] }));
            }
        }
        out
    }

    pub fn puncture_codeword(&self, cw: &TurboCodeword) -> Vec<Bit> {
        self.puncture_symbols(&cw.systematic, &cw.parity1, &cw.parity2)
    }

    /// Places received LLRs back on their positions; removed parity gets 0.
    pub fn depuncture(&self, symbols: &[f64]) -> Result<LlrFrame> {
        let n = self.len();
        if symbols.len() != self.transmitted_len() {
            return Err(Error::Framing {
                expected: self.transmitted_len(),
                got: symbols.len(),
            });
        }
        let (sys, parity) = symbols.split_at(n);
        let (p1, p2) = match self.puncture {
            Puncture::None => (parity[..n].to_vec(), parity[n..].to_vec()),
            Puncture::Alternate => {
                let mut p1 = vec![0.0; n];
                let mut p2 = vec![0.0; n];
                for (t, &v) in parity.iter().enumerate() {
                    if t % 2 == 0 {
                        p1[t] = v;
                    } else {
                        p2[t] = v;
                    }
                }
                (p1, p2)
            }
        };
        Ok(LlrFrame {
            channel_sys: sys.to_vec(),
            channel_p1: p1,
            channel_p2: p2,
        })
    }
}
