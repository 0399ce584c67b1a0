use super::bcjr::{bcjr, Boundary, MapKind};
use super::{LlrFrame, Termination, TurboCode};
use crate::{Bit, Error, Result};

/// Extrinsic values are clipped to this magnitude before exchange.
pub const EXTRINSIC_CLAMP: f64 = 50.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoderConfig {
    pub iterations: usize,
    pub kind: MapKind,
    /// Boundary used for tail-biting codes; open codes always start from zero.
    pub boundary: Boundary,
}

impl Default for DecoderConfig {
    fn default() -> Self {
        Self {
            iterations: 8,
            kind: MapKind::LogMap,
            boundary: Boundary::WrapAround { wraps: 2 },
        }
    }
}

impl DecoderConfig {
    pub fn with_iterations(iterations: usize) -> Self {
        Self {
            iterations,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IterationStats {
    pub iteration: usize,
    /// Mean |a-posteriori LLR| after the second branch.
    pub mean_abs_llr: f64,
    /// Hard decisions that changed since the previous iteration.
    pub flips: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodeOutput {
    pub bits: Vec<Bit>,
    pub app: Vec<f64>,
    pub trace: Vec<IterationStats>,
}

fn clamp(v: &mut [f64]) {
    v.iter_mut()
        .for_each(|x| *x = x.clamp(-EXTRINSIC_CLAMP, EXTRINSIC_CLAMP));
}

impl TurboCode {
    /// Iterative decoding: branch 1 in natural order, branch 2 in interleaved
    /// order, extrinsics exchanged through the permutation.
    pub fn decode(&self, frame: &LlrFrame, config: &DecoderConfig) -> Result<DecodeOutput> {
        let n = self.len();
        for v in [&frame.channel_sys, &frame.channel_p1, &frame.channel_p2] {
            if v.len() != n {
                return Err(Error::Framing {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        if config.iterations == 0 {
            return Err(Error::Domain("at least one iteration is required".into()));
        }
        let boundary = match self.termination() {
            Termination::TailBiting => config.boundary,
            Termination::Open => Boundary::ZeroStart,
        };
        let trellis = self.code().trellis();
        let perm = self.perm();
        let sys2 = perm.interleave(&frame.channel_sys);

        let mut ext2_nat = vec![0.0; n];
        let mut bits: Vec<Bit> = frame.channel_sys.iter().map(|&l| Bit::from(l < 0.0)).collect();
        let mut app = Vec::new();
        let mut trace = Vec::with_capacity(config.iterations);
        for iteration in 1..=config.iterations {
            let b1 = bcjr(trellis, &frame.channel_sys, &frame.channel_p1, &ext2_nat, config.kind, boundary)?;
            let mut ext1 = b1.extrinsic;
            clamp(&mut ext1);

            let prior2 = perm.interleave(&ext1);
            let b2 = bcjr(trellis, &sys2, &frame.channel_p2, &prior2, config.kind, boundary)?;
            let mut ext2 = b2.extrinsic;
            clamp(&mut ext2);
            ext2_nat = perm.deinterleave(&ext2);

            app = perm.deinterleave(&b2.app);
            let mut flips = 0;
            for (b, &l) in bits.iter_mut().zip(&app) {
                let nb = Bit::from(l < 0.0);
                flips += usize::from(nb != *b);
                *b = nb;
            }
            trace.push(IterationStats {
                iteration,
                mean_abs_llr: app.iter().map(|l| l.abs()).sum::<f64>() / n.max(1) as f64,
                flips,
            });
        }
        Ok(DecodeOutput { bits, app, trace })
    }
}
