//! BPSK over AWGN Monte Carlo estimation of word and bit error rates.
//!
//! Frame `k` draws its information bits and noise from a ChaCha8 stream keyed
//! by `(seed, k)`, and the stopping rule is applied in frame order, so the
//! counts do not depend on the number of workers.

use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;

use crate::turbo::{DecoderConfig, TurboCode};
use crate::{Bit, Error, Result};

/// Bit 0 maps to +1, bit 1 to −1.
pub fn bpsk_modulate(bits: &[Bit]) -> Vec<f64> {
    bits.iter().map(|&b| 1.0 - 2.0 * f64::from(b)).collect()
}

pub fn awgn<R: Rng + ?Sized>(symbols: &[f64], sigma: f64, rng: &mut R) -> Result<Vec<f64>> {
    let normal = Normal::new(0.0, sigma)
        .ok()
        .filter(|_| sigma > 0.0)
        .ok_or_else(|| Error::Domain(format!("noise deviation must be positive, got {sigma}")))?;
    Ok(symbols.iter().map(|s| s + normal.sample(rng)).collect())
}

/// `2y/σ²`; positive means bit 0.
pub fn channel_llr(received: &[f64], sigma: f64) -> Result<Vec<f64>> {
    if sigma.is_nan() || sigma <= 0.0 {
        return Err(Error::Domain(format!("noise deviation must be positive, got {sigma}")));
    }
    let k = 2.0 / (sigma * sigma);
    Ok(received.iter().map(|y| k * y).collect())
}

/// Noise deviation for a given `Eb/N0` in dB at code rate `rate`.
pub fn ebn0_to_sigma(ebn0_db: f64, rate: f64) -> Result<f64> {
    if !(rate > 0.0 && rate <= 1.0) {
        return Err(Error::Domain(format!("rate must lie in (0, 1], got {rate}")));
    }
    Ok((1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0))).sqrt())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimConfig {
    pub decoder: DecoderConfig,
    pub min_block_errors: u64,
    pub min_bit_errors: u64,
    pub max_frames: u64,
    pub seed: u64,
    pub workers: usize,
    /// Replaces the `Eb/N0`-derived noise deviation when set.
    pub sigma_override: Option<f64>,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            decoder: DecoderConfig::default(),
            min_block_errors: 100,
            min_bit_errors: 500,
            max_frames: 10_000_000,
            seed: 0,
            workers: 1,
            sigma_override: None,
        }
    }
}

impl SimConfig {
    fn validate(&self) -> Result<()> {
        if self.min_block_errors == 0 {
            return Err(Error::Domain("min_block_errors must be at least 1".into()));
        }
        if self.decoder.iterations == 0 {
            return Err(Error::Domain("iterations must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::Domain("workers must be at least 1".into()));
        }
        if self.max_frames == 0 {
            return Err(Error::Domain("max_frames must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimPoint {
    pub ebn0_db: f64,
    pub frames: u64,
    pub block_errors: u64,
    pub bit_errors: u64,
    /// Information bits per frame.
    pub frame_len: usize,
    /// The frame cap was hit before the stopping rule was met.
    pub censored: bool,
    pub wall_time: f64,
}

impl SimPoint {
    pub fn wer(&self) -> f64 {
        self.block_errors as f64 / self.frames as f64
    }

    pub fn ber(&self) -> f64 {
        self.bit_errors as f64 / (self.frames as f64 * self.frame_len as f64)
    }

    /// Counts comparable across runs (wall time excluded).
    pub fn counts(&self) -> (u64, u64, u64, bool) {
        (self.frames, self.block_errors, self.bit_errors, self.censored)
    }
}

/// Elapsed-seconds closure; browsers without a monotonic clock report 0.
#[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
fn stopwatch() -> impl Fn() -> f64 {
    let start = std::time::Instant::now();
    move || start.elapsed().as_secs_f64()
}

#[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
fn stopwatch() -> impl Fn() -> f64 {
    || 0.0
}

fn frame_rng(seed: u64, frame: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(frame);
    rng
}

/// Runs frames in index order until both error thresholds are met or the cap
/// is reached. `frame_errors(k)` returns the bit errors of frame `k`.
fn run_frames<F>(cfg: &SimConfig, ebn0_db: f64, frame_len: usize, frame_errors: F) -> Result<SimPoint>
where
    F: Fn(u64) -> Result<u64> + Sync,
{
    let elapsed = stopwatch();
    let batch = (cfg.workers as u64 * 8).max(16);
    let pool = if cfg.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.workers)
                .build()
                .map_err(|e| Error::Resource(e.to_string()))?,
        )
    } else {
        None
    };
    let (mut frames, mut blocks, mut bits) = (0u64, 0u64, 0u64);
    let mut done = false;
    while !done && frames < cfg.max_frames {
        let hi = (frames + batch).min(cfg.max_frames);
        let errs: Vec<u64> = match &pool {
            Some(p) => p.install(|| (frames..hi).into_par_iter().map(&frame_errors).collect::<Result<_>>())?,
            None => (frames..hi).map(&frame_errors).collect::<Result<_>>()?,
        };
        for e in errs {
            frames += 1;
            bits += e;
            blocks += u64::from(e > 0);
            if blocks >= cfg.min_block_errors && bits >= cfg.min_bit_errors {
                done = true;
                break;
            }
        }
    }
    Ok(SimPoint {
        ebn0_db,
        frames,
        block_errors: blocks,
        bit_errors: bits,
        frame_len,
        censored: !done,
        wall_time: elapsed(),
    })
}

/// Simulates one `Eb/N0` point of a turbo code with uniformly random frames.
pub fn run_point(tc: &TurboCode, cfg: &SimConfig, ebn0_db: f64) -> Result<SimPoint> {
    cfg.validate()?;
    let sigma = match cfg.sigma_override {
        Some(s) => s,
        None => ebn0_to_sigma(ebn0_db, tc.rate())?,
    };
    let n = tc.len();
    run_frames(cfg, ebn0_db, n, |k| {
        let mut rng = frame_rng(cfg.seed, k);
        let info: Vec<Bit> = (0..n).map(|_| Bit::from(rng.random::<bool>())).collect();
        let tx = tc.puncture_codeword(&tc.encode(&info)?);
        let rx = awgn(&bpsk_modulate(&tx), sigma, &mut rng)?;
        let frame = tc.depuncture(&channel_llr(&rx, sigma)?)?;
        let out = tc.decode(&frame, &cfg.decoder)?;
        Ok(out.bits.iter().zip(&info).filter(|(a, b)| a != b).count() as u64)
    })
}

/// Runs [`run_point`] for each entry of `ebn0_db`.
pub fn run_sweep(tc: &TurboCode, cfg: &SimConfig, ebn0_db: &[f64]) -> Result<Vec<SimPoint>> {
    if ebn0_db.is_empty() {
        return Err(Error::Domain("at least one Eb/N0 point is required".into()));
    }
    ebn0_db.iter().map(|&p| run_point(tc, cfg, p)).collect()
}

/// Uncoded BPSK with hard decisions, `frame_len` bits per frame.
pub fn run_uncoded(frame_len: usize, cfg: &SimConfig, ebn0_db: f64) -> Result<SimPoint> {
    cfg.validate()?;
    let sigma = ebn0_to_sigma(ebn0_db, 1.0)?;
    run_frames(cfg, ebn0_db, frame_len, |k| {
        let mut rng = frame_rng(cfg.seed, k);
        let info: Vec<Bit> = (0..frame_len).map(|_| Bit::from(rng.random::<bool>())).collect();
        let rx = awgn(&bpsk_modulate(&info), sigma, &mut rng)?;
        Ok(rx.iter().zip(&info).filter(|(y, &b)| Bit::from(**y < 0.0) != b).count() as u64)
    })
}

pub const CSV_HEADER: &str = "ebn0_db,frames,block_errors,bit_errors,wer,ber,censored";

pub fn write_csv<W: Write>(mut out: W, points: &[SimPoint]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for p in points {
        writeln!(
            out,
            "{},{},{},{},{:.5e},{:.5e},{}",
            p.ebn0_db,
            p.frames,
            p.block_errors,
            p.bit_errors,
            p.wer(),
            p.ber(),
            p.censored
        )?;
    }
    Ok(())
}
