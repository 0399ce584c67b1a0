//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function wraps a plain Rust function of the same name in
//! [`inner`], which the native tests exercise directly.

use wasm_bindgen::prelude::*;

pub mod inner {
    use qcturbo::permutation::{sample_qc, sample_uniform, Permutation};
    use qcturbo::rsc::RscCode;
    use qcturbo::simulation::{run_point, SimConfig, SimPoint};
    use qcturbo::turbo::{DecoderConfig, Puncture, TurboCode};
    use qcturbo::Result;

    pub struct Interleaver {
        pub perm: Permutation,
        pub spread: usize,
        pub period: Option<usize>,
    }

    fn describe(perm: Permutation) -> Result<Interleaver> {
        Ok(Interleaver {
            spread: perm.spread()?,
            period: perm.quasi_cyclic_period(),
            perm,
        })
    }

    pub fn qc_interleaver(n1: usize, n2: usize, seed: u64) -> Result<Interleaver> {
        describe(sample_qc(n1, n2, seed)?.build())
    }

    pub fn uniform_interleaver(n: usize, seed: u64) -> Result<Interleaver> {
        describe(sample_uniform(n, seed)?)
    }

    pub fn lambda(gens: &str) -> Result<String> {
        let code: RscCode = gens.parse()?;
        Ok(code.lambda(4 * code.num_states())?.to_string())
    }

    /// A fixed number of rate-1/2 frames through a random QC turbo code.
    pub fn wer_point(
        n1: usize,
        n2: usize,
        seed: u64,
        gens: &str,
        ebn0_db: f64,
        iterations: usize,
        frames: u64,
    ) -> Result<SimPoint> {
        let perm = sample_qc(n1, n2, seed)?.build();
        let tc = TurboCode::new(gens.parse()?, perm)?.with_puncture(Puncture::Alternate);
        let cfg = SimConfig {
            decoder: DecoderConfig::with_iterations(iterations),
            min_block_errors: u64::MAX,
            max_frames: frames,
            seed,
            workers: 1,
            ..SimConfig::default()
        };
        run_point(&tc, &cfg, ebn0_db)
    }
}

fn js(e: qcturbo::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct Interleaver(inner::Interleaver);

#[wasm_bindgen]
impl Interleaver {
    /// `π(0), …, π(N−1)`.
    pub fn table(&self) -> Vec<u32> {
        self.0.perm.table().iter().map(|&v| v as u32).collect()
    }

    pub fn spread(&self) -> u32 {
        self.0.spread as u32
    }

    /// Smallest quasi-cyclic period, or 0 when there is none.
    pub fn period(&self) -> u32 {
        self.0.period.unwrap_or(0) as u32
    }
}

#[wasm_bindgen]
pub fn qc_interleaver(n1: usize, n2: usize, seed: u64) -> Result<Interleaver, JsError> {
    inner::qc_interleaver(n1, n2, seed).map(Interleaver).map_err(js)
}

#[wasm_bindgen]
pub fn uniform_interleaver(n: usize, seed: u64) -> Result<Interleaver, JsError> {
    inner::uniform_interleaver(n, seed).map(Interleaver).map_err(js)
}

#[wasm_bindgen]
pub fn lambda(gens: &str) -> Result<String, JsError> {
    inner::lambda(gens).map_err(js)
}

/// Returns `[frames, block_errors, bit_errors, wer, ber]`.
#[wasm_bindgen]
pub fn wer_point(
    n1: usize,
    n2: usize,
    seed: u64,
    gens: &str,
    ebn0_db: f64,
    iterations: usize,
    frames: u64,
) -> Result<Vec<f64>, JsError> {
    let p = inner::wer_point(n1, n2, seed, gens, ebn0_db, iterations, frames).map_err(js)?;
    Ok(vec![
        p.frames as f64,
        p.block_errors as f64,
        p.bit_errors as f64,
        p.wer(),
        p.ber(),
    ])
}

#[cfg(test)]
mod tests {
    use super::inner;

    #[test]
    fn interleavers() {
        let q = inner::qc_interleaver(10, 10, 1).unwrap();
        assert_eq!(q.perm.len(), 100);
        assert!(q.period.is_some_and(|p| 10 % p == 0));
        let u = inner::uniform_interleaver(100, 1).unwrap();
        assert!(u.period.is_none());
        assert!(u.spread >= 2);
    }

    #[test]
    fn lambda_and_errors() {
        assert_eq!(inner::lambda("23,35").unwrap(), "4/11");
        assert!(inner::lambda("8,5").is_err());
    }

    #[test]
    fn wer_runs_fixed_frames() {
        let p = inner::wer_point(8, 8, 2, "7,5", 2.0, 2, 10).unwrap();
        assert_eq!(p.frames, 10);
        assert!(inner::wer_point(6, 6, 2, "7,5", 2.0, 2, 10).is_err());
    }
}
