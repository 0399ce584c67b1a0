//! Quasi-cyclic turbo codes.
//!
//! This crate builds bi-dimensional quasi-cyclic interleavers, encodes and
//! iteratively decodes parallel turbo codes with tail-biting recursive
//! systematic constituents, and provides the combinatorial machinery used to
//! reason about their minimum distance (trellis weight, π-weight chains,
//! M-cycling counts). A small BPSK/AWGN Monte Carlo harness measures word
//! error rates.
//!
//! ```
//! use qcturbo::{permutation::QcSpec, rsc::RscCode, turbo::TurboCode};
//!
//! let spec = QcSpec::new(5, 5, vec![3, 2, 0, 4, 1], vec![0, 2, 1, 3, 4]).unwrap();
//! let perm = spec.build();
//! assert_eq!(perm.apply(1), 12);
//!
//! let code = RscCode::from_octal(0o7, 0o5).unwrap();
//! assert_eq!(code.lambda(64).unwrap().to_string(), "1/2");
//!
//! let tc = TurboCode::new(code, perm).unwrap();
//! let cw = tc.encode(&[0u8; 25]).unwrap();
//! assert_eq!(cw.weight(), 0);
//! ```

pub mod analysis;
mod error;
pub mod gf2;
pub mod permutation;
pub mod rsc;
pub mod simulation;
pub mod tables;
pub mod turbo;

pub use error::{Error, Result};

/// Hard bit, always 0 or 1.
pub type Bit = u8;
