//! Exact evaluation of the Josephus survivor function with step 3.
//!
//! `J3(n)` is the original position of the last survivor when every third
//! person in a circle of `n` people is eliminated. The graph of `J3` is a
//! sawtooth of slope-3 segments whose peaks are the "high extremal points"
//! (`J3(n)` equals `n` or `n - 1`). This crate provides:
//!
//! * two brute-force oracles (a full elimination simulation and a
//!   linear-time recurrence scan),
//! * an engine that walks the sequence of high extremal points,
//! * a faster engine that walks only the fixed points (`J3(n) = n`),
//!   skipping the pure peaks in between,
//! * analysis helpers quantifying how much work the fixed-point walk saves.
//!
//! Engine arithmetic is arbitrary precision throughout; the fixed points
//! pass 10^14 within forty steps and grow without bound.

pub mod bench;
pub mod error;
pub mod extremal;
pub mod fixed_point;
pub mod oracle;
pub mod types;

pub use error::{Error, Result};
pub use types::{Algorithm, EvalResult, ExtremalState, FixedPointRecord, Nat, PointClass};
