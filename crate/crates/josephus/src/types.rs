use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;

/// Arbitrary-precision non-negative integer. Every quantity the engines
/// touch (circle sizes, survivor positions, fixed points) is a `Nat`.
/// Machine words appear only inside the brute-force oracles, whose ranges
/// are bounded by construction.
pub type Nat = BigUint;

/// Exponent of the largest power of two dividing `x`.
pub fn two_adic_valuation(x: &Nat) -> Result<u64> {
    x.trailing_zeros()
        .ok_or_else(|| Error::InvalidInput("the 2-adic valuation of zero is unbounded".into()))
}

/// Where a circle size lands on the survivor function's sawtooth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    /// `J3(n) = n`.
    Fixed,
    /// `J3(n) = n - 1`, a peak that is not fixed.
    PureHigh,
    /// `J3(n)` is 1 or 2, the reset at the foot of a slope-3 segment.
    Low,
    Interior,
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointClass::Fixed => "FIXED",
            PointClass::PureHigh => "PURE_HIGH",
            PointClass::Low => "LOW",
            PointClass::Interior => "INTERIOR",
        })
    }
}

/// Classifies `n` given its survivor position `j`.
///
/// Checks run in precedence order FIXED, PURE_HIGH, LOW, so n = 1 and n = 2
/// (where the fixed and low definitions both match) report FIXED.
pub fn classify_point(n: &Nat, j: &Nat) -> Result<PointClass> {
    if j.is_zero() || j > n {
        return Err(Error::InvalidInput(format!(
            "survivor position {j} is outside [1, {n}]"
        )));
    }
    Ok(if j == n {
        PointClass::Fixed
    } else if *j == n - 1u8 {
        PointClass::PureHigh
    } else if *j <= Nat::from(2u8) {
        PointClass::Low
    } else {
        PointClass::Interior
    })
}

/// A high extremal point: a circle size whose survivor position is `n` or
/// `n - 1`, together with the flags the steppers branch on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalState {
    /// 1-based position in the extremal sequence.
    pub index: u64,
    pub value: Nat,
    /// 0 at a fixed point, 1 at a pure high extremal point.
    /// Always equals `value - josephus_value`.
    pub fixed_indicator: u8,
    /// `value mod 2`.
    pub parity: u8,
    pub josephus_value: Nat,
}

impl ExtremalState {
    /// Anchor of the sequence: the circle of one survives itself.
    pub fn initial() -> Self {
        ExtremalState {
            index: 1,
            value: Nat::one(),
            fixed_indicator: 0,
            parity: 1,
            josephus_value: Nat::one(),
        }
    }

    pub fn is_fixed_point(&self) -> bool {
        self.fixed_indicator == 0
    }
}

/// A fixed point with its 1-based sequence position and the number of pure
/// high extremal points strictly between it and the next fixed point. That
/// count equals the 2-adic valuation of `3 * value + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointRecord {
    pub index: u64,
    pub value: Nat,
    pub pure_count: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Simulate,
    Euler,
    Extremal,
    FixedPoint,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Simulate => "simulate",
            Algorithm::Euler => "euler",
            Algorithm::Extremal => "extremal",
            Algorithm::FixedPoint => "fixed-point",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one evaluation, with enough context to audit how the answer
/// was reached. The oracle algorithms leave the bracket fields empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalResult {
    pub n: Nat,
    pub j: Nat,
    pub algorithm: Algorithm,
    /// Last walked point below `n`; None for n = 1 and for oracles.
    pub bracket_low: Option<Nat>,
    /// First walked point at or above `n`.
    pub bracket_high: Option<Nat>,
    /// Stepper hops separating `n`'s segment from `bracket_low`;
    /// fixed-point algorithm only. Never exceeds `pure_count`.
    pub segment_index: Option<u64>,
    /// Pure points inside the bracket; fixed-point algorithm only.
    pub pure_count: Option<u64>,
    /// Points the driving walk computed, counting its seed. For the
    /// oracles, the number of elimination or recurrence steps instead.
    pub iterations: u64,
}
