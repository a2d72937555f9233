//! Walking only the fixed points of the survivor function.
//!
//! Each fixed point determines its successor in closed form, jumping over
//! the pure peaks in between. Evaluating `J3(n)` then takes one walk to the
//! bracketing fixed point plus a closed-form segment lookup, instead of a
//! walk through every peak.

use crate::error::{Error, Result};
use crate::types::{two_adic_valuation, Algorithm, EvalResult, FixedPointRecord, Nat};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use std::sync::{OnceLock, RwLock};

/// Number of pure peaks strictly between `fixed_point` and its successor:
/// the 2-adic valuation of `3 * fixed_point + 2`.
pub fn pure_point_count(fixed_point: &Nat) -> Result<u64> {
    if fixed_point.is_zero() {
        return Err(Error::InvalidInput("fixed points start at 1".into()));
    }
    two_adic_valuation(&(Nat::from(3u8) * fixed_point + 2u8))
}

fn pow_of(base: u8, exp: u64, what: &str) -> Result<Nat> {
    let exp = u32::try_from(exp)
        .map_err(|_| Error::Internal(format!("{what} exponent {exp} out of range")))?;
    Ok(Pow::pow(&Nat::from(base), exp))
}

/// Successor of a fixed point: with `m` its pure-point count and
/// `t = 3 * fixed_point + 2`, the next fixed point is
/// `(3^m * t - 2^m) / 2^(m + 1)`. The division is exact for genuine fixed
/// points; a remainder means the caller passed something else.
pub fn next_fixed_point(fixed_point: &Nat) -> Result<Nat> {
    if fixed_point.is_zero() {
        return Err(Error::InvalidInput("fixed points start at 1".into()));
    }
    let t = Nat::from(3u8) * fixed_point + 2u8;
    let m = two_adic_valuation(&t)?;
    let pow2 = Nat::one() << u32::try_from(m)
        .map_err(|_| Error::Internal(format!("valuation {m} out of shift range")))?;
    let numerator = pow_of(3, m, "successor")? * &t;
    if numerator < pow2 {
        return Err(Error::Internal(format!(
            "successor numerator underflows at {fixed_point}"
        )));
    }
    let numerator = numerator - &pow2;
    let (q, rem) = numerator.div_rem(&(pow2 << 1u32));
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "successor division is not exact at {fixed_point}; not a fixed point?"
        )));
    }
    Ok(q)
}

/// How many stepper hops separate `n`'s slope-3 segment from the fixed
/// point below it: the least `m >= 0` with
/// `2^m * (2n + 1) <= 3^m * (3 * bracket_low + 2)`.
///
/// Computed by exact integer comparison. A floating-point ceiling of the
/// equivalent logarithm misrounds near segment boundaries once values
/// outgrow the float mantissa, so no float touches this path.
pub fn segment_index(n: &Nat, bracket_low: &Nat) -> Result<u64> {
    if bracket_low.is_zero() || n <= bracket_low {
        return Err(Error::InvalidInput(format!(
            "n = {n} does not lie above the fixed point {bracket_low}"
        )));
    }
    let mut lhs = Nat::from(2u8) * n + 1u8;
    let mut rhs = Nat::from(3u8) * bracket_low + 2u8;
    let mut m: u64 = 0;
    while lhs > rhs {
        lhs <<= 1u32;
        rhs *= 3u8;
        m += 1;
    }
    Ok(m)
}

/// Pure-point count recomputed from the bracket's two endpoints alone,
/// without the valuation shortcut: the segment index of the right endpoint
/// over the left. Kept as an independent route so the two can be checked
/// against each other.
pub fn pure_point_count_via_log(fixed_point: &Nat, next: &Nat) -> Result<u64> {
    segment_index(next, fixed_point)
}

/// Generates and caches the fixed-point sequence.
///
/// The cache only ever grows and existing records are never rewritten, so
/// any number of concurrent readers plus occasional extending writers see
/// the same prefix. Results are identical with a cold or warm cache.
pub struct FixedPointEngine {
    cache: RwLock<Vec<FixedPointRecord>>,
}

impl Default for FixedPointEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl FixedPointEngine {
    pub fn new() -> Self {
        FixedPointEngine {
            cache: RwLock::new(vec![FixedPointRecord {
                index: 1,
                value: Nat::one(),
                pure_count: 0,
            }]),
        }
    }

    fn extend_while<F>(&self, needs_more: F) -> Result<()>
    where
        F: Fn(&[FixedPointRecord]) -> bool,
    {
        if !needs_more(&self.cache.read().expect("cache lock poisoned")) {
            return Ok(());
        }
        let mut cache = self.cache.write().expect("cache lock poisoned");
        while needs_more(&cache) {
            let last = cache.last().expect("cache is seeded at construction");
            let index = last.index + 1;
            let value = next_fixed_point(&last.value)?;
            let pure_count = pure_point_count(&value)?;
            cache.push(FixedPointRecord {
                index,
                value,
                pure_count,
            });
        }
        Ok(())
    }

    /// First `count` fixed-point records.
    pub fn records(&self, count: u64) -> Result<Vec<FixedPointRecord>> {
        let count = usize::try_from(count).map_err(|_| Error::Capacity {
            what: "count",
            requested: count.to_string(),
            cap: usize::MAX.to_string(),
        })?;
        self.extend_while(|c| c.len() < count)?;
        Ok(self.cache.read().expect("cache lock poisoned")[..count].to_vec())
    }

    /// Bracket `(low, high]` with `high` the first fixed point at or above
    /// `n`. `low` is None only for n = 1.
    pub fn bracket(&self, n: &Nat) -> Result<(Option<FixedPointRecord>, FixedPointRecord)> {
        if n.is_zero() {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        self.extend_while(|c| c.last().expect("seeded").value < *n)?;
        let cache = self.cache.read().expect("cache lock poisoned");
        let pos = cache.partition_point(|r| r.value < *n);
        let high = cache[pos].clone();
        let low = pos.checked_sub(1).map(|p| cache[p].clone());
        Ok((low, high))
    }

    /// Membership test by regenerating the sequence up to `n`.
    pub fn contains(&self, n: &Nat) -> Result<bool> {
        if n.is_zero() {
            return Ok(false);
        }
        let (_, high) = self.bracket(n)?;
        Ok(high.value == *n)
    }

    /// Evaluates `J3(n)` from the bracketing fixed points.
    ///
    /// With `lo` the fixed point below `n` and `m` the segment index,
    /// `J3(n) = 3n + 1 - 3^m * (3 * lo + 2) / 2^m`. The division is exact
    /// whenever `m` stays within the bracket's pure-point count, which is
    /// checked. At the bracket's right endpoint the formula collapses to
    /// `J3(n) = n`.
    ///
    /// `iterations` counts the fixed points computed, seed included.
    pub fn eval(&self, n: &Nat) -> Result<EvalResult> {
        if n.is_zero() {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        // 1 and 2 are themselves the first two fixed points; return them
        // directly instead of driving the bracket machinery
        if n.is_one() {
            return Ok(EvalResult {
                n: n.clone(),
                j: Nat::one(),
                algorithm: Algorithm::FixedPoint,
                bracket_low: None,
                bracket_high: Some(Nat::one()),
                segment_index: None,
                pure_count: None,
                iterations: 1,
            });
        }
        if *n == Nat::from(2u8) {
            return Ok(EvalResult {
                n: n.clone(),
                j: n.clone(),
                algorithm: Algorithm::FixedPoint,
                bracket_low: Some(Nat::one()),
                bracket_high: Some(n.clone()),
                segment_index: Some(0),
                pure_count: Some(0),
                iterations: 2,
            });
        }
        let (low, high) = self.bracket(n)?;
        let low = low.ok_or_else(|| {
            Error::Internal(format!("no fixed point below n = {n}"))
        })?;
        let seg = segment_index(n, &low.value)?;
        if seg > low.pure_count {
            return Err(Error::Internal(format!(
                "segment index {seg} escapes its bracket (pure-point count {})",
                low.pure_count
            )));
        }
        let numerator = pow_of(3, seg, "segment")? * (Nat::from(3u8) * &low.value + 2u8);
        let shift = u32::try_from(seg)
            .map_err(|_| Error::Internal(format!("segment index {seg} out of shift range")))?;
        let (subtrahend, rem) = numerator.div_rem(&(Nat::one() << shift));
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "segment division is not exact at n = {n}"
            )));
        }
        let total = Nat::from(3u8) * n + 1u8;
        if total < subtrahend {
            return Err(Error::Internal(format!(
                "segment value overshoots at n = {n}"
            )));
        }
        Ok(EvalResult {
            n: n.clone(),
            j: total - subtrahend,
            algorithm: Algorithm::FixedPoint,
            bracket_low: Some(low.value),
            bracket_high: Some(high.value),
            segment_index: Some(seg),
            pure_count: Some(low.pure_count),
            iterations: high.index,
        })
    }
}

fn shared_engine() -> &'static FixedPointEngine {
    static ENGINE: OnceLock<FixedPointEngine> = OnceLock::new();
    ENGINE.get_or_init(FixedPointEngine::new)
}

/// [`FixedPointEngine::eval`] on a process-wide engine, so repeated calls
/// reuse the already generated sequence.
pub fn eval_fixed_point(n: &Nat) -> Result<EvalResult> {
    shared_engine().eval(n)
}

/// First `count` fixed points with their pure-point counts.
pub fn enumerate_fixed_points(count: u64) -> Result<Vec<FixedPointRecord>> {
    if count == 0 {
        return Err(Error::InvalidInput("count must be at least 1".into()));
    }
    shared_engine().records(count)
}

/// True iff `n` appears in the fixed-point sequence.
pub fn verify_fixed_point(n: &Nat) -> Result<bool> {
    shared_engine().contains(n)
}
