//! Quantifies what the fixed-point walk saves over the all-peaks walk, and
//! emits plot-ready data for the function itself.

use crate::error::{Error, Result};
use crate::extremal::{eval_extremal, next_extremal_unified};
use crate::fixed_point::enumerate_fixed_points;
use crate::fixed_point::eval_fixed_point;
use crate::oracle::euler_scan;
use crate::types::{classify_point, ExtremalState, Nat, PointClass};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::time::{Duration, Instant};

/// Iteration tallies for one evaluation, measured over the same span for
/// both engines: every point from the seed through the fixed point closing
/// `n`'s bracket. Each point in that span is either a fixed point or a pure
/// peak, so `extremal_iters = fixed_point_iters + pure_point_count` holds
/// exactly. The extremal evaluator itself may stop a few points short of
/// the span's end when a pure peak already brackets `n`.
#[derive(Clone, Debug)]
pub struct IterationComparison {
    pub n: Nat,
    pub j: Nat,
    pub fixed_point_iters: u64,
    pub extremal_iters: u64,
    pub pure_point_count: u64,
    /// Wall-clock observations are informational only; the iteration
    /// counts above are the reproducible quantities.
    pub fixed_point_wall: Duration,
    pub extremal_wall: Duration,
}

pub fn iteration_comparison(n: &Nat) -> Result<IterationComparison> {
    let started = Instant::now();
    let fixed = eval_fixed_point(n)?;
    let fixed_point_wall = started.elapsed();
    let started = Instant::now();
    let extremal = eval_extremal(n)?;
    let extremal_wall = started.elapsed();
    if fixed.j != extremal.j {
        return Err(Error::Internal(format!(
            "engines disagree at n = {n}: {} vs {}",
            fixed.j, extremal.j
        )));
    }
    let mut state = ExtremalState::initial();
    let mut total: u64 = 1;
    let mut pure: u64 = 0;
    while state.fixed_indicator == 1 || state.value < *n {
        state = next_extremal_unified(&state)?;
        total += 1;
        pure += u64::from(state.fixed_indicator == 1);
    }
    if total != fixed.iterations + pure {
        return Err(Error::Internal(format!(
            "iteration tallies disagree at n = {n}: {total} != {} + {pure}",
            fixed.iterations
        )));
    }
    Ok(IterationComparison {
        n: n.clone(),
        j: fixed.j,
        fixed_point_iters: fixed.iterations,
        extremal_iters: total,
        pure_point_count: pure,
        fixed_point_wall,
        extremal_wall,
    })
}

/// Gain metrics for walk lengths `q = 1..=q_max`, all in exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GainSeries {
    pub q_max: u64,
    /// Entry `q - 1` holds the total number of pure peaks across the first
    /// `q - 1` brackets: the points a fixed-point walk of length `q` skips.
    pub pure_prefix_sums: Vec<u64>,
    /// Bracket-weighted gain in percent: each of the first `q - 1` brackets
    /// contributes `(1 - q / (m + q)) * 100`, `m` being its pure-peak
    /// count. Note this sum is unbounded in `q`.
    pub gain_pct: Vec<BigRational>,
    /// Share of walk iterations avoided, in percent:
    /// `100 * s / (q + s)` with `s` the pure prefix sum.
    pub iteration_gain_pct: Vec<BigRational>,
}

fn rat(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn bracket_gain(counts: &[u64], q: u64) -> BigRational {
    let hundred = rat(100);
    let mut sum = BigRational::zero();
    for &m in counts {
        sum += (BigRational::one() - rat(q) / rat(m + q)) * hundred.clone();
    }
    sum
}

fn iteration_gain(counts: &[u64], q: u64) -> BigRational {
    let s: u64 = counts.iter().sum();
    rat(100) * rat(s) / rat(q + s)
}

fn pure_counts_below(q: u64) -> Result<Vec<u64>> {
    if q <= 1 {
        return Ok(Vec::new());
    }
    Ok(enumerate_fixed_points(q - 1)?
        .iter()
        .map(|r| r.pure_count)
        .collect())
}

/// The bracket-weighted gain for a single `q`.
pub fn gain_percent(q: u64) -> Result<BigRational> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be at least 1".into()));
    }
    Ok(bracket_gain(&pure_counts_below(q)?, q))
}

/// The avoided-iterations share for a single `q`.
pub fn iteration_gain_percent(q: u64) -> Result<BigRational> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be at least 1".into()));
    }
    Ok(iteration_gain(&pure_counts_below(q)?, q))
}

pub fn gain_series(q_max: u64) -> Result<GainSeries> {
    if q_max == 0 {
        return Err(Error::InvalidInput("q_max must be at least 1".into()));
    }
    let counts = pure_counts_below(q_max)?;
    let mut pure_prefix_sums = Vec::with_capacity(counts.len() + 1);
    let mut gain_pct = Vec::with_capacity(counts.len() + 1);
    let mut iteration_gain_pct = Vec::with_capacity(counts.len() + 1);
    for q in 1..=q_max {
        let prefix = &counts[..(q - 1) as usize];
        pure_prefix_sums.push(prefix.iter().sum());
        gain_pct.push(bracket_gain(prefix, q));
        iteration_gain_pct.push(iteration_gain(prefix, q));
    }
    Ok(GainSeries {
        q_max,
        pure_prefix_sums,
        gain_pct,
        iteration_gain_pct,
    })
}

/// One plot row of the survivor function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRow {
    pub n: u64,
    pub j3: u64,
    pub class: PointClass,
}

/// The survivor function over `1..=limit` with every point classified,
/// ready for external plotting.
pub fn function_graph(limit: u64) -> Result<Vec<GraphRow>> {
    if limit == 0 {
        return Err(Error::InvalidInput("limit must be at least 1".into()));
    }
    euler_scan(limit)
        .map(|(n, j)| {
            Ok(GraphRow {
                n,
                j3: j,
                class: classify_point(&Nat::from(n), &Nat::from(j))?,
            })
        })
        .collect()
}
