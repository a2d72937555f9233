//! Brute-force reference implementations used to verify the engines.
//!
//! Two deliberately different constructions: [`simulate`] plays out the
//! elimination process on an explicit index list, [`euler_eval`] runs the
//! classic survivor recurrence. They share no code, so agreement between
//! them is strong evidence of correctness at oracle scale.

use crate::error::{Error, Result};
use crate::types::{ExtremalState, Nat};

/// Hard ceiling for [`simulate`]. The index-list deletion scheme shifts a
/// dense vector on every elimination, so cost grows quadratically; a
/// million participants is already minutes of work.
pub const DEFAULT_SIMULATE_CAP: u64 = 1_000_000;

/// Full record of one elimination game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationTrace {
    pub n: u64,
    /// Original positions in the order eliminated; length `n - 1`.
    pub elimination_order: Vec<u64>,
    pub survivor: u64,
}

pub fn simulate(n: u64) -> Result<SimulationTrace> {
    simulate_with_cap(n, DEFAULT_SIMULATE_CAP)
}

/// Plays the game: people stand in a circle at positions `1..=n`, counting
/// starts at position 1, and every person reaching count 3 steps out.
pub fn simulate_with_cap(n: u64, cap: u64) -> Result<SimulationTrace> {
    if n == 0 {
        return Err(Error::InvalidInput("circle size must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::Capacity {
            what: "n",
            requested: n.to_string(),
            cap: cap.to_string(),
        });
    }
    let len = n as usize;
    let mut alive: Vec<u32> = (1..=len as u32).collect();
    let mut order = Vec::with_capacity(len - 1);
    let mut cursor = 0usize;
    while alive.len() > 1 {
        // the person at `cursor` holds count 1, so count 3 lands two slots on
        let idx = (cursor + 2) % alive.len();
        order.push(u64::from(alive.remove(idx)));
        // counting resumes at the survivor now occupying the freed slot
        cursor = if idx < alive.len() { idx } else { 0 };
    }
    Ok(SimulationTrace {
        n,
        elimination_order: order,
        survivor: u64::from(alive[0]),
    })
}

/// Survivor position in O(n) time and O(1) space.
pub fn euler_eval(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("circle size must be at least 1".into()));
    }
    let mut j: u64 = 1;
    for m in 2..=n {
        // j enters in [1, m - 1], so one conditional subtraction keeps
        // it in [1, m]
        j += 3;
        if j > m {
            j -= m;
        }
    }
    Ok(j)
}

/// Iterator over `(n, J3(n))` for `n = 1..=limit`, sharing one incremental
/// recurrence pass. Exhaustive checks use this instead of calling
/// [`euler_eval`] per point, which would be quadratic overall.
pub fn euler_scan(limit: u64) -> impl Iterator<Item = (u64, u64)> {
    let mut j: u64 = 0;
    (1..=limit).map(move |n| {
        if n == 1 {
            j = 1;
        } else {
            j += 3;
            if j > n {
                j -= n;
            }
        }
        (n, j)
    })
}

/// Every high extremal point up to `limit`, found by exhaustive scan.
/// This is the ground truth the extremal-sequence stepper is tested against.
pub fn scan_extremal_points(limit: u64) -> Result<Vec<ExtremalState>> {
    if limit == 0 {
        return Err(Error::InvalidInput("scan limit must be at least 1".into()));
    }
    let mut out = Vec::new();
    for (n, j) in euler_scan(limit) {
        if j + 1 >= n {
            out.push(ExtremalState {
                index: out.len() as u64 + 1,
                value: Nat::from(n),
                fixed_indicator: (n - j) as u8,
                parity: (n % 2) as u8,
                josephus_value: Nat::from(j),
            });
        }
    }
    Ok(out)
}
