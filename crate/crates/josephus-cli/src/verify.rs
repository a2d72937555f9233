//! Cross-checks every implementation against the linear recurrence oracle.
//!
//! The scan walks n = 1..=limit once. For each n the fixed-point engine and
//! the extremal walk must reproduce the oracle value exactly. Below the
//! simulate cap the full elimination replay runs as well, so the cheap
//! recurrence is itself anchored to a from-scratch computation on a prefix.

use josephus::fixed_point::FixedPointEngine;
use josephus::oracle::{euler_scan, simulate_with_cap};
use josephus::{extremal, Error, Nat, Result};

pub struct Mismatch {
    pub n: u64,
    pub algorithm: &'static str,
    pub got: String,
    pub expected: u64,
}

pub struct VerifyReport {
    pub limit: u64,
    pub simulate_limit: u64,
    pub mismatches: Vec<Mismatch>,
}

pub fn run(limit: u64, simulate_limit: u64) -> Result<VerifyReport> {
    if limit == 0 {
        return Err(Error::InvalidInput(
            "verification limit must be at least 1".into(),
        ));
    }
    let engine = FixedPointEngine::new();
    let sim_cap = simulate_limit.min(limit);
    let mut mismatches = Vec::new();
    for (n, expected) in euler_scan(limit) {
        let big_n = Nat::from(n);
        let via_fixed = engine.eval(&big_n)?;
        if via_fixed.j != Nat::from(expected) {
            mismatches.push(Mismatch {
                n,
                algorithm: "fixed-point",
                got: via_fixed.j.to_string(),
                expected,
            });
        }
        let via_extremal = extremal::eval_extremal(&big_n)?;
        if via_extremal.j != Nat::from(expected) {
            mismatches.push(Mismatch {
                n,
                algorithm: "extremal",
                got: via_extremal.j.to_string(),
                expected,
            });
        }
        if n <= sim_cap {
            let survivor = simulate_with_cap(n, sim_cap)?.survivor;
            if u64::from(survivor) != expected {
                mismatches.push(Mismatch {
                    n,
                    algorithm: "simulate",
                    got: survivor.to_string(),
                    expected,
                });
            }
        }
    }
    mismatches.sort_by_key(|m| m.n);
    Ok(VerifyReport {
        limit,
        simulate_limit,
        mismatches,
    })
}
