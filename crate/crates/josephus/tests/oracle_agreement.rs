//! Every engine checked against the brute-force oracles and against the
//! structure of the sequences they generate.

use std::sync::Arc;

use josephus::extremal::{
    enumerate_extremal, eval_extremal, next_extremal_cases, next_extremal_unified,
};
use josephus::fixed_point::{
    enumerate_fixed_points, eval_fixed_point, pure_point_count_via_log, segment_index,
    FixedPointEngine,
};
use josephus::oracle::{euler_scan, scan_extremal_points};
use josephus::types::ExtremalState;
use josephus::Nat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn stepper_reproduces_the_scanned_sequence() {
    let scanned = scan_extremal_points(1_000_000).unwrap();
    let mut state = ExtremalState::initial();
    assert_eq!(state, scanned[0]);
    for expected in &scanned[1..] {
        state = next_extremal_unified(&state).unwrap();
        assert_eq!(&state, expected);
    }
}

#[test]
fn enumerate_matches_scan_and_adds_the_bracket() {
    let limit = 110_000u64;
    let scanned = scan_extremal_points(limit).unwrap();
    let walked = enumerate_extremal(&Nat::from(limit)).unwrap();
    assert_eq!(walked.len(), scanned.len() + 1);
    assert_eq!(&walked[..scanned.len()], &scanned[..]);
    let bracket = walked.last().unwrap();
    assert!(bracket.value > Nat::from(limit));
    assert!(walked[walked.len() - 2].value <= Nat::from(limit));
}

#[test]
fn both_steppers_agree_to_a_billion() {
    let mut state = ExtremalState::initial();
    while state.value <= Nat::from(1_000_000_000u64) {
        let by_cases = next_extremal_cases(&state).unwrap();
        let by_forms = next_extremal_unified(&state).unwrap();
        assert_eq!(by_cases, by_forms, "diverged after {}", state.value);
        state = by_forms;
    }
}

#[test]
fn pure_runs_between_fixed_points_have_recorded_lengths() {
    let records = enumerate_fixed_points(31).unwrap();
    let mut state = ExtremalState::initial();
    for pair in records.windows(2) {
        assert!(state.is_fixed_point());
        assert_eq!(state.value, pair[0].value);
        // each bracket crosses its pure peaks, then lands on the next
        // fixed point: pure_count + 1 steps in total
        let mut steps = 0u64;
        loop {
            state = next_extremal_unified(&state).unwrap();
            steps += 1;
            if state.is_fixed_point() {
                break;
            }
        }
        assert_eq!(steps, pair[0].pure_count + 1, "bracket at {}", pair[0].value);
        assert_eq!(state.value, pair[1].value);
    }
}

#[test]
fn every_fixed_point_evaluates_to_itself() {
    for record in enumerate_fixed_points(39).unwrap() {
        let res = eval_fixed_point(&record.value).unwrap();
        assert_eq!(res.j, record.value);
        assert_eq!(res.iterations, record.index);
        assert_eq!(res.bracket_high, Some(record.value.clone()));
    }
}

#[test]
fn via_log_route_matches_valuation_route_for_forty_brackets() {
    let records = enumerate_fixed_points(40).unwrap();
    for pair in records.windows(2) {
        assert_eq!(
            pure_point_count_via_log(&pair[0].value, &pair[1].value).unwrap(),
            pair[0].pure_count,
            "bracket at {}",
            pair[0].value
        );
    }
}

#[test]
fn segment_index_at_bracket_edges() {
    let records = enumerate_fixed_points(40).unwrap();
    for pair in records.windows(2) {
        // right endpoint sits after all the bracket's pure peaks
        assert_eq!(
            segment_index(&pair[1].value, &pair[0].value).unwrap(),
            pair[0].pure_count
        );
        // the step just above the left endpoint is always in segment 0
        assert_eq!(
            segment_index(&(&pair[0].value + 1u8), &pair[0].value).unwrap(),
            0
        );
    }
}

#[test]
fn engines_match_oracle_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a6f7365);
    let mut targets: Vec<u64> = (0..1000).map(|_| rng.gen_range(1..=100_000_000u64)).collect();
    targets.sort_unstable();
    targets.dedup();

    let mut next = targets.iter().peekable();
    for (n, j) in euler_scan(*targets.last().unwrap()) {
        if next.peek() == Some(&&n) {
            next.next();
            let nat = Nat::from(n);
            let expected = Nat::from(j);
            assert_eq!(eval_fixed_point(&nat).unwrap().j, expected, "n = {n}");
            assert_eq!(eval_extremal(&nat).unwrap().j, expected, "n = {n}");
        }
    }
    assert!(next.peek().is_none());
}

#[test]
fn shared_cache_agrees_with_fresh_engines_under_contention() {
    let shared = Arc::new(FixedPointEngine::new());
    let handles: Vec<_> = (0..4u64)
        .map(|t| {
            let engine = Arc::clone(&shared);
            std::thread::spawn(move || {
                let fresh = FixedPointEngine::new();
                let mut n = 1 + t * 37;
                while n < 300_000 {
                    let a = engine.eval(&Nat::from(n)).unwrap();
                    let b = fresh.eval(&Nat::from(n)).unwrap();
                    assert_eq!(a, b, "n = {n}");
                    n += 151;
                }
            })
        })
        .collect();
    for h in handles {
        h.join().unwrap();
    }
}

#[test]
fn walk_context_for_the_smallest_inputs() {
    let one = eval_fixed_point(&Nat::from(1u8)).unwrap();
    assert_eq!(one.iterations, 1);
    assert_eq!(one.bracket_low, None);

    let extremal_one = eval_extremal(&Nat::from(1u8)).unwrap();
    assert_eq!(extremal_one.iterations, 1);
    assert_eq!(extremal_one.bracket_low, None);
    assert_eq!(extremal_one.bracket_high, Some(Nat::from(1u8)));
}
