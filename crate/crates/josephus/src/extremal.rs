//! Stepping through the high extremal points of the survivor function.
//!
//! Consecutive peaks obey an exact recurrence: the next peak sits near
//! 3n/2 and its flags follow from the current parity and fixed indicator.
//! Two interchangeable steppers are provided. [`next_extremal_cases`]
//! dispatches on the four (indicator, parity) combinations;
//! [`next_extremal_unified`] evaluates closed forms covering all four.
//! They must agree field for field, and the rest of the crate drives the
//! unified form.

use crate::error::{Error, Result};
use crate::types::{Algorithm, EvalResult, ExtremalState, Nat};
use num_integer::Integer;
use num_traits::Zero;

/// `base + k` for a small signed offset, guarding underflow.
fn add_signed(base: &Nat, k: i64) -> Result<Nat> {
    if k >= 0 {
        Ok(base + Nat::from(k as u64))
    } else {
        let d = Nat::from(k.unsigned_abs());
        if *base < d {
            return Err(Error::Internal(format!(
                "offset {k} underflows {base}"
            )));
        }
        Ok(base - d)
    }
}

fn half_exact(x: Nat, what: &str) -> Result<Nat> {
    if x.is_odd() {
        return Err(Error::Internal(format!("{what} = {x} is not even")));
    }
    Ok(x >> 1u32)
}

fn check_bit(v: i64, what: &str) -> Result<u8> {
    if v == 0 || v == 1 {
        Ok(v as u8)
    } else {
        Err(Error::Internal(format!("{what} = {v} is not a bit")))
    }
}

/// Successor peak by four-way dispatch on (fixed_indicator, parity).
pub fn next_extremal_cases(s: &ExtremalState) -> Result<ExtremalState> {
    let three_n = Nat::from(3u8) * &s.value;
    let (value, fixed_indicator) = match (s.fixed_indicator, s.parity) {
        (1, 0) => (half_exact(three_n + 2u8, "3n+2")?, 0u8),
        (1, 1) => (half_exact(three_n + 1u8, "3n+1")?, 1u8),
        (0, 0) => (half_exact(three_n, "3n")?, 1u8),
        (0, 1) => (half_exact(three_n + 1u8, "3n+1")?, 0u8),
        (f, r) => {
            return Err(Error::Internal(format!(
                "state flags out of range: f = {f}, r = {r}"
            )))
        }
    };
    let josephus_value = add_signed(&value, -i64::from(fixed_indicator))?;
    let parity = u8::from(value.is_odd());
    Ok(ExtremalState {
        index: s.index + 1,
        value,
        fixed_indicator,
        parity,
        josephus_value,
    })
}

/// Successor peak by the closed forms. Every field is computed from its own
/// formula; the cross-field identities (j = n - f, parity matches n) are
/// then checked rather than assumed.
pub fn next_extremal_unified(s: &ExtremalState) -> Result<ExtremalState> {
    let f = i64::from(check_bit(i64::from(s.fixed_indicator), "fixed indicator")?);
    let r = i64::from(check_bit(i64::from(s.parity), "parity")?);
    let sign = 2 * f - 1;
    let three_n = Nat::from(3u8) * &s.value;

    let value = half_exact(
        add_signed(&(&three_n + 1u8), (1 - r) * sign)?,
        "peak numerator",
    )?;
    let josephus_value = half_exact(
        add_signed(&three_n, (2 - 3 * r) * sign)?,
        "survivor numerator",
    )?;
    let fixed_indicator = check_bit(f - (1 - r) * sign, "next fixed indicator")?;
    // transient parity of the midpoint (3n + 2 - r) / 2
    let s_aux = i64::from(half_exact(add_signed(&three_n, 2 - r)?, "midpoint")?.is_odd());
    let parity = check_bit(s_aux - (1 - r) * (1 - f) * (2 * s_aux - 1), "next parity")?;

    let out = ExtremalState {
        index: s.index + 1,
        value,
        fixed_indicator,
        parity,
        josephus_value,
    };
    if out.josephus_value != add_signed(&out.value, -i64::from(out.fixed_indicator))? {
        return Err(Error::Internal(format!(
            "survivor value drifted from n - f at {}",
            out.value
        )));
    }
    if u8::from(out.value.is_odd()) != out.parity {
        return Err(Error::Internal(format!(
            "stored parity drifted from value at {}",
            out.value
        )));
    }
    Ok(out)
}

/// All peaks with value at most `limit`, plus the first one beyond it (the
/// bracketing point callers usually need anyway).
pub fn enumerate_extremal(limit: &Nat) -> Result<Vec<ExtremalState>> {
    if limit.is_zero() {
        return Err(Error::InvalidInput("limit must be at least 1".into()));
    }
    let mut out = vec![ExtremalState::initial()];
    while out.last().expect("seeded").value <= *limit {
        let next = next_extremal_unified(out.last().expect("seeded"))?;
        out.push(next);
    }
    Ok(out)
}

/// Evaluates the survivor position by walking peaks until the first one at
/// or above `n`, then sliding back down that peak's slope-3 segment.
///
/// `iterations` counts the peaks computed, including the seed at 1.
pub fn eval_extremal(n: &Nat) -> Result<EvalResult> {
    if n.is_zero() {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let mut prev: Option<ExtremalState> = None;
    let mut state = ExtremalState::initial();
    while state.value < *n {
        let next = next_extremal_unified(&state)?;
        prev = Some(state);
        state = next;
    }
    let step_back = Nat::from(3u8) * (&state.value - n);
    if state.josephus_value < step_back {
        return Err(Error::Internal(format!(
            "slope extrapolation underflows at n = {n}"
        )));
    }
    let j = &state.josephus_value - step_back;
    Ok(EvalResult {
        n: n.clone(),
        j,
        algorithm: Algorithm::Extremal,
        bracket_low: prev.map(|p| p.value),
        bracket_high: Some(state.value),
        segment_index: None,
        pure_count: None,
        iterations: state.index,
    })
}
