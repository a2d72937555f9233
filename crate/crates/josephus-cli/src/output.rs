//! Rendering to the three output shapes.
//!
//! CSV: comma delimiter, LF endings, one header row, no quoting (every
//! field is numeric or an enum label). JSON: one compact object per line
//! for tabular data. Integers of unbounded range are rendered as exact
//! decimal strings in every shape, including JSON, so nothing is ever
//! squeezed through a float. Identical invocations produce byte-identical
//! output, except for the wall-clock fields of `bench`, which are labeled
//! non-normative.

use clap::ValueEnum;
use josephus::bench::{GainSeries, GraphRow, IterationComparison};
use josephus::types::{EvalResult, ExtremalState, FixedPointRecord};
use josephus::Nat;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use std::fmt::Write;

use crate::verify::VerifyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

fn opt_nat_field(v: &Option<Nat>) -> String {
    v.as_ref().map(Nat::to_string).unwrap_or_default()
}

fn opt_u64_field(v: &Option<u64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn nat_json(v: &Nat) -> Value {
    Value::String(v.to_string())
}

fn opt_nat_json(v: &Option<Nat>) -> Value {
    v.as_ref().map(nat_json).unwrap_or(Value::Null)
}

fn opt_u64_json(v: &Option<u64>) -> Value {
    v.map(Value::from).unwrap_or(Value::Null)
}

fn rat_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn wall_us(d: std::time::Duration) -> u64 {
    u64::try_from(d.as_micros()).unwrap_or(u64::MAX)
}

pub fn eval_result(res: &EvalResult, format: Format) -> String {
    match format {
        Format::Plain => format!("{}\n", res.j),
        Format::Csv => format!(
            "n,j3,algorithm,bracket_low,bracket_high,segment_index,pure_count,iterations\n\
             {},{},{},{},{},{},{},{}\n",
            res.n,
            res.j,
            res.algorithm,
            opt_nat_field(&res.bracket_low),
            opt_nat_field(&res.bracket_high),
            opt_u64_field(&res.segment_index),
            opt_u64_field(&res.pure_count),
            res.iterations
        ),
        Format::Json => {
            let obj = json!({
                "n": nat_json(&res.n),
                "j3": nat_json(&res.j),
                "algorithm": res.algorithm.name(),
                "bracket_low": opt_nat_json(&res.bracket_low),
                "bracket_high": opt_nat_json(&res.bracket_high),
                "segment_index": opt_u64_json(&res.segment_index),
                "pure_count": opt_u64_json(&res.pure_count),
                "iterations": res.iterations,
            });
            format!("{obj}\n")
        }
    }
}

pub fn fixed_points(records: &[FixedPointRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            out.push_str("index\tfixed_point\tpure_count\n");
            for r in records {
                let _ = writeln!(out, "{}\t{}\t{}", r.index, r.value, r.pure_count);
            }
        }
        Format::Csv => {
            out.push_str("index,fixed_point,pure_count\n");
            for r in records {
                let _ = writeln!(out, "{},{},{}", r.index, r.value, r.pure_count);
            }
        }
        Format::Json => {
            for r in records {
                let obj = json!({
                    "index": r.index,
                    "fixed_point": nat_json(&r.value),
                    "pure_count": r.pure_count,
                });
                let _ = writeln!(out, "{obj}");
            }
        }
    }
    out
}

pub fn extremal_points(states: &[ExtremalState], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            out.push_str("index\tn\tfixed_indicator\tparity\tj3\n");
            for s in states {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    s.index, s.value, s.fixed_indicator, s.parity, s.josephus_value
                );
            }
        }
        Format::Csv => {
            out.push_str("index,n,fixed_indicator,parity,j3\n");
            for s in states {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    s.index, s.value, s.fixed_indicator, s.parity, s.josephus_value
                );
            }
        }
        Format::Json => {
            for s in states {
                let obj = json!({
                    "index": s.index,
                    "n": nat_json(&s.value),
                    "fixed_indicator": s.fixed_indicator,
                    "parity": s.parity,
                    "j3": nat_json(&s.josephus_value),
                });
                let _ = writeln!(out, "{obj}");
            }
        }
    }
    out
}

pub fn graph_table(rows: &[GraphRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            out.push_str("n\tj3\tclass\n");
            for r in rows {
                let _ = writeln!(out, "{}\t{}\t{}", r.n, r.j3, r.class);
            }
        }
        Format::Csv => {
            out.push_str("n,j3,class\n");
            for r in rows {
                let _ = writeln!(out, "{},{},{}", r.n, r.j3, r.class);
            }
        }
        Format::Json => {
            for r in rows {
                let obj = json!({
                    "n": r.n,
                    "j3": r.j3,
                    "class": r.class.to_string(),
                });
                let _ = writeln!(out, "{obj}");
            }
        }
    }
    out
}

pub fn gain_table(series: &GainSeries, format: Format) -> String {
    let mut out = String::new();
    let header_csv =
        "q,pure_prefix_sum,gain_pct,gain_pct_float,iteration_gain_pct,iteration_gain_pct_float";
    match format {
        Format::Plain => {
            out.push_str(&header_csv.replace(',', "\t"));
            out.push('\n');
        }
        Format::Csv => {
            out.push_str(header_csv);
            out.push('\n');
        }
        Format::Json => {}
    }
    for i in 0..series.q_max as usize {
        let q = i as u64 + 1;
        let s = series.pure_prefix_sums[i];
        let gain = &series.gain_pct[i];
        let iter_gain = &series.iteration_gain_pct[i];
        match format {
            Format::Plain => {
                let _ = writeln!(
                    out,
                    "{q}\t{s}\t{gain}\t{}\t{iter_gain}\t{}",
                    rat_f64(gain),
                    rat_f64(iter_gain)
                );
            }
            Format::Csv => {
                let _ = writeln!(
                    out,
                    "{q},{s},{gain},{},{iter_gain},{}",
                    rat_f64(gain),
                    rat_f64(iter_gain)
                );
            }
            Format::Json => {
                let obj = json!({
                    "q": q,
                    "pure_prefix_sum": s,
                    "gain_pct": gain.to_string(),
                    "gain_pct_float": rat_f64(gain),
                    "iteration_gain_pct": iter_gain.to_string(),
                    "iteration_gain_pct_float": rat_f64(iter_gain),
                });
                let _ = writeln!(out, "{obj}");
            }
        }
    }
    out
}

pub fn bench_report(cmp: &IterationComparison, format: Format) -> String {
    let fixed_us = wall_us(cmp.fixed_point_wall);
    let extremal_us = wall_us(cmp.extremal_wall);
    match format {
        Format::Plain => format!(
            "n: {}\n\
             j3: {}\n\
             fixed_point_iters: {}\n\
             extremal_iters: {}\n\
             pure_point_count: {}\n\
             fixed_point_wall_us (non-normative): {fixed_us}\n\
             extremal_wall_us (non-normative): {extremal_us}\n",
            cmp.n, cmp.j, cmp.fixed_point_iters, cmp.extremal_iters, cmp.pure_point_count
        ),
        Format::Csv => format!(
            "n,j3,fixed_point_iters,extremal_iters,pure_point_count,\
             fixed_point_wall_us_nonnormative,extremal_wall_us_nonnormative\n\
             {},{},{},{},{},{fixed_us},{extremal_us}\n",
            cmp.n, cmp.j, cmp.fixed_point_iters, cmp.extremal_iters, cmp.pure_point_count
        ),
        Format::Json => {
            let obj = json!({
                "n": nat_json(&cmp.n),
                "j3": nat_json(&cmp.j),
                "fixed_point_iters": cmp.fixed_point_iters,
                "extremal_iters": cmp.extremal_iters,
                "pure_point_count": cmp.pure_point_count,
                "fixed_point_wall_us_nonnormative": fixed_us,
                "extremal_wall_us_nonnormative": extremal_us,
            });
            format!("{obj}\n")
        }
    }
}

pub fn verify_report(report: &VerifyReport, format: Format) -> String {
    let first = report.mismatches.first();
    match format {
        Format::Plain => {
            let mut out = format!(
                "checked n = 1..={} against the linear oracle (elimination replay through {})\n\
                 {} mismatches\n",
                report.limit,
                report.simulate_limit,
                report.mismatches.len()
            );
            if let Some(m) = first {
                let _ = writeln!(
                    out,
                    "first mismatch at n = {}: {} gave {}, expected {}",
                    m.n, m.algorithm, m.got, m.expected
                );
            }
            out
        }
        Format::Csv => format!(
            "limit,simulate_limit,mismatches,first_mismatch_n\n{},{},{},{}\n",
            report.limit,
            report.simulate_limit,
            report.mismatches.len(),
            first.map(|m| m.n.to_string()).unwrap_or_default()
        ),
        Format::Json => {
            let obj = json!({
                "limit": report.limit,
                "simulate_limit": report.simulate_limit,
                "mismatches": report.mismatches.len(),
                "first_mismatch": first.map(|m| json!({
                    "n": m.n,
                    "algorithm": m.algorithm,
                    "got": m.got,
                    "expected": m.expected,
                })).unwrap_or(Value::Null),
            });
            format!("{obj}\n")
        }
    }
}
