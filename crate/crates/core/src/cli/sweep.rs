//! The qubit phase sweep: `A = X`, `B = Z` on
//! `|xi> = (|0> + e^{i alpha}|1>) / sqrt(2)` with the single orthogonal
//! direction `(|0> - e^{i alpha}|1>) / sqrt(2)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_1_SQRT_2, TAU};
use std::fmt::Write;

use crate::bounds::bound_report;
use crate::error::{Error, Result};
use crate::qcore::{Observable, QuantumState};

pub const DEFAULT_POINTS: usize = 241;
pub const CSV_HEADER: &str = "alpha,var_a,var_b,sum_var,prod_var,t1,t2,l1,l2";
const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub var_a: f64,
    pub var_b: f64,
    pub sum_var: f64,
    pub prod_var: f64,
    pub t1: f64,
    pub t2: f64,
    pub l1: f64,
    pub l2: f64,
}

impl SweepRow {
    pub fn fields(&self) -> [f64; 9] {
        [
            self.alpha,
            self.var_a,
            self.var_b,
            self.sum_var,
            self.prod_var,
            self.t1,
            self.t2,
            self.l1,
            self.l2,
        ]
    }
}

pub fn qubit_state(alpha: f64) -> QuantumState {
    QuantumState::new(vec![
        Complex64::from(FRAC_1_SQRT_2),
        Complex64::from_polar(FRAC_1_SQRT_2, alpha),
    ])
    .expect("unit by construction")
}

pub fn qubit_perp(alpha: f64) -> QuantumState {
    QuantumState::new(vec![
        Complex64::from(FRAC_1_SQRT_2),
        -Complex64::from_polar(FRAC_1_SQRT_2, alpha),
    ])
    .expect("unit by construction")
}

pub fn sweep_row(alpha: f64) -> Result<SweepRow> {
    let (x, z) = (Observable::pauli_x(), Observable::pauli_z());
    let r = bound_report(&x, &z, &qubit_state(alpha), Some(&qubit_perp(alpha)))?;
    Ok(SweepRow {
        alpha,
        var_a: r.var_a,
        var_b: r.var_b,
        sum_var: r.sum_var,
        prod_var: r.prod_var,
        t1: r.t1,
        t2: r.t2,
        l1: r.l1,
        l2: r.l2,
    })
}

/// Rows at `alpha_k = 2 pi k / points`, `k = 0..points`.
pub fn sweep_rows(points: usize) -> Result<Vec<SweepRow>> {
    if points < 2 {
        return Err(Error::InvalidArgument(format!(
            "sweep needs at least 2 points, got {points}"
        )));
    }
    (0..points)
        .map(|k| sweep_row(TAU * k as f64 / points as f64))
        .collect()
}

/// Rounds to 12 significant digits, then prints the shortest string that
/// reads back as the rounded value. Exponent notation outside `[1e-5, 1e16)`.
pub fn format_number(x: f64) -> String {
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    if rounded == 0.0 {
        "0".to_string()
    } else if (1e-5..1e16).contains(&rounded.abs()) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let line: Vec<String> = row.fields().iter().map(|&v| format_number(v)).collect();
        writeln!(out, "{}", line.join(",")).expect("writing to a String");
    }
    out
}

/// Parses CSV produced by [`to_csv`].
pub fn parse_csv(text: &str) -> std::result::Result<Vec<SweepRow>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(CSV_HEADER) => {}
        other => return Err(format!("unexpected header {other:?}")),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let v: Vec<f64> = line
                .split(',')
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| format!("row {i}: {e}"))?;
            if v.len() != 9 {
                return Err(format!("row {i}: expected 9 fields, got {}", v.len()));
            }
            Ok(SweepRow {
                alpha: v[0],
                var_a: v[1],
                var_b: v[2],
                sum_var: v[3],
                prod_var: v[4],
                t1: v[5],
                t2: v[6],
                l1: v[7],
                l2: v[8],
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn number_format() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(0.5), "0.5");
        assert_eq!(format_number(2.0 * PI / 241.0), "0.0260713083285");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_number(1.4997597826618576e-32), "1.49975978266e-32");
        assert_eq!(format_number(-2.4492935982947064e-16), "-2.44929359829e-16");
        assert_eq!(format_number(123456789012345.6), "123456789012000");
    }

    #[test]
    fn hrsur_blind_at_zero_phase() {
        let r = sweep_row(0.0).unwrap();
        assert_eq!((r.t1, r.t2), (0.0, 0.0));
        assert!((r.l1 - 0.5).abs() < 1e-15);
        assert!((r.l2 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn quarter_turn() {
        let r = sweep_row(FRAC_PI_2).unwrap();
        for (got, want) in [(r.t1, 1.0), (r.t2, 2.0), (r.l1, 1.0), (r.l2, 2.0)] {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn every_row_saturates() {
        for r in sweep_rows(97).unwrap() {
            assert!((r.l2 - 2.0 * r.l1).abs() < 1e-10);
            assert!((r.l2 - r.sum_var).abs() < 1e-10);
        }
    }

    #[test]
    fn too_few_points() {
        assert!(sweep_rows(1).is_err());
        assert_eq!(sweep_rows(2).unwrap().len(), 2);
    }

    #[test]
    fn csv_round_trip_within_format_precision() {
        let rows = sweep_rows(13).unwrap();
        let csv = to_csv(&rows);
        assert!(csv.starts_with("alpha,var_a,var_b,sum_var,prod_var,t1,t2,l1,l2\n"));
        let back = parse_csv(&csv).unwrap();
        for (r, b) in rows.iter().zip(&back) {
            for (x, y) in r.fields().iter().zip(b.fields()) {
                assert!((x - y).abs() <= 1e-11 * x.abs().max(1e-300));
            }
        }
        assert_eq!(to_csv(&back), csv);
    }
}
