// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Invariant reports and their table, CSV and JSON renderings.

use std::fmt::Write as _;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::Variant;

/// Decimal expansion of `q` with exactly `digits` fractional digits,
/// rounded half to even.
pub fn render_decimal(q: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = q.numer().abs() * &scale;
    let denom = q.denom();
    let (mut quotient, remainder) = scaled.div_rem(denom);
    let twice = remainder * 2u32;
    if twice > *denom || (twice == *denom && quotient.is_odd()) {
        quotient += 1u32;
    }
    let (int_part, frac_part) = quotient.div_rem(&scale);
    let mut out = String::new();
    if q.is_negative() && !quotient.is_zero() {
        out.push('-');
    }
    write!(out, "{int_part}").unwrap();
    if digits > 0 {
        write!(out, ".{:0>width$}", frac_part.to_string(), width = digits).unwrap();
    }
    out
}

/// Drops trailing fractional zeros (and a dangling point).
pub fn trim_decimal(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn integer_string(value: &BigInt) -> String {
    match value.sign() {
        Sign::Minus => format!("-{}", value.magnitude()),
        _ => value.magnitude().to_string(),
    }
}

/// Output encodings shared by all commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// Invariants of one graph. Absent fields were not requested.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantReport {
    pub n: usize,
    pub variant: Variant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kf_closed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kf_exact: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kf_spectral: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kf_resistance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wiener: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spanning_trees: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio_w_over_kf: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub methods_agree: Option<bool>,
}

impl InvariantReport {
    pub fn new(n: usize, variant: Variant) -> Self {
        InvariantReport {
            n,
            variant,
            kf_closed: None,
            kf_exact: None,
            kf_spectral: None,
            kf_resistance: None,
            wiener: None,
            spanning_trees: None,
            ratio_w_over_kf: None,
            methods_agree: None,
        }
    }

    /// `(key, rendered value)` for every present field, in canonical order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("n", self.n.to_string()), ("variant", self.variant.to_string())];
        let mut push = |key, value: Option<String>| {
            if let Some(v) = value {
                out.push((key, v));
            }
        };
        push("kf_closed", self.kf_closed.clone());
        push("kf_exact", self.kf_exact.clone());
        push("kf_spectral", self.kf_spectral.map(|v| v.to_string()));
        push("kf_resistance", self.kf_resistance.map(|v| v.to_string()));
        push("wiener", self.wiener.map(|v| v.to_string()));
        push("spanning_trees", self.spanning_trees.clone());
        push("ratio_w_over_kf", self.ratio_w_over_kf.map(|v| v.to_string()));
        push("methods_agree", self.methods_agree.map(|v| v.to_string()));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn reports_to_json(reports: &[InvariantReport]) -> String {
    serde_json::to_string(reports).expect("reports serialize")
}

const CANONICAL_KEYS: [&str; 10] = [
    "n",
    "variant",
    "kf_closed",
    "kf_exact",
    "kf_spectral",
    "kf_resistance",
    "wiener",
    "spanning_trees",
    "ratio_w_over_kf",
    "methods_agree",
];

/// Header plus one line per report; columns are the union of present fields.
pub fn reports_to_csv(reports: &[InvariantReport]) -> String {
    let rows: Vec<Vec<(&str, String)>> = reports.iter().map(InvariantReport::fields).collect();
    let columns: Vec<&str> = CANONICAL_KEYS
        .iter()
        .copied()
        .filter(|key| rows.iter().any(|r| r.iter().any(|(k, _)| k == key)))
        .collect();
    let mut out = columns.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<&str> = columns
            .iter()
            .map(|c| {
                row.iter()
                    .find(|(k, _)| k == c)
                    .map(|(_, v)| v.as_str())
                    .unwrap_or("")
            })
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Space-aligned columns with a header row.
pub fn aligned_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use proptest::prelude::*;

    #[test]
    fn decimal_rounding() {
        assert_eq!(render_decimal(&ratio(469, 12), 6), "39.083333");
        assert_eq!(render_decimal(&ratio(77, 2), 6), "38.500000");
        assert_eq!(render_decimal(&ratio(5, 2), 0), "2");
        assert_eq!(render_decimal(&ratio(7, 2), 0), "4");
        assert_eq!(render_decimal(&ratio(1, 8), 2), "0.12");
        assert_eq!(render_decimal(&ratio(3, 8), 2), "0.38");
        assert_eq!(render_decimal(&ratio(-1, 3), 3), "-0.333");
        assert_eq!(render_decimal(&ratio(-1, 3000), 2), "0.00");
        assert_eq!(render_decimal(&ratio(199, 200), 2), "1.00");
    }

    #[test]
    fn trimming() {
        assert_eq!(trim_decimal("38.500000"), "38.5");
        assert_eq!(trim_decimal("12.000"), "12");
        assert_eq!(trim_decimal("120"), "120");
    }

    #[test]
    fn json_key_order() {
        let mut r = InvariantReport::new(2, Variant::Cylinder);
        r.kf_closed = Some("39.083333".into());
        assert_eq!(r.to_json(), r#"{"n":2,"variant":"cylinder","kf_closed":"39.083333"}"#);
    }

    #[test]
    fn csv_union_of_columns() {
        let mut a = InvariantReport::new(2, Variant::Cylinder);
        a.wiener = Some(86);
        let mut b = InvariantReport::new(2, Variant::Moebius);
        b.spanning_trees = Some("800".into());
        let csv = reports_to_csv(&[a, b]);
        assert_eq!(csv, "n,variant,wiener,spanning_trees\n2,cylinder,86,\n2,moebius,,800\n");
    }

    #[test]
    fn aligned() {
        let t = aligned_table(&["n", "value"], &[vec!["2".into(), "86".into()]]);
        assert_eq!(t, "n  value\n2     86\n");
    }

    fn arb_report() -> impl Strategy<Value = InvariantReport> {
        (
            2usize..200,
            any::<bool>(),
            proptest::option::of(0u64..1_000_000),
            proptest::option::of(-1e12f64..1e12),
            proptest::option::of(0.0f64..3.0),
            proptest::option::of(any::<bool>()),
            proptest::option::of("[0-9]{1,40}"),
        )
            .prop_map(|(n, moeb, w, kf, ratio, agree, trees)| {
                let mut r = InvariantReport::new(n, if moeb { Variant::Moebius } else { Variant::Cylinder });
                r.wiener = w;
                r.kf_spectral = kf;
                r.ratio_w_over_kf = ratio;
                r.methods_agree = agree;
                r.spanning_trees = trees;
                r
            })
    }

    proptest! {
        #[test]
        fn json_round_trip_is_byte_identical(report in arb_report()) {
            let text = report.to_json();
            let parsed: InvariantReport = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(parsed.to_json(), text);
            prop_assert_eq!(parsed, report);
        }

        #[test]
        fn render_matches_float(num in -1_000_000i64..1_000_000, den in 1i64..10_000) {
            let q = ratio(num, den);
            let rendered: f64 = render_decimal(&q, 6).parse().unwrap();
            prop_assert!((rendered - num as f64 / den as f64).abs() <= 5e-7 + 1e-12);
        }
    }
}
