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

//! Reproduction of the reference table of Kirchhoff and Wiener indices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::closed_forms::{kirchhoff_closed, wiener_closed};
use crate::error::Result;
use crate::graph::{GraphFamily, Variant};
use crate::report::{aligned_table, render_decimal, trim_decimal};

/// Chain lengths listed in the table.
pub const TABLE_N: [usize; 11] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 99];

/// Allowed gap between a computed and a reference ratio.
pub const RATIO_TOLERANCE: f64 = 1e-8;

/// One reference row: `(n, [Kf, W, ratio] cylinder, [Kf, W, ratio] Möbius)`.
pub type ReferenceRow = (usize, [&'static str; 3], [&'static str; 3]);

pub const REFERENCE: [ReferenceRow; 11] = [
    (2, ["39.083333", "86", "2.200426458"], ["38.5", "82", "2.12987012987"]),
    (3, ["107.715909", "249", "2.3116362505"], ["107.583333", "243", "2.25871418206"]),
    (4, ["226.166667", "544", "2.40530581812"], ["226.142857", "536", "2.37018319796"]),
    (5, ["406.806193", "1005", "2.47046386533"], ["406.802434", "995", "2.44590473616"]),
    (6, ["662.098485", "1674", "2.52832477029"], ["662.097938", "1662", "2.51020265222"]),
    (7, ["1004.536492", "2583", "2.57133515862"], ["1004.536417", "2569", "2.55739857363"]),
    (8, ["1446.619048", "3776", "2.61022416732"], ["1446.619038", "3760", "2.5991639134"]),
    (9, ["2000.845977", "5283", "2.64038314829"], ["2000.845975", "5265", "2.63138695621"]),
    (10, ["2679.717254", "7150", "2.66819194799"], ["2679.717254", "7130", "2.660728474"]),
    (20, ["19073.869017", "53600", "2.81012729783"], ["19073.869017", "53560", "2.80803018791"]),
    (99, ["2080862.36308", "6152553", "2.95673231885"], ["2080862.36308", "6152355", "2.95663768188"]),
];

/// Computed cells for one family.
#[derive(Clone, Debug, PartialEq)]
pub struct TableCell {
    pub kirchhoff: BigRational,
    /// Six decimals, trailing zeros dropped.
    pub kirchhoff_display: String,
    pub wiener: BigInt,
    /// `W` over the displayed (rounded) Kirchhoff index.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub cylinder: TableCell,
    pub moebius: TableCell,
}

impl TableRow {
    pub fn cell(&self, variant: Variant) -> &TableCell {
        match variant {
            Variant::Cylinder => &self.cylinder,
            Variant::Moebius => &self.moebius,
        }
    }
}

pub fn table_cell(family: &GraphFamily) -> Result<TableCell> {
    let kirchhoff = kirchhoff_closed(family)?;
    let wiener = wiener_closed(family)?;
    let kirchhoff_display = trim_decimal(&render_decimal(&kirchhoff, 6));
    let shown: f64 = kirchhoff_display.parse().expect("rendered decimal parses");
    let ratio = wiener.to_f64().unwrap_or(f64::NAN) / shown;
    Ok(TableCell {
        kirchhoff,
        kirchhoff_display,
        wiener,
        ratio,
    })
}

pub fn table_row(n: usize) -> Result<TableRow> {
    Ok(TableRow {
        n,
        cylinder: table_cell(&GraphFamily::new(Variant::Cylinder, n)?)?,
        moebius: table_cell(&GraphFamily::new(Variant::Moebius, n)?)?,
    })
}

/// All rows, evaluated in parallel and returned in table order.
pub fn compute_table() -> Result<Vec<TableRow>> {
    TABLE_N.par_iter().map(|&n| table_row(n)).collect()
}

/// A computed cell that disagrees with the reference one.
#[derive(Clone, Debug, PartialEq)]
pub struct CellDeviation {
    pub n: usize,
    pub variant: Variant,
    pub column: &'static str,
    pub reference: String,
    pub computed: String,
}

/// Compares `rows` against [`REFERENCE`] cell by cell.
pub fn compare_with_reference(rows: &[TableRow]) -> Vec<CellDeviation> {
    let mut out = Vec::new();
    for (n, cyl, moeb) in REFERENCE {
        let Some(row) = rows.iter().find(|r| r.n == n) else {
            continue;
        };
        for (variant, printed) in [(Variant::Cylinder, cyl), (Variant::Moebius, moeb)] {
            let cell = row.cell(variant);
            let mut flag = |column, printed: &str, computed: String, ok: bool| {
                if !ok {
                    out.push(CellDeviation {
                        n,
                        variant,
                        column,
                        reference: printed.to_string(),
                        computed,
                    });
                }
            };
            flag("kf", printed[0], cell.kirchhoff_display.clone(), cell.kirchhoff_display == printed[0]);
            flag("wiener", printed[1], cell.wiener.to_string(), cell.wiener.to_string() == printed[1]);
            let expected: f64 = printed[2].parse().expect("reference ratio parses");
            flag(
                "ratio",
                printed[2],
                format!("{:.11}", cell.ratio),
                (cell.ratio - expected).abs() <= RATIO_TOLERANCE,
            );
        }
    }
    out
}

pub const HEADER: [&str; 7] = [
    "n",
    "kf_cylinder",
    "wiener_cylinder",
    "ratio_cylinder",
    "kf_moebius",
    "wiener_moebius",
    "ratio_moebius",
];

pub fn row_cells(row: &TableRow) -> Vec<String> {
    let mut cells = vec![row.n.to_string()];
    for cell in [&row.cylinder, &row.moebius] {
        cells.push(cell.kirchhoff_display.clone());
        cells.push(cell.wiener.to_string());
        cells.push(cell.ratio.to_string());
    }
    cells
}

pub fn render_text(rows: &[TableRow]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut cells = row_cells(r);
            cells[3] = format!("{:.11}", r.cylinder.ratio);
            cells[6] = format!("{:.11}", r.moebius.ratio);
            cells
        })
        .collect();
    aligned_table(&HEADER, &body)
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = HEADER.join(",") + "\n";
    for row in rows {
        out.push_str(&row_cells(row).join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(rows: &[TableRow]) -> String {
    let values: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            let mut obj = serde_json::Map::new();
            obj.insert("n".into(), r.n.into());
            for (suffix, cell) in [("cylinder", &r.cylinder), ("moebius", &r.moebius)] {
                obj.insert(format!("kf_{suffix}"), cell.kirchhoff_display.clone().into());
                let wiener = cell.wiener.to_u64().expect("table Wiener indices fit in u64");
                obj.insert(format!("wiener_{suffix}"), wiener.into());
                obj.insert(format!("ratio_{suffix}"), cell.ratio.into());
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    serde_json::to_string(&values).expect("table serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows_match() {
        let rows: Vec<TableRow> = (2..=10).map(|n| table_row(n).unwrap()).collect();
        assert!(compare_with_reference(&rows).is_empty());
        assert_eq!(rows[0].moebius.kirchhoff_display, "38.5");
        assert_eq!(rows[4].cylinder.kirchhoff_display, "662.098485");
        assert_eq!(rows[4].cylinder.wiener, BigInt::from(1674));
    }

    #[test]
    fn row_twenty() {
        let row = table_row(20).unwrap();
        assert_eq!(row.cylinder.wiener, BigInt::from(53600));
        assert_eq!(row.moebius.wiener, BigInt::from(53560));
        assert!(compare_with_reference(&[row]).is_empty());
    }

    #[test]
    fn last_row_only_moebius_ratio_differs() {
        let row = table_row(99).unwrap();
        assert_eq!(row.cylinder.kirchhoff_display, "2080862.36308");
        let deviations = compare_with_reference(&[row]);
        assert_eq!(deviations.len(), 1);
        assert_eq!(deviations[0].variant, Variant::Moebius);
        assert_eq!(deviations[0].column, "ratio");
    }

    #[test]
    fn csv_shape() {
        let csv = render_csv(&[table_row(2).unwrap()]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), HEADER.join(","));
        assert!(lines.next().unwrap().starts_with("2,39.083333,86,"));
    }
}
