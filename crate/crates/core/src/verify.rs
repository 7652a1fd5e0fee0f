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

//! Cross-checks of every invariant against an independent route.

use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_forms::{
    antisymmetric_determinant_closed, kirchhoff_closed, spanning_trees_closed, wiener_closed,
};
use crate::decomposition::{
    antisymmetric_block, build_decomposition, decomposition_from_graph, extract_vieta,
    kirchhoff_from_vieta, open_band, product_identity_holds, verify_alpha_formulas,
    verify_beta_formula, FormulaReport,
};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, wiener_index_bfs, GraphFamily, Variant};
use crate::linalg::{
    cofactor, det_bareiss, kirchhoff_exact, second_difference_matrix,
    second_difference_with_defect, spanning_tree_count, DenseMatrix,
};
use crate::spectral::{kirchhoff_spectral, resistance_distances, spectrum_union_check};
use crate::surd::{r_closed_form, r_prime_sequence_upto, r_sequence_upto, trace_power_t};

/// Relative tolerance between exact and floating-point routes.
pub const RELATIVE_TOLERANCE: f64 = 1e-8;
/// Slack allowed in `r_ij <= d_ij`.
pub const DISTANCE_SLACK: f64 = 1e-9;

const SPECTRUM_CAP: usize = 20;
const PRODUCT_CAP: usize = 8;
const FORMULA_CAP: usize = 8;
const KIRCHHOFF_CAP: usize = 20;
const ORDER_CAP: usize = 12;
const DEEP_TREES: usize = 30;
const DEEP_WIENER: usize = 50;
const LEMMA_SEED: u64 = 0x5eed_2024;
const LEMMA_SAMPLES: usize = 64;
// failures listed in full before truncating
const SHOWN_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub deep: bool,
    /// Flips the corner sign of `L_S` before the product identity check.
    /// Exists to exercise the failure path.
    pub corrupt_corner_sign: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_min: 2,
            n_max: 12,
            deep: false,
            corrupt_corner_sign: false,
        }
    }
}

impl VerifyOptions {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(Error::InvalidRange {
                min: self.n_min,
                max: self.n_max,
            });
        }
        Ok(())
    }

    fn capped(&self, cap: usize) -> Vec<usize> {
        (self.n_min..=self.n_max.min(cap)).collect()
    }

    fn raised(&self, deep_cap: usize) -> Vec<usize> {
        let top = if self.deep { self.n_max.max(deep_cap) } else { self.n_max };
        (self.n_min..=top).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag}  {}", self.name)?;
        if self.passed {
            write!(f, " ({})", self.detail)
        } else {
            for line in self.detail.lines() {
                write!(f, "\n      {line}")?;
            }
            Ok(())
        }
    }
}

type CaseResult = std::result::Result<(), String>;

fn mismatch(what: impl Display, expected: impl Display, actual: impl Display) -> String {
    format!("{what}: expected {expected}, got {actual}")
}

fn ensure_eq<T: PartialEq + Display>(what: impl Display, expected: T, actual: T) -> CaseResult {
    if expected == actual {
        Ok(())
    } else {
        Err(mismatch(what, expected, actual))
    }
}

fn ensure_close(what: impl Display, expected: f64, actual: f64) -> CaseResult {
    let scale = expected.abs().max(actual.abs()).max(1.0);
    if (expected - actual).abs() <= RELATIVE_TOLERANCE * scale {
        Ok(())
    } else {
        Err(mismatch(what, expected, actual))
    }
}

fn from_formulas(report: Result<FormulaReport>) -> CaseResult {
    let report = report.map_err(|e| e.to_string())?;
    let failures: Vec<String> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| mismatch(&c.name, &c.expected, &c.actual))
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("\n"))
    }
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Runs `case` on every input in parallel and folds the results, in input
/// order, into one outcome.
fn run_cases<T: Sync>(
    name: impl Into<String>,
    cases: &[T],
    case: impl Fn(&T) -> CaseResult + Sync,
) -> CheckOutcome {
    let failures: Vec<String> = cases
        .par_iter()
        .map(|c| case(c).err())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let name = name.into();
    if failures.is_empty() {
        let detail = match cases.len() {
            0 => "no cases in range".to_string(),
            1 => "1 case".to_string(),
            k => format!("{k} cases"),
        };
        return CheckOutcome { name, passed: true, detail };
    }
    let mut lines: Vec<String> = failures.iter().take(SHOWN_FAILURES).cloned().collect();
    if failures.len() > SHOWN_FAILURES {
        lines.push(format!("... and {} more", failures.len() - SHOWN_FAILURES));
    }
    CheckOutcome {
        name,
        passed: false,
        detail: lines.join("\n"),
    }
}

fn families(ns: &[usize]) -> Vec<GraphFamily> {
    ns.iter()
        .flat_map(|&n| Variant::ALL.map(|v| GraphFamily::new(v, n).expect("n >= 2")))
        .collect()
}

fn span(ns: &[usize]) -> String {
    match (ns.first(), ns.last()) {
        (Some(a), Some(b)) => format!("n = {a}..={b}"),
        _ => "empty range".to_string(),
    }
}

pub fn check_second_difference() -> CheckOutcome {
    let orders: Vec<usize> = (1..=40).collect();
    run_cases("det R_n = (-1)^n (1 + n), n <= 40", &orders, |&n| {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        ensure_eq(
            format!("det R_{n}"),
            BigInt::from(sign * (1 + n as i64)),
            det_bareiss(&second_difference_matrix(n)),
        )
    })
}

pub fn check_second_difference_defect() -> CheckOutcome {
    let pairs: Vec<(usize, usize)> = (1..=25).flat_map(|n| (1..=n).map(move |m| (n, m))).collect();
    run_cases(
        "det R_{n,m} = (-1)^n (1 + n + m + mn - m^2), 1 <= m <= n <= 25",
        &pairs,
        |&(n, m)| {
            let (ni, mi) = (n as i64, m as i64);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            ensure_eq(
                format!("det R_{{{n},{m}}}"),
                BigInt::from(sign * (1 + ni + mi + mi * ni - mi * mi)),
                det_bareiss(&second_difference_with_defect(n, m)),
            )
        },
    )
}

/// `det(M + e_i e_jᵀ) = det M + C_ij` for seeded random integer matrices.
pub fn check_determinant_lemma() -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(LEMMA_SEED);
    let samples: Vec<DenseMatrix<BigInt>> = (0..LEMMA_SAMPLES)
        .map(|_| {
            let order = rng.gen_range(1..=6);
            DenseMatrix::from_fn(order, |_, _| BigInt::from(rng.gen_range(-5..=5)))
        })
        .collect();
    run_cases(
        format!("matrix-determinant lemma, {LEMMA_SAMPLES} random matrices of order <= 6, all (i, j)"),
        &samples,
        |m| {
            let base = det_bareiss(m);
            for i in 0..m.order() {
                for j in 0..m.order() {
                    let mut updated = m.clone();
                    updated.set(i, j, &m[(i, j)] + BigInt::one());
                    let c = cofactor(m, i, j).map_err(|e| e.to_string())?;
                    ensure_eq(format!("entry ({i}, {j}) of {m:?}"), &base + c, det_bareiss(&updated))?;
                }
            }
            Ok(())
        },
    )
}

/// `r` and `r'` against the leading and trailing minors of the open band,
/// and `r` against its surd closed form.
pub fn check_sequences() -> Vec<CheckOutcome> {
    const MINORS: usize = 40;
    const CLOSED: usize = 60;
    let band = open_band(MINORS / 2);
    let r = r_sequence_upto(CLOSED + 1);
    let rp = r_prime_sequence_upto(MINORS + 1);
    let sizes: Vec<usize> = (1..=MINORS).collect();
    let minors = run_cases(
        format!("r_i and r'_i equal leading/trailing band minors, i <= {MINORS}"),
        &sizes,
        |&i| {
            let lead = band.leading_block(i).map_err(|e| e.to_string())?;
            let trail = band.trailing_block(i).map_err(|e| e.to_string())?;
            ensure_eq(format!("r_{i}"), r[i].clone(), det_bareiss(&lead))?;
            ensure_eq(format!("r'_{i}"), rp[i].clone(), det_bareiss(&trail))
        },
    );
    let indices: Vec<usize> = (0..=CLOSED).collect();
    let closed = run_cases(
        format!("r_i recurrence equals surd closed form, i <= {CLOSED}"),
        &indices,
        |&i| {
            let value = r_closed_form(i);
            match value.to_integer() {
                Ok(v) => ensure_eq(format!("r_{i}"), r[i].clone(), v),
                Err(e) => Err(format!("r_{i}: {e}")),
            }
        },
    );
    vec![minors, closed]
}

pub fn check_spectrum_union(opts: &VerifyOptions) -> CheckOutcome {
    let ns = opts.capped(SPECTRUM_CAP);
    run_cases(
        format!("spectrum of L = spectrum of L_A and L_S, gap < 1e-8, {}", span(&ns)),
        &families(&ns),
        |f| {
            let g = f.build();
            let from_graph = decomposition_from_graph(&g).map_err(|e| e.to_string())?;
            let built = build_decomposition(f.n(), f.variant()).map_err(|e| e.to_string())?;
            if from_graph.l_s != built.l_s || from_graph.l_a != built.l_a {
                return Err(format!("{} n={}: reduced blocks differ from the displayed pattern", f.variant(), f.n()));
            }
            let (a, s) = built.to_f64();
            let union = spectrum_union_check(&g, (&a, &s)).map_err(|e| e.to_string())?;
            if union.agrees {
                Ok(())
            } else {
                Err(format!("{} n={}: max gap {:e}", f.variant(), f.n(), union.max_gap))
            }
        },
    )
}

pub fn check_product_identity(opts: &VerifyOptions) -> CheckOutcome {
    let ns = opts.capped(PRODUCT_CAP);
    let corrupt = opts.corrupt_corner_sign;
    run_cases(
        format!("char(L) = char(L_A) char(L_S) exactly, {}", span(&ns)),
        &families(&ns),
        |f| {
            let mut pair = build_decomposition(f.n(), f.variant()).map_err(|e| e.to_string())?;
            if corrupt {
                pair = pair.with_corner_sign_flipped();
            }
            if product_identity_holds(&pair).map_err(|e| e.to_string())? {
                Ok(())
            } else {
                Err(format!("{} n={}: characteristic polynomials do not factor", f.variant(), f.n()))
            }
        },
    )
}

pub fn check_alpha(opts: &VerifyOptions) -> CheckOutcome {
    let ns = opts.capped(FORMULA_CAP);
    run_cases(
        format!("alpha_3n-1 and -alpha_3n-2/alpha_3n-1 closed forms, {}", span(&ns)),
        &ns,
        |&n| from_formulas(verify_alpha_formulas(n)),
    )
}

pub fn check_beta(opts: &VerifyOptions) -> CheckOutcome {
    let ns = opts.capped(FORMULA_CAP);
    run_cases(
        format!("beta_2n-1: closed form = convolution = char poly, {}", span(&ns)),
        &families(&ns),
        |f| from_formulas(verify_beta_formula(f.n(), f.variant())),
    )
}

pub fn check_antisymmetric_determinant(opts: &VerifyOptions) -> CheckOutcome {
    let ns = opts.raised(DEEP_TREES);
    run_cases(
        format!("det L_S = t_n - 2, det L'_S = t_n + 2, {}", span(&ns)),
        &families(&ns),
        |f| {
            let shift = match f.variant() {
                Variant::Cylinder => -2,
                Variant::Moebius => 2,
            };
            let det = det_bareiss(&antisymmetric_block(f));
            let what = format!("det L_S ({}, n={})", f.variant(), f.n());
            ensure_eq(&what, trace_power_t(f.n()) + shift, det.clone())?;
            let closed = antisymmetric_determinant_closed(f).map_err(|e| e.to_string())?;
            ensure_eq(what, closed, det)
        },
    )
}

pub fn check_kirchhoff(opts: &VerifyOptions) -> CheckOutcome {
    let ns = opts.capped(KIRCHHOFF_CAP);
    run_cases(
        format!("Kf closed = exact = Vieta, and ~ resistance sum ~ spectral (rel 1e-8), {}", span(&ns)),
        &families(&ns),
        |f| {
            let g = f.build();
            let tag = format!("{} n={}", f.variant(), f.n());
            let closed = kirchhoff_closed(f).map_err(|e| e.to_string())?;
            let exact = kirchhoff_exact(&g).map_err(|e| e.to_string())?;
            ensure_eq(format!("Kf exact ({tag})"), closed.clone(), exact)?;
            if f.n() <= FORMULA_CAP {
                let pair = build_decomposition(f.n(), f.variant()).map_err(|e| e.to_string())?;
                let vieta = extract_vieta(&pair).map_err(|e| e.to_string())?;
                ensure_eq(format!("Kf Vieta ({tag})"), closed.clone(), kirchhoff_from_vieta(f.n(), &vieta))?;
            }
            let target = to_f64(&closed);
            let resistance = resistance_distances(&g).map_err(|e| e.to_string())?;
            ensure_close(format!("Kf resistance sum ({tag})"), target, resistance.kirchhoff_index())?;
            let spectral = kirchhoff_spectral(&g).map_err(|e| e.to_string())?;
            ensure_close(format!("Kf spectral ({tag})"), target, spectral)
        },
    )
}

pub fn check_spanning_trees(opts: &VerifyOptions) -> CheckOutcome {
    let ns = opts.raised(DEEP_TREES);
    run_cases(
        format!("spanning trees closed form = Matrix-Tree determinant, {}", span(&ns)),
        &families(&ns),
        |f| {
            ensure_eq(
                format!("tau ({}, n={})", f.variant(), f.n()),
                spanning_trees_closed(f),
                spanning_tree_count(&f.build()),
            )
        },
    )
}

pub fn check_wiener(opts: &VerifyOptions) -> CheckOutcome {
    let ns = opts.raised(DEEP_WIENER);
    run_cases(
        format!("Wiener closed form = BFS distance sum, {}", span(&ns)),
        &families(&ns),
        |f| {
            let closed = wiener_closed(f).map_err(|e| e.to_string())?;
            let bfs = wiener_index_bfs(&f.build()).map_err(|e| e.to_string())?;
            ensure_eq(format!("W ({}, n={})", f.variant(), f.n()), closed, BigInt::from(bfs))
        },
    )
}

pub fn check_order_relations(opts: &VerifyOptions) -> CheckOutcome {
    let ns = opts.capped(ORDER_CAP);
    run_cases(
        format!("Kf < W, r_ij <= d_ij + 1e-9, Moebius below cylinder, {}", span(&ns)),
        &ns,
        |&n| {
            let mut kf = Vec::new();
            let mut w = Vec::new();
            for f in families(&[n]) {
                let tag = format!("{} n={n}", f.variant());
                let g = f.build();
                let k = kirchhoff_closed(&f).map_err(|e| e.to_string())?;
                let wi = wiener_closed(&f).map_err(|e| e.to_string())?;
                if k >= BigRational::from_integer(wi.clone()) {
                    return Err(format!("{tag}: Kf = {k} is not below W = {wi}"));
                }
                let r = resistance_distances(&g).map_err(|e| e.to_string())?;
                let d = all_pairs_distances(&g).map_err(|e| e.to_string())?;
                for i in 0..g.vertex_count() {
                    for j in i + 1..g.vertex_count() {
                        if r.get(i, j) > d[(i, j)] as f64 + DISTANCE_SLACK {
                            return Err(format!("{tag}: r({i},{j}) = {} exceeds d = {}", r.get(i, j), d[(i, j)]));
                        }
                    }
                }
                kf.push(k);
                w.push(wi);
            }
            if kf[1] >= kf[0] || w[1] >= w[0] {
                return Err(format!("n={n}: Moebius invariants are not below the cylinder ones"));
            }
            Ok(())
        },
    )
}

/// Every check, in a fixed order. Fails only on invalid options.
pub fn run_all(opts: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    opts.validate()?;
    let mut out = vec![
        check_second_difference(),
        check_second_difference_defect(),
        check_determinant_lemma(),
    ];
    out.extend(check_sequences());
    out.extend([
        check_spectrum_union(opts),
        check_product_identity(opts),
        check_alpha(opts),
        check_beta(opts),
        check_antisymmetric_determinant(opts),
        check_kirchhoff(opts),
        check_spanning_trees(opts),
        check_wiener(opts),
        check_order_relations(opts),
    ]);
    Ok(out)
}
