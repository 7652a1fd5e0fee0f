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

//! Spectral splitting induced by the rail-swap automorphism.
//!
//! Ordering the vertices as (middle, upper rail, lower rail), the Laplacian
//! has blocks `L_{rs}`. The swap `j <-> j'` lets the spectrum split into
//! that of the symmetric-mode block
//!
//! ```text
//! L_A = [ L_00      √2 L_01       ]
//!       [ √2 L_10   L_11 + L_12   ]      (order 3n)
//! ```
//!
//! and the antisymmetric-mode block `L_S = L_11 - L_12` (order 2n).
//! Reading the low-order coefficients of both characteristic polynomials
//! gives the reciprocal eigenvalue sums needed for the Kirchhoff index.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::closed_forms::{
    alpha_linear_coefficient, alpha_reciprocal_sum, antisymmetric_determinant_closed,
    beta_closed_form,
};
use crate::error::{Error, Result};
use crate::graph::{laplacian, rail_swap, Graph, GraphFamily, Variant};
use crate::linalg::{
    char_poly, char_poly_integer, det_bareiss, rational, DenseMatrix,
    Polynomial,
};
use crate::surd::{r_prime_sequence_upto, r_sequence_upto, trace_power_t, SurdValue};

/// The two reduced matrices of one chain.
#[derive(Clone, Debug, PartialEq)]
pub struct DecomposedPair {
    pub l_a: DenseMatrix<SurdValue>,
    pub l_s: DenseMatrix<BigInt>,
    pub family: GraphFamily,
}

impl DecomposedPair {
    pub fn variant(&self) -> Variant {
        self.family.variant()
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn to_f64(&self) -> (DenseMatrix<f64>, DenseMatrix<f64>) {
        (
            self.l_a.map(SurdValue::to_f64),
            self.l_s.map(|v| i64::try_from(v).expect("small entry") as f64),
        )
    }

    /// Negates the two corner entries of `L_S`. The result no longer
    /// describes any chain; it exists to exercise failure paths.
    pub fn with_corner_sign_flipped(mut self) -> Self {
        let last = self.l_s.order() - 1;
        let flipped = -self.l_s[(0, last)].clone();
        self.l_s.set(0, last, flipped.clone());
        self.l_s.set(last, 0, flipped);
        self
    }
}

/// Open alternating band: diagonal `4, 3, 4, 3, ...`, `-1` beside it.
pub fn open_band(n: usize) -> DenseMatrix<BigInt> {
    DenseMatrix::from_fn(2 * n, |i, j| {
        if i == j {
            BigInt::from(if i % 2 == 0 { 4 } else { 3 })
        } else if i.abs_diff(j) == 1 {
            BigInt::from(-1)
        } else {
            BigInt::zero()
        }
    })
}

/// `L_S` for the cylinder and `L'_S` for the Möbius chain: the open band
/// with `∓(e_1 e_2nᵀ + e_2n e_1ᵀ)` added.
pub fn antisymmetric_block(family: &GraphFamily) -> DenseMatrix<BigInt> {
    let mut m = open_band(family.n());
    let last = m.order() - 1;
    let corner = match family.variant() {
        Variant::Cylinder => BigInt::from(-1),
        Variant::Moebius => BigInt::one(),
    };
    let top = &m[(0, last)] + &corner;
    let bottom = &m[(last, 0)] + &corner;
    m.set(0, last, top);
    m.set(last, 0, bottom);
    m
}

/// `L_A`, which is the same for both variants.
pub fn symmetric_block(n: usize) -> DenseMatrix<SurdValue> {
    let order = 3 * n;
    let minus_sqrt2 = SurdValue::from_ints(0, -1, 0, 0);
    let int = |v: i64| SurdValue::from_ints(v, 0, 0, 0);
    DenseMatrix::from_fn(order, |i, j| {
        match (i < n, j < n) {
            (true, true) => int(if i == j { 2 } else { 0 }),
            // middle k (0-based) couples to rail position 2k+1 (0-based)
            (true, false) if j - n == 2 * i + 1 => minus_sqrt2.clone(),
            (false, true) if i - n == 2 * j + 1 => minus_sqrt2.clone(),
            (true, false) | (false, true) => int(0),
            (false, false) => {
                let (p, q) = (i - n, j - n);
                let last = 2 * n - 1;
                if p == q {
                    int(if p % 2 == 0 { 2 } else { 3 })
                } else if p.abs_diff(q) == 1 || (p.min(q) == 0 && p.max(q) == last) {
                    int(-1)
                } else {
                    int(0)
                }
            }
        }
    })
}

/// Builds the pair from the displayed block patterns.
pub fn build_decomposition(n: usize, variant: Variant) -> Result<DecomposedPair> {
    let family = GraphFamily::new(variant, n)?;
    Ok(DecomposedPair {
        l_a: symmetric_block(n),
        l_s: antisymmetric_block(&family),
        family,
    })
}

/// Builds the reduced blocks of an arbitrary graph from its Laplacian,
/// given the fixed vertices and the transposed pairs `(v, π(v))` of an
/// involutive automorphism.
pub fn reduce_by_involution(
    g: &Graph,
    fixed: &[usize],
    swapped: &[(usize, usize)],
) -> Result<(DenseMatrix<SurdValue>, DenseMatrix<BigInt>)> {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    for &(u, v) in swapped {
        perm[u] = v;
        perm[v] = u;
    }
    if fixed.len() + 2 * swapped.len() != g.vertex_count() || !g.is_automorphism(&perm) {
        return Err(Error::InvalidGraph(
            "vertex partition is not an involutive automorphism".into(),
        ));
    }
    let l = laplacian(g);
    let p = fixed.len();
    let q = swapped.len();
    let sqrt2 = SurdValue::sqrt2();
    let l_a = DenseMatrix::from_fn(p + q, |i, j| {
        let int = |v: i64| SurdValue::from_ints(v, 0, 0, 0);
        match (i < p, j < p) {
            (true, true) => int(l[(fixed[i], fixed[j])]),
            (true, false) => &sqrt2 * &int(l[(fixed[i], swapped[j - p].0)]),
            (false, true) => &sqrt2 * &int(l[(swapped[i - p].0, fixed[j])]),
            (false, false) => {
                let (a, b) = (swapped[i - p], swapped[j - p]);
                int(l[(a.0, b.0)] + l[(a.0, b.1)])
            }
        }
    });
    let l_s = DenseMatrix::from_fn(q, |i, j| {
        let (a, b) = (swapped[i], swapped[j]);
        BigInt::from(l[(a.0, b.0)] - l[(a.0, b.1)])
    });
    Ok((l_a, l_s))
}

/// The pair obtained from the chain's Laplacian and rail swap.
pub fn decomposition_from_graph(g: &Graph) -> Result<DecomposedPair> {
    let family = g
        .family()
        .ok_or_else(|| Error::InvalidGraph("not a pentagonal chain".into()))?;
    let n = family.n();
    let swap = rail_swap(n);
    let fixed: Vec<usize> = (4 * n..5 * n).collect();
    let swapped: Vec<(usize, usize)> = (0..2 * n).map(|v| (v, swap[v])).collect();
    let (l_a, l_s) = reduce_by_involution(g, &fixed, &swapped)?;
    Ok(DecomposedPair { l_a, l_s, family })
}

/// Characteristic polynomial of a surd matrix whose coefficients are
/// required to be rational.
pub fn char_poly_surd(m: &DenseMatrix<SurdValue>) -> Result<Polynomial<BigRational>> {
    char_poly(m).try_map(SurdValue::to_rational)
}

// L_A depends only on n, and the surd Faddeev-LeVerrier loop is the most
// expensive step of every check that needs it.
fn char_poly_surd_cached(m: &DenseMatrix<SurdValue>) -> Result<Polynomial<BigRational>> {
    type Memo = Mutex<Vec<(DenseMatrix<SurdValue>, Polynomial<BigRational>)>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(Vec::new()));
    if let Some((_, p)) = memo.lock().expect("memo lock").iter().find(|(k, _)| k == m) {
        return Ok(p.clone());
    }
    let p = char_poly_surd(m)?;
    memo.lock().expect("memo lock").push((m.clone(), p.clone()));
    Ok(p)
}

/// Low-order coefficients of both characteristic polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VietaCoefficients {
    /// Coefficient of `x` in `det(xI - L_A)`.
    pub alpha_3n_minus_1: BigInt,
    /// Coefficient of `x²` in `det(xI - L_A)`.
    pub alpha_3n_minus_2: BigInt,
    /// Sum of the principal `(2n-1)`-minors of `L_S`, i.e. the
    /// coefficient of `x` in `det(xI - L_S)` with its sign `(-1)^(2n-1)`
    /// removed.
    pub beta_2n_minus_1: BigInt,
    pub det_ls: BigInt,
}

impl VietaCoefficients {
    /// `-α_{3n-2} / α_{3n-1}`, the reciprocal sum of the nonzero `L_A` eigenvalues.
    pub fn alpha_ratio(&self) -> BigRational {
        BigRational::new(-self.alpha_3n_minus_2.clone(), self.alpha_3n_minus_1.clone())
    }

    /// `β_{2n-1} / det(L_S)`, the reciprocal sum of the `L_S` eigenvalues.
    pub fn beta_ratio(&self) -> BigRational {
        BigRational::new(self.beta_2n_minus_1.clone(), self.det_ls.clone())
    }
}

fn integral(q: &BigRational) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NotIntegral(q.to_string()))
    }
}

pub fn extract_vieta(pair: &DecomposedPair) -> Result<VietaCoefficients> {
    let pa = char_poly_surd_cached(&pair.l_a)?;
    let ps = char_poly_integer(&pair.l_s);
    let alpha_3n_minus_1 = integral(pa.coefficient(1)?)?;
    if alpha_3n_minus_1.is_zero() {
        return Err(Error::Disconnected);
    }
    Ok(VietaCoefficients {
        alpha_3n_minus_1,
        alpha_3n_minus_2: integral(pa.coefficient(2)?)?,
        beta_2n_minus_1: -ps.coefficient(1)?.clone(),
        det_ls: det_bareiss(&pair.l_s),
    })
}

/// `5n (-α_{3n-2}/α_{3n-1} + β_{2n-1}/det L_S)` from exact coefficients.
pub fn kirchhoff_from_vieta(n: usize, coefficients: &VietaCoefficients) -> BigRational {
    rational(5 * n as i64) * (coefficients.alpha_ratio() + coefficients.beta_ratio())
}

/// `[x^(2n-1)] - [x^(2n-3)]` of `f(x) g(x)`, where `f` and `g` are the
/// generating functions of `r_i` and `r'_i`.
pub fn beta_convolution(n: usize) -> BigInt {
    let m = 2 * n;
    let r = r_sequence_upto(m);
    let rp = r_prime_sequence_upto(m);
    let coefficient = |k: usize| -> BigInt { (0..=k).map(|i| &r[i] * &rp[k - i]).sum() };
    coefficient(m - 1) - coefficient(m - 3)
}

/// Exact product identity `char(L) = char(L_A) · char(L_S)`.
pub fn product_identity_holds(pair: &DecomposedPair) -> Result<bool> {
    let g = pair.family.build();
    let lhs = char_poly_integer(&laplacian(&g).map(|&v| BigInt::from(v))).map(|c| BigRational::from_integer(c.clone()));
    let rhs = char_poly_surd_cached(&pair.l_a)?
        .mul(&char_poly_integer(&pair.l_s).map(|c| BigRational::from_integer(c.clone())));
    Ok(lhs == rhs)
}

/// Outcome of one exact formula comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl FormulaCheck {
    fn compare<T: PartialEq + ToString>(name: impl Into<String>, expected: T, actual: T) -> Self {
        FormulaCheck {
            name: name.into(),
            passed: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormulaReport {
    pub checks: Vec<FormulaCheck>,
}

impl FormulaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// First failing comparison as an error.
    pub fn into_result(self) -> Result<Self> {
        if let Some(bad) = self.checks.iter().find(|c| !c.passed) {
            return Err(Error::Mismatch {
                what: bad.name.clone(),
                expected: bad.expected.clone(),
                actual: bad.actual.clone(),
            });
        }
        Ok(self)
    }
}

/// Checks the linear coefficient and the reciprocal-sum formula for `L_A`.
pub fn verify_alpha_formulas(n: usize) -> Result<FormulaReport> {
    let pair = build_decomposition(n, Variant::Cylinder)?;
    let vieta = extract_vieta(&pair)?;
    Ok(FormulaReport {
        checks: vec![
            FormulaCheck::compare(
                format!("alpha linear coefficient (n={n})"),
                alpha_linear_coefficient(n),
                vieta.alpha_3n_minus_1.clone(),
            ),
            FormulaCheck::compare(
                format!("alpha reciprocal sum (n={n})"),
                alpha_reciprocal_sum(n),
                vieta.alpha_ratio(),
            ),
        ],
    })
}

/// Three-way agreement on `β_{2n-1}` plus the determinant closed form.
pub fn verify_beta_formula(n: usize, variant: Variant) -> Result<FormulaReport> {
    let pair = build_decomposition(n, variant)?;
    let vieta = extract_vieta(&pair)?;
    let closed = beta_closed_form(n)?;
    let t = trace_power_t(n);
    let shift = BigInt::from(match variant {
        Variant::Cylinder => -2,
        Variant::Moebius => 2,
    });
    let sign = if shift.is_one() { "+" } else { "-" };
    let r = r_sequence_upto(2 * n + 1);
    Ok(FormulaReport {
        checks: vec![
            FormulaCheck::compare(
                format!("beta closed form vs char poly ({variant}, n={n})"),
                closed.clone(),
                vieta.beta_2n_minus_1.clone(),
            ),
            FormulaCheck::compare(
                format!("beta convolution vs char poly ({variant}, n={n})"),
                beta_convolution(n),
                vieta.beta_2n_minus_1.clone(),
            ),
            FormulaCheck::compare(
                format!("det L_S = t_n {sign} 2 ({variant}, n={n})"),
                &t + &shift,
                vieta.det_ls.clone(),
            ),
            FormulaCheck::compare(
                format!("det L_S = r_2n - r_2n-2 {sign} 2 ({variant}, n={n})"),
                &r[2 * n] - &r[2 * n - 2] + &shift,
                vieta.det_ls.clone(),
            ),
            FormulaCheck::compare(
                format!("det L_S surd closed form ({variant}, n={n})"),
                antisymmetric_determinant_closed(&pair.family)?,
                vieta.det_ls,
            ),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use crate::spectral::{eigen_symmetric, spectrum_union_check};

    fn ints(rows: &[&[i64]]) -> DenseMatrix<BigInt> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn smallest_blocks() {
        let cyl = build_decomposition(2, Variant::Cylinder).unwrap();
        assert_eq!(
            cyl.l_s,
            ints(&[&[4, -1, 0, -1], &[-1, 3, -1, 0], &[0, -1, 4, -1], &[-1, 0, -1, 3]])
        );
        let moeb = build_decomposition(2, Variant::Moebius).unwrap();
        assert_eq!(moeb.l_s[(0, 3)], BigInt::one());
        assert_eq!(moeb.l_s[(3, 0)], BigInt::one());
        let coupling = cyl
            .l_a
            .entries()
            .iter()
            .filter(|v| **v == SurdValue::from_ints(0, -1, 0, 0))
            .count();
        assert_eq!(cyl.l_a.order(), 6);
        assert_eq!(coupling, 4);
    }

    #[test]
    fn symmetric_block_shape() {
        for n in 2..=8 {
            let l_a = symmetric_block(n);
            assert!(l_a.is_symmetric());
            let allowed: Vec<SurdValue> = [(0, 0), (1, 0), (-1, 0), (2, 0), (3, 0), (0, -1)]
                .iter()
                .map(|&(a, b)| SurdValue::from_ints(a, b, 0, 0))
                .collect();
            assert!(l_a.entries().iter().all(|v| allowed.contains(v)));
        }
    }

    #[test]
    fn blocks_match_laplacian_reduction() {
        for n in 2..=8 {
            for variant in Variant::ALL {
                let from_graph = decomposition_from_graph(&GraphFamily::new(variant, n).unwrap().build()).unwrap();
                let displayed = build_decomposition(n, variant).unwrap();
                assert_eq!(from_graph, displayed, "{variant} n={n}");
            }
        }
    }

    #[test]
    fn rank_one_corner_corrections() {
        for n in 2..=6 {
            let band = open_band(n);
            let last = 2 * n - 1;
            let corner = DenseMatrix::from_fn(2 * n, |i, j| {
                if (i, j) == (0, last) || (i, j) == (last, 0) { BigInt::one() } else { BigInt::zero() }
            });
            let cyl = antisymmetric_block(&GraphFamily::new(Variant::Cylinder, n).unwrap());
            let moeb = antisymmetric_block(&GraphFamily::new(Variant::Moebius, n).unwrap());
            assert_eq!(cyl, band.sub(&corner).unwrap());
            assert_eq!(moeb, band.add(&corner).unwrap());
        }
    }

    #[test]
    fn reduction_rejects_non_automorphism() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(reduce_by_involution(&g, &[2], &[(0, 1)]).is_err());
        let (l_a, l_s) = reduce_by_involution(&g, &[1], &[(0, 2)]).unwrap();
        assert_eq!(l_a.order() + l_s.order(), 3);
    }

    #[test]
    fn surd_char_poly_examples() {
        let pair = build_decomposition(2, Variant::Cylinder).unwrap();
        let p = char_poly_surd(&pair.l_a).unwrap();
        assert!(p.coefficient(0).unwrap().is_zero());
        assert_eq!(*p.coefficient(1).unwrap(), rational(-80));
        let one = DenseMatrix::from_vec(1, vec![&(SurdValue::sqrt2() * SurdValue::sqrt2()) / &SurdValue::from_integer(2)]).unwrap();
        assert_eq!(char_poly_surd(&one).unwrap().coefficients(), &[rational(-1), rational(1)]);
    }

    #[test]
    fn irrational_residue_is_an_error() {
        let m = DenseMatrix::from_vec(1, vec![SurdValue::sqrt2()]).unwrap();
        assert!(matches!(char_poly_surd(&m), Err(Error::IrrationalResidue(_))));
    }

    #[test]
    fn vieta_smallest() {
        let v = extract_vieta(&build_decomposition(2, Variant::Cylinder).unwrap()).unwrap();
        assert_eq!(v.alpha_3n_minus_1, BigInt::from(-80));
        assert_eq!(v.det_ls, BigInt::from(96));
        assert_eq!(v.beta_2n_minus_1, BigInt::from(140));
        assert_eq!(v.alpha_ratio(), ratio(147, 60));
        assert_eq!(kirchhoff_from_vieta(2, &v), ratio(469, 12));
    }

    #[test]
    fn alpha_formula_reports() {
        for n in 2..=8 {
            assert!(verify_alpha_formulas(n).unwrap().passed(), "n={n}");
        }
        let v = extract_vieta(&build_decomposition(3, Variant::Moebius).unwrap()).unwrap();
        assert_eq!(v.alpha_ratio(), ratio(151, 30));
    }

    #[test]
    fn beta_formula_reports() {
        for n in 2..=8 {
            for variant in Variant::ALL {
                let report = verify_beta_formula(n, variant).unwrap();
                assert!(report.passed(), "{report:?}");
            }
        }
        assert_eq!(beta_convolution(2), BigInt::from(140));
    }

    #[test]
    fn product_identity_and_corrupted_corner() {
        for n in 2..=4 {
            for variant in Variant::ALL {
                let pair = build_decomposition(n, variant).unwrap();
                assert!(product_identity_holds(&pair).unwrap());
                assert!(!product_identity_holds(&pair.with_corner_sign_flipped()).unwrap());
            }
        }
    }

    #[test]
    fn char_poly_coefficients_rational() {
        for n in 2..=8 {
            let p = char_poly(&symmetric_block(n));
            assert!(p.coefficients().iter().all(SurdValue::is_rational));
        }
    }

    #[test]
    fn antisymmetric_spectrum_positive() {
        for n in 2..=10 {
            for variant in Variant::ALL {
                let pair = build_decomposition(n, variant).unwrap();
                let (l_a, l_s) = pair.to_f64();
                let mu = eigen_symmetric(&l_s, false).unwrap().eigenvalues;
                assert!(mu[0] > 0.0);
                let g = pair.family.build();
                assert!(spectrum_union_check(&g, (&l_a, &l_s)).unwrap().agrees);
            }
        }
    }

    #[test]
    fn determinants_differ_by_four() {
        for n in 2..=12 {
            let c = extract_vieta(&build_decomposition(n, Variant::Cylinder).unwrap()).unwrap();
            let m = extract_vieta(&build_decomposition(n, Variant::Moebius).unwrap()).unwrap();
            assert_eq!(&m.det_ls - &c.det_ls, BigInt::from(4));
            assert_eq!(c.beta_2n_minus_1, m.beta_2n_minus_1);
            assert!(c.det_ls > BigInt::zero() && c.beta_2n_minus_1 > BigInt::zero());
        }
    }
}
