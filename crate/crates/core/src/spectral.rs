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

//! Floating-point symmetric eigensolver and the spectral routes to the
//! Kirchhoff index.

use crate::error::{Error, Result};
use crate::graph::{laplacian, Graph};
use crate::linalg::DenseMatrix;

const SYMMETRY_TOLERANCE: f64 = 1e-12;
const CONVERGENCE_RATIO: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;
const ZERO_EIGENVALUE_RATIO: f64 = 1e-9;

/// Largest eigenvalue gap accepted by [`spectrum_union_check`].
pub const UNION_TOLERANCE: f64 = 1e-8;

/// Eigenvalues in ascending order, optionally with orthonormal
/// eigenvectors stored as the columns of a matrix.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Option<DenseMatrix<f64>>,
}

impl Spectrum {
    /// Scale-aware threshold below which an eigenvalue counts as zero.
    pub fn zero_tolerance(&self) -> f64 {
        let max = self.eigenvalues.last().copied().unwrap_or(0.0);
        ZERO_EIGENVALUE_RATIO * max.abs().max(1.0)
    }

    pub fn zero_count(&self) -> usize {
        let tol = self.zero_tolerance();
        self.eigenvalues.iter().filter(|l| l.abs() < tol).count()
    }
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below `1e-12` times the full norm.
pub fn eigen_symmetric(m: &DenseMatrix<f64>, with_vectors: bool) -> Result<Spectrum> {
    let n = m.order();
    let scale = m.entries().iter().fold(1f64, |acc, v| acc.max(v.abs()));
    let mut asym = 0f64;
    for i in 0..n {
        for j in i + 1..n {
            asym = asym.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    if asym > SYMMETRY_TOLERANCE * scale {
        return Err(Error::NotSymmetric(asym));
    }

    let mut a = m.clone().into_rows();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let frobenius = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let off_norm = |a: &[Vec<f64>]| {
        let mut s = 0.0;
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    s += x * x;
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= CONVERGENCE_RATIO * frobenius {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                // rows p and q are both written, so index instead of iterating
                #[allow(clippy::needless_range_loop)]
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                if with_vectors {
                    for row in v.iter_mut() {
                        let (vkp, vkq) = (row[p], row[q]);
                        row[p] = c * vkp - s * vkq;
                        row[q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let eigenvalues = order.iter().map(|&i| a[i][i]).collect();
    let eigenvectors = with_vectors.then(|| DenseMatrix::from_fn(n, |row, col| v[row][order[col]]));
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

pub fn laplacian_f64(g: &Graph) -> DenseMatrix<f64> {
    laplacian(g).map(|&v| v as f64)
}

fn connected_spectrum(g: &Graph, with_vectors: bool) -> Result<Spectrum> {
    let spectrum = eigen_symmetric(&laplacian_f64(g), with_vectors)?;
    if spectrum.zero_count() != 1 {
        return Err(Error::Disconnected);
    }
    Ok(spectrum)
}

/// `|V| · Σ 1/λ` over the nonzero Laplacian eigenvalues.
pub fn kirchhoff_spectral(g: &Graph) -> Result<f64> {
    let spectrum = connected_spectrum(g, false)?;
    let tol = spectrum.zero_tolerance();
    let reciprocal_sum: f64 = spectrum
        .eigenvalues
        .iter()
        .filter(|l| l.abs() >= tol)
        .map(|l| 1.0 / l)
        .sum();
    Ok(g.vertex_count() as f64 * reciprocal_sum)
}

/// Product of nonzero Laplacian eigenvalues over `|V|`.
pub fn spanning_trees_spectral(g: &Graph) -> Result<f64> {
    let spectrum = connected_spectrum(g, false)?;
    let tol = spectrum.zero_tolerance();
    let log_product: f64 = spectrum
        .eigenvalues
        .iter()
        .filter(|l| l.abs() >= tol)
        .map(|l| l.ln())
        .sum();
    Ok((log_product - (g.vertex_count() as f64).ln()).exp())
}

fn pseudoinverse_from(spectrum: &Spectrum) -> DenseMatrix<f64> {
    let vectors = spectrum
        .eigenvectors
        .as_ref()
        .expect("spectrum computed with eigenvectors");
    let n = vectors.order();
    let tol = spectrum.zero_tolerance();
    let kept: Vec<(usize, f64)> = spectrum
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, l)| l.abs() >= tol)
        .map(|(k, &l)| (k, 1.0 / l))
        .collect();
    DenseMatrix::from_fn(n, |i, j| {
        kept.iter()
            .map(|&(k, inv)| vectors[(i, k)] * inv * vectors[(j, k)])
            .sum()
    })
}

/// Moore–Penrose pseudoinverse of a symmetric matrix, inverting only
/// eigenvalues above the zero tolerance.
pub fn pseudoinverse(m: &DenseMatrix<f64>) -> Result<DenseMatrix<f64>> {
    Ok(pseudoinverse_from(&eigen_symmetric(m, true)?))
}

/// Effective resistances between all vertex pairs, unit edge resistors.
#[derive(Clone, Debug, PartialEq)]
pub struct ResistanceMatrix {
    matrix: DenseMatrix<f64>,
}

impl ResistanceMatrix {
    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix[(i, j)]
    }

    pub fn as_matrix(&self) -> &DenseMatrix<f64> {
        &self.matrix
    }

    /// `Σ_{i<j} r_ij`.
    pub fn kirchhoff_index(&self) -> f64 {
        let n = self.order();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .sum()
    }
}

/// `r_ij = Γ_ii + Γ_jj - 2Γ_ij` with `Γ` the Laplacian pseudoinverse.
pub fn resistance_distances(g: &Graph) -> Result<ResistanceMatrix> {
    let gamma = pseudoinverse_from(&connected_spectrum(g, true)?);
    let matrix = DenseMatrix::from_fn(g.vertex_count(), |i, j| {
        let (p, q) = (i.min(j), i.max(j));
        if p == q {
            0.0
        } else {
            (gamma[(p, p)] + gamma[(q, q)] - 2.0 * gamma[(p, q)]).max(0.0)
        }
    });
    Ok(ResistanceMatrix { matrix })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumUnion {
    pub max_gap: f64,
    pub agrees: bool,
}

/// Compares the Laplacian spectrum of `g` with the merged spectra of the
/// two reduced matrices.
pub fn spectrum_union_check(
    g: &Graph,
    decomposed: (&DenseMatrix<f64>, &DenseMatrix<f64>),
) -> Result<SpectrumUnion> {
    let (first, second) = decomposed;
    let expected = g.vertex_count();
    let actual = first.order() + second.order();
    if actual != expected {
        return Err(Error::DimensionMismatch { expected, actual });
    }
    let full = eigen_symmetric(&laplacian_f64(g), false)?.eigenvalues;
    let mut merged = eigen_symmetric(first, false)?.eigenvalues;
    merged.extend(eigen_symmetric(second, false)?.eigenvalues);
    merged.sort_by(f64::total_cmp);
    let max_gap = full
        .iter()
        .zip(&merged)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(SpectrumUnion {
        max_gap,
        agrees: max_gap < UNION_TOLERANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, build_pentagonal_cylinder, build_pentagonal_moebius};

    fn rows(r: Vec<Vec<f64>>) -> DenseMatrix<f64> {
        DenseMatrix::from_rows(r).unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn diagonal_matrix() {
        let m = rows(vec![vec![3.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 2.0]]);
        assert_eq!(eigen_symmetric(&m, false).unwrap().eigenvalues, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let ev = eigen_symmetric(&laplacian_f64(&g), false).unwrap().eigenvalues;
        assert!(ev[0].abs() < 1e-14 && (ev[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn smallest_cylinder_has_simple_zero() {
        let g = build_pentagonal_cylinder(2).unwrap();
        let s = eigen_symmetric(&laplacian_f64(&g), false).unwrap();
        assert!(s.eigenvalues[0].abs() < 1e-9);
        assert!(s.eigenvalues[1] > 0.1);
        let trace: f64 = s.eigenvalues.iter().sum();
        assert!((trace - 28.0).abs() < 1e-8 * 28.0);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = rows(vec![vec![1.0, 2.0], vec![0.0, 1.0]]);
        assert!(matches!(eigen_symmetric(&m, false), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn eigenvectors_diagonalise() {
        let g = build_pentagonal_moebius(3).unwrap();
        let l = laplacian_f64(&g);
        let s = eigen_symmetric(&l, true).unwrap();
        let v = s.eigenvectors.as_ref().unwrap();
        let n = l.order();
        for i in 0..n {
            for k in 0..n {
                let lv: f64 = (0..n).map(|j| l[(i, j)] * v[(j, k)]).sum();
                assert!((lv - v[(i, k)] * s.eigenvalues[k]).abs() < 1e-8);
                let dot: f64 = (0..n).map(|j| v[(j, i)] * v[(j, k)]).sum();
                let expected = if i == k { 1.0 } else { 0.0 };
                assert!((dot - expected).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn kirchhoff_table_values() {
        let cases = [
            (build_pentagonal_cylinder(2).unwrap(), 39.083333),
            (build_pentagonal_moebius(2).unwrap(), 38.5),
            (build_pentagonal_cylinder(4).unwrap(), 226.166667),
        ];
        for (g, expected) in cases {
            let kf = kirchhoff_spectral(&g).unwrap();
            assert!(((kf - expected) / expected).abs() <= 1e-6, "{kf} vs {expected}");
        }
    }

    #[test]
    fn triangle_resistance() {
        let r = resistance_distances(&triangle()).unwrap();
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            assert!((r.get(i, j) - 2.0 / 3.0).abs() < 1e-10);
        }
        assert!((r.kirchhoff_index() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn resistance_bounded_by_distance() {
        let g = build_pentagonal_cylinder(2).unwrap();
        let r = resistance_distances(&g).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        for i in 0..10 {
            assert_eq!(r.get(i, i), 0.0);
            for j in 0..10 {
                assert_eq!(r.get(i, j), r.get(j, i));
                assert!(r.get(i, j) <= d[(i, j)] as f64 + 1e-9);
            }
        }
        assert!((r.kirchhoff_index() - 39.083333).abs() < 1e-6);
    }

    #[test]
    fn pseudoinverse_residual() {
        let l = laplacian_f64(&build_pentagonal_moebius(4).unwrap());
        let gamma = pseudoinverse(&l).unwrap();
        let lgl = l.mul(&gamma).unwrap().mul(&l).unwrap();
        for (x, y) in lgl.entries().iter().zip(l.entries()) {
            assert!((x - y).abs() < 1e-8);
        }
    }

    #[test]
    fn spectral_tree_count() {
        let t = spanning_trees_spectral(&build_pentagonal_cylinder(2).unwrap()).unwrap();
        assert!((t - 768.0).abs() < 1e-6);
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(kirchhoff_spectral(&g), Err(Error::Disconnected));
        assert_eq!(resistance_distances(&g), Err(Error::Disconnected));
    }

    #[test]
    fn union_check_dimension_mismatch() {
        let g = triangle();
        let one = DenseMatrix::identity(1);
        assert!(matches!(
            spectrum_union_check(&g, (&one, &one)),
            Err(Error::DimensionMismatch { expected: 3, actual: 2 })
        ));
    }
}
