//! Dense symmetric eigenvalues by cyclic Jacobi rotations, clustering of the
//! raw Laplacian spectrum into distinct eigenvalues with multiplicities, the
//! products `φ_i = Π_{j≠i}(θ_i − θ_j)` and the spectral idempotents of `L`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;

/// Sweep stops once the off-diagonal Frobenius norm is at most this fraction
/// of the full Frobenius norm.
pub const JACOBI_REL_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Default relative clustering tolerance.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// All eigenvalues of a symmetric matrix, ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRaw {
    pub values: Vec<f64>,
}

impl SpectrumRaw {
    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }
}

/// Cyclic Jacobi eigenvalue solver.
pub fn eigenvalues_sym(m: &SymMatrix) -> Result<SpectrumRaw> {
    let n = m.order();
    let mut a: Vec<f64> = m.as_slice().to_vec();
    let frob = m.frobenius_norm();
    let threshold = JACOBI_REL_TOL * frob;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // A ← Jᵀ A J
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(SpectrumRaw { values })
}

/// Distinct Laplacian eigenvalues `0 = θ_0 < θ_1 < … < θ_d` with multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistinctSpectrum {
    pub thetas: Vec<f64>,
    pub mults: Vec<usize>,
    /// Smallest gap between consecutive distinct eigenvalues (`None` when `d = 0`).
    pub min_gap: Option<f64>,
    /// Largest spread inside a merged cluster.
    pub max_cluster_width: f64,
}

impl DistinctSpectrum {
    /// Number of distinct eigenvalues minus one.
    pub fn d(&self) -> usize {
        self.thetas.len() - 1
    }

    /// Sum of the multiplicities.
    pub fn n(&self) -> usize {
        self.mults.iter().sum()
    }
}

/// Greedy left-to-right clustering of a sorted raw spectrum.
///
/// Consecutive values within `tol · max(1, ρ)` (ρ the spectral radius) share a
/// cluster whose value is the mean of its members. The lowest cluster must be
/// the simple eigenvalue 0 and is stored as exactly `0.0`.
pub fn cluster_spectrum(raw: &SpectrumRaw, tol: f64) -> Result<DistinctSpectrum> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidSpectrum(format!(
            "clustering tolerance must be positive, got {tol}"
        )));
    }
    let values = &raw.values;
    if values.is_empty() {
        return Err(Error::InvalidSpectrum("empty spectrum".into()));
    }
    if values.windows(2).any(|w| w[0] > w[1]) || values.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidSpectrum(
            "raw spectrum is not sorted ascending".into(),
        ));
    }
    let abs_tol = tol * raw.spectral_radius().max(1.0);
    if values[0] < -abs_tol {
        return Err(Error::InvalidSpectrum(format!(
            "negative Laplacian eigenvalue {:e}",
            values[0]
        )));
    }

    let mut clusters: Vec<(f64, usize, f64, f64)> = Vec::new(); // (sum, count, first, last)
    for &x in values {
        match clusters.last_mut() {
            Some((sum, count, _, last)) if x - *last <= abs_tol => {
                *sum += x;
                *count += 1;
                *last = x;
            }
            _ => clusters.push((x, 1, x, x)),
        }
    }

    let mut thetas: Vec<f64> = clusters.iter().map(|c| c.0 / c.1 as f64).collect();
    let mults: Vec<usize> = clusters.iter().map(|c| c.1).collect();
    let max_cluster_width = clusters.iter().map(|c| c.3 - c.2).fold(0.0, f64::max);

    if thetas[0].abs() > abs_tol {
        return Err(Error::InvalidSpectrum(format!(
            "smallest eigenvalue {:e} is not zero",
            thetas[0]
        )));
    }
    if mults[0] != 1 {
        return Err(Error::InvalidSpectrum(format!(
            "eigenvalue 0 has multiplicity {} (graph not connected, or tolerance too coarse)",
            mults[0]
        )));
    }
    thetas[0] = 0.0;
    let min_gap = thetas
        .windows(2)
        .map(|w| w[1] - w[0])
        .min_by(f64::total_cmp);

    Ok(DistinctSpectrum {
        thetas,
        mults,
        min_gap,
        max_cluster_width,
    })
}

/// `φ_i = Π_{j≠i}(θ_i − θ_j)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiProducts {
    pub phis: Vec<f64>,
}

pub fn phi_products(s: &DistinctSpectrum) -> PhiProducts {
    let t = &s.thetas;
    let phis = (0..t.len())
        .map(|i| {
            (0..t.len())
                .filter(|&j| j != i)
                .map(|j| t[i] - t[j])
                .product()
        })
        .collect();
    PhiProducts { phis }
}

/// The idempotent `F_i = (1/φ_i) Π_{j≠i}(L − θ_j I)`.
pub fn idempotent(l: &SymMatrix, s: &DistinctSpectrum, i: usize) -> Result<SymMatrix> {
    let d = s.d();
    if i > d {
        return Err(Error::IndexOutOfRange { index: i, d });
    }
    let phi = phi_products(s).phis[i];
    let mut acc = SymMatrix::identity(l.order());
    for (j, &theta) in s.thetas.iter().enumerate() {
        if j != i {
            acc = acc.mul_commuting(&l.shift_diagonal(-theta));
        }
    }
    Ok(acc.scale(1.0 / phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn raw(values: &[f64]) -> SpectrumRaw {
        SpectrumRaw {
            values: values.to_vec(),
        }
    }

    #[test]
    fn two_by_two() {
        let l = SymMatrix::from_upper_fn(2, |u, v| if u == v { 1.0 } else { -1.0 });
        let s = eigenvalues_sym(&l).unwrap();
        assert_abs_diff_eq!(s.values[0], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.values[1], 2.0, epsilon = 1e-14);
    }

    #[test]
    fn diagonal_and_zero_inputs() {
        let z = SymMatrix::zeros(1);
        assert_eq!(eigenvalues_sym(&z).unwrap().values, vec![0.0]);
        let mut d = SymMatrix::zeros(3);
        d.set(0, 0, 3.0);
        d.set(1, 1, -1.0);
        assert_eq!(eigenvalues_sym(&d).unwrap().values, vec![-1.0, 0.0, 3.0]);
    }

    #[test]
    fn clusters_c4() {
        let s =
            cluster_spectrum(&raw(&[1e-15, 2.0, 2.0 + 1e-13, 4.0]), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(s.thetas[0], 0.0);
        assert_eq!(s.mults, vec![1, 2, 1]);
        assert_eq!(s.d(), 2);
        assert_abs_diff_eq!(s.thetas[1], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.min_gap.unwrap(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn cluster_errors() {
        assert!(matches!(
            cluster_spectrum(&raw(&[0.0, 0.0, 2.0]), 1e-8),
            Err(Error::InvalidSpectrum(_))
        ));
        assert!(cluster_spectrum(&raw(&[-0.5, 0.0, 2.0]), 1e-8).is_err());
        assert!(cluster_spectrum(&raw(&[0.3, 2.0]), 1e-8).is_err());
        assert!(cluster_spectrum(&raw(&[0.0, 2.0]), 0.0).is_err());
        assert!(cluster_spectrum(&raw(&[0.0, 2.0, 1.0]), 1e-8).is_err());
    }

    #[test]
    fn phi_values() {
        let petersen = DistinctSpectrum {
            thetas: vec![0.0, 2.0, 5.0],
            mults: vec![1, 5, 4],
            min_gap: Some(2.0),
            max_cluster_width: 0.0,
        };
        assert_eq!(phi_products(&petersen).phis, vec![10.0, -6.0, 15.0]);

        let k1 = DistinctSpectrum {
            thetas: vec![0.0],
            mults: vec![1],
            min_gap: None,
            max_cluster_width: 0.0,
        };
        assert_eq!(phi_products(&k1).phis, vec![1.0]);

        let r = 2f64.sqrt();
        let p4 = DistinctSpectrum {
            thetas: vec![0.0, 2.0 - r, 2.0, 2.0 + r],
            mults: vec![1, 1, 1, 1],
            min_gap: None,
            max_cluster_width: 0.0,
        };
        assert_abs_diff_eq!(phi_products(&p4).phis[0], -4.0, epsilon = 1e-12);
    }

    #[test]
    fn idempotent_of_k2() {
        let l = SymMatrix::from_upper_fn(2, |u, v| if u == v { 1.0 } else { -1.0 });
        let s = cluster_spectrum(&eigenvalues_sym(&l).unwrap(), DEFAULT_CLUSTER_TOL).unwrap();
        let f1 = idempotent(&l, &s, 1).unwrap();
        let expected = SymMatrix::from_upper_fn(2, |u, v| if u == v { 0.5 } else { -0.5 });
        assert!(f1.max_abs_diff(&expected) < 1e-12);
        let f0 = idempotent(&l, &s, 0).unwrap();
        assert!(f0.max_abs_diff(&SymMatrix::ones(2).scale(0.5)) < 1e-12);
        assert_eq!(
            idempotent(&l, &s, 2),
            Err(Error::IndexOutOfRange { index: 2, d: 1 })
        );
    }
}
