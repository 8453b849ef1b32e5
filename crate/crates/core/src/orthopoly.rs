//! Laplacian predistance polynomials.
//!
//! The distinct Laplacian spectrum defines the discrete inner product
//!
//! ```text
//! ⟨p, q⟩ = (1/n) Σ_i m_i p(θ_i) q(θ_i)
//! ```
//!
//! on polynomials of degree at most `d`. The predistance polynomials
//! `r_0, …, r_d` are the orthogonal sequence for this product normalized by
//! `‖r_i‖² = r_i(0)`. They satisfy
//!
//! ```text
//! x r_i = β_{i−1} r_{i−1} + α_i r_i + γ_{i+1} r_{i+1}
//! ```
//!
//! with negative `β`, `γ` and zero row sums `α_i + β_i + γ_i = 0`.
//!
//! Construction runs the Stieltjes procedure on node values (equivalently,
//! Lanczos on `diag(θ)`), so every inner product is an exact weighted sum over
//! the `d + 1` nodes.

use serde::Serialize;

use crate::eigen::{DistinctSpectrum, PhiProducts};
use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::poly::Polynomial;

/// The discrete measure `Σ (m_i/n) δ_{θ_i}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralMeasure {
    thetas: Vec<f64>,
    mults: Vec<usize>,
    weights: Vec<f64>,
    n: usize,
}

impl SpectralMeasure {
    pub fn from_spectrum(s: &DistinctSpectrum) -> Self {
        Self::new(s.thetas.clone(), s.mults.clone())
            .expect("a validated DistinctSpectrum is a valid measure")
    }

    /// Nodes must be strictly ascending with `θ_0 = 0`; multiplicities positive.
    pub fn new(thetas: Vec<f64>, mults: Vec<usize>) -> Result<Self> {
        if thetas.is_empty() || thetas.len() != mults.len() {
            return Err(Error::InvalidSpectrum(
                "measure needs matching, nonempty nodes and multiplicities".into(),
            ));
        }
        if thetas[0] != 0.0 {
            return Err(Error::InvalidSpectrum(
                "first node must be exactly 0".into(),
            ));
        }
        if thetas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpectrum(
                "nodes must be strictly ascending".into(),
            ));
        }
        if mults.contains(&0) {
            return Err(Error::InvalidSpectrum(
                "multiplicities must be positive".into(),
            ));
        }
        let n: usize = mults.iter().sum();
        let weights = mults.iter().map(|&m| m as f64 / n as f64).collect();
        Ok(SpectralMeasure {
            thetas,
            mults,
            weights,
            n,
        })
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.thetas.len() - 1
    }

    fn dot(&self, f: &[f64], g: &[f64]) -> f64 {
        self.weights
            .iter()
            .zip(f.iter().zip(g))
            .map(|(w, (a, b))| w * a * b)
            .sum()
    }

    fn values(&self, p: &Polynomial) -> Vec<f64> {
        self.thetas.iter().map(|&t| p.eval(t)).collect()
    }
}

/// `⟨p, q⟩ = (1/n) Σ m_i p(θ_i) q(θ_i)`.
///
/// Only positive definite on polynomials of degree at most `d`; beyond that
/// a nonzero polynomial vanishing on every node has norm zero.
pub fn inner_product(p: &Polynomial, q: &Polynomial, mu: &SpectralMeasure) -> f64 {
    mu.dot(&mu.values(p), &mu.values(q))
}

/// `r_0, …, r_d` with the coefficients of their three-term recurrence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PredistanceSystem {
    pub polys: Vec<Polynomial>,
    /// `α_0, …, α_d`
    pub alpha: Vec<f64>,
    /// `β_0, …, β_{d−1}`
    pub beta: Vec<f64>,
    /// `γ_1, …, γ_d` (`gamma[0]` is `γ_1`)
    pub gamma: Vec<f64>,
    /// `values[i][k] = r_i(θ_k)`, as produced by the construction. Evaluating
    /// the coefficient vectors instead loses accuracy once `d` is large, since
    /// the monomial basis is badly conditioned on the nodes.
    #[serde(skip)]
    pub values: Vec<Vec<f64>>,
}

impl PredistanceSystem {
    pub fn d(&self) -> usize {
        self.polys.len() - 1
    }

    /// `β_i`, zero outside `0..d`.
    pub fn beta(&self, i: usize) -> f64 {
        self.beta.get(i).copied().unwrap_or(0.0)
    }

    /// `γ_i`, zero outside `1..=d`.
    pub fn gamma(&self, i: usize) -> f64 {
        if i == 0 {
            0.0
        } else {
            self.gamma.get(i - 1).copied().unwrap_or(0.0)
        }
    }

    /// The spectral excess `r_d(0)`, evaluating `r_d` at 0.
    pub fn spectral_excess(&self) -> f64 {
        self.polys[self.d()].eval(0.0)
    }

    /// `r_0(M), …, r_d(M)` by running the recurrence on matrices.
    pub fn eval_all_matrix(&self, m: &SymMatrix) -> Vec<SymMatrix> {
        let n = m.order();
        let mut out = vec![SymMatrix::identity(n)];
        for i in 0..self.d() {
            let shifted = m.shift_diagonal(-self.alpha[i]);
            let mut next = shifted.mul_commuting(&out[i]);
            if i > 0 {
                next = next.add_scaled(&out[i - 1], -self.beta(i - 1));
            }
            out.push(next.scale(1.0 / self.gamma(i + 1)));
        }
        out
    }
}

/// Builds the predistance polynomials of `mu` by the Stieltjes procedure.
///
/// The recurrence runs on the orthonormal node vectors `v_i[k] = √w_k p̂_i(θ_k)`
/// (`p̂_i` the orthonormal polynomials), re-orthogonalizing each new vector
/// against all previous ones. Because `θ_0 = 0` is a node, `r_i = p̂_i(0) p̂_i`.
/// The values `p̂_i(0)` come from the null vector of the Jacobi matrix and are
/// stored as the constant coefficients, so `r_i(0)` keeps full relative
/// accuracy even when it is far below rounding level.
pub fn predistance_system(mu: &SpectralMeasure) -> Result<PredistanceSystem> {
    let d = mu.d();
    let x = &mu.thetas;
    let sqrt_w: Vec<f64> = mu.weights.iter().map(|w| w.sqrt()).collect();

    // Lanczos on diag(θ) started from √w.
    let mut vecs: Vec<Vec<f64>> = vec![sqrt_w.clone()];
    let mut diag = Vec::with_capacity(d + 1); // a_i = ⟨x p̂_i, p̂_i⟩
    let mut off = Vec::with_capacity(d); // s_{i+1} = ‖(x − a_i) p̂_i − s_i p̂_{i−1}‖
    for i in 0..=d {
        let v = &vecs[i];
        let mut z: Vec<f64> = x.iter().zip(v).map(|(t, v)| t * v).collect();
        let a = dot(&z, v);
        diag.push(a);
        if i == d {
            break;
        }
        for (zk, vk) in z.iter_mut().zip(v) {
            *zk -= a * vk;
        }
        if i > 0 {
            let s = off[i - 1];
            for (zk, pk) in z.iter_mut().zip(&vecs[i - 1]) {
                *zk -= s * pk;
            }
        }
        for _ in 0..2 {
            for prev in &vecs {
                let c = dot(&z, prev);
                for (zk, pk) in z.iter_mut().zip(prev) {
                    *zk -= c * pk;
                }
            }
        }
        let s = dot(&z, &z).sqrt();
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::Breakdown {
                index: i + 1,
                reason: format!("Lanczos norm {s:e}"),
            });
        }
        off.push(s);
        vecs.push(z.into_iter().map(|zk| zk / s).collect());
    }

    let kappa = values_at_zero(&diag, &off, &vecs);

    // Orthonormal polynomial coefficients: s_{i+1} p̂_{i+1} = (x − a_i) p̂_i − s_i p̂_{i−1},
    // with the constant term pinned to the accurately computed p̂_i(0).
    let mut ortho: Vec<Polynomial> = vec![Polynomial::constant(1.0)];
    for i in 0..d {
        let mut next = &ortho[i].mul_x() - &ortho[i].scale(diag[i]);
        if i > 0 {
            next = &next - &ortho[i - 1].scale(off[i - 1]);
        }
        let mut coeffs = next.scale(1.0 / off[i]).coeffs().to_vec();
        coeffs[0] = kappa[i + 1];
        ortho.push(Polynomial::new(coeffs));
    }

    let mut polys = Vec::with_capacity(d + 1);
    let mut values: Vec<Vec<f64>> = Vec::with_capacity(d + 1);
    let mut r_norms = Vec::with_capacity(d + 1);
    for (i, v) in vecs.iter().enumerate() {
        let at_zero = kappa[i];
        let r0 = at_zero * at_zero;
        if !(r0 > 0.0 && r0.is_finite()) {
            return Err(Error::Breakdown {
                index: i,
                reason: format!("r_{i}(0) = {r0:e} vanishes numerically"),
            });
        }
        polys.push(ortho[i].scale(at_zero));
        let mut vals: Vec<f64> = v
            .iter()
            .zip(&sqrt_w)
            .map(|(vk, sw)| at_zero * vk / sw)
            .collect();
        vals[0] = r0;
        values.push(vals);
        r_norms.push(r0);
    }
    let r_vals = &values;

    let mut alpha = Vec::with_capacity(d + 1);
    let mut beta = Vec::with_capacity(d);
    let mut gamma = Vec::with_capacity(d);
    for i in 0..=d {
        let xr: Vec<f64> = x.iter().zip(&r_vals[i]).map(|(t, r)| t * r).collect();
        alpha.push(mu.dot(&xr, &r_vals[i]) / r_norms[i]);
        if i > 0 {
            beta.push(mu.dot(&xr, &r_vals[i - 1]) / r_norms[i - 1]);
        }
        if i < d {
            gamma.push(mu.dot(&xr, &r_vals[i + 1]) / r_norms[i + 1]);
        }
    }

    Ok(PredistanceSystem {
        polys,
        alpha,
        beta,
        gamma,
        values,
    })
}

/// `p̂_i(0)` for `i = 0..=d`.
///
/// `(p̂_0(0), …, p̂_d(0))` spans the null space of the Jacobi matrix, since 0 is
/// a node. These values can span hundreds of orders of magnitude, so the
/// recurrence runs forward from `p̂_0(0) = 1` up to the largest component and
/// backward from the last one down to it, each direction in its stable sense.
/// The Lanczos vectors only pick the joining index.
fn values_at_zero(diag: &[f64], off: &[f64], vecs: &[Vec<f64>]) -> Vec<f64> {
    let d = diag.len() - 1;
    let twist = vecs
        .iter()
        .map(|v| v[0].abs())
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .map_or(0, |(i, _)| i);

    let mut u = vec![0.0; d + 1];
    u[0] = 1.0;
    for i in 0..twist {
        let prev = if i > 0 { off[i - 1] * u[i - 1] } else { 0.0 };
        u[i + 1] = -(diag[i] * u[i] + prev) / off[i];
    }
    if twist < d {
        let mut back = vec![0.0; d + 1];
        back[d] = 1.0;
        for i in (twist + 1..=d).rev() {
            let next = if i < d { off[i] * back[i + 1] } else { 0.0 };
            back[i - 1] = -(diag[i] * back[i] + next) / off[i - 1];
        }
        let scale = u[twist] / back[twist];
        for i in twist + 1..=d {
            u[i] = back[i] * scale;
        }
    }
    u
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `H = (n/φ_0) Π_{i=1..d} (x − θ_i)`, the polynomial with `H(L) = J`.
pub fn hoffman_polynomial(mu: &SpectralMeasure) -> Polynomial {
    let roots = &mu.thetas[1..];
    let phi0: f64 = roots.iter().map(|t| -t).product();
    Polynomial::from_roots(roots).scale(mu.n as f64 / phi0)
}

/// `r_d(0) = n (Σ_i φ_0² / (m_i φ_i²))⁻¹`, from the spectrum alone.
pub fn spectral_excess_closed_form(mu: &SpectralMeasure, phis: &PhiProducts) -> f64 {
    let phi0 = phis.phis[0];
    let sum: f64 = mu
        .mults
        .iter()
        .zip(&phis.phis)
        .map(|(&m, &phi)| (phi0 / phi).powi(2) / m as f64)
        .sum();
    mu.n as f64 / sum
}
