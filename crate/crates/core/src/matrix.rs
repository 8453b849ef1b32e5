//! Dense symmetric matrix storage.

use std::fmt;

/// Dense row-major `n × n` real symmetric matrix.
///
/// Every constructor writes `(u, v)` and `(v, u)` from a single value, so
/// `get(u, v) == get(v, u)` holds bit-for-bit.
#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::scaled_identity(order, 1.0)
    }

    pub fn scaled_identity(order: usize, value: f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.entries[i * order + i] = value;
        }
        m
    }

    /// All-ones matrix `J`.
    pub fn ones(order: usize) -> Self {
        Self {
            order,
            entries: vec![1.0; order * order],
        }
    }

    /// Builds a matrix from `f(u, v)` evaluated on the upper triangle only.
    pub fn from_upper_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for u in 0..order {
            for v in u..order {
                let x = f(u, v);
                m.entries[u * order + v] = x;
                m.entries[v * order + u] = x;
            }
        }
        m
    }

    /// Symmetrizes a row-major square buffer as `(M + Mᵀ)/2`.
    pub fn symmetrized(order: usize, raw: &[f64]) -> Self {
        assert_eq!(raw.len(), order * order, "buffer is not {order}×{order}");
        Self::from_upper_fn(order, |u, v| {
            0.5 * (raw[u * order + v] + raw[v * order + u])
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.entries[u * self.order + v]
    }

    /// Sets `(u, v)` and `(v, u)`.
    pub fn set(&mut self, u: usize, v: usize, x: f64) {
        self.entries[u * self.order + v] = x;
        self.entries[v * self.order + u] = x;
    }

    pub fn row(&self, u: usize) -> &[f64] {
        &self.entries[u * self.order..(u + 1) * self.order]
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Raw product `self · other` as a row-major buffer (not necessarily symmetric).
    pub fn mul_raw(&self, other: &SymMatrix) -> Vec<f64> {
        assert_eq!(self.order, other.order, "order mismatch");
        let n = self.order;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            let out_row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0.0 {
                    continue;
                }
                let b_row = &other.entries[k * n..(k + 1) * n];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// Product of two commuting symmetric matrices, symmetrized on output.
    pub fn mul_commuting(&self, other: &SymMatrix) -> SymMatrix {
        Self::symmetrized(self.order, &self.mul_raw(other))
    }

    /// `self + scale · other`
    pub fn add_scaled(&self, other: &SymMatrix, scale: f64) -> SymMatrix {
        assert_eq!(self.order, other.order, "order mismatch");
        SymMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + scale * b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: f64) -> SymMatrix {
        SymMatrix {
            order: self.order,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    /// Adds `value` to every diagonal entry.
    pub fn shift_diagonal(&self, value: f64) -> SymMatrix {
        let mut m = self.clone();
        for i in 0..self.order {
            m.entries[i * self.order + i] += value;
        }
        m
    }

    /// Max-abs entry of `self − other`.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.order, other.order, "order mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|a| a.abs()).fold(0.0, f64::max)
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix({})", self.order)?;
        for u in 0..self.order {
            writeln!(f, "  {:?}", self.row(u))?;
        }
        Ok(())
    }
}
