use std::fmt;

use crate::error::{domain, Result};
use crate::exact::Rational;

/// Square matrix of exact rationals stored row-major. Row and column `u`
/// refer to the vertex of colex rank `u` when the matrix comes from a scheme.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseRationalMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl DenseRationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseRationalMatrix {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, &Rational::one())
    }

    pub fn scalar(dim: usize, value: &Rational) -> Self {
        let mut m = Self::zeros(dim);
        for u in 0..dim {
            m.set(u, u, value.clone());
        }
        m
    }

    pub fn ones(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| Rational::one())
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for u in 0..dim {
            for v in 0..dim {
                entries.push(f(u, v));
            }
        }
        DenseRationalMatrix { dim, entries }
    }

    /// Builds from nested rows; all rows must have the outer length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return domain("matrix rows must all have length equal to the row count");
        }
        Ok(DenseRationalMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, u: usize, v: usize) -> &Rational {
        &self.entries[u * self.dim + v]
    }

    pub fn set(&mut self, u: usize, v: usize, value: Rational) {
        self.entries[u * self.dim + v] = value;
    }

    pub fn row(&self, u: usize) -> &[Rational] {
        &self.entries[u * self.dim..(u + 1) * self.dim]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|u| (u + 1..self.dim).all(|v| self.get(u, v) == self.get(v, u)))
    }

    /// First asymmetric position, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|u| (u + 1..self.dim).map(move |v| (u, v)))
            .find(|&(u, v)| self.get(u, v) != self.get(v, u))
    }

    pub fn row_sum(&self, u: usize) -> Rational {
        self.row(u).iter().sum()
    }

    /// `self + c·I`.
    pub fn shifted(&self, c: &Rational) -> Self {
        let mut m = self.clone();
        for u in 0..self.dim {
            let v = m.get(u, u) + c;
            m.set(u, u, v);
        }
        m
    }

    /// `c·I - self`.
    pub fn reflected(&self, c: &Rational) -> Self {
        let mut m = Self::from_fn(self.dim, |u, v| -self.get(u, v));
        for u in 0..self.dim {
            let v = m.get(u, u) + c;
            m.set(u, u, v);
        }
        m
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return domain(format!("dimension mismatch {} vs {}", self.dim, other.dim));
        }
        Ok(DenseRationalMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        DenseRationalMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// `M v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.dim {
            return domain(format!("vector length {} vs dimension {}", v.len(), self.dim));
        }
        Ok((0..self.dim)
            .map(|u| {
                self.row(u)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `vᵀ M v`.
    pub fn quadratic_form(&self, v: &[Rational]) -> Result<Rational> {
        let mv = self.mul_vec(v)?;
        Ok(v.iter().zip(&mv).map(|(a, b)| a * b).sum())
    }

    /// Nonzero entries with `u <= v`, in row-major order.
    pub fn upper_nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        (0..self.dim).flat_map(move |u| {
            (u..self.dim)
                .map(move |v| (u, v, self.get(u, v)))
                .filter(|(_, _, x)| !x.is_zero())
        })
    }

    /// Lossy copy for floating-point cross-checks.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|u| self.row(u).iter().map(Rational::to_f64).collect())
            .collect()
    }
}

impl fmt::Debug for DenseRationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseRationalMatrix({}x{})", self.dim, self.dim)?;
        for u in 0..self.dim.min(16) {
            let row: Vec<String> = self.row(u).iter().take(16).map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
