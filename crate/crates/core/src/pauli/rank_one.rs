use num_complex::Complex64;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};

const NORM_TOLERANCE: f64 = 1e-12;

/// Involutive unitary used as an LCU term for a sum of projectors.
#[derive(Debug, Clone, PartialEq)]
pub enum Reflection {
    Identity {
        dim: usize,
    },
    /// `I - 2|x⟩⟨x|` for a unit vector `x`.
    Householder {
        vector: Vec<Complex64>,
    },
}

impl Reflection {
    pub fn dim(&self) -> usize {
        match self {
            Reflection::Identity { dim } => *dim,
            Reflection::Householder { vector } => vector.len(),
        }
    }

    pub fn apply(&self, v: &mut [Complex64]) {
        if let Reflection::Householder { vector } = self {
            let dot: Complex64 = vector.iter().zip(v.iter()).map(|(x, y)| x.conj() * y).sum();
            for (vi, xi) in v.iter_mut().zip(vector) {
                *vi -= xi * dot * 2.0;
            }
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let dim = self.dim();
        let mut m = DenseMatrix::identity(dim);
        if let Reflection::Householder { vector } = self {
            for r in 0..dim {
                for c in 0..dim {
                    let v = m.get(r, c) - vector[r] * vector[c].conj() * 2.0;
                    m.set(r, c, v);
                }
            }
        }
        m
    }
}

/// `Σ_j |x_j⟩⟨x_j| = (L/2)·I + Σ_j (-1/2)·(I - 2|x_j⟩⟨x_j|)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankOneDecomposition {
    pub coeffs: Vec<f64>,
    pub reflections: Vec<Reflection>,
}

impl RankOneDecomposition {
    pub fn reconstruct(&self) -> DenseMatrix {
        let dim = self.reflections[0].dim();
        let mut acc = DenseMatrix::zeros(dim);
        for (c, r) in self.coeffs.iter().zip(&self.reflections) {
            acc = &acc + &r.to_dense().scale(Complex64::new(*c, 0.0));
        }
        acc
    }
}

/// Rewrites a sum of rank-one projectors onto unit vectors as `L + 1` reflections.
pub fn rank_one_decompose(vectors: &[Vec<Complex64>]) -> Result<RankOneDecomposition> {
    let dim = vectors
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::Degenerate("no vectors given".into()))?;
    let mut coeffs = vec![vectors.len() as f64 / 2.0];
    let mut reflections = vec![Reflection::Identity { dim }];
    for v in vectors {
        if v.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: v.len(),
            });
        }
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Normalization { norm });
        }
        coeffs.push(-0.5);
        reflections.push(Reflection::Householder { vector: v.clone() });
    }
    Ok(RankOneDecomposition { coeffs, reflections })
}
