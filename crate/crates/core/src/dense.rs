//! Small dense complex matrices used as validation oracles.
//!
//! Nothing on the simulation path depends on this module except the cached
//! composite powers in [`crate::pea`], which stay below [`MAX_ORACLE_DIM`].

use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{PauliString, PauliSum};

/// Largest Hamiltonian (in qubits) that [`to_dense`] and [`exact_spectrum`] accept.
pub const MAX_DENSE_QUBITS: usize = 6;

/// Largest dimension of an operator materialized from the statevector engine.
pub const MAX_ORACLE_DIM: usize = 1 << 12;

/// Tolerance on `‖H - H†‖_max` accepted by the eigensolver.
pub const HERMITICITY_TOLERANCE: f64 = 1e-10;

/// Square complex matrix of power-of-two dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    inner: DMatrix<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim.is_power_of_two(), "dimension {dim} is not a power of two");
        Self {
            inner: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        assert!(dim.is_power_of_two(), "dimension {dim} is not a power of two");
        Self {
            inner: DMatrix::identity(dim, dim),
        }
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn from_row_major(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if !dim.is_power_of_two() {
            return Err(Error::Parameter(format!("dimension {dim} is not a power of two")));
        }
        if entries.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(Self {
            inner: DMatrix::from_row_slice(dim, dim, &entries),
        })
    }

    /// Builds a matrix column by column.
    pub fn from_columns(columns: &[Vec<Complex64>]) -> Self {
        let dim = columns.len();
        let mut m = Self::zeros(dim);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), dim);
            for (r, &v) in col.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn to_row_major(&self) -> Vec<Complex64> {
        self.inner.transpose().as_slice().to_vec()
    }

    pub fn as_nalgebra(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.inner[(r, c)]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.inner[(r, c)] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        self.inner.column(c).iter().copied().collect()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            inner: self.inner.adjoint(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            inner: &self.inner * factor,
        }
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim());
        let dim = self.dim();
        (0..dim)
            .map(|r| (0..dim).map(|c| self.inner[(r, c)] * v[c]).sum())
            .collect()
    }

    /// `self^(2^k)` by repeated squaring.
    pub fn pow2k(&self, k: u32) -> Self {
        let mut m = self.clone();
        for _ in 0..k {
            m = &m * &m;
        }
        m
    }

    /// `self^p` by binary exponentiation.
    pub fn pow(&self, mut p: u64) -> Self {
        let mut result = Self::identity(self.dim());
        let mut base = self.clone();
        while p > 0 {
            if p & 1 == 1 {
                result = &result * &base;
            }
            p >>= 1;
            if p > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self ⊗ other`, with `other` acting on the less significant index bits.
    pub fn kron(&self, other: &DenseMatrix) -> Self {
        Self {
            inner: self.inner.kronecker(&other.inner),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.inner.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.dim(), other.dim());
        self.inner
            .iter()
            .zip(other.inner.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest singular value.
    pub fn spectral_norm(&self) -> f64 {
        self.inner.clone().singular_values().iter().copied().fold(0.0, f64::max)
    }

    /// Maximum absolute column sum.
    pub fn induced_one_norm(&self) -> f64 {
        self.inner
            .column_iter()
            .map(|col| col.iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// `max |M - M†|` entrywise.
    pub fn hermitian_asymmetry(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// `‖M†M - I‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        (&self.adjoint() * self).max_abs_diff(&Self::identity(self.dim()))
    }

    /// Top-left `dim × dim` corner.
    pub fn corner(&self, dim: usize) -> Self {
        Self {
            inner: self.inner.view((0, 0), (dim, dim)).into_owned(),
        }
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        DenseMatrix {
            inner: &self.inner * &rhs.inner,
        }
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        DenseMatrix {
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        DenseMatrix {
            inner: &self.inner - &rhs.inner,
        }
    }
}

fn check_dense_cap(n: usize) -> Result<()> {
    if n > MAX_DENSE_QUBITS {
        return Err(Error::SizeCap {
            what: "dense oracle qubits",
            requested: n,
            limit: MAX_DENSE_QUBITS,
        });
    }
    Ok(())
}

pub fn pauli_string_dense(s: &PauliString) -> Result<DenseMatrix> {
    check_dense_cap(s.n())?;
    let dim = 1usize << s.n();
    let mut m = DenseMatrix::zeros(dim);
    for b in 0..dim as u64 {
        let (phase, image) = s.apply_to_basis(b);
        m.set(image as usize, b as usize, phase);
    }
    Ok(m)
}

/// Dense matrix of a Pauli sum; qubit 0 is the least significant index bit.
pub fn to_dense(h: &PauliSum) -> Result<DenseMatrix> {
    check_dense_cap(h.n())?;
    let dim = 1usize << h.n();
    let mut m = DenseMatrix::zeros(dim);
    for t in h.terms() {
        for b in 0..dim as u64 {
            let (phase, image) = t.string.apply_to_basis(b);
            let (r, c) = (image as usize, b as usize);
            let v = m.get(r, c) + t.coeff * phase;
            m.set(r, c, v);
        }
    }
    Ok(m)
}

/// Eigendecomposition with ascending eigenvalues and orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: DenseMatrix,
}

impl Spectrum {
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn eigenvector(&self, j: usize) -> Vec<Complex64> {
        self.eigenvectors.column(j)
    }

    /// Index of the eigenvector with the largest overlap with `state`.
    pub fn dominant_index(&self, state: &[Complex64]) -> usize {
        (0..self.eigenvalues.len())
            .map(|j| {
                let col = self.eigenvectors.column(j);
                let ov: Complex64 = col.iter().zip(state).map(|(a, b)| a.conj() * b).sum();
                (j, ov.norm_sqr())
            })
            .fold((0, -1.0), |best, cur| if cur.1 > best.1 + 1e-12 { cur } else { best })
            .0
    }
}

/// Hermitian eigendecomposition of an arbitrary dense matrix.
pub fn hermitian_eigen(m: &DenseMatrix) -> Result<Spectrum> {
    let asym = m.hermitian_asymmetry();
    if asym > HERMITICITY_TOLERANCE {
        return Err(Error::NotHermitian { asymmetry: asym });
    }
    let eig = m.inner.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..m.dim()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = order.iter().map(|&j| eig.eigenvalues[j]).collect();
    let columns: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&j| eig.eigenvectors.column(j).iter().copied().collect())
        .collect();
    Ok(Spectrum {
        eigenvalues,
        eigenvectors: DenseMatrix::from_columns(&columns),
    })
}

/// Full spectrum of a Pauli sum on at most [`MAX_DENSE_QUBITS`] qubits.
pub fn exact_spectrum(h: &PauliSum) -> Result<Spectrum> {
    hermitian_eigen(&to_dense(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{build_h2, PauliTerm};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_z() {
        let h = PauliSum::from_words(&[(1.0, "Z")]).unwrap();
        let m = to_dense(&h).unwrap();
        assert_eq!(m, DenseMatrix::from_diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)]));
        let spec = exact_spectrum(&h).unwrap();
        assert!((spec.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((spec.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn x_on_high_qubit_swaps_blocks() {
        let h = PauliSum::from_words(&[(1.0, "XI")]).unwrap();
        let m = to_dense(&h).unwrap();
        for (r, col) in [(2, 0), (3, 1), (0, 2), (1, 3)] {
            assert_eq!(m.get(r, col), c(1.0, 0.0));
        }
        assert_eq!(m.get(0, 0), c(0.0, 0.0));
        assert_eq!(m.get(1, 0), c(0.0, 0.0));
    }

    #[test]
    fn h2_is_hermitian() {
        let m = to_dense(&build_h2()).unwrap();
        assert!(m.hermitian_asymmetry() < 1e-15);
    }

    #[test]
    fn size_cap() {
        let h = PauliSum::identity(7);
        assert!(matches!(to_dense(&h), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn non_hermitian_rejected() {
        let h = PauliSum::from_terms(
            1,
            vec![PauliTerm::new(c(0.0, 1.0), PauliString::from_word("Z").unwrap())],
        )
        .unwrap();
        assert!(matches!(exact_spectrum(&h), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn eigen_residual() {
        let h = build_h2();
        let m = to_dense(&h).unwrap();
        let spec = exact_spectrum(&h).unwrap();
        let lambda = DenseMatrix::from_diagonal(&spec.eigenvalues.iter().map(|&l| c(l, 0.0)).collect::<Vec<_>>());
        let lhs = &m * &spec.eigenvectors;
        let rhs = &spec.eigenvectors * &lambda;
        assert!(lhs.max_abs_diff(&rhs) < 1e-10);
        assert!(spec.eigenvectors.unitarity_defect() < 1e-10);
    }

    #[test]
    fn powers_agree() {
        let m = DenseMatrix::from_row_major(2, vec![c(0.6, 0.1), c(0.2, 0.0), c(-0.1, 0.3), c(0.5, -0.2)]).unwrap();
        assert!(m.pow2k(3).max_abs_diff(&m.pow(8)) < 1e-14);
        assert!(m.pow(5).max_abs_diff(&(&m.pow(2) * &m.pow(3))) < 1e-14);
    }

    #[test]
    fn row_major_round_trip() {
        let entries = vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)];
        let m = DenseMatrix::from_row_major(2, entries.clone()).unwrap();
        assert_eq!(m.get(0, 1), c(2.0, 0.0));
        assert_eq!(m.to_row_major(), entries);
        assert!(DenseMatrix::from_row_major(3, vec![c(0.0, 0.0); 9]).is_err());
    }
}
