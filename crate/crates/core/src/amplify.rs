//! Oblivious amplitude amplification of the ancilla-zero block.

use num_complex::Complex64;

use crate::dense::DenseMatrix;
use crate::error::Result;
use crate::lcu::{apply_u1, apply_u1_adjoint, extract_block, LcuOperator};
use crate::state::{Controls, StateVector};

/// Default upper end of the repetition scan.
pub const DEFAULT_M_MAX: usize = 16;

/// `Q^m·U` for a block-encoded operator.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplifiedOperator {
    pub base: LcuOperator,
    pub m: usize,
}

impl AmplifiedOperator {
    pub fn new(base: LcuOperator, m: usize) -> Self {
        Self { base, m }
    }

    pub fn apply(&self, state: &mut StateVector, controls: &Controls) -> Result<()> {
        apply_u1(state, &self.base, controls)?;
        for _ in 0..self.m {
            apply_q(state, &self.base, controls)?;
        }
        Ok(())
    }

    /// Ancilla-zero block of `Q^m·U`.
    pub fn block(&self) -> Result<DenseMatrix> {
        extract_block(self.base.layout(0, 0)?, |s| self.apply(s, &Controls::none()))
    }
}

/// `Q = U·R·U†·R` with `R = 2|0⟩⟨0| - I` on the ancilla register only.
pub fn apply_q(state: &mut StateVector, lcu: &LcuOperator, controls: &Controls) -> Result<()> {
    let ancilla = state.layout().ancilla_mask();
    if ancilla == 0 {
        // A zero-width ancilla has nothing to amplify; R = I and Q = U·U† = I.
        return Ok(());
    }
    state.reflect_about_zero(ancilla, controls)?;
    apply_u1_adjoint(state, lcu, controls)?;
    state.reflect_about_zero(ancilla, controls)?;
    apply_u1(state, lcu, controls)
}

/// Kept norm after projecting `Q^m·U·|0⟩|probe⟩`, for `m = 0..=m_max`.
pub fn kept_norm_scan(lcu: &LcuOperator, probe: &[Complex64], m_max: usize) -> Result<Vec<f64>> {
    let mut state = StateVector::prepare(lcu.layout(0, 0)?, probe)?;
    apply_u1(&mut state, lcu, &Controls::none())?;
    let mut norms = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        if m > 0 {
            apply_q(&mut state, lcu, &Controls::none())?;
        }
        norms.push(state.clone().project_ancilla_zero());
    }
    Ok(norms)
}

/// The repetition count in `0..=m_max` with the largest kept norm; ties go to the smaller `m`.
pub fn tune_m(lcu: &LcuOperator, probe: &[Complex64], m_max: usize) -> Result<usize> {
    let norms = kept_norm_scan(lcu, probe, m_max)?;
    let mut best = 0;
    for (m, &k) in norms.iter().enumerate() {
        if k > norms[best] {
            best = m;
        }
    }
    Ok(best)
}

/// Distance of the amplified block from its ideal form, with the non-unitarity bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockError {
    /// `‖block(Q^m·U) - g_m·H̃/s‖₂`, where `g_m` is the gain amplification would give a
    /// block with all singular values `1/s`.
    pub error: f64,
    /// `‖block(Q^m·U) - H̃/s‖₂`, the distance from the unamplified block.
    pub unamplified_error: f64,
    /// `g_m = (-1)^m·sin((2m+1)θ)/sin θ` with `sin θ = 1/s`.
    pub ideal_gain: f64,
    /// `‖H²‖₂/κ²`, the distance of `H̃` from unitarity.
    pub bound: f64,
}

pub fn ideal_gain(s: f64, m: usize) -> f64 {
    let theta = (1.0 / s).asin();
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * ((2 * m + 1) as f64 * theta).sin() / theta.sin()
}

pub fn amplified_block_error(lcu: &LcuOperator, m: usize) -> Result<BlockError> {
    let block = AmplifiedOperator::new(lcu.clone(), m).block()?;
    let htilde = lcu.reconstruct()?;
    let target = htilde.scale(Complex64::new(1.0 / lcu.s(), 0.0));
    let gain = ideal_gain(lcu.s(), m);
    let error = (&block - &target.scale(Complex64::new(gain, 0.0))).spectral_norm();
    let unamplified_error = (&block - &target).spectral_norm();
    // (H̃ - I)² = -H²/κ².
    let shifted = &htilde - &DenseMatrix::identity(htilde.dim());
    let bound = (&shifted * &shifted).spectral_norm();
    Ok(BlockError {
        error,
        unamplified_error,
        ideal_gain: gain,
        bound,
    })
}
