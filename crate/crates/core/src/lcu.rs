//! Block encoding of `H̃ = I - iH/κ` as a linear combination of Pauli unitaries.

use log::warn;
use num_complex::Complex64;

use crate::dense::{exact_spectrum, to_dense, DenseMatrix, MAX_DENSE_QUBITS, MAX_ORACLE_DIM};
use crate::error::{Error, Result};
use crate::pauli::{PauliString, PauliSum, PauliTerm};
use crate::state::{operator_matrix, Controls, RegisterLayout, StateVector};

/// Weights below this are treated as the trivial preparation `W = I`.
const HOUSEHOLDER_EPS: f64 = 1e-15;

/// `H̃ = Σ_l β_l V_l` with `β_l ≥ 0` and unit-modulus Pauli terms `V_l`; term 0 is the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct LcuOperator {
    kappa: f64,
    betas: Vec<f64>,
    terms: Vec<PauliTerm>,
    s: f64,
    l: usize,
    n: usize,
    /// Householder vector of the weight-preparation map, `None` when it is the identity.
    householder: Option<Vec<Complex64>>,
}

/// Ancilla width needed to index `count` terms.
pub fn ancilla_width(count: usize) -> usize {
    count.max(1).next_power_of_two().trailing_zeros() as usize
}

impl LcuOperator {
    /// Assembles an operator from explicit weights and unitaries.
    pub fn from_parts(n: usize, kappa: f64, betas: Vec<f64>, terms: Vec<PauliTerm>) -> Result<Self> {
        if betas.len() != terms.len() || betas.is_empty() {
            return Err(Error::Dimension {
                expected: terms.len(),
                found: betas.len(),
            });
        }
        if let Some(b) = betas.iter().find(|b| !b.is_finite() || **b < 0.0) {
            return Err(Error::Parameter(format!(
                "weight {b} is not a nonnegative finite number"
            )));
        }
        for t in &terms {
            if t.n() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: t.n(),
                });
            }
            let modulus = t.coeff.norm();
            if (modulus - 1.0).abs() > crate::state::UNIT_MODULUS_TOLERANCE {
                return Err(Error::NotUnitary { modulus });
            }
        }
        let s: f64 = betas.iter().sum();
        if s <= 0.0 {
            return Err(Error::Degenerate("weights sum to zero".into()));
        }
        let l = ancilla_width(betas.len());
        let mut w = vec![Complex64::new(0.0, 0.0); 1 << l];
        for (wi, b) in w.iter_mut().zip(&betas) {
            *wi = Complex64::new((b / s).sqrt(), 0.0);
        }
        // v = (e₀ - w)/‖e₀ - w‖, so that (I - 2vv†)e₀ = w.
        let mut v = w;
        for x in v.iter_mut() {
            *x = -*x;
        }
        v[0] += 1.0;
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        let householder = (norm > HOUSEHOLDER_EPS).then(|| v.into_iter().map(|x| x / norm).collect());
        Ok(Self {
            kappa,
            betas,
            terms,
            s,
            l,
            n,
            householder,
        })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    pub fn terms(&self) -> &[PauliTerm] {
        &self.terms
    }

    /// Normalization `s = Σ β_l`.
    pub fn s(&self) -> f64 {
        self.s
    }

    /// Ancilla width.
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `√(β_l / s)` padded with zeros to `2^l`.
    pub fn preparation_column(&self) -> Vec<Complex64> {
        let mut w = vec![Complex64::new(0.0, 0.0); 1 << self.l];
        for (wi, b) in w.iter_mut().zip(&self.betas) {
            *wi = Complex64::new((b / self.s).sqrt(), 0.0);
        }
        w
    }

    /// `Σ_l β_l·dense(V_l)`, for `n ≤ 6`.
    pub fn reconstruct(&self) -> Result<DenseMatrix> {
        let mut sum = PauliSum::zero(self.n);
        for (b, t) in self.betas.iter().zip(&self.terms) {
            sum.push(PauliTerm::new(t.coeff * *b, t.string))?;
        }
        to_dense(&sum)
    }

    /// Register layout with this operator's ancilla and system widths.
    pub fn layout(&self, phase: usize, doubling: usize) -> Result<RegisterLayout> {
        RegisterLayout::new(phase, doubling, self.l, self.n)
    }

    fn check_layout(&self, layout: &RegisterLayout) -> Result<()> {
        if layout.ancilla != self.l || layout.system != self.n {
            return Err(Error::Layout(format!(
                "operator needs ancilla {} and system {}, layout has {} and {}",
                self.l, self.n, layout.ancilla, layout.system
            )));
        }
        Ok(())
    }
}

/// Induced 1-norm of `h` times `factor`, or the coefficient 1-norm bound past the
/// dense cap. The flag reports whether the bound was substituted.
pub fn choose_kappa(h: &PauliSum, factor: f64) -> Result<(f64, bool)> {
    if factor.is_nan() || factor < 1.0 {
        return Err(Error::Parameter(format!("kappa factor {factor} must be at least 1")));
    }
    let canonical = h.clone().canonical();
    if canonical.is_empty() {
        return Err(Error::Degenerate("empty Hamiltonian".into()));
    }
    if canonical.n() <= MAX_DENSE_QUBITS {
        Ok((factor * to_dense(&canonical)?.induced_one_norm(), false))
    } else {
        Ok((factor * canonical.coefficient_one_norm(), true))
    }
}

/// `H̃ = I - iH/κ` with `β₀ = 1, V₀ = I` and `β_l = |α_l|/κ, V_l = -i·(α_l/|α_l|)·P_l`.
pub fn build_htilde(h: &PauliSum, kappa: f64) -> Result<LcuOperator> {
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(Error::Parameter(format!("kappa {kappa} must be positive")));
    }
    if let Ok(spectrum) = exact_spectrum(h) {
        let max = spectrum.eigenvalues.iter().fold(0.0f64, |m, e| m.max(e.abs()));
        if kappa <= max {
            warn!("kappa {kappa} does not exceed the spectral radius {max}");
        }
    }
    let n = h.n();
    let mut betas = vec![1.0];
    let mut terms = vec![PauliTerm::real(1.0, PauliString::identity(n))];
    for t in h.terms() {
        let a = t.coeff.norm();
        if a < crate::pauli::DROP_TOLERANCE {
            continue;
        }
        betas.push(a / kappa);
        terms.push(PauliTerm::new(Complex64::new(0.0, -1.0) * (t.coeff / a), t.string));
    }
    LcuOperator::from_parts(n, kappa, betas, terms)
}

/// Weight-preparation map `W` on the ancilla register. `W` is a Householder
/// reflection, hence its own inverse; `inverse` is accepted for symmetry of call sites.
pub fn apply_b(state: &mut StateVector, lcu: &LcuOperator, _inverse: bool, controls: &Controls) -> Result<()> {
    lcu.check_layout(state.layout())?;
    match &lcu.householder {
        Some(v) => {
            let offset = state.layout().ancilla_offset();
            state.apply_householder(offset, lcu.l, v, controls)
        }
        None => Ok(()),
    }
}

/// `select(V)`: applies `V_l` to the system when the ancilla holds `l`.
pub fn apply_select_v(state: &mut StateVector, lcu: &LcuOperator, controls: &Controls) -> Result<()> {
    lcu.check_layout(state.layout())?;
    let offset = state.layout().ancilla_offset();
    for (idx, term) in lcu.terms.iter().enumerate() {
        if term.string.is_identity() && term.coeff == Complex64::new(1.0, 0.0) {
            continue;
        }
        let c = controls
            .and(Controls::none().register_value(offset, lcu.l, idx))
            .ok_or_else(|| Error::Layout("outer control overlaps the ancilla register".into()))?;
        state.apply_pauli_term(term, &c)?;
    }
    Ok(())
}

/// `U = B†·select(V)·B`.
pub fn apply_u1(state: &mut StateVector, lcu: &LcuOperator, controls: &Controls) -> Result<()> {
    apply_b(state, lcu, false, controls)?;
    apply_select_v(state, lcu, controls)?;
    apply_b(state, lcu, true, controls)
}

/// `U† = B†·select(V)†·B`.
pub fn apply_u1_adjoint(state: &mut StateVector, lcu: &LcuOperator, controls: &Controls) -> Result<()> {
    apply_b(state, lcu, false, controls)?;
    let offset = state.layout().ancilla_offset();
    for (idx, term) in lcu.terms.iter().enumerate() {
        if term.string.is_identity() && term.coeff == Complex64::new(1.0, 0.0) {
            continue;
        }
        let c = controls
            .and(Controls::none().register_value(offset, lcu.l, idx))
            .ok_or_else(|| Error::Layout("outer control overlaps the ancilla register".into()))?;
        // Pauli strings are Hermitian, so the adjoint only conjugates the phase.
        state.apply_pauli_term(&PauliTerm::new(term.coeff.conj(), term.string), &c)?;
    }
    apply_b(state, lcu, true, controls)
}

/// `⟨0|_flags · op · |0⟩_flags` over the system register, where the flag qubits are
/// the ancilla and doubling registers of `layout` (which must have no phase qubit).
pub fn extract_block<F>(layout: RegisterLayout, mut op: F) -> Result<DenseMatrix>
where
    F: FnMut(&mut StateVector) -> Result<()>,
{
    if layout.phase != 0 {
        return Err(Error::Layout("block extraction expects no phase qubit".into()));
    }
    if layout.dim() > MAX_ORACLE_DIM {
        return Err(Error::SizeCap {
            what: "operator dimension",
            requested: layout.dim(),
            limit: MAX_ORACLE_DIM,
        });
    }
    let sys = layout.system_dim();
    let mut columns = Vec::with_capacity(sys);
    for j in 0..sys {
        let mut s = StateVector::basis(layout, j);
        op(&mut s)?;
        columns.push(s.amplitudes()[..sys].to_vec());
    }
    Ok(DenseMatrix::from_columns(&columns))
}

/// Dense matrix of `U` over ancilla and system, for oracle checks.
pub fn u1_matrix(lcu: &LcuOperator) -> Result<DenseMatrix> {
    operator_matrix(lcu.layout(0, 0)?, |s| apply_u1(s, lcu, &Controls::none()))
}

/// Which powering scheme a resource estimate refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerScheme {
    Successive,
    Permutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceReport {
    pub qubits: usize,
    /// `2^a·n·L`, a bound up to constant factors.
    pub op_count_bound: u128,
}

/// Qubit count and operation bound for `n` system qubits, `terms` Hamiltonian terms
/// and `bits` phase bits.
pub fn estimate_resources(n: usize, terms: usize, bits: usize, scheme: PowerScheme) -> Result<ResourceReport> {
    if n == 0 || terms == 0 || bits == 0 {
        return Err(Error::Parameter("resource inputs must be at least 1".into()));
    }
    if bits >= 100 {
        return Err(Error::Parameter(format!("{bits} phase bits is out of range")));
    }
    let l = ancilla_width(terms + 1);
    let qubits = match scheme {
        PowerScheme::Successive => n + 1 + l,
        PowerScheme::Permutation => bits + n + l,
    };
    Ok(ResourceReport {
        qubits,
        op_count_bound: (1u128 << bits) * n as u128 * terms as u128,
    })
}
