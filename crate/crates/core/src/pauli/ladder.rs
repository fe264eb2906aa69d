use num_complex::Complex64;

use super::{Pauli, PauliString, PauliSum, PauliTerm};
use crate::error::{Error, Result};

/// Fermionic creation (`raising`) or annihilation operator on a spin orbital.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LadderOperator {
    pub mode: usize,
    pub raising: bool,
}

impl LadderOperator {
    pub fn create(mode: usize) -> Self {
        Self { mode, raising: true }
    }

    pub fn annihilate(mode: usize) -> Self {
        Self { mode, raising: false }
    }
}

/// Jordan–Wigner image of a ladder operator on `n` qubits.
///
/// `a_j -> σ_-^j ∏_{k<j} Z_k` with `σ_∓ = (X ± iY)/2`, so `σ_- = |0⟩⟨1|` empties
/// the orbital and `σ_+ = |1⟩⟨0|` fills it (occupied = `|1⟩`).
pub fn jordan_wigner(op: LadderOperator, n: usize) -> Result<PauliSum> {
    if op.mode >= n {
        return Err(Error::Index { mode: op.mode, n });
    }
    let mut x_string = PauliString::identity(n);
    for k in 0..op.mode {
        x_string.set(k, Pauli::Z);
    }
    let mut y_string = x_string;
    x_string.set(op.mode, Pauli::X);
    y_string.set(op.mode, Pauli::Y);
    let y_coeff = if op.raising { -0.5 } else { 0.5 };
    PauliSum::from_terms(
        n,
        vec![
            PauliTerm::real(0.5, x_string),
            PauliTerm::new(Complex64::new(0.0, y_coeff), y_string),
        ],
    )
}

/// Ordered product `ops[0] · ops[1] · …` of ladder operators as a canonical Pauli sum.
///
/// An empty list yields the identity.
pub fn ladder_product(ops: &[LadderOperator], n: usize) -> Result<PauliSum> {
    let mut acc = PauliSum::identity(n);
    for &op in ops {
        acc = acc.mul(&jordan_wigner(op, n)?)?;
    }
    Ok(acc.canonical())
}
