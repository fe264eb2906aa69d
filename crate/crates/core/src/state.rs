//! Matrix-free statevector storage and the register-level primitives.
//!
//! Amplitudes live in one flat array indexed by the packed register bits. From the
//! least significant end: `system` (n bits), `ancilla` (l bits), `doubling` (d bits),
//! then the optional `phase` qubit as the most significant bit. Every primitive is a
//! single pass over the indices it touches; none materializes an operator.

use std::io::{Read, Write};

use num_complex::Complex64;

use crate::dense::{DenseMatrix, MAX_ORACLE_DIM};
use crate::error::{Error, Result};
use crate::pauli::{i_pow, PauliTerm};

/// Tolerance on `‖ψ‖₂ = 1` when preparing states.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Tolerance on `|coeff| = 1` for Pauli terms applied as gates.
pub const UNIT_MODULUS_TOLERANCE: f64 = 1e-12;

/// Hard ceiling on statevector width regardless of configured caps.
pub const MAX_STATE_QUBITS: usize = 34;

const DUMP_MAGIC: &[u8; 7] = b"LCUPEA\0";
const DUMP_HEADER_LEN: usize = 16;

/// Widths of the four registers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegisterLayout {
    pub phase: usize,
    pub doubling: usize,
    pub ancilla: usize,
    pub system: usize,
}

impl RegisterLayout {
    pub fn new(phase: usize, doubling: usize, ancilla: usize, system: usize) -> Result<Self> {
        if phase > 1 {
            return Err(Error::Layout(format!(
                "phase register has {phase} qubits, at most 1 allowed"
            )));
        }
        let layout = Self {
            phase,
            doubling,
            ancilla,
            system,
        };
        if layout.total_qubits() > MAX_STATE_QUBITS {
            return Err(Error::SizeCap {
                what: "statevector qubits",
                requested: layout.total_qubits(),
                limit: MAX_STATE_QUBITS,
            });
        }
        Ok(layout)
    }

    pub fn total_qubits(&self) -> usize {
        self.phase + self.doubling + self.ancilla + self.system
    }

    pub fn dim(&self) -> usize {
        1 << self.total_qubits()
    }

    pub fn system_dim(&self) -> usize {
        1 << self.system
    }

    pub fn ancilla_offset(&self) -> usize {
        self.system
    }

    pub fn doubling_offset(&self) -> usize {
        self.system + self.ancilla
    }

    pub fn ancilla_qubit(&self, i: usize) -> usize {
        assert!(i < self.ancilla);
        self.ancilla_offset() + i
    }

    pub fn doubling_qubit(&self, i: usize) -> usize {
        assert!(i < self.doubling);
        self.doubling_offset() + i
    }

    pub fn phase_qubit(&self) -> Option<usize> {
        (self.phase == 1).then(|| self.system + self.ancilla + self.doubling)
    }

    pub fn system_mask(&self) -> usize {
        mask(0, self.system)
    }

    pub fn ancilla_mask(&self) -> usize {
        mask(self.ancilla_offset(), self.ancilla)
    }

    pub fn doubling_mask(&self) -> usize {
        mask(self.doubling_offset(), self.doubling)
    }

    /// Mask of the first `count` doubling qubits.
    pub fn doubling_prefix_mask(&self, count: usize) -> usize {
        assert!(count <= self.doubling);
        mask(self.doubling_offset(), count)
    }

    /// Bits that must be zero for an amplitude to survive projection.
    pub fn flag_mask(&self) -> usize {
        self.ancilla_mask() | self.doubling_mask()
    }
}

fn mask(offset: usize, width: usize) -> usize {
    ((1usize << width) - 1) << offset
}

/// Conjunction of `(qubit, wanted bit)` conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Controls {
    mask: usize,
    value: usize,
}

impl Controls {
    pub fn none() -> Self {
        Self::default()
    }

    /// Condition on `qubit` being `|1⟩`.
    pub fn on(qubit: usize) -> Self {
        Self::none().with(qubit, true)
    }

    pub fn with(mut self, qubit: usize, bit: bool) -> Self {
        let b = 1usize << qubit;
        assert!(
            self.mask & b == 0 || (self.value & b != 0) == bit,
            "conflicting control on qubit {qubit}"
        );
        self.mask |= b;
        if bit {
            self.value |= b;
        } else {
            self.value &= !b;
        }
        self
    }

    /// Condition on a register (bits `offset..offset+width`) holding `value`.
    pub fn register_value(mut self, offset: usize, width: usize, value: usize) -> Self {
        for i in 0..width {
            self = self.with(offset + i, value >> i & 1 == 1);
        }
        self
    }

    /// Merges two condition sets; `None` if they contradict each other.
    pub fn and(self, other: Controls) -> Option<Controls> {
        let shared = self.mask & other.mask;
        if (self.value ^ other.value) & shared != 0 {
            return None;
        }
        Some(Controls {
            mask: self.mask | other.mask,
            value: self.value | other.value,
        })
    }

    pub fn mask(&self) -> usize {
        self.mask
    }

    pub fn value(&self) -> usize {
        self.value
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn matches(&self, index: usize) -> bool {
        index & self.mask == self.value
    }
}

/// Calls `f` on every index below `dim` whose `fixed_mask` bits equal `fixed_value`,
/// in increasing order.
#[inline]
pub(crate) fn for_each_index(dim: usize, fixed_mask: usize, fixed_value: usize, mut f: impl FnMut(usize)) {
    let free = (dim - 1) & !fixed_mask;
    let mut t = 0usize;
    loop {
        f(t | fixed_value);
        if t == free {
            break;
        }
        t = t.wrapping_sub(free) & free;
    }
}

/// Complex amplitudes over a [`RegisterLayout`].
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    layout: RegisterLayout,
    amps: Vec<Complex64>,
    normalized: bool,
}

impl StateVector {
    /// `|0⟩_phase |0⟩_doubling |0⟩_ancilla |ψ⟩_system`.
    pub fn prepare(layout: RegisterLayout, system_state: &[Complex64]) -> Result<Self> {
        if system_state.len() != layout.system_dim() {
            return Err(Error::Dimension {
                expected: layout.system_dim(),
                found: system_state.len(),
            });
        }
        let norm = system_state.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Normalization { norm });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); layout.dim()];
        amps[..system_state.len()].copy_from_slice(system_state);
        Ok(Self {
            layout,
            amps,
            normalized: true,
        })
    }

    /// Basis state `|index⟩` of the full register.
    pub fn basis(layout: RegisterLayout, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); layout.dim()];
        amps[index] = Complex64::new(1.0, 0.0);
        Self {
            layout,
            amps,
            normalized: true,
        }
    }

    /// Wraps raw amplitudes; the normalization flag reflects the actual norm.
    pub fn from_amplitudes(layout: RegisterLayout, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != layout.dim() {
            return Err(Error::Dimension {
                expected: layout.dim(),
                found: amps.len(),
            });
        }
        let normalized = (norm_of(&amps) - 1.0).abs() <= NORM_TOLERANCE;
        Ok(Self {
            layout,
            amps,
            normalized,
        })
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amps)
    }

    /// `false` once a projection has discarded amplitude.
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    fn check_controls(&self, controls: &Controls, target_mask: usize) -> Result<()> {
        if controls.mask() >= self.layout.dim() {
            return Err(Error::Layout("control qubit outside the register".into()));
        }
        if controls.mask() & target_mask != 0 {
            return Err(Error::Layout("control qubit overlaps the target register".into()));
        }
        Ok(())
    }

    /// Applies a unit-modulus Pauli term to the system register on every index
    /// satisfying `controls`.
    pub fn apply_pauli_term(&mut self, term: &PauliTerm, controls: &Controls) -> Result<()> {
        let modulus = term.coeff.norm();
        if (modulus - 1.0).abs() > UNIT_MODULUS_TOLERANCE {
            return Err(Error::NotUnitary { modulus });
        }
        if term.n() != self.layout.system {
            return Err(Error::Dimension {
                expected: self.layout.system,
                found: term.n(),
            });
        }
        self.check_controls(controls, self.layout.system_mask())?;
        let x = term.string.x_mask() as usize;
        let z = term.string.z_mask() as usize;
        let factor = term.coeff * i_pow(term.string.y_count() as i64);
        let sign = |b: usize| if (b & z).count_ones() & 1 == 1 { -factor } else { factor };
        let dim = self.layout.dim();
        let amps = &mut self.amps;
        if x == 0 {
            for_each_index(dim, controls.mask(), controls.value(), |i| {
                amps[i] *= sign(i);
            });
        } else {
            let top = 1usize << (usize::BITS - 1 - x.leading_zeros());
            for_each_index(dim, controls.mask() | top, controls.value(), |i| {
                let j = i ^ x;
                let (ai, aj) = (amps[i], amps[j]);
                amps[j] = sign(i) * ai;
                amps[i] = sign(j) * aj;
            });
        }
        Ok(())
    }

    /// `2|0⟩⟨0| - I` on the qubits in `register_mask`: keeps amplitudes whose selected
    /// bits are all zero and negates the rest.
    pub fn reflect_about_zero(&mut self, register_mask: usize, controls: &Controls) -> Result<()> {
        if register_mask == 0 {
            return Err(Error::Layout("empty register selection".into()));
        }
        if register_mask >= self.layout.dim() {
            return Err(Error::Layout("register selection outside the state".into()));
        }
        self.check_controls(controls, register_mask)?;
        let amps = &mut self.amps;
        for_each_index(self.layout.dim(), controls.mask(), controls.value(), |i| {
            if i & register_mask != 0 {
                amps[i] = -amps[i];
            }
        });
        Ok(())
    }

    /// Flips `flip_qubit` on every index whose `watched_mask` bits are not all zero.
    pub fn flip_if_nonzero(&mut self, flip_qubit: usize, watched_mask: usize, controls: &Controls) -> Result<()> {
        let f = 1usize << flip_qubit;
        if f & watched_mask != 0 {
            return Err(Error::Configuration(format!(
                "flip qubit {flip_qubit} is part of the watched register"
            )));
        }
        if f >= self.layout.dim() || watched_mask >= self.layout.dim() {
            return Err(Error::Layout("flip or watched qubit outside the state".into()));
        }
        self.check_controls(controls, f | watched_mask)?;
        let amps = &mut self.amps;
        for_each_index(self.layout.dim(), controls.mask() | f, controls.value(), |i| {
            if i & watched_mask != 0 {
                amps.swap(i, i | f);
            }
        });
        Ok(())
    }

    /// Applies `I - 2|v⟩⟨v|` to the `width`-qubit register starting at bit `offset`.
    pub fn apply_householder(
        &mut self,
        offset: usize,
        width: usize,
        v: &[Complex64],
        controls: &Controls,
    ) -> Result<()> {
        if v.len() != 1 << width {
            return Err(Error::Dimension {
                expected: 1 << width,
                found: v.len(),
            });
        }
        let reg = mask(offset, width);
        if reg >= self.layout.dim() && width > 0 {
            return Err(Error::Layout("register outside the state".into()));
        }
        self.check_controls(controls, reg)?;
        let amps = &mut self.amps;
        for_each_index(self.layout.dim(), controls.mask() | reg, controls.value(), |base| {
            let mut dot = Complex64::new(0.0, 0.0);
            for (j, vj) in v.iter().enumerate() {
                dot += vj.conj() * amps[base | j << offset];
            }
            if dot.re == 0.0 && dot.im == 0.0 {
                return;
            }
            let dot2 = dot * 2.0;
            for (j, vj) in v.iter().enumerate() {
                amps[base | j << offset] -= vj * dot2;
            }
        });
        Ok(())
    }

    /// Arbitrary 2×2 gate `[[m00, m01], [m10, m11]]` on one qubit.
    pub fn apply_single_qubit(&mut self, qubit: usize, m: [[Complex64; 2]; 2], controls: &Controls) -> Result<()> {
        let b = 1usize << qubit;
        if b >= self.layout.dim() {
            return Err(Error::Layout(format!("qubit {qubit} outside the state")));
        }
        self.check_controls(controls, b)?;
        let amps = &mut self.amps;
        for_each_index(self.layout.dim(), controls.mask() | b, controls.value(), |i| {
            let (a0, a1) = (amps[i], amps[i | b]);
            amps[i] = m[0][0] * a0 + m[0][1] * a1;
            amps[i | b] = m[1][0] * a0 + m[1][1] * a1;
        });
        Ok(())
    }

    pub fn apply_hadamard(&mut self, qubit: usize) -> Result<()> {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        self.apply_single_qubit(qubit, [[h, h], [h, -h]], &Controls::none())
    }

    /// `diag(1, e^{i·angle})` on one qubit.
    pub fn apply_phase_rotation(&mut self, qubit: usize, angle: f64) -> Result<()> {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        self.apply_single_qubit(
            qubit,
            [[one, zero], [zero, Complex64::from_polar(1.0, angle)]],
            &Controls::none(),
        )
    }

    /// Zeroes every amplitude with a nonzero ancilla or doubling bit and returns the
    /// 2-norm of what survives. The state is left unnormalized.
    pub fn project_ancilla_zero(&mut self) -> f64 {
        let flags = self.layout.flag_mask();
        let mut kept = 0.0;
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & flags != 0 {
                *a = Complex64::new(0.0, 0.0);
            } else {
                kept += a.norm_sqr();
            }
        }
        self.normalized = false;
        kept.sqrt()
    }

    /// Squared weight on phase-qubit values 0 and 1, without renormalization.
    pub fn phase_qubit_statistics(&self) -> Result<(f64, f64)> {
        let q = self
            .layout
            .phase_qubit()
            .ok_or_else(|| Error::Layout("layout has no phase qubit".into()))?;
        let half = 1usize << q;
        let p0 = self.amps[..half].iter().map(|a| a.norm_sqr()).sum();
        let p1 = self.amps[half..].iter().map(|a| a.norm_sqr()).sum();
        Ok((p0, p1))
    }

    /// Binary dump: 16-byte header (`LCUPEA\0`, one pad byte, `u16` qubit count,
    /// six zero bytes), then little-endian `(f64 re, f64 im)` pairs in index order.
    pub fn write_dump<W: Write>(&self, w: W) -> std::io::Result<()> {
        write_amplitudes(w, &self.amps)
    }
}

fn norm_of(amps: &[Complex64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Writes `amps` (length `2^m`) in the state dump format.
pub fn write_amplitudes<W: Write>(mut w: W, amps: &[Complex64]) -> std::io::Result<()> {
    assert!(amps.len().is_power_of_two());
    let m = amps.len().trailing_zeros() as u16;
    let mut header = [0u8; DUMP_HEADER_LEN];
    header[..7].copy_from_slice(DUMP_MAGIC);
    header[8..10].copy_from_slice(&m.to_le_bytes());
    w.write_all(&header)?;
    let mut buf = Vec::with_capacity(amps.len() * 16);
    for a in amps {
        buf.extend_from_slice(&a.re.to_le_bytes());
        buf.extend_from_slice(&a.im.to_le_bytes());
    }
    w.write_all(&buf)
}

/// Reads a state dump; returns the qubit count and the amplitudes.
pub fn read_amplitudes<R: Read>(mut r: R) -> std::io::Result<(usize, Vec<Complex64>)> {
    use std::io::{Error as IoError, ErrorKind};
    let mut header = [0u8; DUMP_HEADER_LEN];
    r.read_exact(&mut header)?;
    if &header[..7] != DUMP_MAGIC || header[7] != 0 || header[10..].iter().any(|&b| b != 0) {
        return Err(IoError::new(ErrorKind::InvalidData, "not a state dump"));
    }
    let m = u16::from_le_bytes([header[8], header[9]]) as usize;
    if m > MAX_STATE_QUBITS {
        return Err(IoError::new(ErrorKind::InvalidData, "state dump too large"));
    }
    let mut body = Vec::new();
    r.read_to_end(&mut body)?;
    if body.len() != (1usize << m) * 16 {
        return Err(IoError::new(ErrorKind::InvalidData, "state dump length mismatch"));
    }
    let amps = body
        .chunks_exact(16)
        .map(|c| {
            let re = f64::from_le_bytes(c[..8].try_into().unwrap());
            let im = f64::from_le_bytes(c[8..].try_into().unwrap());
            Complex64::new(re, im)
        })
        .collect();
    Ok((m, amps))
}

/// Dense matrix of an operator on the full register, obtained by applying it to
/// every basis state. Limited to [`MAX_ORACLE_DIM`].
pub fn operator_matrix<F>(layout: RegisterLayout, mut op: F) -> Result<DenseMatrix>
where
    F: FnMut(&mut StateVector) -> Result<()>,
{
    let dim = layout.dim();
    if dim > MAX_ORACLE_DIM {
        return Err(Error::SizeCap {
            what: "operator dimension",
            requested: dim,
            limit: MAX_ORACLE_DIM,
        });
    }
    let mut columns = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut s = StateVector::basis(layout, j);
        op(&mut s)?;
        columns.push(s.amps);
    }
    Ok(DenseMatrix::from_columns(&columns))
}
