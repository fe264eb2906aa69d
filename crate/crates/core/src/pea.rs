//! Iterative phase estimation over powers of the block-encoded `H̃`.
//!
//! Powers `U^(2^k)` are run from `k = a-1` down to `0`, so the least significant
//! phase bit is read first and earlier bits feed back into a phase-qubit rotation.

use std::f64::consts::PI;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use log::{debug, info};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::amplify::{tune_m, AmplifiedOperator, DEFAULT_M_MAX};
use crate::dense::{exact_spectrum, DenseMatrix, Spectrum, MAX_DENSE_QUBITS};
use crate::error::{Error, Result};
use crate::lcu::{build_htilde, LcuOperator};
use crate::pauli::PauliSum;
use crate::state::{for_each_index, read_amplitudes, Controls, RegisterLayout, StateVector, MAX_STATE_QUBITS};

/// Default statevector width limit.
pub const DEFAULT_MEM_CAP_QUBITS: usize = 26;

/// `|p1 - p0|` at or below this counts as a tie.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Largest phase register whose value is exact in an `f64`.
pub const MAX_BITS: usize = 52;

/// Composite dimension up to which successive powers are taken by dense squaring.
const MAX_CACHE_QUBITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Successive,
    Permutation,
    ExactOracle,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Successive => "successive",
            Strategy::Permutation => "permutation",
            Strategy::ExactOracle => "exact_oracle",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "successive" => Ok(Strategy::Successive),
            "permutation" => Ok(Strategy::Permutation),
            "exact_oracle" => Ok(Strategy::ExactOracle),
            other => Err(Error::Configuration(format!("unknown strategy {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmplifyM {
    Fixed(usize),
    /// Scan `0..=16` with the eigenvector as probe.
    Auto,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EigenvectorSource {
    ExactGround,
    BasisState(usize),
    /// A state dump or a text file with one `re [im]` amplitude per line.
    File(PathBuf),
    Amplitudes(Vec<Complex64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Readout {
    /// Compare the exact unnormalized probabilities.
    Deterministic,
    /// Majority vote over seeded samples of the post-selected phase qubit.
    Shots { shots: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PeaConfig {
    pub hamiltonian: PauliSum,
    pub bits: usize,
    pub strategy: Strategy,
    pub kappa: f64,
    pub amplify_m: AmplifyM,
    pub eigenvector: EigenvectorSource,
    pub readout: Readout,
    pub mem_cap_qubits: usize,
}

impl PeaConfig {
    pub fn new(hamiltonian: PauliSum, bits: usize, strategy: Strategy, kappa: f64) -> Self {
        Self {
            hamiltonian,
            bits,
            strategy,
            kappa,
            amplify_m: AmplifyM::Fixed(0),
            eigenvector: EigenvectorSource::ExactGround,
            readout: Readout::Deterministic,
            mem_cap_qubits: DEFAULT_MEM_CAP_QUBITS,
        }
    }

    /// Register layout the strategy needs.
    pub fn layout(&self) -> Result<RegisterLayout> {
        let lcu_width = crate::lcu::ancilla_width(self.hamiltonian.len() + 1);
        let n = self.hamiltonian.n();
        let (doubling, ancilla) = match self.strategy {
            Strategy::Successive => (0, lcu_width),
            Strategy::Permutation => (self.bits - 1, lcu_width),
            Strategy::ExactOracle => (0, 0),
        };
        let total = 1 + doubling + ancilla + n;
        let cap = self.mem_cap_qubits.min(MAX_STATE_QUBITS);
        if total > cap {
            return Err(Error::MemoryCap { requested: total, cap });
        }
        RegisterLayout::new(1, doubling, ancilla, n)
    }

    pub fn validate(&self) -> Result<()> {
        if self.bits == 0 || self.bits > MAX_BITS {
            return Err(Error::Configuration(format!(
                "bits must be in 1..={MAX_BITS}, got {}",
                self.bits
            )));
        }
        if !self.kappa.is_finite() || self.kappa <= 0.0 {
            return Err(Error::Configuration(format!(
                "kappa must be positive, got {}",
                self.kappa
            )));
        }
        if self.hamiltonian.is_empty() {
            return Err(Error::Configuration("Hamiltonian has no terms".into()));
        }
        if let Readout::Shots { shots: 0, .. } = self.readout {
            return Err(Error::Configuration("shot count must be positive".into()));
        }
        if self.strategy == Strategy::ExactOracle && self.hamiltonian.n() > MAX_DENSE_QUBITS {
            return Err(Error::SizeCap {
                what: "exact oracle system qubits",
                requested: self.hamiltonian.n(),
                limit: MAX_DENSE_QUBITS,
            });
        }
        self.layout().map(|_| ())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeaIterationRecord {
    /// 1-based position in measurement order.
    pub iter: usize,
    /// The iteration applies `U^(2^k)`.
    pub k: usize,
    pub bit: u8,
    pub p0: f64,
    pub p1: f64,
    pub feedback_angle: f64,
    /// The probabilities tied and the bit defaulted to 0.
    pub degenerate: bool,
}

impl PeaIterationRecord {
    pub fn power(&self) -> u64 {
        1u64 << self.k
    }

    pub fn gap(&self) -> f64 {
        (self.p0 - self.p1).abs()
    }

    pub fn total(&self) -> f64 {
        self.p0 + self.p1
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PeaResult {
    /// In measurement order, largest power first.
    pub records: Vec<PeaIterationRecord>,
    /// Least significant bit first.
    pub bits: Vec<u8>,
    pub phase: f64,
    pub energy: f64,
    /// Eigenvalue of the eigenvector closest to the input state, when the dense oracle applies.
    pub exact_energy: Option<f64>,
    pub abs_error: Option<f64>,
    pub kappa: f64,
    pub amplify_m: usize,
    pub strategy: Strategy,
}

impl PeaResult {
    /// Bits as a `0`/`1` string, least significant first.
    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect()
    }

    /// Record of the iteration that applied `U^(2^k)`.
    pub fn record_for_power(&self, k: usize) -> Option<&PeaIterationRecord> {
        self.records.iter().find(|r| r.k == k)
    }
}

/// `-2π·(0.0 b₁ b₂ …)₂` for prior bits listed most recent first.
pub fn feedback_angle(prior_bits: &[u8]) -> f64 {
    let frac: f64 = prior_bits
        .iter()
        .enumerate()
        .map(|(i, &b)| f64::from(b) * 0.5f64.powi(i as i32 + 2))
        .sum();
    -2.0 * PI * frac
}

/// `Σ_i bits[i]·2^-(a-i)` for `a` bits listed least significant first.
pub fn phase_from_bits(bits: &[u8]) -> f64 {
    let a = bits.len() as i32;
    bits.iter()
        .enumerate()
        .map(|(i, &b)| f64::from(b) * 2f64.powi(i as i32 - a))
        .sum()
}

/// The `a` binary digits of `phase` (rounded to the nearest multiple of `2^-a`),
/// least significant first.
pub fn bits_of(phase: f64, a: usize) -> Vec<u8> {
    let scaled = (phase * 2f64.powi(a as i32)).round() as u64 % (1u64 << a);
    (0..a).map(|i| (scaled >> i & 1) as u8).collect()
}

/// `κ·arcsin(Im e^{-2πi·phase})`.
pub fn recover_energy(phase: f64, kappa: f64) -> f64 {
    kappa * (-(2.0 * PI * phase).sin()).asin()
}

/// Applies `Ũ` to the state `2^k` times in sequence, each application controlled.
pub fn controlled_power_successive(
    state: &mut StateVector,
    amp: &AmplifiedOperator,
    k: usize,
    controls: &Controls,
) -> Result<()> {
    for _ in 0..(1u64 << k) {
        amp.apply(state, controls)?;
    }
    Ok(())
}

/// Dense powers `Ũ^(2^k)` over ancilla and system, built by repeated squaring.
/// Equivalent to [`controlled_power_successive`] at a cost independent of `2^k`.
#[derive(Debug, Clone)]
pub struct SuccessivePowerCache {
    powers: Vec<DenseMatrix>,
    l: usize,
    n: usize,
}

impl SuccessivePowerCache {
    pub fn new(amp: &AmplifiedOperator) -> Result<Self> {
        let layout = amp.base.layout(0, 0)?;
        if layout.total_qubits() > MAX_CACHE_QUBITS {
            return Err(Error::SizeCap {
                what: "cached composite qubits",
                requested: layout.total_qubits(),
                limit: MAX_CACHE_QUBITS,
            });
        }
        let composite = crate::state::operator_matrix(layout, |s| amp.apply(s, &Controls::none()))?;
        Ok(Self {
            powers: vec![composite],
            l: amp.base.l(),
            n: amp.base.n(),
        })
    }

    /// `Ũ^(2^k)`.
    pub fn power(&mut self, k: usize) -> &DenseMatrix {
        while self.powers.len() <= k {
            let last = self.powers.last().expect("cache starts non-empty");
            let next = last * last;
            self.powers.push(next);
        }
        &self.powers[k]
    }

    pub fn apply(&mut self, state: &mut StateVector, k: usize, controls: &Controls) -> Result<()> {
        let layout = *state.layout();
        if layout.ancilla != self.l || layout.system != self.n {
            return Err(Error::Layout("cached composite does not match the state layout".into()));
        }
        let block_bits = layout.ancilla_mask() | layout.system_mask();
        if controls.mask() & block_bits != 0 {
            return Err(Error::Layout("control qubit overlaps the target register".into()));
        }
        let m = self.power(k).as_nalgebra().clone();
        let dim = m.nrows();
        let amps = state.amplitudes_mut();
        let mut buf = nalgebra::DVector::<Complex64>::zeros(dim);
        for_each_index(layout.dim(), controls.mask() | block_bits, controls.value(), |base| {
            for j in 0..dim {
                buf[j] = amps[base | j];
            }
            let out = &m * &buf;
            for j in 0..dim {
                amps[base | j] = out[j];
            }
        });
        Ok(())
    }
}

/// Level-`k` doubled operator: level `j` is level `j-1`, a flip of doubling qubit
/// `j-1` when the ancilla or any lower doubling qubit is set, then level `j-1` again.
/// Its flag-zero block is exactly the `2^k`-th power of the level-0 block.
pub fn controlled_power_permutation(
    state: &mut StateVector,
    amp: &AmplifiedOperator,
    k: usize,
    controls: &Controls,
) -> Result<()> {
    let layout = *state.layout();
    if layout.doubling < k {
        return Err(Error::Layout(format!(
            "level {k} needs {k} doubling qubits, layout has {}",
            layout.doubling
        )));
    }
    doubling_level(state, amp, k, controls, &layout)
}

fn doubling_level(
    state: &mut StateVector,
    amp: &AmplifiedOperator,
    j: usize,
    controls: &Controls,
    layout: &RegisterLayout,
) -> Result<()> {
    if j == 0 {
        return amp.apply(state, controls);
    }
    doubling_level(state, amp, j - 1, controls, layout)?;
    let watched = layout.ancilla_mask() | layout.doubling_prefix_mask(j - 1);
    state.flip_if_nonzero(layout.doubling_qubit(j - 1), watched, controls)?;
    doubling_level(state, amp, j - 1, controls, layout)
}

/// `((I - iH/κ)/s)^(2^k)` from the eigendecomposition of `H`, acting on the system
/// register alone. The power is a contraction; no ancilla is involved.
#[derive(Debug, Clone)]
pub struct ExactOracle {
    spectrum: Spectrum,
    kappa: f64,
    s: f64,
}

impl ExactOracle {
    pub fn new(h: &PauliSum, kappa: f64) -> Result<Self> {
        let s = build_htilde(h, kappa)?.s();
        Ok(Self {
            spectrum: exact_spectrum(h)?,
            kappa,
            s,
        })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// Dense `((I - iH/κ)/s)^(2^k)`.
    pub fn power(&self, k: usize) -> DenseMatrix {
        let v = &self.spectrum.eigenvectors;
        let scale = 2f64.powi(k as i32);
        let diag: Vec<Complex64> = self
            .spectrum
            .eigenvalues
            .iter()
            .map(|&lambda| {
                let z = Complex64::new(1.0, -lambda / self.kappa) / self.s;
                // Reduce the angle before scaling up to keep it accurate for large k.
                let angle = (z.arg() * scale).rem_euclid(2.0 * PI);
                Complex64::from_polar(z.norm().powf(scale), angle)
            })
            .collect();
        &(v * &DenseMatrix::from_diagonal(&diag)) * &v.adjoint()
    }

    pub fn apply(&self, state: &mut StateVector, k: usize, controls: &Controls) -> Result<()> {
        let layout = *state.layout();
        if layout.system != self.spectrum.eigenvalues.len().trailing_zeros() as usize {
            return Err(Error::Layout("oracle does not match the system register".into()));
        }
        let sys = layout.system_mask();
        if controls.mask() & sys != 0 {
            return Err(Error::Layout("control qubit overlaps the target register".into()));
        }
        let m = self.power(k);
        let dim = m.dim();
        let amps = state.amplitudes_mut();
        for_each_index(layout.dim(), controls.mask() | sys, controls.value(), |base| {
            let v: Vec<Complex64> = (0..dim).map(|j| amps[base | j]).collect();
            for (j, x) in m.mul_vec(&v).into_iter().enumerate() {
                amps[base | j] = x;
            }
        });
        Ok(())
    }
}

/// Applies the exact oracle power once; see [`ExactOracle`].
pub fn exact_oracle_power(
    state: &mut StateVector,
    h: &PauliSum,
    kappa: f64,
    k: usize,
    controls: &Controls,
) -> Result<()> {
    ExactOracle::new(h, kappa)?.apply(state, k, controls)
}

/// Reads an eigenvector from a state dump or from text with one `re [im]` pair per line.
pub fn read_eigenvector(path: &std::path::Path) -> Result<Vec<Complex64>> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Configuration(format!("cannot read eigenvector {}: {e}", path.display())))?;
    if bytes.starts_with(b"LCUPEA\0") {
        let (_, amps) = read_amplitudes(&bytes[..])
            .map_err(|e| Error::Configuration(format!("bad eigenvector dump {}: {e}", path.display())))?;
        return Ok(amps);
    }
    let text = String::from_utf8(bytes)
        .map_err(|_| Error::Configuration(format!("eigenvector {} is neither a dump nor text", path.display())))?;
    let mut amps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse = |s: &str| {
            s.parse::<f64>().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("malformed amplitude component {s:?}"),
            })
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let amp = match fields[..] {
            [re] => Complex64::new(parse(re)?, 0.0),
            [re, im] => Complex64::new(parse(re)?, parse(im)?),
            _ => {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected `re [im]`, got {line:?}"),
                })
            }
        };
        amps.push(amp);
    }
    Ok(amps)
}

/// Powering backend selected for a run.
enum Powering {
    Sequential(AmplifiedOperator),
    Cached(AmplifiedOperator, Box<SuccessivePowerCache>),
    Permutation(AmplifiedOperator),
    Exact(Box<ExactOracle>),
}

impl Powering {
    fn apply(&mut self, state: &mut StateVector, k: usize, controls: &Controls) -> Result<()> {
        match self {
            Powering::Sequential(amp) => controlled_power_successive(state, amp, k, controls),
            Powering::Cached(_, cache) => cache.apply(state, k, controls),
            Powering::Permutation(amp) => controlled_power_permutation(state, amp, k, controls),
            Powering::Exact(oracle) => oracle.apply(state, k, controls),
        }
    }
}

/// Runs the estimation loop; see [`run_ipea_observed`].
pub fn run_ipea(config: &PeaConfig) -> Result<PeaResult> {
    run_ipea_observed(config, |_, _| Ok(()))
}

/// Runs the estimation loop, handing each iteration's record and projected state to `observe`.
pub fn run_ipea_observed<F>(config: &PeaConfig, mut observe: F) -> Result<PeaResult>
where
    F: FnMut(&PeaIterationRecord, &StateVector) -> Result<()>,
{
    config.validate()?;
    let layout = config.layout()?;
    let h = &config.hamiltonian;
    let n = h.n();

    let spectrum = if n <= MAX_DENSE_QUBITS {
        Some(exact_spectrum(h)?)
    } else {
        None
    };
    let eigenvector = match &config.eigenvector {
        EigenvectorSource::ExactGround => {
            let spectrum = spectrum.as_ref().ok_or(Error::SizeCap {
                what: "exact ground state system qubits",
                requested: n,
                limit: MAX_DENSE_QUBITS,
            })?;
            spectrum.eigenvector(0)
        }
        EigenvectorSource::BasisState(idx) => {
            if *idx >= 1 << n {
                return Err(Error::Configuration(format!("basis state {idx} outside {n} qubits")));
            }
            let mut v = vec![Complex64::new(0.0, 0.0); 1 << n];
            v[*idx] = Complex64::new(1.0, 0.0);
            v
        }
        EigenvectorSource::File(path) => read_eigenvector(path)?,
        EigenvectorSource::Amplitudes(v) => v.clone(),
    };
    if eigenvector.len() != 1 << n {
        return Err(Error::Dimension {
            expected: 1 << n,
            found: eigenvector.len(),
        });
    }
    let exact_energy = spectrum.as_ref().map(|s| s.eigenvalues[s.dominant_index(&eigenvector)]);

    let (mut powering, amplify_m) = match config.strategy {
        Strategy::ExactOracle => (Powering::Exact(Box::new(ExactOracle::new(h, config.kappa)?)), 0),
        strategy => {
            let lcu: LcuOperator = build_htilde(h, config.kappa)?;
            let m = match config.amplify_m {
                AmplifyM::Fixed(m) => m,
                AmplifyM::Auto => tune_m(&lcu, &eigenvector, DEFAULT_M_MAX)?,
            };
            let amp = AmplifiedOperator::new(lcu, m);
            let powering = if strategy == Strategy::Permutation {
                Powering::Permutation(amp)
            } else {
                match SuccessivePowerCache::new(&amp) {
                    Ok(cache) => Powering::Cached(amp, Box::new(cache)),
                    Err(_) => Powering::Sequential(amp),
                }
            };
            (powering, m)
        }
    };
    if let Powering::Cached(amp, _) | Powering::Sequential(amp) | Powering::Permutation(amp) = &powering {
        debug!("s = {}, l = {}, m = {}", amp.base.s(), amp.base.l(), amp.m);
    }

    let phase_qubit = layout.phase_qubit().expect("layout always has a phase qubit");
    let control = Controls::on(phase_qubit);
    let mut rng = match config.readout {
        Readout::Shots { seed, .. } => Some(ChaCha8Rng::seed_from_u64(seed)),
        Readout::Deterministic => None,
    };
    let a = config.bits;
    let mut bits: Vec<u8> = Vec::with_capacity(a);
    let mut records = Vec::with_capacity(a);
    for (iter, k) in (0..a).rev().enumerate() {
        let mut state = StateVector::prepare(layout, &eigenvector)?;
        state.apply_hadamard(phase_qubit)?;
        powering.apply(&mut state, k, &control)?;
        let prior: Vec<u8> = bits.iter().rev().copied().collect();
        let w = feedback_angle(&prior);
        state.apply_phase_rotation(phase_qubit, w)?;
        state.apply_hadamard(phase_qubit)?;
        state.project_ancilla_zero();
        let (p0, p1) = state.phase_qubit_statistics()?;
        let (bit, degenerate) = match (&mut rng, config.readout) {
            (Some(rng), Readout::Shots { shots, .. }) => sample_bit(rng, p0, p1, shots),
            _ => decide_bit(p0, p1),
        };
        let record = PeaIterationRecord {
            iter: iter + 1,
            k,
            bit,
            p0,
            p1,
            feedback_angle: w,
            degenerate,
        };
        debug!(
            "k={k} p0={p0:.6e} p1={p1:.6e} bit={bit}{}",
            if degenerate { " (tie)" } else { "" }
        );
        observe(&record, &state)?;
        records.push(record);
        bits.push(bit);
    }

    let phase = phase_from_bits(&bits);
    let energy = recover_energy(phase, config.kappa);
    let abs_error = exact_energy.map(|e| (energy - e).abs());
    info!("phase {phase}, energy {energy}");
    Ok(PeaResult {
        records,
        bits,
        phase,
        energy,
        exact_energy,
        abs_error,
        kappa: config.kappa,
        amplify_m,
        strategy: config.strategy,
    })
}

fn decide_bit(p0: f64, p1: f64) -> (u8, bool) {
    if (p1 - p0).abs() <= TIE_TOLERANCE {
        (0, true)
    } else {
        (u8::from(p1 > p0), false)
    }
}

fn sample_bit(rng: &mut ChaCha8Rng, p0: f64, p1: f64, shots: u64) -> (u8, bool) {
    let total = p0 + p1;
    if total <= 0.0 {
        return (0, true);
    }
    let q = p1 / total;
    let ones = (0..shots).filter(|_| rng.random::<f64>() < q).count() as u64;
    let zeros = shots - ones;
    if ones == zeros {
        (0, true)
    } else {
        (u8::from(ones > zeros), false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feedback_examples() {
        assert_eq!(feedback_angle(&[]), 0.0);
        assert!((feedback_angle(&[1]) + PI / 2.0).abs() < 1e-15);
        assert!((feedback_angle(&[0, 1]) + PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn phase_reassembly_small() {
        assert_eq!(phase_from_bits(&[1, 1, 0, 0]), 3.0 / 16.0);
        assert_eq!(bits_of(3.0 / 16.0, 4), vec![1, 1, 0, 0]);
        assert_eq!(phase_from_bits(&[]), 0.0);
    }

    #[test]
    fn energy_recovery() {
        assert_eq!(recover_energy(0.0, 20.117), 0.0);
        assert!((recover_energy(0.25, 1.0) + PI / 2.0).abs() < 1e-12);
        assert!((recover_energy(0.014603, 20.117) + 1.8458).abs() < 1e-3);
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in [Strategy::Successive, Strategy::Permutation, Strategy::ExactOracle] {
            assert_eq!(s.as_str().parse::<Strategy>().unwrap(), s);
        }
        assert!("qft".parse::<Strategy>().is_err());
    }

    #[test]
    fn ties_default_to_zero() {
        assert_eq!(decide_bit(0.25, 0.25), (0, true));
        assert_eq!(decide_bit(0.2, 0.3), (1, false));
        assert_eq!(decide_bit(0.3, 0.2), (0, false));
    }

    #[test]
    fn zero_hamiltonian_reads_zero_phase() {
        let h = PauliSum::from_words(&[(0.0, "Z")]).unwrap();
        let r = run_ipea(&PeaConfig::new(h, 6, Strategy::ExactOracle, 1.0)).unwrap();
        assert_eq!(r.phase, 0.0);
        assert!(r.bits.iter().all(|&b| b == 0));
    }

    #[test]
    fn memory_cap_enforced() {
        let h = crate::pauli::build_h2();
        let mut cfg = PeaConfig::new(h, 20, Strategy::Permutation, 20.117);
        cfg.mem_cap_qubits = 26;
        assert!(matches!(
            cfg.validate(),
            Err(Error::MemoryCap { requested: 28, cap: 26 })
        ));
        cfg.bits = 0;
        assert!(matches!(cfg.validate(), Err(Error::Configuration(_))));
    }
}
