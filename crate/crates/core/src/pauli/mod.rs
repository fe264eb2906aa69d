//! Pauli strings, weighted Pauli sums and the fermionic machinery built on them.
//!
//! Qubit `q` of an `n`-qubit string is bit `q` of a basis-state index, so qubit 0
//! is the least significant bit. In textual words the rightmost character is
//! qubit 0: `"XZ"` is `X` on qubit 1 and `Z` on qubit 0.
//!
//! Strings are stored in symplectic form (an X mask and a Z mask) with `Y = i·X·Z`
//! per qubit, so a string acts on a basis state as
//! `P|b⟩ = i^{#Y} (-1)^{popcount(b & z)} |b ^ x⟩`.

mod h2;
mod io;
mod ladder;
mod rank_one;

pub use h2::{build_h2, H2_KAPPA, H2_TERMS};
pub use io::{parse_hamiltonian, serialize_hamiltonian};
pub use ladder::{jordan_wigner, ladder_product, LadderOperator};
pub use rank_one::{rank_one_decompose, RankOneDecomposition, Reflection};

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Coefficients with a smaller magnitude are removed by canonicalization.
pub const DROP_TOLERANCE: f64 = 1e-12;

/// Widest string representable by the bitmask encoding.
pub const MAX_QUBITS: usize = 64;

/// Single-qubit Pauli operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// Tensor product of single-qubit Paulis on `n` qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: u64,
    z: u64,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_QUBITS, "at most {MAX_QUBITS} qubits supported");
        Self { n, x: 0, z: 0 }
    }

    /// Builds a string from per-qubit operators, `ops[q]` acting on qubit `q`.
    pub fn from_ops(ops: &[Pauli]) -> Self {
        let mut s = Self::identity(ops.len());
        for (q, &p) in ops.iter().enumerate() {
            s.set(q, p);
        }
        s
    }

    /// Builds a string acting as `p` on qubit `q` and identity elsewhere.
    pub fn single(n: usize, q: usize, p: Pauli) -> Self {
        let mut s = Self::identity(n);
        s.set(q, p);
        s
    }

    /// Parses a word such as `"XXYY"`; the rightmost character is qubit 0.
    pub fn from_word(word: &str) -> Option<Self> {
        let chars: Vec<char> = word.chars().collect();
        if chars.is_empty() || chars.len() > MAX_QUBITS {
            return None;
        }
        let n = chars.len();
        let mut s = Self::identity(n);
        for (pos, &c) in chars.iter().enumerate() {
            s.set(n - 1 - pos, Pauli::from_symbol(c)?);
        }
        Some(s)
    }

    pub fn word(&self) -> String {
        (0..self.n).rev().map(|q| self.get(q).symbol()).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, q: usize) -> Pauli {
        assert!(q < self.n);
        Pauli::from_bits(self.x >> q & 1 == 1, self.z >> q & 1 == 1)
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        assert!(q < self.n);
        let (xb, zb) = p.bits();
        let bit = 1u64 << q;
        self.x = if xb { self.x | bit } else { self.x & !bit };
        self.z = if zb { self.z | bit } else { self.z & !bit };
    }

    pub fn ops(&self) -> Vec<Pauli> {
        (0..self.n).map(|q| self.get(q)).collect()
    }

    /// Qubits on which the string flips the bit (X or Y).
    pub fn x_mask(&self) -> u64 {
        self.x
    }

    /// Qubits on which the string contributes a sign (Z or Y).
    pub fn z_mask(&self) -> u64 {
        self.z
    }

    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    /// Image of basis state `b`: returns `(phase, b')` with `P|b⟩ = phase·|b'⟩`.
    pub fn apply_to_basis(&self, b: u64) -> (Complex64, u64) {
        let sign = if (b & self.z).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
        (i_pow(self.y_count() as i64) * sign, b ^ self.x)
    }

    /// Matrix product `self · other` as `(phase, string)`.
    pub fn multiply(&self, other: &PauliString) -> Result<(Complex64, PauliString)> {
        pauli_multiply(self, other)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// `i^k` for any integer `k`.
pub(crate) fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Multiplies two Pauli strings, returning the phase in `{±1, ±i}` and the product string.
pub fn pauli_multiply(a: &PauliString, b: &PauliString) -> Result<(Complex64, PauliString)> {
    if a.n != b.n {
        return Err(Error::Dimension {
            expected: a.n,
            found: b.n,
        });
    }
    // i^{ya} X^{xa} Z^{za} · i^{yb} X^{xb} Z^{zb}; moving Z^{za} past X^{xb} costs (-1)^{|za & xb|}.
    let x = a.x ^ b.x;
    let z = a.z ^ b.z;
    let yr = (x & z).count_ones() as i64;
    let swaps = (a.z & b.x).count_ones() as i64;
    let k = a.y_count() as i64 + b.y_count() as i64 - yr + 2 * swaps;
    Ok((i_pow(k), PauliString { n: a.n, x, z }))
}

/// A Pauli string with a complex coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliTerm {
    pub coeff: Complex64,
    pub string: PauliString,
}

impl PauliTerm {
    pub fn new(coeff: Complex64, string: PauliString) -> Self {
        Self { coeff, string }
    }

    pub fn real(coeff: f64, string: PauliString) -> Self {
        Self::new(Complex64::new(coeff, 0.0), string)
    }

    pub fn n(&self) -> usize {
        self.string.n()
    }
}

/// Weighted sum of Pauli strings on a fixed number of qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n: usize,
    terms: Vec<PauliTerm>,
}

impl PauliSum {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: vec![] }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            terms: vec![PauliTerm::real(1.0, PauliString::identity(n))],
        }
    }

    pub fn from_terms(n: usize, terms: Vec<PauliTerm>) -> Result<Self> {
        for t in &terms {
            if t.n() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: t.n(),
                });
            }
            if !(t.coeff.re.is_finite() && t.coeff.im.is_finite()) {
                return Err(Error::Parameter(format!("non-finite coefficient on {}", t.string)));
            }
        }
        Ok(Self { n, terms })
    }

    /// Builds a real-coefficient sum from `(coeff, word)` pairs.
    pub fn from_words(pairs: &[(f64, &str)]) -> Result<Self> {
        let mut n = None;
        let mut terms = Vec::with_capacity(pairs.len());
        for (i, &(c, w)) in pairs.iter().enumerate() {
            let s = PauliString::from_word(w).ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("invalid Pauli word {w:?}"),
            })?;
            let n0 = *n.get_or_insert(s.n());
            if s.n() != n0 {
                return Err(Error::Dimension {
                    expected: n0,
                    found: s.n(),
                });
            }
            terms.push(PauliTerm::real(c, s));
        }
        Self::from_terms(n.unwrap_or(0), terms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[PauliTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, term: PauliTerm) -> Result<()> {
        if term.n() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: term.n(),
            });
        }
        self.terms.push(term);
        Ok(())
    }

    /// Merges duplicate strings, drops coefficients below [`DROP_TOLERANCE`] and
    /// orders terms lexicographically by word.
    pub fn canonicalize(&mut self) {
        let mut merged: BTreeMap<String, PauliTerm> = BTreeMap::new();
        for t in self.terms.drain(..) {
            merged
                .entry(t.string.word())
                .and_modify(|e| e.coeff += t.coeff)
                .or_insert(t);
        }
        self.terms = merged
            .into_values()
            .filter(|t| t.coeff.norm() >= DROP_TOLERANCE)
            .collect();
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize();
        self
    }

    /// Coefficient of `string`, summing duplicates.
    pub fn coefficient(&self, string: &PauliString) -> Complex64 {
        self.terms.iter().filter(|t| t.string == *string).map(|t| t.coeff).sum()
    }

    /// Sum of coefficient magnitudes.
    pub fn coefficient_one_norm(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff.norm()).sum()
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|t| PauliTerm::new(t.coeff * factor, t.string))
                .collect(),
        }
    }

    pub fn add(&self, other: &PauliSum) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Ok(Self { n: self.n, terms }.canonical())
    }

    /// Operator product `self · other`, canonicalized.
    pub fn mul(&self, other: &PauliSum) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                let (phase, s) = pauli_multiply(&a.string, &b.string)?;
                terms.push(PauliTerm::new(a.coeff * b.coeff * phase, s));
            }
        }
        Ok(Self { n: self.n, terms }.canonical())
    }

    /// Hermitian conjugate (Pauli strings are Hermitian, so only coefficients conjugate).
    pub fn adjoint(&self) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|t| PauliTerm::new(t.coeff.conj(), t.string))
                .collect(),
        }
    }
}
