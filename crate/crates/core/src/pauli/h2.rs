use super::PauliSum;

/// Qubit Hamiltonian of H₂ in a minimal basis (four spin orbitals, bond length 0.7414 Å),
/// as `(coefficient in hartree, word)` with qubit 0 rightmost.
pub const H2_TERMS: [(f64, &str); 15] = [
    (-0.8126, "IIII"),
    (0.1712, "IIIZ"),
    (0.1712, "IIZI"),
    (-0.2228, "IZII"),
    (-0.2228, "ZIII"),
    (0.1686, "IIZZ"),
    (0.1205, "IZIZ"),
    (0.1659, "IZZI"),
    (0.1659, "ZIIZ"),
    (0.1205, "ZIZI"),
    (0.1743, "ZZII"),
    (-0.0453, "XXYY"),
    (0.0453, "XYYX"),
    (0.0453, "YXXY"),
    (-0.0453, "YYXX"),
];

/// Scaling constant published alongside the H₂ coefficients.
pub const H2_KAPPA: f64 = 20.117;

pub fn build_h2() -> PauliSum {
    PauliSum::from_words(&H2_TERMS).expect("H2 table is well formed")
}
