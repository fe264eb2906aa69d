mod common;

use common::*;
use lcupea_core::dense::{exact_spectrum, pauli_string_dense, to_dense as pauli_dense, DenseMatrix};
use lcupea_core::pauli::{
    build_h2, jordan_wigner, parse_hamiltonian, pauli_multiply, rank_one_decompose, serialize_hamiltonian,
    LadderOperator, PauliString, PauliSum, H2_TERMS,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn all_words(n: usize) -> Vec<String> {
    let mut words = vec![String::new()];
    for _ in 0..n {
        words = words
            .iter()
            .flat_map(|w| ['I', 'X', 'Y', 'Z'].map(|ch| format!("{w}{ch}")))
            .collect();
    }
    words
}

fn word(n: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['I', 'X', 'Y', 'Z']), n).prop_map(|v| v.into_iter().collect())
}

fn check_product(a: &str, b: &str) {
    let pa = PauliString::from_word(a).unwrap();
    let pb = PauliString::from_word(b).unwrap();
    let (phase, p) = pauli_multiply(&pa, &pb).unwrap();
    let got = pauli_string_dense(&p).unwrap().scale(phase);
    let expected = matmul(&word_matrix(a), &word_matrix(b));
    assert!(max_diff(&expected, &got) <= 1e-15, "{a}·{b}");
}

#[test]
fn string_dense_matches_kronecker_oracle() {
    for n in 1..=3 {
        for w in all_words(n) {
            let d = pauli_string_dense(&PauliString::from_word(&w).unwrap()).unwrap();
            assert_eq!(max_diff(&word_matrix(&w), &d), 0.0, "{w}");
        }
    }
}

#[test]
fn products_exhaustive_up_to_two_qubits() {
    for n in 1..=2 {
        let words = all_words(n);
        for a in &words {
            for b in &words {
                check_product(a, b);
            }
        }
    }
}

proptest! {
    #[test]
    fn products_random_three_and_four_qubits((a, b) in (3usize..=4).prop_flat_map(|n| (word(n), word(n)))) {
        check_product(&a, &b);
    }

    #[test]
    fn sum_products_match_dense(
        a in prop::collection::vec((-1.0f64..1.0, word(3)), 1..5),
        b in prop::collection::vec((-1.0f64..1.0, word(3)), 1..5),
    ) {
        let to_sum = |v: &[(f64, String)]| {
            let pairs: Vec<(f64, &str)> = v.iter().map(|(c, w)| (*c, w.as_str())).collect();
            PauliSum::from_words(&pairs).unwrap()
        };
        let (sa, sb) = (to_sum(&a), to_sum(&b));
        let product = sa.mul(&sb).unwrap();
        let oracle = |v: &[(f64, String)]| sum_matrix(&v.iter().map(|(x, w)| (c(*x, 0.0), w.clone())).collect::<Vec<_>>());
        let expected = matmul(&oracle(&a), &oracle(&b));
        if product.is_empty() {
            prop_assert!(expected.iter().flatten().all(|x| x.norm() < 1e-12));
        } else {
            prop_assert!(max_diff(&expected, &pauli_dense(&product).unwrap()) < 1e-12);
        }
    }

    #[test]
    fn rank_one_reconstruction(
        dim_log in 1usize..=4,
        count in 1usize..=8,
        raw in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 8 * 16),
    ) {
        let dim = 1 << dim_log;
        let mut vectors = Vec::new();
        for j in 0..count {
            let v: Vec<Complex64> = raw[j * 16..j * 16 + dim].iter().map(|(r, i)| c(*r, *i)).collect();
            let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            prop_assume!(norm > 1e-3);
            vectors.push(v.into_iter().map(|x| x / norm).collect::<Vec<_>>());
        }
        let decomposition = rank_one_decompose(&vectors).unwrap();
        let mut expected = zeros(dim);
        for v in &vectors {
            for r in 0..dim {
                for s in 0..dim {
                    expected[r][s] += v[r] * v[s].conj();
                }
            }
        }
        prop_assert!(max_diff(&expected, &decomposition.reconstruct()) <= 1e-12);
    }
}

fn anticommutator(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    &(a * b) + &(b * a)
}

#[test]
fn jordan_wigner_canonical_anticommutation() {
    for n in 1..=4 {
        let lowering: Vec<DenseMatrix> = (0..n)
            .map(|j| pauli_dense(&jordan_wigner(LadderOperator::annihilate(j), n).unwrap()).unwrap())
            .collect();
        let raising: Vec<DenseMatrix> = (0..n)
            .map(|j| pauli_dense(&jordan_wigner(LadderOperator::create(j), n).unwrap()).unwrap())
            .collect();
        let dim = 1 << n;
        for i in 0..n {
            assert!(raising[i].max_abs_diff(&lowering[i].adjoint()) < 1e-15);
            for j in 0..n {
                assert!(anticommutator(&lowering[i], &lowering[j]).max_abs() <= 1e-12);
                let expected = if i == j {
                    DenseMatrix::identity(dim)
                } else {
                    DenseMatrix::zeros(dim)
                };
                assert!(anticommutator(&lowering[i], &raising[j]).max_abs_diff(&expected) <= 1e-12);
            }
        }
    }
}

#[test]
fn lowering_operator_matches_explicit_matrix() {
    // a₁ on two modes is Z₀-tailed |0⟩⟨1| on qubit 1.
    let a1 = pauli_dense(&jordan_wigner(LadderOperator::annihilate(1), 2).unwrap()).unwrap();
    let sigma = vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(0.0, 0.0), c(0.0, 0.0)]];
    assert_eq!(max_diff(&kron(&sigma, &pauli('Z')), &a1), 0.0);
}

/// Every XY term of the H₂ table flips all four qubits, so the Hamiltonian splits into
/// 2×2 blocks on `{b, !b}`. This evaluates the block holding `|0011⟩` by hand.
fn h2_ground_by_hand() -> f64 {
    let diagonal = |b: u32| -> f64 {
        H2_TERMS
            .iter()
            .filter(|(_, w)| w.chars().all(|ch| ch == 'I' || ch == 'Z'))
            .map(|(coeff, w)| {
                let parity = w
                    .chars()
                    .rev()
                    .enumerate()
                    .filter(|(q, ch)| *ch == 'Z' && b >> q & 1 == 1)
                    .count();
                if parity % 2 == 0 {
                    *coeff
                } else {
                    -coeff
                }
            })
            .sum()
    };
    let (e1, e2) = (diagonal(0b0011), diagonal(0b1100));
    let coupling = 4.0 * 0.0453;
    (e1 + e2) / 2.0 - (((e1 - e2) / 2.0).powi(2) + coupling * coupling).sqrt()
}

#[test]
fn h2_spectrum_against_independent_solvers() {
    let h = build_h2();
    let dense = pauli_dense(&h).unwrap();
    assert!(dense.hermitian_asymmetry() == 0.0);
    let terms: Vec<(Complex64, String)> = H2_TERMS.iter().map(|(x, w)| (c(*x, 0.0), w.to_string())).collect();
    let oracle = sum_matrix(&terms);
    assert!(max_diff(&oracle, &dense) < 1e-15);

    let spectrum = exact_spectrum(&h).unwrap();
    let jacobi = jacobi_eigenvalues(&oracle);
    for (a, b) in spectrum.eigenvalues.iter().zip(&jacobi) {
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }
    let by_hand = h2_ground_by_hand();
    assert!((spectrum.ground_energy() - by_hand).abs() < 1e-12);
    // Frozen value of the ground energy implied by the four-digit coefficient table.
    assert!((by_hand + 1.851_065_05).abs() < 1e-8, "{by_hand}");
}

#[test]
fn ground_state_is_in_the_two_electron_block() {
    let spectrum = exact_spectrum(&build_h2()).unwrap();
    let v = spectrum.eigenvector(0);
    let weight = v[0b0011].norm_sqr() + v[0b1100].norm_sqr();
    assert!((weight - 1.0).abs() < 1e-12);
    assert!(v[0b0011].norm_sqr() > 0.9);
}

#[test]
fn shipped_hamiltonian_file_matches_table() {
    let text = include_str!("../../../data/h2.ham");
    let parsed = parse_hamiltonian(text).unwrap();
    assert_eq!(parsed, build_h2());
    let canonical = serialize_hamiltonian(&parsed).unwrap();
    assert_eq!(parse_hamiltonian(&canonical).unwrap(), parsed.canonical());
    assert_eq!(
        serialize_hamiltonian(&parse_hamiltonian(&canonical).unwrap()).unwrap(),
        canonical
    );
}
