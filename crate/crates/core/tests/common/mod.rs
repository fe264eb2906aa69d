//! Reference implementations used only as test oracles. They share no code with the
//! library: Pauli matrices come from explicit Kronecker products and eigenvalues from
//! a cyclic Jacobi sweep.

#![allow(dead_code, clippy::needless_range_loop)]

use lcupea_core::dense::DenseMatrix;
use num_complex::Complex64;

pub type Mat = Vec<Vec<Complex64>>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn zeros(dim: usize) -> Mat {
    vec![vec![c(0.0, 0.0); dim]; dim]
}

pub fn identity(dim: usize) -> Mat {
    let mut m = zeros(dim);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c(1.0, 0.0);
    }
    m
}

pub fn pauli(ch: char) -> Mat {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    match ch {
        'I' => vec![vec![o, z], vec![z, o]],
        'X' => vec![vec![z, o], vec![o, z]],
        'Y' => vec![vec![z, -i], vec![i, z]],
        'Z' => vec![vec![o, z], vec![z, -o]],
        _ => panic!("not a Pauli symbol: {ch}"),
    }
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (na, nb) = (a.len(), b.len());
    let mut out = zeros(na * nb);
    for i in 0..na {
        for j in 0..na {
            for k in 0..nb {
                for l in 0..nb {
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// Leftmost character is the most significant qubit.
pub fn word_matrix(word: &str) -> Mat {
    word.chars()
        .fold(vec![vec![c(1.0, 0.0)]], |acc, ch| kron(&acc, &pauli(ch)))
}

pub fn sum_matrix(terms: &[(Complex64, String)]) -> Mat {
    let dim = 1 << terms[0].1.len();
    let mut out = zeros(dim);
    for (coeff, word) in terms {
        let p = word_matrix(word);
        for i in 0..dim {
            for j in 0..dim {
                out[i][j] += coeff * p[i][j];
            }
        }
    }
    out
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == c(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn scale(a: &Mat, s: Complex64) -> Mat {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn adjoint(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

pub fn max_diff(a: &Mat, b: &DenseMatrix) -> f64 {
    let mut m: f64 = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            m = m.max((x - b.get(i, j)).norm());
        }
    }
    m
}

pub fn max_diff_mat(a: &Mat, b: &Mat) -> f64 {
    let mut m: f64 = 0.0;
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            m = m.max((x - y).norm());
        }
    }
    m
}

pub fn mat_vec(a: &Mat, v: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn to_dense(a: &Mat) -> DenseMatrix {
    DenseMatrix::from_row_major(a.len(), a.iter().flatten().copied().collect()).unwrap()
}

/// Eigenvalues of a Hermitian matrix, ascending, via the real symmetric embedding
/// `[[Re, -Im], [Im, Re]]` (each eigenvalue appears twice there).
pub fn jacobi_eigenvalues(a: &Mat) -> Vec<f64> {
    let n = a.len();
    let m = 2 * n;
    let mut s = vec![vec![0.0f64; m]; m];
    for i in 0..n {
        for j in 0..n {
            s[i][j] = a[i][j].re;
            s[i + n][j + n] = a[i][j].re;
            s[i][j + n] = -a[i][j].im;
            s[i + n][j] = a[i][j].im;
        }
    }
    for _sweep in 0..100 {
        let off: f64 = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| s[i][j] * s[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                if s[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                for k in 0..m {
                    let (skp, skq) = (s[k][p], s[k][q]);
                    s[k][p] = cs * skp - sn * skq;
                    s[k][q] = sn * skp + cs * skq;
                }
                for k in 0..m {
                    let (spk, sqk) = (s[p][k], s[q][k]);
                    s[p][k] = cs * spk - sn * sqk;
                    s[q][k] = sn * spk + cs * sqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..m).map(|i| s[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    eig.into_iter().step_by(2).collect()
}

/// Largest singular value by power iteration on `A†A`.
pub fn spectral_norm(a: &Mat) -> f64 {
    let n = a.len();
    let ata = matmul(&adjoint(a), a);
    let mut v: Vec<Complex64> = (0..n).map(|i| c(1.0 + i as f64 * 0.37, 0.1 * i as f64)).collect();
    let mut lambda = 0.0;
    for _ in 0..2000 {
        let w = mat_vec(&ata, &v);
        let norm = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        v = w.into_iter().map(|x| x / norm).collect();
        lambda = norm;
    }
    lambda.sqrt()
}
