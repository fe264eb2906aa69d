//! Plain-text Hamiltonian files.
//!
//! One term per line, `<real coefficient> <pauli word>`, rightmost character of the
//! word acting on qubit 0. `#` starts a comment that runs to the end of the line.

use std::fmt::Write as _;

use super::{PauliString, PauliSum, PauliTerm, DROP_TOLERANCE};
use crate::error::{Error, Result};

/// Parses a Hamiltonian file. Terms are returned in file order, not canonicalized.
pub fn parse_hamiltonian(text: &str) -> Result<PauliSum> {
    let mut n: Option<usize> = None;
    let mut terms = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [coeff, word] = fields[..] else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `<coefficient> <word>`, got {line:?}"),
            });
        };
        // Accept the typographic minus sign as well as ASCII '-'.
        let coeff = coeff.replace('\u{2212}', "-");
        let value: f64 = coeff.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("malformed coefficient {coeff:?}"),
        })?;
        if !value.is_finite() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("non-finite coefficient {coeff:?}"),
            });
        }
        if let Some(bad) = word.chars().find(|c| !matches!(c, 'I' | 'X' | 'Y' | 'Z')) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("illegal character {bad:?} in word {word:?}"),
            });
        }
        let string = PauliString::from_word(word).ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("word {word:?} is too long"),
        })?;
        match n {
            None => n = Some(string.n()),
            Some(n0) if n0 != string.n() => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("word {word:?} has {} qubits, expected {n0}", string.n()),
                })
            }
            _ => {}
        }
        terms.push(PauliTerm::real(value, string));
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "no terms found".into(),
    })?;
    PauliSum::from_terms(n, terms)
}

/// Writes the canonical form of `h`, sorted by word. Fails on non-real coefficients.
pub fn serialize_hamiltonian(h: &PauliSum) -> Result<String> {
    let canonical = h.clone().canonical();
    let mut out = String::new();
    for t in canonical.terms() {
        if t.coeff.im.abs() >= DROP_TOLERANCE {
            return Err(Error::Parameter(format!(
                "term {} has a complex coefficient {}",
                t.string, t.coeff
            )));
        }
        writeln!(out, "{} {}", t.coeff.re, t.string.word()).expect("writing to a String");
    }
    Ok(out)
}
