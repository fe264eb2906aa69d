//! Flat `key = value` experiment files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use lcupea_core::pea::{AmplifyM, Strategy};

use crate::error::CliError;

/// Keys in the order they are written.
pub const KEYS: [&str; 10] = [
    "hamiltonian",
    "bits",
    "strategy",
    "kappa",
    "amplify_m",
    "eigenvector",
    "output_dir",
    "emit_state_dumps",
    "seed",
    "shots",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KappaSetting {
    Value(f64),
    /// Ten times the induced 1-norm of the Hamiltonian.
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenvectorSpec {
    ExactGround,
    Basis(usize),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub hamiltonian: PathBuf,
    pub bits: usize,
    pub strategy: Strategy,
    pub kappa: KappaSetting,
    pub amplify_m: AmplifyM,
    pub eigenvector: EigenvectorSpec,
    pub output_dir: PathBuf,
    pub emit_state_dumps: bool,
    pub seed: u64,
    /// 0 selects deterministic readout.
    pub shots: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            hamiltonian: PathBuf::new(),
            bits: 8,
            strategy: Strategy::Successive,
            kappa: KappaSetting::Auto,
            amplify_m: AmplifyM::Fixed(0),
            eigenvector: EigenvectorSpec::ExactGround,
            output_dir: PathBuf::from("out"),
            emit_state_dumps: false,
            seed: 0,
            shots: 0,
        }
    }
}

impl ExperimentConfig {
    /// Parses config text. Relative file paths are kept as written.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        let mut seen = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected `key = value`", idx + 1)))?;
            let key = key.trim();
            if seen.contains(&key.to_string()) {
                return Err(CliError::Config(format!("line {}: duplicate key {key:?}", idx + 1)));
            }
            seen.push(key.to_string());
            cfg.set(key, value.trim())
                .map_err(|e| CliError::Config(format!("line {}: {e}", idx + 1)))?;
        }
        Ok(cfg)
    }

    /// Loads a config file, resolving its file references against the file's directory.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut cfg = Self::parse(&text).map_err(|e| match e {
            CliError::Config(m) => CliError::Config(format!("{}: {m}", path.display())),
            other => other,
        })?;
        let base = path.parent().unwrap_or(Path::new(""));
        if cfg.hamiltonian.is_relative() && !cfg.hamiltonian.as_os_str().is_empty() {
            cfg.hamiltonian = base.join(&cfg.hamiltonian);
        }
        if let EigenvectorSpec::File(p) = &cfg.eigenvector {
            if p.is_relative() {
                cfg.eigenvector = EigenvectorSpec::File(base.join(p));
            }
        }
        Ok(cfg)
    }

    /// Sets one key from its text form.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let bad = |what: &str| CliError::Config(format!("invalid {key} {value:?}: {what}"));
        match key {
            "hamiltonian" => self.hamiltonian = PathBuf::from(value),
            "bits" => self.bits = value.parse().map_err(|_| bad("expected a positive integer"))?,
            "strategy" => {
                self.strategy = value
                    .parse()
                    .map_err(|_| bad("expected successive, permutation or exact_oracle"))?
            }
            "kappa" => {
                self.kappa = if value == "auto" {
                    KappaSetting::Auto
                } else {
                    let k: f64 = value.parse().map_err(|_| bad("expected a number or auto"))?;
                    if !k.is_finite() || k <= 0.0 {
                        return Err(bad("must be positive"));
                    }
                    KappaSetting::Value(k)
                }
            }
            "amplify_m" => {
                self.amplify_m = if value == "auto" {
                    AmplifyM::Auto
                } else {
                    AmplifyM::Fixed(value.parse().map_err(|_| bad("expected an integer or auto"))?)
                }
            }
            "eigenvector" => {
                self.eigenvector = if value == "exact_ground" {
                    EigenvectorSpec::ExactGround
                } else if let Some(idx) = value.strip_prefix("basis:") {
                    EigenvectorSpec::Basis(idx.parse().map_err(|_| bad("expected basis:INDEX"))?)
                } else if let Some(path) = value.strip_prefix("file:") {
                    EigenvectorSpec::File(PathBuf::from(path))
                } else {
                    return Err(bad("expected exact_ground, basis:INDEX or file:PATH"));
                }
            }
            "output_dir" => self.output_dir = PathBuf::from(value),
            "emit_state_dumps" => self.emit_state_dumps = value.parse().map_err(|_| bad("expected true or false"))?,
            "seed" => self.seed = value.parse().map_err(|_| bad("expected an unsigned integer"))?,
            "shots" => self.shots = value.parse().map_err(|_| bad("expected an unsigned integer"))?,
            other => return Err(CliError::Config(format!("unknown key {other:?}"))),
        }
        Ok(())
    }

    /// Text form of one key.
    pub fn get(&self, key: &str) -> Option<String> {
        Some(match key {
            "hamiltonian" => self.hamiltonian.display().to_string(),
            "bits" => self.bits.to_string(),
            "strategy" => self.strategy.to_string(),
            "kappa" => match self.kappa {
                KappaSetting::Auto => "auto".into(),
                KappaSetting::Value(k) => k.to_string(),
            },
            "amplify_m" => match self.amplify_m {
                AmplifyM::Auto => "auto".into(),
                AmplifyM::Fixed(m) => m.to_string(),
            },
            "eigenvector" => match &self.eigenvector {
                EigenvectorSpec::ExactGround => "exact_ground".into(),
                EigenvectorSpec::Basis(i) => format!("basis:{i}"),
                EigenvectorSpec::File(p) => format!("file:{}", p.display()),
            },
            "output_dir" => self.output_dir.display().to_string(),
            "emit_state_dumps" => self.emit_state_dumps.to_string(),
            "seed" => self.seed.to_string(),
            "shots" => self.shots.to_string(),
            _ => return None,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for key in KEYS {
            let value = self.get(key).expect("every listed key has a value");
            writeln!(out, "{key} = {value}").expect("writing to a String");
        }
        out
    }
}
