//! The `run`, `spectrum` and `resources` subcommands.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use serde::Serialize;

use lcupea_core::dense::exact_spectrum;
use lcupea_core::lcu::{choose_kappa, estimate_resources, PowerScheme, ResourceReport};
use lcupea_core::pauli::{parse_hamiltonian, PauliSum};
use lcupea_core::pea::{
    run_ipea_observed, EigenvectorSource, PeaConfig, PeaIterationRecord, PeaResult, Readout, Strategy,
    DEFAULT_MEM_CAP_QUBITS,
};

use crate::config::{EigenvectorSpec, ExperimentConfig, KappaSetting};
use crate::error::CliError;

pub const MEM_CAP_ENV: &str = "LCUPEA_MEM_CAP_QUBITS";
pub const TRACE_FILE: &str = "trace.csv";
pub const SUMMARY_FILE: &str = "summary.json";
pub const TRACE_HEADER: [&str; 7] = ["iter", "k", "power", "bit", "p0_unnorm", "p1_unnorm", "feedback_angle"];

/// Factor applied to the norm bound when `kappa = auto`.
pub const AUTO_KAPPA_FACTOR: f64 = 10.0;

/// Qubit cap from the environment, or the default when unset.
pub fn mem_cap_from_env() -> Result<usize, CliError> {
    match std::env::var(MEM_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Config(format!("{MEM_CAP_ENV}={v:?} is not a qubit count"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MEM_CAP_QUBITS),
        Err(e) => Err(CliError::Config(format!("{MEM_CAP_ENV}: {e}"))),
    }
}

pub fn load_hamiltonian(path: &Path) -> Result<PauliSum, CliError> {
    if path.as_os_str().is_empty() {
        return Err(CliError::Config("no hamiltonian given".into()));
    }
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_hamiltonian(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

/// Builds the engine configuration, reading the Hamiltonian from disk.
pub fn resolve(cfg: &ExperimentConfig, mem_cap_qubits: usize) -> Result<PeaConfig, CliError> {
    let h = load_hamiltonian(&cfg.hamiltonian)?;
    let kappa = match cfg.kappa {
        KappaSetting::Value(k) => k,
        KappaSetting::Auto => {
            let (k, substituted) = choose_kappa(&h, AUTO_KAPPA_FACTOR)?;
            if substituted {
                log::warn!("kappa = {k} from the coefficient sum; the spectrum is too large to bound exactly");
            }
            k
        }
    };
    let mut pea = PeaConfig::new(h, cfg.bits, cfg.strategy, kappa);
    pea.amplify_m = cfg.amplify_m;
    pea.eigenvector = match &cfg.eigenvector {
        EigenvectorSpec::ExactGround => EigenvectorSource::ExactGround,
        EigenvectorSpec::Basis(i) => EigenvectorSource::BasisState(*i),
        EigenvectorSpec::File(p) => EigenvectorSource::File(p.clone()),
    };
    pea.readout = if cfg.shots == 0 {
        Readout::Deterministic
    } else {
        Readout::Shots {
            shots: cfg.shots,
            seed: cfg.seed,
        }
    };
    pea.mem_cap_qubits = mem_cap_qubits;
    pea.validate()?;
    pea.layout()?;
    Ok(pea)
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub phase: f64,
    pub energy: f64,
    pub exact_energy: Option<f64>,
    pub abs_error: Option<f64>,
    pub kappa: f64,
    pub strategy: String,
    pub amplify_m: usize,
    /// Least significant bit first.
    pub bits: String,
}

impl From<&PeaResult> for Summary {
    fn from(r: &PeaResult) -> Self {
        Self {
            phase: r.phase,
            energy: r.energy,
            exact_energy: r.exact_energy,
            abs_error: r.abs_error,
            kappa: r.kappa,
            strategy: r.strategy.to_string(),
            amplify_m: r.amplify_m,
            bits: r.bit_string(),
        }
    }
}

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn trace_row(rec: &PeaIterationRecord) -> [String; 7] {
    [
        rec.iter.to_string(),
        rec.k.to_string(),
        rec.power().to_string(),
        rec.bit.to_string(),
        float(rec.p0),
        float(rec.p1),
        float(rec.feedback_angle),
    ]
}

pub fn write_trace(path: &Path, records: &[PeaIterationRecord]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_path(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let io = |e: csv::Error| CliError::Io(format!("{}: {e}", path.display()));
    w.write_record(TRACE_HEADER).map_err(io)?;
    for rec in records {
        w.write_record(trace_row(rec)).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_summary(path: &Path, result: &PeaResult) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, &Summary::from(result)).map_err(|e| CliError::Io(e.to_string()))?;
    std::io::Write::write_all(&mut w, b"\n")?;
    Ok(())
}

/// Runs one experiment and writes its outputs.
pub fn cmd_run(cfg: &ExperimentConfig, mem_cap_qubits: usize) -> Result<PeaResult, CliError> {
    let pea = resolve(cfg, mem_cap_qubits)?;
    let out = &cfg.output_dir;
    fs::create_dir_all(out).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
    let mut dump_error = None;
    let result = run_ipea_observed(&pea, |rec, state| {
        if cfg.emit_state_dumps && dump_error.is_none() {
            let path = out.join(format!("state_iter{:02}.bin", rec.iter));
            let written = File::create(&path).and_then(|f| state.write_dump(BufWriter::new(f)));
            if let Err(e) = written {
                dump_error = Some(CliError::Io(format!("{}: {e}", path.display())));
            }
        }
        Ok(())
    })?;
    if let Some(e) = dump_error {
        return Err(e);
    }
    write_trace(&out.join(TRACE_FILE), &result.records)?;
    write_summary(&out.join(SUMMARY_FILE), &result)?;
    log::info!(
        "{}: phase {} energy {} bits {}",
        out.display(),
        result.phase,
        result.energy,
        result.bit_string()
    );
    Ok(result)
}

fn lexical_absolute(p: &Path) -> PathBuf {
    let abs = std::path::absolute(p).unwrap_or_else(|_| p.to_path_buf());
    let mut out = PathBuf::new();
    for c in abs.components() {
        match c {
            std::path::Component::CurDir => {}
            std::path::Component::ParentDir => {
                out.pop();
            }
            other => out.push(other),
        }
    }
    out
}

/// Rejects batches where one output directory equals or contains another.
pub fn check_disjoint_outputs(configs: &[ExperimentConfig]) -> Result<(), CliError> {
    let dirs: Vec<PathBuf> = configs.iter().map(|c| lexical_absolute(&c.output_dir)).collect();
    for (i, a) in dirs.iter().enumerate() {
        for b in &dirs[i + 1..] {
            if a.starts_with(b) || b.starts_with(a) {
                return Err(CliError::Config(format!(
                    "output directories {} and {} overlap",
                    a.display(),
                    b.display()
                )));
            }
        }
    }
    Ok(())
}

/// Runs the configs on up to `jobs` threads. Results come back in input order.
pub fn cmd_run_batch(
    configs: &[ExperimentConfig],
    jobs: usize,
    mem_cap_qubits: usize,
) -> Vec<Result<PeaResult, CliError>> {
    let jobs = jobs.clamp(1, configs.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<Option<Result<PeaResult, CliError>>>> =
        configs.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let Some(cfg) = configs.get(i) else { break };
                let r = cmd_run(cfg, mem_cap_qubits);
                *slots[i].lock().expect("result slot poisoned") = Some(r);
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().expect("result slot poisoned").expect("every config ran"))
        .collect()
}

/// Ascending eigenvalues as JSON with twelve decimals.
pub fn cmd_spectrum(path: &Path) -> Result<String, CliError> {
    let h = load_hamiltonian(path)?;
    let spectrum = exact_spectrum(&h)?;
    let values: Vec<String> = spectrum.eigenvalues.iter().map(|e| format!("{e:.12}")).collect();
    Ok(format!("{{\"eigenvalues\":[{}]}}", values.join(",")))
}

pub fn power_scheme(strategy: Strategy) -> PowerScheme {
    match strategy {
        Strategy::Permutation => PowerScheme::Permutation,
        Strategy::Successive | Strategy::ExactOracle => PowerScheme::Successive,
    }
}

pub fn cmd_resources(n: usize, terms: usize, bits: usize, strategy: Strategy) -> Result<String, CliError> {
    let ResourceReport { qubits, op_count_bound } = estimate_resources(n, terms, bits, power_scheme(strategy))?;
    Ok(format!("{{\"qubits\":{qubits},\"op_count_bound\":{op_count_bound}}}"))
}
