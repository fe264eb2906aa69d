use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lcupea_cli::commands::{check_disjoint_outputs, cmd_resources, cmd_run_batch, cmd_spectrum, mem_cap_from_env};
use lcupea_cli::{CliError, ExperimentConfig};
use lcupea_core::pea::Strategy;

#[derive(Parser)]
#[command(
    name = "lcupea",
    version,
    about = "Phase estimation of ground energies on a simulated LCU block encoding"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or more experiments and write trace.csv and summary.json.
    Run(Box<RunArgs>),
    /// Print the exact spectrum of a Hamiltonian file.
    Spectrum { hamiltonian: PathBuf },
    /// Print qubit count and operation bound.
    Resources {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        bits: usize,
        #[arg(long, default_value = "successive")]
        strategy: Strategy,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Config files. Flags below override every one of them.
    configs: Vec<PathBuf>,
    /// Experiments to run concurrently.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    hamiltonian: Option<String>,
    #[arg(long)]
    bits: Option<String>,
    #[arg(long)]
    strategy: Option<String>,
    #[arg(long)]
    kappa: Option<String>,
    #[arg(long = "amplify_m", alias = "amplify-m")]
    amplify_m: Option<String>,
    #[arg(long)]
    eigenvector: Option<String>,
    #[arg(long = "output_dir", alias = "output-dir")]
    output_dir: Option<String>,
    #[arg(long = "emit_state_dumps", alias = "emit-state-dumps")]
    emit_state_dumps: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    shots: Option<String>,
}

impl RunArgs {
    fn overrides(&self) -> [(&'static str, &Option<String>); 10] {
        [
            ("hamiltonian", &self.hamiltonian),
            ("bits", &self.bits),
            ("strategy", &self.strategy),
            ("kappa", &self.kappa),
            ("amplify_m", &self.amplify_m),
            ("eigenvector", &self.eigenvector),
            ("output_dir", &self.output_dir),
            ("emit_state_dumps", &self.emit_state_dumps),
            ("seed", &self.seed),
            ("shots", &self.shots),
        ]
    }

    fn experiments(&self) -> Result<Vec<ExperimentConfig>, CliError> {
        let mut configs = if self.configs.is_empty() {
            vec![ExperimentConfig::default()]
        } else {
            self.configs
                .iter()
                .map(|p| ExperimentConfig::load(p))
                .collect::<Result<_, _>>()?
        };
        for cfg in &mut configs {
            for (key, value) in self.overrides() {
                if let Some(v) = value {
                    cfg.set(key, v)?;
                }
            }
        }
        Ok(configs)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run(args) => {
            let mem_cap = mem_cap_from_env()?;
            let configs = args.experiments()?;
            check_disjoint_outputs(&configs)?;
            let mut first_error = None;
            for (cfg, result) in configs.iter().zip(cmd_run_batch(&configs, args.jobs, mem_cap)) {
                match result {
                    Ok(r) => println!(
                        "{}: phase {} energy {} bits {}",
                        cfg.output_dir.display(),
                        r.phase,
                        r.energy,
                        r.bit_string()
                    ),
                    Err(e) => {
                        eprintln!("{}: {e}", cfg.output_dir.display());
                        first_error.get_or_insert(e);
                    }
                }
            }
            first_error.map_or(Ok(()), Err)
        }
        Command::Spectrum { hamiltonian } => {
            println!("{}", cmd_spectrum(&hamiltonian)?);
            Ok(())
        }
        Command::Resources {
            n,
            terms,
            bits,
            strategy,
        } => {
            println!("{}", cmd_resources(n, terms, bits, strategy)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lcupea: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
