use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcturbo::analysis::{min_distance_exhaustive, min_distance_low_weight, z_statistics};
use qcturbo::permutation::{sample_qc, sample_s_random, sample_uniform, InterleaverFile, DEFAULT_S_RANDOM_ATTEMPTS};
use qcturbo::rsc::RscCode;
use qcturbo::simulation::{run_point, write_csv, SimConfig};
use qcturbo::turbo::{Boundary, DecoderConfig, MapKind, Puncture, TurboCode};
use qcturbo::Error;

const EXIT_CODES: &str = "Exit codes: 0 success, 2 invalid input, 3 construction failure, 4 resource limit.";

#[derive(Parser)]
#[command(name = "qcturbo", version, about = "Quasi-cyclic interleavers and tail-biting turbo codes", after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Qc,
    Uniform,
    Srandom,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistanceMethod {
    Exhaustive,
    LowWeight,
}

#[derive(Clone, Copy, ValueEnum)]
enum PunctureArg {
    None,
    Alternate,
}

#[derive(Clone, Copy, ValueEnum)]
enum TerminationArg {
    TailBiting,
    Open,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    LogMap,
    MaxLog,
}

#[derive(clap::Args)]
struct CodeArgs {
    /// Interleaver file ("qc n1 n2" or "table N" format).
    #[arg(long)]
    perm: PathBuf,
    /// Octal generators feedback,feedforward, e.g. 13,15.
    #[arg(long)]
    gens: RscCode,
    #[arg(long, value_enum, default_value = "none")]
    puncture: PunctureArg,
    /// Open trellises start at zero and stay unterminated; needed when the
    /// block length is a multiple of the feedback period.
    #[arg(long, value_enum, default_value = "tail-biting")]
    termination: TerminationArg,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an interleaver file and report its spread and quasi-cyclicity.
    #[command(after_help = EXIT_CODES)]
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Column height (qc).
        #[arg(long)]
        n1: Option<usize>,
        /// Row width (qc).
        #[arg(long)]
        n2: Option<usize>,
        /// Length (uniform, srandom).
        #[arg(long)]
        n: Option<usize>,
        /// Spreading constraint (srandom).
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_S_RANDOM_ATTEMPTS)]
        max_attempts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; the interleaver goes to stdout and the report to stderr when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report length, representation, spread and quasi-cyclic period of an interleaver file.
    #[command(after_help = EXIT_CODES)]
    Inspect {
        #[arg(long)]
        perm: PathBuf,
    },
    /// Exact minimum weight-to-length ratio of a constituent code.
    #[command(after_help = EXIT_CODES)]
    Lambda {
        #[arg(long)]
        gens: RscCode,
        /// Bellman-Ford round limit; at least 4 times the number of states.
        #[arg(long, default_value_t = 256)]
        horizon: usize,
    },
    /// Minimum distance: exact by enumeration (N <= 20) or an upper bound from low-weight inputs.
    #[command(after_help = EXIT_CODES)]
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "low-weight")]
        method: DistanceMethod,
        /// Largest information weight searched by the low-weight method.
        #[arg(long, default_value_t = 3)]
        max_weight: usize,
    },
    /// Monte Carlo mean of Z over random quasi-cyclic interleavers.
    #[command(after_help = EXIT_CODES)]
    Zstat {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long = "M")]
        m: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Word and bit error rates over BPSK/AWGN; one CSV row per Eb/N0 point.
    #[command(after_help = EXIT_CODES)]
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        /// Comma-separated Eb/N0 values in dB.
        #[arg(long, value_delimiter = ',', required = true)]
        snr: Vec<f64>,
        #[arg(long, default_value_t = 8)]
        iters: usize,
        #[arg(long, default_value_t = 100)]
        stop_blocks: u64,
        #[arg(long, default_value_t = 500)]
        stop_bits: u64,
        #[arg(long, default_value_t = 10_000_000)]
        max_frames: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value = "log-map")]
        map: MapArg,
        /// Wrap-around passes of the tail-biting decoder.
        #[arg(long, default_value_t = 2)]
        wraps: usize,
        /// CSV output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this kind")))
}

fn read_perm(path: &PathBuf) -> Result<InterleaverFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text.parse()?)
}

fn turbo_code(args: &CodeArgs) -> Result<TurboCode, Failure> {
    let perm = read_perm(&args.perm)?.permutation();
    let tc = match args.termination {
        TerminationArg::TailBiting => TurboCode::new(args.gens.clone(), perm)?,
        TerminationArg::Open => TurboCode::open(args.gens.clone(), perm),
    };
    Ok(tc.with_puncture(match args.puncture {
        PunctureArg::None => Puncture::None,
        PunctureArg::Alternate => Puncture::Alternate,
    }))
}

fn report(file: &InterleaverFile, out: &mut dyn Write) -> io::Result<()> {
    let perm = file.permutation();
    writeln!(out, "header {}", file.header())?;
    writeln!(out, "n {}", perm.len())?;
    writeln!(out, "kind {}", file.kind())?;
    match perm.spread() {
        Ok(s) => writeln!(out, "spread {s}")?,
        Err(_) => writeln!(out, "spread undefined")?,
    }
    match perm.quasi_cyclic_period() {
        Some(p) => writeln!(out, "quasi_cyclic true period {p}")?,
        None => writeln!(out, "quasi_cyclic false")?,
    }
    writeln!(out, "storage_integers {}", file.storage_integers())
}

fn run(cli: Cli) -> Outcome {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen {
            kind,
            n1,
            n2,
            n,
            s,
            max_attempts,
            seed,
            out: path,
        } => {
            let file = match kind {
                Kind::Qc => InterleaverFile::Qc(sample_qc(need(n1, "n1")?, need(n2, "n2")?, seed)?),
                Kind::Uniform => InterleaverFile::Table(sample_uniform(need(n, "n")?, seed)?),
                Kind::Srandom => {
                    InterleaverFile::Table(sample_s_random(need(n, "n")?, need(s, "s")?, seed, max_attempts)?)
                }
            };
            match path {
                Some(p) => {
                    fs::write(&p, file.to_string())?;
                    report(&file, &mut out)?;
                }
                None => {
                    write!(out, "{file}")?;
                    report(&file, &mut io::stderr())?;
                }
            }
        }
        Command::Inspect { perm } => report(&read_perm(&perm)?, &mut out)?,
        Command::Lambda { gens, horizon } => writeln!(out, "{}", gens.lambda(horizon)?)?,
        Command::Distance {
            code,
            method,
            max_weight,
        } => {
            let tc = turbo_code(&code)?;
            let r = match method {
                DistanceMethod::Exhaustive => min_distance_exhaustive(&tc)?,
                DistanceMethod::LowWeight => min_distance_low_weight(&tc, max_weight)?,
            };
            writeln!(out, "{r}")?;
        }
        Command::Zstat { n1, n2, m, trials, seed } => {
            let z = z_statistics(n1, n2, m, trials, seed)?;
            writeln!(out, "trials {trials}")?;
            writeln!(out, "mean_z {}", z.mean)?;
            writeln!(out, "bound {}", z.bound)?;
            writeln!(out, "within_bound {}", z.within_bound())?;
            writeln!(out, "divisibility_violations {}", z.divisibility_violations)?;
        }
        Command::Simulate {
            code,
            snr,
            iters,
            stop_blocks,
            stop_bits,
            max_frames,
            seed,
            workers,
            map,
            wraps,
            out: path,
        } => {
            let tc = turbo_code(&code)?;
            let cfg = SimConfig {
                decoder: DecoderConfig {
                    iterations: iters,
                    kind: match map {
                        MapArg::LogMap => MapKind::LogMap,
                        MapArg::MaxLog => MapKind::MaxLogMap,
                    },
                    boundary: Boundary::WrapAround { wraps },
                },
                min_block_errors: stop_blocks,
                min_bit_errors: stop_bits,
                max_frames,
                seed,
                workers,
                sigma_override: None,
            };
            if snr.is_empty() {
                return Err(Failure::Usage("--snr needs at least one value".into()));
            }
            let mut points = Vec::new();
            for db in snr {
                points.push(run_point(&tc, &cfg, db)?);
            }
            match path {
                Some(p) => {
                    let mut buf = Vec::new();
                    write_csv(&mut buf, &points)?;
                    fs::write(p, buf)?;
                }
                None => write_csv(&mut out, &points)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Construction { .. } => 3,
                Error::Resource(_) | Error::Inconclusive(_) => 4,
                _ => 2,
            })
        }
    }
}
