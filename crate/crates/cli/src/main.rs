use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use wsps::experiment::{bench, run_ratio_experiment, tight_family, RatioStats};
use wsps::generate::{generate, GenKind, GenParams};
use wsps::io::{
    emit_instance, emit_schedule, parse_instance, parse_schedule, validate_schedule_file,
};
use wsps::{
    brute_force_opt, is_antithetical, solve_antithetical, solve_keyseq, Instance64, Schedule64,
};

#[derive(Parser)]
#[command(
    name = "wsps",
    version,
    about = "Weighted single shared processor scheduling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    /// spt if the instance is antithetical, keyseq otherwise
    Auto,
    /// exact processing-time order (antithetical instances only)
    Spt,
    /// key-sequence 1/2-approximation with certificate
    Keyseq,
    /// exhaustive search (small instances)
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Uniform,
    Antithetical,
    Tight,
    Equal,
}

impl From<Kind> for GenKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Uniform => GenKind::Uniform,
            Kind::Antithetical => GenKind::Antithetical,
            Kind::Tight => GenKind::Tight,
            Kind::Equal => GenKind::Equal,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and write a schedule document
    Solve {
        #[arg(long, value_enum, default_value = "auto")]
        algo: Algo,
        /// Instance file (stdin if omitted)
        #[arg(long)]
        input: Option<PathBuf>,
        /// Schedule file (stdout if omitted)
        #[arg(long)]
        output: Option<PathBuf>,
        /// Job limit for --algo brute
        #[arg(long, default_value_t = wsps::DEFAULT_ORACLE_LIMIT)]
        limit: usize,
    },
    /// Check a schedule document against its instance
    Validate {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        schedule: PathBuf,
    },
    /// Generate a random instance
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1.0)]
        p_min: f64,
        #[arg(long, default_value_t = 10.0)]
        p_max: f64,
        #[arg(long, default_value_t = 1.0)]
        w_min: f64,
        #[arg(long, default_value_t = 10.0)]
        w_max: f64,
    },
    /// Compare the key schedule with the exhaustive optimum on random instances
    Ratio {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also print the unit-job family for n = 2..=TIGHT
        #[arg(long)]
        tight: Option<usize>,
    },
    /// Time normalize + solve on large generated instances
    Bench {
        /// Instance sizes (default 10^4, 10^5, 10^6)
        #[arg(long, num_args = 1..)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => {
            fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display()))
        }
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{text}")?;
            Ok(())
        }
    }
}

fn solve(
    instance: &Instance64,
    algo: Algo,
    limit: usize,
) -> Result<(&'static str, Schedule64, Option<f64>)> {
    let algo = match algo {
        Algo::Auto if is_antithetical(instance) => Algo::Spt,
        Algo::Auto => Algo::Keyseq,
        other => other,
    };
    Ok(match algo {
        Algo::Spt => ("spt", solve_antithetical(instance)?, None),
        Algo::Keyseq if instance.is_empty() => ("keyseq", Schedule64::empty(), Some(0.0)),
        Algo::Keyseq => {
            let sol = solve_keyseq(instance)?;
            let cert = *sol.certificate();
            ("keyseq", sol.schedule, Some(cert))
        }
        Algo::Brute => (
            "brute",
            brute_force_opt(instance, limit)?.best_schedule,
            None,
        ),
        Algo::Auto => unreachable!(),
    })
}

fn fmt_stats(name: &str, stats: Option<RatioStats>) -> String {
    match stats {
        Some(s) => format!(
            "{name:<18} min {:.6}  mean {:.6}  max {:.6}",
            s.min, s.mean, s.max
        ),
        None => format!("{name:<18} -"),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            algo,
            input,
            output,
            limit,
        } => {
            let instance = parse_instance(&read_input(input.as_deref())?)?;
            let (name, schedule, certificate) = solve(&instance, algo, limit)?;
            let text = emit_schedule(&instance, &schedule, name, certificate.as_ref());
            write_output(output.as_deref(), &text)?;
        }
        Command::Validate { instance, schedule } => {
            let inst = parse_instance(&read_input(Some(&instance))?)?;
            let file = parse_schedule(&read_input(Some(&schedule))?)?;
            let violations = validate_schedule_file(&inst, &file);
            if violations.is_empty() {
                println!("ok");
            } else {
                for v in &violations {
                    println!("{v}");
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gen {
            kind,
            n,
            seed,
            out,
            p_min,
            p_max,
            w_min,
            w_max,
        } => {
            let params = GenParams {
                kind: kind.into(),
                n,
                seed,
                p_range: (p_min, p_max),
                w_range: (w_min, w_max),
            };
            write_output(out.as_deref(), &emit_instance(&generate(&params)?))?;
        }
        Command::Ratio {
            count,
            n,
            seed,
            tight,
        } => {
            let report = match run_ratio_experiment(count, n, seed) {
                Err(e @ wsps::Error::BoundViolated { .. }) => {
                    println!("{e}");
                    return Ok(ExitCode::from(1));
                }
                other => other?,
            };
            println!("instances {}  n {}", report.instances, report.n);
            println!("{}", fmt_stats("key / opt", report.key_over_opt));
            println!("{}", fmt_stats("key / u*", report.key_over_certificate));
            println!("{}", fmt_stats("opt / u*", report.opt_over_certificate));
            if let Some(max) = tight {
                println!(
                    "\n{:>3}  {:>10}  {:>14}  {:>10}  {:>12}",
                    "n", "key", "all jobs", "ratio", "0.5/(1-2^-n)"
                );
                for row in tight_family(2..=max)? {
                    println!(
                        "{:>3}  {:>10}  {:>14}  {:>10.6}  {:>12.6}",
                        row.n,
                        row.key_objective,
                        row.all_jobs_objective,
                        row.ratio,
                        row.closed_form
                    );
                }
            }
        }
        Command::Bench { n, repeats, seed } => {
            let ns = if n.is_empty() {
                vec![10_000, 100_000, 1_000_000]
            } else {
                n
            };
            println!("{:>9}  {:>12}  {:>12}", "n", "spt [ms]", "keyseq [ms]");
            for row in bench(&ns, repeats, seed)? {
                println!(
                    "{:>9}  {:>12.3}  {:>12.3}",
                    row.n,
                    row.spt.as_secs_f64() * 1e3,
                    row.keyseq.as_secs_f64() * 1e3
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
