use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nilhecke::cli::{run, GroupSource, RunConfig, Verb, EXIT_USAGE};
use nilhecke::selftest::seed_from_env;

/// Exact checks for nil Hecke and Demazure descent algebras of finite Coxeter groups.
#[derive(Parser)]
#[command(name = "nilhecke", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check B_kl = (-1)^m Delta_kl B^D_kl with the full expansion report.
    KeyIdentity(GroupArgs),
    /// Build and verify a membership certificate for B^D_kl.
    Certify(GroupArgs),
    /// Verify a certificate file.
    CheckCert {
        file: PathBuf,
    },
    /// Brute-force membership in a graded truncation of the ideal.
    Oracle {
        #[command(flatten)]
        group: GroupArgs,
        /// Target expression, e.g. "(* G1 G2)"; defaults to B^D of the pair.
        #[arg(long)]
        target: Option<String>,
    },
    /// Descent tests on the bundled equivariant module fixtures.
    DemoDescent {
        /// Additional fixture files.
        #[arg(long = "module")]
        modules: Vec<PathBuf>,
    },
    /// Run the property suite (seed from NILHECKE_SEED).
    Selftest {
        #[arg(long)]
        preset: Option<String>,
        #[arg(long)]
        degree_cap: Option<u32>,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Shipped group: A1, A1xA1, A2, B2, B2_sym, G2, G2_sym, I2_5, A3, B3, H3.
    #[arg(long, conflicts_with = "group")]
    preset: Option<String>,
    /// Group config file: {"coxeter_matrix": .., "cartan": .., "field": ..}.
    #[arg(long)]
    group: Option<PathBuf>,
    /// Generator pair, 1-based, e.g. 1,2.
    #[arg(long, value_parser = parse_pair)]
    pair: Option<(usize, usize)>,
    #[arg(long)]
    word_cap: Option<usize>,
    #[arg(long)]
    degree_cap: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected k,l, got `{s}`"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{x}` is not a generator index"))
    };
    Ok((parse(a)?, parse(b)?))
}

impl GroupArgs {
    fn apply(self, cfg: &mut RunConfig) {
        cfg.group = match (self.preset, self.group) {
            (Some(p), _) => Some(GroupSource::Preset(p)),
            (None, Some(f)) => Some(GroupSource::File(f)),
            (None, None) => None,
        };
        cfg.pair = self.pair;
        cfg.word_cap = self.word_cap;
        cfg.degree_cap = self.degree_cap;
        cfg.out = self.out;
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let seed = match seed_from_env() {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let mut cfg = match cli.command {
        Command::KeyIdentity(g) => {
            let mut cfg = RunConfig::new(Verb::KeyIdentity);
            g.apply(&mut cfg);
            cfg
        }
        Command::Certify(g) => {
            let mut cfg = RunConfig::new(Verb::Certify);
            g.apply(&mut cfg);
            cfg
        }
        Command::CheckCert { file } => RunConfig::new(Verb::CheckCert(file)),
        Command::Oracle { group, target } => {
            let mut cfg = RunConfig::new(Verb::Oracle);
            group.apply(&mut cfg);
            cfg.target = target;
            cfg
        }
        Command::DemoDescent { modules } => RunConfig {
            modules,
            ..RunConfig::new(Verb::DemoDescent)
        },
        Command::Selftest { preset, degree_cap } => RunConfig {
            group: preset.map(GroupSource::Preset),
            degree_cap,
            ..RunConfig::new(Verb::Selftest)
        },
    };
    cfg.seed = seed;
    let outcome = run(&cfg);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.exit as u8)
}
