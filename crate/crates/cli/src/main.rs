use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use b4complex::braid::{equals, parse_word, NormalForm};
use b4complex::complex::{build_ball, coset_key, link, spellings_of_x};
use b4complex::suites::{run_suite, Suite, VerifyOptions};

/// Checks on the coset complex of B₄ and its automorphism action.
#[derive(Debug, Parser)]
#[command(name = "b4complex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite and print one CHECK line per check.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the ball of the given radius in the line-oriented text format.
    Ball {
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the link of the vertex `w<x>`.
    Link {
        /// Representative word; empty for the base vertex.
        #[arg(long, default_value = "")]
        vertex: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the left-greedy normal form of a word.
    Nf { word: String },
    /// Decide whether two words are equal in B₄; exits 1 if not.
    Eq { w1: String, w2: String },
    /// List the positive length-3 spellings of x.
    Spellings,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Presentation,
    Link,
    Action,
    Curvature,
    Oracle,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Presentation => Suite::Presentation,
            SuiteArg::Link => Suite::Link,
            SuiteArg::Action => Suite::Action,
            SuiteArg::Curvature => Suite::Curvature,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
}

enum Outcome {
    Pass,
    Fail,
}

fn run(cmd: Command) -> Result<Outcome, String> {
    match cmd {
        Command::Verify { suite, radius, samples, seed } => {
            let opts = VerifyOptions { radius, samples, seed };
            let report = run_suite(suite.into(), &opts).map_err(|e| e.to_string())?;
            print!("{report}");
            eprintln!("duration {:.3}s", report.duration.as_secs_f64());
            Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Ball { radius, out } => {
            let ball = build_ball(radius).map_err(|e| e.to_string())?;
            fs::write(&out, ball.to_text()).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
            Ok(Outcome::Pass)
        }
        Command::Link { vertex, format } => {
            let word = parse_word(&vertex).map_err(|e| e.to_string())?;
            let lk = link(&coset_key(&word));
            match format {
                Format::Text => print!("{}", lk.to_text()),
                Format::Dot => print!("{}", lk.to_dot()),
            }
            Ok(Outcome::Pass)
        }
        Command::Nf { word } => {
            let word = parse_word(&word).map_err(|e| e.to_string())?;
            println!("{}", NormalForm::from_word(&word));
            Ok(Outcome::Pass)
        }
        Command::Eq { w1, w2 } => {
            let u = parse_word(&w1).map_err(|e| format!("first word: {e}"))?;
            let v = parse_word(&w2).map_err(|e| format!("second word: {e}"))?;
            if equals(&u, &v) {
                println!("equal");
                Ok(Outcome::Pass)
            } else {
                println!("not equal");
                Ok(Outcome::Fail)
            }
        }
        Command::Spellings => {
            for s in spellings_of_x() {
                println!("{s}");
            }
            Ok(Outcome::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
