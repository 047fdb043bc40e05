use builtmat_cli::commands::{
    cmd_check, cmd_chow, cmd_chow_corpus, cmd_gamma, cmd_gamma_corpus, cmd_m0n, parse_method, CheckKind, Output, EXIT_INPUT,
};
use builtmat_cli::spec::{parse, InstanceSpec, SpecError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Read;
use std::process::ExitCode;

/// Chow polynomials, γ-vectors and descent statistics of built matroids.
#[derive(Parser)]
#[command(name = "builtmat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// JSON instance file; `-` or nothing reads standard input.
    file: Option<String>,
    /// Inline JSON instance, instead of a file.
    #[arg(long, conflicts_with = "file")]
    spec: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Chow polynomial by one or all methods.
    Chow {
        #[command(flatten)]
        input: Input,
        /// fy, deletion, filtration, oracle or all.
        #[arg(long, default_value = "all")]
        method: String,
        /// Run the built-in corpus instead of one instance.
        #[arg(long)]
        corpus: bool,
    },
    /// γ-vector, optionally with the descent formula and the Γ-complex.
    Gamma {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        with_descents: bool,
        #[arg(long)]
        with_complex: bool,
        #[arg(long)]
        corpus: bool,
    },
    /// Structural checks with a witness on failure.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Poincaré polynomials of the moduli spaces of stable rational curves.
    M0n {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    BuildingSet,
    Complete,
    Flag,
    ModularCut,
}

fn read_spec(input: &Input) -> Result<InstanceSpec, SpecError> {
    let text = match (&input.spec, input.file.as_deref()) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) if path != "-" => std::fs::read_to_string(path)
            .map_err(|e| SpecError { location: "input", message: format!("{path}: {e}") })?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| SpecError { location: "input", message: e.to_string() })?;
            s
        }
    };
    parse(&text)
}

fn with_spec(input: &Input, f: impl FnOnce(&InstanceSpec) -> Output) -> Output {
    match read_spec(input) {
        Ok(s) => f(&s),
        Err(e) => Output::input_error(&e),
    }
}

fn run(cli: Cli) -> Output {
    match cli.command {
        Command::Chow { input, method, corpus } => {
            let Some(m) = parse_method(&method) else {
                return Output::input_error(&SpecError { location: "method", message: format!("unknown method {method}") });
            };
            if corpus {
                cmd_chow_corpus(m)
            } else {
                with_spec(&input, |s| cmd_chow(s, m))
            }
        }
        Command::Gamma { input, with_descents, with_complex, corpus } => {
            if corpus {
                cmd_gamma_corpus(with_descents)
            } else {
                with_spec(&input, |s| cmd_gamma(s, with_descents, with_complex))
            }
        }
        Command::Check { input, what } => {
            let kind = match what {
                What::BuildingSet => CheckKind::BuildingSet,
                What::Complete => CheckKind::Complete,
                What::Flag => CheckKind::Flag,
                What::ModularCut => CheckKind::ModularCut,
            };
            with_spec(&input, |s| cmd_check(s, kind))
        }
        Command::M0n { n } => cmd_m0n(n),
    }
}

fn main() -> ExitCode {
    if let Some(k) = std::env::var("BUILTMAT_THREADS").ok().and_then(|t| t.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().ok();
    }
    let out = run(Cli::parse());
    let text = serde_json::to_string(&out.value).expect("serializable");
    if out.code == EXIT_INPUT {
        eprintln!("{text}");
    } else {
        println!("{text}");
    }
    ExitCode::from(out.code as u8)
}
