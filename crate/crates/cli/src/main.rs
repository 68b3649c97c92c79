use std::io::{self, IsTerminal};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mdsl_core::apps::{self, Session};
use mdsl_core::frontend::{preprocess_file, repl::run_source, Interpreter, LangError, Repl};

#[derive(Parser)]
#[command(name = "mdsl", version, about = "Discrete mathematics expression language")]
struct Cli {
    /// Seed for `shuffle` and other randomized builtins
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Interactive session
    Repl {
        /// Prompt text; defaults to `mdsl> ` on a terminal and nothing otherwise
        #[arg(long)]
        prompt: Option<String>,
    },
    /// Evaluate a source file, printing each result
    Run { file: PathBuf },
    /// Translate a source file to canonical core text
    Pp {
        /// Name used in diagnostics
        origname: String,
        input: PathBuf,
        output: PathBuf,
    },
    /// Menu-driven demo programs
    App {
        #[arg(value_enum)]
        name: AppName,
        /// Read answers from standard input and echo them into the transcript
        #[arg(long)]
        batch: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AppName {
    Cipher,
    Rsa,
    Dh,
    Lineq,
    Mers,
}

fn run_file(file: &PathBuf, seed: u64) -> ExitCode {
    let src = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}: {e}", file.display());
            return ExitCode::FAILURE;
        }
    };
    let mut ip = Interpreter::with_seed(seed);
    match run_source(&mut ip, &src, |l| println!("{l}")) {
        Ok(()) => ExitCode::SUCCESS,
        Err((line, err)) => {
            match err {
                LangError::Syntax { pos, msg } => eprintln!("{}:{pos}: {msg}", file.display()),
                other => eprintln!("{}:{line}: {other}", file.display()),
            }
            ExitCode::FAILURE
        }
    }
}

fn run_app(name: AppName, batch: bool) -> io::Result<()> {
    let mut s = Session::new(io::stdin().lock(), io::stdout().lock(), batch);
    match name {
        AppName::Cipher => apps::cipher::run(&mut s),
        AppName::Rsa => apps::rsa::run(&mut s),
        AppName::Dh => apps::dh::run(&mut s),
        AppName::Lineq => apps::lineq::run(&mut s),
        AppName::Mers => apps::mers::run(&mut s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Repl { prompt } => {
            let prompt = prompt.unwrap_or_else(|| if io::stdin().is_terminal() { "mdsl> ".into() } else { String::new() });
            Repl::new(Interpreter::with_seed(cli.seed), prompt).run(io::stdin().lock(), io::stdout().lock())
        }
        Command::Run { file } => return run_file(&file, cli.seed),
        Command::Pp { origname, input, output } => {
            return match preprocess_file(&origname, &input, &output) {
                Ok(()) => ExitCode::SUCCESS,
                Err(msg) => {
                    eprintln!("{msg}");
                    ExitCode::FAILURE
                }
            };
        }
        Command::App { name, batch } => run_app(name, batch),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mdsl: {e}");
            ExitCode::FAILURE
        }
    }
}
