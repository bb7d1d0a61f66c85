//! `cyclofactor` command-line tool.
//!
//! Exit codes: 0 success / yes / found, 1 no / check failed / none found,
//! 2 unknown, 3 not constructible here, 4 search bound exceeded,
//! 64 usage error, 65 unreadable or malformed input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use cyclofactor::feasibility::{feasible, Exists};
use cyclofactor::io::{FactorizationDocument, Provenance};
use cyclofactor::search::{enumerate_all, search_starter, SearchConfig};
use cyclofactor::{construct_with, BuildOptions, Error, GroupContext};

const EXIT_NO: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_NOT_CONSTRUCTIBLE: u8 = 3;
const EXIT_BOUND: u8 = 4;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;

/// Cycle length: a number, or `mn` for hamiltonian cycles.
#[derive(Clone, Copy, Debug)]
enum Ell {
    Fixed(usize),
    Hamiltonian,
}

impl FromStr for Ell {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("mn") {
            return Ok(Ell::Hamiltonian);
        }
        s.parse()
            .map(Ell::Fixed)
            .map_err(|_| format!("expected an integer or \"mn\", got {s:?}"))
    }
}

impl Ell {
    fn resolve(self, m: usize, n: usize) -> usize {
        match self {
            Ell::Fixed(l) => l,
            Ell::Hamiltonian => m * n,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(
    name = "cyclofactor",
    version,
    about = "Cyclic 4-cycle and hamiltonian 2-factorizations of K_{m×n}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Params {
    /// Number of parts.
    #[arg(long)]
    m: usize,
    /// Size of each part.
    #[arg(long)]
    n: usize,
    /// Cycle length: 4, mn, or any integer.
    #[arg(long, default_value = "4")]
    ell: Ell,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a cyclic factorization exists.
    Feasible {
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        json: bool,
    },
    /// Build a starter and write it as a document.
    Construct {
        #[command(flatten)]
        p: Params,
        /// Include the expanded factors.
        #[arg(long)]
        expand: bool,
        /// Embed a verification certificate; exit 1 if any check fails.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Step of the hamiltonian cycle [0]_κ when n ≡ 2 (mod 8).
        #[arg(long)]
        kappa: Option<usize>,
    },
    /// Check a document; exit 0 iff every check passes.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Add the expanded factors to a document.
    Expand {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search for a starter in a small group.
    Search {
        #[command(flatten)]
        p: Params,
        /// List all starters up to equivalence instead of stopping at the first.
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = 100)]
        cap: usize,
        /// Largest group order to search (default: $CYCLOFACTOR_SEARCH_BOUND or 48).
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Render the factors of a document.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Directory for the per-factor files; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::NotConstructible { .. } => EXIT_NOT_CONSTRUCTIBLE,
        Error::BoundExceeded { .. } => EXIT_BOUND,
        Error::InfeasibleInput(_) => EXIT_NO,
        Error::BadParameter(_) => EXIT_USAGE,
        Error::Parse(_) | Error::Json(_) | Error::Io(_) => EXIT_PARSE,
        _ => EXIT_NO,
    }
}

fn run(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Feasible { p, json } => {
            GroupContext::new(p.m, p.n)?;
            let v = feasible(p.m, p.n, p.ell.resolve(p.m, p.n));
            if json {
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("{v}");
            }
            Ok(match v.exists {
                Exists::Yes => 0,
                Exists::No => EXIT_NO,
                Exists::Unknown => EXIT_UNKNOWN,
            })
        }
        Command::Construct {
            p,
            expand,
            verify,
            format,
            out,
            kappa,
        } => {
            let ell = p.ell.resolve(p.m, p.n);
            let c = construct_with(p.m, p.n, ell, &BuildOptions { kappa })?;
            let mut doc = FactorizationDocument::from_construction(&c);
            if expand || format == Format::Dot {
                doc.expand()?;
            }
            let mut code = 0;
            if verify {
                let cert = doc.verify()?;
                eprintln!("verification: {}", cert.summary());
                if !cert.overall {
                    code = EXIT_NO;
                }
            }
            match format {
                Format::Json => emit(out.as_deref(), &doc.to_json()?)?,
                Format::Dot => write_dots(out.as_deref(), &doc.to_dot()?)?,
            }
            Ok(code)
        }
        Command::Verify { file, json } => {
            let mut doc = read_doc(&file)?;
            let cert = doc.verify()?;
            if json {
                println!("{}", serde_json::to_string_pretty(cert)?);
            } else {
                for c in &cert.checks {
                    let mark = if c.passed { "pass" } else { "FAIL" };
                    match &c.witness {
                        Some(w) => println!("{mark} {}: {w}", c.id),
                        None => println!("{mark} {}", c.id),
                    }
                }
            }
            Ok(if cert.overall { 0 } else { EXIT_NO })
        }
        Command::Expand { file, out } => {
            let mut doc = read_doc(&file)?;
            doc.expand()?;
            emit(out.as_deref(), &doc.to_json()?)?;
            Ok(0)
        }
        Command::Search {
            p,
            enumerate,
            cap,
            bound,
            json,
        } => {
            let ctx = GroupContext::new(p.m, p.n)?;
            let ell = p.ell.resolve(p.m, p.n);
            let mut cfg = SearchConfig::from_env();
            if let Some(b) = bound {
                cfg.bound = b;
            }
            let provenance = || Provenance {
                case_id: "search".into(),
                citation: "exhaustive backtracking search".into(),
                params: Default::default(),
            };
            if enumerate {
                let e = enumerate_all(&ctx, ell, cap, &cfg)?;
                let docs: Vec<FactorizationDocument> = e
                    .starters
                    .iter()
                    .map(|s| FactorizationDocument::from_starter(s, ell, provenance()))
                    .collect();
                if json {
                    println!("{}", serde_json::to_string_pretty(&docs)?);
                } else {
                    for d in &docs {
                        println!("{}", starter_line(d));
                    }
                }
                let more = if e.truncated { "+ (cap reached)" } else { "" };
                eprintln!("{}{more} starters, {} nodes", docs.len(), e.nodes);
                return Ok(if docs.is_empty() { EXIT_NO } else { 0 });
            }
            let out = search_starter(&ctx, ell, &cfg)?;
            match out.starter {
                Some(s) => {
                    let doc = FactorizationDocument::from_starter(&s, ell, provenance());
                    if json {
                        println!("{}", doc.to_json()?);
                    } else {
                        println!("found after {} nodes: {}", out.nodes, starter_line(&doc));
                    }
                    Ok(0)
                }
                None => {
                    println!("none (exhausted {} nodes)", out.nodes);
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Export { file, format, out } => {
            let doc = read_doc(&file)?;
            match format {
                Format::Dot => write_dots(out.as_deref(), &doc.to_dot()?)?,
                Format::Json => emit(out.as_deref(), &doc.to_json()?)?,
            }
            Ok(0)
        }
    }
}

fn starter_line(doc: &FactorizationDocument) -> String {
    let graphs: Vec<String> = doc
        .starter
        .iter()
        .map(|g| {
            g.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ∪ ")
        })
        .collect();
    format!("{{{}}}", graphs.join(", "))
}

fn read_doc(path: &Path) -> Result<FactorizationDocument, Error> {
    let text = fs::read_to_string(path)?;
    FactorizationDocument::from_json(&text)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn write_dots(dir: Option<&Path>, dots: &[String]) -> Result<(), Error> {
    match dir {
        Some(d) => {
            fs::create_dir_all(d)?;
            for (i, dot) in dots.iter().enumerate() {
                fs::write(d.join(format!("factor_{i:03}.dot")), dot)?;
            }
        }
        None => {
            for dot in dots {
                print!("{dot}");
            }
        }
    }
    Ok(())
}
