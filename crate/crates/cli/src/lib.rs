//! The `rkp` command line, as a function from arguments and stdin to
//! output streams and an exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{error::ErrorKind, ArgGroup, Parser, Subcommand, ValueEnum};
use rkprofile::{
    catalog, counts, decomposition, enumerate_profiles, is_boolean_lattice, is_isomorphic,
    is_lattice, monotonicity, oracle_product, pareto_product, parse, product_many, render_ascii,
    render_dot, serialize, validate_profile, DecompositionReport, Error, RkProfile,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub code: i32,
}

impl Output {
    pub fn stdout_str(&self) -> &str {
        std::str::from_utf8(&self.stdout).expect("output is UTF-8")
    }

    pub fn stderr_str(&self) -> &str {
        std::str::from_utf8(&self.stderr).expect("output is UTF-8")
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rkp",
    version,
    about = "Rudin-Keisler profiles of Ehrenfeucht theories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the status of every admissibility condition
    Validate { file: String },
    /// Print the prime/limit decomposition and the per-class table
    Report {
        file: String,
        /// Factor profile; repeat to describe the file as their product
        #[arg(long = "factor", value_name = "FILE")]
        factors: Vec<String>,
    },
    /// Write the Pareto product of the given profiles
    Product {
        #[arg(required = true)]
        files: Vec<String>,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
    },
    /// Compare the product against explicit pair enumeration
    Oracle { a: String, b: String },
    /// Draw the Hasse diagram of the classes
    Render {
        file: String,
        #[arg(long, value_enum)]
        format: Format,
    },
    /// Named profiles
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// List admissible profiles with a given total, up to isomorphism
    Enumerate {
        #[arg(long)]
        total: u64,
        #[arg(long)]
        max_vertices: Option<u64>,
    },
    /// Test an order-theoretic property
    #[command(group(ArgGroup::new("predicate").required(true).args(["lattice", "boolean", "monotone"])))]
    Check {
        file: String,
        #[arg(long)]
        lattice: bool,
        #[arg(long)]
        boolean: bool,
        #[arg(long)]
        monotone: bool,
    },
    /// Exit 0 iff the two profiles are isomorphic
    Iso { a: String, b: String },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(long = "param", value_name = "KEY=VALUE", value_parser = parse_param)]
        params: Vec<(String, u64)>,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Ascii,
}

fn parse_param(s: &str) -> Result<(String, u64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got `{s}`"))?;
    let v = v
        .parse()
        .map_err(|_| format!("`{v}` is not a non-negative integer"))?;
    Ok((k.to_string(), v))
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidProfile(_) | Error::FactorMismatch => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Session<'a> {
    stdin: &'a [u8],
    out: String,
}

impl Session<'_> {
    fn read(&self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            return String::from_utf8(self.stdin.to_vec())
                .map_err(|_| Failure::usage("stdin: input is not UTF-8"));
        }
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
    }

    fn load(&self, path: &str) -> Result<RkProfile, Failure> {
        let text = self.read(path)?;
        parse(&text).map_err(|e| {
            let f = Failure::from(e);
            Failure {
                message: format!("{path}: {}", f.message),
                ..f
            }
        })
    }

    fn emit(&mut self, text: &str, output: Option<&Path>) -> Result<(), Failure> {
        match output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
            None => {
                self.out.push_str(text);
                Ok(())
            }
        }
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.out.push_str(text.as_ref());
        self.out.push('\n');
    }
}

/// Runs one command line. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, stdin: &[u8]) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string().into_bytes();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    stdout: text,
                    stderr: Vec::new(),
                    code: EXIT_OK,
                },
                _ => Output {
                    stdout: Vec::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                },
            };
        }
    };
    let mut session = Session {
        stdin,
        out: String::new(),
    };
    let (code, stderr) = match dispatch(&mut session, cli.command) {
        Ok(code) => (code, String::new()),
        Err(f) => (f.code, format!("error: {}\n", f.message)),
    };
    Output {
        stdout: session.out.into_bytes(),
        stderr: stderr.into_bytes(),
        code,
    }
}

fn dispatch(s: &mut Session, command: Command) -> Result<i32, Failure> {
    match command {
        Command::Validate { file } => {
            let p = s.load(&file)?;
            let report = validate_profile(&p);
            s.out.push_str(&report.to_string());
            if report.is_admissible() {
                s.line("admissible");
                Ok(EXIT_OK)
            } else {
                s.line("not admissible");
                Ok(EXIT_CHECK_FAILED)
            }
        }
        Command::Report { file, factors } => {
            let p = s.load(&file)?;
            let factors = factors
                .iter()
                .map(|f| s.load(f))
                .collect::<Result<Vec<_>, _>>()?;
            let report = counts(&p)?;
            let d = decomposition(&p, (!factors.is_empty()).then_some(&factors[..]))?;
            s.line(report.equation());
            s.line(format!("decomposition {}", d.equation()));
            if factors.is_empty() {
                write_class_table(s, &report);
            } else {
                s.line("classes\tsize\til");
                for t in &d.term_table {
                    let names: Vec<&str> = t.factor_classes.iter().map(|v| v.as_str()).collect();
                    s.line(format!(
                        "{}\t{}\t{}",
                        names.join(","),
                        t.size,
                        t.limit_count
                    ));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Product { files, output } => {
            let factors = files
                .iter()
                .map(|f| s.load(f))
                .collect::<Result<Vec<_>, _>>()?;
            let text = serialize(&product_many(&factors)?)?;
            s.emit(&text, output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Oracle { a, b } => {
            let (a, b) = (s.load(&a)?, s.load(&b)?);
            let fast = pareto_product(&a, &b)?;
            let slow = oracle_product(&a, &b)?;
            for (label, p) in [("pareto_product", &fast), ("oracle_product", &slow)] {
                let r = counts(p)?;
                let limits: Vec<String> = r.limit_multiset().iter().map(u64::to_string).collect();
                s.line(format!(
                    "{label}: {}; limits {}",
                    r.equation(),
                    limits.join(" ")
                ));
            }
            if is_isomorphic(&fast, &slow)? {
                s.line("isomorphic");
                Ok(EXIT_OK)
            } else {
                s.line("not isomorphic");
                Ok(EXIT_CHECK_FAILED)
            }
        }
        Command::Render { file, format } => {
            let p = s.load(&file)?;
            let text = match format {
                Format::Dot => render_dot(&p)?,
                Format::Ascii => render_ascii(&p)?,
            };
            s.out.push_str(&text);
            Ok(EXIT_OK)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for e in catalog::entries() {
                    let params = if e.parameters.is_empty() {
                        "-".to_string()
                    } else {
                        e.parameters.join(",")
                    };
                    s.line(format!("{}\t{params}\t{}", e.name, e.description));
                }
                Ok(EXIT_OK)
            }
            CatalogAction::Show {
                name,
                params,
                output,
            } => {
                let mut map = BTreeMap::new();
                for (k, v) in params {
                    if map.insert(k.clone(), v).is_some() {
                        return Err(Failure::usage(format!("parameter `{k}` given twice")));
                    }
                }
                let text = serialize(&catalog::get(&name, &map)?)?;
                s.emit(&text, output.as_deref())?;
                Ok(EXIT_OK)
            }
        },
        Command::Enumerate {
            total,
            max_vertices,
        } => {
            let result = enumerate_profiles(total, max_vertices)?;
            s.line(result.len().to_string());
            s.line(format!("# admissible profiles with total {total}"));
            for (i, p) in result.profiles.iter().enumerate() {
                if i > 0 {
                    s.line("---");
                }
                s.out.push_str(p.as_str());
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            file,
            lattice,
            boolean,
            monotone,
        } => {
            let p = s.load(&file)?;
            let q = p.quotient();
            let holds = if lattice {
                let holds = is_lattice(q);
                s.line(format!("lattice: {holds}"));
                holds
            } else if boolean {
                let holds = match is_boolean_lattice(q) {
                    Ok(b) => b,
                    Err(Error::NotALattice) => false,
                    Err(e) => return Err(e.into()),
                };
                s.line(format!("boolean lattice: {holds}"));
                holds
            } else {
                debug_assert!(monotone);
                let m = monotonicity(&p)?;
                s.line(format!("size: {}", m.size));
                s.line(format!("limit: {}", m.limit));
                true
            };
            Ok(if holds { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Iso { a, b } => {
            let (a, b) = (s.load(&a)?, s.load(&b)?);
            if is_isomorphic(&a, &b)? {
                s.line("isomorphic");
                Ok(EXIT_OK)
            } else {
                s.line("not isomorphic");
                Ok(EXIT_CHECK_FAILED)
            }
        }
    }
}

fn write_class_table(s: &mut Session, report: &DecompositionReport) {
    let mut table = String::from("class\tsize\til\n");
    for t in &report.class_terms {
        writeln!(table, "{}\t{}\t{}", t.representative, t.size, t.limit_count).unwrap();
    }
    s.out.push_str(&table);
}
