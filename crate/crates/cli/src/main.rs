use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use srx::balanced::{verify_balanced_labels, BalancedComplex};
use srx::format::{emit_json, emit_text, parse_input};
use srx::harness::prospect::{prospect, Predicate, ProspectConfig};
use srx::harness::{run_check, write_witnesses, Status};
use srx::poset::{face_label, truncated_subdivision};
use srx::{analyze, higher_nerve, Error, FieldSpec, SimplicialComplex};

#[derive(Parser)]
#[command(name = "srx", version, about = "Depth, Serre level and rank-selection diagnostics for simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report f/h-vectors, Betti numbers, depth, Serre level and property flags.
    Analyze {
        /// Facet list file, or - for stdin.
        #[arg(default_value = "-")]
        file: String,
        /// 0 (or Q) for the rationals, otherwise a prime.
        #[arg(long, default_value = "0")]
        field: FieldSpec,
        #[arg(long)]
        json: bool,
    },
    /// Run theorem checks; exits 1 if any check fails.
    Verify {
        file: String,
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, default_value = "0")]
        field: FieldSpec,
        #[arg(long)]
        json: bool,
        /// Write witnesses of failing checks here.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Print the higher nerve N_K on facet indices 1..r.
    Nerve {
        file: String,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the truncated subdivision [Δ]_{>J}.
    Subdivide {
        file: String,
        #[arg(long)]
        above: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the rank-selected subcomplex on the given color classes.
    RankSelect {
        file: String,
        /// 1-based class indices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
        /// Color classes as "a,b;c,d". Without it, colors come from the
        /// cardinality of subdivision labels such as {1,5}.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Search seeded random pure complexes for a predicate.
    Prospect {
        #[arg(long)]
        vertices: usize,
        /// Facet dimension (facets have dim + 1 vertices).
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// s2-gap, s2-noise or betti-twin.
        #[arg(long)]
        predicate: String,
        #[arg(long, default_value = "0")]
        field: FieldSpec,
    },
}

/// Failure that maps to an exit code.
enum Failure {
    /// Exit 1: a check or self-consistency test failed.
    Check(String),
    /// Exit 2: bad usage or input.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_complex(file: &str) -> Result<SimplicialComplex, Failure> {
    let bytes = if file == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        std::fs::read(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?
    };
    let parsed = parse_input(&bytes).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
    for w in &parsed.warnings {
        eprintln!("warning: {file}: {w}");
    }
    Ok(parsed.complex)
}

fn emit(c: &SimplicialComplex, json: bool) -> Result<String, Failure> {
    if json {
        Ok(emit_json(c))
    } else {
        emit_text(c).map_err(|e| Failure::Usage(format!("{e}; use --json")))
    }
}

/// Elements of a subdivision label `{a,b,{c,d}}` at brace depth one.
fn label_cardinality(label: &str) -> Option<usize> {
    let inner = label.strip_prefix('{')?.strip_suffix('}')?;
    if inner.is_empty() {
        return Some(0);
    }
    let mut depth = 0i32;
    let mut parts = 1;
    for ch in inner.chars() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => parts += 1,
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    (depth == 0).then_some(parts)
}

fn infer_coloring(c: &SimplicialComplex) -> Result<BalancedComplex, Failure> {
    let mut sizes = std::collections::BTreeMap::<usize, Vec<&str>>::new();
    for l in c.labels() {
        let k = label_cardinality(l).ok_or_else(|| {
            Failure::Usage(format!(
                "label {l:?} is not a subdivision vertex; pass --partition to color the complex"
            ))
        })?;
        sizes.entry(k).or_default().push(l);
    }
    let classes: Vec<Vec<&str>> = sizes.into_values().collect();
    Ok(verify_balanced_labels(c, &classes)?)
}

fn parse_partition(text: &str) -> Vec<Vec<String>> {
    text.split(';')
        .map(|cl| {
            cl.split(',')
                .map(|l| l.trim().to_string())
                .filter(|l| !l.is_empty())
                .collect()
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Analyze { file, field, json } => {
            let c = read_complex(&file)?;
            let report = analyze(&c, field)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?;
            } else {
                write!(out, "{report}")?;
            }
        }
        Command::Verify {
            file,
            check,
            field,
            json,
            witness_dir,
        } => {
            let c = read_complex(&file)?;
            let results = run_check(&check, &c, field)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&results).expect("results serialize"))?;
            } else {
                for r in &results {
                    let tag = match r.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Inapplicable => "N/A ",
                    };
                    writeln!(out, "{tag} {}: {}", r.check, r.detail)?;
                    for n in &r.notes {
                        writeln!(out, "     note: {n}")?;
                    }
                    if let Some(w) = &r.witness {
                        writeln!(out, "     witness: {w}")?;
                    }
                }
            }
            if let Some(dir) = witness_dir {
                for p in write_witnesses(&dir, &results)? {
                    eprintln!("witness written to {}", p.display());
                }
            }
            let failed = results.iter().filter(|r| r.status == Status::Fail).count();
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} check(s) failed")));
            }
        }
        Command::Nerve { file, index, json } => {
            let c = read_complex(&file)?;
            let n = higher_nerve(&c, index)?;
            if !json {
                for (i, f) in c.facets().iter().enumerate() {
                    writeln!(out, "# {} = {}", i + 1, face_label(&c, f))?;
                }
            }
            write!(out, "{}", emit(&n, json)?)?;
        }
        Command::Subdivide { file, above, json } => {
            let c = read_complex(&file)?;
            let sd = truncated_subdivision(&c, above)?;
            write!(out, "{}", emit(sd.complex(), json)?)?;
        }
        Command::RankSelect {
            file,
            keep,
            partition,
            json,
        } => {
            let c = read_complex(&file)?;
            let b = match partition {
                Some(p) => verify_balanced_labels(&c, &parse_partition(&p))?,
                None => infer_coloring(&c)?,
            };
            let sel = b.rank_select(&keep.into_iter().collect())?;
            write!(out, "{}", emit(sel.complex(), json)?)?;
        }
        Command::Prospect {
            vertices,
            dim,
            count,
            seed,
            predicate,
            field,
        } => {
            let predicate: Predicate = predicate.parse()?;
            let mut cfg = ProspectConfig::new(vertices, dim, count, seed, predicate);
            cfg.field = field;
            let report = prospect(&cfg)?;
            write!(out, "{}", report.to_json())?;
        }
    }
    Ok(())
}

fn init_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("SRX_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Failure::Usage(format!("SRX_THREADS={v:?} is not a positive integer")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_threads().and_then(|_| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("srx: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("srx: {msg}");
            ExitCode::from(2)
        }
    }
}
