use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nrtform::codetools::{self, random_matrix};
use nrtform::format::{
    isometry_to_json, parse_matrix_file, reduction_to_json, witness_from_json, witness_to_json, write_matrix_file,
    FORMAT_VERSION,
};
use nrtform::metric::nrt_weight;
use nrtform::{is_nrt_triangular, nrt_triangular_form, CodeSpace, Error, Field, Isometry, Matrix};

/// Standard forms and analytics for linear codes in NRT spaces.
#[derive(Parser)]
#[command(name = "nrtform", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a generator matrix to NRT-triangular form.
    Reduce {
        #[command(flatten)]
        input: Input,
        /// Write the reduced matrix here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the witness JSON to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Print matrix and witness as one JSON document.
        #[arg(long)]
        json: bool,
    },
    /// Check the NRT-triangular conditions; exit 1 if any fails.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Per-row block weight profiles.
    Weight {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Weight distribution of the code.
    Wdist {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Minimum NRT distance of the code.
    Mindist {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Verify that `--out` equals `S · iso(--in)` for the given witness.
    Verify {
        #[command(flatten)]
        input: Input,
        /// The claimed reduced matrix.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Reproducible random generator matrix or isometry.
    Random {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Number of rows (ignored with --isometry).
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit an isometry JSON document instead of a matrix.
        #[arg(long)]
        isometry: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// Matrix file.
    #[arg(long = "in", value_name = "FILE")]
    path: PathBuf,
}

enum Failure {
    Usage(String),
    Guard(String),
    Negative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::Guard(e.to_string()),
            Error::ZeroCode => Failure::Negative(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(Matrix, CodeSpace), Failure> {
    parse_matrix_file(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn json_line(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Reduce { input, out, witness, json } => {
            let (g, space) = load(&input.path)?;
            let r = nrt_triangular_form(&g, &space)?;
            let text = write_matrix_file(&r.matrix, &space)?;
            if let Some(w) = &witness {
                emit(Some(w), &(witness_to_json(&r.witness) + "\n"))?;
            }
            if let Some(o) = &out {
                emit(Some(o), &text)?;
            }
            if json {
                emit(None, &(reduction_to_json(&r.matrix, &r.witness) + "\n"))?;
            } else if out.is_none() {
                emit(None, &text)?;
            }
            Ok(true)
        }
        Command::Check { input, json } => {
            let (g, space) = load(&input.path)?;
            let report = is_nrt_triangular(&g, &space)?;
            if json {
                let violations: Vec<_> = report
                    .violations
                    .iter()
                    .map(|v| json!({"condition": v.condition.to_string(), "chain": v.chain, "message": v.message}))
                    .collect();
                emit(
                    None,
                    &json_line(json!({
                        "format": FORMAT_VERSION,
                        "nrt_triangular": report.holds(),
                        "trailing_zeros": report.trailing_zeros,
                        "violations": violations,
                    })),
                )?;
            } else {
                emit(None, &format!("{report}\n"))?;
            }
            Ok(report.holds())
        }
        Command::Weight { input, json } => {
            let (g, space) = load(&input.path)?;
            let profiles = (0..g.rows())
                .map(|r| nrt_weight(&g.row_matrix(r), &space))
                .collect::<Result<Vec<_>, _>>()?;
            if json {
                let rows: Vec<_> =
                    profiles.iter().map(|p| json!({"blocks": p.blocks(), "total": p.total()})).collect();
                emit(None, &json_line(json!({"format": FORMAT_VERSION, "rows": rows})))?;
            } else {
                let mut text = String::new();
                for (r, p) in profiles.iter().enumerate() {
                    let blocks: Vec<String> = p.blocks().iter().map(usize::to_string).collect();
                    text += &format!("row {}: {} | total {}\n", r + 1, blocks.join(" "), p.total());
                }
                emit(None, &text)?;
            }
            Ok(true)
        }
        Command::Wdist { input, json } => {
            let (g, space) = load(&input.path)?;
            let d = codetools::weight_distribution(&g, &space)?;
            if json {
                // counts[w] is the number of codewords of weight w
                emit(None, &json_line(json!({"format": FORMAT_VERSION, "size": d.size(), "counts": d.counts()})))?;
            } else {
                emit(None, &d.to_string())?;
            }
            Ok(true)
        }
        Command::Mindist { input, json } => {
            let (g, space) = load(&input.path)?;
            let d = codetools::min_distance(&g, &space)?;
            let text = if json { json_line(json!({"format": FORMAT_VERSION, "min_distance": d})) } else { format!("{d}\n") };
            emit(None, &text)?;
            Ok(true)
        }
        Command::Verify { input, out, witness, json } => {
            let (g_in, s_in) = load(&input.path)?;
            let (g_out, s_out) = load(&out)?;
            let w = witness_from_json(&read(&witness)?)
                .map_err(|e| Failure::Usage(format!("{}: {e}", witness.display())))?;
            if s_in != s_out || w.space() != &s_in {
                return Err(Failure::Usage("input, output and witness describe different spaces".to_string()));
            }
            let ok = codetools::verify_witness(&g_in, &g_out, &w)?;
            let verdict = if ok { "PASS" } else { "FAIL" };
            let text = if json { json_line(json!({"format": FORMAT_VERSION, "verified": ok})) } else { format!("{verdict}\n") };
            emit(None, &text)?;
            Ok(ok)
        }
        Command::Random { q, m, n, k, seed, isometry, out } => {
            let space = CodeSpace::new(&Field::new(q)?, m, n)?;
            let text = if isometry {
                isometry_to_json(&Isometry::random(&space, seed)) + "\n"
            } else {
                write_matrix_file(&random_matrix(&space, k, seed), &space)?
            };
            emit(out.as_deref(), &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Negative(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
