//! `markov`: command-line access to Markov numbers, the stable norm and
//! the monotonicity checks.
//!
//! Data goes to stdout (or `--out`), diagnostics and wall time to stderr.
//! Exit status: 0 success, 1 a mathematical violation was found, 2 usage
//! error.

mod ball;
mod records;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use markov_core::conjectures::{frobenius_scan, verify_family};
use markov_core::counting::{count_lattice, count_triples, count_triples_parallel};
use markov_core::indexing::{christoffel_word, markov_of_slope, stern_brocot_path, word_matrix};
use markov_core::norm::{norm_real, stable_norm};
use markov_core::triples::{enumerate_tree, LabeledTriple};
use markov_core::{Error, Family, LatticeVector, Slope};
use num_bigint::BigUint;

use records::*;

#[derive(Parser)]
#[command(
    name = "markov",
    version,
    about = "Markov numbers, the stable norm and Aigner's conjectures"
)]
struct Cli {
    /// Write data to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Numerator,
    Denominator,
    Sum,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Numerator => Family::Numerator,
            FamilyArg::Denominator => Family::Denominator,
            FamilyArg::Sum => Family::Sum,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BallFormat {
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Markov number, tree path, Christoffel word, trace and norm of p/q.
    Slope {
        /// Reduced fraction p/q in [0, 1].
        fraction: String,
    },
    /// Check a monotonicity family exhaustively up to a bound.
    Verify {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long = "max", value_name = "N")]
        max: u64,
    },
    /// Sample the boundary of the stable-norm unit ball.
    Ball {
        #[arg(long, value_name = "N")]
        max_q: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: BallFormat,
        /// Overlay the horizontal, vertical and diagonal lines through (q, p)
        /// on the level set of its norm (SVG only).
        #[arg(long, value_name = "q,p")]
        witness: Option<String>,
    },
    /// List the Markov tree below (1, 2, 5), level by level.
    Tree {
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Certified enclosure of the stable norm at a real point.
    Norm {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(allow_negative_numbers = true)]
        y: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Count Markov triples with maximum at most R.
    Count {
        r: BigUint,
        /// Also count slopes p/q with m_{p/q} ≤ R on the lattice side.
        #[arg(long)]
        lattice: bool,
        /// Count on a single thread.
        #[arg(long)]
        serial: bool,
    },
    /// Scan all Markov numbers up to a bound for repeated values.
    Frobenius {
        #[arg(long)]
        bound: BigUint,
        /// Include every value found with its slopes.
        #[arg(long)]
        list: bool,
    },
}

/// What a subcommand produced.
struct Outcome {
    data: String,
    violation: bool,
}

impl Outcome {
    fn ok(data: String) -> Self {
        Outcome {
            data,
            violation: false,
        }
    }
}

fn json<T: serde::Serialize>(record: &T) -> String {
    let mut s = serde_json::to_string_pretty(record).expect("records serialize");
    s.push('\n');
    s
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Slope { fraction } => {
            let s: Slope = fraction.parse()?;
            let m = markov_of_slope(s);
            let word = christoffel_word(s);
            let path = match stern_brocot_path(s) {
                Ok(p) => Some(p.to_string()),
                Err(Error::OutOfRange { .. }) => None,
                Err(e) => return Err(e),
            };
            let record = SlopeRecord {
                schema: SlopeRecord::SCHEMA.into(),
                p: s.p(),
                q: s.q(),
                markov: m.to_string(),
                path,
                word: word.to_string(),
                trace: word_matrix(&word).trace().to_string(),
                norm: stable_norm(s.vector())?,
            };
            Ok(Outcome::ok(json(&record)))
        }
        Command::Verify { family, max } => {
            let report = verify_family(family.into(), max)?;
            eprintln!("verify: {} cases in {:.3?}", report.cases, report.elapsed);
            let record = VerifyRecord::from(&report);
            Ok(Outcome {
                data: json(&record),
                violation: !report.is_verified(),
            })
        }
        Command::Ball {
            max_q,
            format,
            witness,
        } => {
            let witness = witness.as_deref().map(parse_witness).transpose()?;
            let data = match (format, witness) {
                (BallFormat::Csv, None) => ball::csv(max_q)?,
                (BallFormat::Csv, Some(_)) => {
                    return Err(Error::InvalidArgument(
                        "--witness needs --format svg".into(),
                    ))
                }
                (BallFormat::Svg, w) => ball::svg(max_q, w)?,
            };
            Ok(Outcome::ok(data))
        }
        Command::Tree { depth } => {
            let nodes = enumerate_tree(depth)
                .map(|(path, t)| {
                    let (p, q) = LabeledTriple::branch_root().descend(&path).slope();
                    TreeNode {
                        path: path.to_string(),
                        slope: format!("{p}/{q}"),
                        triple: [t.small.to_string(), t.mid.to_string(), t.max.to_string()],
                    }
                })
                .collect();
            Ok(Outcome::ok(json(&TreeRecord {
                schema: TreeRecord::SCHEMA.into(),
                depth,
                nodes,
            })))
        }
        Command::Norm { x, y, tol } => {
            let (interval, limited) = match norm_real(x, y, tol) {
                Ok(i) => (i, false),
                Err(Error::AccuracyLimit { interval, steps }) => {
                    eprintln!("norm: tolerance {tol} not reached after {steps} refinements");
                    (interval, true)
                }
                Err(e) => return Err(e),
            };
            let record = NormRecord {
                schema: NormRecord::SCHEMA.into(),
                x,
                y,
                lo: interval.lo,
                hi: interval.hi,
                width: interval.width(),
                accuracy_limited: limited,
            };
            Ok(Outcome::ok(json(&record)))
        }
        Command::Count { r, lattice, serial } => {
            if r < BigUint::from(1u32) {
                return Err(Error::InvalidArgument("R must be at least 1".into()));
            }
            let count = if serial {
                count_triples(&r)
            } else {
                count_triples_parallel(&r)
            };
            let l = markov_core::norm::ln_big(&r);
            let record = CountRecord {
                schema: CountRecord::SCHEMA.into(),
                r: r.to_string(),
                count,
                c_estimate: (r > BigUint::from(1u32)).then(|| count as f64 / (l * l)),
                lattice: lattice.then(|| count_lattice(&r)),
            };
            Ok(Outcome::ok(json(&record)))
        }
        Command::Frobenius { bound, list } => {
            let report = frobenius_scan(&bound);
            let record = FrobeniusRecord::new(&bound, &report, list);
            Ok(Outcome {
                data: json(&record),
                violation: !report.duplicates.is_empty(),
            })
        }
    }
}

fn parse_witness(s: &str) -> Result<LatticeVector, Error> {
    let bad = |reason: &str| Error::Parse {
        input: s.into(),
        reason: reason.into(),
    };
    let (q, p) = s.split_once(',').ok_or_else(|| bad("expected q,p"))?;
    let q: i64 = q.trim().parse().map_err(|_| bad("q is not an integer"))?;
    let p: i64 = p.trim().parse().map_err(|_| bad("p is not an integer"))?;
    let v = LatticeVector::new(q, p);
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match run(cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &outcome.data),
        None => io::stdout().lock().write_all(outcome.data.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    eprintln!("wall time: {:.3?}", start.elapsed());
    if outcome.violation {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
