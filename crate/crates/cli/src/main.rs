//! Command-line front end for step-set alignment counting.
//!
//! Verbs: `count`, `parts`, `enumerate`, `sample`, `diagonal`, `formula`,
//! `approx`, `verify`, `table4`, `table5`, `gf`. Step sets are written in a
//! small expression language (see the `dsl` module of the library or the
//! README); lengths are comma-separated. `--json` switches every verb to a
//! single JSON object with the same numeric content as the text output;
//! exact counts are decimal strings there, never floats.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 enumeration cap exceeded.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use aligncount::dsl::parse_step_set;
use aligncount::engine::{
    count_with_parts, enumerate_capped, CountTable, Sampler, DEFAULT_ENUMERATION_CAP,
};
use aligncount::formulas::{catalog, eval_approx, eval_exact, FormulaId};
use aligncount::genfunc::{fixed_k_coefficients, series_coefficients};
use aligncount::par::Parallelism;
use aligncount::step::{LengthTuple, StepSet, ValidatedStepSet};
use aligncount::verify::verify_catalog;
use aligncount::Error;

#[derive(Parser)]
#[command(name = "aligncount", version, about = "Count alignments with arbitrary step sets")]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact number of alignments.
    Count {
        /// Step-set expression, e.g. "{(1,1),(1,2),(2,1)}" or "unit(3)".
        #[arg(long)]
        steps: String,
        /// Comma-separated sequence lengths, e.g. "4,5".
        #[arg(long)]
        lengths: String,
    },
    /// Number of alignments with exactly k columns.
    Parts {
        #[arg(long)]
        steps: String,
        #[arg(long)]
        lengths: String,
        #[arg(short, long)]
        k: u64,
    },
    /// List every alignment, one matrix per line.
    Enumerate {
        #[arg(long)]
        steps: String,
        #[arg(long)]
        lengths: String,
        /// Refuse when more alignments than this exist.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Draw alignments uniformly at random.
    Sample {
        #[arg(long)]
        steps: String,
        #[arg(long)]
        lengths: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of samples.
        #[arg(short, long, default_value_t = 1)]
        n: u64,
    },
    /// Diagonal counts a(l, ..., l) for l = 1..=max.
    Diagonal {
        #[arg(long)]
        steps: String,
        #[arg(long)]
        max: u32,
    },
    /// Evaluate an exact closed-form formula from the catalog.
    Formula {
        /// Formula identifier; see --list.
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        lengths: Option<String>,
        /// List the formula catalog.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate an approximate (asymptotic) formula from the catalog.
    Approx {
        #[arg(long)]
        id: String,
        #[arg(long)]
        lengths: Option<String>,
        /// Largest part M for comp_boundedM_asym.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Check every catalogued formula and the series expansion against the
    /// counting table over a box; exits 1 on any mismatch.
    Verify {
        /// Largest length per coordinate.
        #[arg(long, default_value_t = 8)]
        max_len: u32,
        /// Run checks one at a time instead of on the thread pool.
        #[arg(long)]
        sequential: bool,
    },
    /// Diagonal counts for S = {1,2}^3 and the classical columns, side by
    /// side, for l = 1..=max.
    Table4 {
        #[arg(long, default_value_t = 10)]
        max: u32,
    },
    /// Exact vs. asymptotic diagonal counts for S = {1,2}^3 with relative
    /// errors, for l = 1..=max.
    Table5 {
        #[arg(long, default_value_t = 20)]
        max: u32,
    },
    /// Coefficients of the counting series over a box (all columns, or
    /// exactly k columns with --k).
    Gf {
        #[arg(long)]
        steps: String,
        /// Box bounds, comma-separated.
        #[arg(long = "box")]
        bounds: String,
        #[arg(short, long)]
        k: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::EnumerationCapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Rows plus their text rendering; both views carry the same numbers.
struct Report {
    command: &'static str,
    inputs: Value,
    rows: Vec<Value>,
    lines: Vec<String>,
}

impl Report {
    fn print(&self, as_json: bool) {
        if as_json {
            let obj = json!({
                "command": self.command,
                "inputs": self.inputs,
                "rows": self.rows,
            });
            println!("{}", obj);
        } else {
            for line in &self.lines {
                println!("{}", line);
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let mut exit = ExitCode::SUCCESS;
    let report = match cli.cmd {
        Cmd::Count { steps, lengths } => {
            let set = parse_steps(&steps)?;
            let l = parse_lengths(&lengths, &set)?;
            let value = aligncount::engine::count(&set, &l)?;
            Report {
                command: "count",
                inputs: json!({"steps": steps, "lengths": l.lengths()}),
                rows: vec![json!({"count": value.to_string()})],
                lines: vec![value.to_string()],
            }
        }
        Cmd::Parts { steps, lengths, k } => {
            let set = parse_steps(&steps)?;
            let l = parse_lengths(&lengths, &set)?;
            let value = count_with_parts(&set, &l, k)?;
            Report {
                command: "parts",
                inputs: json!({"steps": steps, "lengths": l.lengths(), "k": k}),
                rows: vec![json!({"count": value.to_string()})],
                lines: vec![value.to_string()],
            }
        }
        Cmd::Enumerate { steps, lengths, cap } => {
            let set = parse_steps(&steps)?;
            let l = parse_lengths(&lengths, &set)?;
            let matrices = enumerate_capped(&set, &l, cap)?;
            let rows = matrices.iter().map(|m| json!({"matrix": matrix_value(m)})).collect();
            let lines = matrices.iter().map(|m| m.to_string()).collect();
            Report {
                command: "enumerate",
                inputs: json!({"steps": steps, "lengths": l.lengths(), "cap": cap}),
                rows,
                lines,
            }
        }
        Cmd::Sample { steps, lengths, seed, n } => {
            let set = parse_steps(&steps)?;
            let l = parse_lengths(&lengths, &set)?;
            let sampler = Sampler::new(&set, &l)?;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for m in sampler.sample_many(seed, n as usize) {
                rows.push(json!({"matrix": matrix_value(&m)}));
                lines.push(m.to_string());
            }
            Report {
                command: "sample",
                inputs: json!({"steps": steps, "lengths": l.lengths(), "seed": seed, "n": n}),
                rows,
                lines,
            }
        }
        Cmd::Diagonal { steps, max } => {
            let set = parse_steps(&steps)?;
            let bounds = LengthTuple::diagonal(max, set.dimension());
            let table = CountTable::fill(&set, &bounds)?;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for l in 1..=max {
                let v = table.get(&vec![l; set.dimension()]).unwrap();
                rows.push(json!({"l": l, "count": v.to_string()}));
                lines.push(format!("{} {}", l, v));
            }
            Report {
                command: "diagonal",
                inputs: json!({"steps": steps, "max": max}),
                rows,
                lines,
            }
        }
        Cmd::Formula { id, lengths, list } => {
            if list {
                let rows: Vec<Value> = catalog()
                    .iter()
                    .map(|info| {
                        json!({
                            "id": info.id.to_string(),
                            "exact": info.exact,
                            "diagonal_only": info.diagonal_only,
                            "case": info.case,
                        })
                    })
                    .collect();
                let lines = catalog()
                    .iter()
                    .map(|info| {
                        format!(
                            "{:<20} {:<7} {}",
                            info.id.to_string(),
                            if info.exact { "exact" } else { "approx" },
                            info.case
                        )
                    })
                    .collect();
                Report { command: "formula", inputs: json!({"list": true}), rows, lines }
            } else {
                let id = id.ok_or_else(|| Error::Parse("--id is required".into()))?;
                let id = FormulaId::from_str(&id)?;
                let lengths =
                    lengths.ok_or_else(|| Error::Parse("--lengths is required".into()))?;
                let l = parse_lengths_free(&lengths)?;
                let value = eval_exact(id, &l)?;
                Report {
                    command: "formula",
                    inputs: json!({"id": id.to_string(), "lengths": l.lengths()}),
                    rows: vec![json!({"value": value.to_string()})],
                    lines: vec![value.to_string()],
                }
            }
        }
        Cmd::Approx { id, lengths, m } => {
            let id = FormulaId::from_str(&id)?;
            let l = lengths.as_deref().map(parse_lengths_free).transpose()?;
            let value = eval_approx(id, l.as_ref(), m)?;
            let (mantissa, exponent) = value.mantissa_exponent();
            Report {
                command: "approx",
                inputs: json!({
                    "id": id.to_string(),
                    "lengths": l.as_ref().map(|t| t.lengths().to_vec()),
                    "m": m,
                }),
                rows: vec![json!({
                    "value": value.value,
                    "log10": value.log10,
                    "mantissa": mantissa,
                    "exponent": exponent,
                })],
                lines: vec![value.to_string()],
            }
        }
        Cmd::Verify { max_len, sequential } => {
            let mode = if sequential { Parallelism::Sequential } else { Parallelism::Parallel };
            let reports = verify_catalog(max_len, mode)?;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            let mut failed = 0usize;
            for r in &reports {
                rows.push(json!({
                    "name": r.name,
                    "checked": r.checked,
                    "ok": r.ok,
                    "detail": r.detail,
                }));
                if r.ok {
                    lines.push(format!("ok   {} ({} points)", r.name, r.checked));
                } else {
                    failed += 1;
                    lines.push(format!(
                        "FAIL {}: {}",
                        r.name,
                        r.detail.as_deref().unwrap_or("mismatch")
                    ));
                }
            }
            lines.push(format!("{} checks, {} failed", reports.len(), failed));
            if failed > 0 {
                exit = ExitCode::from(1);
            }
            Report {
                command: "verify",
                inputs: json!({"max_len": max_len, "sequential": sequential}),
                rows,
                lines,
            }
        }
        Cmd::Table4 { max } => {
            let (box12, classical) = diagonal_pair(max)?;
            let mut rows = Vec::new();
            let mut lines = vec!["# l box12 classical".to_string()];
            for l in 1..=max as usize {
                rows.push(json!({
                    "l": l,
                    "box12": box12[l].to_string(),
                    "classical": classical[l].to_string(),
                }));
                lines.push(format!("{} {} {}", l, box12[l], classical[l]));
            }
            Report { command: "table4", inputs: json!({"max": max}), rows, lines }
        }
        Cmd::Table5 { max } => {
            let set = StepSet::Box { low: 1, high: 2, dimension: 3 }.validate()?;
            let table = CountTable::fill(&set, &LengthTuple::diagonal(max, 3))?;
            let mut rows = Vec::new();
            let mut lines = vec!["# l exact approx rel_error".to_string()];
            for l in 1..=max {
                let exact = table.get(&[l, l, l]).unwrap();
                let approx = eval_approx(
                    FormulaId::Box12Asym,
                    Some(&LengthTuple::diagonal(l, 3)),
                    None,
                )?;
                let exact_f = exact.to_f64().unwrap_or(f64::INFINITY);
                let rel = (exact_f - approx.value).abs() / approx.value;
                rows.push(json!({
                    "l": l,
                    "exact": exact.to_string(),
                    "approx": approx.value,
                    "rel_error": rel,
                }));
                lines.push(format!("{} {} {:.2} {:.3}", l, exact, approx.value, rel));
            }
            Report { command: "table5", inputs: json!({"max": max}), rows, lines }
        }
        Cmd::Gf { steps, bounds, k } => {
            let set = parse_steps(&steps)?;
            let b = parse_lengths(&bounds, &set)?;
            let series = match k {
                Some(k) => fixed_k_coefficients(&set, &b, k)?,
                None => series_coefficients(&set, &b)?,
            };
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            series.for_each(|idx, coeff| {
                rows.push(json!({"index": idx, "coeff": coeff.to_string()}));
                lines.push(format!("{} {}", LengthTuple::new(idx.to_vec()), coeff));
            });
            Report {
                command: "gf",
                inputs: json!({"steps": steps, "box": b.lengths(), "k": k}),
                rows,
                lines,
            }
        }
    };
    report.print(cli.json);
    Ok(exit)
}

/// Diagonals of the two reference families up to `max`: `{1,2}^3` and the
/// classical columns `{0,1}^3 - {0}`.
fn diagonal_pair(max: u32) -> Result<(Vec<BigUint>, Vec<BigUint>), Error> {
    let box12 = StepSet::Box { low: 1, high: 2, dimension: 3 }.validate()?;
    let unit3 = StepSet::UnitCube { dimension: 3 }.validate()?;
    let bounds = LengthTuple::diagonal(max, 3);
    let t1 = CountTable::fill(&box12, &bounds)?;
    let t2 = CountTable::fill(&unit3, &bounds)?;
    Ok((t1.diagonal(), t2.diagonal()))
}

fn parse_steps(expr: &str) -> Result<ValidatedStepSet, Error> {
    parse_step_set(expr)?.validate()
}

fn parse_lengths(arg: &str, set: &ValidatedStepSet) -> Result<LengthTuple, Error> {
    let l = parse_lengths_free(arg)?;
    if l.dimension() != set.dimension() {
        return Err(Error::DimensionMismatch {
            expected: set.dimension(),
            found: l.dimension(),
        });
    }
    Ok(l)
}

fn parse_lengths_free(arg: &str) -> Result<LengthTuple, Error> {
    let entries: Result<Vec<u32>, Error> = arg
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad length \"{}\" in \"{}\"", t.trim(), arg)))
        })
        .collect();
    Ok(LengthTuple::new(entries?))
}

fn matrix_value(m: &aligncount::AlignmentMatrix) -> Value {
    let rows: Vec<Vec<u32>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    json!(rows)
}
