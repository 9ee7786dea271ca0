//! The `knormal` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
//! Counts are printed as plain decimal digits; in JSON they are strings.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::counting::{Distribution, Extension};
use crate::error::Error;
use crate::oracle::{self, BruteForceOptions, DEFAULT_MAX_BRUTE};
use crate::spectrum;

#[derive(Debug, Parser)]
#[command(
    name = "knormal",
    version,
    about = "Count k-normal elements of F_{q^n} over F_q"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleChoice {
    Brute,
    Cosets,
    ClosedForms,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of k-normal elements N_k.
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// All of N_0, ..., N_n, with the check that they sum to q^n.
    Distribution {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// One row per n with columns N_0, ..., N_{k_max}.
    Table {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = 0)]
        k_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Cross-check the formulas against independent computations.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = OracleChoice::All)]
        oracle: OracleChoice,
        /// Largest q^n the brute-force oracle accepts.
        #[arg(long, default_value_t = DEFAULT_MAX_BRUTE)]
        max_brute: u64,
        /// Number of distinct defining polynomials of F_{q^n} to brute-force.
        #[arg(long, default_value_t = 1)]
        modulus_trials: usize,
    },
    /// Structural data: p, m, s, n_0, d, the degree pattern and ω.
    Factors {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(err: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let text = e.render().to_string();
            match e.exit_code() {
                0 => Outcome::ok(text),
                code => Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                },
            }
        }
    }
}

pub fn execute(command: &Command) -> Outcome {
    let result = match *command {
        Command::Count { q, n, k, format } => cmd_count(q, n, k, format),
        Command::Distribution { q, n, format } => cmd_distribution(q, n, format),
        Command::Table {
            q,
            n_min,
            n_max,
            k_max,
            format,
        } => cmd_table(q, n_min, n_max, k_max, format),
        Command::Verify {
            q,
            n,
            oracle,
            max_brute,
            modulus_trials,
        } => return cmd_verify(q, n, oracle, max_brute, modulus_trials),
        Command::Factors { q, n, format } => cmd_factors(q, n, format),
    };
    result.map_or_else(Outcome::input_error, Outcome::ok)
}

fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("json values serialize");
    s.push('\n');
    s
}

fn extension(q: u64, n: u64) -> Result<Extension, Error> {
    Extension::new(q, n)
}

pub fn cmd_count(q: u64, n: u64, k: u64, format: Format) -> Result<String, Error> {
    let count = extension(q, n)?.count_k_normal(k)?;
    Ok(match format {
        Format::Text => format!("N_{k} = {count}  (q = {q}, n = {n})\n"),
        Format::Csv => format!("q,n,k,count\n{q},{n},{k},{count}\n"),
        Format::Json => render_json(&json!({
            "q": q,
            "n": n,
            "k": k,
            "count": count.to_string(),
        })),
    })
}

pub fn cmd_distribution(q: u64, n: u64, format: Format) -> Result<String, Error> {
    let dist = extension(q, n)?.distribution();
    let sum_check = dist.check_invariants().is_ok();
    let total = dist.total();
    Ok(match format {
        Format::Text => {
            let mut out = format!("q = {q}, n = {n}\n");
            for (k, c) in dist.counts.iter().enumerate() {
                writeln!(out, "N_{k} = {c}").unwrap();
            }
            let rel = if sum_check { "=" } else { "!=" };
            writeln!(out, "sum = {total} {rel} q^n = {}", dist.field_size()).unwrap();
            out
        }
        Format::Csv => {
            let mut out = String::from("k,count\n");
            for (k, c) in dist.counts.iter().enumerate() {
                writeln!(out, "{k},{c}").unwrap();
            }
            writeln!(out, "sum,{total}").unwrap();
            out
        }
        Format::Json => render_json(&json!({
            "q": q,
            "n": n,
            "counts": dist.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "sum": total.to_string(),
            "sum_check": sum_check,
        })),
    })
}

type ClosedForm = fn(&Extension) -> crate::Result<crate::BigCount>;

/// `(n, [Some(N_0), ..., Some(N_k) or None when k > n])`.
pub type TableRow = (u64, Vec<Option<String>>);

pub fn table_rows(q: u64, n_min: u64, n_max: u64, k_max: u64) -> Result<Vec<TableRow>, Error> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InputTooLarge {
            what: "n_min (need 1 <= n_min <= n_max)",
            value: n_min,
            bound: n_max,
        });
    }
    (n_min..=n_max)
        .map(|n| {
            let dist: Distribution = extension(q, n)?.distribution();
            let cells = (0..=k_max)
                .map(|k| dist.count(k).map(|c| c.to_string()))
                .collect();
            Ok((n, cells))
        })
        .collect()
}

pub fn cmd_table(
    q: u64,
    n_min: u64,
    n_max: u64,
    k_max: u64,
    format: Format,
) -> Result<String, Error> {
    let rows = table_rows(q, n_min, n_max, k_max)?;
    let headers: Vec<String> = std::iter::once("n".to_string())
        .chain((0..=k_max).map(|k| format!("N_{k}")))
        .collect();
    Ok(match format {
        Format::Csv => {
            let mut out = headers.join(",");
            out.push('\n');
            for (n, cells) in &rows {
                let line: Vec<String> = std::iter::once(n.to_string())
                    .chain(cells.iter().map(|c| c.clone().unwrap_or_default()))
                    .collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let mut grid = vec![headers];
            for (n, cells) in &rows {
                grid.push(
                    std::iter::once(n.to_string())
                        .chain(
                            cells
                                .iter()
                                .map(|c| c.clone().unwrap_or_else(|| "-".into())),
                        )
                        .collect(),
                );
            }
            let widths: Vec<usize> = (0..grid[0].len())
                .map(|j| grid.iter().map(|row| row[j].len()).max().unwrap_or(0))
                .collect();
            let mut out = format!("q = {q}\n");
            for row in &grid {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
        Format::Json => render_json(&json!({
            "q": q,
            "k_max": k_max,
            "rows": rows
                .iter()
                .map(|(n, cells)| json!({ "n": n, "counts": cells }))
                .collect::<Vec<_>>(),
        })),
    })
}

pub fn cmd_factors(q: u64, n: u64, format: Format) -> Result<String, Error> {
    let params = spectrum::derive_params(q, n)?;
    let pattern = spectrum::degree_pattern(&params)?;
    let omega = spectrum::omega(&params);
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "q = {q} = {}^{}", params.p, params.m).unwrap();
            writeln!(out, "n = {n} = {}^{} * {}", params.p, params.s, params.n0).unwrap();
            writeln!(out, "p = {}", params.p).unwrap();
            writeln!(out, "m = {}", params.m).unwrap();
            writeln!(out, "s = {}", params.s).unwrap();
            writeln!(out, "n_0 = {}", params.n0).unwrap();
            writeln!(out, "d = {}", params.d).unwrap();
            writeln!(out, "v_r = {pattern}").unwrap();
            writeln!(out, "omega = {omega}").unwrap();
            out
        }
        Format::Csv => {
            let mut out = String::from("r,v_r\n");
            for (r, v) in pattern.iter() {
                writeln!(out, "{r},{v}").unwrap();
            }
            out
        }
        Format::Json => {
            let map: serde_json::Map<String, Value> = pattern
                .iter()
                .map(|(r, v)| (r.to_string(), json!(v)))
                .collect();
            render_json(&json!({
                "q": q,
                "n": n,
                "p": params.p,
                "m": params.m,
                "s": params.s,
                "n0": params.n0,
                "d": params.d,
                "pattern": map,
                "omega": omega,
            }))
        }
    })
}

/// One named cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn fmt_counts(d: &Distribution) -> String {
    let cells: Vec<String> = d.counts.iter().map(|c| c.to_string()).collect();
    format!("[{}]", cells.join(", "))
}

/// Runs the selected checks. Errors mean the request itself was invalid.
pub fn verification_checks(
    q: u64,
    n: u64,
    choice: OracleChoice,
    max_brute: u64,
    modulus_trials: usize,
) -> Result<Vec<Check>, Error> {
    let ext = extension(q, n)?;
    let run_brute = matches!(choice, OracleChoice::Brute | OracleChoice::All);
    if run_brute {
        oracle::check_feasible(q, n, max_brute)?;
    }
    let formula = ext.distribution();
    let mut checks = Vec::new();

    let invariants = formula.check_invariants();
    checks.push(check(
        "formula distribution sums to q^n",
        invariants.is_ok(),
        invariants.err().map(|e| e.to_string()).unwrap_or_default(),
    ));

    if run_brute {
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        for index in 0..modulus_trials.max(1) {
            let opts = BruteForceOptions {
                max_elements: max_brute,
                modulus_index: index,
                workers,
            };
            let brute = oracle::brute_force_distribution_with(q, n, &opts)?;
            checks.push(check(
                format!("brute force (defining polynomial #{index}) equals formula"),
                brute == formula,
                format!(
                    "brute {} formula {}",
                    fmt_counts(&brute),
                    fmt_counts(&formula)
                ),
            ));
        }
    }

    if matches!(choice, OracleChoice::Cosets | OracleChoice::All) {
        let cosets = oracle::coset_pattern(q, n)?;
        let omega = spectrum::omega(&ext.params);
        let passed = cosets == ext.pattern
            && ext.pattern.total_degree() == ext.params.n0
            && omega == ext.pattern.factor_count();
        checks.push(check(
            "Möbius degree pattern equals cyclotomic cosets",
            passed,
            format!("pattern {} cosets {} omega {omega}", ext.pattern, cosets),
        ));
    }

    if matches!(choice, OracleChoice::ClosedForms | OracleChoice::All) {
        let mut mismatches = Vec::new();
        let closed: [(u64, ClosedForm); 3] = [
            (1, Extension::closed_form_n1),
            (2, Extension::closed_form_n2),
            (3, Extension::closed_form_n3),
        ];
        for (k, eval) in closed.into_iter().filter(|(k, _)| *k <= n) {
            let general = &formula.counts[k as usize];
            match eval(&ext) {
                Ok(value) if &value == general => {}
                Ok(value) => mismatches.push(format!("N_{k}: closed {value} general {general}")),
                Err(e) => mismatches.push(format!("N_{k}: {e}")),
            }
        }
        checks.push(check(
            format!("closed forms N_1..N_{} equal general formula", n.min(3)),
            mismatches.is_empty(),
            mismatches.join("; "),
        ));
    }
    Ok(checks)
}

pub fn cmd_verify(
    q: u64,
    n: u64,
    choice: OracleChoice,
    max_brute: u64,
    modulus_trials: usize,
) -> Outcome {
    let checks = match verification_checks(q, n, choice, max_brute, modulus_trials) {
        Ok(c) => c,
        Err(e @ Error::InstanceTooLarge { .. }) => {
            return Outcome::input_error(format!("infeasible: {e} (raise --max-brute to override)"))
        }
        Err(e) => return Outcome::input_error(e),
    };
    let mut out = format!("verify q = {q}, n = {n}\n");
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        write!(out, "{status}  {}", c.name).unwrap();
        if !c.passed && !c.detail.is_empty() {
            write!(out, ": {}", c.detail).unwrap();
        }
        out.push('\n');
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    if failed == 0 {
        writeln!(out, "PASS, {} checks", checks.len()).unwrap();
        Outcome::ok(out)
    } else {
        writeln!(out, "FAIL, {failed} of {} checks failed", checks.len()).unwrap();
        Outcome {
            code: 1,
            stdout: out,
            stderr: String::new(),
        }
    }
}
