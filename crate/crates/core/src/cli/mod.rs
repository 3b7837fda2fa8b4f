//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 characteristic divides `|G|`,
//! 4 oracle bound exceeded, 5 oracle disagrees with the closed form.

pub mod report;

use std::ffi::OsString;

use clap::{Parser, ValueEnum};
use num_bigint::BigUint;

use crate::counts::{check_coprime, degree_table_with_divisors};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::{parse_group_spec, primary_decomposition, CyclicFactorList};
use crate::oracle::{frobenius_orbits, OracleOptions, DEFAULT_ORACLE_BOUND};

pub use report::{FieldReport, JsonReport};

pub const EXIT_MISMATCH: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Degrees of irreducible representations of a finite abelian group over F_q.
#[derive(Debug, Parser)]
#[command(name = "abelreps", version)]
pub struct Args {
    /// Cyclic factors, e.g. "C9xC5" or "9,5".
    #[arg(long)]
    pub group: String,

    /// Field order q (a prime power).
    #[arg(long)]
    pub q: Option<String>,

    /// Field characteristic p.
    #[arg(long)]
    pub p: Option<u128>,

    /// Field degree m, with q = p^m.
    #[arg(long)]
    pub m: Option<u32>,

    /// Sweep m over LO:HI inclusive.
    #[arg(long = "m-range", value_name = "LO:HI")]
    pub m_range: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Cross-check every table against the brute-force orbit walk.
    #[arg(long)]
    pub verify: bool,

    /// Show the per-divisor contributions.
    #[arg(long)]
    pub show_divisors: bool,

    /// Largest group order the brute-force check will enumerate.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
    pub oracle_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSelection {
    Single(FieldSpec),
    Range { p: u128, lo: u32, hi: u32 },
}

impl FieldSelection {
    pub fn fields(&self) -> Result<Vec<FieldSpec>> {
        match self {
            FieldSelection::Single(f) => Ok(vec![f.clone()]),
            FieldSelection::Range { p, lo, hi } => {
                (*lo..=*hi).map(|m| FieldSpec::new(*p, m)).collect()
            }
        }
    }

    pub fn characteristic(&self) -> u128 {
        match self {
            FieldSelection::Single(f) => f.characteristic(),
            FieldSelection::Range { p, .. } => *p,
        }
    }
}

fn parse_range(text: &str) -> Result<(u32, u32)> {
    let bad = || Error::Input(format!("expected LO:HI for --m-range, got {text:?}"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo < 1 || lo > hi {
        return Err(Error::Input(format!(
            "--m-range needs 1 <= LO <= HI, got {lo}:{hi}"
        )));
    }
    Ok((lo, hi))
}

/// Resolves `--q` or `--p` with `--m`/`--m-range` into the fields to run.
pub fn parse_field(args: &Args) -> Result<FieldSelection> {
    match (&args.q, args.p, args.m, &args.m_range) {
        (Some(q), None, None, None) => {
            let q: BigUint = q
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("--q expects a positive integer, got {q:?}")))?;
            FieldSpec::from_order(&q).map(FieldSelection::Single)
        }
        (Some(_), ..) => Err(Error::Input(
            "--q cannot be combined with --p, --m or --m-range".into(),
        )),
        (None, Some(p), Some(m), None) => FieldSpec::new(p, m).map(FieldSelection::Single),
        (None, Some(p), None, Some(range)) => {
            let (lo, hi) = parse_range(range)?;
            // Validates p before sweeping.
            FieldSpec::new(p, lo)?;
            Ok(FieldSelection::Range { p, lo, hi })
        }
        (None, Some(_), Some(_), Some(_)) => Err(Error::Input(
            "give either --m or --m-range, not both".into(),
        )),
        (None, Some(_), None, None) => Err(Error::Input("--p needs --m or --m-range".into())),
        (None, None, ..) => Err(Error::Input(
            "specify the field with --q N or --p P --m M (or --m-range LO:HI)".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunRequest {
    pub group: CyclicFactorList,
    pub field: FieldSelection,
    pub format: Format,
    pub verify: bool,
    pub show_divisors: bool,
    pub oracle_bound: u64,
}

impl RunRequest {
    pub fn from_args(args: &Args) -> Result<Self> {
        Ok(RunRequest {
            group: parse_group_spec(&args.group)?,
            field: parse_field(args)?,
            format: args.format,
            verify: args.verify,
            show_divisors: args.show_divisors,
            oracle_bound: args.oracle_bound,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOutcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Computes and renders every requested field in ascending `m`.
pub fn run(request: &RunRequest) -> Result<RunOutcome> {
    let group = primary_decomposition(&request.group)?;
    let fields = request.field.fields()?;
    if let Some(first) = fields.first() {
        check_coprime(&group, first)?;
    }
    let oracle = OracleOptions {
        bound: request.oracle_bound,
        check_orbits: true,
    };
    let mut reports = Vec::with_capacity(fields.len());
    for field in fields {
        let (table, divisors) = degree_table_with_divisors(&group, &field)?;
        let verification = if request.verify {
            Some(frobenius_orbits(&group, &field, &oracle)?)
        } else {
            None
        };
        reports.push(FieldReport {
            field,
            table,
            divisors: request.show_divisors.then_some(divisors),
            verification,
        });
    }
    let mismatch = reports.iter().any(|r| r.matched() == Some(false));
    let (stdout, stderr) = report::render(request, &group, &reports);
    Ok(RunOutcome {
        stdout,
        stderr,
        code: if mismatch { EXIT_MISMATCH } else { 0 },
    })
}

/// Parses arguments, runs, and maps failures to exit codes.
pub fn main_with_args<I, T>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                RunOutcome {
                    stdout: text,
                    ..Default::default()
                }
            } else {
                RunOutcome {
                    stderr: text,
                    code,
                    ..Default::default()
                }
            };
        }
    };
    match RunRequest::from_args(&args).and_then(|request| run(&request)) {
        Ok(outcome) => outcome,
        Err(e) => RunOutcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(extra: &[&str]) -> Args {
        let mut v = vec!["abelreps", "--group", "C9xC5"];
        v.extend_from_slice(extra);
        Args::try_parse_from(v).unwrap()
    }

    #[test]
    fn field_from_q() {
        let f = parse_field(&args(&["--q", "8"])).unwrap();
        assert_eq!(f, FieldSelection::Single(FieldSpec::new(2, 3).unwrap()));
    }

    #[test]
    fn field_from_p_and_m() {
        let f = parse_field(&args(&["--p", "2", "--m", "6"])).unwrap();
        let FieldSelection::Single(f) = f else {
            panic!()
        };
        assert_eq!(f.order(), &BigUint::from(64u32));
    }

    #[test]
    fn field_range() {
        let f = parse_field(&args(&["--p", "2", "--m-range", "1:12"])).unwrap();
        assert_eq!(
            f,
            FieldSelection::Range {
                p: 2,
                lo: 1,
                hi: 12
            }
        );
        assert_eq!(f.fields().unwrap().len(), 12);
    }

    #[test]
    fn field_errors() {
        assert_eq!(
            parse_field(&args(&["--q", "12"])),
            Err(Error::NotAPrimePower(BigUint::from(12u32)))
        );
        for bad in [
            &["--q", "8", "--p", "2"][..],
            &["--p", "2"],
            &[],
            &["--p", "2", "--m", "1", "--m-range", "1:2"],
            &["--p", "2", "--m-range", "3:2"],
            &["--p", "2", "--m-range", "0:2"],
            &["--p", "2", "--m-range", "12"],
            &["--q", "eight"],
        ] {
            assert!(
                matches!(parse_field(&args(bad)), Err(Error::Input(_))),
                "{bad:?}"
            );
        }
        assert!(matches!(
            parse_field(&args(&["--p", "4", "--m", "1"])),
            Err(Error::NotPrime(_))
        ));
    }
}
