//! Rendering of results as a human table, JSON lines, or CSV.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Format, RunRequest};
use crate::counts::DivisorContribution;
use crate::field::FieldSpec;
use crate::group::{CyclicFactorList, PrimaryDecomposition};
use crate::table::DegreeTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldReport {
    pub field: FieldSpec,
    pub table: DegreeTable,
    pub divisors: Option<Vec<DivisorContribution>>,
    /// Oracle result, when verification was requested.
    pub verification: Option<DegreeTable>,
}

impl FieldReport {
    pub fn matched(&self) -> Option<bool> {
        self.verification.as_ref().map(|v| *v == self.table)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGroup {
    pub cyclic_factors: Vec<String>,
    pub order: String,
    pub exponent: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonField {
    pub p: String,
    pub m: u32,
    pub q: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonDegree {
    pub degree: String,
    pub multiplicity: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonDivisor {
    pub d: String,
    #[serde(rename = "card_Id")]
    pub card_id: String,
    pub degree: String,
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonVerify {
    #[serde(rename = "match")]
    pub matched: bool,
}

/// One JSON document per field. Big integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub group: JsonGroup,
    pub field: JsonField,
    pub degrees: Vec<JsonDegree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisors: Option<Vec<JsonDivisor>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<JsonVerify>,
}

impl JsonReport {
    pub fn new(
        list: &CyclicFactorList,
        group: &PrimaryDecomposition,
        report: &FieldReport,
    ) -> Self {
        JsonReport {
            group: JsonGroup {
                cyclic_factors: list.factors().iter().map(ToString::to_string).collect(),
                order: group.order().to_string(),
                exponent: group.exponent().to_string(),
            },
            field: JsonField {
                p: report.field.characteristic().to_string(),
                m: report.field.degree(),
                q: report.field.order().to_string(),
            },
            degrees: report
                .table
                .pairs()
                .map(|(n, k)| JsonDegree {
                    degree: n.to_string(),
                    multiplicity: k.to_string(),
                })
                .collect(),
            divisors: report.divisors.as_ref().map(|ds| {
                ds.iter()
                    .map(|c| JsonDivisor {
                        d: c.d.to_string(),
                        card_id: c.card_id.to_string(),
                        degree: c.degree.to_string(),
                        count: c.count.to_string(),
                    })
                    .collect()
            }),
            verify: report.matched().map(|matched| JsonVerify { matched }),
        }
    }

    /// Single-line rendering used for output.
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Right-aligned columns under a header row.
fn columns(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let widths: Vec<usize> = (0..header.len())
        .map(|j| {
            rows.iter()
                .map(|r| r[j].len())
                .chain([header[j].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |out: &mut String, cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(out, "  {}", parts.join("  "));
    };
    line(out, &mut header.iter().copied());
    for r in rows {
        line(out, &mut r.iter().map(String::as_str));
    }
}

fn render_table(
    request: &RunRequest,
    group: &PrimaryDecomposition,
    reports: &[FieldReport],
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "group {} = {} (order {}, exponent {})",
        request.group,
        group,
        group.order(),
        group.exponent()
    );
    for r in reports {
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "q = {} (p = {}, m = {})",
            r.field.order(),
            r.field.characteristic(),
            r.field.degree()
        );
        let _ = writeln!(out, "{}", r.table);
        let rows: Vec<Vec<String>> = r
            .table
            .pairs()
            .map(|(n, k)| vec![n.to_string(), k.to_string()])
            .collect();
        columns(&mut out, &["degree", "multiplicity"], &rows);
        if let Some(divisors) = &r.divisors {
            let rows: Vec<Vec<String>> = divisors
                .iter()
                .map(|c| {
                    vec![
                        c.d.to_string(),
                        c.card_id.to_string(),
                        c.degree.to_string(),
                        c.count.to_string(),
                    ]
                })
                .collect();
            let _ = writeln!(out, "divisors:");
            columns(&mut out, &["d", "|I_d|", "degree", "count"], &rows);
        }
        if let Some(oracle) = &r.verification {
            if *oracle == r.table {
                let _ = writeln!(out, "verify: MATCH");
            } else {
                let _ = writeln!(out, "verify: MISMATCH (orbit walk gives {oracle})");
            }
        }
    }
    out
}

fn render_csv(reports: &[FieldReport]) -> String {
    let mut out = String::from("p,m,q,degree,multiplicity\n");
    for r in reports {
        for (n, k) in r.table.pairs() {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.field.characteristic(),
                r.field.degree(),
                r.field.order(),
                n,
                k
            );
        }
    }
    out
}

/// Renders `(stdout, stderr)`.
pub fn render(
    request: &RunRequest,
    group: &PrimaryDecomposition,
    reports: &[FieldReport],
) -> (String, String) {
    match request.format {
        Format::Table => (render_table(request, group, reports), String::new()),
        Format::Json => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&JsonReport::new(&request.group, group, r).to_line());
                out.push('\n');
            }
            (out, String::new())
        }
        Format::Csv => {
            // CSV has fixed columns; verification goes to stderr.
            let mut err = String::new();
            for r in reports {
                if let Some(matched) = r.matched() {
                    let verdict = if matched { "MATCH" } else { "MISMATCH" };
                    let _ = writeln!(err, "verify q = {}: {verdict}", r.field.order());
                }
            }
            (render_csv(reports), err)
        }
    }
}
