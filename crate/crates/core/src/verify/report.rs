use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::verdict::{ClaimVerdict, Status};
use crate::error::{Error, Result};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            _ => Err(Error::Parse { input: s.to_string(), reason: "expected json, csv or text".into() }),
        }
    }
}

#[derive(Serialize)]
struct Summary {
    claims: usize,
    pass: usize,
    fail: usize,
    partial: usize,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: u32,
    summary: Summary,
    verdicts: &'a [ClaimVerdict],
}

fn summary(verdicts: &[ClaimVerdict]) -> Summary {
    let count = |s| verdicts.iter().filter(|v| v.status == s).count();
    Summary {
        claims: verdicts.len(),
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        partial: count(Status::Partial),
    }
}

pub fn render_report(verdicts: &[ClaimVerdict], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => render_json(verdicts),
        ReportFormat::Csv => render_csv(verdicts),
        ReportFormat::Text => Ok(render_text(verdicts)),
    }
}

fn render_json(verdicts: &[ClaimVerdict]) -> Result<String> {
    let doc = JsonReport { schema_version: SCHEMA_VERSION, summary: summary(verdicts), verdicts };
    let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

const CSV_HEADER: [&str; 11] = [
    "claim_id",
    "group",
    "status",
    "instances_checked",
    "discrepancies",
    "parameters",
    "kind",
    "instance",
    "expected",
    "observed",
    "difference",
];

fn render_csv(verdicts: &[ClaimVerdict]) -> Result<String> {
    let csv_err = |e: csv::Error| Error::InvalidArgument(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for v in verdicts {
        let params = v.parameters.iter().map(|(k, val)| format!("{k}={val}")).collect::<Vec<_>>().join(";");
        let head = [
            v.claim_id.clone(),
            v.group.clone(),
            v.status.to_string(),
            v.instances_checked.to_string(),
            v.discrepancies.to_string(),
            params,
        ];
        if v.evidence.is_empty() {
            w.write_record(head.iter().map(String::as_str).chain(["", "", "", "", ""])).map_err(csv_err)?;
        }
        for e in &v.evidence {
            let kind = match e.kind {
                super::EvidenceKind::Discrepancy => "discrepancy",
                super::EvidenceKind::Measurement => "measurement",
            };
            let tail = [kind, &e.instance, &e.expected, &e.observed, &e.difference];
            w.write_record(head.iter().map(String::as_str).chain(tail)).map_err(csv_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(e.to_string()))
}

fn render_text(verdicts: &[ClaimVerdict]) -> String {
    let mut out = String::new();
    let mut groups: Vec<&str> = Vec::new();
    for v in verdicts {
        if !groups.contains(&v.group.as_str()) {
            groups.push(&v.group);
        }
    }
    for g in groups {
        let _ = writeln!(out, "== {g} ==");
        for v in verdicts.iter().filter(|v| v.group == g) {
            let _ = writeln!(
                out,
                "{:<8} {}  ({} checked, {} discrepancies)",
                v.status, v.claim_id, v.instances_checked, v.discrepancies
            );
            if !v.quote.is_empty() {
                let _ = writeln!(out, "         \"{}\"", v.quote);
            }
            for e in &v.evidence {
                let marker = match e.kind {
                    super::EvidenceKind::Discrepancy => "!",
                    super::EvidenceKind::Measurement => "-",
                };
                let _ = write!(out, "         {marker} {}: expected {}, observed {}", e.instance, e.expected, e.observed);
                if !e.difference.is_empty() {
                    let _ = write!(out, ", difference {}", e.difference);
                }
                out.push('\n');
            }
        }
        out.push('\n');
    }
    let s = summary(verdicts);
    let _ = writeln!(out, "{} claims: {} pass, {} fail, {} partial", s.claims, s.pass, s.fail, s.partial);
    out
}

#[cfg(test)]
mod tests {
    use super::super::VerdictBuilder;
    use super::*;

    fn pass() -> ClaimVerdict {
        let mut b = VerdictBuilder::new("P", "g", "q");
        b.compare("x", &1, &1);
        b.finish()
    }

    #[test]
    fn empty_reports_are_valid() {
        let j: serde_json::Value = serde_json::from_str(&render_report(&[], ReportFormat::Json).unwrap()).unwrap();
        assert_eq!(j["verdicts"].as_array().unwrap().len(), 0);
        assert_eq!(j["schema_version"], 1);
        let c = render_report(&[], ReportFormat::Csv).unwrap();
        assert_eq!(c.lines().count(), 1);
        assert!(render_report(&[], ReportFormat::Text).unwrap().contains("0 claims"));
    }

    #[test]
    fn single_pass_verdict() {
        let v = [pass()];
        let j: serde_json::Value = serde_json::from_str(&render_report(&v, ReportFormat::Json).unwrap()).unwrap();
        assert_eq!(j["verdicts"][0]["status"], "pass");
        assert_eq!(j["verdicts"][0]["evidence"].as_array().unwrap().len(), 0);
        let c = render_report(&v, ReportFormat::Csv).unwrap();
        assert_eq!(c.lines().count(), 2);
    }

    #[test]
    fn csv_one_row_per_evidence_item() {
        let mut b = VerdictBuilder::new("F", "g", "q").param("n", 3);
        b.compare("a, b", &1, &2);
        b.measurement("m", "", "\"quoted\"");
        let v = [b.finish()];
        let c = render_report(&v, ReportFormat::Csv).unwrap();
        let mut r = csv::Reader::from_reader(c.as_bytes());
        let rows: Vec<_> = r.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), 2);
        assert_eq!(&rows[0][7], "a, b");
        assert_eq!(&rows[1][9], "\"quoted\"");
        assert_eq!(&rows[0][5], "n=3");
    }

    #[test]
    fn format_parse() {
        assert_eq!("csv".parse::<ReportFormat>().unwrap(), ReportFormat::Csv);
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
