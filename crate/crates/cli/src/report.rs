use std::io::{self, Write};

use cubic_residue::verify::{PrimeRecord, VerifyReport};
use serde::Serialize;

pub const CSV_HEADER: [&str; 14] = [
    "p", "class", "a", "b", "A", "B", "C", "D", "cubic2_rep", "cubic2_sym", "cubic2_oracle", "root", "quad2",
    "failures",
];

#[derive(Serialize)]
struct Row {
    p: u64,
    class: String,
    a: Option<i64>,
    b: Option<i64>,
    #[serde(rename = "A")]
    big_a: Option<i64>,
    #[serde(rename = "B")]
    big_b: Option<i64>,
    #[serde(rename = "C")]
    c: Option<i64>,
    #[serde(rename = "D")]
    d: Option<i64>,
    cubic2_rep: Option<bool>,
    cubic2_sym: Option<bool>,
    cubic2_oracle: bool,
    root: Option<u64>,
    quad2: Option<i8>,
    failures: String,
}

impl From<&PrimeRecord> for Row {
    fn from(r: &PrimeRecord) -> Self {
        Row {
            p: r.p,
            class: r.class.to_string(),
            a: r.norm_form.map(|n| n.a),
            b: r.norm_form.map(|n| n.b),
            big_a: r.four_p.map(|f| f.a),
            big_b: r.four_p.map(|f| f.b),
            c: r.p27.map(|x| x.c),
            d: r.p27.map(|x| x.d),
            cubic2_rep: r.cubic2.by_representation,
            cubic2_sym: r.cubic2.by_symbol,
            cubic2_oracle: r.cubic2.by_oracle,
            root: r.cubic2.root,
            quad2: r.quad2.map(|q| q.plus2),
            failures: r.failures.join("; "),
        }
    }
}

fn csv_err(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    }
}

/// One row per prime. The summary is not part of the CSV.
pub fn write_csv(report: &VerifyReport, out: &mut impl Write) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in &report.records {
        w.serialize(Row::from(r)).map_err(csv_err)?;
    }
    w.flush()
}

/// One JSON object per record, then a final line holding the summary.
pub fn write_json_lines(report: &VerifyReport, out: &mut impl Write) -> io::Result<()> {
    for r in &report.records {
        serde_json::to_writer(&mut *out, &serde_json::json!({"record": r}))?;
        writeln!(out)?;
    }
    serde_json::to_writer(&mut *out, &serde_json::json!({"summary": report.summary}))?;
    writeln!(out)
}

pub fn write_text(report: &VerifyReport, out: &mut impl Write) -> io::Result<()> {
    for r in report.records.iter().filter(|r| !r.failures.is_empty()) {
        writeln!(out, "FAIL p = {}: {}", r.p, r.failures.join("; "))?;
    }
    let s = &report.summary;
    writeln!(out, "primes ≤ {}: {}", s.max, s.primes)?;
    writeln!(out, "  ramified {}, inert {}, split {}", s.ramified, s.inert, s.split)?;
    writeln!(out, "  split with 2 a cube: {}", s.split_cubic_residue)?;
    if let Some(d) = s.density {
        writeln!(out, "  density among split primes: {d:.5}")?;
    }
    if let Some(t) = s.ring_trials {
        writeln!(out, "ring trials (seed {}): {} run, {} failed", t.seed, t.trials, t.failures)?;
    }
    for d in &s.discrepancies {
        let tag = if d.informational { "note" } else { "DISCREPANCY" };
        writeln!(out, "{tag}: n = {}: {}", d.modulus, d.note)?;
    }
    writeln!(out, "failed primes: {}", s.failed_primes)
}
