//! Text, CSV and JSON renderings. Text polynomials use the canonical
//! ascending form; CSV cells hold the same text; JSON uses the polynomial schema.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{Format, Kind, VerifyReport};
use crate::lassalle::{value, CoeffResult, Family};
use crate::linearize::{LinExpansion, Q1Reading, RVector};
use crate::qpoly::LaurentPoly;

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("cells are utf-8")
}

pub fn eval(results: &[CoeffResult], all: bool, format: Format) -> String {
    let agree = results.windows(2).all(|w| w[0].value == w[1].value);
    match format {
        Format::Text if !all => format!("{}\n", results[0].value),
        Format::Text => {
            let mut s = String::new();
            for r in results {
                writeln!(s, "{}: {}", r.query.method, r.value).unwrap();
            }
            writeln!(s, "agree: {agree}").unwrap();
            s
        }
        Format::Csv => to_csv(
            &["family", "n", "p", "k", "method", "formula_used", "value"],
            results.iter().map(|r| {
                let q = r.query;
                vec![
                    q.family.to_string(),
                    q.n.to_string(),
                    q.p.to_string(),
                    q.k.to_string(),
                    q.method.to_string(),
                    r.formula_used.to_string(),
                    r.value.to_string(),
                ]
            }),
        ),
        Format::Json if !all => to_json(&results[0]),
        Format::Json => to_json(&json!({ "results": results, "agree": agree })),
    }
}

pub fn table(family: Family, n: u32, rows: &[Vec<LaurentPoly>], format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = format!("{family} family, n={n}\n");
            for (i, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(LaurentPoly::to_string).collect();
                writeln!(s, "p={}: {}", i + 1, cells.join(" | ")).unwrap();
            }
            s
        }
        Format::Csv => {
            let mut header = vec!["p".to_string()];
            header.extend((1..=n).map(|k| format!("k={k}")));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            to_csv(
                &header,
                rows.iter().enumerate().map(|(i, row)| {
                    let mut rec = vec![(i + 1).to_string()];
                    rec.extend(row.iter().map(LaurentPoly::to_string));
                    rec
                }),
            )
        }
        Format::Json => to_json(&json!({ "family": family, "n": n, "rows": rows })),
    }
}

pub fn verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = format!("suite: {}\n", report.suite);
            for (name, total, failed) in &report.parts {
                writeln!(s, "  {name}: {total} cases, {failed} failed").unwrap();
            }
            for f in &report.failures {
                writeln!(s, "FAIL {}: {} != {}", f.case, f.lhs, f.rhs).unwrap();
            }
            for n in &report.notes {
                writeln!(s, "note: {n}").unwrap();
            }
            writeln!(s, "cases: {}, failed: {}", report.cases_total, report.cases_failed).unwrap();
            s
        }
        Format::Csv => {
            let parts = report.parts.iter().map(|(name, total, failed)| {
                vec![
                    "part".into(),
                    name.clone(),
                    total.to_string(),
                    failed.to_string(),
                    String::new(),
                    String::new(),
                ]
            });
            let failures = report.failures.iter().map(|f| {
                vec![
                    "failure".into(),
                    f.case.clone(),
                    String::new(),
                    String::new(),
                    f.lhs.clone(),
                    f.rhs.clone(),
                ]
            });
            let notes = report.notes.iter().map(|n| {
                vec![
                    "note".into(),
                    n.clone(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                ]
            });
            let total = std::iter::once(vec![
                "total".into(),
                report.suite.clone(),
                report.cases_total.to_string(),
                report.cases_failed.to_string(),
                String::new(),
                String::new(),
            ]);
            to_csv(
                &["row", "name", "cases_total", "cases_failed", "lhs", "rhs"],
                parts.chain(failures).chain(notes).chain(total),
            )
        }
        Format::Json => to_json(report),
    }
}

#[derive(Debug, Serialize)]
struct NonUnimodal {
    family: Family,
    n: u32,
    p: u32,
    k: u32,
    min_exp: i64,
    coeffs: Vec<String>,
}

/// Every nonzero coefficient with `1 <= n <= n_max`, `0 <= p <= n`,
/// `1 <= k <= n` whose coefficient sequence is not unimodal.
fn non_unimodal(family: Family, n_max: u32) -> (usize, Vec<NonUnimodal>) {
    let grid: Vec<(u32, u32, u32)> = (1..=n_max)
        .flat_map(|n| (0..=n).flat_map(move |p| (1..=n).map(move |k| (n, p, k))))
        .collect();
    let found: Vec<Option<NonUnimodal>> = grid
        .par_iter()
        .map(|&(n, p, k)| {
            let prof = value(family, n, p, k).coefficient_profile().ok()?;
            (!prof.is_unimodal).then(|| NonUnimodal {
                family,
                n,
                p,
                k,
                min_exp: prof.min_exp,
                coeffs: prof.coeffs.iter().map(ToString::to_string).collect(),
            })
        })
        .collect();
    (grid.len(), found.into_iter().flatten().collect())
}

pub fn scan(families: &[Family], n_max: u32, format: Format) -> String {
    let results: Vec<(Family, usize, Vec<NonUnimodal>)> = families
        .iter()
        .map(|&f| {
            let (scanned, list) = non_unimodal(f, n_max);
            (f, scanned, list)
        })
        .collect();
    match format {
        Format::Text => {
            let mut s = String::new();
            for (f, scanned, list) in &results {
                writeln!(
                    s,
                    "{f} family, n<={n_max}: {scanned} scanned, {} not unimodal",
                    list.len()
                )
                .unwrap();
                for e in list {
                    writeln!(
                        s,
                        "  ({},{},{}) q^{} [{}]",
                        e.n,
                        e.p,
                        e.k,
                        e.min_exp,
                        e.coeffs.join(",")
                    )
                    .unwrap();
                }
            }
            s
        }
        Format::Csv => to_csv(
            &["family", "n", "p", "k", "min_exp", "coeffs"],
            results.iter().flat_map(|(_, _, list)| {
                list.iter().map(|e| {
                    vec![
                        e.family.to_string(),
                        e.n.to_string(),
                        e.p.to_string(),
                        e.k.to_string(),
                        e.min_exp.to_string(),
                        e.coeffs.join(" "),
                    ]
                })
            }),
        ),
        Format::Json => {
            let v: Vec<_> = results
                .iter()
                .map(|(f, scanned, list)| json!({ "family": f, "n_max": n_max, "scanned": scanned, "not_unimodal": list }))
                .collect();
            to_json(&v)
        }
    }
}

pub fn expansion(r: &RVector, kind: Kind, e: &LinExpansion, reading: Option<Q1Reading>, format: Format) -> String {
    let kind_name = match kind {
        Kind::D => "d",
        Kind::CTilde => "c_tilde",
        Kind::C => "c",
    };
    match format {
        Format::Text => {
            let mut s = String::new();
            for (l, c) in e.iter() {
                writeln!(s, "l={l}: {c}").unwrap();
            }
            s
        }
        Format::Csv => to_csv(
            &["l", "coeff"],
            e.iter().map(|(l, c)| vec![l.to_string(), c.to_string()]),
        ),
        Format::Json => {
            let coeffs: Vec<_> = e.iter().map(|(l, c)| json!({ "l": l, "coeff": c })).collect();
            let mut v = json!({ "r": r.entries(), "kind": kind_name, "basis": LinExpansion::BASIS, "coeffs": coeffs });
            if let Some(reading) = reading {
                v["q1_reading"] = json!(reading);
            }
            to_json(&v)
        }
    }
}
