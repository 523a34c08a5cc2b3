#![allow(dead_code)]

use qpositive::lassalle::Family;
use qpositive::qbasic::q_integer;
use qpositive::LaurentPoly;

/// Parses a product such as `q^2 * [3] * (1+q^2)`.
pub fn parse_factored(s: &str) -> LaurentPoly {
    s.split('*')
        .map(|f| {
            let f = f.trim();
            if let Some(m) = f.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                q_integer(m.parse().unwrap_or_else(|_| panic!("bad q-integer {f:?}")))
            } else {
                let inner = f.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(f);
                inner.parse().unwrap_or_else(|e| panic!("bad factor {f:?}: {e}"))
            }
        })
        .product()
}

#[derive(Debug, Clone)]
pub struct PrintedCell {
    pub family: Family,
    pub n: u32,
    pub p: u32,
    pub k: u32,
    pub source: String,
    pub value: LaurentPoly,
}

pub fn printed_tables() -> Vec<PrintedCell> {
    let text = include_str!("../data/tables_printed.txt");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let (head, expr) = line.split_once('=').expect("cell line has '='");
            let parts: Vec<&str> = head.split_whitespace().collect();
            let [family, n, p, k] = parts[..] else {
                panic!("bad cell line {line:?}")
            };
            PrintedCell {
                family: family.parse().unwrap(),
                n: n.parse().unwrap(),
                p: p.parse().unwrap(),
                k: k.parse().unwrap(),
                source: expr.trim().to_string(),
                value: parse_factored(expr),
            }
        })
        .collect()
}

pub fn cli(args: &[&str]) -> qpositive::cli::CliOutput {
    qpositive::cli::run_from_args(std::iter::once("qpositive").chain(args.iter().copied()))
}
