use std::fmt::Write as _;

use clap::ValueEnum;
use deligne::chars::FiniteSubgroup;
use deligne::linalg::Matrix;
use deligne::repst::{BiObject, HBiObject, RepObject};
use deligne::{Error, Partition, PolyQ, Rational};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// One command's result in all three renderings.
pub struct Out {
    pub text: String,
    pub json: Value,
    pub rows: Vec<Vec<String>>,
}

impl Out {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut s = String::new();
                for row in &self.rows {
                    writeln!(s, "{}", row.join("\t")).unwrap();
                }
                s
            }
        }
    }
}

pub fn render_error(e: &Error, format: Format) -> String {
    let debug = format!("{e:?}");
    let kind: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
    match format {
        Format::Json => {
            let v = json!({ "error": { "kind": kind, "message": e.to_string() } });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        _ => format!("error: {e}\n"),
    }
}

pub fn partition_json(l: &Partition) -> Value {
    json!(l.parts())
}

pub fn poly_json(p: &PolyQ) -> Value {
    json!({ "expanded": p.to_string(), "binomial": p.to_binomial_string() })
}

pub fn rat_str(x: &Rational) -> String {
    deligne::arith::fmt_rational(x)
}

pub fn object_json(obj: &RepObject) -> Value {
    let terms: Vec<Value> = obj
        .terms()
        .iter()
        .map(|(l, m)| json!({ "lambda": partition_json(l), "mult": m }))
        .collect();
    let dim = obj.dim_poly().map(|p| p.to_string()).unwrap_or_default();
    json!({ "terms": terms, "dim": dim })
}

pub fn object_rows(obj: &RepObject) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["lambda".to_string(), "mult".to_string()]];
    for (l, m) in obj.terms() {
        rows.push(vec![l.to_string(), m.to_string()]);
    }
    rows
}

pub fn object_text(obj: &RepObject) -> String {
    let dim = obj.dim_poly().map(|p| p.to_string()).unwrap_or_default();
    format!("{obj}\ndim: {dim}")
}

pub fn object_out(obj: &RepObject) -> Out {
    Out {
        text: object_text(obj),
        json: object_json(obj),
        rows: object_rows(obj),
    }
}

pub fn bi_json(b: &BiObject) -> Value {
    let terms: Vec<Value> = b
        .terms
        .iter()
        .map(|((nu, beta), m)| json!({ "nu": partition_json(nu), "beta": partition_json(beta), "mult": m }))
        .collect();
    let dim = b.dim_poly().map(|p| p.to_string()).unwrap_or_default();
    json!({ "k": b.k, "terms": terms, "dim": dim })
}

pub fn h_json(x: &HBiObject) -> Value {
    let terms: Vec<Value> = x
        .terms
        .iter()
        .map(|((nu, i), m)| json!({ "nu": partition_json(nu), "label": i, "mult": m }))
        .collect();
    json!({ "H": subgroup_json(&x.h), "terms": terms })
}

pub fn subgroup_json(h: &FiniteSubgroup) -> Value {
    let gens: Vec<String> = h.generators().iter().map(ToString::to_string).collect();
    json!({ "j": h.j, "order": h.order(), "generators": gens })
}

pub fn matrix_grid(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(rat_str).collect())
        .collect()
}

/// Aligned columns, one row per line.
pub fn grid_text(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        writeln!(out, "{}", cells.join("  ")).unwrap();
    }
    out
}
