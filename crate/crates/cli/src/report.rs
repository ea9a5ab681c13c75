//! Rows of exact values rendered as a table, JSON lines or CSV.

use std::fmt::Write as _;

use ncmotzkin::Rational;
use serde_json::{json, Map, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Text(String),
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Exact(r)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl Value {
    fn plain(&self) -> String {
        match self {
            // num-rational prints integers without a denominator
            Value::Exact(r) => r.to_string(),
            Value::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Exact(r) => json!({ "num": r.numer().to_string(), "den": r.denom().to_string() }),
            Value::Text(s) => Json::String(s.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow {
    pub n: usize,
    pub values: Vec<(String, Value)>,
    pub status: Status,
}

impl ReportRow {
    pub fn ok(n: usize) -> Self {
        ReportRow {
            n,
            values: Vec::new(),
            status: Status::Ok,
        }
    }

    pub fn with(mut self, label: &str, value: impl Into<Value>) -> Self {
        self.values.push((label.to_string(), value.into()));
        self
    }

    pub fn mark(mut self, ok: bool) -> Self {
        self.status = if ok { Status::Ok } else { Status::Mismatch };
        self
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Mismatch => "mismatch",
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render(rows: &[ReportRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for row in rows {
                let mut values = Map::new();
                for (k, v) in &row.values {
                    values.insert(k.clone(), v.json());
                }
                let obj = json!({ "n": row.n, "values": values, "status": status_str(row.status) });
                writeln!(out, "{obj}").unwrap();
            }
        }
        Format::Csv => {
            let labels: Vec<&str> = rows
                .first()
                .map(|r| r.values.iter().map(|(k, _)| k.as_str()).collect())
                .unwrap_or_default();
            let mut header = vec!["n"];
            header.extend(&labels);
            header.push("status");
            writeln!(out, "{}", header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(",")).unwrap();
            for row in rows {
                let mut fields = vec![row.n.to_string()];
                fields.extend(row.values.iter().map(|(_, v)| csv_field(&v.plain())));
                fields.push(status_str(row.status).to_string());
                writeln!(out, "{}", fields.join(",")).unwrap();
            }
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut c = vec![r.n.to_string()];
                    c.extend(r.values.iter().map(|(k, v)| format!("{k}={}", v.plain())));
                    c.push(status_str(r.status).to_string());
                    c
                })
                .collect();
            let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..cols)
                .map(|i| cells.iter().filter_map(|c| c.get(i)).map(|s| s.chars().count()).max().unwrap_or(0))
                .collect();
            for row in cells {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(i, s)| format!("{s:<w$}", w = widths[i]))
                    .collect();
                writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncmotzkin::exactnum::rat;

    #[test]
    fn json_rationals_are_strings() {
        let rows = vec![ReportRow::ok(3).with("value", rat(-5, 2))];
        let s = render(&rows, Format::Json);
        let v: Json = serde_json::from_str(s.trim()).unwrap();
        assert_eq!(v["values"]["value"]["num"], "-5");
        assert_eq!(v["values"]["value"]["den"], "2");
        assert_eq!(v["status"], "ok");
    }

    #[test]
    fn csv_uses_p_over_q() {
        let rows = vec![ReportRow::ok(1).with("a", rat(1, 2)).with("b", rat(1, 3)).mark(false)];
        assert_eq!(render(&rows, Format::Csv), "n,a,b,status\n1,1/2,1/3,mismatch\n");
    }

    #[test]
    fn table_pads_columns() {
        let rows = vec![
            ReportRow::ok(9).with("v", rat(1, 1)),
            ReportRow::ok(10).with("v", rat(188, 1)),
        ];
        assert_eq!(render(&rows, Format::Table), "9   v=1    ok\n10  v=188  ok\n");
    }
}
