//! Row-oriented output in csv, json or aligned text.

use std::io::{self, Write};

use awspec_core::rational::to_decimal_string;
use awspec_core::Rational;
use clap::ValueEnum;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Uint(u64),
    Rat(Rational),
    /// Floating-point report value; never used for exact quantities.
    Float(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Uint(v as u64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Uint(v)
    }
}

impl From<Rational> for Cell {
    fn from(v: Rational) -> Self {
        Cell::Rat(v)
    }
}

impl From<&Rational> for Cell {
    fn from(v: &Rational) -> Self {
        Cell::Rat(v.clone())
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub kind: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(kind: &'static str, columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            kind,
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width for {}", self.kind);
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Style {
    pub format: Format,
    pub decimals: Option<usize>,
}

const FLOAT_DECIMALS: usize = 6;

fn text(cell: &Cell, style: Style) -> String {
    match cell {
        Cell::Int(v) => v.to_string(),
        Cell::Uint(v) => v.to_string(),
        Cell::Rat(r) => match style.decimals {
            Some(d) => to_decimal_string(r, d),
            None => r.to_string(),
        },
        Cell::Float(f) => format!("{:.*}", style.decimals.unwrap_or(FLOAT_DECIMALS), f),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
        Cell::Empty => String::new(),
    }
}

fn json_cell(cell: &Cell, style: Style) -> Value {
    match cell {
        Cell::Int(v) => json!(v),
        Cell::Uint(v) => json!(v),
        Cell::Rat(r) => {
            let mut obj = Map::new();
            obj.insert("num".into(), Value::String(r.numer().to_string()));
            obj.insert("den".into(), Value::String(r.denom().to_string()));
            if let Some(d) = style.decimals {
                obj.insert("decimal".into(), Value::String(to_decimal_string(r, d)));
            }
            Value::Object(obj)
        }
        Cell::Float(f) => json!(f),
        Cell::Text(s) => json!(s),
        Cell::Bool(b) => json!(b),
        Cell::Empty => Value::Null,
    }
}

pub fn schema_tag(kind: &str) -> String {
    format!("awspec.{kind}.v{SCHEMA_VERSION}")
}

pub fn render(table: &Table, style: Style, out: &mut impl Write) -> io::Result<()> {
    match style.format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().from_writer(out);
            w.write_record(&table.columns)?;
            for row in &table.rows {
                w.write_record(row.iter().map(|c| text(c, style)))?;
            }
            w.flush()
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = table
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(k, c)| (k.clone(), json_cell(c, style)))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            let doc = json!({
                "schema": schema_tag(table.kind),
                "columns": table.columns,
                "rows": rows,
            });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
        Format::Pretty => {
            let cells: Vec<Vec<String>> = table
                .rows
                .iter()
                .map(|r| r.iter().map(|c| text(c, style)).collect())
                .collect();
            let widths: Vec<usize> = table
                .columns
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    cells
                        .iter()
                        .map(|r| r[i].chars().count())
                        .chain([h.chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |fields: &[String]| {
                fields
                    .iter()
                    .zip(&widths)
                    .map(|(f, w)| format!("{f:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(&table.columns))?;
            for r in &cells {
                writeln!(out, "{}", line(r))?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use awspec_core::ratio;

    fn sample() -> Table {
        let mut t = Table::new("demo", ["a", "b"]);
        t.push(vec![Cell::Int(1), Cell::Rat(ratio(24, 5))]);
        t
    }

    fn run(style: Style) -> String {
        let mut buf = Vec::new();
        render(&sample(), style, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_is_exact_by_default() {
        let s = run(Style {
            format: Format::Csv,
            decimals: None,
        });
        assert_eq!(s, "a,b\n1,24/5\n");
        let s = run(Style {
            format: Format::Csv,
            decimals: Some(2),
        });
        assert_eq!(s, "a,b\n1,4.80\n");
    }

    #[test]
    fn json_uses_rational_objects() {
        let s = run(Style {
            format: Format::Json,
            decimals: None,
        });
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema"], "awspec.demo.v1");
        assert_eq!(v["rows"][0]["b"]["num"], "24");
        assert_eq!(v["rows"][0]["b"]["den"], "5");
        assert_eq!(v["rows"][0]["a"], 1);
    }

    #[test]
    fn pretty_aligns() {
        let s = run(Style {
            format: Format::Pretty,
            decimals: None,
        });
        assert_eq!(s, "a     b\n1  24/5\n");
    }
}
