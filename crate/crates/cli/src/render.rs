use std::fmt::Write;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::json;
use tilingkit::tables::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Bfile,
    Csv,
    Json,
    #[value(name = "pretty-table", alias = "pretty")]
    Pretty,
}

pub fn sequence(
    format: Format,
    family: &str,
    params: &[(&str, i64)],
    lo: i64,
    values: &[BigInt],
) -> String {
    let mut out = String::new();
    let indexed = values.iter().enumerate().map(|(i, v)| (lo + i as i64, v));
    match format {
        Format::Bfile => {
            for (i, v) in indexed {
                writeln!(out, "{i} {v}").unwrap();
            }
        }
        Format::Csv => {
            out.push_str("n,value\n");
            for (i, v) in indexed {
                writeln!(out, "{i},{v}").unwrap();
            }
        }
        Format::Json => {
            let doc = json!({
                "family": family,
                "params": params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
                "offset": lo,
                "values": values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            out = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        }
        Format::Pretty => {
            let rows: Vec<(String, String)> = indexed
                .map(|(i, v)| (i.to_string(), v.to_string()))
                .collect();
            let wi = rows.iter().map(|r| r.0.len()).max().unwrap_or(1).max(1);
            let wv = rows.iter().map(|r| r.1.len()).max().unwrap_or(5).max(5);
            writeln!(out, "{:>wi$}  {:>wv$}", "n", "value").unwrap();
            for (i, v) in rows {
                writeln!(out, "{i:>wi$}  {v:>wv$}").unwrap();
            }
        }
    }
    out
}

/// Grid layout; cells left blank in print are marked `*`, highlighted cells
/// are bracketed.
pub fn table(format: Format, t: &Table) -> Result<String, String> {
    let mut out = String::new();
    match format {
        Format::Bfile => {
            return Err("tables have no b-file form; use csv, json or pretty-table".into())
        }
        Format::Json => out = serde_json::to_string_pretty(t).unwrap() + "\n",
        Format::Csv => {
            writeln!(
                out,
                "{},{},value,published,extrapolated",
                t.row_label, t.col_label
            )
            .unwrap();
            for c in t.cells() {
                let published = c.published.map(|p| p.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    c.row, c.col, c.value, published, c.extrapolated
                )
                .unwrap();
            }
        }
        Format::Pretty => {
            let text = |c: &tilingkit::tables::Cell| {
                let v = c.value.to_string();
                if c.bold {
                    format!("[{v}]")
                } else if c.extrapolated {
                    format!("{v}*")
                } else {
                    v
                }
            };
            let corner = format!("{}\\{}", t.row_label, t.col_label);
            let width = t
                .cells()
                .map(|c| text(c).len())
                .chain(t.cols.iter().map(|c| c.to_string().len()))
                .max()
                .unwrap_or(1);
            let first = t.rows.len().to_string().len().max(corner.len());
            writeln!(out, "{}", t.title).unwrap();
            write!(out, "{corner:>first$}").unwrap();
            for c in &t.cols {
                write!(out, " {c:>width$}").unwrap();
            }
            out.push('\n');
            for row in &t.rows {
                write!(out, "{:>first$}", row[0].row).unwrap();
                for c in row {
                    write!(out, " {:>width$}", text(c)).unwrap();
                }
                out.push('\n');
            }
            let bad = t.mismatches();
            if t.cells().any(|c| c.extrapolated) {
                out.push_str("* blank in print, computed here\n");
            }
            for c in bad {
                writeln!(
                    out,
                    "! ({}, {}) printed {} but computed {}",
                    c.row,
                    c.col,
                    c.published.unwrap(),
                    c.value
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}
