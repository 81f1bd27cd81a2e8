use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Tabular view of a report; `notes` only appear in the table format.
#[derive(Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
}

pub trait Report: Serialize {
    fn table(&self) -> Table;

    /// `false` when a checked identity failed.
    fn passed(&self) -> bool {
        true
    }

    /// Printed on stderr, never part of the report itself.
    fn warnings(&self) -> Vec<String> {
        Vec::new()
    }
}

pub fn emit<R: Report>(report: &R, format: Format, out: &mut impl Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Csv => {
            let table = report.table();
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&table.headers)?;
            for row in &table.rows {
                w.write_record(row)?;
            }
            w.flush()
        }
        Format::Table => write_table(&report.table(), out),
    }
}

fn write_table(table: &Table, out: &mut impl Write) -> io::Result<()> {
    let mut widths: Vec<usize> = table.headers.iter().map(|h| h.chars().count()).collect();
    for row in &table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(table.headers.clone()))?;
    writeln!(out, "{}", widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("  "))?;
    for row in &table.rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    if !table.notes.is_empty() {
        writeln!(out)?;
        for note in &table.notes {
            writeln!(out, "{note}")?;
        }
    }
    Ok(())
}

pub fn list<T: ToString>(items: &[T]) -> String {
    format!("({})", items.iter().map(T::to_string).collect::<Vec<_>>().join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Tiny {
        a: u32,
    }

    impl Report for Tiny {
        fn table(&self) -> Table {
            Table { headers: vec!["a", "long header"], rows: vec![vec!["1".into(), "x".into()]], notes: vec!["done".into()] }
        }
    }

    fn render(format: Format) -> String {
        let mut buf = Vec::new();
        emit(&Tiny { a: 1 }, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn formats() {
        assert_eq!(render(Format::Json), "{\n  \"a\": 1\n}\n");
        assert_eq!(render(Format::Csv), "a,long header\n1,x\n");
        assert_eq!(render(Format::Table), "a  long header\n-  -----------\n1  x\n\ndone\n");
        assert_eq!(list(&[1, 0, 2]), "(1,0,2)");
    }
}
