//! Rendering of command results as schema-tagged JSON or as CSV.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A command result: a JSON body and the equivalent flat table.
pub struct Report {
    pub schema: &'static str,
    pub body: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(schema: &'static str, body: Value, header: Vec<&'static str>) -> Self {
        Report {
            schema,
            body,
            header,
            rows: Vec::new(),
        }
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows.push(cells.into_iter().map(|c| c.to_string()).collect());
    }

    /// The JSON body with the schema tag as its first key.
    fn tagged(&self) -> Value {
        let mut out = Map::new();
        out.insert("schema".into(), Value::String(self.schema.into()));
        match &self.body {
            Value::Object(fields) => {
                for (k, v) in fields {
                    out.insert(k.clone(), v.clone());
                }
            }
            other => {
                out.insert("data".into(), other.clone());
            }
        }
        Value::Object(out)
    }

    pub fn write(&self, format: Format, mut w: impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut w, &self.tagged())?;
                writeln!(w)
            }
            Format::Csv => {
                let mut out = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(w);
                out.write_record(&self.header)?;
                for r in &self.rows {
                    out.write_record(r)?;
                }
                out.flush()
            }
        }
    }
}
