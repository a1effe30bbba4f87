use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    #[default]
    Json,
    /// Header row, then one row per record; nested values are JSON-encoded.
    Csv,
    /// Terse human-readable lines.
    Plain,
}

/// An output row: ordered fields plus its plain-text rendering.
pub struct Record {
    fields: Map<String, Value>,
    plain: String,
}

impl Record {
    pub fn new(plain: impl Into<String>) -> Self {
        Record {
            fields: Map::new(),
            plain: plain.into(),
        }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_owned(), value.into());
        self
    }

    /// Adds `value` as a string, the encoding used for arbitrary-size integers.
    pub fn big(self, key: &str, value: impl ToString) -> Self {
        self.field(key, value.to_string())
    }

    pub fn opt(self, key: &str, value: Option<impl Into<Value>>) -> Self {
        match value {
            Some(v) => self.field(key, v),
            None => self.field(key, Value::Null),
        }
    }

    pub fn big_list<T: ToString>(self, key: &str, values: impl IntoIterator<Item = T>) -> Self {
        let list: Vec<Value> = values.into_iter().map(|v| v.to_string().into()).collect();
        self.field(key, list)
    }

    pub fn with_fields(mut self, value: Value) -> Self {
        if let Value::Object(map) = value {
            self.fields.extend(map);
        }
        self
    }
}

/// Writes records in the selected format, streaming as they arrive.
pub struct Emitter<'a> {
    format: Format,
    out: &'a mut dyn Write,
    header: Option<Vec<String>>,
}

impl<'a> Emitter<'a> {
    pub fn new(format: Format, out: &'a mut dyn Write) -> Self {
        Emitter {
            format,
            out,
            header: None,
        }
    }

    pub fn emit(&mut self, record: Record) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut *self.out, &record.fields)?;
                self.out.write_all(b"\n")
            }
            Format::Plain => writeln!(self.out, "{}", record.plain),
            Format::Csv => self.emit_csv(record.fields),
        }
    }

    fn emit_csv(&mut self, fields: Map<String, Value>) -> io::Result<()> {
        let mut buf = csv::WriterBuilder::new().from_writer(Vec::new());
        let keys: Vec<String> = fields.keys().cloned().collect();
        if self.header.as_ref() != Some(&keys) {
            buf.write_record(&keys)?;
            self.header = Some(keys);
        }
        buf.write_record(fields.values().map(csv_cell))?;
        let bytes = buf.into_inner().map_err(|e| e.into_error())?;
        self.out.write_all(&bytes)
    }

    pub fn footer(&mut self, line: &str) -> io::Result<()> {
        writeln!(self.out, "# {line}")
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            items.iter().map(csv_cell).collect::<Vec<_>>().join(",")
        }
        other => other.to_string(),
    }
}
