use std::fmt::Display;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use serde::Serialize;

use crate::{Format, OutputArgs};

/// Record stream: one JSON object per line, or a CSV header followed by rows.
pub struct Sink {
    format: Format,
    json: Box<dyn Write>,
    csv: Option<csv::Writer<Box<dyn Write>>>,
}

impl Sink {
    pub fn open(args: &OutputArgs, csv_header: &[&str]) -> io::Result<Self> {
        let writer: Box<dyn Write> = match &args.out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        match args.format {
            Format::Json => Ok(Self { format: Format::Json, json: writer, csv: None }),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(writer);
                w.write_record(csv_header)?;
                Ok(Self { format: Format::Csv, json: Box::new(io::sink()), csv: Some(w) })
            }
        }
    }

    pub fn record<T: Serialize>(&mut self, json: &T, csv_row: &[String]) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.json, json)?;
                self.json.write_all(b"\n")
            }
            Format::Csv => self.csv.as_mut().expect("csv writer").write_record(csv_row).map_err(io::Error::from),
        }
    }

    /// A trailing record that only the JSON stream carries.
    pub fn json_only<T: Serialize>(&mut self, json: &T) -> io::Result<()> {
        if self.format == Format::Json {
            serde_json::to_writer(&mut self.json, json)?;
            self.json.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> io::Result<()> {
        match self.csv.as_mut() {
            Some(w) => w.flush(),
            None => self.json.flush(),
        }
    }
}

/// Shortest round-trip decimal form, identical to the JSON rendering of finite values.
pub fn num(v: f64) -> String {
    if v.is_finite() {
        serde_json::to_string(&v).expect("finite floats serialize")
    } else if v.is_nan() {
        "NaN".to_owned()
    } else if v > 0.0 {
        "inf".to_owned()
    } else {
        "-inf".to_owned()
    }
}

pub fn opt<T: Display>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}
