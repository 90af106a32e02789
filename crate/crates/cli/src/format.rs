use std::io::{self, Write};

use serde::Serialize;

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("scientific notation parses back")
}

/// Shortest decimal form of `x` rounded to 12 significant digits.
pub fn num(x: f64) -> String {
    let r = round12(x);
    if r == 0.0 {
        // drop the sign of −0
        return "0".into();
    }
    r.to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub struct CsvWriter<W: Write> {
    out: W,
}

impl<W: Write> CsvWriter<W> {
    pub fn new(mut out: W, header: &[&str]) -> io::Result<Self> {
        writeln!(out, "{}", header.join(","))?;
        Ok(Self { out })
    }

    pub fn row(&mut self, fields: &[String]) -> io::Result<()> {
        writeln!(self.out, "{}", fields.join(","))
    }
}

/// Pretty JSON followed by a newline.
pub fn write_json<W: Write, T: Serialize + ?Sized>(mut out: W, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}
