use anyhow::Result;
use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Rows of strings with an optional header. Without a header, rows may have
/// different lengths.
pub struct Table {
    header: Option<Vec<String>>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Table { header: Some(header), rows: Vec::new() }
    }

    pub fn ragged(rows: Vec<Vec<String>>) -> Self {
        Table { header: None, rows }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.text()),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    /// Tab-separated rows; the header is omitted so single-column output
    /// stays one item per line.
    fn text(&self) -> String {
        self.rows.iter().map(|r| r.join("\t") + "\n").collect()
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().flexible(self.header.is_none()).from_writer(Vec::new());
        if let Some(h) = &self.header {
            w.write_record(h)?;
        }
        for r in &self.rows {
            w.write_record(r)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn json(&self) -> Result<String> {
        let value = match &self.header {
            None => serde_json::to_value(&self.rows)?,
            Some(h) => serde_json::Value::Array(
                self.rows
                    .iter()
                    .map(|r| {
                        serde_json::Value::Object(
                            h.iter().cloned().zip(r.iter().cloned().map(serde_json::Value::String)).collect(),
                        )
                    })
                    .collect(),
            ),
        };
        let mut s = serde_json::to_string_pretty(&value)?;
        s.push('\n');
        Ok(s)
    }
}
