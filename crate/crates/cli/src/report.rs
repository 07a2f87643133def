//! Tabular reports rendered as text, CSV or JSON.

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Properties that failed, each with a short explanation.
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Report {
            command,
            columns: columns.to_vec(),
            rows: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn fail(&mut self, property: &str, detail: impl AsRef<str>) {
        self.failures.push(format!("{property}: {}", detail.as_ref()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        if self.rows.len() == 1 {
            let pairs: Vec<String> = self
                .columns
                .iter()
                .zip(&self.rows[0])
                .map(|(c, v)| format!("{c}={v}"))
                .collect();
            out.push_str(&pairs.join(" "));
            out.push('\n');
        } else {
            let widths: Vec<usize> = (0..self.columns.len())
                .map(|j| {
                    self.rows
                        .iter()
                        .map(|r| r[j].len())
                        .chain([self.columns[j].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: Vec<&str>| -> String {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            out.push_str(&line(self.columns.clone()));
            for r in &self.rows {
                out.push_str(&line(r.iter().map(String::as_str).collect()));
            }
        }
        for f in &self.failures {
            out.push_str(&format!("FAILED {f}\n"));
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("writing to memory");
        for r in &self.rows {
            w.write_record(r).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
    }

    fn json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut m = Map::new();
                for (c, v) in self.columns.iter().zip(r) {
                    m.insert((*c).to_string(), json!(v));
                }
                Value::Object(m)
            })
            .collect();
        let v = json!({
            "command": self.command,
            "passed": self.failures.is_empty(),
            "rows": rows,
            "failures": self.failures,
        });
        serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo", &["a", "b"]);
        r.row(vec!["1".into(), "x,y".into()]);
        r
    }

    #[test]
    fn single_row_text_is_key_value() {
        assert_eq!(sample().render(Format::Text), "a=1 b=x,y\n");
    }

    #[test]
    fn tables_align_columns() {
        let mut r = sample();
        r.row(vec!["22".into(), "z".into()]);
        assert_eq!(r.render(Format::Text), "a   b\n1   x,y\n22  z\n");
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(sample().render(Format::Csv), "a,b\n1,\"x,y\"\n");
    }

    #[test]
    fn json_carries_failures() {
        let mut r = sample();
        r.fail("some-property", "broken");
        let v: Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(v["passed"], json!(false));
        assert_eq!(v["rows"][0]["b"], json!("x,y"));
        assert_eq!(v["failures"][0], json!("some-property: broken"));
    }
}
