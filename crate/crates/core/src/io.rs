//! CSV and JSON formats for experiment output.
//!
//! Floats are written as `{:.16e}` (17 significant digits), enough to
//! round-trip every binary64 value exactly, so output files are
//! byte-reproducible and re-readable without loss.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signal::Signal;

pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Named numeric columns of equal length.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    headers: Vec<String>,
    columns: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(headers: Vec<String>, columns: Vec<Vec<f64>>) -> Result<Self> {
        if headers.is_empty() {
            return Err(Error::InvalidArgument("table needs at least one column".into()));
        }
        if headers.len() != columns.len() {
            return Err(Error::LengthMismatch { expected: headers.len(), got: columns.len() });
        }
        for (i, h) in headers.iter().enumerate() {
            if h.is_empty() || h.contains([',', '"', '\n', '\r']) || h.starts_with('#') {
                return Err(Error::InvalidArgument(format!("bad column name {h:?}")));
            }
            if headers[..i].contains(h) {
                return Err(Error::InvalidArgument(format!("duplicate column name {h:?}")));
            }
        }
        let rows = columns[0].len();
        if let Some(c) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::LengthMismatch { expected: rows, got: c.len() });
        }
        Ok(Self { headers, columns })
    }

    pub fn from_pairs(pairs: Vec<(&str, Vec<f64>)>) -> Result<Self> {
        let (h, c): (Vec<_>, Vec<_>) = pairs.into_iter().map(|(h, c)| (h.to_string(), c)).unzip();
        Self::new(h, c)
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn rows(&self) -> usize {
        self.columns[0].len()
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.headers.iter().position(|h| h == name).map(|i| self.columns[i].as_slice())
    }

    pub fn columns(&self) -> &[Vec<f64>] {
        &self.columns
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for r in 0..self.rows() {
            let row: Vec<String> = self.columns.iter().map(|c| format_float(c[r])).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Parses a header row followed by numeric rows. Lines starting with `#`
/// before the header are skipped.
pub fn parse_series_csv(text: &str) -> Result<Table> {
    parse_with_comments(text).map(|(t, _)| t)
}

fn parse_with_comments(text: &str) -> Result<(Table, Vec<(usize, String)>)> {
    let mut comments = Vec::new();
    let mut body_start = 0;
    let mut first_body_line = 1;
    for (i, line) in text.split_inclusive('\n').enumerate() {
        if let Some(c) = line.strip_prefix('#') {
            comments.push((i + 1, c.trim_end_matches(['\n', '\r']).to_string()));
            body_start += line.len();
            first_body_line = i + 2;
        } else {
            break;
        }
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .trim(csv::Trim::All)
        .from_reader(&text.as_bytes()[body_start..]);
    let line_of = |pos: Option<&csv::Position>| pos.map_or(first_body_line, |p| p.line() as usize + first_body_line - 1);
    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| Error::Parse { line: line_of(e.position()), msg: e.to_string() })?
        .iter()
        .map(str::to_string)
        .collect();
    if headers.len() == 1 && headers[0].is_empty() {
        return Err(Error::Parse { line: first_body_line, msg: "missing header row".into() });
    }
    let mut columns = vec![Vec::new(); headers.len()];
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::Parse { line: line_of(e.position()), msg: e.to_string() })?;
        let line = line_of(rec.position());
        for (c, field) in rec.iter().enumerate() {
            let v: f64 = field
                .parse()
                .map_err(|_| Error::Parse { line, msg: format!("not a number: {field:?}") })?;
            if !v.is_finite() {
                return Err(Error::Parse { line, msg: format!("non-finite value {field:?}") });
            }
            columns[c].push(v);
        }
    }
    let table = Table::new(headers, columns).map_err(|e| Error::Parse { line: first_body_line, msg: e.to_string() })?;
    Ok((table, comments))
}

/// Signal CSV: `# key: value` metadata lines, then `t,y` columns.
pub fn write_signal_csv(signal: &Signal, metadata: &BTreeMap<String, String>) -> Result<String> {
    let mut out = String::new();
    for (k, v) in metadata {
        if k.is_empty() || k.contains([':', '\n', '\r']) || v.contains(['\n', '\r']) {
            return Err(Error::InvalidArgument(format!("bad metadata entry {k:?}")));
        }
        out.push_str(&format!("# {k}: {v}\n"));
    }
    let table = Table::from_pairs(vec![("t", signal.t().to_vec()), ("y", signal.y().to_vec())])?;
    out.push_str(&table.to_csv());
    Ok(out)
}

pub fn parse_signal_csv(text: &str) -> Result<(Signal, BTreeMap<String, String>)> {
    let (table, comments) = parse_with_comments(text)?;
    let mut metadata = BTreeMap::new();
    for (line, c) in comments {
        let (k, v) = c
            .split_once(':')
            .ok_or_else(|| Error::Parse { line, msg: "metadata line must be `# key: value`".into() })?;
        let k = k.trim();
        if k.is_empty() {
            return Err(Error::Parse { line, msg: "empty metadata key".into() });
        }
        metadata.insert(k.to_string(), v.trim().to_string());
    }
    if table.headers() != ["t", "y"] {
        return Err(Error::Parse { line: 1, msg: format!("expected columns t,y, found {}", table.headers().join(",")) });
    }
    let signal = Signal::new(table.columns()[0].clone(), table.columns()[1].clone())
        .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    Ok((signal, metadata))
}

/// Summary written next to an experiment's CSV files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub name: String,
    pub scalars: BTreeMap<String, f64>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
    #[serde(default)]
    pub series_files: Vec<String>,
}

impl ReportFile {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.name.is_empty() || !self.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_') {
            return bad(format!("bad report name {:?}", self.name));
        }
        if let Some((k, v)) = self.scalars.iter().find(|(_, v)| !v.is_finite()) {
            return bad(format!("scalar {k} is not finite ({v})"));
        }
        for (i, f) in self.series_files.iter().enumerate() {
            let stem_ok = f
                .strip_suffix(".csv")
                .is_some_and(|s| !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_'));
            if !stem_ok {
                return bad(format!("bad series file name {f:?}"));
            }
            if self.series_files[..i].contains(f) {
                return bad(format!("duplicate series file {f:?}"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        self.validate()?;
        serde_json::to_string_pretty(self).map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

pub fn parse_report_json(text: &str) -> Result<ReportFile> {
    let r: ReportFile =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    r.validate().map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for v in [0.0, -0.0, 1.0, 0.1, std::f64::consts::PI, 1e-300, f64::MAX, 5e-324] {
            let s = format_float(v);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits(), "{s}");
        }
        assert_eq!(format_float(1.0), "1.0000000000000000e0");
    }

    #[test]
    fn table_round_trip() {
        let t = Table::from_pairs(vec![("n", vec![1.0, 2.0]), ("err", vec![0.1, 1e-17])]).unwrap();
        let csv = t.to_csv();
        assert!(csv.starts_with("n,err\n"));
        assert_eq!(parse_series_csv(&csv).unwrap(), t);
    }

    #[test]
    fn table_rejects_bad_shapes() {
        assert!(Table::from_pairs(vec![("a", vec![1.0]), ("b", vec![])]).is_err());
        assert!(Table::from_pairs(vec![("a", vec![]), ("a", vec![])]).is_err());
        assert!(Table::from_pairs(vec![("a,b", vec![])]).is_err());
        assert!(Table::new(vec![], vec![]).is_err());
    }

    #[test]
    fn series_parse_errors_carry_lines() {
        match parse_series_csv("a,b\n1,2\n3,x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_series_csv("a,b\n1\n").is_err());
        assert!(parse_series_csv("a\nNaN\n").is_err());
        assert!(parse_series_csv("").is_err());
    }

    #[test]
    fn signal_round_trip_with_metadata() {
        let s = Signal::new(vec![0.0, 0.5, 1.25], vec![1.0, -2.0, 3.5]).unwrap();
        let mut meta = BTreeMap::new();
        meta.insert("seed".to_string(), "42".to_string());
        meta.insert("spacing".to_string(), "uneven".to_string());
        let text = write_signal_csv(&s, &meta).unwrap();
        assert!(text.starts_with("# seed: 42\n# spacing: uneven\nt,y\n"));
        let (back, m) = parse_signal_csv(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(m, meta);
    }

    #[test]
    fn signal_parse_rejects_bad_input() {
        assert!(parse_signal_csv("x,y\n0,1\n1,2\n").is_err());
        assert!(parse_signal_csv("t,y\n1,1\n0,2\n").is_err());
        assert!(parse_signal_csv("# no colon\nt,y\n0,1\n1,2\n").is_err());
        assert!(parse_signal_csv("t,y\n0,1\n").is_err());
    }

    #[test]
    fn report_round_trip_and_validation() {
        let mut r = ReportFile {
            name: "converge".into(),
            scalars: BTreeMap::from([("n_star".to_string(), 182.0)]),
            metadata: BTreeMap::from([("seed".to_string(), "42".to_string())]),
            series_files: vec!["runge.csv".into()],
        };
        let j = r.to_json().unwrap();
        assert_eq!(parse_report_json(&j).unwrap(), r);
        r.series_files.push("../x.csv".into());
        assert!(r.to_json().is_err());
        assert!(parse_report_json(r#"{"name":"a","scalars":{},"extra":1}"#).is_err());
        assert!(parse_report_json(r#"{"name":"","scalars":{}}"#).is_err());
        assert!(parse_report_json(r#"{"name":"a","scalars":{"x":null}}"#).is_err());
    }
}
