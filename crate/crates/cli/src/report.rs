use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use chebsig_core::io::{ReportFile, Table};

use crate::error::{HarnessError, HarnessResult};
use crate::svg;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    /// Plot `log10 |y|`.
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub table: Table,
    pub y_scale: Scale,
}

/// Results of one experiment: named scalars, labelled column tables and
/// free-form metadata. Scalar and series labels share one namespace.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    name: String,
    scalars: BTreeMap<String, f64>,
    series: Vec<Series>,
    metadata: BTreeMap<String, String>,
}

impl ExperimentReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), scalars: BTreeMap::new(), series: Vec::new(), metadata: BTreeMap::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    fn label_taken(&self, label: &str) -> bool {
        self.scalars.contains_key(label) || self.series.iter().any(|s| s.label == label)
    }

    pub fn scalar(&mut self, label: &str, value: f64) -> HarnessResult<()> {
        if self.label_taken(label) {
            return Err(HarnessError::DuplicateLabel(label.into()));
        }
        if !value.is_finite() {
            return Err(chebsig_core::Error::InvalidArgument(format!("scalar {label} is not finite")).into());
        }
        self.scalars.insert(label.into(), value);
        Ok(())
    }

    pub fn series(&mut self, label: &str, table: Table, y_scale: Scale) -> HarnessResult<()> {
        if self.label_taken(label) {
            return Err(HarnessError::DuplicateLabel(label.into()));
        }
        self.series.push(Series { label: label.into(), table, y_scale });
        Ok(())
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.metadata.insert(key.into(), value.to_string());
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.scalars.get(label).copied()
    }

    pub fn get_series(&self, label: &str) -> Option<&Table> {
        self.series.iter().find(|s| s.label == label).map(|s| &s.table)
    }

    pub fn get_meta(&self, key: &str) -> Option<&str> {
        self.metadata.get(key).map(String::as_str)
    }

    pub fn scalars(&self) -> &BTreeMap<String, f64> {
        &self.scalars
    }

    pub fn all_series(&self) -> &[Series] {
        &self.series
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn to_file(&self) -> ReportFile {
        ReportFile {
            name: self.name.clone(),
            scalars: self.scalars.clone(),
            metadata: self.metadata.clone(),
            series_files: self.series.iter().map(|s| format!("{}.csv", s.label)).collect(),
        }
    }
}

/// Writes `<out_dir>/<name>/<label>.csv` for every series plus
/// `report.json`, and `<label>.svg` plots when asked. Returns the
/// experiment directory.
pub fn write_report(report: &ExperimentReport, out_dir: &Path, with_svg: bool) -> HarnessResult<PathBuf> {
    let dir = out_dir.join(report.name());
    fs::create_dir_all(&dir).map_err(|e| HarnessError::io(&dir, e))?;
    let json = report.to_file().to_json()?;
    for s in report.all_series() {
        let path = dir.join(format!("{}.csv", s.label));
        fs::write(&path, s.table.to_csv()).map_err(|e| HarnessError::io(&path, e))?;
        if with_svg {
            let path = dir.join(format!("{}.svg", s.label));
            fs::write(&path, svg::line_plot(&s.label, &s.table, s.y_scale)).map_err(|e| HarnessError::io(&path, e))?;
        }
    }
    let path = dir.join("report.json");
    fs::write(&path, json + "\n").map_err(|e| HarnessError::io(&path, e))?;
    Ok(dir)
}
