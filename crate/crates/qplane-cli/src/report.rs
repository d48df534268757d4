//! Report document, run manifest and the CSV/SVG emitters.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub value: Option<f64>,
    pub bound: Option<f64>,
    pub tolerance: Option<f64>,
}

impl Check {
    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        Check { name: name.into(), status: status(ok), value: None, bound: None, tolerance: None }
    }

    /// Exact identity: `failures` counts the inputs where the sides differ.
    pub fn exact(name: impl Into<String>, failures: usize) -> Self {
        Check {
            name: name.into(),
            status: status(failures == 0),
            value: Some(failures as f64),
            bound: None,
            tolerance: Some(0.0),
        }
    }

    /// Passes when |value| ≤ tolerance.
    pub fn below(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            status: status(value.abs() <= tolerance),
            value: Some(value),
            bound: None,
            tolerance: Some(tolerance),
        }
    }

    /// Passes when |value − bound| ≤ tolerance·|bound|.
    pub fn relative(name: impl Into<String>, value: f64, bound: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            status: status((value - bound).abs() <= tolerance * bound.abs()),
            value: Some(value),
            bound: Some(bound),
            tolerance: Some(tolerance),
        }
    }

    /// Passes when value ≥ bound − tolerance.
    pub fn at_least(name: impl Into<String>, value: f64, bound: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            status: status(value >= bound - tolerance),
            value: Some(value),
            bound: Some(bound),
            tolerance: Some(tolerance),
        }
    }
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OutputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Manifest {
    pub command: String,
    pub subcommand: String,
    pub parameters: BTreeMap<String, Value>,
    pub library_version: String,
    pub timestamp: Option<String>,
    pub outputs: Vec<OutputDigest>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub manifest: Manifest,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub details: Value,
}

impl Document {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

/// Header plus rows, one row per parameter point.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn from_checks(checks: &[Check]) -> Self {
        let mut t = Table::new(&["name", "status", "value", "bound", "tolerance"]);
        for c in checks {
            let st = if c.status == Status::Pass { "pass" } else { "fail" };
            t.push(vec![c.name.clone(), st.into(), opt(c.value), opt(c.bound), opt(c.tolerance)]);
        }
        t
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

pub fn num(x: f64) -> String {
    format!("{x}")
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

/// Polylines on shared axes.
#[derive(Clone, Debug)]
pub struct Plot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<(String, Vec<(f64, f64)>)>,
}

impl Plot {
    pub fn to_svg(&self) -> String {
        const W: f64 = 640.0;
        const H: f64 = 400.0;
        const M: f64 = 50.0;
        let pts = self.series.iter().flat_map(|(_, p)| p.iter()).filter(|(x, y)| x.is_finite() && y.is_finite());
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        if !(x1 > x0) {
            x1 = x0 + 1.0;
        }
        if !(y1 > y0) {
            y1 = y0 + 1.0;
        }
        let sx = |x: f64| M + (x - x0) / (x1 - x0) * (W - 2.0 * M);
        let sy = |y: f64| H - M - (y - y0) / (y1 - y0) * (H - 2.0 * M);
        let colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];
        let mut s = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">\n"
        );
        s += &format!("<text x=\"{}\" y=\"20\" text-anchor=\"middle\">{}</text>\n", W / 2.0, esc(&self.title));
        s += &format!(
            "<rect x=\"{M}\" y=\"{M}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
            W - 2.0 * M,
            H - 2.0 * M
        );
        s += &format!("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", W / 2.0, H - 10.0, esc(&self.x_label));
        s += &format!("<text x=\"12\" y=\"{}\" transform=\"rotate(-90 12 {})\" text-anchor=\"middle\">{}</text>\n", H / 2.0, H / 2.0, esc(&self.y_label));
        s += &format!("<text x=\"{M}\" y=\"{}\" font-size=\"10\">{x0:.4}</text>\n", H - M + 14.0);
        s += &format!("<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\">{x1:.4}</text>\n", W - M, H - M + 14.0);
        s += &format!("<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\">{y0:.4}</text>\n", M - 4.0, H - M);
        s += &format!("<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\">{y1:.4}</text>\n", M - 4.0, M + 10.0);
        for (i, (name, p)) in self.series.iter().enumerate() {
            let c = colors[i % colors.len()];
            let path: Vec<String> = p
                .iter()
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|&(x, y)| format!("{:.3},{:.3}", sx(x), sy(y)))
                .collect();
            s += &format!("<polyline fill=\"none\" stroke=\"{c}\" points=\"{}\"/>\n", path.join(" "));
            s += &format!("<text x=\"{}\" y=\"{}\" font-size=\"11\" fill=\"{c}\">{}</text>\n", W - M - 120.0, M + 16.0 * (i as f64 + 1.0), esc(name));
        }
        s += "</svg>\n";
        s
    }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn write_file(path: &Path, contents: &str) -> Result<OutputDigest, CliError> {
    std::fs::write(path, contents)?;
    Ok(OutputDigest { path: path.display().to_string(), sha256: format!("{:x}", Sha256::digest(contents.as_bytes())) })
}
