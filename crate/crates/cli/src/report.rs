//! Solver reports in JSON and aligned text.

use serde::{Deserialize, Serialize};
use specmm::SaddleCertificate;

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
pub struct ReportFile {
    pub value: f64,
    pub upper: f64,
    pub lower: f64,
    pub gap: f64,
    pub converged: bool,
    pub iterations: usize,
    pub x_bar: Vec<Vec<f64>>,
    pub y_bar: Vec<f64>,
    pub shift: f64,
    pub tool_version: String,
}

impl ReportFile {
    pub fn new(cert: &SaddleCertificate, shift: f64) -> Self {
        Self {
            value: cert.value(),
            upper: cert.upper,
            lower: cert.lower,
            gap: cert.gap,
            converged: cert.converged,
            iterations: cert.iterations,
            x_bar: cert.x_bar.matrix().to_rows(),
            y_bar: cert.y_bar.weights().to_vec(),
            shift,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("finite report") + "\n"
    }

    pub fn to_text(&self) -> String {
        let row = |v: &[f64]| v.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<12} {v}\n"));
        line("value", format!("{:?}", self.value));
        line("upper", format!("{:?}", self.upper));
        line("lower", format!("{:?}", self.lower));
        line("gap", format!("{:?}", self.gap));
        line("converged", self.converged.to_string());
        line("iterations", self.iterations.to_string());
        line("shift", format!("{:?}", self.shift));
        line("y_bar", row(&self.y_bar));
        for (i, r) in self.x_bar.iter().enumerate() {
            line(if i == 0 { "x_bar" } else { "" }, row(r));
        }
        line("version", self.tool_version.clone());
        out
    }
}
