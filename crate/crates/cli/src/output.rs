//! File writers. Every file is written to a temporary name and renamed into
//! place, so readers never see a half-written file.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use scmap::{Complex64, LineRequest, Orientation, Polyline};
use serde::Serialize;

use crate::config::{Command, Format, SourceEcho};

pub const CSV_HEADER: &str = "line_id,idx,z_re,z_im,w_re,w_im,break_flag";

pub fn write_atomic(dir: &Path, name: &str, contents: &[u8]) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let target = dir.join(name);
    let tmp = dir.join(format!(".{name}.tmp"));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, &target)?;
    Ok(target)
}

pub fn polyline_csv(line_id: usize, line: &Polyline) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (idx, (z, w)) in line.source_points.iter().zip(&line.points).enumerate() {
        let flag = u8::from(line.breaks.contains(&idx));
        writeln!(
            out,
            "{line_id},{idx},{:.16e},{:.16e},{:.16e},{:.16e},{flag}",
            z.re, z.im, w.re, w.im
        )
        .expect("writing to a String");
    }
    out
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Debug, Clone, Serialize)]
pub struct LineSummary {
    pub line_id: usize,
    pub orientation: &'static str,
    pub level: f64,
    pub lo: f64,
    pub hi: f64,
    pub samples: usize,
    pub points: usize,
    pub breaks: Vec<usize>,
    pub skipped: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl LineSummary {
    pub fn new(line_id: usize, req: &LineRequest, line: &Polyline, error: Option<String>) -> Self {
        let (lo, hi) = req.span();
        Self {
            line_id,
            orientation: match req.orientation() {
                Orientation::Horizontal => "horizontal",
                Orientation::Vertical => "vertical",
            },
            level: req.level(),
            lo,
            hi,
            samples: req.samples(),
            points: line.points.len(),
            breaks: line.breaks.clone(),
            skipped: line.skipped.iter().copied().map(pair).collect(),
            error,
        }
    }
}

#[derive(Serialize)]
struct PolylineJson<'a> {
    #[serde(flatten)]
    summary: &'a LineSummary,
    z: Vec<[f64; 2]>,
    w: Vec<[f64; 2]>,
}

pub fn polyline_json(summary: &LineSummary, line: &Polyline) -> String {
    let doc = PolylineJson {
        summary,
        z: line.source_points.iter().copied().map(pair).collect(),
        w: line.points.iter().copied().map(pair).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

const SVG_SIZE: f64 = 800.0;
const SVG_MARGIN: f64 = 20.0;

/// Draws each polyline as one or more paths, split at its breaks.
pub fn svg(lines: &[&Polyline]) -> String {
    let finite: Vec<Complex64> = lines
        .iter()
        .flat_map(|l| l.points.iter().copied())
        .filter(|w| w.re.is_finite() && w.im.is_finite())
        .collect();
    let (mut u0, mut u1, mut v0, mut v1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for w in &finite {
        u0 = u0.min(w.re);
        u1 = u1.max(w.re);
        v0 = v0.min(w.im);
        v1 = v1.max(w.im);
    }
    if finite.is_empty() {
        (u0, u1, v0, v1) = (-1.0, 1.0, -1.0, 1.0);
    }
    let span = (u1 - u0).max(v1 - v0).max(1e-12);
    let scale = (SVG_SIZE - 2.0 * SVG_MARGIN) / span;
    let x = |u: f64| SVG_MARGIN + (u - u0) * scale;
    let y = |v: f64| SVG_SIZE - SVG_MARGIN - (v - v0) * scale;

    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n",
        s = SVG_SIZE
    );
    if u0 <= 0.0 && u1 >= 0.0 {
        writeln!(
            out,
            "<line x1=\"{0:.3}\" y1=\"0\" x2=\"{0:.3}\" y2=\"{SVG_SIZE}\" stroke=\"#bbb\" stroke-width=\"0.5\"/>",
            x(0.0)
        )
        .expect("writing to a String");
    }
    if v0 <= 0.0 && v1 >= 0.0 {
        writeln!(
            out,
            "<line x1=\"0\" y1=\"{0:.3}\" x2=\"{SVG_SIZE}\" y2=\"{0:.3}\" stroke=\"#bbb\" stroke-width=\"0.5\"/>",
            y(0.0)
        )
        .expect("writing to a String");
    }
    for line in lines {
        let mut d = String::new();
        for (idx, w) in line.points.iter().enumerate() {
            if !(w.re.is_finite() && w.im.is_finite()) {
                continue;
            }
            let cmd = if idx == 0 || line.breaks.contains(&idx) {
                'M'
            } else {
                'L'
            };
            write!(d, "{cmd}{:.3} {:.3} ", x(w.re), y(w.im)).expect("writing to a String");
        }
        writeln!(
            out,
            "<path d=\"{}\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\"/>",
            d.trim_end()
        )
        .expect("writing to a String");
    }
    out.push_str("</svg>\n");
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub command: Command,
    pub source: SourceEcho,
    pub format: Format,
    pub epsilon: f64,
    pub abs_tol: f64,
    pub status: &'static str,
    pub files: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<LineSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Manifest {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}
