use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use scmap::gallery::{entry, GalleryEntry};
use scmap::grid::{default_grid, MapSource};
use scmap::{
    Complex64, ExampleName, LineRequest, Orientation, PreVertex, QuadratureConfig, SCSpec,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Grid,
    Boundary,
    Classify,
    Verify,
    Dims,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Svg,
    Json,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "scmap",
    version,
    about = "Schwarz-Christoffel maps of the upper and lower half-planes"
)]
pub struct Args {
    /// grid, boundary, classify, verify or dims
    #[arg(value_enum)]
    pub command: Option<Command>,
    /// Same as the positional command
    #[arg(long = "cmd", value_enum)]
    pub cmd: Option<Command>,
    /// type-a, type-b, type-c, type-d or pillar
    #[arg(long, conflicts_with = "spec")]
    pub example: Option<String>,
    /// TOML file with c, kay, prevertices and optionally base
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// TOML file of [[line]] tables (grid only)
    #[arg(long)]
    pub lines: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// Absolute tolerance of each quadrature
    #[arg(long)]
    pub tol: Option<f64>,
    /// Offset of the lines just above and below the real axis
    #[arg(long, default_value_t = 1e-6)]
    pub epsilon: f64,
}

/// Inline map specification as written in a spec file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub c: [f64; 2],
    pub kay: [f64; 2],
    /// `[x, k]` pairs in increasing `x`.
    pub prevertices: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<f64>,
}

impl SpecFile {
    pub fn to_spec(&self) -> Result<SCSpec, CliError> {
        let invalid = |e: scmap::Error| CliError::Config(format!("invalid spec: {e}"));
        let prevertices = self
            .prevertices
            .iter()
            .map(|&[x, k]| PreVertex::new(x, k))
            .collect::<Result<Vec<_>, _>>()
            .map_err(invalid)?;
        let spec = SCSpec::new(
            Complex64::new(self.c[0], self.c[1]),
            Complex64::new(self.kay[0], self.kay[1]),
            prevertices,
        )
        .map_err(invalid)?;
        match self.base {
            Some(b) => spec.with_base(b).map_err(invalid),
            None => Ok(spec),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineOrientation {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineEntry {
    pub orientation: LineOrientation,
    pub level: f64,
    pub lo: f64,
    pub hi: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinesFile {
    pub line: Vec<LineEntry>,
}

/// Where the map comes from, as echoed into the manifest.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceEcho {
    Example(String),
    Spec(SpecFile),
}

/// Everything a command needs, validated.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub source: MapSource,
    pub echo: SourceEcho,
    pub example: Option<ExampleName>,
    pub lines: Vec<LineRequest>,
    pub format: Format,
    pub out: PathBuf,
    pub cfg: QuadratureConfig,
    pub epsilon: f64,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_spec_file(text: &str) -> Result<SpecFile, CliError> {
    toml::from_str(text).map_err(|e| CliError::Config(format!("spec file: {e}")))
}

pub fn parse_lines_file(text: &str) -> Result<Vec<LineRequest>, CliError> {
    let file: LinesFile =
        toml::from_str(text).map_err(|e| CliError::Config(format!("lines file: {e}")))?;
    file.line
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let orientation = match l.orientation {
                LineOrientation::Horizontal => Orientation::Horizontal,
                LineOrientation::Vertical => Orientation::Vertical,
            };
            LineRequest::new(orientation, l.level, l.lo, l.hi, l.samples)
                .map_err(|e| CliError::Config(format!("line {i}: {e}")))
        })
        .collect()
}

impl RunConfig {
    pub fn from_args(args: &Args) -> Result<Self, CliError> {
        let command = match (args.command, args.cmd) {
            (Some(a), Some(b)) if a != b => {
                return Err(CliError::Config(
                    "positional command and --cmd disagree".into(),
                ))
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => {
                return Err(CliError::Config(
                    "no command given (grid, boundary, classify, verify or dims)".into(),
                ))
            }
        };
        let (source, echo, example) = match (&args.example, &args.spec) {
            (Some(name), None) => {
                let name: ExampleName = name
                    .parse()
                    .map_err(|e: scmap::Error| CliError::Config(e.to_string()))?;
                let e: GalleryEntry = entry(name);
                (
                    MapSource::Gallery(e),
                    SourceEcho::Example(name.to_string()),
                    Some(name),
                )
            }
            (None, Some(path)) => {
                let file = parse_spec_file(&read(path)?)?;
                let spec = file.to_spec()?;
                (MapSource::Spec(spec), SourceEcho::Spec(file), None)
            }
            _ => {
                return Err(CliError::Config(
                    "exactly one of --example and --spec is required".into(),
                ))
            }
        };
        if !(args.epsilon > 0.0 && args.epsilon.is_finite()) {
            return Err(CliError::Config(format!(
                "--epsilon must be positive, got {}",
                args.epsilon
            )));
        }
        let mut cfg = QuadratureConfig::default();
        if let Some(tol) = args.tol {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(CliError::Config(format!(
                    "--tol must be positive, got {tol}"
                )));
            }
            cfg.abs_tol = tol;
        }
        let lines = match &args.lines {
            Some(path) => parse_lines_file(&read(path)?)?,
            None => default_grid(args.epsilon, 400).map_err(|e| CliError::Config(e.to_string()))?,
        };
        Ok(Self {
            command,
            source,
            echo,
            example,
            lines,
            format: args.format,
            out: args.out.clone(),
            cfg,
            epsilon: args.epsilon,
        })
    }
}
