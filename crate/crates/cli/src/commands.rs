use std::f64::consts::PI;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use scmap::gallery::pillar_dimensions;
use scmap::grid::{
    cauchy_riemann_residual, harmonic_residual, sample_line, tangent_orientation_check, MapSource,
    SampleError,
};
use scmap::{BoundaryImage, Complex64, ExampleName, HalfPlane, Mapper, Polyline, SCSpec};
use serde::Serialize;

use crate::config::{Args, Command, Format, RunConfig};
use crate::output::{polyline_csv, polyline_json, svg, write_atomic, LineSummary, Manifest};
use crate::CliError;

const VERIFY_POINTS: usize = 20;
const VERIFY_SEED: u64 = 20_160_511;
const STEP: f64 = 1e-4;
const RESIDUAL_LIMIT: f64 = 1e-4;
const ORACLE_LIMIT: f64 = 1e-6;
/// Residuals this small are rounding noise and carry no decay information.
const NOISE_FLOOR: f64 = 1e-12;

pub fn run(args: &Args) -> Result<(), CliError> {
    let rc = RunConfig::from_args(args)?;
    match rc.command {
        Command::Classify => classify(&rc),
        Command::Dims => dims(&rc),
        Command::Boundary => boundary(&rc),
        Command::Grid => grid(&rc),
        Command::Verify => verify(&rc),
    }
}

fn spec_of(rc: &RunConfig) -> &SCSpec {
    match &rc.source {
        MapSource::Spec(s) => s,
        MapSource::Gallery(e) => &e.spec,
    }
}

fn numerical(e: impl std::fmt::Display) -> CliError {
    CliError::Numerical(e.to_string())
}

fn manifest(rc: &RunConfig, status: &'static str, files: Vec<String>) -> Manifest {
    Manifest {
        command: rc.command,
        source: rc.echo.clone(),
        format: rc.format,
        epsilon: rc.epsilon,
        abs_tol: rc.cfg.abs_tol,
        status,
        files,
        lines: Vec::new(),
        notes: Vec::new(),
    }
}

fn classify(rc: &RunConfig) -> Result<(), CliError> {
    let spec = spec_of(rc);
    println!("type={} sum_k={}", spec.classify().letter(), spec.sum_k());
    Ok(())
}

fn dims(rc: &RunConfig) -> Result<(), CliError> {
    if rc.example != Some(ExampleName::Pillar) {
        return Err(CliError::Config("dims needs --example pillar".into()));
    }
    let (a, b) = pillar_dimensions();
    println!("a={a:.10} b={b:.10}");
    Ok(())
}

fn half_name(half: HalfPlane) -> &'static str {
    match half {
        HalfPlane::Upper => "upper",
        HalfPlane::Lower => "lower",
    }
}

fn opt_pair(z: Option<Complex64>) -> Option<[f64; 2]> {
    z.map(|z| [z.re, z.im])
}

#[derive(Serialize)]
struct BoundaryJson {
    half: &'static str,
    vertices: Vec<Option<[f64; 2]>>,
    turns: Vec<f64>,
    alpha0: f64,
    alpha_n: f64,
    w_infinity_finite: bool,
    w_infinity: Option<[f64; 2]>,
    closure_gap: Option<f64>,
    /// `null` marks an infinite segment.
    segment_lengths: Vec<Option<f64>>,
}

impl BoundaryJson {
    fn new(img: &BoundaryImage) -> Self {
        Self {
            half: half_name(img.half),
            vertices: img.vertices.iter().map(|v| opt_pair(*v)).collect(),
            turns: img.turns.clone(),
            alpha0: img.alpha0.radians(),
            alpha_n: img.alpha_n.radians(),
            w_infinity_finite: img.w_infinity_finite,
            w_infinity: opt_pair(img.w_infinity),
            closure_gap: img.closure_gap(),
            segment_lengths: img
                .segment_lengths
                .iter()
                .map(|l| l.is_finite().then_some(*l))
                .collect(),
        }
    }
}

fn boundary(rc: &RunConfig) -> Result<(), CliError> {
    let spec = spec_of(rc);
    let images = [HalfPlane::Upper, HalfPlane::Lower]
        .into_iter()
        .map(|h| spec.boundary_image(h, &rc.cfg))
        .collect::<Result<Vec<_>, _>>()
        .map_err(numerical)?;
    for img in &images {
        println!(
            "half={} alpha0={:.12} alpha_n={:.12} w_infinity_finite={}",
            half_name(img.half),
            img.alpha0.radians(),
            img.alpha_n.radians(),
            img.w_infinity_finite
        );
        for (i, v) in img.vertices.iter().enumerate() {
            match v {
                Some(w) => println!(
                    "  w{}={:.12}{:+.12}i turn={:.12}",
                    i + 1,
                    w.re,
                    w.im,
                    img.turns[i]
                ),
                None => println!("  w{}=infinity turn={:.12}", i + 1, img.turns[i]),
            }
        }
    }
    let (name, body) = match rc.format {
        Format::Csv => {
            let mut out = String::from("half,index,x,k,w_re,w_im,turn,segment_length\n");
            for img in &images {
                for (i, p) in spec.prevertices().iter().enumerate() {
                    let (re, im) =
                        img.vertices[i].map_or((f64::INFINITY, f64::INFINITY), |w| (w.re, w.im));
                    let len = img
                        .segment_lengths
                        .get(i)
                        .map_or(String::new(), |l| format!("{l:.16e}"));
                    writeln!(
                        out,
                        "{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}",
                        half_name(img.half),
                        i + 1,
                        p.x,
                        p.k,
                        re,
                        im,
                        img.turns[i],
                        len
                    )
                    .expect("writing to a String");
                }
            }
            ("boundary.csv", out)
        }
        Format::Json => {
            let doc: Vec<BoundaryJson> = images.iter().map(BoundaryJson::new).collect();
            (
                "boundary.json",
                serde_json::to_string_pretty(&doc).expect("serializable") + "\n",
            )
        }
        Format::Svg => {
            let chains: Vec<Polyline> = images.iter().map(vertex_chain).collect();
            let refs: Vec<&Polyline> = chains.iter().collect();
            ("boundary.svg", svg(&refs))
        }
    };
    write_atomic(&rc.out, name, body.as_bytes())?;
    let m = manifest(rc, "ok", vec![name.to_string()]);
    write_atomic(&rc.out, "manifest.json", m.to_json().as_bytes())?;
    Ok(())
}

/// Finite vertices in order, broken where a vertex lies at infinity.
fn vertex_chain(img: &BoundaryImage) -> Polyline {
    let mut line = Polyline::default();
    let mut gap = false;
    for v in &img.vertices {
        match v {
            Some(w) => {
                if gap && !line.points.is_empty() {
                    line.breaks.push(line.points.len());
                }
                gap = false;
                line.points.push(*w);
                line.source_points.push(Complex64::new(0.0, 0.0));
            }
            None => gap = true,
        }
    }
    line
}

fn grid(rc: &RunConfig) -> Result<(), CliError> {
    let mapper = Mapper::new(rc.source.clone(), rc.cfg);
    let results: Vec<Result<Polyline, SampleError>> = rc
        .lines
        .par_iter()
        .map(|req| sample_line(&mapper, req))
        .collect();
    let mut files = Vec::new();
    let mut summaries = Vec::new();
    let mut notes = Vec::new();
    let mut polylines = Vec::new();
    for (id, (req, result)) in rc.lines.iter().zip(results).enumerate() {
        let (line, error) = match result {
            Ok(line) => (line, None),
            Err(e) => {
                notes.push(format!("line {id}: {e}"));
                (*e.partial, Some(e.cause.to_string()))
            }
        };
        let summary = LineSummary::new(id, req, &line, error);
        let (name, body) = match rc.format {
            Format::Csv => (format!("line_{id:03}.csv"), polyline_csv(id, &line)),
            Format::Json => (format!("line_{id:03}.json"), polyline_json(&summary, &line)),
            Format::Svg => (format!("line_{id:03}.svg"), svg(&[&line])),
        };
        write_atomic(&rc.out, &name, body.as_bytes())?;
        files.push(name);
        summaries.push(summary);
        polylines.push(line);
    }
    if rc.format == Format::Svg {
        let refs: Vec<&Polyline> = polylines.iter().collect();
        write_atomic(&rc.out, "grid.svg", svg(&refs).as_bytes())?;
        files.push("grid.svg".into());
    }
    let failed = !notes.is_empty();
    let mut m = manifest(rc, if failed { "failed" } else { "ok" }, files);
    m.lines = summaries;
    m.notes = notes;
    write_atomic(&rc.out, "manifest.json", m.to_json().as_bytes())?;
    if failed {
        return Err(CliError::Numerical(format!(
            "{} line(s) failed, partial output written (see manifest.json)",
            m.notes.len()
        )));
    }
    println!("wrote {} lines to {}", rc.lines.len(), rc.out.display());
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
struct CheckRow {
    check: &'static str,
    z: [f64; 2],
    value: f64,
    limit: f64,
    pass: bool,
}

fn verification_points(spec: &SCSpec, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let mut points = Vec::with_capacity(VERIFY_POINTS);
    while points.len() < VERIFY_POINTS {
        let y = rng.gen_range(0.3..2.5);
        let z = Complex64::new(
            rng.gen_range(-2.5..2.5),
            if points.len() % 2 == 0 { y } else { -y },
        );
        if spec.prevertices().iter().all(|p| (z - p.x).norm() > 0.3) {
            points.push(z);
        }
    }
    points
}

fn decay_ok(coarse: f64, fine: f64) -> bool {
    coarse <= NOISE_FLOOR || coarse >= 3.0 * fine
}

fn verify(rc: &RunConfig) -> Result<(), CliError> {
    if rc.format == Format::Svg {
        return Err(CliError::Config("verify writes csv or json".into()));
    }
    let mapper = Mapper::new(rc.source.clone(), rc.cfg);
    let spec = mapper.spec().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    let mut rows = Vec::new();
    let mut push = |check, z: Complex64, value: f64, limit: f64, pass: bool| {
        rows.push(CheckRow {
            check,
            z: [z.re, z.im],
            value,
            limit,
            pass,
        })
    };
    for z in verification_points(&spec, &mut rng) {
        let cr = cauchy_riemann_residual(&mapper, z, STEP).map_err(numerical)?;
        let cr_half = cauchy_riemann_residual(&mapper, z, STEP / 2.0).map_err(numerical)?;
        push(
            "cauchy-riemann",
            z,
            cr,
            RESIDUAL_LIMIT,
            cr <= RESIDUAL_LIMIT && decay_ok(cr, cr_half),
        );
        let (lu, lv) = harmonic_residual(&mapper, z, STEP).map_err(numerical)?;
        let (lu2, lv2) = harmonic_residual(&mapper, z, STEP / 2.0).map_err(numerical)?;
        let lap = lu.max(lv);
        push(
            "harmonic",
            z,
            lap,
            RESIDUAL_LIMIT,
            lap <= RESIDUAL_LIMIT && decay_ok(lu.hypot(lv), lu2.hypot(lv2)),
        );
        let theta = rng.gen_range(-PI..PI);
        let (_, tangent) = tangent_orientation_check(&mapper, z, theta).map_err(numerical)?;
        push(
            "tangent",
            z,
            tangent,
            RESIDUAL_LIMIT,
            tangent <= RESIDUAL_LIMIT,
        );
    }
    if let MapSource::Gallery(e) = &rc.source {
        for _ in 0..VERIFY_POINTS {
            let z = match e.name {
                ExampleName::TypeC | ExampleName::TypeD => {
                    Complex64::from_polar(rng.gen_range(0.05..0.9), rng.gen_range(0.05..PI - 0.05))
                }
                _ => Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.05..3.0)),
            };
            let closed = e.closed_form(z).map_err(numerical)?;
            let quad = spec.evaluate(z, &rc.cfg).map_err(numerical)?.value;
            let gap = (closed - quad).norm();
            push("oracle", z, gap, ORACLE_LIMIT, gap <= ORACLE_LIMIT);
        }
    }
    let mut failed = 0;
    for check in ["cauchy-riemann", "harmonic", "tangent", "oracle"] {
        let subset: Vec<&CheckRow> = rows.iter().filter(|r| r.check == check).collect();
        if subset.is_empty() {
            continue;
        }
        let worst = subset.iter().map(|r| r.value).fold(0.0, f64::max);
        let ok = subset.iter().all(|r| r.pass);
        failed += usize::from(!ok);
        println!(
            "{check} max={worst:.3e} limit={:.0e} {}",
            subset[0].limit,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    let (name, body) = match rc.format {
        Format::Json => (
            "verify.json",
            serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        ),
        _ => {
            let mut out = String::from("check,z_re,z_im,value,limit,pass\n");
            for r in &rows {
                writeln!(
                    out,
                    "{},{:.16e},{:.16e},{:.16e},{:.16e},{}",
                    r.check, r.z[0], r.z[1], r.value, r.limit, r.pass
                )
                .expect("writing to a String");
            }
            ("verify.csv", out)
        }
    };
    write_atomic(&rc.out, name, body.as_bytes())?;
    let status = if failed > 0 { "failed" } else { "ok" };
    let m = manifest(rc, status, vec![name.to_string()]);
    write_atomic(&rc.out, "manifest.json", m.to_json().as_bytes())?;
    if failed > 0 {
        return Err(CliError::Numerical(format!(
            "{failed} verification check(s) failed"
        )));
    }
    Ok(())
}
