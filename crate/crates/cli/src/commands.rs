//! The user commands. Each returns an [`Output`] instead of printing, so the
//! binary stays a thin shell and tests can call commands directly.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use lattice_pick_core::certificate::{check_certificate, deserialize, serialize, Certificate};
use lattice_pick_core::decompose::decompose;
use lattice_pick_core::{extreme_point_count, is_convex, verify_pick, Orientation};
use num_traits::Zero;

use crate::gen::{generate, max_retries_from_env, GenError, GeneratorConfig};
use crate::polyfile::PolygonFile;
use crate::svg::{render, SvgOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_EXHAUSTED: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Output {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Output { code, stdout: String::new(), stderr }
    }
}

fn load(file: &Path) -> Result<PolygonFile, Output> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Output::fail(EXIT_MALFORMED, format!("cannot read {}: {e}", file.display())))?;
    PolygonFile::parse(&text).map_err(|e| {
        let code = if e.is_parse_error() { EXIT_MALFORMED } else { EXIT_DOMAIN };
        Output::fail(code, format!("{}: {e}", file.display()))
    })
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn write_out(path: &Path, bytes: &[u8]) -> Result<(), Output> {
    write_atomic(path, bytes).map_err(|e| Output::fail(EXIT_DOMAIN, format!("cannot write {}: {e}", path.display())))
}

pub fn check(file: &Path) -> Output {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return Output::fail(EXIT_MALFORMED, format!("cannot read {}: {e}", file.display())),
    };
    let pf = match PolygonFile::parse(&text) {
        Ok(pf) => pf,
        Err(e) if e.is_parse_error() => return Output::fail(EXIT_MALFORMED, format!("{}: {e}", file.display())),
        Err(e) => return Output { code: EXIT_DOMAIN, stdout: format!("{e}\n"), stderr: String::new() },
    };
    let p = &pf.polygon;
    let orientation = match p.orientation() {
        Orientation::CounterClockwise => "counterclockwise",
        Orientation::Clockwise => "clockwise",
        Orientation::Collinear => "degenerate",
    };
    let mut s = String::new();
    if let Some(name) = &pf.name {
        writeln!(s, "name: {name}").unwrap();
    }
    let convexity = if is_convex(p) { "convex" } else { "non-convex" };
    writeln!(s, "simple, {convexity}, E={}", extreme_point_count(p)).unwrap();
    writeln!(s, "orientation: {orientation}").unwrap();
    writeln!(s, "vertices: {}", p.len()).unwrap();
    Output::ok(s)
}

pub fn pick(file: &Path) -> Output {
    let pf = match load(file) {
        Ok(pf) => pf,
        Err(out) => return out,
    };
    let r = verify_pick(&pf.polygon);
    let code = if r.residual.is_zero() { EXIT_OK } else { EXIT_DOMAIN };
    Output { code, stdout: format!("{} residual={}\n", r.counts, r.residual), stderr: String::new() }
}

pub fn decompose_cmd(file: &Path, out: Option<&Path>) -> Output {
    let pf = match load(file) {
        Ok(pf) => pf,
        Err(out) => return out,
    };
    let tree = match decompose(&pf.polygon) {
        Ok(t) => t,
        Err(e) => return Output::fail(EXIT_INTERNAL, format!("internal error: {e}")),
    };
    let bytes = serialize(&Certificate::from_tree(&tree));
    let summary = format!("leaves={} depth={}\n", tree.leaf_count(), tree.depth());
    match out {
        Some(path) => match write_out(path, &bytes) {
            Ok(()) => Output::ok(summary),
            Err(o) => o,
        },
        None => {
            let mut cert = String::from_utf8(bytes).expect("certificates are JSON text");
            cert.push('\n');
            Output { code: EXIT_OK, stdout: cert, stderr: summary }
        }
    }
}

pub fn certify(cert: &Path) -> Output {
    let bytes = match std::fs::read(cert) {
        Ok(b) => b,
        Err(e) => return Output::fail(EXIT_MALFORMED, format!("cannot read {}: {e}", cert.display())),
    };
    let report = match deserialize(&bytes).and_then(|c| check_certificate(&c)) {
        Ok(r) => r,
        Err(e) => return Output::fail(EXIT_MALFORMED, format!("{}: {e}", cert.display())),
    };
    let code = if report.valid { EXIT_OK } else { EXIT_DOMAIN };
    Output { code, stdout: report.to_string(), stderr: String::new() }
}

pub fn gen(vertex_count: usize, coord_bound: u64, seed: u64, out: Option<&Path>) -> Output {
    let max_retries = match max_retries_from_env() {
        Ok(m) => m,
        Err(e) => return Output::fail(EXIT_MALFORMED, e.to_string()),
    };
    let cfg = GeneratorConfig { vertex_count, coord_bound, seed, max_retries };
    let polygon = match generate(&cfg) {
        Ok(p) => p,
        Err(e @ GenError::Exhausted { .. }) => return Output::fail(EXIT_EXHAUSTED, e.to_string()),
        Err(e) => return Output::fail(EXIT_MALFORMED, e.to_string()),
    };
    let name = Some(format!("gen n={vertex_count} b={coord_bound} s={seed}"));
    let text = PolygonFile { polygon, name }.to_json();
    match out {
        Some(path) => match write_out(path, text.as_bytes()) {
            Ok(()) => Output::ok(String::new()),
            Err(o) => o,
        },
        None => Output::ok(text),
    }
}

pub fn svg(file: &Path, opts: SvgOptions, out: Option<&Path>) -> Output {
    let pf = match load(file) {
        Ok(pf) => pf,
        Err(out) => return out,
    };
    let text = match render(&pf.polygon, opts) {
        Ok(t) => t,
        Err(e) => return Output::fail(EXIT_INTERNAL, format!("internal error: {e}")),
    };
    match out {
        Some(path) => match write_out(path, text.as_bytes()) {
            Ok(()) => Output::ok(String::new()),
            Err(o) => o,
        },
        None => Output::ok(text),
    }
}
