//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::approx::{sigma_asymptotic, small_z_series, SigmaAsymConfig, SmallZConfig};
use crate::error::Error;
use crate::inversion::{
    boundary_transform_par, build_boundary_mesh, density_from_boundary, thorin_density, BoundaryMethod, ComponentList,
};
use crate::laplace::{characteristic_function, continued_transform, direct_transform, leipnik_formula, transform};
use crate::params::{Boundary, CutPlanePoint, LognormalParams};
use crate::tables::{self, BENCHMARK};

pub const THREADS_ENV: &str = "LNLAPLACE_THREADS";
const EVAL_DIGITS: usize = 17;
const TABLE_DIGITS: usize = 5;

#[derive(Debug, Parser)]
#[command(
    name = "lnlaplace",
    version,
    about = "Laplace transform of the lognormal distribution"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (default: standard output)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// small-z convergent series
    Series,
    /// large-sigma expansion
    Asym,
    /// Mellin-Barnes contour integral
    Mb,
    /// continuation through Phi with Filon quadrature
    Filon,
    /// adaptive quadrature, Re z >= 0 only
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DensityMethod {
    Mb,
    Filon,
    Series,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate phi(z) at a list of points.
    Eval {
        #[arg(long, value_enum, default_value_t = Method::Mb)]
        method: Method,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, default_value_t = 10.0)]
        alpha: f64,
        #[arg(long, default_value_t = 41)]
        terms: usize,
        #[arg(long, default_value_t = 5)]
        poles: usize,
        #[arg(long, default_value_t = 10)]
        hermite: usize,
        /// Comma-separated points: `re`, `re:im`, `-t:+0` for the upper limit of the cut,
        /// or a real grid `a:b:step`.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Reproduce one of the four numerical tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
    },
    /// Density of a sum of independent lognormals.
    Density {
        /// `mu:sigma[,mu:sigma...]`
        #[arg(long, allow_hyphen_values = true)]
        components: String,
        /// Grid `a:b:step` or a comma-separated list.
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value_t = DensityMethod::Mb)]
        method: DensityMethod,
        #[arg(long, default_value_t = 9.0)]
        t_max_sqrt: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
    },
    /// Thorin density U(t).
    Thorin {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long)]
        sigma: f64,
        #[arg(long)]
        t: String,
    },
    /// Compare the vertical-contour sin(pi s) Gamma(s) integral with the characteristic function.
    LeipnikDemo {
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, default_value = "0.01,0.1,1")]
        t: String,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Validation(String),
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Validation(_) => 2,
            Self::Numeric(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Self::Validation(m) | Self::Numeric(m) => m,
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn numeric(op: &str, at: impl std::fmt::Display, e: Error) -> CliError {
    CliError::Numeric(format!("{op} at {at}: {e}"))
}

fn validation(e: Error) -> CliError {
    match e {
        Error::InvalidParameter(m) => CliError::Validation(m),
        other => CliError::Validation(other.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64, usize),
    Text(String),
    Empty,
}

/// Rows with a header and trailing `#` notes.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Document {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

/// `digits` significant digits: fixed notation for exponents in `[-4, digits)`, else scientific.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let exp: i32 = sci.split('e').nth(1).and_then(|e| e.parse().ok()).unwrap_or(0);
    if (-4..digits as i32).contains(&exp) {
        format!("{:.*}", (digits as i32 - 1 - exp) as usize, v)
    } else {
        sci
    }
}

impl Document {
    pub fn to_csv(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Num(v, d) => format_significant(*v, *d),
                    Cell::Text(t) => t.clone(),
                    Cell::Empty => String::new(),
                })
                .collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        for n in &self.notes {
            s.push_str("# ");
            s.push_str(n);
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut m = Map::new();
                for (h, c) in self.header.iter().zip(row) {
                    let v = match c {
                        Cell::Num(v, _) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
                        Cell::Text(t) => Value::String(t.clone()),
                        Cell::Empty => Value::Null,
                    };
                    m.insert(h.clone(), v);
                }
                Value::Object(m)
            })
            .collect();
        let doc = serde_json::json!({ "columns": self.header, "rows": rows, "notes": self.notes });
        let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
        s.push('\n');
        s
    }
}

fn parse_f64(token: &str, what: &str) -> Result<f64, CliError> {
    let v: f64 = token
        .trim()
        .parse()
        .map_err(|_| invalid(format!("{what}: cannot parse '{token}'")))?;
    if !v.is_finite() {
        return Err(invalid(format!("{what}: '{token}' is not finite")));
    }
    Ok(v)
}

/// `a:b:step` (inclusive) or a comma-separated list.
pub fn parse_grid(spec: &str, what: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.len() {
        3 => range(
            parse_f64(parts[0], what)?,
            parse_f64(parts[1], what)?,
            parse_f64(parts[2], what)?,
            what,
        ),
        1 => spec
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| parse_f64(t, what))
            .collect(),
        _ => Err(invalid(format!("{what}: expected a:b:step or a list, got '{spec}'"))),
    }
}

fn range(a: f64, b: f64, step: f64, what: &str) -> Result<Vec<f64>, CliError> {
    if !(step > 0.0) || b < a {
        return Err(invalid(format!("{what}: grid needs a <= b and step > 0")));
    }
    let n = ((b - a) / step + 1e-9).floor() as usize;
    if n > 10_000_000 {
        return Err(invalid(format!("{what}: grid has too many points")));
    }
    Ok((0..=n).map(|i| a + step * i as f64).collect())
}

/// Points for `eval --z`.
pub fn parse_points(spec: &str) -> Result<Vec<CutPlanePoint>, CliError> {
    let mut out = Vec::new();
    for token in spec.split(',').filter(|t| !t.trim().is_empty()) {
        let parts: Vec<&str> = token.split(':').map(str::trim).collect();
        match parts.as_slice() {
            [re] => out.push(CutPlanePoint::real(parse_f64(re, "z")?).map_err(validation)?),
            [re, im] => {
                let r = parse_f64(re, "z")?;
                let point = match *im {
                    "+0" if r < 0.0 => CutPlanePoint::upper_limit(-r),
                    "-0" if r < 0.0 => CutPlanePoint::lower_limit(-r),
                    _ => CutPlanePoint::interior(Complex64::new(r, parse_f64(im, "z")?)),
                };
                out.push(point.map_err(validation)?);
            }
            [a, b, s] => {
                for x in range(parse_f64(a, "z")?, parse_f64(b, "z")?, parse_f64(s, "z")?, "z")? {
                    out.push(CutPlanePoint::real(x).map_err(validation)?);
                }
            }
            _ => return Err(invalid(format!("z: cannot parse '{token}'"))),
        }
    }
    if out.is_empty() {
        return Err(invalid("z: no points given"));
    }
    Ok(out)
}

/// `mu:sigma[,mu:sigma...]`.
pub fn parse_components(spec: &str) -> Result<ComponentList, CliError> {
    let comps = spec
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| match t.split(':').collect::<Vec<_>>().as_slice() {
            [mu, sigma] => LognormalParams::new(parse_f64(mu, "mu")?, parse_f64(sigma, "sigma")?).map_err(validation),
            _ => Err(invalid(format!("components: expected mu:sigma, got '{t}'"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    ComponentList::new(comps).map_err(validation)
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let n = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| invalid(format!("{THREADS_ENV}: cannot parse '{v}'")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| invalid(format!("{THREADS_ENV}: {e}")))
}

fn describe(z: &CutPlanePoint) -> String {
    match z.boundary() {
        Boundary::Interior => format!("z = {}", z.value()),
        Boundary::UpperLimit => format!("z = {} + i0", z.value().re),
        Boundary::LowerLimit => format!("z = {} - i0", z.value().re),
    }
}

fn run_eval(cmd: &Command) -> Result<Document, CliError> {
    let Command::Eval {
        method,
        mu,
        sigma,
        alpha,
        terms,
        poles,
        hermite,
        z,
    } = cmd
    else {
        unreachable!()
    };
    let p = LognormalParams::new(*mu, *sigma).map_err(validation)?;
    let points = parse_points(z)?;
    let series_cfg = SmallZConfig {
        alpha: *alpha,
        n_terms: *terms,
        k_bound: 0.0,
    };
    let asym_cfg = SigmaAsymConfig {
        n_poles: *poles,
        m_terms: *hermite,
    };
    match method {
        Method::Series => series_cfg.validate().map_err(validation)?,
        Method::Asym if *poles > crate::approx::MAX_POLES || *hermite > crate::approx::MAX_HERMITE_TERMS => {
            return Err(invalid(format!(
                "poles/hermite must be <= {}",
                crate::approx::MAX_POLES
            )))
        }
        Method::Direct => {
            if let Some(bad) = points.iter().find(|z| z.value().re < 0.0) {
                return Err(invalid(format!("direct method needs Re z >= 0, got {}", describe(bad))));
            }
        }
        _ => {}
    }
    let name = format!("{method:?}").to_lowercase();
    let results: Vec<Result<(Complex64, Option<f64>), CliError>> = thread_pool()?.install(|| {
        points
            .par_iter()
            .map(|z| {
                let r = match method {
                    Method::Series => small_z_series(*z, &p, &series_cfg).map(|r| (r.value, r.error_bound)),
                    Method::Asym => sigma_asymptotic(*z, &p, &asym_cfg).map(|r| (r.value, r.error_bound)),
                    Method::Mb => transform(*z, &p).map(|v| (v, None)),
                    Method::Filon => continued_transform(*z, &p).map(|v| (v, None)),
                    Method::Direct => direct_transform(z.value(), &p).map(|v| (v, None)),
                };
                r.map_err(|e| numeric(&format!("eval --method {name}"), describe(z), e))
            })
            .collect()
    });
    let mut doc = Document {
        header: ["z_re", "z_im", "method", "value_re", "value_im", "error_bound"]
            .map(String::from)
            .to_vec(),
        ..Default::default()
    };
    let mut unbounded = false;
    for (z, r) in points.iter().zip(results) {
        let (v, bound) = r?;
        let bound = match bound {
            Some(b) if b.is_finite() => Cell::Num(b, EVAL_DIGITS),
            Some(_) => {
                unbounded = true;
                Cell::Empty
            }
            None => Cell::Empty,
        };
        doc.rows.push(vec![
            Cell::Num(z.value().re, EVAL_DIGITS),
            Cell::Num(z.value().im, EVAL_DIGITS),
            Cell::Text(name.clone()),
            Cell::Num(v.re, EVAL_DIGITS),
            Cell::Num(v.im, EVAL_DIGITS),
            bound,
        ]);
    }
    if points.iter().any(|z| z.boundary() == Boundary::UpperLimit) {
        doc.notes
            .push("rows with z_im = 0 and z_re < 0 are upper limits -t + i0".into());
    }
    if unbounded {
        doc.notes
            .push("error bound exceeds the f64 range where left empty".into());
    }
    Ok(doc)
}

fn run_table(id: u8) -> Result<Document, CliError> {
    let t = thread_pool()?
        .install(|| tables::table(id))
        .map_err(|e| numeric("table", id, e))?;
    let label = if t.absolute_difference { "AD" } else { "phi" };
    let mut header = vec!["z".to_string()];
    header.extend(t.sigmas.iter().map(|s| format!("{label} sigma={s}")));
    let rows =
        t.z.iter()
            .zip(&t.cells)
            .map(|(z, row)| {
                let mut r = vec![Cell::Num(*z, TABLE_DIGITS)];
                r.extend(row.iter().map(|v| Cell::Num(*v, TABLE_DIGITS)));
                r
            })
            .collect();
    let mut notes = vec![if id <= 2 {
        "small-z series, alpha = 10, 41 terms (n = 0..40), mu = 0".to_string()
    } else {
        "large-sigma expansion, N = 5, M = 10, mu = 0".to_string()
    }];
    if t.absolute_difference {
        notes.push(format!(
            "benchmark: direct_transform, adaptive Gauss-Kronrod 7/15, abs tol {:e}, <= {} intervals",
            BENCHMARK.abs_tol, BENCHMARK.max_intervals
        ));
    }
    Ok(Document { header, rows, notes })
}

fn run_density(cmd: &Command) -> Result<Document, CliError> {
    let Command::Density {
        components,
        x,
        method,
        t_max_sqrt,
        step,
    } = cmd
    else {
        unreachable!()
    };
    let cl = parse_components(components)?;
    let xs = parse_grid(x, "x")?;
    let mesh = build_boundary_mesh(*t_max_sqrt, *step).map_err(validation)?;
    let (kept, dropped): (Vec<f64>, Vec<f64>) = xs.into_iter().partition(|&x| x > 0.0);
    if kept.is_empty() {
        return Err(invalid("x: no points with x > 0"));
    }
    let method = match method {
        DensityMethod::Mb => BoundaryMethod::MellinBarnes,
        DensityMethod::Filon => BoundaryMethod::ContinuationFilon,
        DensityMethod::Series => BoundaryMethod::SmallZSeries(SmallZConfig::default()),
    };
    let curve = thread_pool()?
        .install(|| {
            let bs = boundary_transform_par(&cl, &mesh, method)?;
            density_from_boundary(&bs, &kept)
        })
        .map_err(|e| numeric("density", format!("components {components}"), e))?;
    let single = (cl.components().len() == 1).then(|| cl.components()[0]);
    let mut header = vec!["x".to_string(), "f".to_string()];
    if single.is_some() {
        header.push("f_closed_form".into());
    }
    let rows = curve
        .x_nodes
        .iter()
        .zip(&curve.f_values)
        .map(|(&x, &f)| {
            let mut r = vec![Cell::Num(x, EVAL_DIGITS), Cell::Num(f, EVAL_DIGITS)];
            if let Some(p) = single {
                r.push(Cell::Num(p.pdf(x), EVAL_DIGITS));
            }
            r
        })
        .collect();
    let mut notes = Vec::new();
    if !dropped.is_empty() {
        notes.push(format!("skipped {} grid point(s) with x <= 0", dropped.len()));
    }
    notes.push(format!(
        "boundary method {}, mesh {} nodes on [0, {}]",
        method.name(),
        mesh.len(),
        mesh[mesh.len() - 1]
    ));
    notes.push(format!(
        "mass_estimate={}",
        format_significant(curve.mass_estimate, EVAL_DIGITS)
    ));
    Ok(Document { header, rows, notes })
}

fn run_thorin(mu: f64, sigma: f64, t: &str) -> Result<Document, CliError> {
    let p = LognormalParams::new(mu, sigma).map_err(validation)?;
    let ts = parse_grid(t, "t")?;
    if let Some(bad) = ts.iter().find(|&&t| !(t > 0.0)) {
        return Err(invalid(format!("t: need t > 0, got {bad}")));
    }
    let values: Vec<Result<f64, CliError>> = thread_pool()?.install(|| {
        ts.par_iter()
            .map(|&t| thorin_density(t, &p).map_err(|e| numeric("thorin", format!("t = {t}"), e)))
            .collect()
    });
    let mut doc = Document {
        header: vec!["t".into(), "U".into()],
        ..Default::default()
    };
    for (t, u) in ts.iter().zip(values) {
        doc.rows
            .push(vec![Cell::Num(*t, EVAL_DIGITS), Cell::Num(u?, EVAL_DIGITS)]);
    }
    Ok(doc)
}

fn run_leipnik(sigma: f64, k: f64, t: &str) -> Result<Document, CliError> {
    let p = LognormalParams::new(0.0, sigma).map_err(validation)?;
    if !k.is_finite() {
        return Err(invalid("k must be finite"));
    }
    let ts = parse_grid(t, "t")?;
    if let Some(bad) = ts.iter().find(|&&t| !(t > 0.0)) {
        return Err(invalid(format!("t: need t > 0, got {bad}")));
    }
    let mut doc = Document {
        header: [
            "t",
            "contour_re",
            "contour_im",
            "contour_abs",
            "cf_re",
            "cf_im",
            "cf_abs",
        ]
        .map(String::from)
        .to_vec(),
        ..Default::default()
    };
    for &t in &ts {
        let l = leipnik_formula(t, sigma, k).map_err(|e| numeric("leipnik", format!("t = {t}"), e))?;
        let c =
            characteristic_function(t, &p).map_err(|e| numeric("characteristic_function", format!("t = {t}"), e))?;
        doc.rows.push(
            [t, l.re, l.im, l.norm(), c.re, c.im, c.norm()]
                .iter()
                .map(|&v| Cell::Num(v, EVAL_DIGITS))
                .collect(),
        );
    }
    doc.notes
        .push(format!("contour abscissa k = {k}, sigma = {sigma}, mu = 0"));
    Ok(doc)
}

/// Runs the parsed command and returns the rendered output.
pub fn render(cli: &Cli) -> Result<String, CliError> {
    let doc = match &cli.command {
        c @ Command::Eval { .. } => run_eval(c)?,
        Command::Table { id } => run_table(*id)?,
        c @ Command::Density { .. } => run_density(c)?,
        Command::Thorin { mu, sigma, t } => run_thorin(*mu, *sigma, t)?,
        Command::LeipnikDemo { sigma, k, t } => run_leipnik(*sigma, *k, t)?,
    };
    Ok(match cli.format {
        Format::Csv => doc.to_csv(),
        Format::Json => doc.to_json(),
    })
}

pub fn execute(cli: &Cli) -> Result<(), CliError> {
    let text = render(cli)?;
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| invalid(format!("--out {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Numeric(format!("stdout: {e}"))),
    }
}

pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
