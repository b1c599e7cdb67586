//! Command-line front end: argument handling, configuration, and canonical
//! text/JSON serialization for every subcommand.
//!
//! Output is deterministic: all collections iterate in canonical order, so a
//! fixed invocation always produces identical bytes. JSON is the machine
//! format; text output is aligned tables. Exit codes: 0 on success, 1 on a
//! verification mismatch, 2 on a usage error.

use clap::{Args, Parser, Subcommand};
use std::io::Write;

use crate::algebra::{Infinitesimal, Permutation, QTLaurent, XLaurent};
use crate::catalan;
use crate::characters::{omega, schur_expand, SchurExpansion};
use crate::hecke;
use crate::llt::{self, RowTuple};
use crate::paths::{self, ExtendedPathSpec, Line};
use crate::verify;
use crate::{Error, Result};

/// Runtime limits and defaults, loadable from the JSON file named by the
/// `CATALANIMAL_CONFIG` environment variable.
#[derive(Clone, Debug, serde::Deserialize)]
#[serde(default)]
pub struct Config {
    pub cap_overflow_limit: usize,
    pub default_tmax: i64,
    pub output_format: OutputFormat,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cap_overflow_limit: 4_000_000,
            default_tmax: 3,
            output_format: OutputFormat::Text,
            seed: 42,
        }
    }
}

impl Config {
    /// Load from `CATALANIMAL_CONFIG` when set, defaults otherwise.
    pub fn from_env() -> Result<Self> {
        match std::env::var("CATALANIMAL_CONFIG") {
            Ok(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Parse(format!("config {path}: {e}")))?;
                let cfg: Config = serde_json::from_str(&text)
                    .map_err(|e| Error::Parse(format!("config {path}: {e}")))?;
                if cfg.cap_overflow_limit == 0 || cfg.default_tmax < 0 {
                    return Err(Error::Invalid("config limits must be positive".into()));
                }
                Ok(cfg)
            }
            Err(_) => Ok(Config::default()),
        }
    }

    pub fn kernel_opts(&self) -> crate::kernel::KernelOpts {
        crate::kernel::KernelOpts {
            state_limit: self.cap_overflow_limit,
            ..crate::kernel::KernelOpts::default()
        }
    }
}

#[derive(Parser)]
#[command(name = "catalanimal", disable_help_subcommand = true)]
#[command(about = "Exact q,t-combinatorics of lattice paths under a line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the paths under a line with their statistics.
    Paths(PathsArgs),
    /// Schur expansion of a tuple LLT polynomial.
    Llt(LltArgs),
    /// A twisted non-symmetric Hall-Littlewood polynomial.
    Nshl(NshlArgs),
    /// Polynomial part of the character series for a run vector.
    Hb(HbArgs),
    /// Generalized q,t-Catalan number by one or all methods.
    Catalan(CatalanArgs),
    /// Identity checkers; exit 1 on any mismatch.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Scan run vectors for negative Schur coefficients.
    ScanPositivity(ScanArgs),
}

#[derive(Args)]
struct LineArgs {
    /// y-intercept, e.g. 47/10 or 2+e.
    #[arg(long)]
    s: String,
    /// x-intercept, e.g. 331/100-e.
    #[arg(long)]
    r: Option<String>,
    /// Slope, as an alternative to --r.
    #[arg(long)]
    p: Option<String>,
}

impl LineArgs {
    fn build(&self) -> Result<Line> {
        let s: Infinitesimal = self.s.parse()?;
        match (&self.r, &self.p) {
            (Some(r), None) => Line::new(s, r.parse()?),
            (None, Some(p)) => Line::from_slope(s, p.parse()?),
            _ => Err(Error::Parse("provide exactly one of --r and --p".into())),
        }
    }
}

#[derive(Args)]
struct PathsArgs {
    #[command(flatten)]
    line: LineArgs,
    /// Extra south steps on the y-axis.
    #[arg(long, default_value_t = 0)]
    u: i64,
}

#[derive(Args)]
struct LltArgs {
    /// Row upper bounds, e.g. 2,0,1,1.
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    beta: Option<Vec<i64>>,
    /// Row lower bounds, e.g. 0,0,0,0.
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    alpha: Option<Vec<i64>>,
    /// Single-digit shape string, e.g. 2011/0000.
    #[arg(long)]
    shape: Option<String>,
    /// Twist applied to the rows before reading the tuple.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    sigma: Option<Vec<usize>>,
    /// Number of variables (default: number of rows).
    #[arg(long)]
    vars: Option<usize>,
    /// Print the omega image (transposed partitions).
    #[arg(long)]
    omega: bool,
}

#[derive(Args)]
struct NshlArgs {
    /// Twist permutation in one-line notation.
    #[arg(long, required = true, value_delimiter = ',', num_args = 1)]
    sigma: Vec<usize>,
    /// Weight, e.g. 0,1,0.
    #[arg(
        long,
        required = true,
        value_delimiter = ',',
        num_args = 1,
        allow_hyphen_values = true
    )]
    lambda: Vec<i64>,
    /// Compute F instead of E.
    #[arg(long = "F", short = 'F')]
    f: bool,
    /// Substitute q -> 1/q in the result.
    #[arg(long)]
    qinv: bool,
}

#[derive(Args)]
struct HbArgs {
    /// Run vector, e.g. 1,2,1,0.
    #[arg(
        long,
        required = true,
        value_delimiter = ',',
        num_args = 1,
        allow_hyphen_values = true
    )]
    b: Vec<i64>,
}

#[derive(Args)]
struct CatalanArgs {
    #[arg(long, required = true, value_delimiter = ',', num_args = 1)]
    b: Vec<i64>,
    /// all | schur | paths | ct
    #[arg(long, default_value = "all")]
    method: String,
    /// Line realizing b, required by the path-sum method.
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    p: Option<String>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Path identity: series side against the path/LLT sum.
    Main(VerifyMainArgs),
    /// Stable identity: windowed series coefficients against LLT series.
    Stable(VerifyStableArgs),
    /// q = 1 collapse of the series.
    Q1(HbArgs),
    /// Cauchy identity for the E/F pairing.
    Cauchy(VerifyCauchyArgs),
    /// Orthogonality of E against conjugate F on a weight grid.
    Orth(VerifyOrthArgs),
    /// Rotation identity for a tuple of rows.
    OmegaG(VerifyRowsArgs),
    /// Head/tail identities of a winding permutation.
    Winding(VerifyWindingArgs),
    /// Expansion of e_k times a twisted polynomial.
    Ek(VerifyEkArgs),
    /// Triple-statistic transfer on a tuple of rows.
    Triples(VerifyRowsArgs),
}

#[derive(Args)]
struct VerifyMainArgs {
    #[command(flatten)]
    line: LineArgs,
    #[arg(long, default_value_t = 0)]
    u: i64,
}

#[derive(Args)]
struct VerifyStableArgs {
    #[command(flatten)]
    line: LineArgs,
    #[arg(long, default_value_t = 0)]
    u: i64,
    #[arg(long, default_value_t = 0)]
    v: i64,
    #[arg(long)]
    tmax: Option<i64>,
    /// Sup-norm bound of the dominant-weight window.
    #[arg(long, default_value_t = 2)]
    bound: i64,
}

#[derive(Args)]
struct VerifyCauchyArgs {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    tmax: Option<i64>,
    /// One permutation; all of S_l when omitted.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    sigma: Option<Vec<usize>>,
}

#[derive(Args)]
struct VerifyOrthArgs {
    #[arg(long)]
    l: usize,
    /// Weights range over {0..max}^l.
    #[arg(long, default_value_t = 1)]
    max: i64,
}

#[derive(Args)]
struct VerifyRowsArgs {
    #[arg(
        long,
        required = true,
        value_delimiter = ',',
        num_args = 1,
        allow_hyphen_values = true
    )]
    beta: Vec<i64>,
    #[arg(
        long,
        required = true,
        value_delimiter = ',',
        num_args = 1,
        allow_hyphen_values = true
    )]
    alpha: Vec<i64>,
    #[arg(long, value_delimiter = ',', num_args = 1)]
    sigma: Option<Vec<usize>>,
}

#[derive(Args)]
struct VerifyWindingArgs {
    /// Winding permutation in one-line notation.
    #[arg(long, required = true, value_delimiter = ',', num_args = 1)]
    sigma: Vec<usize>,
    #[arg(
        long,
        required = true,
        value_delimiter = ',',
        num_args = 1,
        allow_hyphen_values = true
    )]
    lambda: Vec<i64>,
}

#[derive(Args)]
struct VerifyEkArgs {
    #[arg(long, required = true, value_delimiter = ',', num_args = 1)]
    sigma: Vec<usize>,
    #[arg(
        long,
        required = true,
        value_delimiter = ',',
        num_args = 1,
        allow_hyphen_values = true
    )]
    lambda: Vec<i64>,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 4)]
    max_cols: usize,
    #[arg(long, default_value_t = 5)]
    max_size: i64,
}

/// Entry point used by both the binary and the tests. Writes canonical
/// output to `out`; returns the process exit code.
pub fn run(args: &[String], out: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap treats --help/--version as "errors" with success status
            let text = e.render().to_string();
            let _ = write!(out, "{text}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let config = match Config::from_env() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return 2;
        }
    };
    let json = cli.json || config.output_format == OutputFormat::Json;
    match dispatch(cli.command, &config, json, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, config: &Config, json: bool, out: &mut impl Write) -> Result<i32> {
    match cmd {
        Command::Paths(args) => {
            let line = args.line.build()?;
            let ext = ExtendedPathSpec::new(args.u)?;
            let mut records = Vec::new();
            for path in paths::enumerate_paths(&line) {
                let (a, _) = paths::area(&path, &line);
                let d = paths::dinv_p(&path, line.p());
                let data = paths::llt_data_extended(&path, &line, &ext);
                records.push((path, a, d, data));
            }
            if json {
                let arr: Vec<serde_json::Value> = records
                    .iter()
                    .map(|(path, a, d, data)| {
                        serde_json::json!({
                            "south_runs": path.south_runs(),
                            "area": a,
                            "dinv": d,
                            "alpha": data.alpha,
                            "beta": data.beta,
                            "sigma": data.sigma.images(),
                        })
                    })
                    .collect();
                emit_json(out, &serde_json::Value::Array(arr))?;
            } else {
                writeln!(
                    out,
                    "{:<14} {:>5} {:>5}  {:<14} {:<14} sigma",
                    "south_runs", "area", "dinv", "alpha", "beta"
                )
                .map_err(io_err)?;
                for (path, a, d, data) in &records {
                    writeln!(
                        out,
                        "{:<14} {:>5} {:>5}  {:<14} {:<14} {}",
                        path.to_string(),
                        a,
                        d,
                        format!("{:?}", data.alpha),
                        format!("{:?}", data.beta),
                        data.sigma
                    )
                    .map_err(io_err)?;
                }
            }
            Ok(0)
        }

        Command::Llt(args) => {
            let (beta, alpha) = match (&args.shape, &args.beta, &args.alpha) {
                (Some(shape), None, None) => parse_shape(shape)?,
                (None, Some(b), Some(a)) => (b.clone(), a.clone()),
                _ => {
                    return Err(Error::Parse(
                        "provide --shape or both --beta and --alpha".into(),
                    ))
                }
            };
            if beta.len() != alpha.len() {
                return Err(Error::Parse("--beta and --alpha lengths differ".into()));
            }
            let rows = RowTuple::new(alpha, beta)?;
            let rows = match &args.sigma {
                Some(s) => rows.permuted(&Permutation::from_images(s.clone())?),
                None => rows,
            };
            let vars = args.vars.unwrap_or(rows.len());
            let g = llt::llt_poly(&rows.to_skew_tuple(), vars);
            let mut expansion = schur_expand(&g)?;
            if args.omega {
                let needed = expansion
                    .terms()
                    .map(|(lam, _)| lam.part(0) as usize)
                    .max()
                    .unwrap_or(0);
                expansion = omega(&expansion, needed.max(vars))?;
            }
            emit_schur(out, json, &expansion)?;
            Ok(0)
        }

        Command::Nshl(args) => {
            let sigma = Permutation::from_images(args.sigma.clone())?;
            if args.lambda.len() != sigma.size() {
                return Err(Error::Parse("--lambda and --sigma lengths differ".into()));
            }
            let mut poly = if args.f {
                hecke::ns_hl_f(&sigma, &args.lambda)
            } else {
                hecke::ns_hl_e(&sigma, &args.lambda)
            };
            if args.qinv {
                poly = poly.map_coeffs(|c| c.bar_q());
            }
            emit_xlaurent(out, json, &poly)?;
            Ok(0)
        }

        Command::Hb(args) => {
            let expansion = catalan::hb_pol_opts(&args.b, &config.kernel_opts())?;
            emit_schur(out, json, &expansion)?;
            Ok(0)
        }

        Command::Catalan(args) => {
            let line = match (&args.s, &args.r, &args.p) {
                (None, None, None) => None,
                (Some(s), r, p) => Some(
                    LineArgs {
                        s: s.clone(),
                        r: r.clone(),
                        p: p.clone(),
                    }
                    .build()?,
                ),
                _ => return Err(Error::Parse("a line needs --s with --r or --p".into())),
            };
            let value = match args.method.as_str() {
                "all" => catalan::catalan_cb(&args.b, line.as_ref())?,
                "schur" => catalan::catalan_schur(&args.b)?,
                "ct" => catalan::catalan_ct(&args.b)?,
                "paths" => {
                    let line = line.as_ref().ok_or_else(|| {
                        Error::Parse("--method paths needs a line (--s and --r/--p)".into())
                    })?;
                    catalan::catalan_paths(line)
                }
                other => return Err(Error::Parse(format!("unknown method `{other}`"))),
            };
            if json {
                emit_json(out, &value.to_json())?;
            } else {
                writeln!(out, "{value}").map_err(io_err)?;
            }
            Ok(0)
        }

        Command::Verify(v) => run_verify(v, config, json, out),

        Command::ScanPositivity(args) => {
            let reports = verify::scan_positivity(args.max_cols, args.max_size)?;
            let ok = reports.iter().all(|r| !r.convex || r.positive());
            if json {
                let arr: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
                emit_json(out, &serde_json::Value::Array(arr))?;
            } else {
                let convex = reports.iter().filter(|r| r.convex).count();
                writeln!(
                    out,
                    "scanned {} run vectors ({} convex)",
                    reports.len(),
                    convex
                )
                .map_err(io_err)?;
                for r in &reports {
                    if !r.positive() {
                        writeln!(
                            out,
                            "negative coefficients at b = {:?} ({})",
                            r.b,
                            if r.convex {
                                "convex"
                            } else {
                                "informational: non-convex"
                            }
                        )
                        .map_err(io_err)?;
                    }
                }
                writeln!(
                    out,
                    "{}",
                    if ok {
                        "all convex instances positive"
                    } else {
                        "FAILURE"
                    }
                )
                .map_err(io_err)?;
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn run_verify(
    cmd: VerifyCommand,
    config: &Config,
    json: bool,
    out: &mut impl Write,
) -> Result<i32> {
    match cmd {
        VerifyCommand::Main(args) => {
            let line = args.line.build()?;
            let report = verify::check_main(&line, &ExtendedPathSpec::new(args.u)?)?;
            emit_report(out, json, &report)
        }
        VerifyCommand::Stable(args) => {
            let line = args.line.build()?;
            let l = line.l();
            let tmax = args.tmax.unwrap_or(config.default_tmax);
            let deg: i64 = line.untruncated_runs(l).iter().sum::<i64>() + args.u - args.v;
            let window = verify::dominant_window(l, deg, args.bound);
            let report = verify::check_stable(&line, args.u, args.v, tmax, &window)?;
            emit_report(out, json, &report)
        }
        VerifyCommand::Q1(args) => {
            let report = verify::check_q1(&args.b)?;
            emit_report(out, json, &report)
        }
        VerifyCommand::Cauchy(args) => {
            let tmax = args.tmax.unwrap_or(config.default_tmax);
            let sigmas = match args.sigma {
                Some(s) => vec![Permutation::from_images(s)?],
                None => Permutation::all(args.l),
            };
            let mut all = true;
            for sigma in sigmas {
                let ok = hecke::check_cauchy(&sigma, args.l, tmax);
                all &= ok;
                writeln!(
                    out,
                    "{}: cauchy l = {} tmax = {tmax} sigma = {sigma}",
                    verdict(ok),
                    args.l
                )
                .map_err(io_err)?;
            }
            Ok(if all { 0 } else { 1 })
        }
        VerifyCommand::Orth(args) => {
            let grid = grid_weights(args.l, args.max);
            let mut all = true;
            for sigma in Permutation::all(args.l) {
                let mut ok = true;
                for lam in &grid {
                    for mu in &grid {
                        let pairing = hecke::ef_pairing(&sigma, lam, mu)?;
                        let want = if lam == mu {
                            QTLaurent::one()
                        } else {
                            QTLaurent::zero()
                        };
                        ok &= pairing == want;
                    }
                }
                all &= ok;
                writeln!(
                    out,
                    "{}: orthogonality sigma = {sigma} on {} weights",
                    verdict(ok),
                    grid.len()
                )
                .map_err(io_err)?;
            }
            Ok(if all { 0 } else { 1 })
        }
        VerifyCommand::OmegaG(args) => {
            let rows = RowTuple::new(args.alpha, args.beta)?;
            let rows = match args.sigma {
                Some(s) => rows.permuted(&Permutation::from_images(s)?),
                None => rows,
            };
            let nu = rows.to_skew_tuple();
            let m = nu.n_boxes().max(1);
            let lhs = schur_expand(&llt::omega_llt_poly(&nu, m))?;
            let i = llt::attacking_pairs(&nu).0 as i64;
            let rhs = schur_expand(&llt::llt_poly(&nu.rotate(), m))?
                .map_coeffs(|c| c.bar_q().mul_term(i, 0, &1.into()));
            let ok = lhs == rhs;
            writeln!(
                out,
                "{}: rotation identity, {} attacking pairs",
                verdict(ok),
                i
            )
            .map_err(io_err)?;
            Ok(if ok { 0 } else { 1 })
        }
        VerifyCommand::Winding(args) => {
            let sigma = Permutation::from_images(args.sigma)?;
            let data = hecke::winding_of_permutation(&sigma);
            if args.lambda.len() != sigma.size() - 1 {
                return Err(Error::Parse("--lambda must have length l−1".into()));
            }
            let ok = hecke::check_winding_identity(&data, &args.lambda);
            writeln!(
                out,
                "{}: winding sigma = {sigma} lambda = {:?}",
                verdict(ok),
                args.lambda
            )
            .map_err(io_err)?;
            Ok(if ok { 0 } else { 1 })
        }
        VerifyCommand::Ek(args) => {
            let sigma = Permutation::from_images(args.sigma)?;
            let ok = hecke::ek_expansion_check(&sigma, &args.lambda, args.k);
            writeln!(
                out,
                "{}: e_k expansion sigma = {sigma} lambda = {:?} k = {}",
                verdict(ok),
                args.lambda,
                args.k
            )
            .map_err(io_err)?;
            Ok(if ok { 0 } else { 1 })
        }
        VerifyCommand::Triples(args) => {
            let rows = RowTuple::new(args.alpha, args.beta)?;
            let sigmas = match args.sigma {
                Some(s) => vec![Permutation::from_images(s)?],
                None => Permutation::all(rows.len()),
            };
            let mut all = true;
            for sigma in sigmas {
                let n_boxes: usize = rows
                    .alpha
                    .iter()
                    .zip(&rows.beta)
                    .map(|(a, b)| (b - a) as usize)
                    .sum();
                let nvars = n_boxes.clamp(1, 4);
                let mut ok = true;
                for t in llt::enumerate_tableaux(
                    &rows.permuted(&sigma).to_skew_tuple(),
                    nvars,
                    llt::TableauKind::Negative,
                ) {
                    let t_rows = split_rows(&rows.permuted(&sigma), &t);
                    ok &= llt::transfer_tableau(&rows, &sigma, &t_rows).is_ok();
                }
                let (h, _) = llt::sigma_triples(&rows, &sigma);
                all &= ok;
                writeln!(out, "{}: triples sigma = {sigma} h = {h}", verdict(ok))
                    .map_err(io_err)?;
            }
            Ok(if all { 0 } else { 1 })
        }
    }
}

/// Group a tableau on a tuple of rows back into per-row entry lists.
fn split_rows(rows: &RowTuple, t: &llt::Tableau) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![vec![]; rows.len()];
    let boxes = rows.to_skew_tuple().boxes();
    for (b, &e) in boxes.iter().zip(&t.entries) {
        out[b.comp].push(e);
    }
    out
}

fn grid_weights(l: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..l {
        let mut next = Vec::new();
        for v in &out {
            for a in 0..=max {
                let mut w = v.clone();
                w.push(a);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "EQUAL"
    } else {
        "MISMATCH"
    }
}

fn parse_shape(shape: &str) -> Result<(Vec<i64>, Vec<i64>)> {
    let (b, a) = shape
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("shape `{shape}` needs a `/`")))?;
    let digits = |s: &str| -> Result<Vec<i64>> {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as i64)
                    .ok_or_else(|| Error::Parse(format!("bad digit `{c}` in shape")))
            })
            .collect()
    };
    Ok((digits(b)?, digits(a)?))
}

fn emit_json(out: &mut impl Write, v: &serde_json::Value) -> Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("serializable")
    )
    .map_err(io_err)
}

fn emit_schur(out: &mut impl Write, json: bool, e: &SchurExpansion) -> Result<()> {
    if json {
        return emit_json(out, &e.to_json());
    }
    if e.is_zero() {
        return writeln!(out, "0").map_err(io_err);
    }
    let rows: Vec<(String, String)> = e
        .terms()
        .rev()
        .map(|(lam, c)| (format!("s_{lam}"), c.to_string()))
        .collect();
    let width = rows.iter().map(|(a, _)| a.len()).max().unwrap_or(0);
    for (a, c) in rows {
        writeln!(out, "{a:<width$}  {c}").map_err(io_err)?;
    }
    Ok(())
}

fn emit_xlaurent(out: &mut impl Write, json: bool, f: &XLaurent) -> Result<()> {
    if json {
        return emit_json(out, &f.to_json());
    }
    if f.is_zero() {
        return writeln!(out, "0").map_err(io_err);
    }
    for (e, c) in f.terms() {
        writeln!(out, "x^{e:?}  {c}").map_err(io_err)?;
    }
    Ok(())
}

fn emit_report(
    out: &mut impl Write,
    json: bool,
    report: &verify::VerificationReport,
) -> Result<i32> {
    if json {
        emit_json(out, &report.to_json())?;
    } else {
        writeln!(out, "{report}").map_err(io_err)?;
    }
    Ok(if report.equal { 0 } else { 1 })
}

fn io_err(e: std::io::Error) -> Error {
    Error::Invalid(format!("write failed: {e}"))
}
