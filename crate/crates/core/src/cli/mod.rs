//! Command-line front end: flag handling, dispatch, and table emission.

mod parse;

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::boson::{gl2_instance, smash_instance, verify_bosonization_iso};
use crate::braided::{BraidedProduct, TensorPoly};
use crate::homology::{
    check_complex, check_exactness, ext_coefficients_in_a, ext_equivariant, ext_one_dimensional,
    hochschild_one_dimensional, hochschild_via_bridge, transport_to_bimodule_resolution, verify_nakayama,
    ExtTable, HomologyError, NakayamaConfig,
};
use crate::ncalg::{Homogeneity, Presentation};
use crate::report::Report;
use crate::scalar::{Bicharacter, ParamPoint, Params, Scalar};
use crate::sl2::{epsilon_t, sl2_instance, trivial_resolution, Sl2Error};

pub use parse::{
    emit_presentation, parse_expression, parse_poly, parse_presentation, parse_rational_arg, split_top_products,
    strip_outer_parens, Expr, ParseError, ParsedExpr,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl From<Sl2Error> for CliError {
    fn from(e: Sl2Error) -> Self {
        match e {
            Sl2Error::ZeroParameter(_) => CliError::Usage(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::NeedsPoint | HomologyError::BadOffset => CliError::Usage(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Sl2,
    Gl2,
    Smash,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Exact computations for the braided quantum group O_{p,q}(SL2).
///
/// `--p generic --q generic` (the default) works over the rational-function
/// field k(p,q). `exactness` and `ext-a` work on truncations and need
/// numeric parameters, e.g. `--p 2 --q 3`.
///
/// Exit status: 0 if every check passes, 1 on a failed check, 2 on a usage
/// or parse error.
#[derive(Debug, Parser)]
#[command(name = "braided-sl2", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Bundled presentation.
    #[arg(long, global = true, value_enum, default_value = "sl2")]
    pub preset: Preset,
    /// Parameter p: a rational `n` or `n/d`, or `generic`.
    #[arg(long, global = true, default_value = "generic", allow_hyphen_values = true)]
    pub p: String,
    /// Parameter q: a rational `n` or `n/d`, or `generic`.
    #[arg(long, global = true, default_value = "generic", allow_hyphen_values = true)]
    pub q: String,
    /// Character parameter t of ε_t (a ↦ t, d ↦ t⁻¹, b, c ↦ 0).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Filtration degree (word length) bound.
    #[arg(long = "max-deg", global = true)]
    pub max_deg: Option<usize>,
    /// Initial preimage search offset for `exactness`.
    #[arg(long, global = true)]
    pub offset: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Presentation file (`gen <name> deg=<int> wt=<int>`, `rule <word> -> <expr>`).
    #[arg(long, global = true)]
    pub presentation: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression or of a product of `|`-tensors.
    Nf { expr: String },
    /// Overlap check of the rewriting system.
    Confluence,
    /// Bialgebra and antipode axioms (antipode up to word length --max-deg, default 4).
    HopfCheck,
    /// Ext^*(εk, ε_t k) (default t = (pq)⁻¹).
    ExtTable,
    /// Colinear Ext^*(εk, ε_t k) (default t = (pq)⁻¹).
    ExtEquivariant,
    /// Ext^*(εk, A) on truncations (numeric only; --max-deg default 5).
    ExtA,
    /// H^*(A, ε_t k ε) by both routes (default t = 1).
    Hochschild,
    /// Nakayama automorphism report.
    Nakayama,
    /// Complex and truncated exactness checks (numeric only; --max-deg 5, --offset 2).
    Exactness,
    /// kZ # O_{p,q}(SL2) ≅ O_{p,q}(GL2).
    Bosonization,
    /// Normal words per length up to --max-deg (default 5).
    BasisCount,
}

struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, pass: true }
    }
}

/// Parses `argv` (including the program name) and runs; returns the exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.body.as_bytes());
            if !o.body.ends_with('\n') {
                let _ = writeln!(out);
            }
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn params_of(cli: &Cli) -> Result<Params, CliError> {
    let g = |s: &str| s.eq_ignore_ascii_case("generic");
    match (g(&cli.p), g(&cli.q)) {
        (true, true) => Ok(Params::Generic),
        (false, false) => {
            let p = parse_rational_arg(&cli.p).ok_or_else(|| CliError::Usage(format!("bad --p {:?}", cli.p)))?;
            let q = parse_rational_arg(&cli.q).ok_or_else(|| CliError::Usage(format!("bad --q {:?}", cli.q)))?;
            let pt = ParamPoint::new(p, q).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Params::Point(pt))
        }
        _ => Err(CliError::Usage("--p and --q must both be numeric or both generic".into())),
    }
}

fn t_of(cli: &Cli, params: &Params, default: Scalar) -> Result<Scalar, CliError> {
    match &cli.t {
        None => Ok(default),
        Some(s) => {
            let r = parse_rational_arg(s).ok_or_else(|| CliError::Usage(format!("bad --t {s:?}")))?;
            Ok(params.constant(r))
        }
    }
}

fn presentation_of(cli: &Cli, params: &Params) -> Result<Arc<Presentation>, CliError> {
    if let Some(path) = &cli.presentation {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("file");
        return Ok(Arc::new(parse_presentation(name, &text, params)?));
    }
    Ok(match cli.preset {
        Preset::Sl2 => sl2_instance(params)?.0,
        Preset::Gl2 => gl2_instance(params)?,
        Preset::Smash => smash_instance(params)?,
    })
}

fn require_sl2(cli: &Cli, what: &str) -> Result<(), CliError> {
    if cli.presentation.is_some() || cli.preset != Preset::Sl2 {
        return Err(CliError::Usage(format!("{what} is only available for the sl2 preset")));
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

#[derive(Serialize)]
struct ReportJson<'a> {
    title: &'a str,
    pass: bool,
    checks: usize,
    failed: usize,
    entries: &'a [crate::report::ReportEntry],
    notes: &'a [String],
}

fn report_out(r: &Report, format: Format) -> Outcome {
    let body = match format {
        Format::Text => r.to_string(),
        Format::Json => json(&ReportJson {
            title: &r.title,
            pass: r.passed(),
            checks: r.entries.len(),
            failed: r.failures().count(),
            entries: &r.entries,
            notes: &r.notes,
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["axiom", "witness", "pass", "residual"]).expect("csv");
            for e in &r.entries {
                w.write_record([
                    e.axiom.as_str(),
                    e.witness.as_str(),
                    if e.pass { "true" } else { "false" },
                    e.residual.as_deref().unwrap_or(""),
                ])
                .expect("csv");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
        }
    };
    Outcome { body, pass: r.passed() }
}

fn table_out(t: &ExtTable, format: Format) -> Outcome {
    Outcome::ok(match format {
        Format::Text => t.to_string(),
        Format::Json => serde_json::to_string_pretty(&t.to_json()).expect("json"),
        Format::Csv => t.to_csv(),
    })
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let params = params_of(cli)?;
    let format = cli.format.unwrap_or(match cli.command {
        Command::Bosonization => Format::Json,
        _ => Format::Text,
    });
    match &cli.command {
        Command::Nf { expr } => {
            let pres = presentation_of(cli, &params)?;
            nf(&pres, expr, format)
        }
        Command::Confluence => {
            let pres = presentation_of(cli, &params)?;
            let rep = pres.check_confluence();
            let body = match format {
                Format::Json => json(&rep),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["overlap", "left", "right"]).expect("csv");
                    for u in &rep.unresolved {
                        w.write_record([&u.overlap, &u.left, &u.right]).expect("csv");
                    }
                    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
                }
                Format::Text => {
                    let mut s = format!(
                        "{}: {} overlaps checked, {} unresolved{}\n",
                        rep.presentation,
                        rep.overlaps_checked,
                        rep.unresolved.len(),
                        rep.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default()
                    );
                    for u in &rep.unresolved {
                        s.push_str(&format!("  {}: {}  vs  {}\n", u.overlap, u.left, u.right));
                    }
                    s
                }
            };
            Ok(Outcome { body, pass: rep.is_confluent() })
        }
        Command::HopfCheck => {
            require_sl2(cli, "hopf-check")?;
            let (_, h) = sl2_instance(&params)?;
            let mut r = h.verify_bialgebra();
            r.extend(h.verify_antipode(cli.max_deg.unwrap_or(4)));
            r.title = format!("braided Hopf axioms over {params}");
            Ok(report_out(&r, format))
        }
        Command::ExtTable | Command::ExtEquivariant => {
            require_sl2(cli, "ext-table")?;
            let (pres, _) = sl2_instance(&params)?;
            let t = t_of(cli, &params, params.laurent(-1, -1))?;
            let psi = epsilon_t(&pres, &t)?;
            let cx = trivial_resolution(&pres);
            let table = if matches!(cli.command, Command::ExtTable) {
                ext_one_dimensional(&pres, &cx, &psi)
            } else {
                ext_equivariant(&pres, &cx, &psi)
            };
            Ok(table_out(&table, format))
        }
        Command::ExtA => {
            require_sl2(cli, "ext-a")?;
            let (pres, _) = sl2_instance(&params)?;
            let cx = trivial_resolution(&pres);
            let res = ext_coefficients_in_a(&pres, &cx, cli.max_deg.unwrap_or(5))?;
            let pass = res.report.passed();
            let body = match format {
                Format::Json => json(&res),
                Format::Csv => {
                    let mut s = String::from("generator,class\n");
                    for (g, l) in &res.classes {
                        s.push_str(&format!("{g},{l}\n"));
                    }
                    s
                }
                Format::Text => {
                    let mut s = res.report.to_string();
                    s.push_str(&format!("low degrees: {:?}, top cokernel dimension {}\n", res.low_dims, res.coker_dim));
                    for (g, l) in &res.classes {
                        s.push_str(&format!("  [{g}] = {l}·[1]\n"));
                    }
                    s
                }
            };
            Ok(Outcome { body, pass })
        }
        Command::Hochschild => {
            require_sl2(cli, "hochschild")?;
            let (pres, h) = sl2_instance(&params)?;
            let t = t_of(cli, &params, params.one())?;
            let alpha = epsilon_t(&pres, &t)?;
            let eps = epsilon_t(&pres, &params.one())?;
            let cx = trivial_resolution(&pres);
            let bridge = hochschild_via_bridge(&pres, &cx, &alpha);
            let (maps, rep) =
                transport_to_bimodule_resolution(&cx, &h).map_err(|e| CliError::Compute(e.to_string()))?;
            let direct = hochschild_one_dimensional(&pres, &cx, &maps, &alpha, &eps);
            let agree = bridge.dims == direct.dims && rep.passed();
            let body = match format {
                Format::Json => json(&serde_json::json!({
                    "bridge": bridge.to_json(),
                    "bimodule": direct.to_json(),
                    "agree": agree,
                })),
                Format::Csv => direct.to_csv(),
                Format::Text => format!("{bridge}\n{direct}\nroutes agree: {agree}\n{rep}"),
            };
            Ok(Outcome { body, pass: agree })
        }
        Command::Nakayama => {
            require_sl2(cli, "nakayama")?;
            let (pres, h) = sl2_instance(&params)?;
            Ok(report_out(&verify_nakayama(&NakayamaConfig::sl2(&pres), &h), format))
        }
        Command::Exactness => {
            require_sl2(cli, "exactness")?;
            let (pres, _) = sl2_instance(&params)?;
            if params.as_point().is_none() {
                return Err(HomologyError::NeedsPoint.into());
            }
            let cx = trivial_resolution(&pres);
            let mut r = check_complex(&pres, &cx);
            r.extend(check_exactness(&pres, &cx, cli.max_deg.unwrap_or(5), cli.offset.unwrap_or(2))?);
            r.title = format!("resolution over {params}");
            Ok(report_out(&r, format))
        }
        Command::Bosonization => Ok(report_out(&verify_bosonization_iso(&params)?, format)),
        Command::BasisCount => {
            let pres = presentation_of(cli, &params)?;
            let counts = pres.basis_counts(cli.max_deg.unwrap_or(5));
            #[derive(Serialize)]
            struct Row {
                len: usize,
                count: usize,
                cumulative: usize,
            }
            let mut acc = 0;
            let rows: Vec<Row> = counts
                .iter()
                .enumerate()
                .map(|(len, &count)| {
                    acc += count;
                    Row { len, count, cumulative: acc }
                })
                .collect();
            let body = match format {
                Format::Json => json(&serde_json::json!({ "presentation": pres.name(), "counts": rows })),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    for r in &rows {
                        w.serialize(r).expect("csv");
                    }
                    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
                }
                Format::Text => rows
                    .iter()
                    .map(|r| format!("length {}: {} (total {})\n", r.len, r.count, r.cumulative))
                    .collect(),
            };
            Ok(Outcome::ok(body))
        }
    }
}

fn nf(pres: &Presentation, text: &str, format: Format) -> Result<Outcome, CliError> {
    if text.contains('|') {
        let bichar = Bicharacter::sl2(pres.params());
        let prod = BraidedProduct::new(pres, &bichar);
        let mut acc: Option<TensorPoly> = None;
        for f in split_top_products(text) {
            let t = parse_expression(strip_outer_parens(&f), pres)?.lower_tensor(pres)?;
            acc = Some(match acc {
                None => t,
                Some(a) => prod.multiply(&a, &t).map_err(|e| CliError::Usage(e.to_string()))?,
            });
        }
        let t = acc.expect("nonempty");
        let s = t.format(pres);
        return Ok(Outcome::ok(match format {
            Format::Json => json(&serde_json::json!({ "input": text, "normal_form": s, "arity": t.arity() })),
            _ => s,
        }));
    }
    let x = parse_poly(text, pres)?;
    let s = pres.format(&x);
    Ok(Outcome::ok(match format {
        Format::Text => s,
        Format::Json => {
            let degree = match pres.degree(&x) {
                Homogeneity::Degree(d) => serde_json::json!(d),
                Homogeneity::NonHomogeneous => serde_json::Value::Null,
            };
            json(&serde_json::json!({ "input": text, "normal_form": s, "degree": degree }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["word", "coefficient"]).expect("csv");
            let mut terms: Vec<_> = x.iter().collect();
            terms.sort_by(|a, b| pres.cmp_words(a.0, b.0));
            for (wd, c) in terms {
                w.write_record([pres.format_word(wd), c.to_string()]).expect("csv");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
        }
    }))
}
