//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on usage errors (bad flags, unknown ids or
//! table numbers), 2 when an invariant fails.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{self, census, Family, Filter, FixedComponent, Kind, Stratum};
use crate::error::{Error, Result};
use crate::homology::{self, cell_from_tangent};
use crate::tables;
use crate::tangent::{classify_limit, tangent_weights};
use crate::weights::OneParamSubgroup;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "quintic-moduli",
    version,
    about = "Fixed locus, tangent weights and Betti numbers of M(5,3) on the projective plane"
)]
pub struct Cli {
    /// One-parameter subgroup as n0,n1,n2.
    #[arg(
        long,
        global = true,
        default_value = "0,1,7",
        allow_hyphen_values = true
    )]
    pub lambda: OneParamSubgroup,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Restrict `components` to a stratum (M0..M3).
    #[arg(long, global = true)]
    pub stratum: Option<Stratum>,

    /// Restrict `components` to a family (alpha..nu).
    #[arg(long, global = true)]
    pub family: Option<Family>,

    /// Restrict `components` to a kind (point, line, surface).
    #[arg(long, global = true)]
    pub kind: Option<Kind>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré polynomial, Euler characteristic and Hodge numbers.
    Poincare,
    /// List fixed components.
    Components,
    /// Tangent weights at one component.
    Tangent { id: String },
    /// Regenerate a fixed-point table and compare it with the reference.
    Tables { n: u8 },
    /// Run every invariant check.
    Verify,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_with_catalog(&cli, catalog::enumerate_all(), out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{}", e.render());
                    return if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        EXIT_USAGE
                    } else {
                        EXIT_OK
                    };
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            code
        }
    }
}

/// Runs a parsed command against an explicit catalog (used for fault injection).
pub fn run_with_catalog(
    cli: &Cli,
    components: Result<Vec<FixedComponent>>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let components = match components {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVARIANT;
        }
    };
    let result = match &cli.command {
        Command::Poincare => cmd_poincare(cli, &components, out),
        Command::Components => cmd_components(cli, &components, out),
        Command::Tangent { id } => cmd_tangent(cli, &components, id, out),
        Command::Tables { n } => cmd_tables(cli, *n, out, err),
        Command::Verify => cmd_verify(cli, &components, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownComponent(_) | Error::UnknownTable(_) | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_INVARIANT,
    }
}

type CmdResult = std::result::Result<i32, Error>;

fn io<T>(r: std::io::Result<T>) -> Result<T> {
    r.map_err(|e| Error::Parse(format!("output error: {e}")))
}

fn json_line(out: &mut dyn Write, v: &serde_json::Value) -> Result<()> {
    io(writeln!(out, "{v}"))
}

fn cmd_poincare(cli: &Cli, components: &[FixedComponent], out: &mut dyn Write) -> CmdResult {
    let s = homology::poincare(components, cli.lambda)?;
    match cli.format {
        Format::Json => json_line(out, &s.to_json(cli.lambda))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::Parse(e.to_string());
            w.write_record(["degree", "betti"]).map_err(csv_err)?;
            for (m, b) in s.betti.iter().enumerate() {
                w.write_record([m.to_string(), b.to_string()])
                    .map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            io(out.write_all(&bytes))?;
        }
        Format::Text => {
            let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            io(writeln!(out, "P(x) = {}", s.polynomial_text()))?;
            io(writeln!(out, "lambda = {}", cli.lambda))?;
            io(writeln!(
                out,
                "census = {} points, {} lines, {} surfaces",
                s.census.points, s.census.lines, s.census.surfaces
            ))?;
            io(writeln!(out, "euler = {}", s.euler))?;
            io(writeln!(out, "betti = {}", join(&s.betti)))?;
            io(writeln!(out, "hodge h^pp = {}", join(&s.hodge_diagonal())))?;
        }
    }
    Ok(EXIT_OK)
}

fn filter_of(cli: &Cli) -> Filter {
    Filter {
        stratum: cli.stratum,
        family: cli.family,
        kind: cli.kind,
        param: None,
    }
}

fn params_text(c: &FixedComponent) -> String {
    c.params
        .iter()
        .map(|p| format!("{}={}", p.name, p.value.to_monomial()))
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_components(cli: &Cli, components: &[FixedComponent], out: &mut dyn Write) -> CmdResult {
    let selected: Vec<FixedComponent> = catalog::filter(components, &filter_of(cli))
        .into_iter()
        .cloned()
        .collect();
    let counts = census(&selected);
    let eval = |c: &FixedComponent| c.eval_vector(cli.lambda).to_string();
    match cli.format {
        Format::Json => {
            for c in &selected {
                let v =
                    serde_json::to_value(c.to_record()).map_err(|e| Error::Parse(e.to_string()))?;
                json_line(out, &v)?;
            }
            json_line(out, &serde_json::json!({ "census": counts }))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::Parse(e.to_string());
            w.write_record(["id", "stratum", "family", "kind", "params", "eval_vector"])
                .map_err(csv_err)?;
            for c in &selected {
                w.write_record([
                    c.id.clone(),
                    c.stratum.to_string(),
                    c.family.to_string(),
                    c.kind.to_string(),
                    params_text(c),
                    eval(c),
                ])
                .map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            io(out.write_all(&bytes))?;
            io(writeln!(out, "{}", footer(&counts)))?;
        }
        Format::Text => {
            for c in &selected {
                io(writeln!(
                    out,
                    "{:<28} {:<3} {:<8} {:<8} {}",
                    c.id,
                    c.stratum,
                    c.family,
                    c.kind,
                    eval(c)
                ))?;
            }
            io(writeln!(out, "{}", footer(&counts)))?;
        }
    }
    Ok(EXIT_OK)
}

fn footer(c: &catalog::CensusCounts) -> String {
    format!(
        "# census: points={} lines={} surfaces={}",
        c.points, c.lines, c.surfaces
    )
}

fn cmd_tangent(
    cli: &Cli,
    components: &[FixedComponent],
    id: &str,
    out: &mut dyn Write,
) -> CmdResult {
    let c = catalog::find(components, id)?;
    let t = tangent_weights(c)?;
    let cell = cell_from_tangent(c, &t, cli.lambda)?;
    let limit = classify_limit(c)?;
    match cli.format {
        Format::Json => {
            let mut v = serde_json::to_value(&t).map_err(|e| Error::Parse(e.to_string()))?;
            v["p"] = cell.p.into();
            v["eval_vector"] = serde_json::json!(c.eval_vector(cli.lambda).entries());
            v["limit"] = limit.to_string().into();
            json_line(out, &v)?;
        }
        Format::Csv => {
            io(writeln!(out, "i,j,k,multiplicity"))?;
            for (w, n) in t.weights.iter() {
                io(writeln!(out, "{},{},{},{n}", w.i, w.j, w.k))?;
            }
        }
        Format::Text => {
            io(writeln!(out, "# {}", c.id))?;
            io(write!(out, "{}", t.weights.to_canonical_text()))?;
            io(writeln!(out, "chi0 {}", t.chi0_multiplicity))?;
            io(writeln!(out, "p {}", cell.p))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_tables(cli: &Cli, n: u8, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let rows = tables::regenerate(n)?;
    let diffs = tables::diff(n)?;
    match cli.format {
        Format::Json => {
            for r in &rows {
                json_line(out, &r.to_json())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::Parse(e.to_string());
            w.write_record(["row", "support_complement", "affine_lines", "limits"])
                .map_err(csv_err)?;
            for r in &rows {
                w.write_record([
                    r.label(),
                    catalog::monomial_list(&r.support_complement),
                    catalog::monomial_list(&r.affine_lines),
                    catalog::monomial_list(&r.limits),
                ])
                .map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            io(out.write_all(&bytes))?;
        }
        Format::Text => {
            for r in &rows {
                io(writeln!(
                    out,
                    "{:<22} {:<40} {:<28} {}",
                    r.label(),
                    catalog::monomial_list(&r.support_complement),
                    catalog::monomial_list(&r.affine_lines),
                    catalog::monomial_list(&r.limits)
                ))?;
            }
        }
    }
    for d in &diffs {
        io(writeln!(err, "diff: {d}"))?;
    }
    Ok(if diffs.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    })
}

fn cmd_verify(cli: &Cli, components: &[FixedComponent], out: &mut dyn Write) -> CmdResult {
    let report = homology::verify(components, cli.lambda);
    match cli.format {
        Format::Json | Format::Csv => {
            let v = serde_json::to_value(&report).map_err(|e| Error::Parse(e.to_string()))?;
            json_line(out, &v)?;
        }
        Format::Text => io(write!(out, "{}", report.to_text()))?,
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    })
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
