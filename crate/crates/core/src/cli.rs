//! The `nilcheck` command line.
//!
//! Exit codes: 0 success, 1 criteria disagreement or annotation mismatch,
//! 2 input error, 3 resource cap exceeded.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{parse_group_spec, standard_catalog};
use crate::error::GroupError;
use crate::group::{Elem, FiniteGroup};
use crate::report::{AnalysisReport, CatalogRow, CatalogSummary, LatticeReport, WitnessReport};
use crate::subgroups::SubgroupLattice;
use crate::{Limits, MAX_SUPPORTED_ORDER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nilcheck", version, about = "Nilpotence criteria and subgroup lattices of small finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest group order to accept.
    #[arg(long, global = true, default_value_t = MAX_SUPPORTED_ORDER)]
    max_order: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Render elements as indices or, for permutation groups, in cycle notation.
    #[arg(long, global = true, value_enum, default_value_t = ElementStyle::Index)]
    elements: ElementStyle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every criterion on one group.
    Analyze { spec: String },
    /// Check that all criteria agree across the built-in catalog.
    VerifyCatalog {
        /// Extra groups to check alongside the catalog.
        specs: Vec<String>,
        /// Restrict the catalog to these comma-separated names.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// List every subgroup.
    Subgroups { spec: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ElementStyle {
    Index,
    Perm,
}

struct Ctx<'a> {
    limits: Limits,
    format: Format,
    perm: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs the command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    if cli.max_order == 0 || cli.max_order > MAX_SUPPORTED_ORDER {
        let _ = writeln!(err, "error: --max-order must be in 1..={MAX_SUPPORTED_ORDER}");
        return EXIT_INPUT;
    }
    let mut ctx = Ctx {
        limits: Limits { max_order: cli.max_order, ..Limits::default() },
        format: cli.format,
        perm: cli.elements == ElementStyle::Perm,
        out,
        err,
    };
    let result = match &cli.command {
        Command::Analyze { spec } => analyze(&mut ctx, spec),
        Command::VerifyCatalog { specs, only } => verify_catalog(&mut ctx, specs, only.as_deref()),
        Command::Subgroups { spec } => subgroups(&mut ctx, spec),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            if e.is_cap_violation() {
                EXIT_CAP
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn emit_json<T: serde::Serialize>(ctx: &mut Ctx<'_>, value: &T) -> Result<(), GroupError> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    writeln!(ctx.out, "{text}").map_err(io_err)
}

fn io_err(e: std::io::Error) -> GroupError {
    GroupError::Io { path: "<stdout>".into(), message: e.to_string() }
}

fn render_set(g: &FiniteGroup, elems: &[usize], perm: bool) -> String {
    let items: Vec<String> = elems.iter().map(|&i| g.render(Elem::new(i), perm)).collect();
    format!("{{{}}}", items.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict_word(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "nilpotent",
        Some(false) => "not nilpotent",
        None => "DISAGREE",
    }
}

fn write_witness(ctx: &mut Ctx<'_>, g: &FiniteGroup, w: &WitnessReport) -> std::io::Result<()> {
    let x = Elem::new(w.element);
    let xk = crate::group::power(g, x, w.exponent as i64);
    writeln!(
        ctx.out,
        "  witness: H = {} (order {}), x = {}, k = [G:H] = {}, x^k = {} not in H",
        render_set(g, &w.subgroup, ctx.perm),
        w.subgroup.len(),
        g.render(x, ctx.perm),
        w.exponent,
        g.render(xk, ctx.perm),
    )
}

fn analyze(ctx: &mut Ctx<'_>, spec: &str) -> Result<i32, GroupError> {
    let g = parse_group_spec(spec, &ctx.limits)?;
    let report = AnalysisReport::build(spec, &g, &ctx.limits)?;
    if ctx.format == Format::Json {
        emit_json(ctx, &report)?;
        return Ok(EXIT_OK);
    }
    let c = &report.criteria;
    let w = &mut *ctx.out;
    (|| -> std::io::Result<()> {
        writeln!(w, "group: {}", report.group_name)?;
        writeln!(w, "order: {}", report.order)?;
        writeln!(w, "subgroups: {}", report.subgroup_count)?;
        let orders: Vec<String> = report.series.terms.iter().map(|t| t.len().to_string()).collect();
        let tail = match report.series.class {
            Some(class) => format!("reaches G, class {class}"),
            None => "stalls below G".to_string(),
        };
        writeln!(w, "upper central series orders: {} ({tail})", orders.join(" < "))?;
        writeln!(w, "criteria:")?;
        let rows = [
            ("upper central series reaches G", c.ucs_nilpotent),
            ("normalizer condition", c.normalizer_condition),
            ("all Sylow subgroups normal", c.sylow_all_normal),
            ("internal product of Sylow subgroups", c.internal_product_of_sylows),
            ("all maximal subgroups normal", c.maximal_all_normal),
            ("x^[G:H] in H for all H", c.star),
            ("x^[G:P] in P for Sylow P", c.star_sylow_only),
        ];
        for (label, value) in rows {
            writeln!(w, "  {label:<38} {value}")?;
        }
        writeln!(w, "all agree: {} ({})", yes_no(c.all_agree), verdict_word(c.verdict()))?;
        Ok(())
    })()
    .map_err(io_err)?;
    if let Some(wit) = &report.star_witness {
        write_witness(ctx, &g, wit).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn subgroups(ctx: &mut Ctx<'_>, spec: &str) -> Result<i32, GroupError> {
    let g = parse_group_spec(spec, &ctx.limits)?;
    let lattice = SubgroupLattice::compute(&g, &ctx.limits)?;
    let report = LatticeReport::from_lattice(spec, &lattice);
    if ctx.format == Format::Json {
        emit_json(ctx, &report)?;
        return Ok(EXIT_OK);
    }
    let perm = ctx.perm;
    let w = &mut *ctx.out;
    (|| -> std::io::Result<()> {
        writeln!(w, "group: {} (order {}, {} subgroups)", report.group_name, report.order, report.subgroups.len())?;
        writeln!(w, "{:>5} {:>5}  {:<6} {:<4} {:<5} {:<7} elements", "order", "index", "normal", "hall", "sylow", "maximal")?;
        for row in &report.subgroups {
            let sylow = row.sylow_prime.map_or("-".to_string(), |p| format!("p={p}"));
            writeln!(
                w,
                "{:>5} {:>5}  {:<6} {:<4} {:<5} {:<7} {}",
                row.order,
                row.index,
                yes_no(row.normal),
                yes_no(row.hall),
                sylow,
                yes_no(row.maximal),
                render_set(&g, &row.elements, perm)
            )?;
        }
        Ok(())
    })()
    .map_err(io_err)?;
    Ok(EXIT_OK)
}

fn verify_catalog(ctx: &mut Ctx<'_>, specs: &[String], only: Option<&[String]>) -> Result<i32, GroupError> {
    let mut catalog = standard_catalog();
    if let Some(names) = only {
        for name in names {
            if !catalog.iter().any(|e| &e.name == name) {
                return Err(GroupError::InvalidSpec { token: name.clone(), message: "not in the catalog".into() });
            }
        }
        catalog.retain(|e| names.contains(&e.name));
    }
    let mut groups: Vec<(String, FiniteGroup, Option<bool>)> =
        catalog.into_iter().map(|e| (e.name, e.group, e.expected_nilpotent)).collect();
    for spec in specs {
        groups.push((spec.clone(), parse_group_spec(spec, &ctx.limits)?, None));
    }

    let rows = groups
        .iter()
        .map(|(name, g, expected)| CatalogRow::build(name, g, *expected, &ctx.limits))
        .collect::<Result<Vec<_>, _>>()?;
    let summary = CatalogSummary { all_passed: rows.iter().all(CatalogRow::passed), groups: rows };
    let code = if summary.all_passed { EXIT_OK } else { EXIT_DISAGREEMENT };

    if ctx.format == Format::Json {
        emit_json(ctx, &summary)?;
        return Ok(code);
    }
    (|| -> std::io::Result<()> {
        writeln!(ctx.out, "{:<12} {:>5} {:>9}  {:<14} {:<6} annotation", "group", "order", "subgroups", "verdict", "agree")?;
        for row in &summary.groups {
            let annotation = match (row.expected_nilpotent, row.matches_annotation) {
                (None, _) => "n/a",
                (Some(_), true) => "match",
                (Some(_), false) => "MISMATCH",
            };
            writeln!(
                ctx.out,
                "{:<12} {:>5} {:>9}  {:<14} {:<6} {}",
                row.name,
                row.order,
                row.subgroup_count,
                verdict_word(row.criteria.verdict()),
                yes_no(row.criteria.all_agree),
                annotation
            )?;
        }
        for (row, (_, g, _)) in summary.groups.iter().zip(&groups).filter(|(r, _)| !r.passed()) {
            writeln!(ctx.out)?;
            writeln!(ctx.out, "FAILED {}: expected {:?}, criteria {:?}", row.name, row.expected_nilpotent, row.criteria)?;
            if let Some(w) = &row.star_witness {
                write_witness(ctx, g, w)?;
            }
        }
        let passed = summary.groups.iter().filter(|r| r.passed()).count();
        writeln!(ctx.out, "{passed}/{} groups passed", summary.groups.len())?;
        Ok(())
    })()
    .map_err(io_err)?;
    Ok(code)
}
