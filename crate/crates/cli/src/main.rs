use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sumorders::catalog::{self, CatalogError};
use sumorders::criteria::{
    recognize_a5_times_cm, run_suite_with, CheckError, LemmaId, LemmaReport, SuiteTarget,
};
use sumorders::exactnum::psi_cyclic;
use sumorders::permgrp::{FiniteGroup, DEFAULT_MAX_ORDER};
use sumorders::psi::{cyclic_ratio, herzog_ratio, psi_of_group};

#[derive(Parser)]
#[command(name = "sumorders", version, about = "Sum of element orders for finite permutation groups")]
struct Cli {
    /// Refuse to enumerate groups with more elements than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// ψ(G), ψ(C_n) and the comparison with 211/1617.
    Psi {
        /// `catalog:<id>`, a catalog id, or a GroupSpec JSON file.
        target: String,
    },
    /// Run lemma checks; exits 1 if any hypothesis holds but its conclusion fails.
    Verify {
        /// Restrict to these lemmas (e.g. 2.1, 3.1, main-theorem). Repeatable.
        #[arg(long = "lemma", value_name = "ID")]
        lemmas: Vec<LemmaId>,
        /// Run every lemma (the default when no --lemma is given).
        #[arg(long, conflicts_with = "lemmas")]
        all: bool,
        /// Groups to check; the whole default manifest when omitted.
        targets: Vec<String>,
    },
    /// Solvability and recognition of A5 x C_m.
    Classify { target: String },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Every entry of the default manifest with its expected invariants.
    List,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Violation(LemmaReport),
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn resolve(target: &str, max_order: usize) -> Result<FiniteGroup, Failure> {
    match catalog::resolve_target(target, max_order) {
        Err(CatalogError::UnknownId(_)) if !target.starts_with("catalog:") => {
            Ok(catalog::build_with(target, max_order)?)
        }
        other => Ok(other?),
    }
}

/// One row of `psi` and `classify` output.
#[derive(Serialize)]
struct Summary {
    group_id: String,
    order: u64,
    psi: String,
    psi_cyclic: String,
    verdict: String,
    solvable: bool,
    recognized_m: Option<u64>,
}

#[derive(Serialize)]
struct PsiDetail {
    #[serde(flatten)]
    summary: Summary,
    ratio: String,
    histogram: std::collections::BTreeMap<u64, u64>,
}

#[derive(Serialize)]
struct ClassifyDetail {
    #[serde(flatten)]
    summary: Summary,
    ratio: String,
    center_order: u64,
    derived_order: u64,
    classification: String,
}

fn summarize(g: &FiniteGroup) -> Result<Summary, Failure> {
    let psi = psi_of_group(g);
    let cyclic = psi_cyclic(g.order() as u64).map_err(|e| Failure::Input(e.to_string()))?;
    let solvable = g.is_solvable();
    let recognized_m = if solvable {
        None
    } else {
        recognize_a5_times_cm(g).m
    };
    Ok(Summary {
        group_id: g.name().to_string(),
        order: psi.order,
        psi: psi.psi.to_string(),
        psi_cyclic: cyclic.to_string(),
        verdict: herzog_ratio(g).verdict.to_string(),
        solvable,
        recognized_m,
    })
}

fn write_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::Input(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<T: Serialize>(out: &mut impl Write, rows: &[T]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_psi(target: &str, cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let g = resolve(target, cli.max_order)?;
    let summary = summarize(&g)?;
    let detail = PsiDetail {
        ratio: cyclic_ratio(&g).to_string(),
        histogram: g.order_histogram().clone(),
        summary,
    };
    match cli.format {
        Format::Json => write_json(out, &detail),
        Format::Csv => write_csv(out, &[detail.summary]),
        Format::Text => {
            let s = &detail.summary;
            writeln!(out, "group       {}", s.group_id)?;
            writeln!(out, "order       {}", s.order)?;
            writeln!(out, "psi         {}", s.psi)?;
            writeln!(out, "psi(C_n)    {}", s.psi_cyclic)?;
            writeln!(out, "ratio       {}", detail.ratio)?;
            writeln!(out, "vs 211/1617 {}", s.verdict)?;
            let hist: Vec<String> = detail
                .histogram
                .iter()
                .map(|(d, n)| format!("{d}:{n}"))
                .collect();
            writeln!(out, "orders      {}", hist.join(" "))?;
            Ok(())
        }
    }
}

fn cmd_classify(target: &str, cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let g = resolve(target, cli.max_order)?;
    let summary = summarize(&g)?;
    let rec = recognize_a5_times_cm(&g);
    let classification = match (summary.solvable, summary.recognized_m) {
        (true, _) => "solvable".to_string(),
        (false, Some(m)) => format!("A5 x C{m}"),
        (false, None) => "non-solvable, not of the form A5 x C_m".to_string(),
    };
    let detail = ClassifyDetail {
        ratio: cyclic_ratio(&g).to_string(),
        center_order: rec.center_order,
        derived_order: rec.derived_order,
        classification,
        summary,
    };
    match cli.format {
        Format::Json => write_json(out, &detail),
        Format::Csv => write_csv(out, &[detail.summary]),
        Format::Text => {
            let s = &detail.summary;
            writeln!(out, "group          {}", s.group_id)?;
            writeln!(out, "order          {}", s.order)?;
            writeln!(out, "psi/psi(C_n)   {}", detail.ratio)?;
            writeln!(out, "vs 211/1617    {}", s.verdict)?;
            writeln!(out, "solvable       {}", s.solvable)?;
            writeln!(out, "|Z(G)|         {}", detail.center_order)?;
            writeln!(out, "|G'|           {}", detail.derived_order)?;
            writeln!(out, "classification {}", detail.classification)?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ReportRow<'a> {
    group: &'a str,
    lemma: &'a str,
    instance: &'a str,
    status: &'a str,
    detail: &'a str,
}

impl<'a> From<&'a LemmaReport> for ReportRow<'a> {
    fn from(r: &'a LemmaReport) -> Self {
        Self {
            group: &r.group,
            lemma: r.lemma.as_str(),
            instance: &r.instance,
            status: r.status(),
            detail: &r.detail,
        }
    }
}

fn report_line(r: &LemmaReport) -> String {
    let instance = if r.instance.is_empty() { "-" } else { &r.instance };
    format!(
        "{:<10} {:<22} {:<14} {:<9} {}",
        r.group,
        r.lemma.as_str(),
        instance,
        r.status(),
        r.detail
    )
}

fn cmd_verify(
    lemmas: &[LemmaId],
    targets: &[String],
    cli: &Cli,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let targets: Vec<SuiteTarget> = if targets.is_empty() {
        SuiteTarget::manifest()
    } else {
        targets.iter().map(|t| SuiteTarget::parse(t)).collect()
    };
    let reports = run_suite_with(&targets, lemmas, cli.max_order)?;
    match cli.format {
        Format::Json => write_json(out, &reports)?,
        Format::Csv => {
            let rows: Vec<ReportRow> = reports.iter().map(ReportRow::from).collect();
            write_csv(out, &rows)?;
        }
        Format::Text => {
            for r in &reports {
                writeln!(out, "{}", report_line(r))?;
            }
            let holds = reports.iter().filter(|r| r.status() == "holds").count();
            let violations = reports.iter().filter(|r| r.is_violation()).count();
            writeln!(
                out,
                "{} reports: {holds} holds, {} vacuous, {violations} violations",
                reports.len(),
                reports.len() - holds - violations
            )?;
        }
    }
    match reports.into_iter().find(LemmaReport::is_violation) {
        Some(r) => Err(Failure::Violation(r)),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct CatalogRow {
    id: String,
    order: Option<u64>,
    psi: Option<u64>,
    solvable: Option<bool>,
    center_order: Option<u64>,
}

fn cmd_catalog_list(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let rows: Vec<CatalogRow> = catalog::default_manifest()
        .into_iter()
        .map(|e| CatalogRow {
            id: e.id,
            order: e.expected.order,
            psi: e.expected.psi,
            solvable: e.expected.solvable,
            center_order: e.expected.center_order,
        })
        .collect();
    match cli.format {
        Format::Json => write_json(out, &rows),
        Format::Csv => write_csv(out, &rows),
        Format::Text => {
            let show = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            for r in &rows {
                writeln!(
                    out,
                    "{:<10} order {:<6} psi {:<9} solvable {:<6} center {}",
                    r.id,
                    show(r.order.map(|v| v.to_string())),
                    show(r.psi.map(|v| v.to_string())),
                    show(r.solvable.map(|v| v.to_string())),
                    show(r.center_order.map(|v| v.to_string())),
                )?;
            }
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Psi { target } => cmd_psi(target, cli, &mut out),
        Command::Classify { target } => cmd_classify(target, cli, &mut out),
        Command::Verify { lemmas, targets, .. } => cmd_verify(lemmas, targets, cli, &mut out),
        Command::Catalog { action: CatalogAction::List } => cmd_catalog_list(cli, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(r)) => {
            eprintln!("violation: {}", report_line(&r));
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
