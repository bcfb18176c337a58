//! Table, JSON and CSV renderings. All output is a pure function of its input.

use std::io::{self, Write};

use clap::ValueEnum;
use grassmoduli::moduli::{CenterWeight, ComponentReport, ModuliReport};
use grassmoduli::partition::Partition;
use grassmoduli::verify::VerifyReport;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// One decomposition row as emitted by `decompose`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentRow {
    pub partition: Partition,
    pub fund: Vec<u32>,
    pub i: Vec<u32>,
    pub j: Vec<u32>,
    pub parity: String,
    pub dimension: String,
    pub center_weight: CenterWeight,
    pub gs_filter: bool,
}

impl From<&ComponentReport> for ComponentRow {
    fn from(r: &ComponentReport) -> Self {
        ComponentRow {
            partition: r.component.partition.clone(),
            fund: r.component.fund.coeffs().to_vec(),
            i: r.component.i.clone(),
            j: r.component.j.clone(),
            parity: r.parity.to_string(),
            dimension: r.dimension.to_string(),
            center_weight: r.center_weight,
            gs_filter: r.passes_gs_filter,
        }
    }
}

fn tuple(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn bracket(p: &Partition) -> String {
    format!("[{p}]")
}

fn write_table<W: Write + ?Sized>(
    w: &mut W,
    header: &[&str],
    rows: &[Vec<String>],
) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (c, cell) in row.iter().enumerate() {
            widths[c] = widths[c].max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &wd)| format!("{c}{}", " ".repeat(wd - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(w, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(w, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Always)
        .from_writer(w)
}

pub fn components<W: Write + ?Sized>(
    w: &mut W,
    rows: &[ComponentRow],
    format: Format,
) -> io::Result<()> {
    const HEADER: [&str; 8] = [
        "partition",
        "fund",
        "i",
        "j",
        "parity",
        "dimension",
        "center_weight",
        "gs_filter",
    ];
    match format {
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        bracket(&r.partition),
                        tuple(&r.fund),
                        tuple(&r.i),
                        tuple(&r.j),
                        r.parity.clone(),
                        r.dimension.clone(),
                        r.center_weight.to_string(),
                        if r.gs_filter { "yes" } else { "no" }.to_string(),
                    ]
                })
                .collect();
            write_table(w, &HEADER, &cells)
        }
        Format::Json => {
            serde_json::to_writer(&mut *w, rows)?;
            writeln!(w)
        }
        Format::Csv => {
            let mut c = csv_writer(&mut *w);
            c.write_record(HEADER)?;
            for r in rows {
                c.write_record([
                    r.partition.to_string(),
                    join(&r.fund),
                    join(&r.i),
                    join(&r.j),
                    r.parity.clone(),
                    r.dimension.clone(),
                    r.center_weight.to_string(),
                    r.gs_filter.to_string(),
                ])?;
            }
            c.flush()
        }
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn moduli<W: Write + ?Sized>(w: &mut W, r: &ModuliReport, format: Format) -> io::Result<()> {
    let gs = r
        .gs_sym_components
        .iter()
        .map(bracket)
        .collect::<Vec<_>>()
        .join(" ");
    match format {
        Format::Table => {
            let skew = r
                .skew_component
                .as_ref()
                .map_or_else(|| "-".to_string(), ToString::to_string);
            let rows: Vec<Vec<String>> = [
                ("p", r.p.to_string()),
                ("q", r.q.to_string()),
                ("k", r.k.to_string()),
                ("dim_H0", r.dim_h0.to_string()),
                ("dim_sym_square", r.dim_sym_square.to_string()),
                ("dim_F2k", r.dim_f2k.to_string()),
                ("dim_Vk", r.dim_vk.to_string()),
                ("dim_Vk (components)", r.dim_vk_components.to_string()),
                ("N", r.n_target.to_string()),
                ("dim_image_moduli", r.dim_image_moduli.to_string()),
                ("gs_sym_components", gs),
                ("skew_component", skew),
                ("skew_label", r.skew_label.to_string()),
                ("routes_agree", r.flags.routes_agree.to_string()),
                ("gs_singleton", r.flags.gs_singleton.to_string()),
                (
                    "skew_label_matches_paper",
                    r.flags.skew_label_matches.to_string(),
                ),
            ]
            .into_iter()
            .map(|(a, b)| vec![a.to_string(), b])
            .collect();
            write_table(w, &["field", "value"], &rows)?;
            for n in &r.notes {
                writeln!(w, "note: {n}")?;
            }
            Ok(())
        }
        Format::Json => writeln!(w, "{}", r.to_json()),
        Format::Csv => {
            let mut c = csv_writer(&mut *w);
            c.write_record([
                "p",
                "q",
                "k",
                "dim_H0",
                "dim_sym_square",
                "dim_F2k",
                "dim_Vk",
                "N",
                "dim_image_moduli",
                "gs_sym_components",
                "routes_agree",
                "gs_singleton",
                "skew_label_matches_paper",
            ])?;
            let gs_csv = r
                .gs_sym_components
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(";");
            c.write_record([
                r.p.to_string(),
                r.q.to_string(),
                r.k.to_string(),
                r.dim_h0.to_string(),
                r.dim_sym_square.to_string(),
                r.dim_f2k.to_string(),
                r.dim_vk.to_string(),
                r.n_target.to_string(),
                r.dim_image_moduli.to_string(),
                gs_csv,
                r.flags.routes_agree.to_string(),
                r.flags.gs_singleton.to_string(),
                r.flags.skew_label_matches.to_string(),
            ])?;
            c.flush()
        }
    }
}

pub fn verify<W: Write + ?Sized>(w: &mut W, r: &VerifyReport, format: Format) -> io::Result<()> {
    match format {
        Format::Table => {
            for c in &r.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                write!(w, "{status}  {}/{}  ({} cases)", c.suite, c.name, c.cases)?;
                if !c.detail.is_empty() {
                    write!(w, "  {}", c.detail)?;
                }
                writeln!(w)?;
            }
            for d in &r.discrepancies {
                writeln!(
                    w,
                    "discrepancy {} ({} instances, oracle confirms computed: {})",
                    d.id, d.instances, d.oracle_confirms_computed
                )?;
                writeln!(w, "  stated:   {}", d.stated)?;
                writeln!(w, "  computed: {}", d.computed)?;
            }
            let failed = r.checks.iter().filter(|c| !c.passed).count();
            writeln!(w, "{} checks, {failed} failed", r.checks.len())
        }
        Format::Json => {
            serde_json::to_writer(&mut *w, r)?;
            writeln!(w)
        }
        Format::Csv => {
            let mut c = csv_writer(&mut *w);
            c.write_record(["suite", "check", "passed", "cases", "detail"])?;
            for ch in &r.checks {
                c.write_record([
                    ch.suite.to_string(),
                    ch.name.clone(),
                    ch.passed.to_string(),
                    ch.cases.to_string(),
                    ch.detail.clone(),
                ])?;
            }
            c.flush()
        }
    }
}
