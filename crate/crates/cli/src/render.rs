//! Text and JSON row rendering. No computation happens here: everything is
//! derived from a certificate or a validated configuration, so both output
//! modes describe the same object.

use serde::Serialize;

use classnum::curve::Certificate;
use classnum::rayclass::{places_up_to, PlaceK, ValidatedConfig};
use classnum::Error;

use crate::SearchReport;

/// One row of the tabulate/verify table.
#[derive(Serialize)]
pub struct DecompositionRow {
    pub place: String,
    pub degree: u64,
    pub unit_part: String,
    pub e: u64,
    pub f: u64,
    pub g: u64,
}

/// Rows for every place of K of degree <= `max_degree`, with the canonical
/// unit-part representative ("-" for the ramified conductor).
pub fn decomposition_rows(
    cfg: &ValidatedConfig,
    max_degree: usize,
) -> Result<Vec<DecompositionRow>, Error> {
    let rcf = cfg.rcf();
    let mut rows = Vec::new();
    for place in places_up_to(rcf.field(), max_degree) {
        let report = cfg.decomposition(&place)?;
        let unit_part = if matches!(&place, PlaceK::Finite(p) if p == rcf.conductor()) {
            "-".to_string()
        } else {
            rcf.unit_part(&place)?.rep().to_string()
        };
        rows.push(DecompositionRow {
            place: place.to_string(),
            degree: place.degree() as u64,
            unit_part,
            e: report.e,
            f: report.f,
            g: report.g_count,
        });
    }
    Ok(rows)
}

fn config_line(cfg: &ValidatedConfig) -> String {
    let rcf = cfg.rcf();
    format!(
        "configuration: q = {}, m = {}, S = {}, n = {}",
        rcf.field().q(),
        rcf.conductor(),
        rcf.split_place(),
        cfg.n()
    )
}

fn table_text(rows: &[DecompositionRow]) -> String {
    let headers = ["place", "degree", "unit part", "e", "f", "g"];
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.place.clone(),
                r.degree.to_string(),
                r.unit_part.clone(),
                r.e.to_string(),
                r.f.to_string(),
                r.g.to_string(),
            ]
        })
        .collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let render_row = |cols: &[String]| -> String {
        cols.iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    out.push_str(&render_row(&header_cells));
    out.push('\n');
    for row in &cells {
        out.push_str(&render_row(row));
        out.push('\n');
    }
    out
}

pub fn verify_text(cfg: &ValidatedConfig, cert: &Certificate) -> Result<String, Error> {
    let mut out = String::new();
    out.push_str(&config_line(cfg));
    out.push('\n');
    out.push_str(&format!("field degree: {}\n", cert.field_degree));
    out.push_str(&format!("genus: {}\n", cert.genus));
    if cert.genus >= 1 {
        out.push('\n');
        let rows = decomposition_rows(cfg, cert.genus as usize)?;
        out.push_str(&table_text(&rows));
        out.push('\n');
        out.push_str(&format!(
            "place counts B_1..B_{}: {:?}\n",
            cert.genus, cert.counts
        ));
    }
    out.push_str(&format!("L coefficients: {}\n", int_list(&cert.l_poly)));
    out.push_str(&format!("class number: {}\n", cert.class_number));
    let criterion = match cert.criterion {
        Some(true) => "satisfied",
        Some(false) => "not satisfied",
        None => "not applicable",
    };
    out.push_str(&format!("criterion (q = 2, genus 4): {criterion}\n"));
    out.push_str(&format!("verdict: {}\n", cert.verdict));
    Ok(out)
}

pub fn tabulate_text(cfg: &ValidatedConfig, rows: &[DecompositionRow]) -> String {
    let mut out = String::new();
    out.push_str(&config_line(cfg));
    out.push('\n');
    out.push_str(&table_text(rows));
    out
}

pub fn search_text(report: &SearchReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "search: q = {}, deg m = {}, deg S = {}, n = {}\n",
        report.q, report.modulus_degree, report.split_degree, report.n
    ));
    out.push_str(&format!("scanned {} configurations\n", report.scanned));
    if report.hits.is_empty() {
        out.push_str("no configurations found\n");
    } else {
        out.push_str(&format!("class number one ({} found):\n", report.hits.len()));
        for hit in &report.hits {
            out.push_str(&format!("  m = {}, S = {}\n", hit.m, hit.s));
        }
    }
    out
}

pub fn int_list(values: &[i128]) -> String {
    format!("{values:?}")
}
