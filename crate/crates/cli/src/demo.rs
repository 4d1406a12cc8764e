//! Bundled fixtures and the two worked pipelines.

use std::fmt::Write as _;

use neutro_core::algebra::EvalConfig;
use neutro_core::query::{evaluate, parse, Catalog, Mode};
use neutro_core::relation::{Grade, NeutrosophicRelation};

use crate::document::{parse_document, render_document};
use crate::error::CliError;
use crate::table::format_table;

pub struct Fixture {
    /// Catalog name used by the demo queries.
    pub name: &'static str,
    pub file: &'static str,
    pub text: &'static str,
}

macro_rules! fixture {
    ($name:literal, $file:literal) => {
        Fixture {
            name: $name,
            file: $file,
            text: include_str!(concat!("../fixtures/", $file)),
        }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("R", "example2_R.nrel"),
    fixture!("S", "example2_S.nrel"),
    fixture!("T1", "example2_T1.nrel"),
    fixture!("T2", "example2_T2.nrel"),
    fixture!("T3", "example2_T3.nrel"),
    fixture!("RadarRules", "radar_rules.nrel"),
    fixture!("GunRules", "gun_rules.nrel"),
    fixture!("SpeedRules", "speed_rules.nrel"),
    fixture!("RadarData", "radar_data.nrel"),
    fixture!("GunData", "gun_data.nrel"),
    fixture!("SpeedData", "speed_data.nrel"),
    fixture!("TanksResult", "tanks_result.nrel"),
];

pub const TANKS_QUERY: &str = "PROJECT[Object-id,Object](RadarData JOIN RadarRules) \
INTERSECT PROJECT[Object-id,Object](GunData JOIN GunRules) \
INTERSECT PROJECT[Object-id,Object](SpeedData JOIN SpeedRules)";

/// The example pipeline, one stage per line: name and query.
pub const EXAMPLE2_STAGES: &[(&str, &str)] = &[
    ("T1", "R JOIN S"),
    ("T2", "PROJECT[X,Z](T1)"),
    ("T3", "SELECT[NOT X = Z](T2)"),
];

pub fn fixture(name: &str) -> Result<NeutrosophicRelation, CliError> {
    let f = FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| CliError::Usage(format!("no bundled fixture `{name}`")))?;
    parse_document(f.text).map_err(|e| e.in_file(std::path::Path::new(f.file)))
}

fn catalog_of(names: &[&str]) -> Result<Catalog, CliError> {
    names
        .iter()
        .map(|n| Ok((n.to_string(), fixture(n)?)))
        .collect()
}

fn run(query: &str, catalog: &Catalog, config: &EvalConfig) -> Result<NeutrosophicRelation, CliError> {
    Ok(evaluate(&parse(query)?, catalog, Mode::Robust, config)?)
}

/// T1, T2 and T3 computed from R and S, each stage reading the previous one.
pub fn example2_tables(config: &EvalConfig) -> Result<Vec<(&'static str, NeutrosophicRelation)>, CliError> {
    let mut catalog = catalog_of(&["R", "S"])?;
    let mut out = Vec::new();
    for (name, query) in EXAMPLE2_STAGES {
        let r = run(query, &catalog, config)?;
        catalog.insert(*name, r.clone());
        out.push((*name, r));
    }
    Ok(out)
}

pub fn tanks_result(config: &EvalConfig) -> Result<NeutrosophicRelation, CliError> {
    let catalog = catalog_of(&[
        "RadarData",
        "RadarRules",
        "GunData",
        "GunRules",
        "SpeedData",
        "SpeedRules",
    ])?;
    run(TANKS_QUERY, &catalog, config)
}

/// Compares on canonical serialized form.
fn compare(label: &str, got: &NeutrosophicRelation, expected: &str, out: &mut String, mismatches: &mut Vec<String>) -> Result<(), CliError> {
    let expected = fixture(expected)?;
    if render_document(got) == render_document(&expected) {
        let _ = writeln!(out, "{label}: matches the expected table");
    } else {
        let _ = writeln!(out, "{label}: MISMATCH, expected:\n{}", format_table(&expected));
        mismatches.push(label.to_string());
    }
    Ok(())
}

/// Printed report and the labels of any tables that differ from the golden
/// fixtures.
pub fn example2_report(config: &EvalConfig) -> Result<(String, Vec<String>), CliError> {
    let mut out = String::new();
    let mut mismatches = Vec::new();
    for name in ["R", "S"] {
        let _ = writeln!(out, "{name}:\n{}", format_table(&fixture(name)?));
    }
    for (name, r) in example2_tables(config)? {
        let query = EXAMPLE2_STAGES.iter().find(|(n, _)| *n == name).map(|(_, q)| *q).unwrap_or_default();
        let _ = writeln!(out, "{name} = {query}\n{}", format_table(&r));
        compare(name, &r, name, &mut out, &mut mismatches)?;
        out.push('\n');
    }
    Ok((out, mismatches))
}

pub fn tanks_report(config: &EvalConfig) -> Result<(String, Vec<String>), CliError> {
    let mut out = String::new();
    let mut mismatches = Vec::new();
    let result = tanks_result(config)?;
    let _ = writeln!(out, "{TANKS_QUERY}\n\n{}", format_table(&result));
    compare("result", &result, "TanksResult", &mut out, &mut mismatches)?;
    if let Some(w) = low_confidence_warning(&result) {
        let _ = writeln!(out, "{w}");
    }
    Ok((out, mismatches))
}

/// Warns when no stored row has belief or doubt of at least one half.
pub fn low_confidence_warning(r: &NeutrosophicRelation) -> Option<String> {
    let half = Grade::new(1, 2).expect("valid grade");
    let decisive = r.rows().any(|(_, ps)| ps.iter().any(|p| p.belief >= half || p.doubt >= half));
    if decisive {
        return None;
    }
    let mut subjects: Vec<&str> = r.rows().filter_map(|(t, _)| r.scheme().values(t).next()).collect();
    subjects.dedup();
    Some(format!(
        "warning: low confidence: every belief and doubt is below 0.5, so the type of {} cannot be decided from these observations",
        if subjects.is_empty() { "any object".to_string() } else { subjects.join(", ") }
    ))
}
