use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::json;

use super::{Catalog, CatalogEntry, ComponentRecord, DimensionRelation, ProfileRef, Status};
use crate::error::{Error, Result};
use crate::hilbert_profile::{HilbertProfile, DEFAULT_T_MAX};
use crate::invariants::{castelnuovo_pi, expected_dim_p5};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

fn status_word(s: Status) -> String {
    match s {
        Status::Empty => "empty".into(),
        Status::Irreducible => "irreducible".into(),
        Status::Reducible { count } => format!("reducible({count})"),
    }
}

fn relation_word(r: DimensionRelation) -> String {
    match r {
        DimensionRelation::EqualsExpected => "expected".into(),
        DimensionRelation::Exceeds { by } => format!("+{by}"),
    }
}

fn profile_word(p: &ProfileRef) -> String {
    match p {
        ProfileRef::MaximalRank => "maximal_rank".into(),
        ProfileRef::Extremal => "extremal".into(),
        ProfileRef::Special { id } => format!("special:{id}"),
    }
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn expected_or_blank(e: &CatalogEntry) -> String {
    if e.g <= castelnuovo_pi(e.d, 5).unwrap_or(-1) {
        expected_dim_p5(e.d, e.g).map(|x| x.to_string()).unwrap_or_default()
    } else {
        String::new()
    }
}

pub fn render_profile(p: &HilbertProfile, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "{:>3} {:>8} {:>8} {:>8}", "t", "h0(I)", "h1(I)", "h1(O)").unwrap();
            for r in &p.entries {
                writeln!(out, "{:>3} {:>8} {:>8} {:>8}", r.t, r.h0_ideal, r.h1_ideal, r.h1_curve).unwrap();
            }
            writeln!(
                out,
                "acm={} linearly_normal={} maximal_rank={}",
                p.flags.acm, p.flags.linearly_normal, p.flags.maximal_rank
            )
            .unwrap();
        }
        Format::Markdown => {
            out.push_str("| t | h0(I_X(t)) | h1(I_X(t)) | h1(O_X(t)) |\n|---|---|---|---|\n");
            for r in &p.entries {
                writeln!(out, "| {} | {} | {} | {} |", r.t, r.h0_ideal, r.h1_ideal, r.h1_curve).unwrap();
            }
        }
        Format::Csv => {
            out.push_str("t,h0_ideal,h1_ideal,h1_curve\n");
            for r in &p.entries {
                writeln!(out, "{},{},{},{}", r.t, r.h0_ideal, r.h1_ideal, r.h1_curve).unwrap();
            }
        }
        Format::Json => {
            out = serde_json::to_string(p).map_err(|e| Error::Catalog(e.to_string()))?;
            out.push('\n');
        }
    }
    Ok(out)
}

const ENTRY_CSV_HEADER: &str =
    "d,g,status,component,dimension,expected_dim,relation,gonality,maroni,linearly_normal,acm,profile";

fn component_csv(e: &CatalogEntry, c: Option<&ComponentRecord>) -> String {
    let exp = expected_or_blank(e);
    match c {
        None => format!("{},{},{},,,{exp},,,,,,", e.d, e.g, status_word(e.status)),
        Some(c) => format!(
            "{},{},{},{},{},{exp},{},{},{},{},{},{}",
            e.d,
            e.g,
            status_word(e.status),
            c.id,
            c.dimension,
            relation_word(c.dimension_relation),
            opt(c.gonality),
            opt(c.maroni),
            c.linearly_normal,
            c.acm_general_member,
            profile_word(&c.profile)
        ),
    }
}

pub fn render_entry(cat: &Catalog, e: &CatalogEntry, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = serde_json::to_string(e).map_err(|x| Error::Catalog(x.to_string()))?;
            out.push('\n');
        }
        Format::Csv => {
            writeln!(out, "{ENTRY_CSV_HEADER}").unwrap();
            if e.components.is_empty() {
                writeln!(out, "{}", component_csv(e, None)).unwrap();
            }
            for c in &e.components {
                writeln!(out, "{}", component_csv(e, Some(c))).unwrap();
            }
        }
        Format::Text | Format::Markdown => {
            let md = format == Format::Markdown;
            let exp = expected_or_blank(e);
            if md {
                writeln!(out, "## (d, g) = ({}, {}): {}\n", e.d, e.g, status_word(e.status)).unwrap();
            } else {
                writeln!(out, "(d, g) = ({}, {}): {}", e.d, e.g, status_word(e.status)).unwrap();
            }
            if !exp.is_empty() {
                writeln!(out, "expected dimension {exp}").unwrap();
            }
            if !e.notes.is_empty() {
                writeln!(out, "{}", e.notes).unwrap();
            }
            for c in &e.components {
                let head = format!(
                    "{}: dim {} ({}), gonality {}, maroni {}, linearly normal {}, ACM {}, profile {}",
                    c.id,
                    c.dimension,
                    relation_word(c.dimension_relation),
                    c.gonality.map_or("-".into(), |k| k.to_string()),
                    c.maroni.map_or("-".into(), |k| k.to_string()),
                    yes_no(c.linearly_normal),
                    yes_no(c.acm_general_member),
                    profile_word(&c.profile)
                );
                if md {
                    writeln!(out, "\n### {head}\n").unwrap();
                } else {
                    writeln!(out, "\n  {head}").unwrap();
                }
                if let Some(m) = &c.model {
                    writeln!(out, "{}model {m:?}", if md { "" } else { "  " }).unwrap();
                }
                if !c.notes.is_empty() {
                    writeln!(out, "{}{}", if md { "" } else { "  " }, c.notes).unwrap();
                }
                let p = cat.component_profile(e, c, DEFAULT_T_MAX)?;
                let table = render_profile(&p, if md { Format::Markdown } else { Format::Text })?;
                if md {
                    writeln!(out).unwrap();
                    out.push_str(&table);
                } else {
                    for line in table.lines() {
                        writeln!(out, "    {line}").unwrap();
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All entries of one degree, `g = 0..=pi(d, 5)`.
pub fn table_entries(cat: &Catalog, d: i64) -> Result<Vec<CatalogEntry>> {
    let pi = castelnuovo_pi(d, 5)?;
    (0..=pi).map(|g| cat.query(d, g)).collect()
}

pub fn render_table(cat: &Catalog, d: i64, format: Format) -> Result<String> {
    let entries = table_entries(cat, d)?;
    let mut out = String::new();
    let dims = |e: &CatalogEntry| {
        e.components.iter().map(|c| c.dimension.to_string()).collect::<Vec<_>>().join(";")
    };
    match format {
        Format::Json => {
            let v = json!({ "schema": super::SCHEMA_VERSION, "d": d, "entries": entries });
            out = serde_json::to_string(&v).map_err(|x| Error::Catalog(x.to_string()))?;
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("d,g,status,components,expected_dim,dimensions\n");
            for e in &entries {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    e.d,
                    e.g,
                    status_word(e.status),
                    e.components.len(),
                    expected_or_blank(e),
                    dims(e)
                )
                .unwrap();
            }
        }
        Format::Markdown => {
            out.push_str("| g | status | expected | dimensions | ACM |\n|---|---|---|---|---|\n");
            for e in &entries {
                let acm: Vec<&str> = e.components.iter().map(|c| yes_no(c.acm_general_member)).collect();
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    e.g,
                    status_word(e.status),
                    expected_or_blank(e),
                    dims(e),
                    acm.join(";")
                )
                .unwrap();
            }
        }
        Format::Text => {
            writeln!(out, "{:>3}  {:<16} {:>8}  dimensions", "g", "status", "expected").unwrap();
            for e in &entries {
                writeln!(
                    out,
                    "{:>3}  {:<16} {:>8}  {}",
                    e.g,
                    status_word(e.status),
                    expected_or_blank(e),
                    dims(e)
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}
