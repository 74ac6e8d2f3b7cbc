use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use p5curves::catalog::check::{check_all, failures};
use p5curves::catalog::render::{render_entry, render_profile, render_table, Format};
use p5curves::catalog::{Catalog, Status};
use p5curves::hilbert_profile::{maximal_rank_profile, DEFAULT_T_MAX};
use p5curves::invariants::{castelnuovo_pi, castelnuovo_pi1_p5, classical_invariants, DGR};
use p5curves::model_enumerator::{enumerate_models, family_dimension_count};
use p5curves::surface_cohomology::{cohomology_bidegree, cohomology_fe, BidegreeClass, FeClass};
use p5curves::Error;

#[derive(Parser)]
#[command(name = "p5curves", version, about = "Invariants and classification of curves in P^5")]
struct Cli {
    /// Catalog JSON to use instead of the bundled one.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Castelnuovo bounds for degree d in P^r.
    Bounds { d: i64, r: i64 },
    /// pi, pi1, rho, lambda and expected dimension.
    Invariants { d: i64, g: i64, r: i64 },
    /// Surface models carrying a curve of degree d and genus g in P^5.
    Enumerate { d: i64, g: i64 },
    /// Line-bundle cohomology on a surface.
    Cohomology {
        #[command(subcommand)]
        which: CohomologyCmd,
    },
    /// Hilbert function profile.
    Hilbert {
        d: i64,
        g: i64,
        #[arg(long)]
        component: Option<String>,
        #[arg(long, default_value_t = DEFAULT_T_MAX)]
        tmax: i64,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// One catalog entry, or all of degree d.
    Catalog {
        d: i64,
        g: Option<i64>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Summary table for degree d.
    Table {
        d: i64,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Recompute every catalog number.
    Check {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CohomologyCmd {
    /// O(x h + y f) on F_e.
    Fe {
        #[arg(long)]
        e: i64,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long, allow_hyphen_values = true)]
        y: i64,
    },
    /// O(a, b) on P^1 x P^1.
    Bidegree {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
}

enum Outcome {
    Ok(String),
    ChecksFailed(String),
}

fn load(path: &Option<PathBuf>) -> Result<Catalog, Error> {
    match path {
        Some(p) => Catalog::from_path(p),
        None => Ok(Catalog::shipped().clone()),
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let out = match cli.cmd {
        Cmd::Bounds { d, r } => {
            let pi = castelnuovo_pi(d, r)?;
            let mut s = format!("pi({d},{r}) = {pi}\n");
            if r == 5 && d >= 6 {
                s += &format!("pi1({d},5) = {}\n", castelnuovo_pi1_p5(d)?);
            }
            s
        }
        Cmd::Invariants { d, g, r } => json(&classical_invariants(DGR::new(d, g, r)?)?),
        Cmd::Enumerate { d, g } => {
            let mut rows = Vec::new();
            for m in enumerate_models(d, g)? {
                let fam = family_dimension_count(&m, true)?;
                rows.push(serde_json::json!({ "model": m, "family": fam }));
            }
            json(&rows)
        }
        Cmd::Cohomology { which } => {
            let c = match which {
                CohomologyCmd::Fe { e, x, y } => cohomology_fe(FeClass::new(e, x, y))?,
                CohomologyCmd::Bidegree { a, b } => cohomology_bidegree(BidegreeClass::new(a, b))?,
            };
            format!("h0 = {}\nh1 = {}\nh2 = {}\n", c.h0, c.h1, c.h2)
        }
        Cmd::Hilbert { d, g, component, tmax, format } => {
            let format: Format = format.parse()?;
            let cat = load(&cli.catalog)?;
            let profile = if (5..=15).contains(&d) {
                let entry = cat.query(d, g)?;
                let comp = match (&component, entry.components.as_slice()) {
                    (None, [only]) => only,
                    (None, []) => return Err(Error::InvalidInput(format!("no curves with (d, g) = ({d}, {g})"))),
                    (None, _) => {
                        let ids: Vec<&str> = entry.components.iter().map(|c| c.id.as_str()).collect();
                        return Err(Error::InvalidInput(format!("reducible; pass --component one of {ids:?}")));
                    }
                    (Some(id), comps) => comps
                        .iter()
                        .find(|c| &c.id == id)
                        .ok_or_else(|| Error::UnknownComponent { d, g, id: id.clone() })?,
                };
                cat.component_profile(&entry, comp, tmax)?
            } else {
                maximal_rank_profile(d, g, tmax)?
            };
            render_profile(&profile, format)?
        }
        Cmd::Catalog { d, g, format } => {
            let format: Format = format.parse()?;
            let cat = load(&cli.catalog)?;
            match g {
                Some(g) => render_entry(&cat, &cat.query(d, g)?, format)?,
                None => {
                    let pi = castelnuovo_pi(d, 5)?;
                    let mut s = String::new();
                    for g in 0..=pi {
                        let e = cat.query(d, g)?;
                        if e.status != Status::Empty || format != Format::Csv {
                            s += &render_entry(&cat, &e, format)?;
                        }
                    }
                    s
                }
            }
        }
        Cmd::Table { d, format } => {
            let cat = load(&cli.catalog)?;
            render_table(&cat, d, format.parse()?)?
        }
        Cmd::Check { json: as_json } => {
            let cat = load(&cli.catalog)?;
            let res = check_all(&cat);
            let bad = failures(&res);
            let text = if as_json {
                json(&res)
            } else {
                let mut s = String::new();
                for r in res.iter().filter(|r| !r.passed) {
                    s += &format!("FAIL ({}, {}) {}: {}\n", r.d, r.g, r.check, r.details);
                }
                s + &format!("{} checks, {bad} failed\n", res.len())
            };
            return Ok(if bad == 0 { Outcome::Ok(text) } else { Outcome::ChecksFailed(text) });
        }
    };
    Ok(Outcome::Ok(out))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::ChecksFailed(s)) => {
            print!("{s}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
