//! Recomputes every number in a catalog from the formula modules.

use serde::Serialize;

use super::{Catalog, CatalogEntry, ComponentRecord, DimensionRelation, ModuliImage, NonFullFamily};
use super::{ProfileRef, SeveriAmbient, Status, MAX_DEGREE, MIN_DEGREE};
use crate::hilbert_profile::{verify_profile, DEFAULT_T_MAX};
use crate::invariants::{castelnuovo_pi, classical_invariants, fiber_dimension, maroni_range, DGR};
use crate::model_enumerator::{
    del_pezzo_models, del_pezzo_nonfull, enumerate_models, family_dimension_count, SurfaceModel,
    AUT_F0, AUT_P2,
};
use crate::surface_cohomology::{maroni_closed_form, SurfaceKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub d: i64,
    pub g: i64,
    pub check: String,
    pub passed: bool,
    pub details: String,
}

struct Report(Vec<CheckResult>);

impl Report {
    fn push(&mut self, d: i64, g: i64, check: &str, failures: Vec<String>, ok: &str) {
        let passed = failures.is_empty();
        let details = if passed { ok.to_string() } else { failures.join("; ") };
        self.0.push(CheckResult { d, g, check: check.into(), passed, details });
    }
}

pub fn failures(results: &[CheckResult]) -> usize {
    results.iter().filter(|r| !r.passed).count()
}

/// Runs every check. Failures are reported, never raised.
pub fn check_all(cat: &Catalog) -> Vec<CheckResult> {
    let mut rep = Report(Vec::new());
    coverage(cat, &mut rep);
    for d in MIN_DEGREE..=MAX_DEGREE {
        let pi = castelnuovo_pi(d, 5).expect("d >= 5");
        for g in 0..=pi + 1 {
            match cat.query(d, g) {
                Ok(entry) => check_entry(cat, &entry, &mut rep),
                Err(e) => rep.push(d, g, "query", vec![e.to_string()], ""),
            }
        }
    }
    registry(cat, &mut rep);
    rep.0.sort_by(|a, b| (a.d, a.g, &a.check).cmp(&(b.d, b.g, &b.check)));
    rep.0
}

fn coverage(cat: &Catalog, rep: &mut Report) {
    let mut errs = Vec::new();
    for (i, e) in cat.entries.iter().enumerate() {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&e.d) || e.g < 0 {
            errs.push(format!("entry ({}, {}) outside the catalog range", e.d, e.g));
        }
        if cat.entries[..i].iter().any(|o| o.d == e.d && o.g == e.g) {
            errs.push(format!("duplicate entry ({}, {})", e.d, e.g));
        }
        if cat.uniform_covers(e.d, e.g) {
            errs.push(format!("({}, {}) is both explicit and uniform", e.d, e.g));
        }
    }
    for (i, u) in cat.uniform.iter().enumerate() {
        if cat.uniform[..i].iter().any(|o| o.d == u.d) {
            errs.push(format!("duplicate uniform range for d={}", u.d));
        }
    }
    for d in MIN_DEGREE..=MAX_DEGREE {
        let pi = castelnuovo_pi(d, 5).expect("d >= 5");
        for g in 0..=pi {
            if cat.explicit(d, g).is_none() && !cat.uniform_covers(d, g) {
                errs.push(format!("({d}, {g}) not covered"));
            }
        }
    }
    rep.push(0, 0, "coverage", errs, "every (d, g) with g <= pi has exactly one source");
}

fn registry(cat: &Catalog, rep: &mut Report) {
    for spec in &cat.special_profiles {
        let mut errs = Vec::new();
        match spec.expand(DEFAULT_T_MAX) {
            Ok(p) => errs.extend(verify_profile(&p)),
            Err(e) => errs.push(e.to_string()),
        }
        let referenced = cat.explicit(spec.d, spec.g).is_some_and(|e| {
            e.components.iter().any(|c| matches!(&c.profile, ProfileRef::Special { id } if spec.ids.contains(id)))
        });
        if !referenced {
            errs.push(format!("profile {:?} is not referenced by any component", spec.ids));
        }
        rep.push(spec.d, spec.g, "special_registry", errs, "registered profile verifies");
    }
}

fn image_dim(entry: &CatalogEntry, img: ModuliImage) -> Option<i64> {
    let g = entry.g;
    match img {
        ModuliImage::General => Some(match g {
            0 => 0,
            1 => 1,
            _ => 3 * g - 3,
        }),
        ModuliImage::GonalLocus { k } => Some(2 * g + 2 * k - 5),
        ModuliImage::Severi => entry.severi.as_ref().and_then(severi_dim),
        ModuliImage::Dim { n } => Some(n),
    }
}

/// `(dimension of the nodal family modulo automorphisms, arithmetic genus)`.
fn severi_numbers(s: &super::SeveriData) -> Option<(i64, i64)> {
    match (s.ambient, s.class.as_slice()) {
        (SeveriAmbient::Plane, &[n]) => {
            Some(((n + 2) * (n + 1) / 2 - 1 - s.delta - AUT_P2, (n - 1) * (n - 2) / 2))
        }
        (SeveriAmbient::Quadric, &[a, b]) => {
            Some(((a + 1) * (b + 1) - 1 - s.delta - AUT_F0, (a - 1) * (b - 1)))
        }
        _ => None,
    }
}

fn severi_dim(s: &super::SeveriData) -> Option<i64> {
    severi_numbers(s).map(|x| x.0)
}

fn check_entry(cat: &Catalog, entry: &CatalogEntry, rep: &mut Report) {
    let (d, g) = (entry.d, entry.g);
    let pi = castelnuovo_pi(d, 5).expect("d >= 5");

    let n = entry.components.len() as i64;
    let status_ok = match entry.status {
        Status::Empty => n == 0,
        Status::Irreducible => n == 1,
        Status::Reducible { count } => count == n && count >= 2,
    };
    let mut errs = Vec::new();
    if !status_ok {
        errs.push(format!("status {:?} with {n} components", entry.status));
    }
    for (i, c) in entry.components.iter().enumerate() {
        if entry.components[..i].iter().any(|o| o.id == c.id) {
            errs.push(format!("duplicate component id {}", c.id));
        }
    }
    rep.push(d, g, "status", errs, "status matches components");

    if g > pi {
        let errs = if entry.status == Status::Empty {
            vec![]
        } else {
            vec![format!("g = {g} > pi = {pi} but entry is not empty")]
        };
        rep.push(d, g, "emptiness", errs, "empty above the Castelnuovo bound");
        return;
    }
    if entry.status == Status::Empty {
        return;
    }

    let inv = classical_invariants(DGR::new(d, g, 5).expect("valid triple")).expect("d >= 5");
    for c in &entry.components {
        check_component(cat, entry, c, inv.expected_dim, pi, rep);
    }
    if let Some(s) = &entry.severi {
        check_severi(entry, s, inv.lambda, rep);
    }
    if !entry.non_full.is_empty() {
        let errs = entry
            .non_full
            .iter()
            .filter_map(|f| non_full_failure(entry, f, inv.expected_dim).err())
            .collect();
        rep.push(d, g, "non_full", errs, "listed families fall short of the expected dimension");
    }
}

fn check_component(
    cat: &Catalog,
    entry: &CatalogEntry,
    c: &ComponentRecord,
    expected: i64,
    pi: i64,
    rep: &mut Report,
) {
    let (d, g) = (entry.d, entry.g);
    let tag = |name: &str| format!("{name}:{}", c.id);

    let mut errs = Vec::new();
    if c.dimension < expected {
        errs.push(format!("dimension {} below expected {expected}", c.dimension));
    }
    match c.dimension_relation {
        DimensionRelation::EqualsExpected if c.dimension != expected => {
            errs.push(format!("claims expected dimension {expected} but stores {}", c.dimension))
        }
        DimensionRelation::Exceeds { by } if by <= 0 || c.dimension - expected != by => errs.push(
            format!("claims excess {by} but {} - {expected} = {}", c.dimension, c.dimension - expected),
        ),
        _ => {}
    }
    rep.push(d, g, &tag("expected_dim"), errs, "dimension relation holds");

    let mut errs = Vec::new();
    if c.acm_general_member && !c.linearly_normal {
        errs.push("ACM but not linearly normal".into());
    }
    if d <= 9 && c.linearly_normal && !c.acm_general_member {
        errs.push("linearly normal of degree <= 9 must be ACM".into());
    }
    match cat.component_profile(entry, c, DEFAULT_T_MAX) {
        Ok(p) => {
            errs.extend(verify_profile(&p));
            if p.flags.linearly_normal != c.linearly_normal {
                errs.push(format!("profile gives linearly_normal = {}", p.flags.linearly_normal));
            }
            if p.flags.acm != c.acm_general_member {
                errs.push(format!("profile gives acm = {}", p.flags.acm));
            }
        }
        Err(e) => errs.push(e.to_string()),
    }
    if c.profile == ProfileRef::Extremal && g != pi {
        errs.push(format!("extremal profile needs g = pi = {pi}"));
    }
    rep.push(d, g, &tag("profile"), errs, "profile verifies and matches flags");

    let model = c.model.map(|m| m.to_curve_model());
    if let Some(m) = &model {
        let mut errs = Vec::new();
        match m {
            Ok(m) => {
                match enumerate_models(d, g) {
                    Ok(all) if all.iter().any(|x| x.surface == m.surface) => {}
                    Ok(_) => errs.push(format!("{:?} not produced by the enumerator", m.surface)),
                    Err(e) => errs.push(e.to_string()),
                }
                if c.dimension_from_model {
                    match family_dimension_count(m, true) {
                        Ok(f) if f.family_dim == c.dimension => {}
                        Ok(f) => errs.push(format!("model family has dimension {}", f.family_dim)),
                        Err(e) => errs.push(e.to_string()),
                    }
                }
            }
            Err(e) => errs.push(e.to_string()),
        }
        rep.push(d, g, &tag("model"), errs, "model enumerated and counted");
    } else if c.dimension_from_model {
        rep.push(d, g, &tag("model"), vec!["dimension_from_model without a model".into()], "");
    }

    let model = model.and_then(|m| m.ok());
    let mut errs = Vec::new();
    if let Some(m) = &model {
        let closed = match m.surface {
            SurfaceModel::F0(b) if 3 <= b.a && b.a <= b.b => maroni_closed_form(SurfaceKind::Quadric, b.a, b.b).ok(),
            SurfaceModel::F2(f) if 6 <= 2 * f.x && 2 * f.x <= f.y => maroni_closed_form(SurfaceKind::F2, f.x, f.y).ok(),
            _ => None,
        };
        if let (Some(cf), Some(it)) = (closed, m.maroni) {
            if cf != it {
                errs.push(format!("iterative Maroni {it} vs closed form {cf}"));
            }
        }
    }
    if let Some(stored) = c.maroni {
        match model.as_ref().and_then(|m| m.maroni) {
            Some(it) if it != stored => errs.push(format!("stored Maroni {stored} vs computed {it}")),
            Some(_) => {}
            None => errs.push("stored Maroni without a ruled model".into()),
        }
        if c.gonality == Some(3) {
            match maroni_range(g) {
                Ok((lo, hi)) if !(lo..=hi).contains(&stored) => {
                    errs.push(format!("Maroni {stored} outside [{lo}, {hi}]"))
                }
                Err(e) => errs.push(e.to_string()),
                _ => {}
            }
        }
    }
    if c.maroni.is_some() || model.as_ref().is_some_and(|m| m.maroni.is_some()) {
        rep.push(d, g, &tag("maroni"), errs, "Maroni invariants agree");
    }

    if let Some(k) = c.gonality {
        let mut errs = Vec::new();
        // Brill–Noether bound on gonality.
        if k < 2 || k > (g + 3) / 2 {
            errs.push(format!("gonality {k} outside [2, {}]", (g + 3) / 2));
        }
        if let Some(ModuliImage::GonalLocus { k: kk }) = c.moduli_image {
            if kk != k {
                errs.push(format!("image is the {kk}-gonal locus but gonality is {k}"));
            }
        }
        if let Some(e) = hyperelliptic_failure(d, g, k) {
            errs.push(e);
        }
        if let Some(m) = &model {
            if let Some(min) = m.ruling_pencils.iter().copied().filter(|&p| p >= 2).min() {
                // On F_0, F_2 and the cone the smaller ruling computes the gonality.
                let exact = matches!(m.surface, SurfaceModel::F0(_) | SurfaceModel::F2(_) | SurfaceModel::ConeF4 { .. });
                if k > min || (exact && k != min) {
                    errs.push(format!("gonality {k} vs ruling pencil of degree {min}"));
                }
            }
        }
        rep.push(d, g, &tag("gonality"), errs, "gonality consistent");
    }

    if !c.fiber.factors.is_empty() {
        let mut errs = Vec::new();
        match (fiber_dimension(&c.fiber, g, 5), c.moduli_image.and_then(|i| image_dim(entry, i))) {
            (Ok(f), Some(i)) if f + i == c.dimension => {}
            (Ok(f), Some(i)) => errs.push(format!("fiber {f} + image {i} != dimension {}", c.dimension)),
            (Err(e), _) => errs.push(e.to_string()),
            (_, None) => errs.push("fiber given without a moduli image".into()),
        }
        rep.push(d, g, &tag("fiber"), errs, "fiber plus image equals dimension");
    }
}

fn check_severi(entry: &CatalogEntry, s: &super::SeveriData, lambda: i64, rep: &mut Report) {
    let mut errs = Vec::new();
    match severi_numbers(s) {
        None => errs.push(format!("malformed class {:?}", s.class)),
        Some((dim, pa)) => {
            if pa - s.delta != entry.g {
                errs.push(format!("arithmetic genus {pa} minus {} nodes is not {}", s.delta, entry.g));
            }
            if dim < lambda {
                errs.push(format!("Severi dimension {dim} below lambda {lambda}"));
            }
            match entry.components.iter().find(|c| c.id == s.component) {
                None => errs.push(format!("no component {}", s.component)),
                Some(c) => {
                    let img = fiber_dimension(&c.fiber, entry.g, 5).map(|f| c.dimension - f);
                    if img.as_ref().ok() != Some(&dim) {
                        errs.push(format!("component image {img:?} vs Severi dimension {dim}"));
                    }
                }
            }
        }
    }
    rep.push(entry.d, entry.g, "severi", errs, "Severi count matches");
}

/// A hyperelliptic curve in P^5 is embedded by a nonspecial series, so
/// `d >= g + 5`.
fn hyperelliptic_failure(d: i64, g: i64, k: i64) -> Option<String> {
    (k == 2 && g >= 2 && d < g + 5).then(|| format!("hyperelliptic curves of genus {g} need degree >= {}", g + 5))
}

fn non_full_failure(entry: &CatalogEntry, f: &NonFullFamily, expected: i64) -> Result<(), String> {
    let (d, g) = (entry.d, entry.g);
    let dim = match f {
        NonFullFamily::Gonal { k, fiber } => {
            if let Some(e) = hyperelliptic_failure(d, g, *k) {
                return Err(e);
            }
            2 * g + 2 * k - 5 + fiber_dimension(fiber, g, 5).map_err(|e| e.to_string())?
        }
        NonFullFamily::DelPezzo { class } => {
            let found = del_pezzo_models(d, g)
                .map_err(|e| e.to_string())?
                .into_iter()
                .find(|m| m.surface == SurfaceModel::DelPezzo(*class))
                .ok_or(format!("{class:?} is not a del Pezzo class of ({d}, {g})"))?;
            if !del_pezzo_nonfull(d, g) {
                return Err(format!("5d > 3g + 32 fails at ({d}, {g})"));
            }
            family_dimension_count(&found, true).map_err(|e| e.to_string())?.family_dim
        }
        NonFullFamily::Scroll { model } => {
            let found = enumerate_models(d, g)
                .map_err(|e| e.to_string())?
                .into_iter()
                .find(|m| m.surface == *model)
                .ok_or(format!("{model:?} not enumerated for ({d}, {g})"))?;
            family_dimension_count(&found, true).map_err(|e| e.to_string())?.family_dim
        }
    };
    if dim < expected {
        Ok(())
    } else {
        Err(format!("{f:?} has dimension {dim} >= {expected}"))
    }
}
