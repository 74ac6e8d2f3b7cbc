//! Classification catalog for smooth curves of degree `5 <= d <= 15` in
//! `P^5`, stored as JSON and recomputed by [`check::check_all`].

pub mod check;
pub mod render;

use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hilbert_profile::{
    extremal_profile, maximal_rank_profile, special_profile_in, HilbertProfile, SpecialProfileSpec,
};
use crate::invariants::{castelnuovo_pi, expected_dim_p5, FiberDescriptor, FiberFactor};
use crate::model_enumerator::SurfaceModel;

pub const SCHEMA_VERSION: u32 = 1;
pub const MIN_DEGREE: i64 = 5;
pub const MAX_DEGREE: i64 = 15;

const SHIPPED: &str = include_str!("../../data/catalog.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimensionRelation {
    EqualsExpected,
    Exceeds { by: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileRef {
    MaximalRank,
    /// Computed from the record's surface model.
    Extremal,
    Special { id: String },
}

/// Image of the component in the moduli space of curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuliImage {
    General,
    /// The `k`-gonal locus, of dimension `2g + 2k - 5`.
    GonalLocus { k: i64 },
    /// The image of the entry's Severi variety.
    Severi,
    Dim { n: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRecord {
    pub id: String,
    pub dimension: i64,
    pub dimension_relation: DimensionRelation,
    #[serde(default)]
    pub gonality: Option<i64>,
    #[serde(default)]
    pub maroni: Option<i64>,
    pub linearly_normal: bool,
    pub acm_general_member: bool,
    pub profile: ProfileRef,
    #[serde(default)]
    pub fiber: FiberDescriptor,
    #[serde(default)]
    pub model: Option<SurfaceModel>,
    /// The stored dimension must equal the model's family count.
    #[serde(default)]
    pub dimension_from_model: bool,
    #[serde(default)]
    pub moduli_image: Option<ModuliImage>,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Empty,
    Irreducible,
    Reducible { count: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeveriAmbient {
    Plane,
    Quadric,
}

/// Nodal curves of a fixed class on the plane or the quadric whose
/// normalizations fill a component's moduli image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeveriData {
    pub ambient: SeveriAmbient,
    /// `[n]` for a plane curve, `[a, b]` for a bidegree.
    pub class: Vec<i64>,
    pub delta: i64,
    pub component: String,
}

/// A family that sits inside some component without filling it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonFullFamily {
    /// `k`-gonal curves with the given fiber over their moduli point.
    Gonal { k: i64, fiber: FiberDescriptor },
    DelPezzo { class: crate::surface_cohomology::DelPezzoClass },
    Scroll { model: SurfaceModel },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub d: i64,
    pub g: i64,
    pub status: Status,
    #[serde(default)]
    pub components: Vec<ComponentRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub severi: Option<SeveriData>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub non_full: Vec<NonFullFamily>,
    #[serde(default)]
    pub notes: String,
}

/// Degrees whose rows `g <= g_max` follow the general-curve description.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniformRange {
    pub d: i64,
    pub g_max: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub schema: u32,
    pub uniform: Vec<UniformRange>,
    pub entries: Vec<CatalogEntry>,
    pub special_profiles: Vec<SpecialProfileSpec>,
}

impl Catalog {
    pub fn from_json_str(s: &str) -> Result<Catalog> {
        let cat: Catalog =
            serde_json::from_str(s).map_err(|e| Error::Catalog(format!("parse error: {e}")))?;
        if cat.schema != SCHEMA_VERSION {
            return Err(Error::Catalog(format!(
                "schema {} not supported (expected {SCHEMA_VERSION})",
                cat.schema
            )));
        }
        Ok(cat)
    }

    pub fn from_path(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
        Self::from_json_str(&text)
    }

    /// The catalog bundled with the crate, parsed once.
    pub fn shipped() -> &'static Catalog {
        static CELL: OnceLock<Catalog> = OnceLock::new();
        CELL.get_or_init(|| Catalog::from_json_str(SHIPPED).expect("bundled catalog parses"))
    }

    pub fn shipped_json() -> &'static str {
        SHIPPED
    }

    pub fn explicit(&self, d: i64, g: i64) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.d == d && e.g == g)
    }

    pub fn uniform_covers(&self, d: i64, g: i64) -> bool {
        self.uniform.iter().any(|u| u.d == d && (0..=u.g_max).contains(&g))
    }

    pub fn query(&self, d: i64, g: i64) -> Result<CatalogEntry> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&d) {
            return Err(invalid(format!("catalog covers {MIN_DEGREE} <= d <= {MAX_DEGREE}, got {d}")));
        }
        if g < 0 {
            return Err(invalid(format!("genus {g} is negative")));
        }
        if let Some(e) = self.explicit(d, g) {
            return Ok(e.clone());
        }
        let pi = castelnuovo_pi(d, 5)?;
        if g > pi {
            return Ok(CatalogEntry {
                d,
                g,
                status: Status::Empty,
                components: vec![],
                severi: None,
                non_full: vec![],
                notes: format!("g exceeds the Castelnuovo bound {pi}"),
            });
        }
        if self.uniform_covers(d, g) {
            return uniform_entry(d, g);
        }
        Err(Error::Catalog(format!("no entry for (d, g) = ({d}, {g})")))
    }

    /// Hilbert profile of one component, `t = 1..=t_max`.
    pub fn component_profile(
        &self,
        entry: &CatalogEntry,
        comp: &ComponentRecord,
        t_max: i64,
    ) -> Result<HilbertProfile> {
        match &comp.profile {
            ProfileRef::MaximalRank => maximal_rank_profile(entry.d, entry.g, t_max),
            ProfileRef::Extremal => {
                let model = comp
                    .model
                    .ok_or_else(|| Error::Catalog(format!("component {} has no model", comp.id)))?;
                extremal_profile(&model.to_curve_model()?, t_max)
            }
            ProfileRef::Special { id } => {
                special_profile_in(&self.special_profiles, entry.d, entry.g, id, t_max)
            }
        }
    }
}

/// Fiber of the moduli map for a general curve with general line bundle:
/// the line bundle, the linear series, then projective motions.
pub fn uniform_fiber(d: i64, g: i64) -> FiberDescriptor {
    // The complete series is a P^(d-g); choosing a P^5 inside it is trivial
    // when d - g = 5.
    let grass = (d - g > 5).then_some(FiberFactor::Grassmannian { s: 5, n: d - g });
    let f: Vec<FiberFactor> = match g {
        0 => [Some(FiberFactor::AutP5ModAutP1), grass].into_iter().flatten().collect(),
        1 => [Some(FiberFactor::AutP5Orbit), grass].into_iter().flatten().collect(),
        _ => [Some(FiberFactor::Jacobian), grass, Some(FiberFactor::AutP5Orbit)]
            .into_iter()
            .flatten()
            .collect(),
    };
    FiberDescriptor::new(f)
}

pub fn uniform_entry(d: i64, g: i64) -> Result<CatalogEntry> {
    let profile = maximal_rank_profile(d, g, crate::hilbert_profile::DEFAULT_T_MAX)?;
    let comp = ComponentRecord {
        id: "H".into(),
        dimension: expected_dim_p5(d, g)?,
        dimension_relation: DimensionRelation::EqualsExpected,
        gonality: None,
        maroni: None,
        linearly_normal: profile.flags.linearly_normal,
        acm_general_member: profile.flags.acm,
        profile: ProfileRef::MaximalRank,
        fiber: uniform_fiber(d, g),
        model: None,
        dimension_from_model: false,
        moduli_image: Some(ModuliImage::General),
        notes: "general curve with a general line bundle".into(),
    };
    Ok(CatalogEntry {
        d,
        g,
        status: Status::Irreducible,
        components: vec![comp],
        severi: None,
        non_full: vec![],
        notes: String::new(),
    })
}
