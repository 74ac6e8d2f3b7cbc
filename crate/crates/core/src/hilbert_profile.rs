//! Tables of `h0(I_X(t))`, `h1(I_X(t))` and `h1(O_X(t))` for curves in `P^5`.
//!
//! Every row must satisfy
//! `h0(I(t)) - h1(I(t)) = C(t+5,5) - (td + 1 - g) - h1(O_X(t))`,
//! which is what [`verify_profile`] enforces.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::invariants::{acm_vanishing_levels, castelnuovo_pi};
use crate::model_enumerator::CurveModel;
use crate::surface_cohomology::curve_twist_cohomology;

pub const DEFAULT_T_MAX: i64 = 8;

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `h0(O_P5(t))`.
pub fn forms(t: i64) -> i64 {
    binom(t + 5, 5)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub t: i64,
    pub h0_ideal: i64,
    pub h1_ideal: i64,
    pub h1_curve: i64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileFlags {
    pub acm: bool,
    pub linearly_normal: bool,
    pub maximal_rank: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertProfile {
    pub d: i64,
    pub g: i64,
    /// Rows for `t = 1, 2, ..` in order.
    pub entries: Vec<ProfileRow>,
    pub flags: ProfileFlags,
}

impl HilbertProfile {
    /// Builds a profile and derives its flags from the rows.
    pub fn new(d: i64, g: i64, entries: Vec<ProfileRow>) -> Self {
        let flags = derive_flags(d, &entries);
        HilbertProfile { d, g, entries, flags }
    }

    pub fn row(&self, t: i64) -> Option<&ProfileRow> {
        self.entries.iter().find(|r| r.t == t)
    }

    pub fn h0_column(&self) -> Vec<i64> {
        self.entries.iter().map(|r| r.h0_ideal).collect()
    }

    pub fn h1_column(&self) -> Vec<i64> {
        self.entries.iter().map(|r| r.h1_ideal).collect()
    }
}

fn derive_flags(d: i64, entries: &[ProfileRow]) -> ProfileFlags {
    let all_h1_zero = entries.iter().all(|r| r.h1_ideal == 0);
    let t_top = entries.iter().map(|r| r.t).max().unwrap_or(0);
    let covered = match acm_vanishing_levels(d) {
        Ok(levels) => levels.iter().all(|&t| t <= t_top),
        Err(_) => !entries.is_empty(),
    };
    ProfileFlags {
        acm: all_h1_zero && covered,
        linearly_normal: entries.iter().any(|r| r.t == 1 && r.h1_ideal == 0),
        maximal_rank: entries.iter().all(|r| r.h0_ideal == 0 || r.h1_ideal == 0),
    }
}

/// Right-hand side of the Euler identity.
pub fn euler_rhs(d: i64, g: i64, t: i64, h1_curve: i64) -> i64 {
    forms(t) - (t * d + 1 - g) - h1_curve
}

pub fn maximal_rank_profile(d: i64, g: i64, t_max: i64) -> Result<HilbertProfile> {
    if t_max < 2 {
        return Err(invalid(format!("t_max must be >= 2, got {t_max}")));
    }
    if d < 1 || g < 0 {
        return Err(invalid(format!("bad (d, g) = ({d}, {g})")));
    }
    let mut rows = vec![ProfileRow {
        t: 1,
        h0_ideal: 0,
        h1_ideal: (d - 5 - g).max(0),
        h1_curve: (g - d + 5).max(0),
    }];
    for t in 2..=t_max {
        let excess = forms(t) - 1 - t * d + g;
        rows.push(ProfileRow { t, h0_ideal: excess.max(0), h1_ideal: (-excess).max(0), h1_curve: 0 });
    }
    Ok(HilbertProfile::new(d, g, rows))
}

/// Profile of a Castelnuovo curve: `h1(I_X(t))` vanishes and `h1(O_X(t))`
/// comes from the surface the curve lies on.
pub fn extremal_profile(model: &CurveModel, t_max: i64) -> Result<HilbertProfile> {
    if t_max < 1 {
        return Err(invalid(format!("t_max must be >= 1, got {t_max}")));
    }
    let (d, g) = (model.degree, model.genus);
    let pi = castelnuovo_pi(d, 5)?;
    if g != pi {
        return Err(invalid(format!("genus {g} is not extremal for degree {d} (pi = {pi})")));
    }
    let (surface, class) = model
        .surface
        .embedding()
        .ok_or_else(|| invalid("model has no surface embedding for restriction"))?;
    let mut rows = Vec::new();
    for t in 1..=t_max {
        let h1_curve = curve_twist_cohomology(surface, class, t)?.h1;
        rows.push(ProfileRow { t, h0_ideal: euler_rhs(d, g, t, h1_curve), h1_ideal: 0, h1_curve });
    }
    Ok(HilbertProfile::new(d, g, rows))
}

/// Tail of a stored special profile: `h0(I(t)) = C(t+5,5) - d t + constant`
/// with both `h1` terms zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileTail {
    pub from: i64,
    pub constant: i64,
}

/// One registered special profile, shared by every listed component id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecialProfileSpec {
    pub d: i64,
    pub g: i64,
    pub ids: Vec<String>,
    pub rows: Vec<ProfileRow>,
    pub tail: ProfileTail,
}

impl SpecialProfileSpec {
    pub fn expand(&self, t_max: i64) -> Result<HilbertProfile> {
        let mut out = Vec::new();
        for t in 1..=t_max {
            if let Some(r) = self.rows.iter().find(|r| r.t == t) {
                out.push(*r);
            } else if t >= self.tail.from {
                out.push(ProfileRow {
                    t,
                    h0_ideal: forms(t) - self.d * t + self.tail.constant,
                    h1_ideal: 0,
                    h1_curve: 0,
                });
            } else {
                return Err(Error::Catalog(format!(
                    "special profile ({}, {}, {:?}) has no value at t={t}",
                    self.d, self.g, self.ids
                )));
            }
        }
        Ok(HilbertProfile::new(self.d, self.g, out))
    }
}

pub fn special_profile_in(
    registry: &[SpecialProfileSpec],
    d: i64,
    g: i64,
    component_id: &str,
    t_max: i64,
) -> Result<HilbertProfile> {
    if t_max < 1 {
        return Err(invalid(format!("t_max must be >= 1, got {t_max}")));
    }
    registry
        .iter()
        .find(|s| s.d == d && s.g == g && s.ids.iter().any(|i| i == component_id))
        .ok_or_else(|| Error::UnknownComponent { d, g, id: component_id.to_string() })?
        .expand(t_max)
}

/// Looks the profile up in the registry shipped with the catalog.
pub fn special_profile(d: i64, g: i64, component_id: &str, t_max: i64) -> Result<HilbertProfile> {
    special_profile_in(&crate::catalog::Catalog::shipped().special_profiles, d, g, component_id, t_max)
}

/// Twist past which `h1(I(t))` must vanish for ACM or maximal-rank curves.
/// `None` where the vanishing levels are not tabulated.
fn vanishing_threshold(d: i64) -> Option<i64> {
    acm_vanishing_levels(d).ok().and_then(|v| v.last().copied()).map(|t| t + 1)
}

pub fn verify_profile(p: &HilbertProfile) -> Vec<String> {
    let mut out = Vec::new();
    for (i, r) in p.entries.iter().enumerate() {
        if r.t != i as i64 + 1 {
            out.push(format!("row {i} has t={} (rows must run 1, 2, ..)", r.t));
        }
        if r.h0_ideal < 0 || r.h1_ideal < 0 || r.h1_curve < 0 {
            out.push(format!("negative value at t={}", r.t));
        }
        let lhs = r.h0_ideal - r.h1_ideal;
        let rhs = euler_rhs(p.d, p.g, r.t, r.h1_curve);
        if lhs != rhs {
            out.push(format!("Euler identity fails at t={}: {lhs} != {rhs}", r.t));
        }
    }
    if let (true, Some(th)) = (p.flags.acm || p.flags.maximal_rank, vanishing_threshold(p.d)) {
        for r in p.entries.iter().filter(|r| r.t >= th && r.h1_ideal != 0) {
            out.push(format!("h1(I({})) = {} past the vanishing threshold {th}", r.t, r.h1_ideal));
        }
    }
    let derived = derive_flags(p.d, &p.entries);
    if derived != p.flags {
        out.push(format!("flags {:?} do not match the rows, which give {derived:?}", p.flags));
    }
    out
}
