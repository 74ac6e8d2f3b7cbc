//! Diophantine search for curve classes of a given degree and genus on the
//! surfaces of small degree in `P^5`: the Veronese surface, quartic scrolls
//! (abstractly, on `F_0`, on `F_2`), the cone over the rational normal
//! quartic, and the quintic del Pezzo surface.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::invariants::{aut_pr_dim, castelnuovo_pi, for_each_sorted_quadruple};
use crate::surface_cohomology::{
    cohomology_bidegree, cohomology_fe, del_pezzo_cohomology, maroni_iterative, BidegreeClass,
    DelPezzoClass, DivisorClass, FeClass, SurfaceEmbedding,
};

pub const AUT_P2: i64 = 8;
pub const AUT_F0: i64 = 6;
pub const AUT_F2: i64 = 7;
pub const AUT_F4: i64 = 9;

/// The surface and curve class a model lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceModel {
    /// Image of a plane curve of degree `s`.
    Veronese { s: i64 },
    /// `|aH + bL|` on a quartic scroll, `L` the ruling line.
    ScrollAbstract { a: i64, b: i64 },
    F0(BidegreeClass),
    F2(FeClass),
    /// Strict transform `k h + d f` on `F_4`, meeting the vertex section `m` times.
    ConeF4 { k: i64, m: i64 },
    DelPezzo(DelPezzoClass),
}

impl SurfaceModel {
    fn kind_rank(&self) -> u8 {
        match self {
            SurfaceModel::Veronese { .. } => 0,
            SurfaceModel::ScrollAbstract { .. } => 1,
            SurfaceModel::F0(_) => 2,
            SurfaceModel::F2(_) => 3,
            SurfaceModel::ConeF4 { .. } => 4,
            SurfaceModel::DelPezzo(_) => 5,
        }
    }

    /// Degree and genus computed from the class alone.
    pub fn degree_genus(&self) -> Result<(i64, i64)> {
        Ok(match *self {
            SurfaceModel::Veronese { s } => (2 * s, (s - 1) * (s - 2) / 2),
            SurfaceModel::ScrollAbstract { a, b } => {
                (4 * a + b, 2 * (a - 1) * (a - 2) + (3 + b) * (a - 1))
            }
            SurfaceModel::F0(c) => (c.degree(), (c.a - 1) * (c.b - 1)),
            SurfaceModel::F2(c) => (c.x + c.y, (c.x - 1) * (c.y - c.x - 1)),
            SurfaceModel::ConeF4 { k, m } => {
                let d = m + 4 * k;
                (d, (k - 1) * (2 * d - 4 * k - 2) / 2)
            }
            SurfaceModel::DelPezzo(c) => (c.degree(), c.genus()?),
        })
    }

    /// Degrees of the pencils cut by the rulings or conic bundles.
    pub fn ruling_pencils(&self) -> Vec<i64> {
        match *self {
            SurfaceModel::Veronese { .. } => vec![],
            SurfaceModel::ScrollAbstract { a, .. } => vec![a],
            SurfaceModel::F0(c) => vec![c.a, c.b],
            SurfaceModel::F2(c) => vec![c.x],
            SurfaceModel::ConeF4 { k, .. } => vec![k],
            SurfaceModel::DelPezzo(c) => {
                let mut v: Vec<i64> = c.b.iter().map(|b| c.a - b).collect();
                v.push(2 * c.a - c.b.iter().sum::<i64>());
                v
            }
        }
    }

    /// Surface embedding and class used for restriction computations.
    /// Abstract scroll classes are read on `F_0`, where `H = (1,2)`, `L = (0,1)`.
    pub fn embedding(&self) -> Option<(SurfaceEmbedding, DivisorClass)> {
        match *self {
            SurfaceModel::Veronese { s } => Some((SurfaceEmbedding::Plane, DivisorClass::new(s, 0))),
            SurfaceModel::ScrollAbstract { a, b } => {
                Some((SurfaceEmbedding::Quadric, DivisorClass::new(a, 2 * a + b)))
            }
            SurfaceModel::F0(c) => Some((SurfaceEmbedding::Quadric, DivisorClass::new(c.a, c.b))),
            SurfaceModel::F2(c) => Some((SurfaceEmbedding::F2, DivisorClass::new(c.x, c.y))),
            SurfaceModel::ConeF4 { k, m } => {
                Some((SurfaceEmbedding::ConeF4, DivisorClass::new(k, m + 4 * k)))
            }
            SurfaceModel::DelPezzo(_) => None,
        }
    }

    pub fn to_curve_model(&self) -> Result<CurveModel> {
        let (degree, genus) = self.degree_genus()?;
        let maroni = match (self, self.embedding()) {
            (SurfaceModel::F0(_) | SurfaceModel::F2(_) | SurfaceModel::ConeF4 { .. }, Some((s, c)))
                if c.x >= 3 =>
            {
                Some(maroni_iterative(s, c)?)
            }
            _ => None,
        };
        let outside_standard_range = matches!(self, SurfaceModel::F2(c) if c.y < 2 * c.x);
        Ok(CurveModel {
            surface: *self,
            degree,
            genus,
            ruling_pencils: self.ruling_pencils(),
            maroni,
            outside_standard_range,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveModel {
    pub surface: SurfaceModel,
    pub degree: i64,
    pub genus: i64,
    pub ruling_pencils: Vec<i64>,
    pub maroni: Option<i64>,
    /// `F_2` classes with `a <= b < 2a`.
    pub outside_standard_range: bool,
}

impl CurveModel {
    pub fn round_trips(&self) -> bool {
        self.surface.degree_genus().ok() == Some((self.degree, self.genus))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDimension {
    pub linear_system_dim: i64,
    pub aut_dim: i64,
    pub family_dim: i64,
}

fn build(models: impl IntoIterator<Item = SurfaceModel>) -> Result<Vec<CurveModel>> {
    models.into_iter().map(|m| m.to_curve_model()).collect()
}

fn check_degree(d: i64, min: i64) -> Result<()> {
    if d < min || d > 100 {
        return Err(invalid(format!("degree {d} outside {min}..=100")));
    }
    Ok(())
}

pub fn veronese_models(d: i64, g: i64) -> Result<Vec<CurveModel>> {
    check_degree(d, 2)?;
    let s = d / 2;
    if d % 2 == 0 && (s - 1) * (s - 2) / 2 == g {
        build([SurfaceModel::Veronese { s }])
    } else {
        Ok(vec![])
    }
}

/// `k` is bounded by `d / 4` since `m = d - 4k >= 0`.
pub fn cone_models(d: i64, g: i64, smooth_only: bool) -> Result<Vec<CurveModel>> {
    check_degree(d, 5)?;
    let found = (1..=d / 4)
        .map(|k| SurfaceModel::ConeF4 { k, m: d - 4 * k })
        .filter(|m| matches!(m.degree_genus(), Ok((_, gg)) if gg == g))
        .filter(|m| !smooth_only || matches!(m, SurfaceModel::ConeF4 { m, .. } if *m <= 1));
    build(found)
}

/// `dim |aH + bL|` on a quartic scroll.
pub fn scroll_linear_system_dim(a: i64, b: i64) -> i64 {
    2 * a * (a + 1) + (a + 1) * (b + 1) - 1
}

/// Classes with negative `dim |aH + bL|` are dropped; since that dimension
/// is `(a + 1)(d - 2a + 1) - 1`, every survivor has `a <= (d + 1) / 2`.
pub fn scroll_models(d: i64, g: i64) -> Result<Vec<CurveModel>> {
    check_degree(d, 5)?;
    let found = (1..=d)
        .map(|a| SurfaceModel::ScrollAbstract { a, b: d - 4 * a })
        .filter(|m| matches!(*m, SurfaceModel::ScrollAbstract { a, b } if scroll_linear_system_dim(a, b) >= 0))
        .filter(|m| matches!(m.degree_genus(), Ok((_, gg)) if gg == g));
    build(found)
}

/// `F_0` classes `(a, b)` with `a, b >= 1`, then `F_2` classes `a h + b f`
/// with `b >= a >= 1`. Both degree equations bound `a` by `d / 2`.
pub fn f0_f2_models(d: i64, g: i64) -> Result<Vec<CurveModel>> {
    check_degree(d, 5)?;
    let mut found = Vec::new();
    for a in 1..=d / 2 {
        let m = SurfaceModel::F0(BidegreeClass::new(a, d - 2 * a));
        if d - 2 * a >= 1 && m.degree_genus()?.1 == g {
            found.push(m);
        }
    }
    for a in 1..=d / 2 {
        let m = SurfaceModel::F2(FeClass::new(2, a, d - a));
        if d - a >= a && m.degree_genus()?.1 == g {
            found.push(m);
        }
    }
    build(found)
}

/// Classes `(a; b1 >= .. >= b4 >= 0)`. The search stops at `a = d`: past it
/// `sum b > 2a`, so `sum b^2 > a^2` and the genus is negative.
pub fn del_pezzo_models(d: i64, g: i64) -> Result<Vec<CurveModel>> {
    check_degree(d, 3)?;
    let mut found = Vec::new();
    for a in 1..=d {
        let sum = 3 * a - d;
        for_each_sorted_quadruple(sum, sum, |b| {
            let c = DelPezzoClass::new(a, b);
            if c.genus().ok() == Some(g) {
                found.push(SurfaceModel::DelPezzo(c));
            }
        });
    }
    found.sort_by_key(|m| match m {
        SurfaceModel::DelPezzo(c) => (c.a, c.b),
        _ => unreachable!(),
    });
    build(found)
}

pub fn enumerate_models(d: i64, g: i64) -> Result<Vec<CurveModel>> {
    if !(5..=20).contains(&d) {
        return Err(invalid(format!("enumeration covers 5 <= d <= 20, got {d}")));
    }
    let pi = castelnuovo_pi(d, 5)?;
    if g < 0 || g > pi {
        return Err(invalid(format!("genus {g} outside 0..={pi} for degree {d}")));
    }
    let mut all = veronese_models(d, g)?;
    all.extend(scroll_models(d, g)?);
    all.extend(f0_f2_models(d, g)?);
    all.extend(cone_models(d, g, false)?);
    all.extend(del_pezzo_models(d, g)?);
    debug_assert!(all.iter().all(CurveModel::round_trips));
    debug_assert!(all.windows(2).all(|w| w[0].surface.kind_rank() <= w[1].surface.kind_rank()));
    Ok(all)
}

pub fn family_dimension_count(model: &CurveModel, include_ambient: bool) -> Result<FamilyDimension> {
    let (linear_system_dim, aut_dim) = match model.surface {
        SurfaceModel::Veronese { s } => ((s + 2) * (s + 1) / 2 - 1, AUT_P2),
        SurfaceModel::ScrollAbstract { a, b } => (scroll_linear_system_dim(a, b), AUT_F0),
        SurfaceModel::F0(c) => (cohomology_bidegree(c)?.h0 - 1, AUT_F0),
        SurfaceModel::F2(c) => (cohomology_fe(c)?.h0 - 1, AUT_F2),
        SurfaceModel::ConeF4 { k, m } => (cohomology_fe(FeClass::new(4, k, m + 4 * k))?.h0 - 1, AUT_F4),
        // The del Pezzo count already includes the surface's moduli in P^5.
        SurfaceModel::DelPezzo(c) => (del_pezzo_cohomology(c)?.h0 - 1, 0),
    };
    let ambient = if include_ambient { aut_pr_dim(5) } else { 0 };
    Ok(FamilyDimension {
        linear_system_dim,
        aut_dim,
        family_dim: linear_system_dim - aut_dim + ambient,
    })
}

/// Strict form of `5d > 3g + 32`: the del Pezzo family then falls short of
/// the expected dimension.
pub fn del_pezzo_nonfull(d: i64, g: i64) -> bool {
    5 * d > 3 * g + 32
}

pub fn veronese_normal_h1(d: i64, g: i64) -> Result<i64> {
    if d % 2 != 0 || d < 2 {
        return Err(invalid(format!("Veronese images have even degree, got {d}")));
    }
    Ok(3 * (g - d + 5) - 3 * (d / 2) + 9)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(v: Vec<CurveModel>) -> Vec<SurfaceModel> {
        v.into_iter().map(|m| m.surface).collect()
    }

    #[test]
    fn veronese() {
        assert_eq!(surfaces(veronese_models(14, 15).unwrap()), vec![SurfaceModel::Veronese { s: 7 }]);
        assert_eq!(surfaces(veronese_models(12, 10).unwrap()), vec![SurfaceModel::Veronese { s: 6 }]);
        assert!(veronese_models(13, 12).unwrap().is_empty());
    }

    #[test]
    fn cones() {
        let smooth: Vec<(i64, i64, i64, i64)> = (11..=15)
            .flat_map(|d| {
                (0..=castelnuovo_pi(d, 5).unwrap()).flat_map(move |g| {
                    cone_models(d, g, true).unwrap().into_iter().map(move |m| match m.surface {
                        SurfaceModel::ConeF4 { k, m } => (d, k, m, g),
                        _ => unreachable!(),
                    })
                })
            })
            .collect();
        assert_eq!(smooth, vec![(12, 3, 0, 10), (13, 3, 1, 12)]);
        assert!(cone_models(14, 14, true).unwrap().is_empty());
        let m = &cone_models(13, 12, true).unwrap()[0];
        assert_eq!(m.maroni, Some(3));
    }

    #[test]
    fn scrolls() {
        let s = |d, g| surfaces(scroll_models(d, g).unwrap());
        use SurfaceModel::ScrollAbstract as S;
        assert_eq!(s(14, 15), vec![S { a: 4, b: -2 }]);
        assert_eq!(s(13, 12), vec![S { a: 3, b: 1 }, S { a: 4, b: -3 }]);
        assert_eq!(s(12, 10), vec![S { a: 3, b: 0 }]);
        assert_eq!(s(14, 14), vec![S { a: 3, b: 2 }]);
        assert_eq!(scroll_linear_system_dim(4, -2), 34);
        assert_eq!(scroll_linear_system_dim(3, 1), 31);
        assert_eq!(scroll_linear_system_dim(4, -3), 29);
        assert_eq!(scroll_linear_system_dim(3, 0), 27);
    }

    #[test]
    fn f0_f2() {
        for (d, g) in [(15, 15), (15, 14), (13, 11), (13, 10)] {
            assert!(f0_f2_models(d, g).unwrap().is_empty(), "({d},{g})");
        }
        let v = f0_f2_models(14, 15).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].surface, SurfaceModel::F0(BidegreeClass::new(4, 6)));
        assert_eq!(v[0].maroni, Some(4));
        assert_eq!(v[1].surface, SurfaceModel::F2(FeClass::new(2, 4, 10)));
        assert_eq!(v[1].maroni, Some(2));
        assert!(surfaces(f0_f2_models(12, 9).unwrap()).contains(&SurfaceModel::F2(FeClass::new(2, 4, 8))));
        assert!(f0_f2_models(12, 12).unwrap().is_empty());
    }

    #[test]
    fn del_pezzo() {
        let has = |d, g, a, b| {
            surfaces(del_pezzo_models(d, g).unwrap())
                .contains(&SurfaceModel::DelPezzo(DelPezzoClass::new(a, b)))
        };
        assert!(has(15, 15, 8, [3, 2, 2, 2]));
        assert!(has(14, 13, 8, [3, 3, 2, 2]));
        assert!(has(15, 14, 8, [3, 3, 2, 1]));
        assert!(has(14, 12, 10, [4, 4, 4, 4]));
        assert!(has(13, 10, 7, [3, 2, 2, 1]));
    }

    #[test]
    fn enumeration_order_and_contents() {
        let v = surfaces(enumerate_models(12, 10).unwrap());
        assert_eq!(v[0], SurfaceModel::Veronese { s: 6 });
        assert_eq!(v[1], SurfaceModel::ScrollAbstract { a: 3, b: 0 });
        assert!(v.contains(&SurfaceModel::F0(BidegreeClass::new(3, 6))));
        assert!(v.contains(&SurfaceModel::F2(FeClass::new(2, 3, 9))));
        assert!(v.contains(&SurfaceModel::ConeF4 { k: 3, m: 0 }));
        assert!(enumerate_models(4, 0).is_err());
        assert!(enumerate_models(15, 19).is_err());
    }

    #[test]
    fn family_dims() {
        let ver = SurfaceModel::Veronese { s: 7 }.to_curve_model().unwrap();
        assert_eq!(family_dimension_count(&ver, true).unwrap().family_dim, 62);
        let f0 = SurfaceModel::F0(BidegreeClass::new(4, 6)).to_curve_model().unwrap();
        let fd = family_dimension_count(&f0, false).unwrap();
        assert_eq!((fd.linear_system_dim, fd.family_dim), (34, 28));
        let dp = SurfaceModel::DelPezzo(DelPezzoClass::new(8, [3, 2, 2, 2])).to_curve_model().unwrap();
        assert_eq!(family_dimension_count(&dp, true).unwrap().family_dim, 35 + 15 - 1 + 15);
        let sc = SurfaceModel::ScrollAbstract { a: 3, b: 1 }.to_curve_model().unwrap();
        assert_eq!(family_dimension_count(&sc, true).unwrap().family_dim, 60);
    }

    #[test]
    fn small_predicates() {
        assert!(del_pezzo_nonfull(15, 14));
        assert!(del_pezzo_nonfull(14, 12));
        assert!(!del_pezzo_nonfull(16, 16));
        assert_eq!(veronese_normal_h1(14, 15).unwrap(), 6);
        assert_eq!(veronese_normal_h1(12, 10).unwrap(), 0);
        assert!(veronese_normal_h1(13, 12).is_err());
    }
}
