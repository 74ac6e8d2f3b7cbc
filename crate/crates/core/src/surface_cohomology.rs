//! Line-bundle cohomology on `P^1`, Hirzebruch surfaces, `P^1 x P^1`, the
//! plane and the quintic del Pezzo surface, together with restriction to
//! curves and Maroni invariants.
//!
//! Coordinates on `F_e` are `x h + y f` with `h^2 = -e`, `h.f = 1`, `f^2 = 0`.
//! On `F_0 = P^1 x P^1` the class `x h + y f` is the bidegree `(x, y)`; the
//! embedding into `P^5` uses `(1, 2)`, so a curve of bidegree `(a, b)` has
//! degree `2a + b` and `f` cuts the pencil of degree `a`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Coefficient guard for every surface computation.
pub const COEFF_LIMIT: i64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FeClass {
    pub e: i64,
    pub x: i64,
    pub y: i64,
}

impl FeClass {
    pub fn new(e: i64, x: i64, y: i64) -> Self {
        FeClass { e, x, y }
    }

    pub fn canonical(e: i64) -> Self {
        FeClass { e, x: -2, y: -e - 2 }
    }

    pub fn dot(&self, other: &FeClass) -> i64 {
        debug_assert_eq!(self.e, other.e);
        -self.e * self.x * other.x + self.x * other.y + other.x * self.y
    }

    /// Euler characteristic by Riemann–Roch, `1 + (D^2 - D.K) / 2`.
    pub fn chi(&self) -> i64 {
        let Self { e, x, y } = *self;
        1 + (-e * x * x + 2 * x * y - e * x + 2 * x + 2 * y) / 2
    }

    pub fn serre_dual(&self) -> FeClass {
        FeClass { e: self.e, x: -2 - self.x, y: -self.e - 2 - self.y }
    }

    pub fn sub(&self, other: &FeClass) -> FeClass {
        FeClass { e: self.e, x: self.x - other.x, y: self.y - other.y }
    }

    pub fn scale(&self, t: i64) -> FeClass {
        FeClass { e: self.e, x: t * self.x, y: t * self.y }
    }

    /// Arithmetic genus of a curve in this class, by adjunction.
    pub fn genus(&self) -> i64 {
        let k = FeClass::canonical(self.e);
        (self.dot(self) + self.dot(&k)) / 2 + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BidegreeClass {
    pub a: i64,
    pub b: i64,
}

impl BidegreeClass {
    pub fn new(a: i64, b: i64) -> Self {
        BidegreeClass { a, b }
    }

    pub fn degree(&self) -> i64 {
        2 * self.a + self.b
    }

    pub fn as_fe(&self) -> FeClass {
        FeClass::new(0, self.a, self.b)
    }
}

/// A class `a l - sum b_i e_i` on the plane blown up at four points, kept
/// with `b` sorted in descending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DelPezzoClass {
    pub a: i64,
    pub b: [i64; 4],
}

impl DelPezzoClass {
    pub fn new(a: i64, mut b: [i64; 4]) -> Self {
        b.sort_unstable_by(|p, q| q.cmp(p));
        DelPezzoClass { a, b }
    }

    pub fn degree(&self) -> i64 {
        3 * self.a - self.b.iter().sum::<i64>()
    }

    pub fn self_intersection(&self) -> i64 {
        self.a * self.a - self.b.iter().map(|x| x * x).sum::<i64>()
    }

    /// Genus from `X^2 = 2g - 2 + deg X`.
    pub fn genus(&self) -> Result<i64> {
        let num = self.self_intersection() - self.degree() + 2;
        if num % 2 != 0 {
            return Err(Error::ParityViolation { a: self.a, b: self.b });
        }
        Ok(num / 2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyTriple {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl CohomologyTriple {
    pub fn euler(&self) -> i64 {
        self.h0 - self.h1 + self.h2
    }
}

pub fn cohomology_p1(n: i64) -> (i64, i64) {
    ((n + 1).max(0), (-n - 1).max(0))
}

fn guard(vals: &[i64]) -> Result<()> {
    if vals.iter().any(|v| v.abs() > COEFF_LIMIT) {
        return Err(invalid(format!("coefficients {vals:?} exceed the guard {COEFF_LIMIT}")));
    }
    Ok(())
}

/// Sections of `x h + y f` via the pushforward `Sym^x(O + O(-e))(y)`.
fn fe_h0(e: i64, x: i64, y: i64) -> i64 {
    if x < 0 {
        return 0;
    }
    (0..=x).map(|j| (y - j * e + 1).max(0)).sum()
}

pub fn cohomology_fe(c: FeClass) -> Result<CohomologyTriple> {
    if c.e < 0 {
        return Err(invalid(format!("Hirzebruch parameter must be >= 0, got {}", c.e)));
    }
    guard(&[c.e, c.x, c.y])?;
    let h0 = fe_h0(c.e, c.x, c.y);
    let dual = c.serre_dual();
    let h2 = fe_h0(c.e, dual.x, dual.y);
    let h1 = h0 + h2 - c.chi();
    debug_assert!(h1 >= 0);
    Ok(CohomologyTriple { h0, h1, h2 })
}

/// Künneth on `P^1 x P^1`.
pub fn cohomology_bidegree(c: BidegreeClass) -> Result<CohomologyTriple> {
    guard(&[c.a, c.b])?;
    let (a0, a1) = cohomology_p1(c.a);
    let (b0, b1) = cohomology_p1(c.b);
    Ok(CohomologyTriple { h0: a0 * b0, h1: a0 * b1 + a1 * b0, h2: a1 * b1 })
}

pub fn cohomology_plane(n: i64) -> Result<CohomologyTriple> {
    guard(&[n])?;
    let h0 = if n >= 0 { (n + 2) * (n + 1) / 2 } else { 0 };
    let h2 = if n <= -3 { (-n - 1) * (-n - 2) / 2 } else { 0 };
    Ok(CohomologyTriple { h0, h1: 0, h2 })
}

/// A rational surface in `P^5` together with the class pulling back the
/// hyperplane. The cone over the rational normal quartic is handled on its
/// resolution `F_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceEmbedding {
    /// Veronese surface: the plane with `O(2)`. Classes use `x` as degree.
    Plane,
    /// `P^1 x P^1` with `O(1, 2)`.
    Quadric,
    /// `F_2` with `h + 3f`.
    F2,
    /// `F_4` with `h + 4f`, contracting `h` to the cone vertex.
    ConeF4,
}

/// Integer divisor class in the surface's own coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub x: i64,
    pub y: i64,
}

impl DivisorClass {
    pub fn new(x: i64, y: i64) -> Self {
        DivisorClass { x, y }
    }
}

impl SurfaceEmbedding {
    pub fn e(&self) -> Option<i64> {
        match self {
            SurfaceEmbedding::Plane => None,
            SurfaceEmbedding::Quadric => Some(0),
            SurfaceEmbedding::F2 => Some(2),
            SurfaceEmbedding::ConeF4 => Some(4),
        }
    }

    pub fn hyperplane(&self) -> DivisorClass {
        match self {
            SurfaceEmbedding::Plane => DivisorClass::new(2, 0),
            SurfaceEmbedding::Quadric => DivisorClass::new(1, 2),
            SurfaceEmbedding::F2 => DivisorClass::new(1, 3),
            SurfaceEmbedding::ConeF4 => DivisorClass::new(1, 4),
        }
    }

    pub fn cohomology(&self, c: DivisorClass) -> Result<CohomologyTriple> {
        match self.e() {
            None => cohomology_plane(c.x),
            Some(0) => cohomology_bidegree(BidegreeClass::new(c.x, c.y)),
            Some(e) => cohomology_fe(FeClass::new(e, c.x, c.y)),
        }
    }

    pub fn degree(&self, c: DivisorClass) -> i64 {
        match self.e() {
            None => 2 * c.x,
            Some(e) => {
                let h = self.hyperplane();
                FeClass::new(e, c.x, c.y).dot(&FeClass::new(e, h.x, h.y))
            }
        }
    }

    pub fn genus(&self, c: DivisorClass) -> i64 {
        match self.e() {
            None => (c.x - 1) * (c.x - 2) / 2,
            Some(e) => FeClass::new(e, c.x, c.y).genus(),
        }
    }
}

/// `(h0, h1)` of `O_X(t)` for a curve `X` in class `curve`, read off the
/// sequence `0 -> O_S(tH - X) -> O_S(tH) -> O_X(t) -> 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistCohomology {
    pub h0: i64,
    pub h1: i64,
    /// Cohomology of `tH - X` on the surface.
    pub kernel: CohomologyTriple,
}

pub fn curve_twist_cohomology(
    surface: SurfaceEmbedding,
    curve: DivisorClass,
    t: i64,
) -> Result<TwistCohomology> {
    let h = surface.hyperplane();
    let th = DivisorClass::new(t * h.x, t * h.y);
    let ambient = surface.cohomology(th)?;
    if ambient.h1 != 0 || ambient.h2 != 0 {
        return Err(Error::SequenceAssumptionViolated { t, h1: ambient.h1, h2: ambient.h2 });
    }
    let kernel = surface.cohomology(DivisorClass::new(th.x - curve.x, th.y - curve.y))?;
    Ok(TwistCohomology {
        h0: ambient.h0 - kernel.h0 + kernel.h1,
        h1: kernel.h2,
        kernel,
    })
}

fn ruled_e(surface: SurfaceEmbedding) -> Result<i64> {
    surface
        .e()
        .ok_or_else(|| invalid("the plane carries no ruling, so no Maroni invariant"))
}

/// `dim |k g|` for the pencil cut on `curve` by the ruling `f`.
pub fn pencil_multiple_dim(surface: SurfaceEmbedding, curve: DivisorClass, k: i64) -> Result<i64> {
    let e = ruled_e(surface)?;
    let kf = FeClass::new(e, 0, k);
    let c = FeClass::new(e, curve.x, curve.y);
    let amb = cohomology_fe(kf)?;
    let ker = cohomology_fe(kf.sub(&c))?;
    Ok(amb.h0 - ker.h0 + ker.h1 - 1)
}

/// Maroni invariant of the ruling pencil on a curve `a h + b f`: walks
/// `t = 0, 1, ..` until `h1(-a h + (t - b) f)` stops vanishing.
pub fn maroni_iterative(surface: SurfaceEmbedding, curve: DivisorClass) -> Result<i64> {
    let e = ruled_e(surface)?;
    if curve.x < 3 {
        return Err(invalid(format!("pencil degree {} < 3", curve.x)));
    }
    guard(&[curve.x, curve.y])?;
    for t in 0..=2 * COEFF_LIMIT {
        let c = FeClass::new(e, -curve.x, t - curve.y);
        if cohomology_fe(c)?.h1 != 0 {
            // t - 1 is the largest k with dim|k g| = k.
            return Ok(t - 2);
        }
    }
    Err(invalid("Maroni search did not terminate inside the coefficient guard"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Quadric,
    F2,
}

pub fn maroni_closed_form(kind: SurfaceKind, a: i64, b: i64) -> Result<i64> {
    match kind {
        SurfaceKind::Quadric if 3 <= a && a <= b => Ok(b - 2),
        SurfaceKind::F2 if 6 <= 2 * a && 2 * a <= b => Ok(b - 2 * a),
        _ => Err(invalid(format!("({a},{b}) outside the closed-form range on {kind:?}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelPezzoCohomology {
    pub h0: i64,
    pub degree: i64,
    pub genus: i64,
    /// False when the class fails the nef-and-big screen, so the vanishing
    /// of `h1` and `h2` behind `h0 = g + d` was not confirmed.
    pub vanishing_verified: bool,
}

pub fn del_pezzo_cohomology(c: DelPezzoClass) -> Result<DelPezzoCohomology> {
    let c = DelPezzoClass::new(c.a, c.b);
    let degree = c.degree();
    if degree < 1 {
        return Err(invalid(format!("class has degree {degree} < 1")));
    }
    let genus = c.genus()?;
    let vanishing_verified = c.a >= 1 && c.b[3] >= 0 && c.a >= c.b[0] + c.b[1];
    Ok(DelPezzoCohomology { h0: genus + degree, degree, genus, vanishing_verified })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_values() {
        assert_eq!(cohomology_p1(0), (1, 0));
        assert_eq!(cohomology_p1(-2), (0, 1));
        assert_eq!(cohomology_p1(3), (4, 0));
        assert_eq!(cohomology_p1(-1), (0, 0));
    }

    #[test]
    fn fe_anchor_values() {
        let h = |e, x, y| cohomology_fe(FeClass::new(e, x, y)).unwrap();
        assert_eq!(h(2, 1, 0).h1, 1);
        assert_eq!(h(2, 3, 5).h1, 0);
        assert!(h(2, 3, 4).h1 > 0);
        assert_eq!(h(0, 0, 0), CohomologyTriple { h0: 1, h1: 0, h2: 0 });
        assert_eq!(h(4, 1, 7).h1, 0);
        assert_eq!(h(4, 1, 2).h1, 1);
        assert!(cohomology_fe(FeClass::new(2, 10_001, 0)).is_err());
        assert!(cohomology_fe(FeClass::new(-1, 0, 0)).is_err());
    }

    #[test]
    fn intersection_form() {
        let h = FeClass::new(4, 1, 0);
        let f = FeClass::new(4, 0, 1);
        assert_eq!(h.dot(&h), -4);
        assert_eq!(h.dot(&f), 1);
        assert_eq!(f.dot(&f), 0);
        assert_eq!(FeClass::canonical(2), FeClass::new(2, -2, -4));
        assert_eq!(FeClass::new(2, 4, 10).genus(), 15);
    }

    #[test]
    fn bidegree_values() {
        let h = |a, b| cohomology_bidegree(BidegreeClass::new(a, b)).unwrap();
        assert_eq!(h(0, -2).h1, 1);
        assert_eq!(h(1, 3), CohomologyTriple { h0: 8, h1: 0, h2: 0 });
        assert_eq!(h(-3, -5).h2, 8);
        assert_eq!(BidegreeClass::new(4, 7).degree(), 15);
    }

    #[test]
    fn extremal_quadric_twists() {
        let c = DivisorClass::new(4, 7);
        let h1: Vec<i64> = (1..=3)
            .map(|t| curve_twist_cohomology(SurfaceEmbedding::Quadric, c, t).unwrap().h1)
            .collect();
        assert_eq!(h1, vec![8, 2, 0]);

        let tw = curve_twist_cohomology(SurfaceEmbedding::Quadric, DivisorClass::new(3, 8), 3).unwrap();
        assert_eq!(tw.kernel.h1, 1);
    }

    #[test]
    fn twist_rejects_bad_sequence() {
        // On F_4, -2H has h2 = 3, so the shortcut is refused.
        let err = curve_twist_cohomology(SurfaceEmbedding::ConeF4, DivisorClass::new(3, 13), -2);
        assert!(matches!(err, Err(Error::SequenceAssumptionViolated { .. })));
    }

    #[test]
    fn maroni_values() {
        use SurfaceEmbedding::*;
        let m = |s, x, y| maroni_iterative(s, DivisorClass::new(x, y)).unwrap();
        assert_eq!(m(Quadric, 4, 6), 4);
        assert_eq!(m(F2, 4, 10), 2);
        assert_eq!(m(ConeF4, 3, 13), 3);
        assert_eq!(m(Quadric, 3, 6), 4);
        assert_eq!(m(F2, 3, 9), 3);
        assert!(maroni_iterative(Quadric, DivisorClass::new(2, 6)).is_err());
        assert!(maroni_iterative(Plane, DivisorClass::new(5, 0)).is_err());

        assert_eq!(maroni_closed_form(SurfaceKind::Quadric, 3, 7).unwrap(), 5);
        assert_eq!(maroni_closed_form(SurfaceKind::F2, 3, 10).unwrap(), 4);
        assert_eq!(maroni_closed_form(SurfaceKind::F2, 4, 9).unwrap(), 1);
        assert!(maroni_closed_form(SurfaceKind::F2, 4, 7).is_err());
        assert!(maroni_closed_form(SurfaceKind::Quadric, 5, 4).is_err());
    }

    #[test]
    fn del_pezzo_values() {
        let dp = |a, b| del_pezzo_cohomology(DelPezzoClass::new(a, b)).unwrap();
        let c = dp(8, [3, 2, 2, 2]);
        assert_eq!((c.degree, c.genus, c.h0), (15, 15, 30));
        assert!(c.vanishing_verified);
        let c = dp(10, [4, 4, 4, 4]);
        assert_eq!((c.degree, c.genus), (14, 12));
        let c = dp(3, [1, 1, 1, 1]);
        assert_eq!((c.degree, c.genus, c.h0), (5, 1, 6));
        let c = dp(7, [1, 2, 3, 2]);
        assert_eq!((c.degree, c.genus), (13, 10));
        assert!(!dp(5, [4, 3, 0, 0]).vanishing_verified);
        assert!(del_pezzo_cohomology(DelPezzoClass::new(1, [2, 1, 0, 0])).is_err());
    }
}
