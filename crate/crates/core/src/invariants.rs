//! Closed-form numerical invariants of a (degree, genus, ambient dimension)
//! triple, plus the small bookkeeping formulas used across the crate.
//!
//! Everything is exact `i64` arithmetic. Inputs are capped at `d <= 100`
//! and `r <= 20`, which keeps every intermediate value far from overflow.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub const MAX_DEGREE: i64 = 100;
pub const MAX_AMBIENT: i64 = 20;

/// Degree, genus and ambient projective dimension of a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DGR {
    pub d: i64,
    pub g: i64,
    pub r: i64,
}

impl DGR {
    pub fn new(d: i64, g: i64, r: i64) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&d) {
            return Err(invalid(format!("degree {d} outside 1..={MAX_DEGREE}")));
        }
        if g < 0 {
            return Err(invalid(format!("genus {g} is negative")));
        }
        if !(2..=MAX_AMBIENT).contains(&r) {
            return Err(invalid(format!("ambient dimension {r} outside 2..={MAX_AMBIENT}")));
        }
        Ok(DGR { d, g, r })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalInvariants {
    pub pi: i64,
    pub pi1: Option<i64>,
    pub rho: i64,
    pub lambda: i64,
    pub expected_dim: i64,
}

/// Castelnuovo's bound on the arithmetic genus of a non-degenerate
/// integral curve of degree `d` in `P^r`.
pub fn castelnuovo_pi(d: i64, r: i64) -> Result<i64> {
    if !(2..=MAX_AMBIENT).contains(&r) {
        return Err(invalid(format!("ambient dimension {r} outside 2..={MAX_AMBIENT}")));
    }
    if d < r || d > MAX_DEGREE {
        return Err(invalid(format!("no non-degenerate curve of degree {d} in P^{r}")));
    }
    let m = (d - 1) / (r - 1);
    let eps = (d - 1) - m * (r - 1);
    Ok(m * (m - 1) / 2 * (r - 1) + m * eps)
}

/// Largest genus of a curve class on the quintic del Pezzo surface with
/// degree `d`, found by exhaustive search over `(a; b1 >= .. >= b4 >= 0)`
/// with `a - 1 >= b1`.
pub fn castelnuovo_pi1_p5(d: i64) -> Result<i64> {
    if !(6..=MAX_DEGREE).contains(&d) {
        return Err(invalid(format!("second bound needs 6 <= d <= {MAX_DEGREE}, got {d}")));
    }
    let mut best: Option<i64> = None;
    for a in 1..=d {
        let sum = 3 * a - d;
        if sum < 0 {
            continue;
        }
        for_each_sorted_quadruple(sum, a - 1, |b| {
            let num = a * a - b.iter().map(|x| x * x).sum::<i64>() - d + 2;
            if num % 2 == 0 {
                let g = num / 2;
                best = Some(best.map_or(g, |cur| cur.max(g)));
            }
        });
    }
    best.ok_or_else(|| invalid(format!("no del Pezzo class of degree {d}")))
}

/// Calls `f` on every `b1 >= b2 >= b3 >= b4 >= 0` with `b1 <= cap` and
/// `b1 + b2 + b3 + b4 == sum`.
pub(crate) fn for_each_sorted_quadruple(sum: i64, cap: i64, mut f: impl FnMut([i64; 4])) {
    if sum < 0 || cap < 0 {
        return;
    }
    for b1 in (0..=cap.min(sum)).rev() {
        let r1 = sum - b1;
        for b2 in (0..=b1.min(r1)).rev() {
            let r2 = r1 - b2;
            for b3 in (0..=b2.min(r2)).rev() {
                let b4 = r2 - b3;
                if b4 <= b3 {
                    f([b1, b2, b3, b4]);
                }
            }
        }
    }
}

pub fn brill_noether_rho(d: i64, g: i64, r: i64) -> Result<i64> {
    let t = DGR::new(d, g, r)?;
    Ok(t.g - (t.r + 1) * (t.g - t.d + t.r))
}

pub fn aut_pr_dim(r: i64) -> i64 {
    (r + 1) * (r + 1) - 1
}

pub fn classical_invariants(dgr: DGR) -> Result<ClassicalInvariants> {
    let DGR { d, g, r } = DGR::new(dgr.d, dgr.g, dgr.r)?;
    let pi = castelnuovo_pi(d, r)?;
    let pi1 = if r == 5 && (6..=MAX_DEGREE).contains(&d) {
        Some(castelnuovo_pi1_p5(d)?)
    } else {
        None
    };
    let rho = brill_noether_rho(d, g, r)?;
    let lambda = 3 * g - 3 + rho;
    Ok(ClassicalInvariants {
        pi,
        pi1,
        rho,
        lambda,
        expected_dim: lambda + aut_pr_dim(r),
    })
}

/// Shorthand for the expected dimension of the Hilbert scheme in `P^5`.
pub fn expected_dim_p5(d: i64, g: i64) -> Result<i64> {
    Ok(classical_invariants(DGR::new(d, g, 5)?)?.expected_dim)
}

pub fn lambda_p5(d: i64, g: i64) -> Result<i64> {
    Ok(classical_invariants(DGR::new(d, g, 5)?)?.lambda)
}

/// Castelnuovo–Severi: a curve covering curves of genus `h` and `q` with
/// degrees `m` and `n` (no common factorization) has genus at most this.
pub fn castelnuovo_severi_bound(m: i64, h: i64, n: i64, q: i64) -> Result<i64> {
    if m < 2 || n < 2 {
        return Err(invalid(format!("covering degrees must be >= 2, got {m} and {n}")));
    }
    if h < 0 || q < 0 {
        return Err(invalid("target genera must be non-negative"));
    }
    Ok(m * h + n * q + (m - 1) * (n - 1))
}

/// Arithmetic genus of two curves glued transversally at `meeting_points`.
pub fn nodal_union_genus(g1: i64, g2: i64, meeting_points: i64) -> Result<i64> {
    if meeting_points < 1 {
        return Err(invalid("a connected union needs at least one meeting point"));
    }
    Ok(g1 + g2 + meeting_points - 1)
}

/// `(h0, h1)` of `N(-Z)` for a rational normal curve in `P^n`, whose normal
/// bundle splits as `n - 1` copies of `O(n + 2)`, twisted down by a divisor
/// of degree `z_degree`.
pub fn rnc_normal_bundle_profile(n: i64, z_degree: i64) -> Result<(i64, i64)> {
    if n < 3 {
        return Err(invalid(format!("rational normal curve needs n >= 3, got {n}")));
    }
    if z_degree < 0 {
        return Err(invalid("divisor degree must be non-negative"));
    }
    let summand = n + 2 - z_degree;
    Ok(((n - 1) * (summand + 1).max(0), (n - 1) * (-summand - 1).max(0)))
}

/// Twist levels where vanishing of `h1(I_X(t))` already forces ACM.
pub fn acm_vanishing_levels(d: i64) -> Result<Vec<i64>> {
    match d {
        5..=9 => Ok(vec![1]),
        10..=13 => Ok(vec![1, 2]),
        14..=17 => Ok(vec![1, 2, 3]),
        _ => Err(invalid(format!("ACM thresholds are tabulated for 5 <= d <= 17, got {d}"))),
    }
}

/// Integer range allowed for the Maroni invariant of a trigonal curve.
pub fn maroni_range(g: i64) -> Result<(i64, i64)> {
    if g < 5 {
        return Err(invalid(format!("Maroni range needs g >= 5, got {g}")));
    }
    Ok((div_ceil(g - 4, 3), (g - 2).div_euclid(2)))
}

pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberFactor {
    AutP5Orbit,
    AutP5ModAutP1,
    SymmetricPower { k: i64 },
    Jacobian,
    Grassmannian { s: i64, n: i64 },
}

/// Product description of the fiber of the moduli map through a curve.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiberDescriptor {
    pub factors: Vec<FiberFactor>,
}

impl FiberDescriptor {
    pub fn new(factors: Vec<FiberFactor>) -> Self {
        FiberDescriptor { factors }
    }
}

pub fn fiber_dimension(desc: &FiberDescriptor, g: i64, r: i64) -> Result<i64> {
    let mut total = 0;
    for f in &desc.factors {
        total += match *f {
            FiberFactor::AutP5Orbit => aut_pr_dim(r),
            FiberFactor::AutP5ModAutP1 => aut_pr_dim(r) - 3,
            FiberFactor::SymmetricPower { k } => {
                if k < 0 {
                    return Err(invalid(format!("symmetric power of negative order {k}")));
                }
                k
            }
            FiberFactor::Jacobian => g,
            FiberFactor::Grassmannian { s, n } => {
                if s < 0 || s >= n {
                    return Err(invalid(format!("Grassmannian G({s},{n}) needs 0 <= s < n")));
                }
                (s + 1) * (n - s)
            }
        };
    }
    Ok(total)
}
