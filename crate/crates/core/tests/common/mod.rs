//! Brute-force model search shared by the oracle and acceptance targets.

use p5curves::model_enumerator::SurfaceModel;
use p5curves::surface_cohomology::{BidegreeClass, DelPezzoClass, FeClass};

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

pub fn brute_models(d: i64, g: i64) -> Vec<SurfaceModel> {
    let mut out = Vec::new();
    for s in 1..=d {
        if 2 * s == d && binom2(s - 1) == g {
            out.push(SurfaceModel::Veronese { s });
        }
    }
    for a in 1..=d {
        for b in -4 * d..=d {
            let lin = 2 * a * (a + 1) + (a + 1) * (b + 1) - 1;
            if 4 * a + b == d && lin >= 0 && 2 * (a - 1) * (a - 2) + (3 + b) * (a - 1) == g {
                out.push(SurfaceModel::ScrollAbstract { a, b });
            }
        }
    }
    for a in 1..=d {
        for b in 1..=d {
            if 2 * a + b == d && (a - 1) * (b - 1) == g {
                out.push(SurfaceModel::F0(BidegreeClass::new(a, b)));
            }
        }
    }
    for a in 1..=d {
        for b in a..=d {
            if a + b == d && (a - 1) * (b - a - 1) == g {
                out.push(SurfaceModel::F2(FeClass::new(2, a, b)));
            }
        }
    }
    for k in 1..=d {
        for m in 0..=d {
            if 4 * k + m == d && (k - 1) * (2 * d - 4 * k - 2) == 2 * g {
                out.push(SurfaceModel::ConeF4 { k, m });
            }
        }
    }
    for a in 1..=d {
        let total = 3 * a - d;
        for b1 in 0..=total {
            for b2 in 0..=b1 {
                for b3 in 0..=b2 {
                    let b4 = total - b1 - b2 - b3;
                    if !(0..=b3).contains(&b4) {
                        continue;
                    }
                    let b = [b1, b2, b3, b4];
                    let sq: i64 = b.iter().map(|x| x * x).sum();
                    if a * a - sq - d + 2 == 2 * g {
                        out.push(SurfaceModel::DelPezzo(DelPezzoClass { a, b }));
                    }
                }
            }
        }
    }
    // Del Pezzo classes come out ascending in b1; order them like the library.
    let split = out.iter().position(|m| matches!(m, SurfaceModel::DelPezzo(_))).unwrap_or(out.len());
    out[split..].sort_by_key(|m| match m {
        SurfaceModel::DelPezzo(c) => (c.a, c.b),
        _ => unreachable!(),
    });
    out
}
