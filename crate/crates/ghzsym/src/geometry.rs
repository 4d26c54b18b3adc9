//! Exact geometry of the symmetric triangle: the entanglement-class border
//! curves, point classification, and the thresholds where the borders cross
//! the GHZ-Werner line.
//!
//! All borders are given as the half-width |x| of the region at height y.
//! Regions are nested (separable inside biseparable inside W inside the
//! triangle), so a point is classified by comparing |x| against the three
//! borders in order. Every border includes its own boundary: points exactly
//! on a border belong to the less entangled class.

use crate::statespace::{edge_half_width, SloccClass, TriangleCoords, SQRT3, Y_MAX, Y_MIN};
use std::sync::OnceLock;
use thiserror::Error;

/// Height where the biseparable border meets the triangle edge, 1/(4*sqrt(3)).
pub const Y_BISEP_EDGE: f64 = 1.0 / (4.0 * SQRT3);

/// Height where the W border meets the triangle edge, 1/(2*sqrt(3)).
pub const Y_W_EDGE: f64 = 1.0 / (2.0 * SQRT3);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("y = {y} outside the valid range [{lo}, {hi}]")]
    OutOfRange { y: f64, lo: f64, hi: f64 },
    #[error("curve parameter v = {0} outside [0, 1]")]
    InvalidCurveParam(f64),
    #[error("coordinates (x = {x}, y = {y}) lie outside the triangle (tolerance {tol:e})")]
    OutsideTriangle { x: f64, y: f64, tol: f64 },
    #[error("the W/GHZ border parametrization is not monotone near v = {v}")]
    NonMonotoneCurve { v: f64 },
    #[error("root finding failed to converge: {0}")]
    ConvergenceFailure(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

fn check_y(y: f64, lo: f64, hi: f64) -> Result<(), GeometryError> {
    if y >= lo && y <= hi {
        Ok(())
    } else {
        Err(GeometryError::OutOfRange { y, lo, hi })
    }
}

/// Half-width of the triangle itself at height y.
pub fn x_edge(y: f64) -> Result<f64, GeometryError> {
    check_y(y, Y_MIN, Y_MAX)?;
    Ok(edge_half_width(y))
}

/// Border of the states reachable by symmetrizing a single separable pure
/// state: x = (1/4 - y/sqrt(3))^(3/2), defined for y in [0, sqrt(3)/4].
/// Lies strictly inside the full separable border except at its endpoints.
pub fn x_sep_pure(y: f64) -> Result<f64, GeometryError> {
    check_y(y, 0.0, Y_MAX)?;
    Ok((0.25 - y / SQRT3).powf(1.5))
}

fn x_sep_raw(y: f64) -> f64 {
    if y >= 0.0 {
        0.125 - SQRT3 * y / 6.0
    } else {
        edge_half_width(y)
    }
}

/// Border of the separable region: the convex hull of the symmetrized
/// separable pure states. A straight line above y = 0, the triangle edge
/// below it.
pub fn x_sep(y: f64) -> Result<f64, GeometryError> {
    check_y(y, Y_MIN, Y_MAX)?;
    Ok(x_sep_raw(y))
}

fn x_bisep_raw(y: f64) -> f64 {
    if y >= Y_BISEP_EDGE {
        0.375 - SQRT3 * y / 2.0
    } else {
        edge_half_width(y)
    }
}

/// Border of the biseparable region: a straight line above
/// y = 1/(4*sqrt(3)), the triangle edge below it.
pub fn x_bisep(y: f64) -> Result<f64, GeometryError> {
    check_y(y, Y_MIN, Y_MAX)?;
    Ok(x_bisep_raw(y))
}

/// Parameter of the W/GHZ border curve, confined to [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveParamV(f64);

impl CurveParamV {
    pub fn new(v: f64) -> Result<Self, GeometryError> {
        if (0.0..=1.0).contains(&v) {
            Ok(Self(v))
        } else {
            Err(GeometryError::InvalidCurveParam(v))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn w_curve_raw(v: f64) -> TriangleCoords {
    let v2 = v * v;
    let v3 = v2 * v;
    let v5 = v3 * v2;
    let x = (v5 + 8.0 * v3) / (8.0 * (4.0 - v2));
    let y = (SQRT3 / 4.0) * (4.0 - v2 - v2 * v2) / (4.0 - v2);
    TriangleCoords::new(x, y)
}

/// The curved W/GHZ border, parametrized by v in [0, 1]:
///
///   x(v) = (v^5 + 8 v^3) / (8 (4 - v^2)),
///   y(v) = (sqrt(3)/4) (4 - v^2 - v^4) / (4 - v^2).
///
/// v = 0 is the top of the triangle (0, sqrt(3)/4); v = 1 is the point
/// (3/8, 1/(2*sqrt(3))) where the border meets the triangle edge.
pub fn w_curve(v: CurveParamV) -> TriangleCoords {
    w_curve_raw(v.0)
}

/// y(v) must decrease from sqrt(3)/4 to 1/(2*sqrt(3)) for the inversion in
/// `x_w` to be well defined. Checked once per process on a fine grid;
/// plateaus of width below the floating-point resolution are tolerated,
/// any actual increase is not.
fn ensure_w_curve_monotone() -> Result<(), GeometryError> {
    static CHECK: OnceLock<Result<(), GeometryError>> = OnceLock::new();
    CHECK
        .get_or_init(|| {
            let n = 10_000;
            let mut prev = w_curve_raw(0.0).y;
            for i in 1..=n {
                let v = i as f64 / n as f64;
                let cur = w_curve_raw(v).y;
                if cur > prev {
                    return Err(GeometryError::NonMonotoneCurve { v });
                }
                prev = cur;
            }
            if w_curve_raw(1.0).y >= w_curve_raw(0.0).y {
                return Err(GeometryError::NonMonotoneCurve { v: 1.0 });
            }
            Ok(())
        })
        .clone()
}

fn x_w_raw(y: f64) -> f64 {
    if y < Y_W_EDGE {
        return edge_half_width(y);
    }
    let y_top = w_curve_raw(0.0).y;
    let y_bottom = w_curve_raw(1.0).y;
    if y >= y_top {
        return w_curve_raw(0.0).x;
    }
    if y <= y_bottom {
        return w_curve_raw(1.0).x;
    }
    // y(v) is strictly decreasing across [0, 1] up to float plateaus
    let mut lo = 0.0_f64;
    let mut hi = 1.0_f64;
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if w_curve_raw(mid).y >= y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    w_curve_raw(0.5 * (lo + hi)).x
}

/// Border of the W region: the inverted border curve above
/// y = 1/(2*sqrt(3)), the triangle edge below it.
pub fn x_w(y: f64) -> Result<f64, GeometryError> {
    check_y(y, Y_MIN, Y_MAX)?;
    ensure_w_curve_monotone()?;
    Ok(x_w_raw(y))
}

/// SLOCC class of the symmetric state at the given triangle coordinates.
///
/// Each border is inflated by `tol` towards the more entangled side, so
/// points within `tol` of a border resolve to the less entangled class.
/// Points farther than `tol` outside the triangle are rejected.
pub fn classify(c: TriangleCoords, tol: f64) -> Result<SloccClass, GeometryError> {
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(GeometryError::InvalidParameter(format!(
            "tolerance must be a finite non-negative number, got {tol}"
        )));
    }
    if !c.is_inside(tol) {
        return Err(GeometryError::OutsideTriangle {
            x: c.x,
            y: c.y,
            tol,
        });
    }
    ensure_w_curve_monotone()?;
    let a = c.x.abs();
    if a <= x_sep_raw(c.y) + tol {
        Ok(SloccClass::Separable)
    } else if a <= x_bisep_raw(c.y) + tol {
        Ok(SloccClass::Biseparable)
    } else if a <= x_w_raw(c.y) + tol {
        Ok(SloccClass::W)
    } else {
        Ok(SloccClass::Ghz)
    }
}

/// Werner-line crossings of the three borders, expressed in the mixing
/// parameter p (coordinates x = p/2, y = sqrt(3) p / 4).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    /// Below (and at) this p the Werner state is separable.
    pub p_sep: f64,
    /// Upper end of the biseparable segment.
    pub p_bisep: f64,
    /// Upper end of the W segment; beyond it the state is GHZ class.
    pub p_w: f64,
    /// Curve parameter of the W/GHZ border point on the Werner line.
    pub v_w: f64,
}

/// Bisection for f with f(lo) <= 0 <= f(hi); returns the bracket midpoint
/// once the bracket is narrower than `tol`.
fn bisect(
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    what: &str,
) -> Result<f64, GeometryError> {
    if f(lo) > 0.0 || f(hi) < 0.0 {
        return Err(GeometryError::ConvergenceFailure(format!(
            "{what}: no sign change on [{lo}, {hi}]"
        )));
    }
    for _ in 0..200 {
        if hi - lo <= tol {
            return Ok(0.5 * (lo + hi));
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(GeometryError::ConvergenceFailure(format!(
        "{what}: bracket [{lo}, {hi}] still wider than {tol} after 200 iterations"
    )))
}

/// Thresholds where the Werner line crosses the three border curves. The
/// separable and biseparable borders are straight lines there, so those two
/// crossings are solved in closed form; the W crossing is bisected to `tol`.
pub fn solve_thresholds(tol: f64) -> Result<Thresholds, GeometryError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(GeometryError::InvalidParameter(format!(
            "tolerance must be a positive finite number, got {tol}"
        )));
    }
    ensure_w_curve_monotone()?;
    // p/2 = -p/8 + 1/8 and p/2 = -3p/8 + 3/8
    let p_sep = 0.2;
    let p_bisep = 3.0 / 7.0;
    // crossing of the border curve with the Werner line x = y/sqrt(3) * 2:
    // 2 x(v) - (4/sqrt(3)) y(v) changes sign on [0, 1]
    let werner_gap = |v: f64| {
        let c = w_curve_raw(v);
        2.0 * c.x - 4.0 / SQRT3 * c.y
    };
    let v_w = bisect(werner_gap, 0.0, 1.0, tol, "W threshold")?;
    let p_w = 2.0 * w_curve_raw(v_w).x;
    let t = Thresholds {
        p_sep,
        p_bisep,
        p_w,
        v_w,
    };
    if !(0.0 < t.p_sep && t.p_sep < t.p_bisep && t.p_bisep < t.p_w && t.p_w < 1.0) {
        return Err(GeometryError::ConvergenceFailure(format!(
            "thresholds out of order: {t:?}"
        )));
    }
    Ok(t)
}

fn cached_thresholds() -> Result<Thresholds, GeometryError> {
    static CACHE: OnceLock<Result<Thresholds, GeometryError>> = OnceLock::new();
    CACHE.get_or_init(|| solve_thresholds(1e-14)).clone()
}

/// SLOCC class of the Werner state with mixing parameter p. Threshold
/// values themselves resolve to the less entangled class.
pub fn class_of_werner(p: f64) -> Result<SloccClass, GeometryError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GeometryError::InvalidParameter(format!(
            "Werner parameter must lie in [0, 1], got {p}"
        )));
    }
    let t = cached_thresholds()?;
    // the thresholds carry ~1e-14 solver error; close the boundaries with
    // a margin safely above it and safely below any physical spacing
    let margin = 1e-12;
    Ok(if p <= t.p_sep + margin {
        SloccClass::Separable
    } else if p <= t.p_bisep + margin {
        SloccClass::Biseparable
    } else if p <= t.p_w + margin {
        SloccClass::W
    } else {
        SloccClass::Ghz
    })
}
