//! Closed-form CSC segment lengths for the equal-radius case.
//!
//! The pursuer starts at the origin heading along +x and its turn radius
//! equals the target circle radius. The goal-side turn circle then either
//! coincides with the target circle (when it turns with the target) or is
//! the target circle pushed out by `2ρ` along the radial direction. These
//! formulas are written out independently of [`crate::dubins`] and serve as
//! its oracle, and as the basis for locating mode transitions.

use crate::dubins::{PathMode, Point2, TargetCircle, TurnDirection};
use crate::error::{PlanError, Result};
use crate::scalar::{count, lit, signed_angle, wrap_angle, wrap_arc, Real};

/// Target circle seen from a pursuer at `(0, 0, 0)`, with `r_t = ρ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EqualRadiusScene<T> {
    pub cx: T,
    pub cy: T,
    pub rho: T,
    /// Target motion; `Right` (clockwise) unless mirrored.
    pub motion: TurnDirection,
}

/// Straight length and the two arc angles of one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentTriple<T> {
    pub straight: T,
    pub phi1: T,
    pub phi2: T,
}

impl<T: Real> SegmentTriple<T> {
    pub fn total(&self, rho: T) -> T {
        rho * self.phi1 + self.straight + rho * self.phi2
    }
}

/// Angular positions where a mode's arc vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionAngles<T> {
    /// Second arc of LSL and LSR vanishes.
    pub alpha_ls: T,
    /// First arc of LSL and RSL vanishes.
    pub alpha_sl: T,
}

impl<T: Real> EqualRadiusScene<T> {
    /// Clockwise target around `(cx, cy)`.
    pub fn new(cx: T, cy: T, rho: T) -> Result<Self> {
        if !(rho > T::zero()) || !rho.is_finite() || !cx.is_finite() || !cy.is_finite() {
            return Err(PlanError::InvalidInput(format!("bad scene ({cx}, {cy}), rho = {rho}")));
        }
        Ok(Self { cx, cy, rho, motion: TurnDirection::Right })
    }

    pub fn with_motion(self, motion: TurnDirection) -> Self {
        Self { motion, ..self }
    }

    /// Every point of the circle is more than `4ρ` from the origin.
    pub fn four_rho_ok(&self) -> bool {
        (self.cx.hypot(self.cy) - self.rho).abs() > lit::<T>(4.0) * self.rho
    }

    /// Reflection about the x-axis.
    pub fn mirrored(&self) -> Self {
        Self { cx: self.cx, cy: -self.cy, rho: self.rho, motion: self.motion.mirror() }
    }

    /// The scene as a target circle (unit speed, starting at `alpha = 0`).
    pub fn target_circle(&self) -> TargetCircle<T> {
        TargetCircle {
            center: Point2::new(self.cx, self.cy),
            radius: self.rho,
            motion: self.motion,
            alpha_init: T::zero(),
            speed: T::one(),
        }
    }

    fn goal_heading(&self, alpha: T) -> T {
        match self.motion {
            TurnDirection::Right => alpha - T::FRAC_PI_2(),
            TurnDirection::Left => alpha + T::FRAC_PI_2(),
        }
    }

    /// Center of the goal's `side` turn circle at angular position `alpha`.
    fn goal_center(&self, side: TurnDirection, alpha: T) -> (T, T) {
        if side == self.motion {
            (self.cx, self.cy)
        } else {
            let two_rho = self.rho + self.rho;
            (self.cx + two_rho * alpha.cos(), self.cy + two_rho * alpha.sin())
        }
    }
}

fn inner_discriminant<T: Real>(sq: T, rho: T) -> Result<T> {
    let disc = sq - lit::<T>(4.0) * rho * rho;
    if disc < -lit::<T>(1e-12) {
        return Err(PlanError::NoInnerTangent {
            distance: sq.sqrt().to_f64().unwrap_or(f64::NAN),
            required: (rho + rho).to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(disc.max(T::zero()))
}

/// Direction of the LSL straight segment, in `(-π, π]`.
///
/// For a clockwise target this is `atan2(c_y + 2ρ sin α - ρ, c_x + 2ρ cos α)`.
pub fn lsl_line_heading<T: Real>(scene: &EqualRadiusScene<T>, alpha: T) -> T {
    let (gx, gy) = scene.goal_center(TurnDirection::Left, alpha);
    (gy - scene.rho).atan2(gx)
}

pub fn lsl_segments<T: Real>(scene: &EqualRadiusScene<T>, alpha: T) -> SegmentTriple<T> {
    let (gx, gy) = scene.goal_center(TurnDirection::Left, alpha);
    let (x, y) = (gx, gy - scene.rho);
    let phi1 = wrap_arc(y.atan2(x));
    SegmentTriple {
        straight: x.hypot(y),
        phi1,
        phi2: wrap_arc(scene.goal_heading(alpha) - phi1),
    }
}

/// For a clockwise target the straight length and first arc do not depend
/// on `alpha`; only the final arc does.
pub fn lsr_segments<T: Real>(scene: &EqualRadiusScene<T>, alpha: T) -> Result<SegmentTriple<T>> {
    let (gx, gy) = scene.goal_center(TurnDirection::Right, alpha);
    let (x, y) = (gx, gy - scene.rho);
    let straight = inner_discriminant(x * x + y * y, scene.rho)?.sqrt();
    let psi1 = ((scene.rho + scene.rho) / straight).atan();
    let psi2 = y.atan2(x);
    let phi1 = wrap_arc(psi1 + psi2);
    Ok(SegmentTriple { straight, phi1, phi2: wrap_arc(phi1 - scene.goal_heading(alpha)) })
}

/// `(ψ1, ψ2, L_cc)` of the RSL construction: direction and length of the
/// center line, and the inner-tangent offset angle.
pub fn rsl_angles<T: Real>(scene: &EqualRadiusScene<T>, alpha: T) -> Result<(T, T, T)> {
    let (gx, gy) = scene.goal_center(TurnDirection::Left, alpha);
    let (x, y) = (gx, gy + scene.rho);
    let center_dist = x.hypot(y);
    let two_rho = scene.rho + scene.rho;
    if center_dist < two_rho {
        inner_discriminant(center_dist * center_dist, scene.rho)?;
    }
    let psi1 = y.atan2(x);
    let psi2 = (two_rho / center_dist).min(T::one()).asin();
    Ok((psi1, psi2, center_dist))
}

pub fn rsl_segments<T: Real>(scene: &EqualRadiusScene<T>, alpha: T) -> Result<SegmentTriple<T>> {
    let (psi1, psi2, center_dist) = rsl_angles(scene, alpha)?;
    let straight = inner_discriminant(center_dist * center_dist, scene.rho)?.sqrt();
    let line = psi1 - psi2;
    Ok(SegmentTriple {
        straight,
        phi1: wrap_arc(-psi1 + psi2),
        phi2: wrap_arc(scene.goal_heading(alpha) - line),
    })
}

/// RSR is LSL of the scene reflected about the x-axis.
pub fn rsr_segments<T: Real>(scene: &EqualRadiusScene<T>, alpha: T) -> SegmentTriple<T> {
    lsl_segments(&scene.mirrored(), wrap_angle(-alpha))
}

pub fn segments<T: Real>(
    scene: &EqualRadiusScene<T>,
    mode: PathMode,
    alpha: T,
) -> Result<SegmentTriple<T>> {
    match mode {
        PathMode::Lsl => Ok(lsl_segments(scene, alpha)),
        PathMode::Lsr => lsr_segments(scene, alpha),
        PathMode::Rsl => rsl_segments(scene, alpha),
        PathMode::Rsr => Ok(rsr_segments(scene, alpha)),
    }
}

/// Total length of `mode` at `alpha`, or `None` when infeasible.
pub fn mode_length<T: Real>(scene: &EqualRadiusScene<T>, mode: PathMode, alpha: T) -> Option<T> {
    segments(scene, mode, alpha).ok().map(|s| s.total(scene.rho))
}

const SCAN_POINTS: usize = 4096;

/// Finds where `h` crosses zero upward (`rising`) or downward on
/// `[0, 2π)`, ignoring the ±π wrap jumps. Bisects until the bracket
/// cannot be split further in floating point.
fn locate_crossing<T: Real>(h: impl Fn(T) -> T, rising: bool, what: &'static str) -> Result<T> {
    let step = T::TAU() / count(SCAN_POINTS);
    let near = T::FRAC_PI_2();
    let oriented = |a: T| if rising { h(a) } else { -h(a) };
    let mut prev = oriented(T::zero());
    for k in 1..=SCAN_POINTS {
        let a = step * count(k);
        let cur = oriented(a);
        if prev < T::zero() && cur >= T::zero() && prev > -near && cur < near {
            let (mut lo, mut hi) = (a - step, a);
            for _ in 0..200 {
                let mid = (lo + hi) / lit(2.0);
                if mid <= lo || mid >= hi {
                    break;
                }
                if oriented(mid) < T::zero() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let best = if oriented(lo).abs() < oriented(hi).abs() { lo } else { hi };
            return Ok(wrap_angle(best));
        }
        prev = cur;
    }
    Err(PlanError::NoTransition { what })
}

/// Where the final arc of LSL (and LSR) vanishes: the second LSL arc,
/// taken as a signed angle, crosses zero from below.
pub fn find_alpha_ls<T: Real>(scene: &EqualRadiusScene<T>) -> Result<T> {
    locate_crossing(
        |a| signed_angle(scene.goal_heading(a) - lsl_line_heading(scene, a)),
        true,
        "second LSL arc",
    )
}

/// Where the first arc of LSL (and RSL) vanishes: the LSL straight-line
/// heading crosses zero while decreasing.
pub fn find_alpha_sl<T: Real>(scene: &EqualRadiusScene<T>) -> Result<T> {
    locate_crossing(|a| lsl_line_heading(scene, a), false, "LSL line heading")
}

pub fn find_transition_angles<T: Real>(scene: &EqualRadiusScene<T>) -> Result<TransitionAngles<T>> {
    Ok(TransitionAngles { alpha_ls: find_alpha_ls(scene)?, alpha_sl: find_alpha_sl(scene)? })
}

/// `g(α) = -ψ1 + ψ2`, the unwrapped first RSL arc.
pub fn rsl_first_arc_unwrapped<T: Real>(scene: &EqualRadiusScene<T>, alpha: T) -> Result<T> {
    let (psi1, psi2, _) = rsl_angles(scene, alpha)?;
    Ok(-psi1 + psi2)
}

/// Analytic derivatives `(f'(α), g'(α))` of the LSL line heading and of
/// the unwrapped first RSL arc, for a clockwise target.
///
/// `f' = -(2ρ / L_S) sin(θ - φ1)` and `g' = tan ψ2 · sin φ2`, where `θ` is
/// the goal heading and `φ2` the final RSL arc.
pub fn transition_derivatives<T: Real>(scene: &EqualRadiusScene<T>, alpha: T) -> Result<(T, T)> {
    if scene.motion != TurnDirection::Right {
        return Err(PlanError::InvalidInput("derivative identities assume a clockwise target".into()));
    }
    let theta = scene.goal_heading(alpha);
    let lsl = lsl_segments(scene, alpha);
    let f_prime = -(scene.rho + scene.rho) / lsl.straight * (theta - lsl_line_heading(scene, alpha)).sin();
    let (psi1, psi2, _) = rsl_angles(scene, alpha)?;
    let phi2 = theta - (psi1 - psi2);
    let g_prime = psi2.tan() * phi2.sin();
    Ok((f_prime, g_prime))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    fn worked_scene() -> EqualRadiusScene<f64> {
        EqualRadiusScene::new(-4.0, 3.0, 1.0).unwrap()
    }

    #[test]
    fn four_rho_flag() {
        assert!(!worked_scene().four_rho_ok());
        assert!(EqualRadiusScene::new(6.0, 2.0, 1.0).unwrap().four_rho_ok());
        assert!(EqualRadiusScene::new(0.0, 0.0, 1.0).is_ok());
        assert!(EqualRadiusScene::new(0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn lsl_at_pi_hand_value() {
        let s = lsl_segments(&worked_scene(), PI);
        assert!((s.straight - 40.0_f64.sqrt()).abs() < 1e-12);
        assert!((s.straight - 6.324555320336759).abs() < 1e-12);
    }

    #[test]
    fn lsl_degenerates_to_straight() {
        // goal straight ahead at (10, 0) heading 0: alpha = pi/2 on a CW
        // circle centered one radius below it
        let scene = EqualRadiusScene::new(10.0, -1.0, 1.0).unwrap();
        let s = lsl_segments(&scene, FRAC_PI_2);
        assert!(s.phi1 < 1e-12 && s.phi2 < 1e-12);
        assert!((s.straight - 10.0).abs() < 1e-12);
    }

    #[test]
    fn lsl_heading_bookkeeping() {
        let scene = worked_scene();
        for k in 0..100 {
            let a = wrap_angle(0.37 + k as f64 * 0.731);
            let s = lsl_segments(&scene, a);
            let d = signed_angle(s.phi1 + FRAC_PI_2 + s.phi2 - a);
            assert!(d.abs() < 1e-12);
        }
    }

    #[test]
    fn lsr_constant_straight() {
        let scene = worked_scene();
        for k in 0..100 {
            let a = k as f64 * TAU / 100.0;
            let s = lsr_segments(&scene, a).unwrap();
            assert!((s.straight - 4.0).abs() < 1e-12);
            assert_eq!(s.phi1, lsr_segments(&scene, 0.0).unwrap().phi1);
        }
    }

    #[test]
    fn lsr_final_arc_slope_is_minus_one() {
        let scene = worked_scene();
        let d = 1e-4;
        for a in [0.5, 1.5, 4.0] {
            let p0 = lsr_segments(&scene, a).unwrap().phi2;
            let p1 = lsr_segments(&scene, a - d).unwrap().phi2;
            if (p1 - p0 - d).abs() > 1.0 {
                continue; // wrap point
            }
            assert!((p1 - p0 - d).abs() < 1e-12);
        }
    }

    #[test]
    fn inner_modes_infeasible_when_too_close() {
        let scene = EqualRadiusScene::new(1.0, 1.0, 1.0).unwrap();
        assert!(matches!(lsr_segments(&scene, 0.3), Err(PlanError::NoInnerTangent { .. })));
        // left goal center at (1,1) + 2(cos a, sin a); pick a so it sits at (0, -1)
        let close = EqualRadiusScene::new(1.0, 1.0, 1.0).unwrap();
        let a = (-2.0f64).atan2(-1.0);
        let (gx, gy) = close.goal_center(TurnDirection::Left, a);
        assert!(gx.hypot(gy + 1.0) < 2.0);
        assert!(rsl_segments(&close, a).is_err());
    }

    #[test]
    fn rsr_lower_bound() {
        let scene = worked_scene();
        for k in 0..64 {
            let a = k as f64 * 0.1;
            let s = rsr_segments(&scene, a);
            assert!(s.total(1.0) >= s.straight);
            assert!(s.straight >= 5.0 - 2.0 - 1e-12);
        }
    }

    #[test]
    fn rsl_mirrors_lsr() {
        let scene = EqualRadiusScene::new(-5.0, 2.5, 1.0).unwrap();
        for k in 0..64 {
            let a = 0.05 + k as f64 * 0.097;
            let r = rsl_segments(&scene, a).unwrap();
            let l = lsr_segments(&scene.mirrored(), wrap_angle(-a)).unwrap();
            assert!((r.straight - l.straight).abs() < 1e-12);
            assert!(signed_angle(r.phi1 - l.phi1).abs() < 1e-12);
            assert!(signed_angle(r.phi2 - l.phi2).abs() < 1e-12);
        }
    }

    #[test]
    fn transitions_exist_for_scene_ahead() {
        let scene = EqualRadiusScene::new(6.0, 2.0, 1.0).unwrap();
        let t = find_transition_angles(&scene).unwrap();
        assert!(lsl_segments(&scene, t.alpha_ls).phi2 <= 1e-9);
        assert!(lsr_segments(&scene, t.alpha_ls).unwrap().phi2 <= 1e-9);
        assert!(lsl_segments(&scene, t.alpha_sl).phi1 <= 1e-9);
        assert!(rsl_segments(&scene, t.alpha_sl).unwrap().phi1 <= 1e-9);
    }

    #[test]
    fn no_first_arc_transition_behind() {
        // the LSL line always points into the left half-plane here
        assert!(matches!(find_alpha_sl(&worked_scene()), Err(PlanError::NoTransition { .. })));
        assert!(find_alpha_ls(&worked_scene()).is_ok());
    }

    #[test]
    fn derivatives_need_clockwise() {
        let s = worked_scene().with_motion(TurnDirection::Left);
        assert!(transition_derivatives(&s, 1.0).is_err());
    }
}
