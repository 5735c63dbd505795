//! Curvature-constrained CSC paths ending tangent to a circle.
//!
//! Every path here is a left or right arc of the minimum turn radius, a
//! straight segment, and a second arc. Paths are built from the two turn
//! circles and their common tangent, so start and goal poses are arbitrary
//! and the target circle radius need not equal the turn radius.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{PlanError, Result};
use crate::scalar::{lit, signed_angle, wrap_angle, wrap_arc, Real};

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    /// Unit vector pointing along `angle`.
    pub fn from_angle(angle: T) -> Self {
        Self::new(angle.cos(), angle.sin())
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> T {
        (other - self).norm()
    }

    /// Quadrant-aware direction of the vector.
    pub fn angle(self) -> T {
        self.y.atan2(self.x)
    }

    pub fn rotated(self, angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Reflection about the x-axis.
    pub fn mirrored(self) -> Self {
        Self::new(self.x, -self.y)
    }
}

impl<T: Real> Add for Point2<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Real> Sub for Point2<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Real> Neg for Point2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Real> Mul<T> for Point2<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

/// Position and heading of a vehicle. The heading is kept in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanarPose<T> {
    pub x: T,
    pub y: T,
    pub heading: T,
}

impl<T: Real> PlanarPose<T> {
    pub fn new(x: T, y: T, heading: T) -> Self {
        Self { x, y, heading: wrap_angle(heading) }
    }

    pub fn from_point(p: Point2<T>, heading: T) -> Self {
        Self::new(p.x, p.y, heading)
    }

    pub fn position(&self) -> Point2<T> {
        Point2::new(self.x, self.y)
    }

    pub fn direction(&self) -> Point2<T> {
        Point2::from_angle(self.heading)
    }

    pub fn mirrored(&self) -> Self {
        Self::new(self.x, -self.y, -self.heading)
    }
}

/// Turn sense of an arc: `Left` is counter-clockwise, `Right` clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TurnDirection {
    Left,
    Right,
}

impl TurnDirection {
    pub fn mirror(self) -> Self {
        match self {
            Self::Left => Self::Right,
            Self::Right => Self::Left,
        }
    }

    /// `+1` for counter-clockwise, `-1` for clockwise.
    pub fn sign<T: Real>(self) -> T {
        match self {
            Self::Left => T::one(),
            Self::Right => -T::one(),
        }
    }

    /// Angle swept when turning in this sense from heading `from` to `to`.
    pub fn sweep<T: Real>(self, from: T, to: T) -> T {
        match self {
            Self::Left => wrap_arc(to - from),
            Self::Right => wrap_arc(from - to),
        }
    }

    /// Unit offset from a point moving along `heading` to the center of its
    /// turn circle.
    fn center_offset<T: Real>(self, heading: T) -> Point2<T> {
        let (s, c) = heading.sin_cos();
        match self {
            Self::Left => Point2::new(-s, c),
            Self::Right => Point2::new(s, -c),
        }
    }
}

/// The four CSC path families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathMode {
    Lsl,
    Lsr,
    Rsl,
    Rsr,
}

impl PathMode {
    /// Fixed evaluation order; earlier modes win ties.
    pub const ALL: [PathMode; 4] = [PathMode::Lsl, PathMode::Lsr, PathMode::Rsl, PathMode::Rsr];

    pub fn first_turn(self) -> TurnDirection {
        match self {
            Self::Lsl | Self::Lsr => TurnDirection::Left,
            Self::Rsl | Self::Rsr => TurnDirection::Right,
        }
    }

    pub fn last_turn(self) -> TurnDirection {
        match self {
            Self::Lsl | Self::Rsl => TurnDirection::Left,
            Self::Lsr | Self::Rsr => TurnDirection::Right,
        }
    }

    /// Mode obtained by reflecting the geometry about the x-axis.
    pub fn mirror(self) -> Self {
        match self {
            Self::Lsl => Self::Rsr,
            Self::Lsr => Self::Rsl,
            Self::Rsl => Self::Lsr,
            Self::Rsr => Self::Lsl,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Lsl => "LSL",
            Self::Lsr => "LSR",
            Self::Rsl => "RSL",
            Self::Rsr => "RSR",
        }
    }
}

impl fmt::Display for PathMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PathMode {
    type Err = PlanError;

    fn from_str(s: &str) -> Result<Self> {
        PathMode::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| PlanError::InvalidInput(format!("unknown path mode `{s}`")))
    }
}

/// Circle the target travels on, together with its motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetCircle<T> {
    pub center: Point2<T>,
    pub radius: T,
    /// `Right` is clockwise travel, `Left` counter-clockwise.
    pub motion: TurnDirection,
    /// Initial angular position, measured counter-clockwise from +x.
    pub alpha_init: T,
    pub speed: T,
}

impl<T: Real> TargetCircle<T> {
    pub fn new(
        center: Point2<T>,
        radius: T,
        motion: TurnDirection,
        alpha_init: T,
        speed: T,
    ) -> Result<Self> {
        if !(radius > T::zero()) || !radius.is_finite() {
            return Err(PlanError::InvalidInput(format!("circle radius must be > 0, got {radius}")));
        }
        if !(speed > T::zero()) || !speed.is_finite() {
            return Err(PlanError::InvalidInput(format!("target speed must be > 0, got {speed}")));
        }
        if !center.x.is_finite() || !center.y.is_finite() || !alpha_init.is_finite() {
            return Err(PlanError::InvalidInput("circle center and alpha must be finite".into()));
        }
        Ok(Self { center, radius, motion, alpha_init: wrap_angle(alpha_init), speed })
    }

    pub fn point_at(&self, alpha: T) -> Point2<T> {
        self.center + Point2::from_angle(alpha) * self.radius
    }

    /// Reflection about the x-axis; motion sense flips.
    pub fn mirrored(&self) -> Self {
        Self {
            center: self.center.mirrored(),
            radius: self.radius,
            motion: self.motion.mirror(),
            alpha_init: wrap_angle(-self.alpha_init),
            speed: self.speed,
        }
    }
}

/// Pose on the circle at angular position `alpha`, heading along the
/// target's motion (tangent to the circle).
pub fn goal_pose_on_circle<T: Real>(circle: &TargetCircle<T>, alpha: T) -> PlanarPose<T> {
    let alpha = wrap_angle(alpha);
    let heading = alpha + circle.motion.sign::<T>() * T::FRAC_PI_2();
    PlanarPose::from_point(circle.point_at(alpha), heading)
}

/// Center of the turn circle of radius `radius` on the `dir` side of `pose`.
pub fn turn_center<T: Real>(pose: &PlanarPose<T>, dir: TurnDirection, radius: T) -> Point2<T> {
    pose.position() + dir.center_offset(pose.heading) * radius
}

/// Rigid motion taking world coordinates into a frame where some pose sits
/// at the origin heading along +x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidTransform<T> {
    pub origin: Point2<T>,
    pub rotation: T,
}

impl<T: Real> RigidTransform<T> {
    pub fn identity() -> Self {
        Self { origin: Point2::default(), rotation: T::zero() }
    }

    /// World to local.
    pub fn apply(&self, p: Point2<T>) -> Point2<T> {
        (p - self.origin).rotated(-self.rotation)
    }

    /// Local to world.
    pub fn invert(&self, p: Point2<T>) -> Point2<T> {
        p.rotated(self.rotation) + self.origin
    }

    pub fn apply_pose(&self, pose: &PlanarPose<T>) -> PlanarPose<T> {
        PlanarPose::from_point(self.apply(pose.position()), pose.heading - self.rotation)
    }

    pub fn invert_pose(&self, pose: &PlanarPose<T>) -> PlanarPose<T> {
        PlanarPose::from_point(self.invert(pose.position()), pose.heading + self.rotation)
    }
}

/// Expresses the circle in the frame where `start` is `(0, 0, 0)`.
pub fn canonicalize<T: Real>(
    start: &PlanarPose<T>,
    circle: &TargetCircle<T>,
) -> (RigidTransform<T>, TargetCircle<T>) {
    let xf = RigidTransform { origin: start.position(), rotation: start.heading };
    let local = TargetCircle {
        center: xf.apply(circle.center),
        alpha_init: wrap_angle(circle.alpha_init - xf.rotation),
        ..*circle
    };
    (xf, local)
}

/// Common tangent between two turn circles of equal radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tangent<T> {
    pub departure: Point2<T>,
    pub arrival: Point2<T>,
    pub heading: T,
    pub length: T,
}

/// Tangent segment leaving the `d1` circle at `c1` and joining the `d2`
/// circle at `c2`. Same-sense circles use the outer tangent, which always
/// exists; opposite senses use the inner tangent, which needs the centers at
/// least `2 * radius` apart.
pub fn tangent_segment<T: Real>(
    c1: Point2<T>,
    d1: TurnDirection,
    c2: Point2<T>,
    d2: TurnDirection,
    radius: T,
) -> Result<Tangent<T>> {
    let between = c2 - c1;
    let dist = between.norm();
    let center_heading = between.angle();
    let (heading, length) = if d1 == d2 {
        (center_heading, dist)
    } else {
        let two_r = radius + radius;
        let mut disc = dist * dist - two_r * two_r;
        if disc < T::zero() {
            if disc < -lit::<T>(1e-12) {
                return Err(PlanError::NoInnerTangent {
                    distance: dist.to_f64().unwrap_or(f64::NAN),
                    required: two_r.to_f64().unwrap_or(f64::NAN),
                });
            }
            disc = T::zero();
        }
        let offset = (two_r / dist).min(T::one()).asin();
        (center_heading + d1.sign::<T>() * offset, disc.sqrt())
    };
    let departure = c1 - d1.center_offset(heading) * radius;
    let arrival = c2 - d2.center_offset(heading) * radius;
    Ok(Tangent { departure, arrival, heading: wrap_angle(heading), length })
}

/// A complete CSC path with its anchor geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CscPath<T> {
    pub mode: PathMode,
    pub start: PlanarPose<T>,
    pub phi1: T,
    pub straight_len: T,
    pub phi2: T,
    pub turn_radius: T,
    pub first_center: Point2<T>,
    pub second_center: Point2<T>,
    /// Heading along the straight segment.
    pub line_heading: T,
    pub total_len: T,
}

impl<T: Real> CscPath<T> {
    pub fn first_arc_len(&self) -> T {
        self.turn_radius * self.phi1
    }

    pub fn second_arc_len(&self) -> T {
        self.turn_radius * self.phi2
    }

    /// Pose after travelling arc length `s` from the start, clamped to the
    /// path. Traced with unicycle kinematics rather than the tangent points.
    pub fn pose_at(&self, s: T) -> PlanarPose<T> {
        let s = s.max(T::zero()).min(self.total_len);
        let first = self.first_arc_len();
        let mid = first + self.straight_len;
        let r = self.turn_radius;
        if s <= first {
            return advance_arc(&self.start, self.mode.first_turn(), s, r);
        }
        let p1 = advance_arc(&self.start, self.mode.first_turn(), first, r);
        if s <= mid {
            return advance_straight(&p1, s - first);
        }
        let p2 = advance_straight(&p1, self.straight_len);
        advance_arc(&p2, self.mode.last_turn(), s - mid, r)
    }

    /// Traced pose at the end of each segment: after the first arc, after
    /// the straight, and at the goal.
    pub fn junctions(&self) -> [PlanarPose<T>; 3] {
        let r = self.turn_radius;
        let p1 = advance_arc(&self.start, self.mode.first_turn(), self.first_arc_len(), r);
        let p2 = advance_straight(&p1, self.straight_len);
        let p3 = advance_arc(&p2, self.mode.last_turn(), self.second_arc_len(), r);
        [p1, p2, p3]
    }

    pub fn end_pose(&self) -> PlanarPose<T> {
        self.junctions()[2]
    }

    /// `samples` poses spaced uniformly in arc length, first and last
    /// included, paired with their arc length.
    pub fn sample(&self, samples: usize) -> Vec<(T, PlanarPose<T>)> {
        assert!(samples >= 2, "need at least two samples");
        let step = self.total_len / lit::<T>((samples - 1) as f64);
        (0..samples)
            .map(|k| {
                let s = if k + 1 == samples { self.total_len } else { step * lit((k) as f64) };
                (s, self.pose_at(s))
            })
            .collect()
    }
}

fn advance_straight<T: Real>(pose: &PlanarPose<T>, dist: T) -> PlanarPose<T> {
    let p = pose.position() + pose.direction() * dist;
    PlanarPose { x: p.x, y: p.y, heading: pose.heading }
}

fn advance_arc<T: Real>(
    pose: &PlanarPose<T>,
    dir: TurnDirection,
    dist: T,
    radius: T,
) -> PlanarPose<T> {
    let center = turn_center(pose, dir, radius);
    let heading = pose.heading + dir.sign::<T>() * dist / radius;
    let p = center - dir.center_offset(heading) * radius;
    PlanarPose::from_point(p, heading)
}

/// Builds the `mode` CSC path from `start` to `goal` with turn radius `rho`.
pub fn csc_path<T: Real>(
    start: &PlanarPose<T>,
    goal: &PlanarPose<T>,
    rho: T,
    mode: PathMode,
) -> Result<CscPath<T>> {
    let first_center = turn_center(start, mode.first_turn(), rho);
    let second_center = turn_center(goal, mode.last_turn(), rho);
    let tangent = tangent_segment(first_center, mode.first_turn(), second_center, mode.last_turn(), rho)
        .map_err(|_| PlanError::Infeasible { mode })?;
    let phi1 = mode.first_turn().sweep(start.heading, tangent.heading);
    let phi2 = mode.last_turn().sweep(tangent.heading, goal.heading);
    Ok(CscPath {
        mode,
        start: *start,
        phi1,
        straight_len: tangent.length,
        phi2,
        turn_radius: rho,
        first_center,
        second_center,
        line_heading: tangent.heading,
        total_len: rho * phi1 + tangent.length + rho * phi2,
    })
}

/// All four modes from `start` to `goal`, in [`PathMode::ALL`] order.
pub fn all_modes<T: Real>(
    start: &PlanarPose<T>,
    goal: &PlanarPose<T>,
    rho: T,
) -> [Result<CscPath<T>>; 4] {
    PathMode::ALL.map(|mode| csc_path(start, goal, rho, mode))
}

/// Shortest feasible CSC path; ties keep the earlier mode.
pub fn shortest_csc<T: Real>(
    start: &PlanarPose<T>,
    goal: &PlanarPose<T>,
    rho: T,
) -> Option<CscPath<T>> {
    all_modes(start, goal, rho)
        .into_iter()
        .flatten()
        .fold(None, |best: Option<CscPath<T>>, p| match best {
            Some(b) if b.total_len <= p.total_len => Some(b),
            _ => Some(p),
        })
}

/// Shortest CSC path from `start` to the tangent pose at `alpha` on the
/// circle. Periodic in `alpha` with period 2π.
pub fn d_csc<T: Real>(
    start: &PlanarPose<T>,
    circle: &TargetCircle<T>,
    rho: T,
    alpha: T,
) -> Result<CscPath<T>> {
    let alpha = wrap_angle(alpha);
    let goal = goal_pose_on_circle(circle, alpha);
    shortest_csc(start, &goal, rho).ok_or(PlanError::AllModesInfeasible {
        alpha: alpha.to_f64().unwrap_or(f64::NAN),
    })
}

/// Per-mode paths to the tangent pose at `alpha`.
pub fn mode_paths_at<T: Real>(
    start: &PlanarPose<T>,
    circle: &TargetCircle<T>,
    rho: T,
    alpha: T,
) -> [Result<CscPath<T>>; 4] {
    all_modes(start, &goal_pose_on_circle(circle, alpha), rho)
}

/// Position and heading error between two poses.
pub fn pose_error<T: Real>(a: &PlanarPose<T>, b: &PlanarPose<T>) -> (T, T) {
    (a.position().distance(b.position()), signed_angle(a.heading - b.heading).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn cw_circle(cx: f64, cy: f64, r: f64) -> TargetCircle<f64> {
        TargetCircle::new(Point2::new(cx, cy), r, TurnDirection::Right, 0.0, 1.0).unwrap()
    }

    #[test]
    fn mirror_is_involution() {
        for d in [TurnDirection::Left, TurnDirection::Right] {
            assert_eq!(d.mirror().mirror(), d);
            assert_ne!(d.mirror(), d);
        }
        assert_eq!(PathMode::Lsl.mirror(), PathMode::Rsr);
        assert_eq!(PathMode::Lsr.mirror(), PathMode::Rsl);
        for m in PathMode::ALL {
            assert_eq!(m.mirror().mirror(), m);
            assert_eq!(m.mirror().first_turn(), m.first_turn().mirror());
            assert_eq!(m.as_str().parse::<PathMode>().unwrap(), m);
        }
    }

    #[test]
    fn pose_heading_is_normalized() {
        let p = PlanarPose::new(0.0, 0.0, -FRAC_PI_2);
        assert!(close(p.heading, 3.0 * FRAC_PI_2, 1e-15));
        assert_eq!(PlanarPose::new(1.0, 2.0, TAU).heading, 0.0);
    }

    #[test]
    fn turn_center_examples() {
        let o = PlanarPose::new(0.0, 0.0, 0.0);
        assert_eq!(turn_center(&o, TurnDirection::Left, 1.0), Point2::new(0.0, 1.0));
        assert_eq!(turn_center(&o, TurnDirection::Right, 1.0), Point2::new(0.0, -1.0));
        let c = turn_center(&PlanarPose::new(2.0, 3.0, FRAC_PI_2), TurnDirection::Left, 2.0);
        assert!(close(c.x, 0.0, 1e-15) && close(c.y, 3.0, 1e-15));
    }

    #[test]
    fn goal_pose_examples() {
        let c = cw_circle(-4.0, 3.0, 1.0);
        let g = goal_pose_on_circle(&c, 0.0);
        assert!(close(g.x, -3.0, 1e-15) && close(g.y, 3.0, 1e-15));
        assert!(close(g.heading, 3.0 * FRAC_PI_2, 1e-15));
        let g = goal_pose_on_circle(&c, PI);
        assert!(close(g.x, -5.0, 1e-15) && close(g.y, 3.0, 1e-15));
        assert!(close(g.heading, FRAC_PI_2, 1e-15));

        let ccw = TargetCircle::new(Point2::new(0.0, 0.0), 2.0, TurnDirection::Left, 0.0, 1.0).unwrap();
        let g = goal_pose_on_circle(&ccw, FRAC_PI_2);
        assert!(close(g.x, 0.0, 1e-15) && close(g.y, 2.0, 1e-15));
        assert!(close(g.heading, PI, 1e-15));
    }

    #[test]
    fn canonicalize_examples() {
        let c = cw_circle(-4.0, 3.0, 1.0);
        let (xf, local) = canonicalize(&PlanarPose::new(0.0, 0.0, 0.0), &c);
        assert_eq!(xf, RigidTransform::identity());
        assert_eq!(local, c);

        let (xf, local) = canonicalize(&PlanarPose::new(1.0, 0.0, 0.0), &cw_circle(-3.0, 3.0, 1.0));
        assert_eq!(xf.origin, Point2::new(1.0, 0.0));
        assert_eq!(local.center, Point2::new(-4.0, 3.0));

        let start = PlanarPose::new(0.0, 0.0, FRAC_PI_2);
        let (xf, local) = canonicalize(&start, &cw_circle(-3.0, -4.0, 1.0));
        assert!(close(local.center.x, -4.0, 1e-14) && close(local.center.y, 3.0, 1e-14));
        let back = xf.invert(local.center);
        assert!(close(back.x, -3.0, 1e-14) && close(back.y, -4.0, 1e-14));
        let s = xf.apply_pose(&start);
        assert!(s.x.abs() < 1e-15 && s.y.abs() < 1e-15 && s.heading == 0.0);
    }

    #[test]
    fn canonical_frame_preserves_goal_geometry() {
        let start = PlanarPose::new(2.0, -1.0, 2.2);
        let circle = TargetCircle::new(Point2::new(-5.0, 4.0), 1.5, TurnDirection::Left, 1.0, 1.0).unwrap();
        let (xf, local) = canonicalize(&start, &circle);
        for alpha in [0.0, 1.3, 4.0] {
            let world = goal_pose_on_circle(&circle, alpha);
            let canon = goal_pose_on_circle(&local, alpha - xf.rotation);
            let (dp, dh) = pose_error(&xf.invert_pose(&canon), &world);
            assert!(dp < 1e-12 && dh < 1e-12);
        }
    }

    #[test]
    fn tangent_examples() {
        let l = TurnDirection::Left;
        let r = TurnDirection::Right;
        let t = tangent_segment(Point2::new(0.0, 0.0), l, Point2::new(10.0, 0.0), l, 1.0).unwrap();
        assert!(close(t.length, 10.0, 1e-15) && t.heading == 0.0);

        let t = tangent_segment(Point2::new(0.0, 0.0), l, Point2::new(10.0, 0.0), r, 1.0).unwrap();
        assert!(close(t.length, 96.0_f64.sqrt(), 1e-14));
        assert!(close(t.length, 9.797958971132712, 1e-14));

        assert!(matches!(
            tangent_segment(Point2::new(0.0, 0.0), l, Point2::new(1.0, 0.0), r, 1.0),
            Err(PlanError::NoInnerTangent { .. })
        ));
    }

    #[test]
    fn tangent_grazing_is_clamped() {
        let t = tangent_segment(
            Point2::new(0.0, 0.0),
            TurnDirection::Right,
            Point2::new(2.0 - 1e-14, 0.0),
            TurnDirection::Left,
            1.0,
        )
        .unwrap();
        assert_eq!(t.length, 0.0);
    }

    #[test]
    fn tangent_touches_both_circles() {
        let c1 = Point2::new(0.3, -0.2);
        let c2 = Point2::new(-3.0, 5.0);
        for d1 in [TurnDirection::Left, TurnDirection::Right] {
            for d2 in [TurnDirection::Left, TurnDirection::Right] {
                let t = tangent_segment(c1, d1, c2, d2, 1.2).unwrap();
                let dir = Point2::from_angle(t.heading);
                assert!(close(t.departure.distance(c1), 1.2, 1e-12));
                assert!(close(t.arrival.distance(c2), 1.2, 1e-12));
                assert!(dir.dot(t.departure - c1).abs() < 1e-9);
                assert!(dir.dot(t.arrival - c2).abs() < 1e-9);
                assert!(close(t.departure.distance(t.arrival), t.length, 1e-12));
            }
        }
    }

    #[test]
    fn csc_examples() {
        let start = PlanarPose::new(0.0, 0.0, 0.0);
        let p = csc_path(&start, &PlanarPose::new(10.0, 0.0, 0.0), 1.0, PathMode::Lsl).unwrap();
        assert_eq!((p.phi1, p.phi2), (0.0, 0.0));
        assert!(close(p.straight_len, 10.0, 1e-15) && close(p.total_len, 10.0, 1e-15));

        let goal = goal_pose_on_circle(&cw_circle(-4.0, 3.0, 1.0), 0.0);
        let p = csc_path(&start, &goal, 1.0, PathMode::Lsr).unwrap();
        assert!(close(p.straight_len, 4.0, 1e-12));

        // left center of start at (0, 1); right center of goal at (1.5, 1)
        let goal = PlanarPose::new(1.5, 2.0, 0.0);
        assert_eq!(turn_center(&goal, TurnDirection::Right, 1.0), Point2::new(1.5, 1.0));
        assert_eq!(
            csc_path(&start, &goal, 1.0, PathMode::Lsr),
            Err(PlanError::Infeasible { mode: PathMode::Lsr })
        );
    }

    #[test]
    fn d_csc_is_periodic_and_picks_minimum() {
        let start = PlanarPose::new(0.0, 0.0, 0.0);
        let c = cw_circle(-4.0, 3.0, 1.0);
        for k in 0..50 {
            let a = k as f64 * 0.13;
            let base = d_csc(&start, &c, 1.0, a).unwrap();
            let shifted = d_csc(&start, &c, 1.0, a + TAU).unwrap();
            assert!(close(base.total_len, shifted.total_len, 1e-9));
            let exact = d_csc(&start, &c, 1.0, wrap_angle(a)).unwrap();
            assert_eq!(base, exact);
            let best = mode_paths_at(&start, &c, 1.0, a)
                .into_iter()
                .flatten()
                .map(|p| p.total_len)
                .fold(f64::INFINITY, f64::min);
            assert_eq!(best, base.total_len);
        }
    }

    #[test]
    fn ties_prefer_earlier_mode() {
        // straight ahead: LSL and RSR are both the bare segment
        let p = shortest_csc(&PlanarPose::new(0.0, 0.0, 0.0), &PlanarPose::new(10.0, 0.0, 0.0), 1.0).unwrap();
        assert_eq!(p.mode, PathMode::Lsl);
    }

    #[test]
    fn sample_spacing_is_uniform() {
        let goal = goal_pose_on_circle(&cw_circle(-4.0, 3.0, 1.0), 1.0);
        let p = csc_path(&PlanarPose::new(0.0, 0.0, 0.0), &goal, 1.0, PathMode::Rsl).unwrap();
        let pts = p.sample(101);
        assert_eq!(pts.len(), 101);
        assert_eq!(pts[0].1, p.start);
        for w in pts.windows(2) {
            assert!(close(w[1].0 - w[0].0, p.total_len / 100.0, 1e-9));
        }
        let (dp, dh) = pose_error(&pts[100].1, &goal);
        assert!(dp < 1e-9 && dh < 1e-9);
    }

    #[test]
    fn generic_over_f32() {
        let start = PlanarPose::<f32>::new(0.0, 0.0, 0.0);
        let c = TargetCircle::new(Point2::new(-4.0f32, 3.0), 1.0, TurnDirection::Right, 0.0, 1.0).unwrap();
        let p = d_csc(&start, &c, 1.0, 0.7).unwrap();
        let (dp, dh) = pose_error(&p.end_pose(), &goal_pose_on_circle(&c, 0.7));
        assert!(dp < 1e-4 && dh < 1e-4);
    }
}
