//! Interception of a target moving on a circle.
//!
//! The solver works on the travel parameter `beta`: the (unwrapped) angle
//! the target has swept from its initial position along its direction of
//! motion. Target travel time is then linear in `beta` while the pursuer
//! time is the shortest CSC length to the corresponding circle point, which
//! is bounded and 2π-periodic. The earliest crossing of the two is the
//! interception point.

use crate::dubins::{
    d_csc, goal_pose_on_circle, pose_error, turn_center, CscPath, PlanarPose, TargetCircle,
};
use crate::error::{PlanError, Result};
use crate::scalar::{count, lit, wrap_angle, Real};

/// Default tolerance on `|T_p - T_t|`, in seconds.
pub const DEFAULT_EPSILON: f64 = 1e-9;

const ALPHA_MIN_SCAN: usize = 4096;
const ALPHA_MIN_TOL: f64 = 1e-9;
const REFINE_SCAN: usize = 1024;
const MAX_SHIFTS: usize = 1_000_000;
const MAX_BISECTIONS: usize = 200;

/// A full interception problem instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario<T> {
    pub pursuer: PlanarPose<T>,
    /// Minimum turn radius of the pursuer.
    pub rho: T,
    pub v_p: T,
    pub circle: TargetCircle<T>,
    pub epsilon: T,
}

impl<T: Real> Scenario<T> {
    pub fn new(
        pursuer: PlanarPose<T>,
        rho: T,
        v_p: T,
        circle: TargetCircle<T>,
        epsilon: T,
    ) -> Result<Self> {
        for (name, v) in [("rho", rho), ("v_p", v_p), ("epsilon", epsilon)] {
            if !(v > T::zero()) || !v.is_finite() {
                return Err(PlanError::InvalidInput(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        if !pursuer.x.is_finite() || !pursuer.y.is_finite() || !pursuer.heading.is_finite() {
            return Err(PlanError::InvalidInput("pursuer pose must be finite".into()));
        }
        let circle = TargetCircle::new(
            circle.center,
            circle.radius,
            circle.motion,
            circle.alpha_init,
            circle.speed,
        )?;
        Ok(Self { pursuer, rho, v_p, circle, epsilon })
    }

    /// Every point of the target circle is more than `4ρ` from the pursuer,
    /// so the shortest path is certainly CSC.
    pub fn four_rho_ok(&self) -> bool {
        let d = self.pursuer.position().distance(self.circle.center);
        (d - self.circle.radius).abs() > lit::<T>(4.0) * self.rho
    }

    /// Reflection of the whole problem about the x-axis.
    pub fn mirrored(&self) -> Self {
        Self { pursuer: self.pursuer.mirrored(), circle: self.circle.mirrored(), ..*self }
    }

    /// Angular position reached after sweeping `beta` along the motion.
    pub fn alpha_at(&self, beta: T) -> T {
        wrap_angle(self.circle.alpha_init + self.circle.motion.sign::<T>() * beta)
    }

    /// Travel parameter at which the target reaches `alpha`, taken in
    /// `(0, 2π]`.
    pub fn first_beta_reaching(&self, alpha: T) -> T {
        let beta = wrap_angle(self.circle.motion.sign::<T>() * (alpha - self.circle.alpha_init));
        if beta > T::zero() {
            beta
        } else {
            T::TAU()
        }
    }

    pub fn path_at(&self, beta: T) -> Result<CscPath<T>> {
        d_csc(&self.pursuer, &self.circle, self.rho, self.alpha_at(beta))
    }

    pub fn pursuer_time(&self, beta: T) -> Result<T> {
        Ok(self.path_at(beta)?.total_len / self.v_p)
    }

    pub fn target_time(&self, beta: T) -> T {
        beta * self.circle.radius / self.circle.speed
    }

    /// `T_p - T_t`; positive while the target has not yet been caught.
    /// Points no CSC path reaches count as not yet caught.
    pub fn delta_t(&self, beta: T) -> T {
        match self.pursuer_time(beta) {
            Ok(tp) => tp - self.target_time(beta),
            Err(_) => T::infinity(),
        }
    }

    /// Target pose after `t` seconds.
    pub fn target_pose_at_time(&self, t: T) -> PlanarPose<T> {
        let beta = t * self.circle.speed / self.circle.radius;
        goal_pose_on_circle(&self.circle, self.alpha_at(beta))
    }
}

/// Search interval on the travel parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket<T> {
    pub lower: T,
    pub upper: T,
    /// Number of whole-lap shifts before the sign condition held.
    pub shifts: usize,
}

/// Result of the interception solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterceptSolution<T> {
    pub beta_star: T,
    pub alpha_star: T,
    pub t_star: T,
    /// Winning path, in world coordinates.
    pub path: CscPath<T>,
    pub residual: T,
    pub iterations: usize,
    pub bracket_shifts: usize,
    /// Whether the `4ρ` condition held, i.e. optimality is certified.
    pub certified: bool,
}

/// Global minimizer of the CSC length over `[0, 2π)`.
///
/// A uniform scan picks the best cell; golden-section search then refines
/// over that cell and its two neighbours.
pub fn find_alpha_min<T: Real>(scenario: &Scenario<T>) -> Result<T> {
    let len = |a: T| -> Result<T> {
        d_csc(&scenario.pursuer, &scenario.circle, scenario.rho, a).map(|p| p.total_len)
    };
    let step = T::TAU() / count(ALPHA_MIN_SCAN);
    let mut best = (T::zero(), T::infinity());
    let mut any_feasible = false;
    for k in 0..ALPHA_MIN_SCAN {
        let a = step * count(k);
        if let Ok(v) = len(a) {
            any_feasible = true;
            if v < best.1 {
                best = (a, v);
            }
        }
    }
    if !any_feasible {
        return len(T::zero()).map(|_| T::zero());
    }
    let objective = |a: T| len(a).unwrap_or(T::infinity());
    let refined = golden_section(objective, best.0 - step, best.0 + step, lit(ALPHA_MIN_TOL));
    let alpha = if objective(refined) <= best.1 { refined } else { best.0 };
    Ok(wrap_angle(alpha))
}

/// Minimizes `f` on `[lo, hi]` to an interval of width `tol`.
fn golden_section<T: Real>(f: impl Fn(T) -> T, mut lo: T, mut hi: T, tol: T) -> T {
    let inv_phi = (lit::<T>(5.0).sqrt() - T::one()) / lit(2.0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        x1
    } else {
        x2
    }
}

/// Bracket `[lower, upper]` with `delta_t(lower) > 0 >= delta_t(upper)`
/// around the earliest interception.
///
/// The upper end starts where the target first reaches the minimizer of the
/// pursuer's path length; whole laps are added until the sign condition
/// holds. A uniform scan then narrows the bracket to the cell holding the
/// first sign change, since the pursuer time is not monotone and the lap
/// can hold several crossings.
pub fn initial_bracket<T: Real>(scenario: &Scenario<T>) -> Result<Bracket<T>> {
    let alpha_min = find_alpha_min(scenario)?;
    let mut lower = T::zero();
    let mut upper = scenario.first_beta_reaching(alpha_min);
    let mut shifts = 0;
    while scenario.delta_t(lower) < T::zero() || scenario.delta_t(upper) > T::zero() {
        if shifts >= MAX_SHIFTS {
            return Err(PlanError::BracketOverflow { shifts });
        }
        lower = upper;
        upper = upper + T::TAU();
        shifts += 1;
    }

    // Scan points sit on a fixed lattice in beta so that the cell found does
    // not depend on where alpha_min landed.
    let cell = T::TAU() / count(REFINE_SCAN);
    let mut k = (lower / cell).floor() + T::one();
    let mut prev = (lower, scenario.delta_t(lower));
    loop {
        let beta = (k * cell).min(upper);
        let dt = scenario.delta_t(beta);
        if prev.1 > T::zero() && dt <= T::zero() {
            return Ok(Bracket { lower: prev.0, upper: beta, shifts });
        }
        if beta >= upper {
            break;
        }
        prev = (beta, dt);
        k = k + T::one();
    }
    Ok(Bracket { lower, upper, shifts })
}

/// Bisection on `delta_t` until `|T_p - T_t| <= epsilon`.
pub fn bisect<T: Real>(scenario: &Scenario<T>, bracket: &Bracket<T>) -> Result<InterceptSolution<T>> {
    let (beta, dt, iterations) =
        bisect_root(|b| scenario.delta_t(b), bracket.lower, bracket.upper, scenario.epsilon)?;
    Ok(InterceptSolution {
        beta_star: beta,
        alpha_star: scenario.alpha_at(beta),
        t_star: scenario.target_time(beta),
        path: scenario.path_at(beta)?,
        residual: dt.abs(),
        iterations,
        bracket_shifts: bracket.shifts,
        certified: scenario.four_rho_ok(),
    })
}

/// Halves `[lo, hi]` keeping `f(lo) > 0 >= f(hi)` until `|f| <= eps`.
/// Returns the point, its value and the number of evaluations made.
fn bisect_root<T: Real>(f: impl Fn(T) -> T, mut lo: T, mut hi: T, eps: T) -> Result<(T, T, usize)> {
    let fl = f(lo);
    let fu = f(hi);
    if !(fl > T::zero() && fu <= T::zero()) {
        return Err(PlanError::InvalidBracket {
            lower: fl.to_f64().unwrap_or(f64::NAN),
            upper: fu.to_f64().unwrap_or(f64::NAN),
        });
    }
    let (mut x, mut fx) = (hi, fu);
    let mut iterations = 0;
    while fx.abs() > eps && iterations < MAX_BISECTIONS {
        let mid = (lo + hi) / lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        x = mid;
        fx = f(mid);
        if fx > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if !(fx.abs() <= eps) {
        return Err(PlanError::NotConverged {
            residual: fx.abs().to_f64().unwrap_or(f64::NAN),
            iterations,
        });
    }
    Ok((x, fx, iterations))
}

/// Bracket then bisect.
pub fn solve<T: Real>(scenario: &Scenario<T>) -> Result<InterceptSolution<T>> {
    let bracket = initial_bracket(scenario)?;
    bisect(scenario, &bracket)
}

/// Outcome of re-checking a solution against the target's motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationReport<T> {
    /// Distance between the traced path end and the target at `t_star`.
    pub endpoint_error: T,
    pub heading_error: T,
    /// `|length / v_p - t_star|`.
    pub time_error: T,
    /// Arcs are at least the minimum turn radius and the traced junctions
    /// sit on their turn circles.
    pub curvature_ok: bool,
    pub endpoint_ok: bool,
    pub heading_ok: bool,
    pub time_ok: bool,
}

impl<T: Real> VerificationReport<T> {
    pub fn passed(&self) -> bool {
        self.endpoint_ok && self.heading_ok && self.time_ok && self.curvature_ok
    }

    /// Name of the first failing clause.
    pub fn failure(&self) -> Option<String> {
        if !self.endpoint_ok {
            Some(format!("endpoint off by {} m", self.endpoint_error))
        } else if !self.heading_ok {
            Some(format!("heading off by {} rad", self.heading_error))
        } else if !self.time_ok {
            Some(format!("travel times differ by {} s", self.time_error))
        } else if !self.curvature_ok {
            Some("curvature exceeds 1/rho".to_string())
        } else {
            None
        }
    }
}

/// Re-traces the solution path and measures it against the target.
pub fn check_interception<T: Real>(
    scenario: &Scenario<T>,
    solution: &InterceptSolution<T>,
) -> VerificationReport<T> {
    let pos_tol = lit::<T>(1e-6);
    let path = &solution.path;
    let [j1, j2, end] = path.junctions();
    let target = scenario.target_pose_at_time(solution.t_star);
    let (endpoint_error, heading_error) = pose_error(&end, &target);
    let time_error = (path.total_len / scenario.v_p - solution.t_star).abs();

    let r = path.turn_radius;
    let circle_tol = lit::<T>(1e-9) * (T::one() + r);
    let on_circle = |p: &PlanarPose<T>, c| (p.position().distance(c) - r).abs() <= circle_tol;
    let curvature_ok = r >= scenario.rho * (T::one() - lit(1e-12))
        && path.start == scenario.pursuer
        && turn_center(&path.start, path.mode.first_turn(), r).distance(path.first_center) <= circle_tol
        && on_circle(&j1, path.first_center)
        && on_circle(&j2, path.second_center)
        && on_circle(&end, path.second_center);

    VerificationReport {
        endpoint_error,
        heading_error,
        time_error,
        curvature_ok,
        endpoint_ok: endpoint_error <= pos_tol,
        heading_ok: heading_error <= pos_tol,
        time_ok: time_error <= scenario.epsilon,
    }
}

/// Like [`check_interception`], but any failing clause is an error.
pub fn verify_interception<T: Real>(
    scenario: &Scenario<T>,
    solution: &InterceptSolution<T>,
) -> Result<VerificationReport<T>> {
    let report = check_interception(scenario, solution);
    match report.failure() {
        None => Ok(report),
        Some(why) => Err(PlanError::VerificationFailed(why)),
    }
}
