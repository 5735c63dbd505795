#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use circle_intercept::closed_form::EqualRadiusScene;
use circle_intercept::dubins::{PlanarPose, Point2, TargetCircle, TurnDirection};
use circle_intercept::intercept::{Scenario, DEFAULT_EPSILON};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pursuer at the origin, heading 0, target circle of radius 1 around
/// (-4, 3) starting at alpha = pi, v_p = 1, v_t = 1.2.
pub fn worked_scenario() -> Scenario<f64> {
    let circle =
        TargetCircle::new(Point2::new(-4.0, 3.0), 1.0, TurnDirection::Right, PI, 1.2).unwrap();
    Scenario::new(PlanarPose::new(0.0, 0.0, 0.0), 1.0, 1.0, circle, DEFAULT_EPSILON).unwrap()
}

/// Clockwise equal-radius scene whose circle stays more than 4 rho from
/// the origin.
pub fn random_scene(rng: &mut impl Rng) -> EqualRadiusScene<f64> {
    let rho = rng.random_range(0.5..2.0);
    let dist = rho * rng.random_range(5.05..15.0);
    let dir = rng.random_range(0.0..TAU);
    let scene = EqualRadiusScene::new(dist * dir.cos(), dist * dir.sin(), rho).unwrap();
    assert!(scene.four_rho_ok());
    scene
}

pub fn random_pose(rng: &mut impl Rng, extent: f64) -> PlanarPose<f64> {
    PlanarPose::new(
        rng.random_range(-extent..extent),
        rng.random_range(-extent..extent),
        rng.random_range(0.0..TAU),
    )
}

/// General scenario (any pose, unequal radii, either direction) satisfying
/// the 4 rho condition.
pub fn random_scenario(rng: &mut impl Rng) -> Scenario<f64> {
    let pursuer = random_pose(rng, 5.0);
    let rho = rng.random_range(0.5..1.5);
    let r_t = rng.random_range(0.5..3.0);
    let gap = rng.random_range(4.05 * rho..4.0 * rho + 6.0);
    let dir = rng.random_range(0.0..TAU);
    let center = pursuer.position() + Point2::from_angle(dir) * (r_t + gap);
    let motion = if rng.random_bool(0.5) { TurnDirection::Right } else { TurnDirection::Left };
    let v_p = rng.random_range(0.5..2.0);
    let v_t = v_p * rng.random_range(0.2..1.5);
    let circle =
        TargetCircle::new(center, r_t, motion, rng.random_range(0.0..TAU), v_t).unwrap();
    let s = Scenario::new(pursuer, rho, v_p, circle, DEFAULT_EPSILON).unwrap();
    assert!(s.four_rho_ok());
    s
}

/// Largest difference between cyclically adjacent samples.
pub fn max_adjacent_jump(values: &[f64]) -> f64 {
    let n = values.len();
    (0..n).map(|k| (values[(k + 1) % n] - values[k]).abs()).fold(0.0, f64::max)
}
