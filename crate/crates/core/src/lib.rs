//! Shortest curvature-constrained interception of a target moving on a
//! circle.
//!
//! A pursuer with a minimum turn radius must reach a point of a circle,
//! tangent to it, at the same instant as a target travelling along that
//! circle at constant speed. Paths are Dubins CSC curves (arc, straight,
//! arc); the earliest point where the pursuer's travel time equals the
//! target's is found by bracketing and bisection.
//!
//! Everything is generic over the scalar through [`Real`]; the aliases
//! below fix it to `f64`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closed_form;
pub mod dubins;
pub mod error;
pub mod intercept;
pub mod scalar;
pub mod scenario;

pub use dubins::{PathMode, TurnDirection};
pub use error::{PlanError, Result};
pub use scalar::{wrap_angle, Real};

pub type Point = dubins::Point2<f64>;
pub type Pose = dubins::PlanarPose<f64>;
pub type Circle = dubins::TargetCircle<f64>;
pub type Path = dubins::CscPath<f64>;
pub type Scene = closed_form::EqualRadiusScene<f64>;
pub type Segments = closed_form::SegmentTriple<f64>;
pub type Scenario = intercept::Scenario<f64>;
pub type Solution = intercept::InterceptSolution<f64>;
pub type Verification = intercept::VerificationReport<f64>;

pub type Pose32 = dubins::PlanarPose<f32>;
pub type Scenario32 = intercept::Scenario<f32>;
