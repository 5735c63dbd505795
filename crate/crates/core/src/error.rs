use thiserror::Error;

use crate::dubins::PathMode;

/// Errors raised by path construction and the interception solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlanError {
    /// The inner tangent of an opposite-turn mode does not exist.
    #[error("{mode} is infeasible: turn circles are closer than two turn radii")]
    Infeasible { mode: PathMode },

    /// Inner tangent requested between circles closer than two radii.
    #[error("inner tangent does not exist: center distance {distance} < {required}")]
    NoInnerTangent { distance: f64, required: f64 },

    #[error("no CSC mode is feasible at alpha = {alpha}")]
    AllModesInfeasible { alpha: f64 },

    #[error("no transition angle found: {what} never changes sign on [0, 2pi)")]
    NoTransition { what: &'static str },

    #[error("bracket search gave up after {shifts} shifts")]
    BracketOverflow { shifts: usize },

    #[error("invalid bracket: delta_t(lower) = {lower}, delta_t(upper) = {upper}")]
    InvalidBracket { lower: f64, upper: f64 },

    #[error("bisection stalled with residual {residual} s after {iterations} iterations")]
    NotConverged { residual: f64, iterations: usize },

    #[error("interception check failed: {0}")]
    VerificationFailed(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = PlanError> = std::result::Result<T, E>;
