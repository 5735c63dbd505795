//! Scenario files, solution reports and the tabular outputs behind the
//! command-line tool.
//!
//! Scenarios and reports are TOML. Tables are comma separated with a header
//! row, `\n` line endings and 17 significant digits per float.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dubins::{d_csc, mode_paths_at, PlanarPose, Point2, TargetCircle, TurnDirection};
use crate::error::PlanError;
use crate::intercept::{check_interception, solve, DEFAULT_EPSILON};
use crate::{Scenario, Solution, Verification};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("scenario error: {0}")]
    Parse(String),
    #[error(transparent)]
    Plan(#[from] PlanError),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Parse(_) | Self::Plan(PlanError::InvalidInput(_)) => 2,
            Self::Plan(PlanError::AllModesInfeasible { .. }) => 3,
            Self::Plan(_) | Self::Verification(_) => 4,
            Self::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PursuerSpec {
    pub x: f64,
    pub y: f64,
    pub heading_rad: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleSpec {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
    /// `"cw"` or `"ccw"`.
    pub direction: String,
    pub alpha_init_rad: f64,
}

/// On-disk form of a [`Scenario`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub rho: f64,
    pub v_p: f64,
    pub v_t: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    pub pursuer: PursuerSpec,
    pub circle: CircleSpec,
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: Self = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        file.validate()?;
        Ok(file)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenario serializes")
    }

    fn validate(&self) -> Result<(), CliError> {
        let fields = [
            ("rho", self.rho),
            ("v_p", self.v_p),
            ("v_t", self.v_t),
            ("epsilon", self.epsilon.unwrap_or(DEFAULT_EPSILON)),
            ("pursuer.x", self.pursuer.x),
            ("pursuer.y", self.pursuer.y),
            ("pursuer.heading_rad", self.pursuer.heading_rad),
            ("circle.cx", self.circle.cx),
            ("circle.cy", self.circle.cy),
            ("circle.r", self.circle.r),
            ("circle.alpha_init_rad", self.circle.alpha_init_rad),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(CliError::Parse(format!("{name} must be finite, got {v}")));
            }
        }
        self.motion()?;
        Ok(())
    }

    fn motion(&self) -> Result<TurnDirection, CliError> {
        match self.circle.direction.as_str() {
            "cw" => Ok(TurnDirection::Right),
            "ccw" => Ok(TurnDirection::Left),
            other => Err(CliError::Parse(format!(
                "circle.direction must be \"cw\" or \"ccw\", got {other:?}"
            ))),
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon.unwrap_or(DEFAULT_EPSILON)
    }

    pub fn to_scenario(&self) -> Result<Scenario, CliError> {
        self.validate()?;
        let circle = TargetCircle::new(
            Point2::new(self.circle.cx, self.circle.cy),
            self.circle.r,
            self.motion()?,
            self.circle.alpha_init_rad,
            self.v_t,
        )
        .map_err(|e| CliError::Parse(e.to_string()))?;
        let pursuer = PlanarPose::new(self.pursuer.x, self.pursuer.y, self.pursuer.heading_rad);
        Scenario::new(pursuer, self.rho, self.v_p, circle, self.epsilon())
            .map_err(|e| CliError::Parse(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionSection {
    /// `"VERIFIED"` or `"FAILED"`.
    pub status: String,
    pub four_rho_ok: bool,
    pub alpha_star: f64,
    pub beta_star: f64,
    pub t_star: f64,
    pub mode: String,
    pub phi1: f64,
    pub straight_len: f64,
    pub phi2: f64,
    pub total_len: f64,
    pub residual: f64,
    pub iterations: usize,
    pub bracket_shifts: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationSection {
    pub passed: bool,
    pub endpoint_error: f64,
    pub heading_error: f64,
    pub time_error: f64,
    pub curvature_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Everything `solve` writes: the scenario it ran, the answer, and the
/// independent check of that answer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub scenario: ScenarioFile,
    pub solution: SolutionSection,
    pub verification: VerificationSection,
}

impl SolutionReport {
    pub fn build(file: &ScenarioFile, sol: &Solution, check: &Verification) -> Self {
        let mut scenario = file.clone();
        scenario.epsilon = Some(file.epsilon());
        let passed = check.passed();
        Self {
            scenario,
            solution: SolutionSection {
                status: if passed { "VERIFIED" } else { "FAILED" }.to_string(),
                four_rho_ok: sol.certified,
                alpha_star: sol.alpha_star,
                beta_star: sol.beta_star,
                t_star: sol.t_star,
                mode: sol.path.mode.to_string(),
                phi1: sol.path.phi1,
                straight_len: sol.path.straight_len,
                phi2: sol.path.phi2,
                total_len: sol.path.total_len,
                residual: sol.residual,
                iterations: sol.iterations,
                bracket_shifts: sol.bracket_shifts,
            },
            verification: VerificationSection {
                passed,
                endpoint_error: check.endpoint_error,
                heading_error: check.heading_error,
                time_error: check.time_error,
                curvature_ok: check.curvature_ok,
                failure: check.failure(),
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.verification.passed
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("report serializes")
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }
}

/// Solves the scenario and checks the answer. A failed check still yields
/// a report, marked `FAILED`.
pub fn solve_report(file: &ScenarioFile) -> Result<(SolutionReport, Solution), CliError> {
    let scenario = file.to_scenario()?;
    let sol = solve(&scenario)?;
    let check = check_interception(&scenario, &sol);
    Ok((SolutionReport::build(file, &sol, &check), sol))
}

/// Float cell with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt_cell(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

/// Per-mode and minimum CSC lengths on `n` uniform angular positions.
pub fn curves_table(scenario: &Scenario, n: usize) -> Result<String, CliError> {
    if n < 2 {
        return Err(CliError::Parse(format!("grid size must be >= 2, got {n}")));
    }
    let mut out = String::from("alpha,D_LSL,D_LSR,D_RSL,D_RSR,D_CSC,mode\n");
    for k in 0..n {
        let alpha = std::f64::consts::TAU * k as f64 / n as f64;
        let modes = mode_paths_at(&scenario.pursuer, &scenario.circle, scenario.rho, alpha);
        let best = d_csc(&scenario.pursuer, &scenario.circle, scenario.rho, alpha)?;
        out.push_str(&fmt_f64(alpha));
        for m in &modes {
            out.push(',');
            out.push_str(&opt_cell(m.as_ref().ok().map(|p| p.total_len)));
        }
        let _ = writeln!(out, ",{},{}", fmt_f64(best.total_len), best.mode);
    }
    Ok(out)
}

/// Travel times on `n` points of `beta` in `[0, beta_max]`.
pub fn times_table(scenario: &Scenario, beta_max: f64, n: usize) -> Result<String, CliError> {
    if n < 2 {
        return Err(CliError::Parse(format!("grid size must be >= 2, got {n}")));
    }
    if !(beta_max > 0.0) || !beta_max.is_finite() {
        return Err(CliError::Parse(format!("beta-max must be > 0, got {beta_max}")));
    }
    let mut out = String::from("beta,alpha,T_p,T_t,delta_t\n");
    for k in 0..n {
        let beta = if k + 1 == n { beta_max } else { beta_max * k as f64 / (n - 1) as f64 };
        let tp = scenario.pursuer_time(beta).ok();
        let tt = scenario.target_time(beta);
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt_f64(beta),
            fmt_f64(scenario.alpha_at(beta)),
            opt_cell(tp),
            fmt_f64(tt),
            opt_cell(tp.map(|t| t - tt)),
        );
    }
    Ok(out)
}

/// `m` arc-length-uniform samples of the verified interception path, with
/// the target sampled at the same instants.
pub fn path_table(scenario: &Scenario, m: usize) -> Result<String, CliError> {
    if m < 2 {
        return Err(CliError::Parse(format!("sample count must be >= 2, got {m}")));
    }
    let sol = solve(scenario)?;
    if let Some(why) = check_interception(scenario, &sol).failure() {
        return Err(CliError::Verification(why));
    }
    let mut out = String::from("s,x,y,heading,t,target_x,target_y,target_heading\n");
    for (s, pose) in sol.path.sample(m) {
        let t = s / scenario.v_p;
        let target = scenario.target_pose_at_time(t);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt_f64(s),
            fmt_f64(pose.x),
            fmt_f64(pose.y),
            fmt_f64(pose.heading),
            fmt_f64(t),
            fmt_f64(target.x),
            fmt_f64(target.y),
            fmt_f64(target.heading),
        );
    }
    Ok(out)
}
