//! Verification suites: each runs a batch of independent cases (in parallel
//! when available) and summarizes them as `{suite, cases, max_deviation, pass}`.
//!
//! Exact comparisons in rational mode report a deviation of zero or the
//! modulus of the difference; float comparisons report relative deviations.

mod algebra;
mod analytic;
pub mod oracles;
pub mod sample;

pub use algebra::{
    appc_table, closed_eigen, corollary, engines_xval, kappa_limit, kappa_limit_samples,
    permutations4, s4_symmetry, trig_limit, KappaLimitSample,
};
pub use analytic::{
    basis_structure, gegenbauer_generating, integrals, kernel, residual_points, specfun,
    tau_for, truncation_ratio, RatioSample,
};

use crate::error::Result;
use crate::exec::{par_map, Execution};
use crate::seriescore::{Scalar, ScalarMode};
use std::fmt;
use std::str::FromStr;

/// Named verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    JacobiLimit,
    Appc,
    EnginesXval,
    S4,
    Residual,
    Kernel,
    Basis,
    Eta1,
    Integrals,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::JacobiLimit,
        Suite::Appc,
        Suite::EnginesXval,
        Suite::S4,
        Suite::Residual,
        Suite::Kernel,
        Suite::Basis,
        Suite::Eta1,
        Suite::Integrals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::JacobiLimit => "jacobi-limit",
            Suite::Appc => "appc",
            Suite::EnginesXval => "engines-xval",
            Suite::S4 => "s4",
            Suite::Residual => "residual",
            Suite::Kernel => "kernel",
            Suite::Basis => "basis",
            Suite::Eta1 => "eta1",
            Suite::Integrals => "integrals",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite '{s}' (expected one of {})", names.join(", "))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Knobs shared by the suites; `None` picks the suite's own default.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub order: Option<usize>,
    pub q: Option<f64>,
    pub scalar: Option<ScalarMode>,
    /// Finite-difference step.
    pub h: f64,
    /// Relative tolerance for residual and kernel checks.
    pub residual_tol: f64,
    /// Number of random points, where a suite draws them.
    pub points: Option<usize>,
    pub seed: u64,
    pub exec: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            order: None,
            q: None,
            scalar: None,
            h: 1e-3,
            residual_tol: 1e-6,
            points: None,
            seed: 20_160_915,
            exec: Execution::default(),
        }
    }
}

impl VerifyConfig {
    pub(crate) fn points_or(&self, d: usize) -> usize {
        self.points.unwrap_or(d)
    }
}

/// One comparison inside a suite.
#[derive(Debug, Clone)]
pub struct Case {
    pub label: String,
    pub deviation: f64,
    pub tol: f64,
    /// Controls must exceed `tol`; they show a check can fail.
    pub control: bool,
    pub error: Option<String>,
}

impl Case {
    pub fn new(label: impl Into<String>, deviation: f64, tol: f64) -> Self {
        Case {
            label: label.into(),
            deviation,
            tol,
            control: false,
            error: None,
        }
    }

    pub fn control(label: impl Into<String>, deviation: f64, tol: f64) -> Self {
        Case {
            control: true,
            ..Case::new(label, deviation, tol)
        }
    }

    pub fn failed(label: impl Into<String>, err: impl fmt::Display) -> Self {
        Case {
            error: Some(err.to_string()),
            ..Case::new(label, f64::NAN, 0.0)
        }
    }

    pub fn pass(&self) -> bool {
        self.error.is_none()
            && if self.control {
                self.deviation > self.tol
            } else {
                self.deviation <= self.tol
            }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.error {
            Some(e) => write!(f, "{}: error: {e}", self.label),
            None => {
                let rel = if self.control { ">" } else { "<=" };
                write!(f, "{}: deviation {:.3e} (want {rel} {:.1e})", self.label, self.deviation, self.tol)
            }
        }
    }
}

/// Summary of a suite run.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    /// Largest deviation over the non-control cases that ran.
    pub max_deviation: f64,
    pub pass: bool,
    /// Descriptions of failing cases.
    pub failures: Vec<String>,
}

impl Report {
    pub fn from_cases(suite: impl Into<String>, cases: &[Case]) -> Self {
        let max_deviation = cases
            .iter()
            .filter(|c| !c.control && c.error.is_none())
            .map(|c| c.deviation)
            .fold(0.0, f64::max);
        let failures: Vec<String> = cases.iter().filter(|c| !c.pass()).map(|c| c.to_string()).collect();
        Report {
            suite: suite.into(),
            cases: cases.len(),
            max_deviation,
            pass: failures.is_empty() && !cases.is_empty(),
            failures,
        }
    }

    /// Merge several reports under one name.
    pub fn combine(suite: impl Into<String>, parts: &[Report]) -> Self {
        Report {
            suite: suite.into(),
            cases: parts.iter().map(|r| r.cases).sum(),
            max_deviation: parts.iter().map(|r| r.max_deviation).fold(0.0, f64::max),
            pass: !parts.is_empty() && parts.iter().all(|r| r.pass),
            failures: parts.iter().flat_map(|r| r.failures.clone()).collect(),
        }
    }
}

/// A unit of work producing one or more cases.
pub(crate) type Job = Box<dyn Fn() -> Vec<Case> + Send + Sync>;

pub(crate) fn job<F>(label: impl Into<String>, f: F) -> Job
where
    F: Fn() -> Result<Vec<Case>> + Send + Sync + 'static,
{
    let label = label.into();
    Box::new(move || f().unwrap_or_else(|e| vec![Case::failed(label.clone(), e)]))
}

pub(crate) fn run_jobs(suite: &str, exec: Execution, jobs: Vec<Job>) -> Report {
    let cases: Vec<Case> = par_map(exec, &jobs, |j| j()).into_iter().flatten().collect();
    Report::from_cases(suite, &cases)
}

/// Zero when equal in exact mode, otherwise the relative difference.
pub(crate) fn deviation<S: Scalar>(a: &S, b: &S) -> f64 {
    if S::EXACT {
        if a == b {
            0.0
        } else {
            (a.clone() - b.clone()).modulus().max(f64::MIN_POSITIVE)
        }
    } else {
        (a.clone() - b.clone()).modulus() / b.modulus().max(1.0)
    }
}

/// Tolerance for a comparison that is exact in rational mode.
pub(crate) fn tol_for<S: Scalar>(float_tol: f64) -> f64 {
    if S::EXACT {
        0.0
    } else {
        float_tol
    }
}

/// Run a named suite.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    let r = match suite {
        Suite::JacobiLimit => trig_limit(cfg),
        Suite::Appc => Report::combine(suite.name(), &[closed_eigen(cfg), appc_table(cfg)]),
        Suite::EnginesXval => Report::combine(suite.name(), &[engines_xval(cfg), kappa_limit(cfg)]),
        Suite::S4 => s4_symmetry(cfg),
        Suite::Residual => residual_points(cfg),
        Suite::Kernel => kernel(cfg),
        Suite::Basis => {
            Report::combine(suite.name(), &[basis_structure(cfg), gegenbauer_generating(cfg)])
        }
        Suite::Eta1 => specfun(cfg),
        Suite::Integrals => Report::combine(suite.name(), &[corollary(cfg), integrals(cfg)]),
    };
    Ok(Report { suite: suite.name().to_string(), ..r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn controls_invert_the_test() {
        assert!(Case::control("c", 1.0, 0.5).pass());
        assert!(!Case::control("c", 0.0, 0.5).pass());
        assert!(!Case::failed("e", "boom").pass());
        let r = Report::from_cases("x", &[Case::new("a", 1e-3, 1e-2), Case::control("b", 7.0, 0.0)]);
        assert!(r.pass);
        assert_eq!(r.max_deviation, 1e-3);
    }

    #[test]
    fn empty_report_fails() {
        assert!(!Report::from_cases("x", &[]).pass);
    }
}
