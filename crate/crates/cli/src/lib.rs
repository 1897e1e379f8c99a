//! Verification suites and expression expansion behind the `skein` binary.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use skein_core::families::{
    big_x, sigma, sigma_by_definition, x1_t_closed, x1y1_recursive, x1y1_t_by_recursion, y1_t_closed,
};
use skein_core::handlebody::{Basis, HbElement};
use skein_core::qtorus::{
    homogenizing_factor, inhomog_recurrence, qt_apply, qt_mul, recurrence_poly, t1_factor_check,
};
use skein_core::torusknot::{
    handle_slide_residual, induction_residual, rt_recursion_residual, telescope_residual, Convention,
    JonesSequence, KnotModule, TkElement,
};
use skein_core::SkeinError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite {0:?} (expected one of: {list})", list = Suite::NAMES.join(", "))]
    UnknownSuite(String),
    #[error("unknown family {0:?} (expected one of: {list})", list = Family::NAMES.join(", "))]
    UnknownFamily(String),
    #[error("{0} must be positive, got {1}")]
    NonPositiveBound(&'static str, i64),
    #[error("index {0} is out of range for this family")]
    IndexOutOfRange(i64),
    #[error("reduce needs a knot parameter (--p)")]
    MissingKnotParameter,
    #[error("reduced torus-knot elements are only available in the chebyshev basis")]
    ReduceBasis,
    #[error(transparent)]
    Skein(#[from] SkeinError),
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Families,
    HandleSlide,
    Telescope,
    RtRecursion,
    Qtorus,
    T1Factor,
}

impl Suite {
    pub const NAMES: [&'static str; 7] =
        ["all", "families", "handle-slide", "telescope", "rt-recursion", "qtorus", "t1-factor"];
    const ALL: [Suite; 7] = [
        Suite::All,
        Suite::Families,
        Suite::HandleSlide,
        Suite::Telescope,
        Suite::RtRecursion,
        Suite::Qtorus,
        Suite::T1Factor,
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES[Self::ALL.iter().position(|s| *s == self).unwrap()]
    }

    fn native_convention(self) -> Convention {
        match self {
            Suite::RtRecursion | Suite::Qtorus => Convention::Rt,
            _ => Convention::Kbsm,
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        Self::NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| Self::ALL[i])
            .ok_or_else(|| CliError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub p_max: u32,
    pub n_max: u32,
    /// Overrides each suite's own convention when set.
    pub convention: Option<Convention>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub check: String,
    pub p: Option<u32>,
    pub n: Option<i64>,
    pub pass: bool,
    /// The nonzero difference, serialized, when the check fails.
    pub residual: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub grid: Grid,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.failures() {
            write!(f, "FAIL {} {}", c.suite, c.check)?;
            if let Some(p) = c.p {
                write!(f, " p={p}")?;
            }
            if let Some(n) = c.n {
                write!(f, " n={n}")?;
            }
            writeln!(f)?;
            if let Some(r) = &c.residual {
                writeln!(f, "  residual: {r}")?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        write!(
            f,
            "{}: {passed}/{} checks passed (p <= {}, n <= {}) in {} ms",
            self.suite,
            self.checks.len(),
            self.grid.p_max,
            self.grid.n_max,
            self.elapsed_ms
        )
    }
}

type Task = Box<dyn Fn() -> CheckResult + Send + Sync>;

fn hb_check(check: &str, n: i64, lhs: HbElement, rhs: HbElement) -> CheckResult {
    let diff = &lhs - &rhs;
    CheckResult {
        suite: Suite::Families,
        check: check.to_string(),
        p: None,
        n: Some(n),
        pass: diff.is_zero(),
        residual: (!diff.is_zero()).then(|| serde_json::to_value(&diff).expect("serializable")),
    }
}

fn tk_check(suite: Suite, check: &str, p: u32, n: Option<i64>, residual: TkElement) -> CheckResult {
    let pass = residual.is_zero();
    CheckResult {
        suite,
        check: check.to_string(),
        p: Some(p),
        n,
        pass,
        residual: (!pass)
            .then(|| serde_json::to_value(&residual).unwrap_or_else(|_| residual.to_string().into())),
    }
}

fn family_tasks(n_max: u32) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    for n in 1..=n_max as i64 {
        tasks.push(Box::new(move || {
            hb_check("x1-t-closed", n, x1_t_closed(n).unwrap(), x1y1_t_by_recursion(n as u32).xpart)
        }));
        tasks.push(Box::new(move || {
            hb_check("y1-t-closed", n, y1_t_closed(n).unwrap(), x1y1_t_by_recursion(n as u32).ypart)
        }));
        tasks
            .push(Box::new(move || hb_check("sigma", n, sigma(n).unwrap(), sigma_by_definition(n).unwrap())));
    }
    for i in 0..=n_max {
        tasks.push(Box::new(move || {
            hb_check("x-i-closed", i as i64, skein_core::families::big_x_closed(i), big_x(i))
        }));
    }
    tasks
}

fn knot_tasks(suite: Suite, grid: &Grid) -> Result<Vec<Task>> {
    let conv = grid.convention.unwrap_or(suite.native_convention());
    let n_max = grid.n_max as i64;
    let mut tasks: Vec<Task> = Vec::new();
    for p in 1..=grid.p_max {
        let m = KnotModule::new(p as i64, conv)?;
        let pi = p as i64;
        match suite {
            Suite::HandleSlide => {
                for n in 1..=(2 * pi + 4).min(n_max) {
                    tasks.push(Box::new(move || {
                        tk_check(suite, "handle-slide", p, Some(n), handle_slide_residual(&m, n as u32))
                    }));
                }
            }
            Suite::Telescope => {
                for n in 0..=(2 * pi + 4).min(n_max) {
                    tasks.push(Box::new(move || {
                        tk_check(suite, "telescope", p, Some(n), telescope_residual(&m, n))
                    }));
                    tasks.push(Box::new(move || {
                        tk_check(suite, "induction", p, Some(n), induction_residual(&m, n))
                    }));
                }
            }
            Suite::RtRecursion => {
                for n in -(pi + 2)..=(2 * pi + 3).min(n_max) {
                    tasks.push(Box::new(move || {
                        tk_check(suite, "rt-recursion", p, Some(n), rt_recursion_residual(&m, n))
                    }));
                }
            }
            Suite::Qtorus => {
                tasks.push(Box::new(move || {
                    let prod = qt_mul(&homogenizing_factor(p), &inhomog_recurrence(p));
                    let pass = prod == recurrence_poly(p);
                    CheckResult {
                        suite,
                        check: "product-identity".into(),
                        p: Some(p),
                        n: None,
                        pass,
                        residual: None,
                    }
                }));
                let f = JonesSequence::new(pi, conv)?;
                for n in -(pi + 2)..=(2 * pi + 3).min(n_max) {
                    tasks.push(Box::new(move || {
                        tk_check(
                            suite,
                            "annihilate-six-term",
                            p,
                            Some(n),
                            qt_apply(&inhomog_recurrence(p), &f, n),
                        )
                    }));
                    tasks.push(Box::new(move || {
                        tk_check(
                            suite,
                            "annihilate-recurrence",
                            p,
                            Some(n),
                            qt_apply(&recurrence_poly(p), &f, n),
                        )
                    }));
                }
            }
            Suite::T1Factor => {
                tasks.push(Box::new(move || CheckResult {
                    suite,
                    check: "t1-factor".into(),
                    p: Some(p),
                    n: None,
                    pass: t1_factor_check(p),
                    residual: None,
                }));
            }
            Suite::All | Suite::Families => unreachable!("not a knot suite"),
        }
    }
    Ok(tasks)
}

fn check_bound(name: &'static str, v: i64) -> Result<u32> {
    match u32::try_from(v) {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(CliError::NonPositiveBound(name, v)),
    }
}

/// Runs a suite over `1 <= p <= p_max` and the suite's `n`-window cut at
/// `n_max`. Checks are evaluated in parallel on the current rayon pool and
/// reported in a fixed order.
pub fn cmd_verify(
    suite: Suite,
    p_max: i64,
    n_max: i64,
    convention: Option<Convention>,
) -> Result<VerificationReport> {
    let grid = Grid { p_max: check_bound("p-max", p_max)?, n_max: check_bound("n-max", n_max)?, convention };
    let start = Instant::now();
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::ALL[1..].to_vec(),
        s => vec![s],
    };
    let mut tasks = Vec::new();
    for s in suites {
        match s {
            Suite::Families => tasks.extend(family_tasks(grid.n_max)),
            s => tasks.extend(knot_tasks(s, &grid)?),
        }
    }
    let checks: Vec<CheckResult> = tasks.par_iter().map(|t| t()).collect();
    Ok(VerificationReport { suite, grid, checks, elapsed_ms: start.elapsed().as_millis() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `X_1*y^n`
    X,
    /// `Y_1*y^n`
    Y,
    /// `X_1*T_n(y)`
    XT,
    /// `Y_1*T_n(y)`
    YT,
    Sigma,
    /// `X_i`
    Xi,
    /// `S_N(y)` reduced in the torus-knot module
    Reduce,
}

impl Family {
    pub const NAMES: [&'static str; 7] = ["X", "Y", "XT", "YT", "sigma", "Xi", "reduce"];
    const ALL: [Family; 7] =
        [Family::X, Family::Y, Family::XT, Family::YT, Family::Sigma, Family::Xi, Family::Reduce];
}

impl FromStr for Family {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        Self::NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| Self::ALL[i])
            .ok_or_else(|| CliError::UnknownFamily(s.to_string()))
    }
}

fn nonneg(n: i64) -> Result<u32> {
    u32::try_from(n).map_err(|_| CliError::IndexOutOfRange(n))
}

/// The requested element as canonical JSON. `p` and `convention` are used
/// only by [`Family::Reduce`].
pub fn cmd_expand(
    family: Family,
    n: i64,
    basis: Basis,
    p: Option<i64>,
    convention: Convention,
) -> Result<Value> {
    let hb = match family {
        Family::Reduce => {
            if basis != Basis::Chebyshev {
                return Err(CliError::ReduceBasis);
            }
            let p = p.ok_or(CliError::MissingKnotParameter)?;
            let m = KnotModule::new(p, convention)?;
            return Ok(serde_json::to_value(m.s_y(n)).expect("named convention"));
        }
        Family::X => x1y1_recursive(nonneg(n)?).xpart,
        Family::Y => x1y1_recursive(nonneg(n)?).ypart,
        Family::XT => x1_t_closed(n)?,
        Family::YT => y1_t_closed(n)?,
        Family::Sigma => sigma(n)?,
        Family::Xi => big_x(nonneg(n)?),
    };
    Ok(serde_json::to_value(hb.convert(basis)).expect("serializable"))
}
