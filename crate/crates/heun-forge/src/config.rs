//! Validated run configuration.

use crate::args::{Args, Command, Format};
use crate::error::{CliError, CliResult};
use crate::value::{parse_complex, parse_g, parse_value, Value};
use heun_core::exec::Execution;
use heun_core::seriescore::{tolerance, Rational, ScalarMode, C64};
use heun_core::solution::Mode;
use heun_core::specfun::Nome;
use heun_core::verify::Suite;
use heun_core::Params;
use num_traits::Zero;

/// Couplings in the field the computation will run in.
#[derive(Debug, Clone)]
pub enum ParamSet {
    Exact(Params<Rational>),
    Complex(Params<C64>),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub n: i64,
    pub params: Option<ParamSet>,
    pub order: usize,
    pub mode: Mode,
    pub scalar: Option<ScalarMode>,
    pub format: Format,
    pub tau: Option<C64>,
    pub x: Option<C64>,
    pub omega1: Option<C64>,
    pub suite: Option<Suite>,
    pub fd_step: f64,
    pub residual: bool,
    pub timing: bool,
    pub exec: Execution,
    /// Order and nome exactly as given, for `verify`.
    pub order_given: Option<usize>,
    pub q_given: Option<f64>,
}

const DEFAULT_ORDER: usize = 8;

fn positive(name: &str, v: Option<f64>) -> CliResult<Option<f64>> {
    match v {
        Some(x) if !(x > 0.0 && x.is_finite()) => {
            Err(CliError::Usage(format!("--{name} must be a positive number")))
        }
        v => Ok(v),
    }
}

fn params(args: &Args, scalar: ScalarMode) -> CliResult<Option<ParamSet>> {
    let Some(g) = &args.g else { return Ok(None) };
    let g = parse_g(g)?;
    let kappa = parse_value(&args.kappa)?;
    let all: Vec<&Value> = g.iter().chain(std::iter::once(&kappa)).collect();
    Ok(Some(match scalar {
        ScalarMode::Rational => {
            let exact: Option<Vec<Rational>> = all.iter().map(|v| v.exact().cloned()).collect();
            let Some(mut e) = exact else {
                return Err(CliError::Config(
                    "rational mode needs rational couplings; use --scalar complex".into(),
                ));
            };
            let k = e.pop().expect("five values");
            ParamSet::Exact(Params::new(e.try_into().expect("four values"), k))
        }
        ScalarMode::Complex => ParamSet::Complex(Params::new(
            std::array::from_fn(|nu| g[nu].to_c64()),
            kappa.to_c64(),
        )),
    }))
}

impl ParamSet {
    fn kappa_is_zero(&self) -> bool {
        match self {
            ParamSet::Exact(p) => p.kappa.is_zero(),
            ParamSet::Complex(p) => p.kappa.norm() == 0.0,
        }
    }
}

impl RunConfig {
    pub fn from_args(args: &Args) -> CliResult<Self> {
        let mode: Mode = args.mode.parse().map_err(CliError::Usage)?;
        let scalar = args
            .scalar
            .as_deref()
            .map(|s| s.parse::<ScalarMode>())
            .transpose()
            .map_err(CliError::Usage)?;
        let suite = args
            .suite
            .as_deref()
            .map(|s| s.parse::<Suite>())
            .transpose()
            .map_err(CliError::Usage)?;
        let eps_eq = positive("eps-eq", args.eps_eq)?;
        let eps_div = positive("eps-div", args.eps_div)?;
        let eps_res = positive("eps-res", args.eps_res)?;
        positive("fd-step", Some(args.fd_step))?;

        let mut tol = tolerance::current();
        tol.eps_eq = eps_eq.unwrap_or(tol.eps_eq);
        tol.eps_div = eps_div.unwrap_or(tol.eps_div);
        tol.eps_res = eps_res.unwrap_or(tol.eps_res);
        tolerance::set(tol);

        let q_given = match &args.q {
            Some(s) => Some(parse_complex(s)?),
            None => None,
        };
        let tau = match (&args.tau, q_given) {
            (Some(t), _) => Some(parse_complex(t)?),
            (None, Some(q)) if q.norm() > 0.0 => Some(Nome::from_q(q)?.tau()?),
            (None, Some(_)) => {
                return Err(CliError::Usage("--q must be nonzero for evaluation; use a small value".into()))
            }
            (None, None) => None,
        };
        let x = args.x.as_deref().map(parse_complex).transpose()?;
        let omega1 = args.omega1.as_deref().map(parse_complex).transpose()?;

        let command = args.command;
        let params = params(args, scalar.unwrap_or(ScalarMode::Rational))?;
        let cfg = RunConfig {
            command,
            n: args.n,
            params,
            order: args.order.unwrap_or(DEFAULT_ORDER),
            mode,
            scalar,
            format: args.format,
            tau,
            x,
            omega1,
            suite,
            fd_step: args.fd_step,
            residual: args.residual,
            timing: args.timing,
            exec: if args.sequential { Execution::Sequential } else { Execution::Parallel },
            order_given: args.order,
            q_given: q_given.map(|q| q.norm()),
        };
        cfg.check()?;
        Ok(cfg)
    }

    fn check(&self) -> CliResult<()> {
        match self.command {
            Command::Verify => {
                if self.suite.is_none() {
                    return Err(CliError::Usage("verify needs --suite".into()));
                }
                return Ok(());
            }
            Command::Eval
                if (self.x.is_none() || self.tau.is_none()) => {
                    return Err(CliError::Usage("eval needs --x and one of --q, --tau".into()));
                }
            _ => {}
        }
        let Some(p) = &self.params else {
            return Err(CliError::Usage("missing --g".into()));
        };
        match self.mode {
            Mode::Thm1 if !p.kappa_is_zero() => {
                Err(CliError::Config("mode thm1 is the stationary engine and needs kappa = 0".into()))
            }
            Mode::Alg2 | Mode::Thm2 | Mode::Bridge if p.kappa_is_zero() => Err(CliError::Config(format!(
                "mode {} divides by kappa and needs kappa != 0",
                self.mode.name()
            ))),
            _ => Ok(()),
        }
    }
}
