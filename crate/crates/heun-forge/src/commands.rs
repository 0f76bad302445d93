//! The four subcommands. Each returns the document to print.

use crate::args::{Command, Format};
use crate::config::{ParamSet, RunConfig};
use crate::error::{CliError, CliResult};
use crate::json::{complex, document, float, object, scalar};
use heun_core::engines::{check_params, ResonanceReport};
use heun_core::seriescore::{Scalar, C64};
use heun_core::solution::{assemble, residual, residual_scaled, run_engine, SeriesSolution};
use heun_core::specfun::{Nome, OmegaScale};
use heun_core::verify::{run_suite, VerifyConfig};
use heun_core::HeunError;
use serde_json::{Map, Value};
use std::time::Instant;

/// Rendered result plus whether the command succeeded (only `verify` can fail
/// without an error).
pub struct Output {
    pub text: String,
    pub ok: bool,
}

pub fn run(cfg: &RunConfig) -> CliResult<Output> {
    match cfg.command {
        Command::Verify => verify(cfg),
        _ => match cfg.params.as_ref().expect("checked") {
            ParamSet::Exact(p) => with_params(cfg, p),
            ParamSet::Complex(p) => with_params(cfg, p),
        },
    }
}

fn with_params<S: Scalar>(cfg: &RunConfig, p: &heun_core::Params<S>) -> CliResult<Output> {
    match cfg.command {
        Command::Eigen => eigen(cfg, p),
        Command::Poly => poly(cfg, p),
        Command::Eval => eval(cfg, p),
        Command::Verify => unreachable!(),
    }
}

fn params_json<S: Scalar>(p: &heun_core::Params<S>) -> Value {
    Value::Object(object([
        ("g", Value::Array(p.g.iter().map(scalar).collect())),
        ("kappa", scalar(&p.kappa)),
    ]))
}

fn header<S: Scalar>(cfg: &RunConfig, p: &heun_core::Params<S>) -> Map<String, Value> {
    object([
        ("params", params_json(p)),
        ("n", Value::from(cfg.n)),
        ("N", Value::from(cfg.order)),
        ("mode", Value::from(cfg.mode.name())),
        ("scalar", Value::from(S::NAME)),
    ])
}

fn timing(cfg: &RunConfig, t: Instant) -> Value {
    if cfg.timing {
        Value::Object(object([("seconds", float(t.elapsed().as_secs_f64()))]))
    } else {
        Value::Null
    }
}

fn no_resonance() -> Value {
    Value::Object(object([("resonant", Value::Bool(false)), ("entries", Value::Array(vec![]))]))
}

/// Resonance report as JSON, for the error document.
pub fn resonance_json(r: &ResonanceReport) -> Value {
    let entries = r.entries.iter().map(|(l, m)| Value::Array(vec![Value::from(*l), Value::from(*m)]));
    Value::Object(object([
        ("resonant", Value::Bool(true)),
        ("n", Value::from(r.n)),
        ("entries", Value::Array(entries.collect())),
    ]))
}

fn render(cfg: &RunConfig, doc: Value, csv: impl FnOnce() -> String) -> Output {
    let text = match cfg.format {
        Format::Json => format!("{doc}\n"),
        Format::Csv => csv(),
    };
    Output { text, ok: true }
}

fn csv_scalar<S: Scalar>(s: &S) -> String {
    match s.exact_repr() {
        Some(r) => r,
        None => {
            let c = s.to_c64();
            format!("{:.16e},{:.16e}", c.re, c.im)
        }
    }
}

fn csv_header<S: Scalar>(lead: &str) -> String {
    if S::EXACT {
        format!("{lead},value\n")
    } else {
        format!("{lead},re,im\n")
    }
}

fn eigen<S: Scalar>(cfg: &RunConfig, p: &heun_core::Params<S>) -> CliResult<Output> {
    let t = Instant::now();
    check_params(cfg.n, p)?;
    let (_, e) = run_engine(cfg.n, p, cfg.order, cfg.mode, cfg.exec)?;
    let mut body = header(cfg, p);
    body.insert("E0".into(), scalar(e.constant()));
    body.insert("E_coeffs".into(), Value::Array(e.coeffs().iter().map(scalar).collect()));
    body.insert("resonance_report".into(), no_resonance());
    if let Some(tau) = cfg.tau {
        let nome = Nome::from_tau(tau)?;
        let series = e.series.eval(nome.q());
        let total = heun_core::solution::total_e_with(p, &nome, series);
        body.insert(
            "evaluation".into(),
            Value::Object(object([
                ("tau", complex(tau)),
                ("q", complex(nome.q())),
                ("E_series", complex(series)),
                ("E", complex(total)),
            ])),
        );
    }
    body.insert("timing".into(), timing(cfg, t));
    Ok(render(cfg, document(body), || {
        let mut s = csv_header::<S>("l");
        for (l, c) in e.coeffs().iter().enumerate() {
            s += &format!("{l},{}\n", csv_scalar(c));
        }
        s
    }))
}

fn solution<S: Scalar>(cfg: &RunConfig, p: &heun_core::Params<S>) -> CliResult<SeriesSolution<S>> {
    check_params(cfg.n, p)?;
    Ok(assemble(cfg.n, p, cfg.order, cfg.mode, cfg.exec)?)
}

fn poly<S: Scalar>(cfg: &RunConfig, p: &heun_core::Params<S>) -> CliResult<Output> {
    let t = Instant::now();
    let sol = solution(cfg, p)?;
    let blocks: Vec<Value> = sol
        .poly
        .iter()
        .map(|b| Value::Array(b.coeffs().iter().map(scalar).collect()))
        .collect();
    let mut body = header(cfg, p);
    body.insert("norm".into(), scalar(&sol.norm));
    body.insert("blocks".into(), Value::Array(blocks));
    body.insert("E_coeffs".into(), Value::Array(sol.eigen.coeffs().iter().map(scalar).collect()));
    body.insert("resonance_report".into(), no_resonance());
    body.insert("timing".into(), timing(cfg, t));
    Ok(render(cfg, document(body), || {
        let mut s = csv_header::<S>("l,power");
        for (l, b) in sol.poly.iter().enumerate() {
            for (k, c) in b.coeffs().iter().enumerate() {
                s += &format!("{l},{k},{}\n", csv_scalar(c));
            }
        }
        s
    }))
}

fn eval<S: Scalar>(cfg: &RunConfig, p: &heun_core::Params<S>) -> CliResult<Output> {
    let t = Instant::now();
    let (x, tau) = (cfg.x.expect("checked"), cfg.tau.expect("checked"));
    let sol = solution(cfg, p)?;
    let nome = Nome::from_tau(tau)?;
    let scale = cfg.omega1.map(OmegaScale::new).transpose()?;
    let (psi, e) = match &scale {
        None => (sol.eval_psi(x, tau)?, sol.total_e(&nome)),
        Some(s) => (
            s.factor().sqrt() * sol.eval_psi(s.map_x(x), tau)?,
            s.map_energy(sol.total_e(&nome)),
        ),
    };
    let mut body = header(cfg, p);
    body.insert("x".into(), complex(x));
    body.insert("tau".into(), complex(tau));
    body.insert("q".into(), complex(nome.q()));
    body.insert("omega1".into(), cfg.omega1.map(complex).unwrap_or(Value::Null));
    body.insert("psi".into(), complex(psi));
    body.insert("E".into(), complex(e));
    body.insert("P".into(), complex(sol.eval_poly(scaled_x(&scale, x).cos(), nome.q())));
    let res = if cfg.residual {
        let r = match cfg.omega1 {
            None => residual(&sol, x, tau, cfg.fd_step)?,
            Some(w) => residual_scaled(&sol, w, x, tau, cfg.fd_step)?,
        };
        Value::Object(object([
            ("value", complex(r.value)),
            ("relative", float(r.relative)),
            ("fd_estimate", float(r.fd_estimate / r.scale.max(f64::MIN_POSITIVE))),
            ("h", float(cfg.fd_step)),
        ]))
    } else {
        Value::Null
    };
    body.insert("residual".into(), res);
    body.insert("timing".into(), timing(cfg, t));
    Ok(render(cfg, document(body), || {
        format!(
            "quantity,re,im\npsi,{:.16e},{:.16e}\nE,{:.16e},{:.16e}\n",
            psi.re, psi.im, e.re, e.im
        )
    }))
}

fn scaled_x(scale: &Option<OmegaScale>, x: C64) -> C64 {
    scale.map(|s| s.map_x(x)).unwrap_or(x)
}

fn verify(cfg: &RunConfig) -> CliResult<Output> {
    let t = Instant::now();
    let suite = cfg.suite.expect("checked");
    let vc = VerifyConfig {
        order: cfg.order_given,
        q: cfg.q_given,
        scalar: cfg.scalar,
        h: cfg.fd_step,
        exec: cfg.exec,
        ..VerifyConfig::default()
    };
    let r = run_suite(suite, &vc).map_err(|e: HeunError| CliError::Core(e))?;
    let body = object([
        ("suite", Value::from(r.suite.clone())),
        ("cases", Value::from(r.cases)),
        ("max_deviation", float(r.max_deviation)),
        ("pass", Value::Bool(r.pass)),
        ("failures", Value::Array(r.failures.iter().cloned().map(Value::from).collect())),
        ("timing", timing(cfg, t)),
    ]);
    let mut out = render(cfg, document(body), || {
        format!(
            "suite,cases,max_deviation,pass\n{},{},{:.16e},{}\n",
            r.suite, r.cases, r.max_deviation, r.pass
        )
    });
    out.ok = r.pass;
    Ok(out)
}
