use std::env;
use std::io;

use serde::Serialize;

use degentrig::identities::{
    classical_limit_sweep, default_sweep_lambdas, run_all, IdentityReport, ParamKind, SampleGrid,
};
use degentrig::series::{verify_exact, RationalTriple, RATIONAL_TRIPLES};
use degentrig::{
    cos_l, cosh_l, cot_l, coth_l, degen_exp_closed, sin_l, sinh_l, tan_l, tanh_l, DegenContext, DegenError,
    IdentityId, IdentityParams,
};

use crate::output::{num, opt, Sink};
use crate::{
    EvalArgs, Function, SeriesVerifyArgs, SweepArgs, VerifyArgs, EXIT_DOMAIN, EXIT_FAILED, EXIT_OK, EXIT_USAGE,
    SEED_ENV,
};

/// Accepted slope window for the λ → 0 sweep.
const SLOPE_RANGE: (f64, f64) = (0.85, 1.15);

/// Largest integer parameter per exact-capable identity in `series-verify`.
fn exact_param_limit(id: IdentityId) -> u32 {
    match id {
        IdentityId::SinOddSum => 6,
        _ => 8,
    }
}

fn io_failure(e: io::Error) -> u8 {
    // A closed downstream pipe (`| head`) is not an error.
    if e.kind() == io::ErrorKind::BrokenPipe {
        return EXIT_OK;
    }
    eprintln!("error: {e}");
    EXIT_USAGE
}

fn domain_failure(e: DegenError) -> u8 {
    eprintln!("error: {e}");
    EXIT_DOMAIN
}

fn function_name(f: Function) -> &'static str {
    match f {
        Function::Cos => "cos",
        Function::Sin => "sin",
        Function::Tan => "tan",
        Function::Cot => "cot",
        Function::Cosh => "cosh",
        Function::Sinh => "sinh",
        Function::Tanh => "tanh",
        Function::Coth => "coth",
        Function::Exp => "exp",
    }
}

#[derive(Serialize)]
struct EvalRecord {
    function: &'static str,
    lambda: f64,
    a: f64,
    omega: f64,
    x: f64,
    value: f64,
}

pub fn eval(args: &EvalArgs) -> u8 {
    let ctx = match DegenContext::new(args.lambda, args.a) {
        Ok(ctx) => ctx,
        Err(e) => return domain_failure(e),
    };
    if !args.x.is_finite() {
        return domain_failure(DegenError::Domain(format!("x must be finite, got {}", args.x)));
    }
    let x = args.x;
    let value = match args.function {
        Function::Cos => Ok(cos_l(&ctx, x)),
        Function::Sin => Ok(sin_l(&ctx, x)),
        Function::Tan => tan_l(&ctx, x),
        Function::Cot => cot_l(&ctx, x),
        Function::Cosh => cosh_l(&ctx, x),
        Function::Sinh => sinh_l(&ctx, x),
        Function::Tanh => tanh_l(&ctx, x),
        Function::Coth => coth_l(&ctx, x),
        Function::Exp => degen_exp_closed(x, ctx.lambda(), ctx.a()),
    };
    let value = match value {
        Ok(v) => v,
        Err(e) => return domain_failure(e),
    };
    let record = EvalRecord {
        function: function_name(args.function),
        lambda: ctx.lambda(),
        a: ctx.a(),
        omega: ctx.omega(),
        x,
        value,
    };
    let row = [
        record.function.to_owned(),
        num(record.lambda),
        num(record.a),
        num(record.omega),
        num(record.x),
        num(record.value),
    ];
    let write = || -> io::Result<()> {
        let mut sink = Sink::open(&args.output, &["function", "lambda", "a", "omega", "x", "value"])?;
        sink.record(&record, &row)?;
        sink.finish()
    };
    match write() {
        Ok(()) => EXIT_OK,
        Err(e) => io_failure(e),
    }
}

/// `--seed`, unless the environment overrides it.
fn effective_seed(flag: u64) -> Result<u64, String> {
    match env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{SEED_ENV} must be an unsigned integer, got {v:?}")),
        Err(_) => Ok(flag),
    }
}

pub const VERIFY_COLUMNS: [&str; 12] = [
    "id",
    "m",
    "n",
    "k",
    "lambda",
    "a",
    "omega",
    "n_samples",
    "max_abs_residual",
    "max_rel_residual",
    "tolerance",
    "pass",
];

fn report_row(r: &IdentityReport) -> Vec<String> {
    let (lambda, a, omega) = match r.worst_point {
        Some(p) => (num(p.lambda), num(p.a), num(p.omega)),
        None => Default::default(),
    };
    vec![
        r.id.to_string(),
        opt(r.params.m),
        opt(r.params.n),
        opt(r.params.k),
        lambda,
        a,
        omega,
        r.n_samples.to_string(),
        num(r.max_abs_residual),
        num(r.max_rel_residual),
        num(r.tolerance),
        r.pass.to_string(),
    ]
}

pub fn verify(args: &VerifyArgs) -> u8 {
    let seed = match effective_seed(args.seed) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    if args.tolerance.is_nan() || args.tolerance < 0.0 || args.points == 0 {
        eprintln!("error: --tolerance must be nonnegative and --points positive");
        return EXIT_USAGE;
    }
    let grid = match (args.lambda, args.a) {
        (Some(lambda), Some(a)) => DegenContext::new(lambda, a)
            .and_then(|ctx| SampleGrid::new(vec![ctx], args.points, args.pole_margin, seed)),
        _ => SampleGrid::new(degentrig::identities::default_contexts(), args.points, args.pole_margin, seed),
    };
    let grid = match grid {
        Ok(g) => g,
        Err(e) => return domain_failure(e),
    };
    let reports = match run_all(&grid, args.max_m, args.max_n, args.tolerance) {
        Ok(r) => r,
        Err(e) => return domain_failure(e),
    };
    let failed = reports.iter().filter(|r| !r.pass).count();
    let write = || -> io::Result<()> {
        let mut sink = Sink::open(&args.output, &VERIFY_COLUMNS)?;
        for r in &reports {
            sink.record(r, &report_row(r))?;
        }
        sink.finish()
    };
    if let Err(e) = write() {
        return io_failure(e);
    }
    eprintln!("verify: {} reports, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
    for r in reports.iter().filter(|r| !r.pass) {
        eprintln!("  FAIL {} {:?}: max_rel_residual = {}", r.id, r.params, r.max_rel_residual);
    }
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

#[derive(Serialize)]
struct SweepRow {
    lambda: f64,
    error: f64,
}

#[derive(Serialize)]
struct SweepSummary {
    fitted_slope: Option<f64>,
    status: &'static str,
}

pub fn sweep(args: &SweepArgs) -> u8 {
    let result = match classical_limit_sweep(args.x, args.a, &default_sweep_lambdas()) {
        Ok(r) => r,
        Err(e) => return domain_failure(e),
    };
    let all_zero = result.errors.iter().all(|&e| e == 0.0);
    let (status, code) = match result.fitted_slope {
        _ if all_zero => ("degenerate", EXIT_OK),
        Some(s) if (SLOPE_RANGE.0..=SLOPE_RANGE.1).contains(&s) => ("ok", EXIT_OK),
        _ => ("out_of_range", EXIT_FAILED),
    };
    let summary = SweepSummary { fitted_slope: if all_zero { None } else { result.fitted_slope }, status };
    let write = || -> io::Result<()> {
        let mut sink = Sink::open(&args.output, &["lambda", "error"])?;
        for (&lambda, &error) in result.lambdas.iter().zip(&result.errors) {
            sink.record(&SweepRow { lambda, error }, &[num(lambda), num(error)])?;
        }
        sink.json_only(&summary)?;
        sink.finish()
    };
    if let Err(e) = write() {
        return io_failure(e);
    }
    match summary.fitted_slope {
        Some(s) => eprintln!("sweep: fitted slope {} ({status})", num(s)),
        None => eprintln!("sweep: slope fit skipped ({status}: all errors are zero)"),
    }
    code
}

#[derive(Serialize)]
struct Certificate {
    id: IdentityId,
    params: IdentityParams,
    x: String,
    y: String,
    lambda: String,
    order: usize,
    pass: bool,
    first_failing_coefficient: Option<usize>,
}

/// Every `(id, params)` pair certified by `series-verify`, in catalog order.
pub fn exact_checks() -> Vec<(IdentityId, IdentityParams)> {
    IdentityId::ALL
        .into_iter()
        .filter(|id| id.is_exact_capable())
        .flat_map(|id| {
            let kind = id.param_kind();
            let values: Vec<u32> = if kind == ParamKind::None { vec![0] } else { (1..=exact_param_limit(id)).collect() };
            values.into_iter().map(move |v| (id, IdentityParams::for_kind(kind, v)))
        })
        .collect()
}

fn ratio_string(r: (i64, i64)) -> String {
    degentrig::series::rational(r.0, r.1).to_string()
}

pub fn series_verify(args: &SeriesVerifyArgs) -> u8 {
    let mut certificates = Vec::new();
    for (id, params) in exact_checks() {
        for triple in &RATIONAL_TRIPLES {
            let RationalTriple { x, y, lambda } = *triple;
            let outcome = match verify_exact(id, &triple.x(), &triple.y(), &triple.lambda(), &params, args.order) {
                Ok(o) => o,
                Err(e) => return domain_failure(e),
            };
            certificates.push(Certificate {
                id,
                params,
                x: ratio_string(x),
                y: ratio_string(y),
                lambda: ratio_string(lambda),
                order: args.order,
                pass: outcome.pass,
                first_failing_coefficient: outcome.first_failing_coefficient,
            });
        }
    }
    let failed = certificates.iter().filter(|c| !c.pass).count();
    let write = || -> io::Result<()> {
        let header = ["id", "m", "n", "k", "x", "y", "lambda", "order", "pass", "first_failing_coefficient"];
        let mut sink = Sink::open(&args.output, &header)?;
        for c in &certificates {
            let row = [
                c.id.to_string(),
                opt(c.params.m),
                opt(c.params.n),
                opt(c.params.k),
                c.x.clone(),
                c.y.clone(),
                c.lambda.clone(),
                c.order.to_string(),
                c.pass.to_string(),
                opt(c.first_failing_coefficient),
            ];
            sink.record(c, &row)?;
        }
        sink.finish()
    };
    if let Err(e) = write() {
        return io_failure(e);
    }
    eprintln!(
        "series-verify: {} certificates at order {}, {} passed, {} failed",
        certificates.len(),
        args.order,
        certificates.len() - failed,
        failed
    );
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}
