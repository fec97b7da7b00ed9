//! Command-line front end: parses polynomial and integer inputs, dispatches
//! to the library pipelines and renders text or JSON reports.
//!
//! Exit codes: 0 on success, 2 on input errors, 3 on precision exhaustion.
//! Output is plain text (no color), one report per command; `batch` reads
//! one command line per stdin line.

use std::fmt::Write as _;
use std::io::BufRead;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semideg::algebra::{compute_algebra_basis, AlgebraBasis};
use semideg::classify::{classify_curve, delta_sequence, DeltaSequence};
use semideg::ideals::{kernel_generators, over_ideals, pair_relators, RelativeIdeal};
use semideg::kahler::{curve_invariants, CurveParametrization, DifferentialReport};
use semideg::modbasis::{compute_module_basis, ModuleBasis};
use semideg::normalize::{
    default_precision, normal_form, NormalFormOutcome, NormalMove, NormalizeError, NormalStep,
};
use semideg::numsgp::NumericalSemigroup;
use semideg::poly::{parse_poly, Poly};
use semideg::rat::{render as rat_str, Rat};

#[derive(Parser)]
#[command(
    name = "semideg",
    about = "Degree semigroups of subalgebras of K[t], module bases, and plane-curve differential invariants",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced minimal basis of K[f1,...,fs] and its degree semigroup
    Semigroup(SemigroupArgs),
    /// Basis and degree ideal of the module generated over an algebra
    #[command(name = "module-basis")]
    ModuleBasis(ModuleArgs),
    /// Differential invariants of a plane polynomial curve
    Kahler(CurveArgs),
    /// Normal form of a parametrization via the weighted Wronskian
    Normalize(NormalizeArgs),
    /// Relative-ideal computations over a numerical semigroup
    Ideal(IdealArgs),
    /// δ-sequence, Puiseux exponents and the ne ∈ {0,1,2} classification
    Classify(CurveArgs),
    /// Read commands from stdin, one per line
    Batch,
}

#[derive(Args)]
struct SemigroupArgs {
    /// Comma-separated polynomials in t, e.g. "t^6+t,t^4"
    #[arg(long)]
    gens: String,
    #[arg(long, value_enum, default_value_t = Show::Basis)]
    show: Show,
    #[arg(long)]
    json: bool,
    /// Print the completion trace
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    Basis,
    Generators,
    All,
}

#[derive(Args)]
struct ModuleArgs {
    /// Algebra generators, comma-separated polynomials
    #[arg(long)]
    algebra: String,
    /// Module generators, comma-separated polynomials
    #[arg(long)]
    gens: String,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct CurveArgs {
    /// First coordinate polynomial
    #[arg(long)]
    x: String,
    /// Second coordinate polynomial
    #[arg(long)]
    y: String,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct NormalizeArgs {
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
    /// Deepest truncation floor allowed (negative; default 8x the
    /// starting floor -(2nm+n))
    #[arg(long)]
    precision: Option<i64>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct IdealArgs {
    /// Ambient semigroup generators, e.g. "3,4"
    #[arg(long)]
    ambient: String,
    /// Ideal generators (integers)
    #[arg(long)]
    gens: Option<String>,
    /// Pair (a,b) for the relator set R(a,b)
    #[arg(long)]
    pair: Option<String>,
    /// Second ideal to intersect with --gens
    #[arg(long)]
    intersect: Option<String>,
    #[arg(long, value_enum, default_value_t = IdealShow::MinGens)]
    show: IdealShow,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdealShow {
    MinGens,
    Kernel,
    OverIdeals,
    NonExact,
}

#[derive(Debug)]
struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }

    fn precision(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Semigroup(args) => run_semigroup(args),
        Command::ModuleBasis(args) => run_module(args),
        Command::Kahler(args) => run_kahler(args),
        Command::Normalize(args) => run_normalize(args),
        Command::Ideal(args) => run_ideal(args),
        Command::Classify(args) => run_classify(args),
        Command::Batch => run_batch(),
    }
}

fn run_batch() -> Result<String, CliError> {
    let stdin = std::io::stdin();
    let mut out = String::new();
    for line in stdin.lock().lines() {
        let line = line.map_err(|e| CliError::input(e.to_string()))?;
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.is_empty() || words[0].starts_with('#') {
            continue;
        }
        let parsed = Cli::try_parse_from(std::iter::once("semideg").chain(words))
            .map_err(|e| CliError::input(format!("{line}: {e}")))?;
        out.push_str(&run(parsed.command)?);
    }
    Ok(out)
}

// ---- input parsing -------------------------------------------------------

fn parse_poly_list(text: &str) -> Result<Vec<Poly>, CliError> {
    text.split(',')
        .map(|part| {
            parse_poly(part.trim())
                .map_err(|e| CliError::input(format!("cannot parse '{}': {e}", part.trim())))
        })
        .collect()
}

fn parse_int_list(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::input(format!("'{}' is not an integer", part.trim())))
        })
        .collect()
}

fn parse_semigroup(text: &str) -> Result<NumericalSemigroup, CliError> {
    let gens: Vec<u64> = parse_int_list(text)?
        .into_iter()
        .map(|v| u64::try_from(v).map_err(|_| CliError::input("semigroup generators must be positive")))
        .collect::<Result<_, _>>()?;
    NumericalSemigroup::from_generators(&gens).map_err(|e| CliError::input(e.to_string()))
}

fn parse_curve(x: &str, y: &str) -> Result<CurveParametrization, CliError> {
    let px = parse_poly(x).map_err(|e| CliError::input(format!("cannot parse x: {e}")))?;
    let py = parse_poly(y).map_err(|e| CliError::input(format!("cannot parse y: {e}")))?;
    CurveParametrization::new(&px, &py).map_err(|e| CliError::input(e.to_string()))
}

// ---- rendering helpers ---------------------------------------------------

fn bracket_list<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "[ ]".to_string()
    } else {
        format!("[ {} ]", parts.join(", "))
    }
}

fn poly_list(gens: &[Poly]) -> String {
    bracket_list(gens.iter().map(|g| g.to_string()))
}

fn poly_strings(gens: &[Poly]) -> Vec<String> {
    gens.iter().map(|g| g.to_string()).collect()
}

fn term_string(exp: i64, coeff: &Rat) -> String {
    let c = rat_str(coeff);
    if exp == 0 {
        return c;
    }
    let var = if exp == 1 { "T".to_string() } else { format!("T^{exp}") };
    match c.as_str() {
        "1" => var,
        "-1" => format!("-{var}"),
        _ => format!("{c}*{var}"),
    }
}

fn semigroup_json(s: &NumericalSemigroup) -> Value {
    json!({
        "generators": s.min_gens(),
        "frobenius": s.frobenius(),
        "conductor": s.conductor(),
        "genus": s.genus(),
        "multiplicity": s.multiplicity(),
        "gaps": s.gaps(),
        "symmetric": s.is_symmetric(),
    })
}

// ---- semigroup -----------------------------------------------------------

fn run_semigroup(args: SemigroupArgs) -> Result<String, CliError> {
    let gens = parse_poly_list(&args.gens)?;
    let basis = compute_algebra_basis(&gens).map_err(|e| CliError::input(e.to_string()))?;
    if args.json {
        return Ok(format!("{}\n", semigroup_report_json(&basis, args.verbose)));
    }
    let mut out = String::new();
    if args.verbose {
        for step in basis.trace() {
            let d = step.adjoined.degree().unwrap_or(0);
            writeln!(
                out,
                "S-polynomial {} -> new generator {} of degree {d}",
                step.s_polynomial, step.adjoined
            )
            .unwrap();
        }
    }
    match args.show {
        Show::Basis => writeln!(out, "{}", poly_list(basis.gens())).unwrap(),
        Show::Generators => writeln!(out, "{}", bracket_list(basis.degrees().iter())).unwrap(),
        Show::All => {
            writeln!(out, "basis: {}", poly_list(basis.gens())).unwrap();
            writeln!(out, "generators: {}", bracket_list(basis.degrees().iter())).unwrap();
            match basis.semigroup() {
                Some(s) => {
                    writeln!(out, "frobenius: {}", s.frobenius()).unwrap();
                    writeln!(out, "conductor: {}", s.conductor()).unwrap();
                    writeln!(out, "genus: {}", s.genus()).unwrap();
                    writeln!(out, "multiplicity: {}", s.multiplicity()).unwrap();
                    writeln!(out, "gaps: {}", bracket_list(s.gaps().iter())).unwrap();
                    writeln!(out, "symmetric: {}", s.is_symmetric()).unwrap();
                }
                None => {
                    writeln!(
                        out,
                        "content: {} (not numerical; K[t] is not finite over this algebra)",
                        basis.monoid().content()
                    )
                    .unwrap();
                }
            }
        }
    }
    Ok(out)
}

fn semigroup_report_json(basis: &AlgebraBasis, verbose: bool) -> Value {
    let mut report = json!({
        "basis": poly_strings(basis.gens()),
        "generators": basis.degrees(),
        "content": basis.monoid().content(),
        "numerical": basis.is_numerical(),
    });
    if let Some(s) = basis.semigroup() {
        report["semigroup"] = semigroup_json(s);
    }
    if verbose {
        report["trace"] = Value::Array(
            basis
                .trace()
                .iter()
                .map(|step| {
                    json!({
                        "s_polynomial": step.s_polynomial.to_string(),
                        "adjoined": step.adjoined.to_string(),
                        "degree": step.adjoined.degree().unwrap_or(0),
                    })
                })
                .collect(),
        );
    }
    report
}

// ---- module-basis ----------------------------------------------------------

fn run_module(args: ModuleArgs) -> Result<String, CliError> {
    let alg_gens = parse_poly_list(&args.algebra)?;
    let mod_gens = parse_poly_list(&args.gens)?;
    let algebra = compute_algebra_basis(&alg_gens).map_err(|e| CliError::input(e.to_string()))?;
    let module =
        compute_module_basis(&mod_gens, &algebra).map_err(|e| CliError::input(e.to_string()))?;
    if args.json {
        return Ok(format!("{}\n", module_report_json(&module, args.verbose)));
    }
    let mut out = String::new();
    if args.verbose {
        for step in module.trace() {
            if let Some(adjoined) = &step.adjoined {
                writeln!(
                    out,
                    "S-polynomial {:?} of pair ({}, {}): {} -> new generator {} of degree {}",
                    step.relator,
                    step.pair.0,
                    step.pair.1,
                    step.s_polynomial,
                    adjoined,
                    adjoined.degree().unwrap_or(0)
                )
                .unwrap();
            }
        }
        writeln!(out, "reducing...").unwrap();
    }
    writeln!(out, "{}", poly_list(module.gens())).unwrap();
    if args.verbose {
        writeln!(out, "ideal: {}", bracket_list(module.degree_ideal().min_gens().iter())).unwrap();
    }
    Ok(out)
}

fn module_report_json(module: &ModuleBasis, verbose: bool) -> Value {
    let mut report = json!({
        "basis": poly_strings(module.gens()),
        "ideal": module.degree_ideal().min_gens(),
        "algebra_basis": poly_strings(module.algebra().gens()),
    });
    if verbose {
        report["trace"] = Value::Array(
            module
                .trace()
                .iter()
                .map(|step| {
                    json!({
                        "pair": [step.pair.0, step.pair.1],
                        "relator": [step.relator.0, step.relator.1],
                        "s_polynomial": step.s_polynomial.to_string(),
                        "adjoined": step.adjoined.as_ref().map(|a| a.to_string()),
                    })
                })
                .collect(),
        );
    }
    report
}

// ---- kahler ----------------------------------------------------------------

fn run_kahler(args: CurveArgs) -> Result<String, CliError> {
    let curve = parse_curve(&args.x, &args.y)?;
    let report = curve_invariants(&curve).map_err(|e| CliError::input(e.to_string()))?;
    if args.json {
        return Ok(format!("{}\n", kahler_report_json(&curve, &report)));
    }
    let mut out = String::new();
    writeln!(out, "gamma: {}", bracket_list(report.gamma().min_gens().iter())).unwrap();
    writeln!(out, "basis: {}", poly_list(report.module().gens())).unwrap();
    writeln!(out, "ideal: {}", bracket_list(report.ideal().min_gens().iter())).unwrap();
    writeln!(out, "NE: {}", bracket_list(report.ne_set().iter())).unwrap();
    writeln!(out, "ne: {}", report.ne()).unwrap();
    writeln!(out, "mu: {}", report.mu()).unwrap();
    writeln!(out, "nu: {}", report.nu()).unwrap();
    writeln!(out, "quasi-homogeneous: {}", report.quasi_homogeneous()).unwrap();
    if args.verbose {
        writeln!(out, "algebra basis: {}", poly_list(report.module().algebra().gens())).unwrap();
        writeln!(out, "free for delta arrangement: {}", report.delta_free_verified()).unwrap();
    }
    Ok(out)
}

fn kahler_report_json(curve: &CurveParametrization, report: &DifferentialReport) -> Value {
    json!({
        "x": curve.x().to_string(),
        "y": curve.y().to_string(),
        "gamma": report.gamma().min_gens(),
        "gamma_info": semigroup_json(report.gamma()),
        "basis": poly_strings(report.module().gens()),
        "ideal": report.ideal().min_gens(),
        "ne_set": report.ne_set(),
        "ne": report.ne(),
        "mu": report.mu(),
        "nu": report.nu(),
        "quasi_homogeneous": report.quasi_homogeneous(),
        "delta_free_verified": report.delta_free_verified(),
    })
}

// ---- normalize ---------------------------------------------------------------

fn run_normalize(args: NormalizeArgs) -> Result<String, CliError> {
    let curve = parse_curve(&args.x, &args.y)?;
    let max_precision = args.precision.unwrap_or_else(|| 8 * default_precision(&curve));
    let outcome = normal_form(&curve, max_precision).map_err(|e| match e {
        NormalizeError::PrecisionExhausted { .. } => CliError::precision(e.to_string()),
        other => CliError::input(other.to_string()),
    })?;
    if args.json {
        return Ok(format!("{}\n", normalize_report_json(&outcome, max_precision)));
    }
    let mut out = String::new();
    match &outcome {
        NormalFormOutcome::QuasiHomogeneous { .. } => {
            writeln!(out, "outcome: quasi-homogeneous").unwrap();
        }
        NormalFormOutcome::NonExactWitness { witness_degree, .. } => {
            writeln!(out, "outcome: non-exact witness").unwrap();
            writeln!(out, "witness degree: {witness_degree}").unwrap();
        }
    }
    if args.verbose || !outcome.steps().is_empty() {
        for (i, step) in outcome.steps().iter().enumerate() {
            writeln!(out, "step {}: {}", i + 1, render_step(step)).unwrap();
        }
    }
    Ok(out)
}

fn render_step(step: &NormalStep) -> String {
    let before = term_string(step.wronskian_before.0, &step.wronskian_before.1);
    let after = match &step.wronskian_after {
        Some((e, c)) => term_string(*e, c),
        None => "0".to_string(),
    };
    let action = match &step.action {
        NormalMove::AddConstantToY { alpha } => format!("Y += {}", rat_str(alpha)),
        NormalMove::SubtractYPower { theta, coeff } => {
            format!("X -= {}*Y^{}", rat_str(coeff), theta - 1)
        }
    };
    format!(
        "lambda {} (coefficient {}), W = {before}+..., {action}, W after = {after}+...",
        step.lambda,
        rat_str(&step.c_lambda)
    )
}

fn normalize_report_json(outcome: &NormalFormOutcome, max_precision: i64) -> Value {
    let steps: Vec<Value> = outcome
        .steps()
        .iter()
        .map(|step| {
            let mv = match &step.action {
                NormalMove::AddConstantToY { alpha } => json!({
                    "type": "add_constant_to_y",
                    "alpha": rat_str(alpha),
                }),
                NormalMove::SubtractYPower { theta, coeff } => json!({
                    "type": "subtract_y_power",
                    "theta": theta,
                    "coefficient": rat_str(coeff),
                }),
            };
            json!({
                "lambda": step.lambda,
                "c_lambda": rat_str(&step.c_lambda),
                "wronskian_before": { "degree": step.wronskian_before.0, "coefficient": rat_str(&step.wronskian_before.1) },
                "wronskian_after": step.wronskian_after.as_ref().map(|(e, c)| json!({ "degree": e, "coefficient": rat_str(c) })),
                "move": mv,
            })
        })
        .collect();
    match outcome {
        NormalFormOutcome::QuasiHomogeneous { .. } => json!({
            "outcome": "quasi_homogeneous",
            "steps": steps,
            "max_precision": max_precision,
        }),
        NormalFormOutcome::NonExactWitness { witness_degree, .. } => json!({
            "outcome": "non_exact_witness",
            "witness_degree": witness_degree,
            "steps": steps,
            "max_precision": max_precision,
        }),
    }
}

// ---- ideal -------------------------------------------------------------------

fn run_ideal(args: IdealArgs) -> Result<String, CliError> {
    let s = parse_semigroup(&args.ambient)?;
    if let Some(pair) = &args.pair {
        let values = parse_int_list(pair)?;
        if values.len() != 2 {
            return Err(CliError::input("--pair needs exactly two integers"));
        }
        let relators = pair_relators(values[0], values[1], &s);
        if args.json {
            return Ok(format!(
                "{}\n",
                json!({ "pair": values, "relators": relators.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>() })
            ));
        }
        return Ok(format!(
            "{}\n",
            bracket_list(relators.iter().map(|&(a, b)| format!("[ {a}, {b} ]")))
        ));
    }
    let gens = parse_int_list(
        args.gens
            .as_deref()
            .ok_or_else(|| CliError::input("--gens or --pair is required"))?,
    )?;
    let ideal =
        RelativeIdeal::from_generators(&s, &gens).map_err(|e| CliError::input(e.to_string()))?;
    if let Some(other) = &args.intersect {
        let other_gens = parse_int_list(other)?;
        let other = RelativeIdeal::from_generators(&s, &other_gens)
            .map_err(|e| CliError::input(e.to_string()))?;
        let meet = ideal.intersect(&other).map_err(|e| CliError::input(e.to_string()))?;
        if args.json {
            return Ok(format!("{}\n", json!({ "intersection": meet.min_gens() })));
        }
        return Ok(format!("{}\n", bracket_list(meet.min_gens().iter())));
    }
    match args.show {
        IdealShow::MinGens => {
            if args.json {
                Ok(format!("{}\n", json!({ "min_gens": ideal.min_gens() })))
            } else {
                Ok(format!("{}\n", bracket_list(ideal.min_gens().iter())))
            }
        }
        IdealShow::Kernel => {
            let relators = kernel_generators(&ideal);
            if args.json {
                Ok(format!(
                    "{}\n",
                    json!({
                        "relators": relators
                            .iter()
                            .map(|k| json!({ "i": k.i, "j": k.j, "alpha": k.alpha, "beta": k.beta }))
                            .collect::<Vec<_>>()
                    })
                ))
            } else {
                Ok(format!(
                    "{}\n",
                    bracket_list(relators.iter().map(|k| format!("[ {}, {} ]", k.alpha, k.beta)))
                ))
            }
        }
        IdealShow::OverIdeals => {
            let lattice = over_ideals(&ideal).map_err(|e| CliError::input(e.to_string()))?;
            if args.json {
                Ok(format!(
                    "{}\n",
                    json!({
                        "over_ideals": lattice.iter().map(|i| i.min_gens()).collect::<Vec<_>>(),
                        "non_exact": lattice
                            .iter()
                            .map(|i| semideg::kahler::non_exact_set(i, &s))
                            .collect::<Vec<_>>(),
                    })
                ))
            } else {
                let mut out = String::new();
                for i in &lattice {
                    writeln!(
                        out,
                        "{}  NE {}",
                        bracket_list(i.min_gens().iter()),
                        bracket_list(semideg::kahler::non_exact_set(i, &s).iter())
                    )
                    .unwrap();
                }
                Ok(out)
            }
        }
        IdealShow::NonExact => {
            let ne = semideg::kahler::non_exact_set(&ideal, &s);
            if args.json {
                Ok(format!("{}\n", json!({ "non_exact": ne })))
            } else {
                Ok(format!("{}\n", bracket_list(ne.iter())))
            }
        }
    }
}

// ---- classify ------------------------------------------------------------------

fn run_classify(args: CurveArgs) -> Result<String, CliError> {
    let curve = parse_curve(&args.x, &args.y)?;
    let report = curve_invariants(&curve).map_err(|e| CliError::input(e.to_string()))?;
    let ds = delta_sequence(report.gamma(), curve.m(), curve.n())
        .map_err(|e| CliError::input(e.to_string()))?;
    let verdict = classify_curve(&report, &ds);
    if args.json {
        return Ok(format!("{}\n", classify_report_json(&report, &ds, &verdict)));
    }
    let mut out = String::new();
    writeln!(out, "gamma: {}", bracket_list(report.gamma().min_gens().iter())).unwrap();
    writeln!(out, "arrangement: {}", bracket_list(ds.arrangement().iter())).unwrap();
    writeln!(out, "divisors: {}", bracket_list(ds.free().divisors().iter())).unwrap();
    writeln!(out, "quotients: {}", bracket_list(ds.free().quotients().iter())).unwrap();
    writeln!(out, "puiseux: {}", bracket_list(ds.puiseux().iter())).unwrap();
    writeln!(out, "NE: {}", bracket_list(report.ne_set().iter())).unwrap();
    writeln!(out, "ne: {}", report.ne()).unwrap();
    writeln!(out, "mu: {}", report.mu()).unwrap();
    writeln!(out, "nu: {}", report.nu()).unwrap();
    writeln!(out, "family: {}", verdict.family).unwrap();
    if let Some(pattern) = verdict.ne_pattern {
        writeln!(out, "pattern: {}", pattern.label()).unwrap();
    }
    if verdict.violations.is_empty() {
        writeln!(out, "violations: none").unwrap();
    } else {
        for v in &verdict.violations {
            writeln!(out, "violation: {v}").unwrap();
        }
    }
    Ok(out)
}

fn classify_report_json(
    report: &DifferentialReport,
    ds: &DeltaSequence,
    verdict: &semideg::classify::Classification,
) -> Value {
    json!({
        "gamma": report.gamma().min_gens(),
        "delta": {
            "arrangement": ds.arrangement(),
            "divisors": ds.free().divisors(),
            "quotients": ds.free().quotients(),
            "puiseux": ds.puiseux(),
            "products_decreasing": ds.products_decreasing(),
        },
        "ne_set": report.ne_set(),
        "ne": verdict.ne,
        "mu": report.mu(),
        "nu": report.nu(),
        "family": verdict.family,
        "pattern": verdict.ne_pattern.map(|p| p.label()),
        "violations": verdict.violations,
    })
}
