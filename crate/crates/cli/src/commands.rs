use std::path::Path;

use log::{debug, info};
use serde::Serialize;
use specmm::classic::{verify_diagonal_reduction, VectorGame};
use specmm::domains::{lambda_min_by_bisection, spectraplex_linear_min, SimplexPoint};
use specmm::embed::{
    build_embedding, extract_dual, interior_dual_point, interior_primal_point, lift_dual, transport_certificate,
    weak_duality_check, DualExtraction,
};
use specmm::saddle::{solve_maximin, solve_minimax};
use specmm::sdpa::write_sdpa;
use specmm::symmat::lambda_min;
use specmm::{Error, InstanceSet, SaddleConfig, Sense, SymMatrix};

use crate::instance::{self, VectorsFile};
use crate::report::ReportFile;
use crate::{CheckArgs, ClassicArgs, EmbedArgs, SolveArgs, SolverFlags};

pub type Outcome = Result<u8, String>;

fn config(flags: &SolverFlags, shift: crate::Shift) -> Result<SaddleConfig, String> {
    if let Some(seed) = flags.seed {
        debug!("--seed {seed} ignored: the solver is deterministic");
    }
    let cfg = SaddleConfig {
        max_iters: flags.max_iters,
        gap_tol: flags.tol,
        shift_policy: shift.into(),
        ..SaddleConfig::default()
    };
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn solve(args: &SolveArgs, sense: Sense) -> Outcome {
    let inst = instance::load(&args.instance)?;
    let cfg = config(&args.solver, args.shift)?;
    let cert = match sense {
        Sense::Minimax => solve_minimax(&inst, &cfg),
        Sense::Maximin => solve_maximin(&inst, &cfg),
    }
    .map_err(|e| e.to_string())?;
    info!("{} iterations, gap {:e}", cert.iterations, cert.gap);
    let shift = build_embedding(&inst, cfg.shift_policy)
        .map_err(|e| e.to_string())?
        .shift();
    let report = ReportFile::new(&cert, shift);
    let text = if args.format.json {
        report.to_json()
    } else {
        report.to_text()
    };
    emit(&text, args.out.as_deref())?;
    Ok(if args.solver.strict && !cert.converged { 2 } else { 0 })
}

pub fn embed(args: &EmbedArgs) -> Outcome {
    let inst = instance::load(&args.instance)?;
    let emb = build_embedding(&inst, args.shift.into()).map_err(|e| e.to_string())?;
    emit(&write_sdpa(&emb), args.out.as_deref())?;
    Ok(0)
}

#[derive(Serialize)]
struct ClassicReport {
    classic_value: f64,
    spectral_value: f64,
    difference: f64,
    within_tolerance: bool,
    spectral_gap: f64,
    iterations: usize,
}

pub fn classic(args: &ClassicArgs) -> Outcome {
    let rows = match (&args.vectors, &args.rows) {
        (_, Some(inline)) => instance::parse_rows(inline)?,
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            serde_json::from_str::<VectorsFile>(&text)
                .map_err(|e| format!("{}: {e}", path.display()))?
                .vectors
        }
        (None, None) => return Err("provide a vectors file or --rows".into()),
    };
    let game = VectorGame::new(rows).map_err(|e| format!("field `vectors`: {e}"))?;
    let cfg = config(&args.solver, crate::Shift::Auto)?;
    let r = verify_diagonal_reduction(&game, &cfg).map_err(|e| e.to_string())?;
    let report = ClassicReport {
        classic_value: r.classic_value,
        spectral_value: r.spectral_value,
        difference: r.difference,
        within_tolerance: r.within_tolerance,
        spectral_gap: r.certificate.gap,
        iterations: r.certificate.iterations,
    };
    if args.format.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("finite report"));
    } else {
        println!("classic value   {:?}", report.classic_value);
        println!("spectral value  {:?}", report.spectral_value);
        println!("difference      {:?}", report.difference);
        println!("within tol      {}", report.within_tolerance);
    }
    Ok(if r.within_tolerance { 0 } else { 2 })
}

#[derive(Serialize)]
struct CheckLine {
    name: &'static str,
    status: &'static str,
    residual: f64,
    detail: String,
}

impl CheckLine {
    fn new(name: &'static str, passed: bool, residual: f64, detail: String) -> Self {
        let status = if passed { "pass" } else { "fail" };
        Self {
            name,
            status,
            residual,
            detail,
        }
    }
}

fn run_checks(inst: &InstanceSet, policy: specmm::ShiftPolicy) -> Result<Vec<CheckLine>, Error> {
    let mut lines = Vec::new();

    let mut worst = 0.0f64;
    for a in inst.matrices() {
        let (v, _) = spectraplex_linear_min(a)?;
        worst = worst.max((v - lambda_min_by_bisection(a, 1e-8)?).abs());
    }
    lines.push(CheckLine::new(
        "eigen-bisection-agreement",
        worst <= 1e-7,
        worst,
        "max |linear min - bisection| over the matrices, limit 1e-7".into(),
    ));

    let emb = build_embedding(inst, policy)?;
    let primal = interior_primal_point(inst, &emb)?;
    let min_slack = primal.slacks.iter().copied().fold(f64::INFINITY, f64::min);
    lines.push(CheckLine::new(
        "interior-primal",
        min_slack > 0.0 && primal.delta > 0.0 && primal.max_residual() <= 1e-12,
        primal.max_residual(),
        format!("min slack {min_slack:?}, delta {:?}", primal.delta),
    ));
    let dual = interior_dual_point(inst, &emb)?;
    let min_s = dual.min_eigenvalue()?;
    lines.push(CheckLine::new(
        "interior-dual",
        min_s > 0.0 && dual.residual <= 1e-12,
        dual.residual,
        format!("lambda_min(S) {min_s:?}"),
    ));
    let weak = weak_duality_check(&primal, &dual, &emb)?;
    lines.push(CheckLine::new(
        "weak-duality",
        weak >= -1e-9,
        weak,
        "C'.X' - t on the interior pair, limit -1e-9".into(),
    ));

    let y = SimplexPoint::uniform(inst.count());
    let shifted = inst.shifted(emb.shift());
    let t = lambda_min(&SymMatrix::linear_combination(y.weights(), shifted.matrices())?)?;
    let lift = lift_dual(&y, t, inst, &emb)?;
    let round_trip = match extract_dual(&lift, &emb)? {
        DualExtraction::Certified { y: back, lower } => back
            .weights()
            .iter()
            .zip(y.weights())
            .map(|(a, b)| (a - b).abs())
            .fold((lower - (t - emb.shift())).abs(), f64::max),
        DualExtraction::Degenerate { .. } => f64::INFINITY,
    };
    lines.push(CheckLine::new(
        "dual-lift-round-trip",
        lift.residual <= 1e-12 && round_trip <= 1e-10,
        round_trip,
        format!("lift residual {:?}", lift.residual),
    ));

    let cert = solve_minimax(inst, &SaddleConfig::default())?;
    match transport_certificate(&cert, inst, policy) {
        Ok(e) => {
            let mismatch = (e.extracted_lower - cert.lower).abs().max((e.upper - cert.upper).abs());
            lines.push(CheckLine::new(
                "certificate-transport",
                mismatch <= 1e-9 && e.duality_gap >= -1e-9,
                mismatch,
                format!("embedded duality gap {:?}", e.duality_gap),
            ));
        }
        Err(err @ Error::NegativeObjective { .. }) => lines.push(CheckLine {
            name: "certificate-transport",
            status: "skip",
            residual: 0.0,
            detail: err.to_string(),
        }),
        Err(err) => return Err(err),
    }
    Ok(lines)
}

pub fn check(args: &CheckArgs) -> Outcome {
    let inst = instance::load(&args.instance)?;
    let lines = run_checks(&inst, args.shift.into()).map_err(|e| e.to_string())?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&lines).expect("finite residuals"));
    } else {
        for l in &lines {
            println!(
                "{:<4} {:<26} residual {:<24?} {}",
                l.status.to_uppercase(),
                l.name,
                l.residual,
                l.detail
            );
        }
    }
    Ok(if lines.iter().any(|l| l.status == "fail") { 2 } else { 0 })
}
