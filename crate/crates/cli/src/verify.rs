use pardeg_core::cartan::{CartanType, RootSystem};
use pardeg_core::degree::subset_from_mask;
use pardeg_core::oracles::{self, LemmaVerdict, DEFAULT_TORUS_CAP};
use pardeg_core::weyl::{ParabolicDatum, WeylElement};
use pardeg_core::Error as CoreError;
use serde::Serialize;

use crate::args::{Format, VerifyArgs};
use crate::config;
use crate::error::CliError;
use crate::output;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Wdeco,
    Kernel,
    KernelVectors,
    Torus,
    RankInvariance,
}

impl Suite {
    const ALL: [Suite; 5] = [
        Suite::Wdeco,
        Suite::Kernel,
        Suite::KernelVectors,
        Suite::Torus,
        Suite::RankInvariance,
    ];

    fn parse(s: &str) -> Result<Vec<Suite>, CliError> {
        Ok(match s {
            "wdeco" => vec![Suite::Wdeco],
            "kernel" => vec![Suite::Kernel],
            "kernel-vectors" => vec![Suite::KernelVectors],
            "torus" => vec![Suite::Torus],
            "rank-invariance" => vec![Suite::RankInvariance],
            "all" => Suite::ALL.to_vec(),
            other => {
                return Err(CliError::Usage(format!(
                    "unknown suite {other:?}; expected wdeco, kernel, kernel-vectors, torus, rank-invariance or all"
                )))
            }
        })
    }
}

#[derive(Serialize)]
struct VerdictRecord {
    lemma: &'static str,
    instance: String,
    passed: bool,
    checks: usize,
    counterexample: Option<String>,
    notes: Vec<String>,
    seed: Option<u64>,
}

impl From<&LemmaVerdict> for VerdictRecord {
    fn from(v: &LemmaVerdict) -> Self {
        VerdictRecord {
            lemma: v.lemma.id(),
            instance: v.instance.clone(),
            passed: v.passed,
            checks: v.checks,
            counterexample: v.counterexample.clone(),
            notes: v.notes.clone(),
            seed: v.seed,
        }
    }
}

#[derive(Serialize)]
struct Summary {
    suite: String,
    passed: bool,
    total: usize,
    failed: usize,
    verdicts: Vec<VerdictRecord>,
}

/// Validated inputs of one `verify` run.
struct Plan {
    suites: Vec<Suite>,
    ty: Option<CartanType>,
    subsets: Vec<Vec<usize>>,
    l: u64,
    trials: Option<usize>,
    seed: u64,
    guard: u128,
}

fn plan(args: &VerifyArgs) -> Result<Plan, CliError> {
    let suites = Suite::parse(&args.suite)?;
    let ty = args
        .cartan_type
        .as_deref()
        .map(config::cartan_type)
        .transpose()?;
    let needs_type = suites.iter().any(|s| *s != Suite::Torus);
    let ty = match (ty, needs_type) {
        (None, true) => {
            return Err(CliError::Usage(format!(
                "suite {} needs --type",
                args.suite
            )))
        }
        (ty, _) => ty,
    };
    let torus_only = suites == [Suite::Torus];
    let l = config::modulus(args.l.unwrap_or(if torus_only { 3 } else { 5 }))?;
    let subsets = match (ty, &args.levi) {
        (Some(ty), Some(levi)) => vec![config::levi(levi, ty.rank())?],
        (Some(ty), None) => (0..1u64 << ty.rank())
            .map(|m| subset_from_mask(ty.rank(), m))
            .collect(),
        (None, _) => Vec::new(),
    };
    if args.trials == Some(0) {
        return Err(CliError::Usage(String::from("--trials must be positive")));
    }
    Ok(Plan {
        suites,
        ty,
        subsets,
        l,
        trials: args.trials,
        seed: args.seed,
        guard: args.guard,
    })
}

/// Exhaustive over `W` when it fits the guard, otherwise `w0` and every `w0_levi`.
fn wdeco(rs: &RootSystem, subsets: &[Vec<usize>], guard: u128) -> Result<LemmaVerdict, CliError> {
    match oracles::verify_wdeco(rs, guard) {
        Ok(v) => Ok(v),
        Err(CoreError::GuardExceeded { order, guard }) => {
            let mut elements: Vec<WeylElement> = Vec::new();
            for levi in subsets {
                let pd = ParabolicDatum::new(rs, levi, None)?;
                if elements.is_empty() {
                    elements.push(pd.w0().clone());
                }
                elements.push(pd.w0_levi().clone());
            }
            let mut v = oracles::verify_wdeco_for(rs, &elements)?;
            v.instance = format!("{} w0 and Levi longest elements", rs.cartan_type());
            v.notes.push(format!(
                "|W| = {order} exceeds guard {guard}; exhaustive pass skipped"
            ));
            Ok(v)
        }
        Err(e) => Err(e.into()),
    }
}

fn run(plan: &Plan) -> Result<Vec<LemmaVerdict>, CliError> {
    let mut verdicts = Vec::new();
    let rs = plan.ty.map(RootSystem::of_type);
    for suite in &plan.suites {
        match suite {
            Suite::Wdeco => {
                let rs = rs.as_ref().expect("type checked in plan");
                verdicts.push(wdeco(rs, &plan.subsets, plan.guard)?);
            }
            Suite::Kernel => {
                let rs = rs.as_ref().expect("type checked in plan");
                for levi in &plan.subsets {
                    let pd = ParabolicDatum::new(rs, levi, None)?;
                    verdicts.push(oracles::verify_kernel_dimension(&pd, plan.l)?);
                }
            }
            Suite::KernelVectors => {
                let rs = rs.as_ref().expect("type checked in plan");
                for levi in &plan.subsets {
                    let pd = ParabolicDatum::new(rs, levi, None)?;
                    verdicts.push(oracles::probe_kernel_vectors(&pd)?.verdict);
                }
            }
            Suite::Torus => {
                let trials = plan.trials.unwrap_or(20);
                verdicts.push(oracles::verify_torus(
                    plan.l,
                    trials,
                    plan.seed,
                    DEFAULT_TORUS_CAP,
                )?);
            }
            Suite::RankInvariance => {
                let rs = rs.as_ref().expect("type checked in plan");
                let trials = plan.trials.unwrap_or(3).max(2);
                for levi in &plan.subsets {
                    verdicts.push(oracles::rank_invariance(rs, levi, plan.l, trials)?);
                }
            }
        }
    }
    Ok(verdicts)
}

pub fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    let plan = plan(args)?;
    if plan.suites.contains(&Suite::Torus) && !pardeg_core::exactla::is_prime(plan.l) {
        return Err(CliError::Usage(format!(
            "the torus suite needs a prime --l, got {}",
            plan.l
        )));
    }
    let verdicts = run(&plan)?;
    let failed = verdicts.iter().filter(|v| !v.passed).count();
    let body = match args.format {
        Format::Json | Format::Csv => output::json(&Summary {
            suite: args.suite.clone(),
            passed: failed == 0,
            total: verdicts.len(),
            failed,
            verdicts: verdicts.iter().map(VerdictRecord::from).collect(),
        }),
        Format::Text => {
            let mut s: String = verdicts.iter().map(|v| format!("{v}\n")).collect();
            s.push_str(&format!(
                "{} of {} verdicts passed\n",
                verdicts.len() - failed,
                verdicts.len()
            ));
            s
        }
    };
    output::emit(&body, args.out.as_deref())?;
    if failed > 0 {
        return Err(CliError::Assertion(format!(
            "{failed} of {} verdicts failed",
            verdicts.len()
        )));
    }
    Ok(())
}
