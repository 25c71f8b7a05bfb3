//! Command-line frontend: one verb per engine operation.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use linrew_core::involutive::{
    check_autoreduced, check_division_axioms, check_involutive, complete, left_autoreduced,
    multiplicative_variables, strategy_snf, AutoreduceCheck, Division, DivisionAxioms,
    InvolutiveCheckMode, InvolutiveError, InvolutiveSystem, Involutivity, PommaretConvention,
};
use linrew_core::rewrite::{
    certify_strategy, check_decreasing, check_local_confluence, check_s_confluence,
    quotient_basis, serialize_parallel, snf_iterates, CertStatus, Decreasing,
    LocalConfluence, RewriteError, SConfluence,
};
use linrew_core::weyl::{
    lm, theta_nf, theta_nf_all_paths, weyl_mul, window_system, ThetaSystem,
};
use linrew_core::{DEFAULT_FUEL, DEFAULT_NODE_BUDGET};

use crate::error::CliError;
use crate::expr::{parse_qcomb, parse_weyl_op};
use crate::render::{
    dmonomial_string, op_json, op_string, qcomb_json, qcomb_string, trace_json, trace_lines,
    varset_json, varset_string,
};
use crate::report::{Report, Verdict};
use crate::sysfile::{parse_division, parse_system_file, LinearFile, SystemFile, WeylFile};

/// Exact rewriting over vector spaces: strategies, S-confluence, quotient
/// bases, and involutive divisions on rational Weyl algebras.
#[derive(Parser)]
#[command(name = "linrew", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Verb,
}

#[derive(Args)]
pub struct Common {
    /// Emit the JSON report on stdout instead of human-readable text.
    #[arg(long)]
    pub json: bool,
    /// Iteration budget for fixpoints and searches.
    #[arg(long)]
    pub fuel: Option<usize>,
    /// Include reduction traces in the output where applicable.
    #[arg(long)]
    pub trace: bool,
    /// Override the involutive division declared in the file.
    #[arg(long)]
    pub division: Option<String>,
    /// Reading of the Pommaret condition.
    #[arg(long, value_parser = ["paper", "classical"], default_value = "paper")]
    pub pommaret_convention: String,
    /// Override the monomial order, e.g. "deglex d1 < d2 < d3".
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Subcommand)]
pub enum Verb {
    /// Certify that the selected rules form a well-founded strategy.
    CheckStrategy {
        file: PathBuf,
        /// Comma-separated basis elements to close over (default: all).
        #[arg(long)]
        roots: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Normal form of an expression under the file's strategy.
    Snf {
        file: PathBuf,
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check that every rule's sides share a normal form under the strategy.
    SConfluence {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check joinability of every pair of rules with a shared left-hand side.
    LocalConfluence {
        file: PathBuf,
        /// Degree bound for the induced rule window of operator systems.
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Basis of the quotient by the rules, as normal-form basis elements.
    QuotientBasis {
        file: PathBuf,
        #[arg(long)]
        roots: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Check decreasingness against the file's rule precedence.
    Decreasing {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Serialize one parallel step into single rewriting steps.
    Serialize {
        file: PathBuf,
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Normal form under the operator rewriting relation.
    WeylNf {
        file: PathBuf,
        expr: String,
        /// Explore every reduction choice and report all normal forms.
        #[arg(long)]
        all_paths: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Product of two operators.
    WeylMul {
        file: PathBuf,
        left: String,
        right: String,
        #[command(flatten)]
        common: Common,
    },
    /// Multiplicative-variable tables for the file's division.
    Divisions {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check that no leading monomial involutively divides another.
    Autoreduced {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check involutivity by prolongations.
    Involutive {
        file: PathBuf,
        /// Check all prolongation cofactors up to this total degree instead
        /// of single variables.
        #[arg(long)]
        depth: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Complete the operator set into an involutive one.
    Complete {
        file: PathBuf,
        #[arg(long)]
        max_rounds: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustively check the involutive-division axioms on the leading
    /// monomials.
    Axioms {
        file: PathBuf,
        /// Total-degree bound for the tested monomials.
        #[arg(long, default_value_t = 6)]
        depth: u32,
        #[command(flatten)]
        common: Common,
    },
}

impl Verb {
    pub fn common(&self) -> &Common {
        match self {
            Verb::CheckStrategy { common, .. }
            | Verb::Snf { common, .. }
            | Verb::SConfluence { common, .. }
            | Verb::LocalConfluence { common, .. }
            | Verb::QuotientBasis { common, .. }
            | Verb::Decreasing { common, .. }
            | Verb::Serialize { common, .. }
            | Verb::WeylNf { common, .. }
            | Verb::WeylMul { common, .. }
            | Verb::Divisions { common, .. }
            | Verb::Autoreduced { common, .. }
            | Verb::Involutive { common, .. }
            | Verb::Complete { common, .. }
            | Verb::Axioms { common, .. } => common,
        }
    }
}

pub fn node_budget() -> usize {
    std::env::var("LINREW_NODE_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_NODE_BUDGET)
}

fn fuel_of(common: &Common) -> usize {
    common.fuel.unwrap_or(DEFAULT_FUEL)
}

fn linear(file: SystemFile, verb: &str) -> Result<Box<LinearFile>, CliError> {
    match file {
        SystemFile::Linear(f) => Ok(f),
        SystemFile::Weyl(_) => Err(CliError::IncompatibleVerb { verb: verb.to_string() }),
    }
}

fn weyl(file: SystemFile, verb: &str) -> Result<Box<WeylFile>, CliError> {
    match file {
        SystemFile::Weyl(f) => Ok(f),
        SystemFile::Linear(_) => Err(CliError::IncompatibleVerb { verb: verb.to_string() }),
    }
}

/// Apply `--order` and `--division`/`--pommaret-convention` overrides and
/// pair the operator system with its division.
fn involutive_system(file: &WeylFile, common: &Common) -> Result<InvolutiveSystem, CliError> {
    let theta = theta_with_overrides(file, common)?;
    let mut division = match &common.division {
        Some(name) => parse_division(name, 0)?,
        None => file
            .division
            .clone()
            .ok_or_else(|| CliError::validation("no division: declare one in the file or pass --division"))?,
    };
    if common.pommaret_convention == "classical" {
        if let Division::Pommaret(_) = division {
            division = Division::Pommaret(PommaretConvention::Classical);
        }
    }
    InvolutiveSystem::new(theta, division).map_err(CliError::validation)
}

fn theta_with_overrides(file: &WeylFile, common: &Common) -> Result<ThetaSystem, CliError> {
    let Some(order_text) = &common.order else {
        return Ok(file.theta.clone());
    };
    // Reuse the file grammar: "deglex d1 < d2 < d3".
    let synthetic = format!(
        "weyl vars {}\norder {}\n{}",
        (0..file.names.len())
            .map(|i| file.names.x(i).to_string())
            .collect::<Vec<_>>()
            .join(" "),
        order_text,
        (0..file.theta.len())
            .map(|i| {
                format!(
                    "op {} = {}",
                    file.theta.names()[i],
                    op_string(&file.theta.ops()[i], file.theta.order(), &file.names)
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    );
    match crate::sysfile::parse_system(&synthetic)? {
        SystemFile::Weyl(f) => Ok(f.theta),
        SystemFile::Linear(_) => unreachable!("synthetic file is a weyl file"),
    }
}

fn parse_roots(spec: &Option<String>, default: &BTreeSet<String>) -> BTreeSet<String> {
    match spec {
        None => default.clone(),
        Some(s) => s
            .split(',')
            .map(|x| x.trim().to_string())
            .filter(|x| !x.is_empty())
            .collect(),
    }
}

pub fn run(cli: Cli) -> Result<Report, CliError> {
    let budget = node_budget();
    match cli.command {
        Verb::CheckStrategy { file, roots, common: _ } => {
            let f = linear(parse_system_file(&file)?, "check-strategy")?;
            let roots = parse_roots(&roots, &f.basis);
            let cert = certify_strategy(&f.system, &f.strategy, &roots, budget)
                .map_err(CliError::validation)?;
            Ok(match cert.status {
                CertStatus::CertifiedWellFounded => {
                    let ranks = cert.ranks.unwrap_or_default();
                    let mut human = vec!["certified well-founded".to_string()];
                    for (e, r) in &ranks {
                        human.push(format!("  rank {r}: {e}"));
                    }
                    Report::new(
                        "check-strategy",
                        Verdict::Holds,
                        json!({
                            "status": "certified-well-founded",
                            "ranks": ranks.iter().map(|(e, r)| (e.clone(), json!(r))).collect::<serde_json::Map<_, _>>(),
                        }),
                        human,
                    )
                }
                CertStatus::CycleFound(cycle) => Report::new(
                    "check-strategy",
                    Verdict::Witness,
                    json!({ "status": "cycle", "cycle": cycle }),
                    vec![format!("cycle found: {}", cycle.join(" -> "))],
                ),
                CertStatus::Unknown => Report::new(
                    "check-strategy",
                    Verdict::Unknown,
                    json!({ "status": "unknown" }),
                    vec!["well-foundedness unknown".to_string()],
                ),
            })
        }
        Verb::Snf { file, expr, common } => match parse_system_file(&file)? {
            SystemFile::Linear(f) => {
                let input = parse_qcomb(&expr, 0)?;
                let resolved = f.strategy.resolve(&f.system).map_err(CliError::validation)?;
                match snf_iterates(&input, &resolved, fuel_of(&common)) {
                    Ok(chain) => {
                        let nf = chain.last().unwrap().clone();
                        let mut human = vec![qcomb_string(&nf)];
                        if common.trace {
                            for (i, step) in chain.iter().enumerate() {
                                human.push(format!("  step {i}: {}", qcomb_string(step)));
                            }
                        }
                        Ok(Report::new(
                            "snf",
                            Verdict::Holds,
                            json!({
                                "input": qcomb_json(&input),
                                "normal_form": qcomb_json(&nf),
                                "iterates": chain.iter().map(qcomb_json).collect::<Vec<_>>(),
                            }),
                            human,
                        ))
                    }
                    Err(RewriteError::FuelExhausted { fuel }) => Ok(Report::new(
                        "snf",
                        Verdict::Unknown,
                        json!({ "error": "fuel-exhausted", "fuel": fuel }),
                        vec![format!("no fixpoint within fuel {fuel}")],
                    )),
                    Err(other) => Err(CliError::validation(other)),
                }
            }
            SystemFile::Weyl(f) => {
                let sys = involutive_system(&f, &common)?;
                let input = parse_weyl_op(&expr, &f.names, 0)?;
                let nf = strategy_snf(&input, &sys).map_err(CliError::validation)?;
                Ok(Report::new(
                    "snf",
                    Verdict::Holds,
                    json!({
                        "input": op_json(&input, &f.names),
                        "normal_form": op_json(&nf, &f.names),
                    }),
                    vec![op_string(&nf, sys.theta().order(), &f.names)],
                ))
            }
        },
        Verb::SConfluence { file, common } => {
            let f = linear(parse_system_file(&file)?, "s-confluence")?;
            match check_s_confluence(&f.system, &f.strategy, fuel_of(&common)) {
                Ok(SConfluence::Confluent) => Ok(Report::new(
                    "s-confluence",
                    Verdict::Holds,
                    json!({ "status": "confluent" }),
                    vec!["S-confluent".to_string()],
                )),
                Ok(SConfluence::Witness { rule, residual }) => Ok(Report::new(
                    "s-confluence",
                    Verdict::Witness,
                    json!({
                        "status": "witness",
                        "rule": rule.as_str(),
                        "residual": qcomb_json(&residual),
                    }),
                    vec![format!(
                        "not S-confluent: rule {rule} leaves residual {}",
                        qcomb_string(&residual)
                    )],
                )),
                Err(RewriteError::FuelExhausted { fuel }) => Ok(Report::new(
                    "s-confluence",
                    Verdict::Unknown,
                    json!({ "error": "fuel-exhausted", "fuel": fuel }),
                    vec![format!("no fixpoint within fuel {fuel}")],
                )),
                Err(other) => Err(CliError::validation(other)),
            }
        }
        Verb::LocalConfluence { file, depth, common } => {
            let fuel = fuel_of(&common);
            let report = |outcome: Result<LocalConfluence<String, _>, RewriteError>,
                          render: &dyn Fn(&linrew_core::linspace::LinComb<String, linrew_core::scalar::Rational>) -> String|
             -> Result<Report, CliError> {
                match outcome {
                    Ok(LocalConfluence::LocallyConfluent) => Ok(Report::new(
                        "local-confluence",
                        Verdict::Holds,
                        json!({ "status": "locally-confluent" }),
                        vec!["locally confluent".to_string()],
                    )),
                    Ok(LocalConfluence::Witness { lhs, left, right }) => Ok(Report::new(
                        "local-confluence",
                        Verdict::Witness,
                        json!({
                            "status": "witness",
                            "lhs": lhs,
                            "left": qcomb_json(&left),
                            "right": qcomb_json(&right),
                        }),
                        vec![format!(
                            "not locally confluent at {lhs}: {} and {} are not joinable",
                            render(&left),
                            render(&right)
                        )],
                    )),
                    Err(RewriteError::FuelExhausted { fuel }) => Ok(Report::new(
                        "local-confluence",
                        Verdict::Unknown,
                        json!({ "error": "fuel-exhausted", "fuel": fuel }),
                        vec![format!("joinability search ran out of fuel {fuel}")],
                    )),
                    Err(other) => Err(CliError::validation(other)),
                }
            };
            match parse_system_file(&file)? {
                SystemFile::Linear(f) => {
                    report(check_local_confluence(&f.system, fuel), &qcomb_string)
                }
                SystemFile::Weyl(f) => {
                    let theta = theta_with_overrides(&f, &common)?;
                    let window = window_system(&theta, depth.unwrap_or(4));
                    match check_local_confluence(&window, fuel) {
                        Ok(LocalConfluence::LocallyConfluent) => Ok(Report::new(
                            "local-confluence",
                            Verdict::Holds,
                            json!({ "status": "locally-confluent", "window": depth.unwrap_or(4) }),
                            vec!["locally confluent on the window".to_string()],
                        )),
                        Ok(LocalConfluence::Witness { lhs, left, right }) => Ok(Report::new(
                            "local-confluence",
                            Verdict::Witness,
                            json!({
                                "status": "witness",
                                "lhs": dmonomial_string(&lhs, &f.names),
                                "left": op_json(&left, &f.names),
                                "right": op_json(&right, &f.names),
                            }),
                            vec![format!(
                                "not locally confluent at {}: {} and {} are not joinable",
                                dmonomial_string(&lhs, &f.names),
                                op_string(&left, theta.order(), &f.names),
                                op_string(&right, theta.order(), &f.names)
                            )],
                        )),
                        Err(RewriteError::FuelExhausted { fuel }) => Ok(Report::new(
                            "local-confluence",
                            Verdict::Unknown,
                            json!({ "error": "fuel-exhausted", "fuel": fuel }),
                            vec![format!("joinability search ran out of fuel {fuel}")],
                        )),
                        Err(other) => Err(CliError::validation(other)),
                    }
                }
            }
        }
        Verb::QuotientBasis { file, roots, common } => {
            let f = linear(parse_system_file(&file)?, "quotient-basis")?;
            let roots = parse_roots(&roots, &f.basis);
            match quotient_basis(&f.system, &f.strategy, &roots, fuel_of(&common)) {
                Ok(basis) => {
                    let list: Vec<String> = basis.into_iter().collect();
                    Ok(Report::new(
                        "quotient-basis",
                        Verdict::Holds,
                        json!({ "basis": list }),
                        vec![format!("quotient basis: {}", list.join(" "))],
                    ))
                }
                Err(RewriteError::NotSConfluent { rule }) => Ok(Report::new(
                    "quotient-basis",
                    Verdict::Witness,
                    json!({ "error": "not-s-confluent", "rule": rule.as_str() }),
                    vec![format!("precondition failed: not S-confluent at rule {rule}")],
                )),
                Err(RewriteError::FuelExhausted { fuel }) => Ok(Report::new(
                    "quotient-basis",
                    Verdict::Unknown,
                    json!({ "error": "fuel-exhausted", "fuel": fuel }),
                    vec![format!("no fixpoint within fuel {fuel}")],
                )),
                Err(other) => Err(CliError::validation(other)),
            }
        }
        Verb::Decreasing { file, common } => {
            let f = linear(parse_system_file(&file)?, "decreasing")?;
            let _ = &common;
            match check_decreasing(&f.system, &f.strategy, &f.precedence, budget) {
                Ok(Decreasing::Decreasing) => Ok(Report::new(
                    "decreasing",
                    Verdict::Holds,
                    json!({ "status": "decreasing" }),
                    vec!["decreasing for the given precedence".to_string()],
                )),
                Ok(Decreasing::Witness { rule }) => Ok(Report::new(
                    "decreasing",
                    Verdict::Witness,
                    json!({ "status": "witness", "rule": rule.as_str() }),
                    vec![format!("rule {rule} is not decreasing")],
                )),
                Err(other) => Err(CliError::validation(other)),
            }
        }
        Verb::Serialize { file, expr, common: _ } => {
            let f = linear(parse_system_file(&file)?, "serialize")?;
            let input = parse_qcomb(&expr, 0)?;
            match serialize_parallel(&f.system, &f.strategy, &input, budget) {
                Ok(trace) => {
                    let mut human = trace_lines(&trace);
                    human.insert(0, format!("{} single steps", trace.len()));
                    Ok(Report::new(
                        "serialize",
                        Verdict::Holds,
                        json!({ "trace": trace_json(&trace) }),
                        human,
                    ))
                }
                Err(RewriteError::NotCertified) => {
                    // Recover the cycle for the report.
                    let roots: BTreeSet<String> = input.support().cloned().collect();
                    let cert = certify_strategy(&f.system, &f.strategy, &roots, budget)
                        .map_err(CliError::validation)?;
                    let cycle = match cert.status {
                        CertStatus::CycleFound(c) => c,
                        _ => Vec::new(),
                    };
                    Ok(Report::new(
                        "serialize",
                        Verdict::Witness,
                        json!({ "error": "not-certified", "cycle": cycle }),
                        vec![format!("strategy not certified: cycle {}", cycle.join(" -> "))],
                    ))
                }
                Err(other) => Err(CliError::validation(other)),
            }
        }
        Verb::WeylNf { file, expr, all_paths, common } => {
            let f = weyl(parse_system_file(&file)?, "weyl-nf")?;
            let theta = theta_with_overrides(&f, &common)?;
            let input = parse_weyl_op(&expr, &f.names, 0)?;
            if all_paths {
                match theta_nf_all_paths(&input, &theta, fuel_of(&common)) {
                    Ok(nfs) => {
                        let rendered: Vec<String> = nfs
                            .iter()
                            .map(|nf| op_string(nf, theta.order(), &f.names))
                            .collect();
                        let mut human = vec![format!("{} normal form(s)", rendered.len())];
                        human.extend(rendered.iter().map(|s| format!("  {s}")));
                        Ok(Report::new(
                            "weyl-nf",
                            Verdict::Holds,
                            json!({
                                "normal_forms": nfs.iter().map(|nf| op_json(nf, &f.names)).collect::<Vec<_>>(),
                                "rendered": rendered,
                            }),
                            human,
                        ))
                    }
                    Err(RewriteError::FuelExhausted { fuel }) => Ok(Report::new(
                        "weyl-nf",
                        Verdict::Unknown,
                        json!({ "error": "fuel-exhausted", "fuel": fuel }),
                        vec![format!("exploration ran out of fuel {fuel}")],
                    )),
                    Err(other) => Err(CliError::validation(other)),
                }
            } else {
                let nf = theta_nf(&input, &theta);
                Ok(Report::new(
                    "weyl-nf",
                    Verdict::Holds,
                    json!({ "normal_form": op_json(&nf, &f.names) }),
                    vec![op_string(&nf, theta.order(), &f.names)],
                ))
            }
        }
        Verb::WeylMul { file, left, right, common } => {
            let f = weyl(parse_system_file(&file)?, "weyl-mul")?;
            let theta = theta_with_overrides(&f, &common)?;
            let a = parse_weyl_op(&left, &f.names, 0)?;
            let b = parse_weyl_op(&right, &f.names, 0)?;
            let product = weyl_mul(&a, &b).map_err(CliError::validation)?;
            Ok(Report::new(
                "weyl-mul",
                Verdict::Holds,
                json!({ "product": op_json(&product, &f.names) }),
                vec![op_string(&product, theta.order(), &f.names)],
            ))
        }
        Verb::Divisions { file, common } => {
            let f = weyl(parse_system_file(&file)?, "divisions")?;
            let sys = involutive_system(&f, &common)?;
            let lms = sys.leading_monomials();
            let names = sys.theta().names();
            let mut rows = Vec::new();
            let mut human = vec![format!("division: {}", sys.division().name())];
            let width = names.iter().map(String::len).max().unwrap_or(2).max(2);
            for (i, u) in lms.iter().enumerate() {
                let vars = multiplicative_variables(u, &lms, sys.division())
                    .map_err(CliError::validation)?;
                human.push(format!(
                    "  {:width$}  lm = {:10}  multiplicative: {}",
                    names[i],
                    dmonomial_string(u, &f.names),
                    varset_string(&vars, &f.names),
                ));
                rows.push(json!({
                    "op": names[i],
                    "lm": dmonomial_string(u, &f.names),
                    "multiplicative": varset_json(&vars, &f.names),
                }));
            }
            Ok(Report::new(
                "divisions",
                Verdict::Holds,
                json!({ "division": sys.division().name(), "table": rows }),
                human,
            ))
        }
        Verb::Autoreduced { file, common } => {
            let f = weyl(parse_system_file(&file)?, "autoreduced")?;
            let sys = involutive_system(&f, &common)?;
            match left_autoreduced(&sys) {
                AutoreduceCheck::Autoreduced => Ok(Report::new(
                    "autoreduced",
                    Verdict::Holds,
                    json!({ "status": "autoreduced" }),
                    vec!["left-autoreduced".to_string()],
                )),
                AutoreduceCheck::Witness { divisor, dividend } => Ok(Report::new(
                    "autoreduced",
                    Verdict::Witness,
                    json!({
                        "status": "witness",
                        "divisor": dmonomial_string(&divisor, &f.names),
                        "dividend": dmonomial_string(&dividend, &f.names),
                    }),
                    vec![format!(
                        "not autoreduced: {} involutively divides {}",
                        dmonomial_string(&divisor, &f.names),
                        dmonomial_string(&dividend, &f.names)
                    )],
                )),
            }
        }
        Verb::Involutive { file, depth, common } => {
            let f = weyl(parse_system_file(&file)?, "involutive")?;
            let sys = involutive_system(&f, &common)?;
            let mode = match depth {
                Some(d) => InvolutiveCheckMode::Bounded(d),
                None => f.check_mode.unwrap_or(InvolutiveCheckMode::Prolongations),
            };
            match check_involutive(&sys, mode).map_err(CliError::validation)? {
                Involutivity::Involutive => Ok(Report::new(
                    "involutive",
                    Verdict::Holds,
                    json!({ "status": "involutive" }),
                    vec!["involutive".to_string()],
                )),
                Involutivity::Witness { op_index, prolongation, residual } => {
                    let name = &sys.theta().names()[op_index];
                    Ok(Report::new(
                        "involutive",
                        Verdict::Witness,
                        json!({
                            "status": "witness",
                            "op": name,
                            "prolongation": dmonomial_string(&prolongation, &f.names),
                            "residual": op_json(&residual, &f.names),
                        }),
                        vec![format!(
                            "not involutive: {} * {} normalizes to {}",
                            dmonomial_string(&prolongation, &f.names),
                            name,
                            op_string(&residual, sys.theta().order(), &f.names)
                        )],
                    ))
                }
            }
        }
        Verb::Complete { file, max_rounds, common } => {
            let f = weyl(parse_system_file(&file)?, "complete")?;
            let sys = involutive_system(&f, &common)?;
            let rounds = max_rounds.or(f.max_rounds).unwrap_or(64);
            match complete(&sys, rounds) {
                Ok(completed) => {
                    let lms = completed.leading_monomials();
                    let mut human =
                        vec![format!("involutive completion with {} operators", lms.len())];
                    let mut ops_json = Vec::new();
                    for (i, u) in lms.iter().enumerate() {
                        let name = &completed.theta().names()[i];
                        let op = &completed.theta().ops()[i];
                        human.push(format!(
                            "  {name}: lm = {}  op = {}",
                            dmonomial_string(u, &f.names),
                            op_string(op, completed.theta().order(), &f.names)
                        ));
                        ops_json.push(json!({
                            "name": name,
                            "lm": dmonomial_string(u, &f.names),
                            "op": op_json(op, &f.names),
                        }));
                    }
                    Ok(Report::new(
                        "complete",
                        Verdict::Holds,
                        json!({ "operators": ops_json }),
                        human,
                    ))
                }
                Err(InvolutiveError::RoundBudgetExhausted { rounds }) => Ok(Report::new(
                    "complete",
                    Verdict::Unknown,
                    json!({ "error": "round-budget-exhausted", "rounds": rounds }),
                    vec![format!("completion still running after {rounds} rounds")],
                )),
                Err(other) => Err(CliError::validation(other)),
            }
        }
        Verb::Axioms { file, depth, common } => {
            let f = weyl(parse_system_file(&file)?, "axioms")?;
            let sys = involutive_system(&f, &common)?;
            let lms = sys.leading_monomials();
            match check_division_axioms(sys.division(), &lms, depth).map_err(CliError::validation)? {
                DivisionAxioms::Pass => Ok(Report::new(
                    "axioms",
                    Verdict::Holds,
                    json!({ "status": "pass", "degree_bound": depth }),
                    vec![format!("axioms a-f hold up to degree {depth}")],
                )),
                DivisionAxioms::Violation(v) => Ok(Report::new(
                    "axioms",
                    Verdict::Witness,
                    json!({ "status": "violation", "axiom": v.axiom().to_string() }),
                    vec![format!("axiom {}) violated: {:?}", v.axiom(), v)],
                )),
            }
        }
    }
}

/// Sanity check shared by the tests: autoreduction status of a parsed file.
pub fn autoreduced_status(sys: &InvolutiveSystem) -> AutoreduceCheck {
    check_autoreduced(&sys.leading_monomials(), sys.division())
        .expect("leading monomials are members of their own set")
}

/// Leading monomial of the first operator; convenience for tests.
pub fn first_lm(theta: &ThetaSystem) -> linrew_core::weyl::DMonomial {
    lm(&theta.ops()[0], theta.order()).expect("operators are nonzero").clone()
}
