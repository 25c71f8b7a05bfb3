//! Deterministic human and JSON rendering of engine values.

use linrew_core::involutive::VarSet;
use linrew_core::linspace::LinComb;
use linrew_core::rewrite::ReductionTrace;
use linrew_core::scalar::{CustomNames, Rational, VarNames};
use linrew_core::weyl::{display_op, DMonomial, MonomialOrder, WeylOp};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

/// `2 e1 + (1/3) e2 - e4` rendering of abstract combinations.
pub fn qcomb_string(v: &LinComb<String, Rational>) -> String {
    use num_traits::{One, Signed};
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, coeff)) in v.iter().enumerate() {
        let negative = coeff.is_negative();
        let abs = if negative { -coeff } else { coeff.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !abs.is_one() {
            if abs.denom() == &BigInt::from(1) {
                out.push_str(&format!("{abs} "));
            } else {
                out.push_str(&format!("({abs}) "));
            }
        }
        out.push_str(e);
    }
    out
}

/// JSON form of a combination: basis element to coefficient string.
pub fn qcomb_json(v: &LinComb<String, Rational>) -> Value {
    let mut map = Map::new();
    for (e, coeff) in v.iter() {
        map.insert(e.clone(), Value::String(coeff.to_string()));
    }
    Value::Object(map)
}

pub fn op_string(op: &WeylOp, ord: &MonomialOrder, names: &CustomNames) -> String {
    display_op(op, ord, names).to_string()
}

/// JSON form of an operator: comma-joined exponent vector to coefficient.
pub fn op_json(op: &WeylOp, names: &CustomNames) -> Value {
    let mut map = Map::new();
    for (mono, coeff) in op.iter() {
        let key = mono
            .exponents()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        map.insert(key, Value::String(coeff.display(names).to_string()));
    }
    Value::Object(map)
}

pub fn dmonomial_string(m: &DMonomial, names: &CustomNames) -> String {
    struct D<'a>(&'a DMonomial, &'a CustomNames);
    impl std::fmt::Display for D<'_> {
        fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            self.0.fmt_with(f, self.1)
        }
    }
    D(m, names).to_string()
}

pub fn varset_string(vars: &VarSet, names: &CustomNames) -> String {
    if vars.is_empty() {
        return "{}".to_string();
    }
    let list: Vec<String> = vars.iter().map(|&i| names.d(i).to_string()).collect();
    format!("{{{}}}", list.join(", "))
}

pub fn varset_json(vars: &VarSet, names: &CustomNames) -> Value {
    Value::Array(
        vars.iter()
            .map(|&i| Value::String(names.d(i).to_string()))
            .collect(),
    )
}

pub fn trace_json(trace: &ReductionTrace<String, Rational>) -> Value {
    json!({
        "start": qcomb_json(&trace.start),
        "steps": trace.steps.iter().map(|s| json!({
            "rule": s.rule.as_str(),
            "reduced": s.reduced,
            "coeff": s.coeff.to_string(),
            "result": qcomb_json(&s.result),
        })).collect::<Vec<_>>(),
    })
}

pub fn trace_lines(trace: &ReductionTrace<String, Rational>) -> Vec<String> {
    let mut lines = vec![format!("start: {}", qcomb_string(&trace.start))];
    for step in &trace.steps {
        lines.push(format!(
            "  --[{} @ {}]--> {}",
            step.rule,
            step.reduced,
            qcomb_string(&step.result)
        ));
    }
    lines
}

/// Default x-variable names for abstract files that still need a `VarNames`.
pub fn default_names(n: usize) -> CustomNames {
    CustomNames::new((1..=n).map(|i| format!("x{i}")).collect())
}

/// Fractions rendered with the file's variable names.
pub fn ratfunc_string(f: &linrew_core::scalar::RatFunc, names: &dyn VarNames) -> String {
    f.display(names).to_string()
}
