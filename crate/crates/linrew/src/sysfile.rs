//! Line-oriented system files: abstract linear rewriting systems and Weyl
//! operator systems.

use std::collections::BTreeSet;
use std::path::Path;

use linrew_core::involutive::{Division, InvolutiveCheckMode, PommaretConvention};
use linrew_core::linspace::LinComb;
use linrew_core::rewrite::{Prestrategy, RewritingSystem, Rule, RuleId};
use linrew_core::scalar::{CustomNames, Rational};
use linrew_core::weyl::{MonomialOrder, OrderKind, ThetaSystem};

use crate::error::CliError;
use crate::expr::{parse_qcomb, parse_weyl_op};
use crate::lexer::{tokenize, Spanned, Token};

/// A parsed abstract system file.
pub struct LinearFile {
    pub system: RewritingSystem<String, Rational>,
    pub strategy: Prestrategy,
    pub precedence: Vec<(RuleId, RuleId)>,
    /// Declared basis elements plus everything the rules mention.
    pub basis: BTreeSet<String>,
}

/// A parsed Weyl system file.
pub struct WeylFile {
    pub names: CustomNames,
    pub theta: ThetaSystem,
    pub division: Option<Division>,
    pub check_mode: Option<InvolutiveCheckMode>,
    pub max_rounds: Option<usize>,
}

pub enum SystemFile {
    Linear(Box<LinearFile>),
    Weyl(Box<WeylFile>),
}

pub fn parse_system_file(path: &Path) -> Result<SystemFile, CliError> {
    let text = std::fs::read_to_string(path)?;
    parse_system(&text)
}

pub fn parse_system(text: &str) -> Result<SystemFile, CliError> {
    let significant: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if significant.is_empty() {
        return Err(CliError::validation("empty system file"));
    }
    let is_weyl = significant
        .iter()
        .any(|(_, l)| l.split_whitespace().next() == Some("weyl"));
    if is_weyl {
        parse_weyl_file(&significant).map(|f| SystemFile::Weyl(Box::new(f)))
    } else {
        parse_linear_file(&significant).map(|f| SystemFile::Linear(Box::new(f)))
    }
}

fn keyword(line: &str) -> (&str, &str) {
    match line.split_once(char::is_whitespace) {
        Some((head, rest)) => (head, rest.trim()),
        None => (line, ""),
    }
}

fn parse_linear_file(lines: &[(usize, &str)]) -> Result<LinearFile, CliError> {
    let mut rules: Vec<Rule<String, Rational>> = Vec::new();
    let mut strategy_ids: Vec<RuleId> = Vec::new();
    let mut precedence = Vec::new();
    let mut declared: BTreeSet<String> = BTreeSet::new();
    let mut strict = true;

    for &(line_no, line) in lines {
        let (head, rest) = keyword(line);
        match head {
            "basis" => {
                declared.extend(rest.split_whitespace().map(str::to_string));
            }
            "rule" => {
                // rule <id>: <lhs> -> <rhs>
                let tokens = tokenize(rest, line_no)?;
                let mut idx = 0;
                let id = expect_ident(&tokens, &mut idx, line_no, "rule id")?;
                expect_token(&tokens, &mut idx, &Token::Colon, line_no, "':'")?;
                let lhs = expect_ident(&tokens, &mut idx, line_no, "left-hand side")?;
                expect_token(&tokens, &mut idx, &Token::Arrow, line_no, "'->'")?;
                let rhs_src = render_tail(rest, &tokens, idx);
                let rhs = if tokens.len() == idx {
                    LinComb::zero()
                } else {
                    parse_qcomb(&rhs_src, line_no)?
                };
                rules.push(Rule { id: RuleId::new(id), lhs, rhs });
            }
            "strategy" => {
                strategy_ids.extend(rest.split_whitespace().map(RuleId::new));
            }
            "order" => {
                // order a < b [< c ...]
                let names: Vec<&str> = rest.split('<').map(str::trim).collect();
                if names.len() < 2 || names.iter().any(|n| n.is_empty()) {
                    return Err(CliError::parse(line_no, 1, "expected `order a < b`"));
                }
                for pair in names.windows(2) {
                    precedence.push((RuleId::new(pair[0]), RuleId::new(pair[1])));
                }
            }
            "strict" => match rest {
                "on" => strict = true,
                "off" => strict = false,
                _ => return Err(CliError::parse(line_no, 1, "expected `strict on` or `strict off`")),
            },
            other => {
                return Err(CliError::parse(line_no, 1, format!("unknown keyword '{other}'")));
            }
        }
    }

    if rules.is_empty() {
        return Err(CliError::validation("system file declares no rules"));
    }
    let system = RewritingSystem::new(rules, strict).map_err(CliError::validation)?;
    let strategy = system.prestrategy(strategy_ids).map_err(CliError::validation)?;
    let mut basis = declared;
    basis.extend(system.all_support());
    Ok(LinearFile { system, strategy, precedence, basis })
}

fn parse_weyl_file(lines: &[(usize, &str)]) -> Result<WeylFile, CliError> {
    let mut names: Option<CustomNames> = None;
    let mut order_spec: Option<(OrderKind, Vec<usize>)> = None;
    let mut ops: Vec<(String, String, usize)> = Vec::new();
    let mut division = None;
    let mut check_mode = None;
    let mut max_rounds = None;

    for &(line_no, line) in lines {
        let (head, rest) = keyword(line);
        match head {
            "weyl" => {
                let (sub, rest) = keyword(rest);
                if sub != "vars" {
                    return Err(CliError::parse(line_no, 1, "expected `weyl vars ...`"));
                }
                let vars: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if vars.is_empty() {
                    return Err(CliError::parse(line_no, 1, "no variables declared"));
                }
                if vars.len() > 8 {
                    return Err(CliError::validation("at most 8 variables are supported"));
                }
                names = Some(CustomNames::new(vars));
            }
            "order" => {
                let (kind_name, rest) = keyword(rest);
                let kind = match kind_name {
                    "lex" => OrderKind::Lex,
                    "deglex" => OrderKind::DegLex,
                    "degrevlex" => OrderKind::DegRevLex,
                    other => {
                        return Err(CliError::parse(
                            line_no,
                            1,
                            format!("unknown order kind '{other}' (lex, deglex, degrevlex)"),
                        ))
                    }
                };
                let ns = names
                    .as_ref()
                    .ok_or_else(|| CliError::parse(line_no, 1, "`weyl vars` must come first"))?;
                let parts: Vec<&str> = rest.split('<').map(str::trim).collect();
                let mut precedence = Vec::new();
                for part in &parts {
                    if part.is_empty() {
                        return Err(CliError::parse(line_no, 1, "expected `order deglex d1 < d2`"));
                    }
                    let idx = (0..ns.len())
                        .find(|&i| ns.d(i) == *part)
                        .ok_or_else(|| {
                            CliError::parse(line_no, 1, format!("unknown derivation symbol '{part}'"))
                        })?;
                    precedence.push(idx);
                }
                let mut sorted = precedence.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != ns.len() {
                    return Err(CliError::parse(
                        line_no,
                        1,
                        "order must list every derivation symbol exactly once",
                    ));
                }
                order_spec = Some((kind, precedence));
            }
            "op" => {
                // op <name> = <expr>
                let (name, rest) = keyword(rest);
                let rest = rest
                    .strip_prefix('=')
                    .ok_or_else(|| CliError::parse(line_no, 1, "expected `op NAME = EXPR`"))?
                    .trim();
                if name.is_empty() || rest.is_empty() {
                    return Err(CliError::parse(line_no, 1, "expected `op NAME = EXPR`"));
                }
                ops.push((name.to_string(), rest.to_string(), line_no));
            }
            "division" => {
                division = Some(parse_division(rest, line_no)?);
            }
            "involutive-check" => {
                let (mode, rest) = keyword(rest);
                check_mode = Some(match mode {
                    "prolongations" => InvolutiveCheckMode::Prolongations,
                    "bounded" => {
                        let depth: u32 = rest.parse().map_err(|_| {
                            CliError::parse(line_no, 1, "expected `involutive-check bounded <d>`")
                        })?;
                        InvolutiveCheckMode::Bounded(depth)
                    }
                    _ => {
                        return Err(CliError::parse(
                            line_no,
                            1,
                            "expected `involutive-check prolongations|bounded <d>`",
                        ))
                    }
                });
            }
            "complete" => {
                let (sub, rest) = keyword(rest);
                if sub != "max-rounds" {
                    return Err(CliError::parse(line_no, 1, "expected `complete max-rounds <k>`"));
                }
                let rounds: usize = rest
                    .parse()
                    .map_err(|_| CliError::parse(line_no, 1, "expected `complete max-rounds <k>`"))?;
                max_rounds = Some(rounds);
            }
            other => {
                return Err(CliError::parse(line_no, 1, format!("unknown keyword '{other}'")));
            }
        }
    }

    let names = names.ok_or_else(|| CliError::validation("missing `weyl vars` declaration"))?;
    let nvars = names.len();
    let order = match order_spec {
        Some((kind, precedence)) => MonomialOrder::new(kind, precedence),
        None => MonomialOrder::deglex(nvars),
    };
    if ops.is_empty() {
        return Err(CliError::validation("system file declares no operators"));
    }
    let mut named_ops = Vec::new();
    for (name, src, line_no) in ops {
        let op = parse_weyl_op(&src, &names, line_no)?;
        named_ops.push((name, op));
    }
    let theta = ThetaSystem::new(nvars, order, named_ops).map_err(CliError::validation)?;
    Ok(WeylFile { names, theta, division, check_mode, max_rounds })
}

pub fn parse_division(name: &str, line_no: usize) -> Result<Division, CliError> {
    match name {
        "janet" => Ok(Division::Janet),
        "thomas" => Ok(Division::Thomas),
        "pommaret" => Ok(Division::Pommaret(PommaretConvention::Paper)),
        other => Err(CliError::parse(
            line_no,
            1,
            format!("unknown division '{other}' (janet, thomas, pommaret)"),
        )),
    }
}

fn expect_ident(
    tokens: &[Spanned],
    idx: &mut usize,
    line: usize,
    what: &str,
) -> Result<String, CliError> {
    match tokens.get(*idx) {
        Some(Spanned { token: Token::Ident(name), .. }) => {
            *idx += 1;
            Ok(name.clone())
        }
        Some(s) => Err(CliError::parse(line, s.col, format!("expected {what}"))),
        None => Err(CliError::parse(line, 0, format!("expected {what}"))),
    }
}

fn expect_token(
    tokens: &[Spanned],
    idx: &mut usize,
    expected: &Token,
    line: usize,
    what: &str,
) -> Result<(), CliError> {
    match tokens.get(*idx) {
        Some(s) if &s.token == expected => {
            *idx += 1;
            Ok(())
        }
        Some(s) => Err(CliError::parse(line, s.col, format!("expected {what}"))),
        None => Err(CliError::parse(line, 0, format!("expected {what}"))),
    }
}

/// Slice of the original text from the given token onward, for re-parsing a
/// tail expression with accurate columns.
fn render_tail(line: &str, tokens: &[Spanned], idx: usize) -> String {
    match tokens.get(idx) {
        Some(s) => line[s.col - 1..].to_string(),
        None => String::new(),
    }
}
