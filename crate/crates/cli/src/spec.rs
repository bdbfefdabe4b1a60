//! Line-oriented algebra spec files.
//!
//! ```text
//! field rational | field prime <p>
//! extend <var> : <monic polynomial in var>
//! quotient : <homogeneous polynomial>
//! quotient random degree=<d> seed=<s>
//! ```
//!
//! Blank lines and `#` comments are ignored.

use std::fmt::{self, Write as _};

use lefschetz_core::{FieldSpec, GradedAlgebra, MonicExtensionPoly, Scalar};
use num_traits::One;

use crate::poly::{parse_poly, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for SpecError {}

fn err(line: usize, message: impl Into<String>) -> SpecError {
    SpecError {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// `poly` is over all variables up to and including `var`.
    Extend { var: String, poly: Poly },
    /// `poly` is over the variables introduced so far.
    Quotient(Poly),
    QuotientRandom { degree: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub line: usize,
    pub kind: StepKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub field: FieldSpec,
    pub steps: Vec<Step>,
}

impl AlgebraSpec {
    /// Variables in order of introduction.
    pub fn variables(&self) -> Vec<String> {
        self.steps
            .iter()
            .filter_map(|s| match &s.kind {
                StepKind::Extend { var, .. } => Some(var.clone()),
                _ => None,
            })
            .collect()
    }
}

pub fn parse_spec(text: &str) -> Result<AlgebraSpec, SpecError> {
    let mut field = None;
    let mut steps = Vec::new();
    let mut vars: Vec<String> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .map_or((content, ""), |(k, r)| (k, r.trim()));
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(err(line, "field declared twice"));
                }
                if !steps.is_empty() {
                    return Err(err(line, "field must be declared before any step"));
                }
                field = Some(parse_field(rest).map_err(|m| err(line, m))?);
            }
            "extend" | "quotient" if field.is_none() => {
                return Err(err(line, "missing field declaration"));
            }
            "extend" => {
                let (var, poly_text) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line, "expected 'extend <var> : <polynomial>'"))?;
                let var = var.trim();
                if !is_identifier(var) {
                    return Err(err(line, format!("invalid variable name '{var}'")));
                }
                if vars.iter().any(|v| v == var) {
                    return Err(err(line, format!("variable '{var}' already defined")));
                }
                vars.push(var.to_string());
                let poly = parse_poly(poly_text, &vars).map_err(|m| err(line, m))?;
                check_monic(&poly, vars.len() - 1).map_err(|m| err(line, m))?;
                steps.push(Step {
                    line,
                    kind: StepKind::Extend {
                        var: var.to_string(),
                        poly,
                    },
                });
            }
            "quotient" => {
                let kind = if let Some(form) = rest.strip_prefix(':') {
                    let poly = parse_poly(form, &vars).map_err(|m| err(line, m))?;
                    match poly.homogeneous_degree() {
                        _ if poly.is_zero() => return Err(err(line, "quotient by the zero form")),
                        None => return Err(err(line, "quotient form is not homogeneous")),
                        Some(0) => return Err(err(line, "quotient form has degree 0")),
                        Some(_) => StepKind::Quotient(poly),
                    }
                } else if let Some(args) = rest.strip_prefix("random") {
                    parse_random(args).map_err(|m| err(line, m))?
                } else {
                    return Err(err(
                        line,
                        "expected 'quotient : <polynomial>' or 'quotient random degree=<d> seed=<s>'",
                    ));
                };
                steps.push(Step { line, kind });
            }
            other => return Err(err(line, format!("unknown directive '{other}'"))),
        }
    }
    let field = field.ok_or_else(|| err(text.lines().count().max(1), "missing field declaration"))?;
    Ok(AlgebraSpec { field, steps })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_field(rest: &str) -> Result<FieldSpec, String> {
    let words: Vec<&str> = rest.split_whitespace().collect();
    match words.as_slice() {
        ["rational"] => Ok(FieldSpec::rationals()),
        ["prime", p] => {
            let p: u64 = p.parse().map_err(|_| format!("invalid prime '{p}'"))?;
            FieldSpec::prime(p).map_err(|e| e.to_string())
        }
        _ => Err("expected 'field rational' or 'field prime <p>'".into()),
    }
}

fn parse_random(args: &str) -> Result<StepKind, String> {
    let (mut degree, mut seed) = (None, None);
    for word in args.split_whitespace() {
        let (key, value) = word
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got '{word}'"))?;
        let parsed: u64 = value
            .parse()
            .map_err(|_| format!("invalid value '{value}' for {key}"))?;
        match key {
            "degree" => degree = Some(parsed as usize),
            "seed" => seed = Some(parsed),
            _ => return Err(format!("unknown key '{key}'")),
        }
    }
    match (degree, seed) {
        (Some(0), _) => Err("random form needs degree at least 1".into()),
        (Some(degree), Some(seed)) => Ok(StepKind::QuotientRandom { degree, seed }),
        _ => Err("random quotient needs degree=<d> and seed=<s>".into()),
    }
}

/// Monic in the variable at `var`: homogeneous of degree `d = max exponent of var`, and the
/// only term with that exponent is `1·var^d`.
fn check_monic(poly: &Poly, var: usize) -> Result<(), String> {
    let d = poly
        .terms
        .iter()
        .map(|(m, _)| m[var])
        .max()
        .unwrap_or(0);
    if d == 0 {
        return Err("relation does not involve the new variable".into());
    }
    if poly.homogeneous_degree() != Some(d as usize) {
        return Err(format!("relation is not homogeneous of degree {d}"));
    }
    let leading: Vec<_> = poly.terms.iter().filter(|(m, _)| m[var] == d).collect();
    match leading.as_slice() {
        [(_, c)] if c.is_one() => Ok(()),
        _ => Err("relation is not monic in the new variable".into()),
    }
}

/// Canonical text for `spec`; parsing it rebuilds the same algebra.
pub fn print_spec(spec: &AlgebraSpec) -> String {
    let mut out = String::new();
    match spec.field.modulus() {
        None => out.push_str("field rational\n"),
        Some(p) => {
            let _ = writeln!(out, "field prime {p}");
        }
    }
    let mut vars: Vec<String> = Vec::new();
    for step in &spec.steps {
        match &step.kind {
            StepKind::Extend { var, poly } => {
                vars.push(var.clone());
                let _ = writeln!(out, "extend {var} : {}", poly.display(&vars));
            }
            StepKind::Quotient(poly) => {
                let _ = writeln!(out, "quotient : {}", poly.display(&vars));
            }
            StepKind::QuotientRandom { degree, seed } => {
                let _ = writeln!(out, "quotient random degree={degree} seed={seed}");
            }
        }
    }
    out
}

/// Construct the algebra; errors carry the line of the failing step.
pub fn build(spec: &AlgebraSpec) -> Result<GradedAlgebra, SpecError> {
    let field = spec.field;
    let mut alg = GradedAlgebra::trivial(field);
    let mut n = 0;
    for step in &spec.steps {
        let at = |e: lefschetz_core::Error| err(step.line, e.to_string());
        alg = match &step.kind {
            StepKind::Extend { var, poly } => {
                let d = poly.terms.iter().map(|(m, _)| m[n]).max().unwrap_or(0) as usize;
                let mut lower = Vec::with_capacity(d);
                for i in 1..=d {
                    let terms: Vec<_> = poly
                        .terms
                        .iter()
                        .filter(|(m, _)| m[n] as usize == d - i)
                        .map(|(m, c)| (m[..n].to_vec(), Scalar::from_bigint(field, c)))
                        .collect();
                    lower.push(alg.element_from_terms(i, &terms).map_err(at)?);
                }
                n += 1;
                alg.extend_monic(&MonicExtensionPoly::new(var.clone(), lower))
                    .map_err(at)?
            }
            StepKind::Quotient(poly) => {
                let degree = poly.homogeneous_degree().expect("validated");
                let terms: Vec<_> = poly
                    .terms
                    .iter()
                    .map(|(m, c)| (m.clone(), Scalar::from_bigint(field, c)))
                    .collect();
                let g = alg.element_from_terms(degree, &terms).map_err(at)?;
                alg.quotient_by_form(&g).map_err(at)?
            }
            StepKind::QuotientRandom { degree, seed } => {
                alg.quotient_by_random_form(*degree, *seed).map_err(at)?
            }
        };
    }
    Ok(alg)
}

/// Parse an element of `alg` given as a homogeneous polynomial in the tower variables.
pub fn parse_element(
    alg: &GradedAlgebra,
    vars: &[String],
    text: &str,
) -> Result<lefschetz_core::HomogeneousElement, String> {
    let poly = parse_poly(text, vars)?;
    if poly.is_zero() {
        return Err("element is zero".into());
    }
    let degree = poly
        .homogeneous_degree()
        .ok_or_else(|| "element is not homogeneous".to_string())?;
    let terms: Vec<_> = poly
        .terms
        .iter()
        .map(|(m, c)| (m.clone(), Scalar::from_bigint(alg.field(), c)))
        .collect();
    alg.element_from_terms(degree, &terms).map_err(|e| e.to_string())
}
