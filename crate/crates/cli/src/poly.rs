//! Integer polynomials in named variables: `3*x^2*y - y^3 + 2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial with integer coefficients; exponent vectors index into a fixed variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    /// Nonzero terms, sorted by descending degree, then descending exponent vector.
    pub terms: Vec<(Vec<u32>, BigInt)>,
}

impl Poly {
    pub fn from_map(map: BTreeMap<Vec<u32>, BigInt>) -> Poly {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|(a, _), (b, _)| degree(b).cmp(&degree(a)).then_with(|| b.cmp(a)));
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms, or `None` if the polynomial is zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = degree(&self.terms.first()?.0);
        self.terms.iter().all(|(m, _)| degree(m) == d).then_some(d)
    }

    pub fn display<'a>(&'a self, vars: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, vars }
    }
}

pub fn degree(m: &[u32]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

struct PolyDisplay<'a> {
    poly: &'a Poly,
    vars: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.poly.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (n, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || degree(m) == 0 {
                factors.push(abs.to_string());
            }
            for (v, &e) in self.vars.iter().zip(m) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, ch)) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' | '-' | '*' | '^' => {
                chars.next();
                out.push(match ch {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    _ => Token::Caret,
                });
            }
            c if c.is_ascii_digit() => {
                let mut end = start;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + d.len_utf8();
                    chars.next();
                }
                out.push(Token::Int(text[start..end].parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = start;
                while let Some(&(i, d)) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    end = i + d.len_utf8();
                    chars.next();
                }
                out.push(Token::Ident(text[start..end].to_string()));
            }
            other => return Err(format!("unexpected character '{other}'")),
        }
    }
    Ok(out)
}

/// Parse `text` over `vars`. Unknown identifiers are an error.
pub fn parse_poly(text: &str, vars: &[String]) -> Result<Poly, String> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut pos = 0;
    let mut map: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    let mut first = true;
    while pos < tokens.len() {
        let negative = match tokens[pos] {
            Token::Plus => {
                pos += 1;
                false
            }
            Token::Minus => {
                pos += 1;
                true
            }
            _ if first => false,
            _ => return Err("expected '+' or '-' between terms".into()),
        };
        first = false;
        let (mono, mut coeff) = parse_term(&tokens, &mut pos, vars)?;
        if negative {
            coeff = -coeff;
        }
        *map.entry(mono).or_insert_with(BigInt::zero) += coeff;
    }
    Ok(Poly::from_map(map))
}

fn parse_term(tokens: &[Token], pos: &mut usize, vars: &[String]) -> Result<(Vec<u32>, BigInt), String> {
    let mut mono = vec![0u32; vars.len()];
    let mut coeff = BigInt::one();
    loop {
        match tokens.get(*pos) {
            Some(Token::Int(n)) => {
                coeff *= n;
                *pos += 1;
            }
            Some(Token::Ident(name)) => {
                let idx = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| format!("unknown variable '{name}'"))?;
                *pos += 1;
                let mut exp = 1u32;
                if tokens.get(*pos) == Some(&Token::Caret) {
                    *pos += 1;
                    match tokens.get(*pos) {
                        Some(Token::Int(e)) => {
                            exp = u32::try_from(e).map_err(|_| format!("exponent {e} too large"))?;
                            *pos += 1;
                        }
                        _ => return Err("expected an integer exponent after '^'".into()),
                    }
                }
                mono[idx] += exp;
            }
            _ => return Err("expected a number or variable".into()),
        }
        if tokens.get(*pos) == Some(&Token::Star) {
            *pos += 1;
        } else {
            return Ok((mono, coeff));
        }
    }
}
