//! Text format for polynomials.
//!
//! The grammar is a sum of terms. A term is a `*`-separated product of
//! factors, each factor either a scalar or a variable power:
//!
//! ```text
//! polynomial := [-] term { (+|-) term }
//! term       := factor { * factor }
//! factor     := scalar | xK | xK^E
//! scalar     := rational [i] | i | ( complex )
//! complex    := [sign] part { (+|-) part }     part := rational [i] | i
//! rational   := digits [/ digits]
//! ```
//!
//! Variables are `x1..xn` only. Whitespace is insignificant; implicit
//! multiplication (`x1x2`) is rejected so tokenization stays unambiguous.
//! This is also the line format of CLI input files (one polynomial per line,
//! `#` starts a comment).

use crate::poly::{GaussianRational, Monomial, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Number(String),
    Imag,
    Var(usize),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'/' => Token::Slash,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'i' => Token::Imag,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push((start, Token::Number(text[start..i].to_string())));
                continue;
            }
            b'x' => {
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits_start {
                    return Err(ParseError::new(
                        start,
                        "expected a variable index immediately after 'x'",
                    ));
                }
                let index: usize = text[digits_start..i].parse().map_err(|_| {
                    ParseError::new(digits_start, "variable index too large")
                })?;
                if index == 0 {
                    return Err(ParseError::new(start, "variable indices start at x1"));
                }
                tokens.push((start, Token::Var(index)));
                continue;
            }
            _ => {
                return Err(ParseError::new(
                    i,
                    format!("unexpected character {:?}", text[i..].chars().next().unwrap()),
                ))
            }
        };
        tokens.push((i, tok));
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    num_vars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(p, _)| p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn eat(&mut self, expected: &Token, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(expected) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.here(), format!("expected {what}")))
        }
    }

    fn parse_polynomial(&mut self) -> Result<Polynomial, ParseError> {
        if self.peek().is_none() {
            return Err(ParseError::new(self.end, "empty polynomial"));
        }
        let mut terms: Vec<(Monomial, GaussianRational)> = Vec::new();
        let mut negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (mono, coeff) = self.parse_term()?;
            terms.push((mono, if negate { -&coeff } else { coeff }));
            match self.bump() {
                None => break,
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                Some(_) => {
                    return Err(ParseError::new(
                        self.tokens[self.pos - 1].0,
                        "expected '+', '-' or end of input",
                    ))
                }
            }
        }
        Ok(Polynomial::from_terms(self.num_vars, terms))
    }

    fn parse_term(&mut self) -> Result<(Monomial, GaussianRational), ParseError> {
        let mut coeff = GaussianRational::one();
        let mut exponents = vec![0u32; self.num_vars];
        loop {
            match self.peek() {
                Some(Token::Number(_)) | Some(Token::Imag) | Some(Token::LParen) => {
                    let s = self.parse_scalar()?;
                    coeff = &coeff * &s;
                }
                Some(Token::Var(_)) => {
                    let (var, exp) = self.parse_var_power()?;
                    exponents[var - 1] = exponents[var - 1]
                        .checked_add(exp)
                        .ok_or_else(|| ParseError::new(self.here(), "exponent overflow"))?;
                }
                _ => {
                    return Err(ParseError::new(
                        self.here(),
                        "expected a coefficient or a variable",
                    ))
                }
            }
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exponents), coeff))
    }

    fn parse_var_power(&mut self) -> Result<(usize, u32), ParseError> {
        let at = self.here();
        let Some(Token::Var(index)) = self.bump() else {
            return Err(ParseError::new(at, "expected a variable"));
        };
        if index > self.num_vars {
            return Err(ParseError::new(
                at,
                format!("variable x{index} out of range (n = {})", self.num_vars),
            ));
        }
        let mut exp = 1u32;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let at = self.here();
            let Some(Token::Number(digits)) = self.bump() else {
                return Err(ParseError::new(at, "expected an exponent after '^'"));
            };
            exp = digits
                .parse()
                .map_err(|_| ParseError::new(at, "exponent too large"))?;
        }
        Ok((index, exp))
    }

    /// A scalar factor: `rational [i]`, bare `i`, or a parenthesized complex
    /// number like `(-1+i)` or `(1/2-3/4i)`.
    fn parse_scalar(&mut self) -> Result<GaussianRational, ParseError> {
        match self.peek() {
            Some(Token::LParen) => {
                self.pos += 1;
                let mut acc = GaussianRational::zero();
                let mut negate = match self.peek() {
                    Some(Token::Minus) => {
                        self.pos += 1;
                        true
                    }
                    Some(Token::Plus) => {
                        self.pos += 1;
                        false
                    }
                    _ => false,
                };
                loop {
                    let part = self.parse_scalar_atom()?;
                    acc = if negate { &acc - &part } else { &acc + &part };
                    match self.peek() {
                        Some(Token::Plus) => {
                            self.pos += 1;
                            negate = false;
                        }
                        Some(Token::Minus) => {
                            self.pos += 1;
                            negate = true;
                        }
                        _ => break,
                    }
                }
                self.eat(&Token::RParen, "')'")?;
                Ok(acc)
            }
            _ => self.parse_scalar_atom(),
        }
    }

    /// `rational [i]` or bare `i`.
    fn parse_scalar_atom(&mut self) -> Result<GaussianRational, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Token::Imag) => Ok(GaussianRational::i()),
            Some(Token::Number(num_digits)) => {
                let numerator: BigInt = num_digits.parse().expect("digits parse as integer");
                let value = if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    let at = self.here();
                    let Some(Token::Number(den_digits)) = self.bump() else {
                        return Err(ParseError::new(at, "expected a denominator after '/'"));
                    };
                    let denominator: BigInt =
                        den_digits.parse().expect("digits parse as integer");
                    if denominator.is_zero() {
                        return Err(ParseError::new(at, "zero denominator"));
                    }
                    BigRational::new(numerator, denominator)
                } else {
                    BigRational::from_integer(numerator)
                };
                if self.peek() == Some(&Token::Imag) {
                    self.pos += 1;
                    Ok(GaussianRational::new(BigRational::zero(), value))
                } else {
                    Ok(GaussianRational::from_rational(value))
                }
            }
            _ => Err(ParseError::new(at, "expected a number or 'i'")),
        }
    }
}

/// Parse a polynomial in `num_vars` variables from its text form.
pub fn parse_polynomial(text: &str, num_vars: usize) -> Result<Polynomial, ParseError> {
    assert!(num_vars >= 1, "need at least one variable");
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        num_vars,
    };
    parser.parse_polynomial()
}

/// Largest variable index mentioned in `text`, for inferring the variable
/// count of an input file. Tokenizes only; range errors surface later.
pub fn max_var_index(text: &str) -> Result<Option<usize>, ParseError> {
    let tokens = tokenize(text)?;
    Ok(tokens
        .iter()
        .filter_map(|(_, t)| match t {
            Token::Var(k) => Some(*k),
            _ => None,
        })
        .max())
}

fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Deterministic text form: terms in decreasing lex order, canonical
/// coefficients. `parse_polynomial(format_polynomial(f), n) == f`.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (mono, coeff)) in f.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let (negative, body) = format_term(mono, coeff);
        if idx == 0 {
            if negative {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

/// Splits a term into a hoistable sign and the signless body.
fn format_term(mono: &Monomial, coeff: &GaussianRational) -> (bool, String) {
    let mono_str = if mono.degree() == 0 {
        String::new()
    } else {
        mono.to_string()
    };
    let attach = |scalar: String| -> String {
        match (scalar.is_empty(), mono_str.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => mono_str.clone(),
            (false, true) => scalar,
            (false, false) => format!("{scalar}*{mono_str}"),
        }
    };
    if coeff.im().is_zero() {
        let re = coeff.re();
        let mag = re.abs();
        let scalar = if mag.is_one() && !mono_str.is_empty() {
            String::new()
        } else {
            format_rational(&mag)
        };
        (re.is_negative(), attach(scalar))
    } else if coeff.re().is_zero() {
        let im = coeff.im();
        let mag = im.abs();
        let scalar = if mag.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", format_rational(&mag))
        };
        (im.is_negative(), attach(scalar))
    } else {
        let re = format_rational(coeff.re());
        let im = coeff.im();
        let im_part = if im.is_one() {
            "+i".to_string()
        } else if (-im).is_one() {
            "-i".to_string()
        } else if im.is_positive() {
            format!("+{}i", format_rational(im))
        } else {
            format!("{}i", format_rational(im))
        };
        (false, attach(format!("({re}{im_part})")))
    }
}
