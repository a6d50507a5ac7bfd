//! Integer-coefficient polynomial expressions in `n` and `m`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'n' | 'm' | '(' expr ')'
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Poly;
use crate::{Rat, WPoly};

const MAX_EXPONENT: u32 = 64;

/// A polynomial in `n` whose coefficients are polynomials in `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreamExpr {
    source: String,
    by_n: Vec<WPoly>,
}

impl StreamExpr {
    pub fn source(&self) -> &str {
        &self.source
    }

    /// The value at index `n`, as a polynomial in `m`.
    pub fn at(&self, n: usize) -> WPoly {
        let n = Rat::from_integer(n.into());
        self.by_n.iter().rev().fold(WPoly::zero(), |acc, c| &acc.scale(&n) + c)
    }

    /// True when no term involves `m`.
    pub fn is_m_free(&self) -> bool {
        self.by_n.iter().all(|p| p.degree().unwrap_or(0) == 0)
    }

    /// Fix `m` to a value.
    pub fn specialize(&self, m: &Rat) -> Self {
        StreamExpr {
            source: format!("({})|m={}", self.source, m),
            by_n: self.by_n.iter().map(|p| WPoly::constant(p.eval(m))).collect(),
        }
    }
}

impl fmt::Display for StreamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

impl FromStr for StreamExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_stream(s)
    }
}

/// Parse an expression such as `2*n-1` or `n^2*m`.
pub fn parse_stream(input: &str) -> Result<StreamExpr> {
    let tokens = tokenize(input)?;
    let mut p = Parser { input, tokens, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error(format!("unexpected {}", p.tokens[p.pos])));
    }
    Ok(StreamExpr { source: input.trim().to_string(), by_n: value.trimmed() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(u64),
    N,
    M,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(v) => write!(f, "'{v}'"),
            Token::N => f.write_str("'n'"),
            Token::M => f.write_str("'m'"),
            Token::Plus => f.write_str("'+'"),
            Token::Minus => f.write_str("'-'"),
            Token::Star => f.write_str("'*'"),
            Token::Caret => f.write_str("'^'"),
            Token::Open => f.write_str("'('"),
            Token::Close => f.write_str("')'"),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let err = |reason: String| Error::Parse { input: input.to_string(), reason };
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or_else(|| err("integer literal too large".into()))?;
                    chars.next();
                }
                out.push(Token::Int(v));
            }
            _ => {
                chars.next();
                out.push(match c {
                    'n' => Token::N,
                    'm' => Token::M,
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    ')' => Token::Close,
                    other => return Err(err(format!("unexpected character '{other}'"))),
                });
            }
        }
    }
    if out.is_empty() {
        return Err(err("empty expression".into()));
    }
    Ok(out)
}

/// Dense bivariate value during parsing: index is the power of `n`.
#[derive(Clone, Debug)]
struct Bi(Vec<WPoly>);

impl Bi {
    fn constant(p: WPoly) -> Self {
        Bi(vec![p])
    }

    fn n() -> Self {
        Bi(vec![WPoly::zero(), WPoly::one()])
    }

    fn add(&self, other: &Bi, sign: i64) -> Bi {
        let len = self.0.len().max(other.0.len());
        let s = Rat::from_integer(sign.into());
        Bi((0..len)
            .map(|i| {
                let a = self.0.get(i).cloned().unwrap_or_else(WPoly::zero);
                let b = other.0.get(i).cloned().unwrap_or_else(WPoly::zero);
                &a + &b.scale(&s)
            })
            .collect())
    }

    fn mul(&self, other: &Bi) -> Bi {
        let mut out = vec![WPoly::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Bi(out)
    }

    fn trimmed(mut self) -> Vec<WPoly> {
        while self.0.len() > 1 && self.0.last().is_some_and(Poly::is_zero) {
            self.0.pop();
        }
        self.0
    }
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: String) -> Error {
        Error::Parse { input: self.input.to_string(), reason }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Bi> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = acc.add(&self.term()?, 1);
            } else if self.eat(&Token::Minus) {
                acc = acc.add(&self.term()?, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Bi> {
        let mut acc = self.unary()?;
        while self.eat(&Token::Star) {
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Bi> {
        if self.eat(&Token::Minus) {
            return Ok(Bi::constant(WPoly::zero()).add(&self.unary()?, -1));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Bi> {
        let base = self.atom()?;
        if !self.eat(&Token::Caret) {
            return Ok(base);
        }
        let exp = match self.tokens.get(self.pos) {
            Some(Token::Int(e)) if *e <= MAX_EXPONENT as u64 => *e,
            Some(Token::Int(e)) => return Err(self.error(format!("exponent {e} exceeds {MAX_EXPONENT}"))),
            Some(t) => return Err(self.error(format!("expected an integer exponent, found {t}"))),
            None => return Err(self.error("expected an integer exponent".into())),
        };
        self.pos += 1;
        let mut acc = Bi::constant(WPoly::one());
        for _ in 0..exp {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Bi> {
        let tok = self.peek().cloned().ok_or_else(|| self.error("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Token::Int(v) => Ok(Bi::constant(WPoly::constant(Rat::from_integer(v.into())))),
            Token::N => Ok(Bi::n()),
            Token::M => Ok(Bi::constant(WPoly::var())),
            Token::Open => {
                let inner = self.expr()?;
                if !self.eat(&Token::Close) {
                    return Err(self.error("missing ')'".into()));
                }
                Ok(inner)
            }
            other => Err(self.error(format!("unexpected {other}"))),
        }
    }
}
