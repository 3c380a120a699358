//! Exact expressions over one real quadratic field, and integer matrix
//! literals.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | primary
//! primary := INT | 'sqrt' '(' INT ')' | '(' expr ')'
//! matrix  := '[' row (',' row)* ']'      row := '[' ['-'] INT (',' ['-'] INT)* ']'
//! ```
//!
//! Whitespace is ignored between tokens.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use orbistack::exactmath::{ExactError, IntegerMatrix, QuadraticNumber};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("expression mixes sqrt({left}) and sqrt({right}); not a quadratic number")]
    MixedFields { left: u64, right: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square")]
    NotSquare,
}

impl ExprError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ExprError::Syntax { offset, .. } => Some(*offset),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Sqrt(BigInt),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Sqrt(n) => write!(f, "sqrt({n})"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(a, b) => write!(f, "({a}+{b})"),
            Expr::Sub(a, b) => write!(f, "({a}-{b})"),
            Expr::Mul(a, b) => write!(f, "({a}*{b})"),
            Expr::Div(a, b) => write!(f, "({a}/{b})"),
        }
    }
}

fn lift(e: ExactError) -> ExprError {
    match e {
        ExactError::MixedFields { left, right } => ExprError::MixedFields { left, right },
        ExactError::ZeroDenominator => ExprError::DivisionByZero,
        other => unreachable!("arithmetic on quadratic numbers cannot fail with {other}"),
    }
}

impl Expr {
    pub fn eval(&self) -> Result<QuadraticNumber, ExprError> {
        Ok(match self {
            Expr::Int(n) => QuadraticNumber::from_integer(n.clone()),
            Expr::Sqrt(n) => {
                let k = n.to_u64().expect("checked by the parser");
                QuadraticNumber::new(0, 1, 1, k).map_err(lift)?
            }
            Expr::Neg(e) => e.eval()?.neg(),
            Expr::Add(a, b) => a.eval()?.add(&b.eval()?).map_err(lift)?,
            Expr::Sub(a, b) => a.eval()?.sub(&b.eval()?).map_err(lift)?,
            Expr::Mul(a, b) => a.eval()?.mul(&b.eval()?).map_err(lift)?,
            Expr::Div(a, b) => a.eval()?.div(&b.eval()?).map_err(lift)?,
        })
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.describe_next();
            self.err(self.pos, format!("expected '{c}', found {found}"))
        }
    }

    fn describe_next(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            let found = self.describe_next();
            return self.err(start, format!("expected an integer, found {found}"));
        }
        self.pos += digits;
        Ok(self.text[start..self.pos].parse().expect("ascii digits"))
    }

    fn finish(&mut self) -> Result<(), ExprError> {
        if self.peek().is_some() {
            let found = self.describe_next();
            return self.err(self.pos, format!("unexpected {found}"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let len = self.text[start..]
                    .bytes()
                    .take_while(u8::is_ascii_alphanumeric)
                    .count();
                let word = &self.text[start..start + len];
                if word != "sqrt" {
                    return self.err(start, format!("unknown identifier '{word}'"));
                }
                self.pos += len;
                self.expect('(')?;
                self.skip_ws();
                let arg_at = self.pos;
                let k = self.integer()?;
                if k.is_zero() || k.is_negative() {
                    return self.err(arg_at, "sqrt argument must be a positive integer");
                }
                if k.to_u64().is_none() {
                    return self.err(arg_at, "sqrt argument is too large");
                }
                self.expect(')')?;
                Ok(Expr::Sqrt(k))
            }
            _ => {
                let found = self.describe_next();
                self.err(
                    self.pos,
                    format!("expected a number, 'sqrt' or '(', found {found}"),
                )
            }
        }
    }

    fn signed_integer(&mut self) -> Result<BigInt, ExprError> {
        let neg = self.eat('-');
        let n = self.integer()?;
        Ok(if neg { -n } else { n })
    }

    fn list<T>(
        &mut self,
        mut item: impl FnMut(&mut Self) -> Result<T, ExprError>,
    ) -> Result<Vec<T>, ExprError> {
        self.expect('[')?;
        let mut out = vec![item(self)?];
        while self.eat(',') {
            out.push(item(self)?);
        }
        self.expect(']')?;
        Ok(out)
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses and evaluates.
pub fn parse_quadratic(text: &str) -> Result<QuadraticNumber, ExprError> {
    parse_expr(text)?.eval()
}

/// `[[2,1],[1,1]]`
pub fn parse_matrix(text: &str) -> Result<IntegerMatrix, ExprError> {
    let mut p = Parser::new(text);
    let rows = p.list(|p| p.list(Parser::signed_integer))?;
    p.finish()?;
    IntegerMatrix::new(rows).map_err(|_| ExprError::NotSquare)
}
