//! A small expression language for series sources.
//!
//! Rational expressions in `x` and `y` plus named parameters, with `exp`
//! and `cosh`, evaluated into truncated series over Q[y]. Integer literals
//! only; fractions are spelled with `/`, which is ordinary series division.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Result};
use riordan_core::{Rational, XSeries, YPoly};

#[derive(Clone, Debug)]
pub enum Expr {
    Num(Rational),
    X,
    Y,
    Param(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Exp(Box<Expr>),
    Cosh(Box<Expr>),
}

impl Expr {
    pub fn contains_y(&self) -> bool {
        match self {
            Expr::Y => true,
            Expr::Num(_) | Expr::X | Expr::Param(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Exp(a) | Expr::Cosh(a) => a.contains_y(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.contains_y() || b.contains_y()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(s));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(s));
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            other => bail!("unexpected character {other:?} in expression {src:?}"),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        match self.next() {
            Some(t) if t == tok => Ok(()),
            other => bail!("expected {tok:?}, found {other:?}"),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.next();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            match self.next() {
                Some(Tok::Num(s)) => {
                    let e: u32 = s.parse().map_err(|_| anyhow!("bad exponent {s:?}"))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                other => bail!("exponent must be a nonnegative integer, found {other:?}"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Num(s)) => Ok(Expr::Num(
                s.parse::<Rational>().map_err(|e| anyhow!(e))?,
            )),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "x" => Ok(Expr::X),
                "y" => Ok(Expr::Y),
                "exp" | "cosh" => {
                    self.expect(Tok::LParen)?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(if name == "exp" {
                        Expr::Exp(Box::new(arg))
                    } else {
                        Expr::Cosh(Box::new(arg))
                    })
                }
                _ => Ok(Expr::Param(name)),
            },
            other => bail!("unexpected token {other:?}"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        bail!("empty expression");
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        bail!("trailing tokens in expression {src:?}");
    }
    Ok(e)
}

/// Evaluates at the requested truncation order. Division requires a unit
/// constant term; exp/cosh require a zero constant term.
pub fn eval(
    expr: &Expr,
    params: &BTreeMap<String, Rational>,
    order: usize,
) -> Result<XSeries<YPoly>> {
    Ok(match expr {
        Expr::Num(c) => XSeries::constant(YPoly::constant(c.clone()), order),
        Expr::X => XSeries::x(order),
        Expr::Y => XSeries::constant(YPoly::y(), order),
        Expr::Param(name) => {
            let v = params
                .get(name)
                .ok_or_else(|| anyhow!("unknown parameter {name:?}"))?;
            XSeries::constant(YPoly::constant(v.clone()), order)
        }
        Expr::Neg(a) => eval(a, params, order)?.neg(),
        Expr::Add(a, b) => eval(a, params, order)?.add(&eval(b, params, order)?),
        Expr::Sub(a, b) => eval(a, params, order)?.sub(&eval(b, params, order)?),
        Expr::Mul(a, b) => eval(a, params, order)?.mul(&eval(b, params, order)?),
        Expr::Div(a, b) => {
            let denom = eval(b, params, order)?;
            eval(a, params, order)?.mul(&denom.reciprocal()?)
        }
        Expr::Pow(a, e) => eval(a, params, order)?.pow(*e as usize),
        Expr::Exp(a) => eval(a, params, order)?.exp()?,
        Expr::Cosh(a) => {
            let arg = eval(a, params, order)?;
            arg.exp()?
                .add(&arg.neg().exp()?)
                .scale(&YPoly::constant(Rational::new(1, 2)))
        }
    })
}
