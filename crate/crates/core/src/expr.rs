//! Expression syntax for algebraic and trigonometric polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)*
//! atom   := NUMBER | IDENT | trig | '(' expr ')'
//! trig   := ('cos' | 'sin') '(' (INT '*')? IDENT ')'      trig mode only
//! NUMBER := INT | INT '/' INT | INT? '.' INT?
//! ```
//!
//! Multiplication is always explicit; `2x` is rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{rational_from_decimal, Rational};
use crate::poly::UniPoly;
use crate::trig::TrigPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Algebraic,
    Trig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigFn {
    Cos,
    Sin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative literal; signs are always `Neg` nodes.
    Num(Rational),
    Var(String),
    Trig {
        func: TrigFn,
        k: u64,
        var: String,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("trigonometric atom at position {0} is only allowed in trig mode")]
    TrigInAlgebraicMode(usize),
    #[error("bare variable at position {0} is not allowed in trig mode")]
    VariableInTrigMode(usize),
    #[error("exponent at position {0} must be a nonnegative integer literal")]
    NonIntegerExponent(usize),
    #[error("expression mixes variables {0} and {1}")]
    VariableMismatch(String, String),
    #[error("{0}")]
    Unsupported(&'static str),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(_) | Expr::Var(_) | Expr::Trig { .. } => 5,
        }
    }

    fn write_at(&self, out: &mut String, min: u8) {
        let wrap = self.precedence() < min;
        if wrap {
            out.push('(');
        }
        match self {
            Expr::Num(q) => out.push_str(&q.to_string()),
            Expr::Var(v) => out.push_str(v),
            Expr::Trig { func, k, var } => {
                let name = match func {
                    TrigFn::Cos => "cos",
                    TrigFn::Sin => "sin",
                };
                if *k == 1 {
                    out.push_str(&format!("{name}({var})"));
                } else {
                    out.push_str(&format!("{name}({k}*{var})"));
                }
            }
            Expr::Neg(a) => {
                out.push('-');
                a.write_at(out, 3);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(out, 1);
                out.push(if matches!(self, Expr::Add(..)) { '+' } else { '-' });
                b.write_at(out, 2);
            }
            Expr::Mul(a, b) => {
                a.write_at(out, 2);
                out.push('*');
                b.write_at(out, 3);
            }
            Expr::Pow(a, e) => {
                a.write_at(out, 4);
                out.push_str(&format!("^{e}"));
            }
        }
        if wrap {
            out.push(')');
        }
    }

    /// Evaluates an algebraic-mode expression. `var` fixes the variable name; when
    /// `None` the single variable in the expression is used (default `x`).
    pub fn to_poly(&self, var: Option<&str>) -> Result<UniPoly, ExprError> {
        let name = match var {
            Some(v) => v.to_string(),
            None => self.single_var()?.unwrap_or_else(|| "x".to_string()),
        };
        self.poly_in(&name)
    }

    fn poly_in(&self, var: &str) -> Result<UniPoly, ExprError> {
        Ok(match self {
            Expr::Num(q) => UniPoly::constant(q.clone(), var),
            Expr::Var(v) if v == var => UniPoly::identity(var),
            Expr::Var(v) => return Err(ExprError::VariableMismatch(var.to_string(), v.clone())),
            Expr::Trig { .. } => return Err(ExprError::Unsupported("trigonometric atom in an algebraic expression")),
            Expr::Neg(a) => -a.poly_in(var)?,
            Expr::Add(a, b) => &a.poly_in(var)? + &b.poly_in(var)?,
            Expr::Sub(a, b) => &a.poly_in(var)? - &b.poly_in(var)?,
            Expr::Mul(a, b) => &a.poly_in(var)? * &b.poly_in(var)?,
            Expr::Pow(a, e) => a.poly_in(var)?.pow(*e),
        })
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) | Expr::Trig { var: v, .. } => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// The unique variable name, if any; an error if several appear.
    pub fn single_var(&self) -> Result<Option<String>, ExprError> {
        let mut vars = Vec::new();
        self.collect_vars(&mut vars);
        match vars.len() {
            0 => Ok(None),
            1 => Ok(vars.pop()),
            _ => Err(ExprError::VariableMismatch(vars[0].clone(), vars[1].clone())),
        }
    }

    /// Evaluates a trig-mode expression as a linear combination of `cos(k*var)` and `sin(k*var)`.
    pub fn to_trig(&self) -> Result<TrigPoly, ExprError> {
        let var = self.single_var()?.unwrap_or_else(|| "x".to_string());
        self.trig_in(&var)
    }

    fn trig_in(&self, var: &str) -> Result<TrigPoly, ExprError> {
        let k_index = |k: u64| usize::try_from(k).map_err(|_| ExprError::Unsupported("frequency too large"));
        Ok(match self {
            Expr::Num(q) => TrigPoly::constant(q.clone(), var),
            Expr::Var(_) => return Err(ExprError::Unsupported("bare variable in a trigonometric expression")),
            Expr::Trig { func: TrigFn::Cos, k, .. } => TrigPoly::cos_term(Rational::one(), k_index(*k)?, var),
            Expr::Trig { func: TrigFn::Sin, k, .. } => TrigPoly::sin_term(Rational::one(), k_index(*k)?, var),
            Expr::Neg(a) => a.trig_in(var)?.scale(&-Rational::one()),
            Expr::Add(a, b) => a.trig_in(var)?.try_add(&b.trig_in(var)?).expect("single variable"),
            Expr::Sub(a, b) => a.trig_in(var)?.try_sub(&b.trig_in(var)?).expect("single variable"),
            Expr::Mul(a, b) => {
                let (l, r) = (a.trig_in(var)?, b.trig_in(var)?);
                match (l.as_constant(), r.as_constant()) {
                    (Some(c), _) => r.scale(&c),
                    (_, Some(c)) => l.scale(&c),
                    _ => return Err(ExprError::Unsupported("products of trigonometric terms are not supported")),
                }
            }
            Expr::Pow(a, e) => {
                let base = a.trig_in(var)?;
                match (base.as_constant(), e) {
                    (_, 0) => TrigPoly::constant(Rational::one(), var),
                    (_, 1) => base,
                    (Some(c), e) => TrigPoly::constant(num_traits::pow(c, *e as usize), var),
                    _ => return Err(ExprError::Unsupported("powers of trigonometric terms are not supported")),
                }
            }
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_at(&mut s, 0);
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(text: &'a str) -> Result<Vec<(Tok, usize)>, ExprError> {
        let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
        let mut out = Vec::new();
        loop {
            while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_whitespace() {
                lx.pos += 1;
            }
            let start = lx.pos;
            let Some(&c) = lx.src.get(lx.pos) else {
                out.push((Tok::End, start));
                return Ok(out);
            };
            let tok = match c {
                b'+' => Tok::Plus,
                b'-' => Tok::Minus,
                b'*' => Tok::Star,
                b'^' => Tok::Caret,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'0'..=b'9' | b'.' => {
                    out.push((lx.number()?, start));
                    continue;
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while lx.pos < lx.src.len() && (lx.src[lx.pos].is_ascii_alphanumeric() || lx.src[lx.pos] == b'_') {
                        lx.pos += 1;
                    }
                    let name = String::from_utf8_lossy(&lx.src[start..lx.pos]).into_owned();
                    out.push((Tok::Ident(name), start));
                    continue;
                }
                _ => {
                    return Err(ExprError::Syntax {
                        position: start,
                        message: format!("unexpected character {:?}", c as char),
                    })
                }
            };
            lx.pos += 1;
            out.push((tok, start));
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn number(&mut self) -> Result<Tok, ExprError> {
        let start = self.pos;
        let whole = self.digits();
        match self.src.get(self.pos) {
            Some(b'.') => {
                self.pos += 1;
                self.digits();
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let q = rational_from_decimal(text).map_err(|_| ExprError::Syntax {
                    position: start,
                    message: format!("malformed number {text:?}"),
                })?;
                Ok(Tok::Num(q))
            }
            Some(b'/') if self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit) => {
                self.pos += 1;
                let den_start = self.pos;
                let den: BigInt = self.digits().parse().expect("digits");
                if den.is_zero() {
                    return Err(ExprError::Syntax { position: den_start, message: "zero denominator".into() });
                }
                Ok(Tok::Num(Rational::new(whole.parse().expect("digits"), den)))
            }
            _ => Ok(Tok::Int(whole.parse().expect("digits"))),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    mode: Mode,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].0
    }

    fn pos(&self) -> usize {
        self.toks[self.idx].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.idx].0.clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { position: self.pos(), message: message.into() })
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ExprError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.syntax(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let mut base = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let at = self.pos();
            match self.bump() {
                Tok::Int(n) => {
                    let e = n.to_u32().ok_or(ExprError::Unsupported("exponent too large"))?;
                    base = Expr::Pow(Box::new(base), e);
                }
                Tok::Num(_) | Tok::Minus => return Err(ExprError::NonIntegerExponent(at)),
                Tok::End => return Err(ExprError::Syntax { position: at, message: "missing exponent".into() }),
                _ => return Err(ExprError::Syntax { position: at, message: "expected an integer exponent".into() }),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let at = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Num(Rational::from_integer(n))),
            Tok::Num(q) => Ok(Expr::Num(q)),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) if (name == "cos" || name == "sin") && *self.peek() == Tok::LParen => {
                if self.mode == Mode::Algebraic {
                    return Err(ExprError::TrigInAlgebraicMode(at));
                }
                self.bump();
                let k = match self.peek().clone() {
                    Tok::Int(n) => {
                        self.bump();
                        self.expect(Tok::Star, "'*' after the frequency")?;
                        n.to_u64().ok_or(ExprError::Unsupported("frequency too large"))?
                    }
                    _ => 1,
                };
                let var = match self.bump() {
                    Tok::Ident(v) => v,
                    _ => return Err(ExprError::Syntax { position: self.pos(), message: "expected a variable".into() }),
                };
                self.expect(Tok::RParen, "')'")?;
                let func = if name == "cos" { TrigFn::Cos } else { TrigFn::Sin };
                Ok(Expr::Trig { func, k, var })
            }
            Tok::Ident(name) => {
                if self.mode == Mode::Trig {
                    return Err(ExprError::VariableInTrigMode(at));
                }
                Ok(Expr::Var(name))
            }
            Tok::End => Err(ExprError::Syntax { position: at, message: "unexpected end of input".into() }),
            t => Err(ExprError::Syntax { position: at, message: format!("unexpected token {t:?}") }),
        }
    }
}

/// Parses `text` in the given mode. Decimal literals become exact rationals.
pub fn parse_expr(text: &str, mode: Mode) -> Result<Expr, ExprError> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser { toks, idx: 0, mode };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        Tok::Ident(_) | Tok::Int(_) | Tok::Num(_) | Tok::LParen => {
            p.syntax("implicit multiplication is not allowed; use '*'")
        }
        _ => p.syntax("unexpected trailing input"),
    }
}

/// Builds an expression that evaluates to `p` (nonnegative literals, explicit signs).
pub fn poly_to_expr(p: &UniPoly) -> Expr {
    let mut acc: Option<Expr> = None;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let power = match k {
            0 => None,
            1 => Some(Expr::Var(p.var().to_string())),
            _ => Some(Expr::Pow(Box::new(Expr::Var(p.var().to_string())), k as u32)),
        };
        let lead_neg = acc.is_none() && c.is_negative();
        let num = if lead_neg { Expr::Neg(Box::new(Expr::Num(mag.clone()))) } else { Expr::Num(mag.clone()) };
        let term = match power {
            None => num,
            Some(pw) if mag.is_one() && lead_neg => Expr::Neg(Box::new(pw)),
            Some(pw) if mag.is_one() => pw,
            Some(pw) => Expr::Mul(Box::new(num), Box::new(pw)),
        };
        acc = Some(match (acc, c.is_negative()) {
            (None, _) => term,
            (Some(a), false) => Expr::Add(Box::new(a), Box::new(term)),
            (Some(a), true) => Expr::Sub(Box::new(a), Box::new(term)),
        });
    }
    acc.unwrap_or_else(|| Expr::Num(Rational::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn parses_eta() {
        let e = parse_expr("10*x^6+6*x^5-12*x^4-11/2*x^3+29/8*x^2+11/8*x+9/16", Mode::Algebraic).unwrap();
        assert_eq!(e.to_poly(None).unwrap(), crate::paperlib::build_eta());
    }

    #[test]
    fn dangling_caret_reports_position() {
        assert_eq!(
            parse_expr("x^", Mode::Algebraic),
            Err(ExprError::Syntax { position: 2, message: "missing exponent".into() })
        );
    }

    #[test]
    fn exponent_rules() {
        assert_eq!(parse_expr("x^2.5", Mode::Algebraic), Err(ExprError::NonIntegerExponent(2)));
        assert_eq!(parse_expr("x^1/2", Mode::Algebraic), Err(ExprError::NonIntegerExponent(2)));
        assert_eq!(parse_expr("x^-1", Mode::Algebraic), Err(ExprError::NonIntegerExponent(2)));
        let p = parse_expr("(x+1)^2^2", Mode::Algebraic).unwrap().to_poly(None).unwrap();
        assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn precedence() {
        let p = parse_expr("-x^2", Mode::Algebraic).unwrap().to_poly(None).unwrap();
        assert_eq!(p, UniPoly::from_integers(&[0, 0, -1], "x"));
        let p = parse_expr("1-2*x+3", Mode::Algebraic).unwrap().to_poly(None).unwrap();
        assert_eq!(p, UniPoly::from_integers(&[4, -2], "x"));
        let p = parse_expr("2*-x", Mode::Algebraic).unwrap().to_poly(None).unwrap();
        assert_eq!(p, UniPoly::from_integers(&[0, -2], "x"));
    }

    #[test]
    fn decimals_are_exact() {
        let e = parse_expr("0.1229*x + .5", Mode::Algebraic).unwrap();
        assert_eq!(e.to_poly(None).unwrap(), UniPoly::new(vec![ratio(1, 2), ratio(1229, 10000)], "x"));
    }

    #[test]
    fn implicit_multiplication_rejected() {
        assert!(matches!(parse_expr("2x", Mode::Algebraic), Err(ExprError::Syntax { position: 1, .. })));
        assert!(matches!(parse_expr("(x)(x)", Mode::Algebraic), Err(ExprError::Syntax { .. })));
    }

    #[test]
    fn mode_restrictions() {
        assert_eq!(parse_expr("cos(x)", Mode::Algebraic), Err(ExprError::TrigInAlgebraicMode(0)));
        assert_eq!(parse_expr("1+x", Mode::Trig), Err(ExprError::VariableInTrigMode(2)));
    }

    #[test]
    fn variable_handling() {
        let e = parse_expr("Y^2-2", Mode::Algebraic).unwrap();
        assert_eq!(e.to_poly(None).unwrap().var(), "Y");
        assert!(matches!(e.to_poly(Some("x")), Err(ExprError::VariableMismatch(_, _))));
        assert!(parse_expr("x+y", Mode::Algebraic).unwrap().to_poly(None).is_err());
        assert_eq!(parse_expr("3", Mode::Algebraic).unwrap().to_poly(None).unwrap().var(), "x");
    }

    #[test]
    fn trig_mode_builds_cosine_polynomials() {
        let e = parse_expr("1 - cos(10*y) + 1/2*cos(20*y) - 820/33*(1-cos(y))", Mode::Trig).unwrap();
        let t = e.to_trig().unwrap();
        assert_eq!(t.var(), "y");
        assert_eq!(t.cos_coeff(0), int(1) - ratio(820, 33));
        assert_eq!(t.cos_coeff(1), ratio(820, 33));
        assert_eq!(t.cos_coeff(10), int(-1));
        assert_eq!(t.cos_coeff(20), ratio(1, 2));
        assert!(!t.has_sine_terms());
        assert!(parse_expr("cos(x)*cos(x)", Mode::Trig).unwrap().to_trig().is_err());
        assert!(parse_expr("cos(x)^2", Mode::Trig).unwrap().to_trig().is_err());
        assert_eq!(parse_expr("(1/2)^2*sin(3*x)", Mode::Trig).unwrap().to_trig().unwrap().sin_coeffs()[3], ratio(1, 4));
    }

    #[test]
    fn printer_output() {
        let e = parse_expr("1-(2-x)*3^2", Mode::Algebraic).unwrap();
        assert_eq!(e.to_string(), "1-(2-x)*3^2");
        let e = parse_expr("-(x+1)^2", Mode::Algebraic).unwrap();
        assert_eq!(e.to_string(), "-(x+1)^2");
        let e = parse_expr("0.25*cos(x)", Mode::Trig).unwrap();
        assert_eq!(e.to_string(), "1/4*cos(x)");
    }

    #[test]
    fn poly_expr_round_trip() {
        let p = UniPoly::new(vec![ratio(-1475, 66), ratio(820, 33), int(0), int(-150)], "Y");
        let e = poly_to_expr(&p);
        assert_eq!(e.to_string(), p.render());
        assert_eq!(parse_expr(&p.render(), Mode::Algebraic).unwrap().to_poly(None).unwrap(), p);
    }
}
