//! Expression grammar for Cherednik and affine elements.
//!
//! ```text
//! element := ['-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom ('^' uint)?
//! atom    := rational | 't' | 'c' | 'kappa' | ('x' | 'y') index | 's(' i ',' j ')'
//!          | 'E(' r ',' s ')[' int ']' | 'id[' int ']' | 'L[' int ']' | 'T(' k ',' l ')'
//!          | '(' element ')'
//! ```

use std::fmt;

use thiserror::Error;

use suzuki_core::affine::{Affine, AffineElement, LevelForm, Mode, OpSpec};
use suzuki_core::cherednik::{Cherednik, CherednikElement};
use suzuki_core::{AlgebraError, Param, ParamScalar, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("at position {pos}: {source}")]
    Algebra { pos: usize, source: AlgebraError },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|c| c.1).collect();
            let v = text.parse().map_err(|_| ParseError::Syntax { pos, msg: format!("integer {text} too large") })?;
            toks.push((Tok::Num(v), pos));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphabetic() {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().map(|c| c.1).collect()), pos));
        } else if "+-*/^(),[]".contains(ch) {
            toks.push((Tok::Sym(ch), pos));
            i += 1;
        } else {
            return Err(ParseError::Syntax { pos, msg: format!("unexpected character {ch:?}") });
        }
    }
    Ok(Lexer { toks, end: src.len() })
}

/// Operations an evaluation target must provide.
trait Target {
    type Elem: Clone;
    fn scalar(&self, c: ParamScalar) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn generator(&self, g: &Generator) -> Result<Self::Elem, AlgebraError>;
}

#[derive(Clone, Debug, PartialEq)]
enum Generator {
    X(usize),
    Y(usize),
    S(usize, usize),
    E(usize, usize, i64),
    Op(OpSpec),
}

struct Parser<'a, T: Target> {
    lx: Lexer,
    at: usize,
    target: &'a T,
}

impl<'a, T: Target> Parser<'a, T> {
    fn pos(&self) -> usize {
        self.lx.toks.get(self.at).map_or(self.lx.end, |t| t.1)
    }

    fn peek(&self) -> Option<&Tok> {
        self.lx.toks.get(self.at).map(|t| &t.0)
    }

    fn err<V>(&self, msg: impl Into<String>) -> Result<V, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Tok::Num(v)) => {
                let v = *v;
                self.at += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn element(&mut self) -> Result<T::Elem, ParseError> {
        let neg = self.eat('-');
        let mut acc = self.term()?;
        if neg {
            acc = self.target.neg(&acc);
        }
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.target.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.target.add(&acc, &self.target.neg(&t));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<T::Elem, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = self.target.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<T::Elem, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.uint()?;
        let mut acc = self.target.scalar(ParamScalar::from(1));
        for _ in 0..e {
            acc = self.target.mul(&acc, &base);
        }
        Ok(acc)
    }

    fn generator(&mut self, g: Generator, pos: usize) -> Result<T::Elem, ParseError> {
        self.target.generator(&g).map_err(|source| ParseError::Algebra { pos, source })
    }

    fn atom(&mut self) -> Result<T::Elem, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                let mut v = Scalar::from_int(n as i64);
                if self.eat('/') {
                    let d = self.uint()?;
                    if d == 0 {
                        return Err(ParseError::Syntax { pos, msg: "zero denominator".into() });
                    }
                    v = Scalar::new(n as i64, d as i64);
                }
                Ok(self.target.scalar(ParamScalar::constant(v)))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.element()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                match name.as_str() {
                    "t" => Ok(self.target.scalar(ParamScalar::var(Param::T))),
                    "c" => Ok(self.target.scalar(ParamScalar::var(Param::C))),
                    "kappa" => Ok(self.target.scalar(ParamScalar::var(Param::Kappa))),
                    "x" | "y" => {
                        let i = self.uint()? as usize;
                        let g = if name == "x" { Generator::X(i) } else { Generator::Y(i) };
                        self.generator(g, pos)
                    }
                    "s" => {
                        self.expect('(')?;
                        let i = self.uint()? as usize;
                        self.expect(',')?;
                        let j = self.uint()? as usize;
                        self.expect(')')?;
                        self.generator(Generator::S(i, j), pos)
                    }
                    "E" => {
                        self.expect('(')?;
                        let r = self.uint()? as usize;
                        self.expect(',')?;
                        let s = self.uint()? as usize;
                        self.expect(')')?;
                        self.expect('[')?;
                        let j = self.int()?;
                        self.expect(']')?;
                        self.generator(Generator::E(r, s, j), pos)
                    }
                    "id" | "L" => {
                        self.expect('[')?;
                        let r = self.int()?;
                        self.expect(']')?;
                        let op = if name == "id" { OpSpec::Id(r) } else { OpSpec::L(r) };
                        self.generator(Generator::Op(op), pos)
                    }
                    "T" => {
                        self.expect('(')?;
                        let k = self.uint()? as usize;
                        self.expect(',')?;
                        let l = self.int()?;
                        self.expect(')')?;
                        self.generator(Generator::Op(OpSpec::T(k, l)), pos)
                    }
                    _ => Err(ParseError::Syntax { pos, msg: format!("unknown symbol {name:?}") }),
                }
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn run<T: Target>(src: &str, target: &T) -> Result<T::Elem, ParseError> {
    let lx = lex(src)?;
    let mut p = Parser { lx, at: 0, target };
    let e = p.element()?;
    if p.at < p.lx.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

struct CherednikTarget<'a>(&'a Cherednik<ParamScalar>);

impl Target for CherednikTarget<'_> {
    type Elem = CherednikElement<ParamScalar>;
    fn scalar(&self, c: ParamScalar) -> Self::Elem {
        CherednikElement::scalar(self.0.m, c)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.0.mul(a, b)
    }
    fn generator(&self, g: &Generator) -> Result<Self::Elem, AlgebraError> {
        match *g {
            Generator::X(i) => self.0.x(i),
            Generator::Y(i) => self.0.y(i),
            Generator::S(i, j) => self.0.s(i, j),
            _ => Err(AlgebraError::Invalid("affine generator in a Cherednik expression".into())),
        }
    }
}

struct AffineTarget<'a> {
    alg: &'a Affine<ParamScalar>,
    trunc: Option<i64>,
}

impl Target for AffineTarget<'_> {
    type Elem = AffineElement<ParamScalar>;
    fn scalar(&self, c: ParamScalar) -> Self::Elem {
        AffineElement::scalar(self.alg.n, c)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.alg.mul(a, b, self.trunc)
    }
    fn generator(&self, g: &Generator) -> Result<Self::Elem, AlgebraError> {
        let n = self.alg.n;
        match *g {
            Generator::E(r, s, j) => {
                let m = Mode::checked(n, r, s, j)?;
                Ok(AffineElement::word(n, vec![m], ParamScalar::from(1)).truncate(self.trunc.unwrap_or(i64::MAX)))
            }
            Generator::Op(op) => match self.trunc {
                Some(d) => self.alg.materialize(&op, d),
                None => Err(AlgebraError::Invalid(format!("{op} needs a truncation depth"))),
            },
            _ => Err(AlgebraError::Invalid("Cherednik generator in an affine expression".into())),
        }
    }
}

/// Where an expression is evaluated.
#[derive(Clone, Debug, PartialEq)]
pub enum Context {
    /// `H_{t,c}(S_m)`; `None` keeps a parameter symbolic.
    Cherednik { m: usize, t: Option<Scalar>, c: Option<Scalar> },
    /// `U(ĝl_n)` at the given level, products taken modulo `Î_trunc` when set.
    Affine { n: usize, form: LevelForm, trunc: Option<i64> },
}

/// A parsed element in canonical form.
#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Cherednik(CherednikElement<ParamScalar>),
    Affine(AffineElement<ParamScalar>),
}

impl fmt::Display for Parsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parsed::Cherednik(e) => write!(f, "{e}"),
            Parsed::Affine(e) => write!(f, "{e}"),
        }
    }
}

fn param(v: &Option<Scalar>, p: Param) -> ParamScalar {
    v.clone().map_or_else(|| ParamScalar::var(p), ParamScalar::constant)
}

pub fn parse_cherednik(src: &str, alg: &Cherednik<ParamScalar>) -> Result<CherednikElement<ParamScalar>, ParseError> {
    run(src, &CherednikTarget(alg))
}

pub fn parse_affine(src: &str, alg: &Affine<ParamScalar>, trunc: Option<i64>) -> Result<AffineElement<ParamScalar>, ParseError> {
    run(src, &AffineTarget { alg, trunc })
}

/// Parse `src` and return its normal form.
pub fn parse_expression(src: &str, ctx: &Context) -> Result<Parsed, ParseError> {
    match ctx {
        Context::Cherednik { m, t, c } => {
            let alg = Cherednik::new(*m, param(t, Param::T), param(c, Param::C));
            parse_cherednik(src, &alg).map(Parsed::Cherednik)
        }
        Context::Affine { n, form, trunc } => {
            let alg = Affine::new(*n, form.clone()).map_err(|source| ParseError::Algebra { pos: 0, source })?;
            parse_affine(src, &alg, *trunc).map(Parsed::Affine)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(m: usize) -> Context {
        Context::Cherednik { m, t: None, c: None }
    }

    fn aff(n: usize) -> Context {
        Context::Affine { n, form: LevelForm::Critical, trunc: None }
    }

    #[test]
    fn cherednik_examples() {
        let e = parse_expression("x1^2*s(1,2)*y2 + 3/2*x3", &sym(3)).unwrap();
        let Parsed::Cherednik(ref el) = e else { panic!() };
        assert_eq!(el.terms().len(), 2);
        assert_eq!(parse_expression("y1*x1", &sym(2)).unwrap().to_string(), "x1*y1 + t - c*s(1,2)");
    }

    #[test]
    fn affine_examples() {
        let e = parse_expression("E(1,2)[-1]*E(2,1)[-1]", &aff(2)).unwrap();
        let Parsed::Affine(ref el) = e else { panic!() };
        assert_eq!(el.terms().len(), 1);
        assert_eq!(e.to_string(), "E(1,2)[-1]*E(2,1)[-1]");
        let e = parse_expression("E(2,1)[-1]*E(1,2)[-1]", &aff(2)).unwrap();
        assert_eq!(e.to_string(), "E(1,2)[-1]*E(2,1)[-1] - E(1,1)[-2] + E(2,2)[-2]");
        let e = parse_expression("E(1,1)[1]*E(1,1)[-1]", &aff(2)).unwrap();
        assert_eq!(e.to_string(), "E(1,1)[-1]*E(1,1)[1] - 1");
    }

    #[test]
    fn parentheses_and_parameters() {
        let e = parse_expression("(t - c)*x1 - (x1)", &sym(2)).unwrap();
        assert_eq!(e.to_string(), "(t - c - 1)*x1");
        let again = parse_expression(&e.to_string(), &sym(2)).unwrap();
        assert_eq!(again, e);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_expression("x1 + ", &sym(2)).unwrap_err(),
            ParseError::Syntax { pos: 5, msg: "unexpected end of input".into() }
        );
        assert!(matches!(
            parse_expression("x1 + x5", &sym(2)).unwrap_err(),
            ParseError::Algebra { pos: 5, .. }
        ));
        assert!(matches!(parse_expression("x1 $", &sym(2)).unwrap_err(), ParseError::Syntax { pos: 3, .. }));
        assert!(parse_expression("L[0]", &aff(2)).is_err());
        assert!(parse_expression("E(1,2)[0]", &sym(2)).is_err());
    }
}
