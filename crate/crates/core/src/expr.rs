//! Text format for polynomials.
//!
//! Grammar (whitespace is insignificant, juxtaposition is not a product):
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := "-"? factor ("*" factor)*
//! factor   := base ("^" nat)?
//! base     := var | rational | "(" expr ")"
//! var      := ("x" | "u" | "a") nat
//! rational := nat ("/" nat)?
//! ```
//!
//! The three alphabets name the same indexed variables; one expression may
//! use only one of them. Printing lists terms in descending graded-lex order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{Monomial, Polynomial, Rational};

/// Largest accepted exponent.
pub const MAX_EXPONENT: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Alphabet {
    #[default]
    X,
    U,
    A,
}

impl Alphabet {
    pub fn letter(self) -> char {
        match self {
            Alphabet::X => 'x',
            Alphabet::U => 'u',
            Alphabet::A => 'a',
        }
    }

    pub fn from_letter(c: char) -> Option<Alphabet> {
        match c {
            'x' => Some(Alphabet::X),
            'u' => Some(Alphabet::U),
            'a' => Some(Alphabet::A),
            _ => None,
        }
    }
}

impl std::str::FromStr for Alphabet {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next().and_then(Alphabet::from_letter), chars.next()) {
            (Some(a), None) => Ok(a),
            _ => Err(format!("unknown alphabet `{s}` (expected x, u or a)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    VariableIndex { index: String, nvars: usize },
    ExponentOverflow(String),
    MixedAlphabets { first: char, found: char },
    ZeroDenominator,
}

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::VariableIndex { index, nvars } => {
                write!(f, "variable index {index} out of range 1..={nvars}")
            }
            ParseErrorKind::ExponentOverflow(e) => {
                write!(f, "exponent {e} exceeds the maximum {MAX_EXPONENT}")
            }
            ParseErrorKind::MixedAlphabets { first, found } => {
                write!(f, "variable alphabet `{found}` mixed with `{first}`")
            }
            ParseErrorKind::ZeroDenominator => write!(f, "zero denominator in rational literal"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Var(Alphabet, String),
    Nat(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Var(a, i) => write!(f, "`{}{}`", a.letter(), i),
            Tok::Nat(n) => write!(f, "`{n}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn err(kind: ParseErrorKind, pos: Pos) -> ParseError {
    ParseError {
        kind,
        line: pos.line,
        column: pos.column,
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            column += 1;
            out.push((t, pos));
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Nat(digits), pos));
            continue;
        }
        if let Some(alpha) = Alphabet::from_letter(c) {
            chars.next();
            column += 1;
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            if digits.is_empty() {
                return Err(err(
                    ParseErrorKind::Syntax(format!("variable `{c}` needs an index")),
                    pos,
                ));
            }
            out.push((Tok::Var(alpha, digits), pos));
            continue;
        }
        return Err(err(
            ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
            pos,
        ));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    nvars: usize,
    alphabet: Option<Alphabet>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        err(
            ParseErrorKind::Syntax(format!("expected {wanted}, found {}", self.peek())),
            self.pos(),
        )
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc += &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Nat(digits), pos) => {
                let e = digits
                    .parse::<u64>()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| err(ParseErrorKind::ExponentOverflow(digits.clone()), pos))?;
                Ok(base.pow(e as u32))
            }
            (t, pos) => Err(err(
                ParseErrorKind::Syntax(format!("expected an exponent after `^`, found {t}")),
                pos,
            )),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Var(alpha, digits) => {
                self.bump();
                match self.alphabet {
                    None => self.alphabet = Some(alpha),
                    Some(first) if first != alpha => {
                        return Err(err(
                            ParseErrorKind::MixedAlphabets {
                                first: first.letter(),
                                found: alpha.letter(),
                            },
                            pos,
                        ))
                    }
                    Some(_) => {}
                }
                let index = digits
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i >= 1 && i <= self.nvars)
                    .ok_or_else(|| {
                        err(
                            ParseErrorKind::VariableIndex {
                                index: digits,
                                nvars: self.nvars,
                            },
                            pos,
                        )
                    })?;
                Ok(Polynomial::variable(self.nvars, index - 1))
            }
            Tok::Nat(digits) => {
                self.bump();
                let num: BigInt = digits.parse().expect("digit string");
                let mut value = Rational::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        (Tok::Nat(d), dpos) => {
                            let den: BigInt = d.parse().expect("digit string");
                            if den.is_zero() {
                                return Err(err(ParseErrorKind::ZeroDenominator, dpos));
                            }
                            value /= Rational::from_integer(den);
                        }
                        (t, dpos) => {
                            return Err(err(
                                ParseErrorKind::Syntax(format!(
                                    "expected a denominator after `/`, found {t}"
                                )),
                                dpos,
                            ))
                        }
                    }
                }
                Ok(Polynomial::constant(self.nvars, value))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a variable, number or `(`")),
        }
    }
}

/// Parses `src` as a polynomial in `nvars` variables.
pub fn parse(src: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    parse_with_alphabet(src, nvars).map(|(p, _)| p)
}

/// Like [`parse`], also reporting which variable alphabet the source used.
pub fn parse_with_alphabet(
    src: &str,
    nvars: usize,
) -> Result<(Polynomial, Option<Alphabet>), ParseError> {
    let toks = tokenize(src)?;
    let mut parser = Parser {
        toks,
        at: 0,
        nvars,
        alphabet: None,
    };
    let p = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok((p, parser.alphabet))
}

/// Largest variable index mentioned in `src`, or 0 when there is none.
pub fn max_variable_index(src: &str) -> Result<usize, ParseError> {
    let toks = tokenize(src)?;
    let mut max = 0;
    for (t, pos) in toks {
        if let Tok::Var(_, digits) = t {
            let i = digits.parse::<usize>().map_err(|_| {
                err(
                    ParseErrorKind::VariableIndex {
                        index: digits.clone(),
                        nvars: usize::MAX,
                    },
                    pos,
                )
            })?;
            max = max.max(i);
        }
    }
    Ok(max)
}

fn write_rational(out: &mut String, c: &Rational) {
    out.push_str(&c.numer().to_string());
    if !c.denom().is_one() {
        out.push('/');
        out.push_str(&c.denom().to_string());
    }
}

fn write_monomial(out: &mut String, m: &Monomial, alphabet: Alphabet) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push(alphabet.letter());
        out.push_str(&(i + 1).to_string());
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// Canonical text form of `p`.
pub fn print(p: &Polynomial, alphabet: Alphabet) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = c.abs();
        if m.is_one() {
            write_rational(&mut out, &magnitude);
        } else {
            if !magnitude.is_one() {
                write_rational(&mut out, &magnitude);
                out.push('*');
            }
            write_monomial(&mut out, m, alphabet);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i - 1)
    }

    #[test]
    fn parses_expanded_square() {
        let p = parse("x1^2 - 2*x1*x2 + x2^2", 2).unwrap();
        let d = &x(2, 1) - &x(2, 2);
        assert_eq!(p, &d * &d);
    }

    #[test]
    fn parses_binomial_cube() {
        let p = parse("(u1+u2)^3", 2).unwrap();
        let expect = parse("u1^3 + 3*u1^2*u2 + 3*u1*u2^2 + u2^3", 2).unwrap();
        assert_eq!(p, expect);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn variable_index_out_of_range() {
        let e = parse("x0", 2).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::VariableIndex { .. }));
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse("x1 + x3", 2).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::VariableIndex { .. }));
        assert_eq!((e.line, e.column), (1, 6));
    }

    #[test]
    fn syntax_errors_are_positioned() {
        let e = parse("x1 +\n  * x2", 2).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert_eq!((e.line, e.column), (2, 3));
        // juxtaposition is not multiplication
        let e = parse("x1 x2", 2).unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        assert!(parse("(x1 + x2", 2).is_err());
        assert!(parse("x1^", 2).is_err());
        assert!(parse("x1^2^3", 2).is_err());
        assert!(parse("y1", 2).is_err());
        assert!(parse("", 2).is_err());
    }

    #[test]
    fn exponent_overflow() {
        let e = parse("x1^2147483648", 1).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::ExponentOverflow(_)));
        assert_eq!((e.line, e.column), (1, 4));
        assert!(parse("x1^2147483647", 1).is_ok());
    }

    #[test]
    fn mixed_alphabets_rejected() {
        let e = parse("x1 + u2", 2).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MixedAlphabets { .. }));
        let (_, alpha) = parse_with_alphabet("a1*a2", 2).unwrap();
        assert_eq!(alpha, Some(Alphabet::A));
        let (_, alpha) = parse_with_alphabet("3/4", 2).unwrap();
        assert_eq!(alpha, None);
    }

    #[test]
    fn rationals_and_unary_minus() {
        let p = parse("-3/2*x1^2*x2", 2).unwrap();
        let expect = (&x(2, 1).pow(2) * &x(2, 2)).scale(&ratio(-3, 2));
        assert_eq!(p, expect);
        assert_eq!(parse("x1 - -x1", 1).unwrap(), x(1, 1).scale(&ratio(2, 1)));
        assert!(parse("1/0", 1).is_err());
        assert!(parse("--x1", 1).is_err());
    }

    #[test]
    fn print_examples() {
        assert_eq!(print(&Polynomial::zero(3), Alphabet::X), "0");
        assert_eq!(print(&(&x(2, 1) + &x(2, 2)), Alphabet::A), "a1 + a2");
        let p = (&x(2, 1).pow(2) * &x(2, 2)).scale(&ratio(-3, 2));
        assert_eq!(print(&p, Alphabet::X), "-3/2*x1^2*x2");
        let h2 = parse("x2^2 + x1*x2 + x1^2", 2).unwrap();
        assert_eq!(print(&h2, Alphabet::X), "x1^2 + x1*x2 + x2^2");
        let q = parse("1 - x1 + 2*x2^3 - 1/3", 2).unwrap();
        assert_eq!(print(&q, Alphabet::U), "2*u2^3 - u1 + 2/3");
        assert_eq!(print(&Polynomial::from_int(1, -1), Alphabet::X), "-1");
    }

    #[test]
    fn max_index() {
        assert_eq!(max_variable_index("x1 - x7^2").unwrap(), 7);
        assert_eq!(max_variable_index("3").unwrap(), 0);
    }
}
