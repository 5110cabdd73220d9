//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := [+|-] term ((+|-) term)*
//! term   := factor ([*] factor)*
//! factor := atom [^ uint]
//! atom   := int | x | ( expr ) | ( int , int , ... )
//! ```
//!
//! Juxtaposition multiplies, so `3x^2`, `2(x-1)(x+1)` and `(1,2)x` all parse.
//! Bare integers embed diagonally into product rings; tuples must have one
//! entry per component. Whitespace is ignored everywhere.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{poly_add, poly_mul, Polynomial, RingDescriptor, RingElement};

/// Exponents and intermediate degrees above this are rejected.
pub const MAX_DEGREE: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Int(v)));
                continue;
            }
            b'x' | b'X' => Tok::X,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(syntax(i, format!("unexpected character {ch:?}")));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    ring: &'a RingDescriptor,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.at + ahead).min(self.toks.len() - 1);
        &self.toks[i].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            let negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
            let t = self.term()?;
            let t = if negate { t.neg() } else { t };
            acc = poly_add(&acc, &t).expect("same ring");
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::X | Tok::LParen)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
            } else if !self.starts_factor() {
                break;
            }
            let pos = self.pos();
            let f = self.factor()?;
            check_degree(pos, acc.degree().unwrap_or(0) + f.degree().unwrap_or(0))?;
            acc = poly_mul(&acc, &f).expect("same ring");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let Tok::Int(e) = self.bump() else {
            return Err(syntax(pos, "expected a nonnegative exponent"));
        };
        let e = usize::try_from(&e)
            .ok()
            .filter(|&e| e <= MAX_DEGREE)
            .ok_or_else(|| syntax(pos, format!("exponent above {MAX_DEGREE}")))?;
        check_degree(pos, base.degree().unwrap_or(0).saturating_mul(e))?;
        Ok(pow(&base, e))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(v) => Ok(Polynomial::constant(self.ring, self.ring.from_integer(&v))),
            Tok::X => Ok(Polynomial::x(self.ring)),
            Tok::LParen if self.is_tuple() => {
                let c = self.tuple(pos)?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            _ => Err(syntax(pos, "expected an integer, 'x' or '('")),
        }
    }

    /// After `(`: a signed integer followed by a comma.
    fn is_tuple(&self) -> bool {
        let skip = usize::from(*self.peek() == Tok::Minus);
        matches!(self.peek_at(skip), Tok::Int(_)) && *self.peek_at(skip + 1) == Tok::Comma
    }

    fn tuple(&mut self, pos: usize) -> Result<RingElement> {
        let mut values = Vec::new();
        loop {
            let negate = *self.peek() == Tok::Minus;
            if negate {
                self.bump();
            }
            let at = self.pos();
            let Tok::Int(v) = self.bump() else {
                return Err(syntax(at, "expected an integer in coefficient tuple"));
            };
            values.push(if negate { -v } else { v });
            let at = self.pos();
            match self.bump() {
                Tok::Comma => continue,
                Tok::RParen => break,
                _ => return Err(syntax(at, "expected ',' or ')'")),
            }
        }
        if values.len() != self.ring.arity() {
            return Err(Error::CoefficientArity {
                pos,
                expected: self.ring.arity(),
                got: values.len(),
            });
        }
        self.ring.element_from_ints(&values)
    }
}

fn check_degree(pos: usize, degree: usize) -> Result<()> {
    if degree > MAX_DEGREE {
        Err(syntax(pos, format!("degree above {MAX_DEGREE}")))
    } else {
        Ok(())
    }
}

fn pow(base: &Polynomial, mut e: usize) -> Polynomial {
    let mut acc = Polynomial::one(base.ring());
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul(&acc, &sq).expect("same ring");
        }
        e >>= 1;
        if e > 0 {
            sq = poly_mul(&sq, &sq).expect("same ring");
        }
    }
    acc
}

/// Parses `text` into a reduced polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &RingDescriptor) -> Result<Polynomial> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        ring,
    };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(out)
}

/// A ring given as `12` or `2,2,3`.
pub fn parse_ring(text: &str) -> Result<RingDescriptor> {
    let moduli = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| syntax(0, format!("bad modulus {:?}", part.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    RingDescriptor::new(moduli)
}

/// A ring element given as `5`, `1,0` or `(1,0)`; a single integer embeds
/// diagonally.
pub fn parse_element(text: &str, ring: &RingDescriptor) -> Result<RingElement> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t);
    let values = inner
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<BigInt>()
                .map_err(|_| syntax(0, format!("bad element entry {:?}", part.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    match values.as_slice() {
        [v] => Ok(ring.from_integer(v)),
        _ if values.len() == ring.arity() => ring.element_from_ints(&values),
        _ => Err(Error::CoefficientArity {
            pos: 0,
            expected: ring.arity(),
            got: values.len(),
        }),
    }
}
