//! Parser for the textual diagram grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := [scalar '*'] factor
//! factor := hcomp ('.' hcomp)*          top on the left
//! hcomp  := atom ('*' atom)*            left operand leftmost
//! atom   := gen | '(' expr ')'
//! gen    := id(c) | id() | enddot(c) | startdot(c) | split(c) | merge(c)
//!         | cup(c) | cap(c) | vertex2n(c) | jw(k,c)
//! scalar := satom (['/'] satom)*        juxtaposition multiplies
//! satom  := integer | 'q' ['^' ['-'] integer] | '(' ['+'|'-'] scalar (('+'|'-') scalar)* ')'
//! ```

use num_bigint::BigInt;

use super::diagram::{Diagram, DiagramExpr, GenKind};
use super::qscalar::QScalar;
use crate::bigraph::Color;
use crate::error::{Error, Result};
use crate::hecke::CoxeterOrder;
use crate::scalars::Rational;

pub fn parse(text: &str, n: CoxeterOrder) -> Result<DiagramExpr> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        n,
    };
    let e = p.expr()?;
    p.ws();
    if p.pos < p.s.len() {
        return p.err("unexpected input");
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    n: CoxeterOrder,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn expr(&mut self) -> Result<DiagramExpr> {
        let start = self.pos;
        let mut terms = Vec::new();
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let (c, d) = self.term()?;
            terms.push((if sign < 0 { c.neg() } else { c }, d));
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                break;
            }
        }
        DiagramExpr::new(terms, self.n).map_err(|e| match e {
            Error::Validation(m) => Error::Parse { pos: start, msg: m },
            e => e,
        })
    }

    fn term(&mut self) -> Result<(QScalar, Diagram)> {
        let save = self.pos;
        if let Ok(c) = self.scalar() {
            if self.eat(b'*') {
                let d = self.factor()?;
                return Ok((c, d));
            }
        }
        self.pos = save;
        Ok((QScalar::one(), self.factor()?))
    }

    fn factor(&mut self) -> Result<Diagram> {
        let mut d = self.hcomp()?;
        while self.eat(b'.') {
            let bottom = self.hcomp()?;
            d = Diagram::then(bottom, d);
            d.signature(self.n)?;
        }
        Ok(d)
    }

    fn hcomp(&mut self) -> Result<Diagram> {
        let mut d = self.atom()?;
        while self.eat(b'*') {
            let r = self.atom()?;
            d = Diagram::HComp(Box::new(d), Box::new(r));
        }
        Ok(d)
    }

    fn atom(&mut self) -> Result<Diagram> {
        if self.eat(b'(') {
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(e.into_diagram());
        }
        let name = self.ident();
        if name.is_empty() {
            return self.err("expected a generator or '('");
        }
        let kind = match name.as_str() {
            "id" => GenKind::Id,
            "enddot" => GenKind::DotEnd,
            "startdot" => GenKind::DotStart,
            "split" => GenKind::Split,
            "merge" => GenKind::Merge,
            "cup" => GenKind::Cup,
            "cap" => GenKind::Cap,
            "vertex2n" => GenKind::Vertex2n,
            "jw" => GenKind::Jw(0),
            _ => {
                self.pos -= name.len();
                return self.err(&format!("unknown generator '{name}'"));
            }
        };
        self.expect(b'(')?;
        if kind == GenKind::Id && self.eat(b')') {
            return Ok(Diagram::Empty);
        }
        let kind = if kind == GenKind::Jw(0) {
            let k = self.integer()?;
            self.expect(b',')?;
            GenKind::Jw(usize::try_from(k).map_err(|_| Error::Parse {
                pos: self.pos,
                msg: "bad strand count".into(),
            })?)
        } else {
            kind
        };
        let c = self.color()?;
        self.expect(b')')?;
        let d = Diagram::gen(kind, c);
        if kind == GenKind::Vertex2n {
            d.signature(self.n).map_err(|e| Error::Parse {
                pos: self.pos,
                msg: e.to_string(),
            })?;
        }
        Ok(d)
    }

    fn ident(&mut self) -> String {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn color(&mut self) -> Result<Color> {
        let name = self.ident();
        match Color::parse(&name) {
            Some(c) => Ok(c),
            None => self.err("expected color 's' or 't'"),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("integer out of range"))
    }

    fn scalar(&mut self) -> Result<QScalar> {
        let mut acc = self.satom()?;
        loop {
            let save = self.pos;
            if self.eat(b'/') {
                let d = self.satom()?;
                acc = acc.div(&d).map_err(|_| Error::Parse {
                    pos: save,
                    msg: "division by zero".into(),
                })?;
                continue;
            }
            match self.peek() {
                Some(c) if c.is_ascii_digit() || c == b'q' || c == b'(' => {
                    let save = self.pos;
                    match self.satom() {
                        Ok(x) => acc = acc.mul(&x),
                        Err(_) => {
                            self.pos = save;
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn satom(&mut self) -> Result<QScalar> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                self.ws();
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let v: BigInt = std::str::from_utf8(&self.s[start..self.pos])
                    .unwrap()
                    .parse()
                    .unwrap();
                Ok(QScalar::rational(Rational::from_integer(v)))
            }
            Some(b'q') => {
                self.pos += 1;
                if self
                    .s
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric())
                {
                    return self.err("not a scalar");
                }
                let mut k = 1;
                if self.eat(b'^') {
                    let neg = self.eat(b'-');
                    k = self.integer()?;
                    if neg {
                        k = -k;
                    }
                }
                Ok(QScalar::q_pow(k))
            }
            Some(b'(') => {
                self.pos += 1;
                let mut acc = if self.eat(b'-') {
                    self.scalar()?.neg()
                } else {
                    self.eat(b'+');
                    self.scalar()?
                };
                loop {
                    if self.eat(b'+') {
                        acc = acc.add(&self.scalar()?);
                    } else if self.eat(b'-') {
                        acc = acc.add(&self.scalar()?.neg());
                    } else {
                        break;
                    }
                }
                self.expect(b')')?;
                Ok(acc)
            }
            _ => self.err("expected a scalar"),
        }
    }
}
