//! Two-color Soergel diagrams and formal linear combinations of them.
//!
//! Words are read left to right. A diagram maps its bottom word (source)
//! to its top word (target); in `a . b` the diagram `b` sits below `a`.

use std::fmt;

use super::qscalar::QScalar;
use crate::bigraph::Color;
use crate::bimod::word_string;
use crate::error::{Error, Result};
use crate::hecke::{CoxeterOrder, DihedralWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    Id,
    DotEnd,
    DotStart,
    Split,
    Merge,
    Cup,
    Cap,
    /// The `2n`-valent vertex; the color is the rightmost bottom letter.
    Vertex2n,
    /// Jones–Wenzl morphism on `k` alternating strands; the color is the
    /// rightmost letter.
    Jw(usize),
}

impl GenKind {
    pub fn name(self) -> &'static str {
        match self {
            GenKind::Id => "id",
            GenKind::DotEnd => "enddot",
            GenKind::DotStart => "startdot",
            GenKind::Split => "split",
            GenKind::Merge => "merge",
            GenKind::Cup => "cup",
            GenKind::Cap => "cap",
            GenKind::Vertex2n => "vertex2n",
            GenKind::Jw(_) => "jw",
        }
    }

    pub fn degree(self) -> i32 {
        match self {
            GenKind::DotEnd | GenKind::DotStart => 1,
            GenKind::Split | GenKind::Merge => -1,
            _ => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GenKind,
    pub color: Color,
}

impl Generator {
    pub fn new(kind: GenKind, color: Color) -> Self {
        Generator { kind, color }
    }

    /// `(source, target)`; the 2n-vertex needs a finite `n`.
    pub fn boundary(&self, n: CoxeterOrder) -> Result<(Vec<Color>, Vec<Color>)> {
        let c = self.color;
        Ok(match self.kind {
            GenKind::Id => (vec![c], vec![c]),
            GenKind::DotEnd => (vec![c], vec![]),
            GenKind::DotStart => (vec![], vec![c]),
            GenKind::Split => (vec![c], vec![c, c]),
            GenKind::Merge => (vec![c, c], vec![c]),
            GenKind::Cup => (vec![], vec![c, c]),
            GenKind::Cap => (vec![c, c], vec![]),
            GenKind::Vertex2n => match n {
                CoxeterOrder::Finite(n) => {
                    let n = n as usize;
                    (
                        DihedralWord::new(c, n).letters(),
                        DihedralWord::new(c.opposite(), n).letters(),
                    )
                }
                CoxeterOrder::Infinite => {
                    return Err(Error::Validation(
                        "the 2n-valent vertex needs a finite n".into(),
                    ))
                }
            },
            GenKind::Jw(k) => {
                let w = DihedralWord::new(c, k).letters();
                (w.clone(), w)
            }
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::Jw(k) => write!(f, "jw({k},{})", self.color),
            kind => write!(f, "{}({})", kind.name(), self.color),
        }
    }
}

/// A Soergel diagram built from generators by horizontal and vertical
/// composition.
#[derive(Clone, Debug, PartialEq)]
pub enum Diagram {
    /// The identity of the empty word.
    Empty,
    Gen(Generator),
    /// Left operand leftmost.
    HComp(Box<Diagram>, Box<Diagram>),
    /// `VComp(top, bottom)`.
    VComp(Box<Diagram>, Box<Diagram>),
    Sum(Box<DiagramExpr>),
}

impl Diagram {
    pub fn gen(kind: GenKind, color: Color) -> Self {
        Diagram::Gen(Generator::new(kind, color))
    }

    /// Identity strands on a word.
    pub fn ids(word: &[Color]) -> Self {
        Diagram::tensor(word.iter().map(|&c| Diagram::gen(GenKind::Id, c)).collect())
    }

    /// Horizontal composite of a list, left to right; empty pieces are dropped.
    pub fn tensor(parts: Vec<Diagram>) -> Self {
        parts
            .into_iter()
            .filter(|d| *d != Diagram::Empty)
            .reduce(|a, b| Diagram::HComp(Box::new(a), Box::new(b)))
            .unwrap_or(Diagram::Empty)
    }

    /// `top ∘ bottom`.
    pub fn then(bottom: Diagram, top: Diagram) -> Self {
        Diagram::VComp(Box::new(top), Box::new(bottom))
    }

    /// Vertical composite of layers listed bottom first.
    pub fn stack(layers: Vec<Diagram>) -> Self {
        layers
            .into_iter()
            .reduce(Diagram::then)
            .unwrap_or(Diagram::Empty)
    }

    /// `(source, target, degree)`, checking vertical compatibility.
    pub fn signature(&self, n: CoxeterOrder) -> Result<(Vec<Color>, Vec<Color>, i32)> {
        match self {
            Diagram::Empty => Ok((vec![], vec![], 0)),
            Diagram::Gen(g) => {
                let (s, t) = g.boundary(n)?;
                Ok((s, t, g.kind.degree()))
            }
            Diagram::HComp(a, b) => {
                let (s1, t1, d1) = a.signature(n)?;
                let (s2, t2, d2) = b.signature(n)?;
                Ok(([s1, s2].concat(), [t1, t2].concat(), d1 + d2))
            }
            Diagram::VComp(top, bottom) => {
                let (s1, t1, d1) = top.signature(n)?;
                let (s2, t2, d2) = bottom.signature(n)?;
                if t2 != s1 {
                    return Err(Error::BoundaryMismatch(word_string(&t2), word_string(&s1)));
                }
                Ok((s2, t1, d1 + d2))
            }
            Diagram::Sum(e) => Ok((e.source.clone(), e.target.clone(), e.degree)),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        // prec 0: expr context, 1: factor operand ('.'), 2: '*' operand
        match self {
            Diagram::Empty => write!(f, "id()"),
            Diagram::Gen(g) => write!(f, "{g}"),
            Diagram::HComp(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " * ")?;
                b.fmt_prec(f, 2)
            }
            Diagram::VComp(top, bottom) => {
                if prec >= 2 {
                    write!(f, "(")?;
                }
                top.fmt_prec(f, 1)?;
                write!(f, " . ")?;
                bottom.fmt_prec(f, 1)?;
                if prec >= 2 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            Diagram::Sum(e) => {
                if e.terms.len() == 1 && e.terms[0].0.is_one() {
                    e.terms[0].1.fmt_prec(f, prec)
                } else {
                    write!(f, "({e})")
                }
            }
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// A formal linear combination of diagrams with a common boundary and degree.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagramExpr {
    pub terms: Vec<(QScalar, Diagram)>,
    pub source: Vec<Color>,
    pub target: Vec<Color>,
    pub degree: i32,
}

impl DiagramExpr {
    pub fn single(d: Diagram, n: CoxeterOrder) -> Result<Self> {
        DiagramExpr::new(vec![(QScalar::one(), d)], n)
    }

    /// Checks that all terms share a boundary and a degree.
    pub fn new(terms: Vec<(QScalar, Diagram)>, n: CoxeterOrder) -> Result<Self> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::Validation("empty linear combination".into()));
        };
        let (source, target, degree) = first.signature(n)?;
        for (_, d) in &terms[1..] {
            let (s, t, deg) = d.signature(n)?;
            if s != source || t != target {
                return Err(Error::BoundaryMismatch(
                    format!("{}→{}", word_string(&source), word_string(&target)),
                    format!("{}→{}", word_string(&s), word_string(&t)),
                ));
            }
            if deg != degree {
                return Err(Error::Validation(format!(
                    "terms of degree {degree} and {deg} cannot be added"
                )));
            }
        }
        Ok(DiagramExpr {
            terms,
            source,
            target,
            degree,
        })
    }

    pub fn into_diagram(self) -> Diagram {
        if self.terms.len() == 1 && self.terms[0].0.is_one() {
            self.terms.into_iter().next().unwrap().1
        } else {
            Diagram::Sum(Box::new(self))
        }
    }
}

impl fmt::Display for DiagramExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, d)) in self.terms.iter().enumerate() {
            let (sign, coeff) = if c.is_minus_one() {
                ("-", None)
            } else if c.is_one() {
                ("+", None)
            } else {
                ("+", Some(c))
            };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            if let Some(c) = coeff {
                write!(f, "({c})*")?;
                d.fmt_prec(f, 2)?;
            } else {
                d.fmt_prec(f, 1)?;
            }
        }
        Ok(())
    }
}
