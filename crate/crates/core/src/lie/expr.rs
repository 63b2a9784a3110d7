use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// A free generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// Kinetic energy, degree 2.
    A,
    /// Potential energy, degree 0.
    B,
}

impl Symbol {
    pub fn degree(self) -> u32 {
        match self {
            Symbol::A => 2,
            Symbol::B => 0,
        }
    }

    fn letter(self) -> char {
        match self {
            Symbol::A => 'A',
            Symbol::B => 'B',
        }
    }
}

/// Order and degree of a bracket expression.
///
/// `degree` is `None` when the expression contains a bracket of two degree-0
/// subexpressions, which vanishes identically in every polynomially graded
/// Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grade {
    pub order: usize,
    pub degree: Option<u32>,
}

impl Grade {
    pub fn is_identically_zero(&self) -> bool {
        self.degree.is_none()
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Node {
    Leaf(Symbol),
    Bracket(BracketExpr, BracketExpr),
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    node: Node,
    grade: Grade,
}

/// Immutable binary bracket tree over `A` and `B`; subtrees are shared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketExpr(Arc<Inner>);

impl BracketExpr {
    pub fn leaf(symbol: Symbol) -> Self {
        BracketExpr(Arc::new(Inner {
            node: Node::Leaf(symbol),
            grade: Grade {
                order: 1,
                degree: Some(symbol.degree()),
            },
        }))
    }

    pub fn a() -> Self {
        Self::leaf(Symbol::A)
    }

    pub fn b() -> Self {
        Self::leaf(Symbol::B)
    }

    /// `[left, right]`.
    pub fn bracket(left: &BracketExpr, right: &BracketExpr) -> Self {
        let (l, r) = (left.grade(), right.grade());
        let degree = match (l.degree, r.degree) {
            (Some(0), Some(0)) | (None, _) | (_, None) => None,
            (Some(dl), Some(dr)) => Some(dl + dr - 1),
        };
        BracketExpr(Arc::new(Inner {
            node: Node::Bracket(left.clone(), right.clone()),
            grade: Grade {
                order: l.order + r.order,
                degree,
            },
        }))
    }

    /// Right-nested bracket `[e1, [e2, [..., en]]]`.
    pub fn right_nested(items: &[BracketExpr]) -> Option<Self> {
        let (last, rest) = items.split_last()?;
        Some(
            rest.iter()
                .rev()
                .fold(last.clone(), |acc, e| BracketExpr::bracket(e, &acc)),
        )
    }

    pub fn grade(&self) -> Grade {
        self.0.grade
    }

    pub fn order(&self) -> usize {
        self.0.grade.order
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.grade.degree
    }

    pub fn as_leaf(&self) -> Option<Symbol> {
        match self.0.node {
            Node::Leaf(s) => Some(s),
            Node::Bracket(..) => None,
        }
    }

    pub fn children(&self) -> Option<(&BracketExpr, &BracketExpr)> {
        match &self.0.node {
            Node::Leaf(_) => None,
            Node::Bracket(l, r) => Some((l, r)),
        }
    }

    /// True if `other` occurs as a subtree of `self` (including `self`).
    pub fn contains(&self, other: &BracketExpr) -> bool {
        if self == other {
            return true;
        }
        match self.children() {
            Some((l, r)) => l.contains(other) || r.contains(other),
            None => false,
        }
    }

    /// Letters of a right-nested chain of leaves, e.g. `BBA` for `[B,[B,A]]`.
    fn chain_letters(&self) -> Option<String> {
        match &self.0.node {
            Node::Leaf(s) => Some(s.letter().to_string()),
            Node::Bracket(l, r) => {
                let head = l.as_leaf()?;
                let mut tail = r.chain_letters()?;
                tail.insert(0, head.letter());
                Some(tail)
            }
        }
    }

    fn render_part(&self, out: &mut String) {
        match self.chain_letters() {
            Some(letters) => out.push_str(&letters),
            None => self.render(out),
        }
    }

    fn render(&self, out: &mut String) {
        match &self.0.node {
            Node::Leaf(s) => out.push(s.letter()),
            Node::Bracket(l, r) => {
                out.push('[');
                match self.chain_letters() {
                    Some(letters) => out.push_str(&letters),
                    None => {
                        l.render_part(out);
                        out.push(',');
                        r.render_part(out);
                    }
                }
                out.push(']');
            }
        }
    }

    /// Parses the compact notation produced by `Display`, where `[XYZ]`
    /// stands for `[X,[Y,Z]]` and comma-separated parts are right-nested.
    pub fn parse(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let expr = parse_part(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::InvalidArgument(format!(
                "trailing input at position {pos} in {s:?}"
            )));
        }
        Ok(expr)
    }
}

fn parse_part(chars: &[char], pos: &mut usize) -> Result<BracketExpr> {
    match chars.get(*pos) {
        Some('[') => {
            *pos += 1;
            let mut parts = vec![parse_part(chars, pos)?];
            loop {
                match chars.get(*pos) {
                    Some(',') => {
                        *pos += 1;
                        parts.push(parse_part(chars, pos)?);
                    }
                    Some(']') => {
                        *pos += 1;
                        break;
                    }
                    other => {
                        return Err(Error::InvalidArgument(format!(
                            "expected ',' or ']' at position {}, found {other:?}",
                            *pos
                        )))
                    }
                }
            }
            Ok(BracketExpr::right_nested(&parts).expect("nonempty"))
        }
        Some('A') | Some('B') => {
            let mut letters = Vec::new();
            while let Some(&c) = chars.get(*pos) {
                let sym = match c {
                    'A' => Symbol::A,
                    'B' => Symbol::B,
                    _ => break,
                };
                letters.push(BracketExpr::leaf(sym));
                *pos += 1;
            }
            Ok(BracketExpr::right_nested(&letters).expect("nonempty"))
        }
        other => Err(Error::InvalidArgument(format!(
            "unexpected {other:?} at position {}",
            *pos
        ))),
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s);
        f.write_str(&s)
    }
}

/// Order and degree of `expr`, with the identically-zero flag.
pub fn grade(expr: &BracketExpr) -> Grade {
    expr.grade()
}
