//! Formulas of LTL with past-time and bounded operators.
//!
//! The concrete syntax, loosest binding first:
//!
//! ```text
//! temporal := disj ( ("U" | "R" | "S" | "T") ["[" nat "]"] temporal )?
//! disj     := conj ( "|" disj )?
//! conj     := unary ( "&" conj )?
//! unary    := ("!" | "X" | "wX" | "Y" | "wY") unary
//!           | ("F" | "G" | "O" | "H") ["[" nat "]"] unary
//!           | ident | "(" temporal ")"
//! ```
//!
//! `true` and `false` are reserved atoms whose valuation is constant. The
//! derived operators `F`, `G`, `O` and `H` are desugared while parsing.

use std::fmt;
use std::iter::Peekable;
use std::str::CharIndices;

use thiserror::Error;

/// Reserved proposition that holds at every position.
pub const TRUE_ATOM: &str = "_true";
/// Reserved proposition that holds at no position.
pub const FALSE_ATOM: &str = "_false";

/// The four one-step operators. Strong variants are false beyond the path
/// boundary, weak ones are true.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShiftOp {
    NextStrong,
    NextWeak,
    YesterdayStrong,
    YesterdayWeak,
}

impl ShiftOp {
    pub const ALL: [ShiftOp; 4] = [
        ShiftOp::NextStrong,
        ShiftOp::NextWeak,
        ShiftOp::YesterdayStrong,
        ShiftOp::YesterdayWeak,
    ];

    pub fn dual(self) -> Self {
        match self {
            ShiftOp::NextStrong => ShiftOp::NextWeak,
            ShiftOp::NextWeak => ShiftOp::NextStrong,
            ShiftOp::YesterdayStrong => ShiftOp::YesterdayWeak,
            ShiftOp::YesterdayWeak => ShiftOp::YesterdayStrong,
        }
    }

    pub fn is_past(self) -> bool {
        matches!(self, ShiftOp::YesterdayStrong | ShiftOp::YesterdayWeak)
    }

    /// Value seen when the shifted position falls off the path.
    pub fn boundary_value(self) -> bool {
        matches!(self, ShiftOp::NextWeak | ShiftOp::YesterdayWeak)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ShiftOp::NextStrong => "X",
            ShiftOp::NextWeak => "wX",
            ShiftOp::YesterdayStrong => "Y",
            ShiftOp::YesterdayWeak => "wY",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoolOp {
    And,
    Or,
}

impl BoolOp {
    pub fn dual(self) -> Self {
        match self {
            BoolOp::And => BoolOp::Or,
            BoolOp::Or => BoolOp::And,
        }
    }

    pub fn apply(self, l: bool, r: bool) -> bool {
        match self {
            BoolOp::And => l && r,
            BoolOp::Or => l || r,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BoolOp::And => "&",
            BoolOp::Or => "|",
        }
    }
}

/// Binary temporal operators. Until/Release look forward, Since/Trigger
/// look backward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TemporalOp {
    Until,
    Release,
    Since,
    Trigger,
}

impl TemporalOp {
    pub const ALL: [TemporalOp; 4] = [
        TemporalOp::Until,
        TemporalOp::Release,
        TemporalOp::Since,
        TemporalOp::Trigger,
    ];

    pub fn dual(self) -> Self {
        match self {
            TemporalOp::Until => TemporalOp::Release,
            TemporalOp::Release => TemporalOp::Until,
            TemporalOp::Since => TemporalOp::Trigger,
            TemporalOp::Trigger => TemporalOp::Since,
        }
    }

    pub fn is_past(self) -> bool {
        matches!(self, TemporalOp::Since | TemporalOp::Trigger)
    }

    /// Until and Since are existential (disjunctive), Release and Trigger
    /// universal (conjunctive).
    pub fn is_existential(self) -> bool {
        matches!(self, TemporalOp::Until | TemporalOp::Since)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            TemporalOp::Until => "U",
            TemporalOp::Release => "R",
            TemporalOp::Since => "S",
            TemporalOp::Trigger => "T",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    Bool(BoolOp, Box<Formula>, Box<Formula>),
    Shift(ShiftOp, Box<Formula>),
    Temporal {
        op: TemporalOp,
        /// `None` for the unbounded operator.
        bound: Option<usize>,
        left: Box<Formula>,
        right: Box<Formula>,
    },
}

/// A possibly negated atomic proposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    pub name: String,
    pub negated: bool,
}

impl Literal {
    pub fn positive(name: impl Into<String>) -> Self {
        Literal {
            name: name.into(),
            negated: false,
        }
    }

    pub fn negative(name: impl Into<String>) -> Self {
        Literal {
            name: name.into(),
            negated: true,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("!")?;
        }
        f.write_str(display_atom(&self.name))
    }
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn constant(value: bool) -> Self {
        Formula::Atom(if value { TRUE_ATOM } else { FALSE_ATOM }.to_owned())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::Bool(BoolOp::And, Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Bool(BoolOp::Or, Box::new(l), Box::new(r))
    }

    pub fn shift(op: ShiftOp, f: Formula) -> Self {
        Formula::Shift(op, Box::new(f))
    }

    pub fn temporal(op: TemporalOp, bound: Option<usize>, l: Formula, r: Formula) -> Self {
        Formula::Temporal {
            op,
            bound,
            left: Box::new(l),
            right: Box::new(r),
        }
    }

    pub fn until(l: Formula, r: Formula) -> Self {
        Self::temporal(TemporalOp::Until, None, l, r)
    }

    pub fn release(l: Formula, r: Formula) -> Self {
        Self::temporal(TemporalOp::Release, None, l, r)
    }

    pub fn since(l: Formula, r: Formula) -> Self {
        Self::temporal(TemporalOp::Since, None, l, r)
    }

    pub fn trigger(l: Formula, r: Formula) -> Self {
        Self::temporal(TemporalOp::Trigger, None, l, r)
    }

    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        Parser::new(text)?.parse_formula()
    }

    /// Direct subformulas, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) => vec![],
            Formula::Not(x) | Formula::Shift(_, x) => vec![x],
            Formula::Bool(_, l, r) => vec![l, r],
            Formula::Temporal { left, right, .. } => vec![left, right],
        }
    }

    /// Size with unary accounting for bounds: a bounded operator counts as
    /// `1 + b` nodes.
    pub fn size(&self) -> usize {
        let own = match self {
            Formula::Temporal { bound: Some(b), .. } => 1 + b,
            _ => 1,
        };
        own + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Plain number of syntax-tree nodes.
    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(|c| c.node_count()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self
            .children()
            .iter()
            .map(|c| c.depth())
            .max()
            .unwrap_or(0)
    }

    pub fn as_literal(&self) -> Option<Literal> {
        match self {
            Formula::Atom(p) => Some(Literal::positive(p.clone())),
            Formula::Not(x) => match x.as_ref() {
                Formula::Atom(p) => Some(Literal::negative(p.clone())),
                _ => None,
            },
            _ => None,
        }
    }

    /// Atom names occurring in the formula, reserved constants included,
    /// in order of first occurrence.
    pub fn atoms(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if let Formula::Atom(p) = f {
                if !out.contains(&p.as_str()) {
                    out.push(p);
                }
            }
            stack.extend(f.children().into_iter().rev());
        }
        out
    }

    /// True when negation occurs only directly above atoms.
    pub fn is_pnf(&self) -> bool {
        match self {
            Formula::Not(x) => matches!(x.as_ref(), Formula::Atom(_)),
            _ => self.children().iter().all(|c| c.is_pnf()),
        }
    }

    /// Pushes negations down to the atoms using the operator dualities.
    pub fn to_pnf(&self) -> Formula {
        self.pnf(false)
    }

    fn pnf(&self, negate: bool) -> Formula {
        match self {
            Formula::Atom(p) => {
                let atom = Formula::Atom(p.clone());
                if negate {
                    Formula::not(atom)
                } else {
                    atom
                }
            }
            Formula::Not(x) => x.pnf(!negate),
            Formula::Bool(op, l, r) => Formula::Bool(
                if negate { op.dual() } else { *op },
                Box::new(l.pnf(negate)),
                Box::new(r.pnf(negate)),
            ),
            Formula::Shift(op, x) => {
                Formula::shift(if negate { op.dual() } else { *op }, x.pnf(negate))
            }
            Formula::Temporal {
                op,
                bound,
                left,
                right,
            } => Formula::temporal(
                if negate { op.dual() } else { *op },
                *bound,
                left.pnf(negate),
                right.pnf(negate),
            ),
        }
    }

    /// Caps every bound at the path length `n`. Over paths of length `n`
    /// the result is equivalent to `self`.
    pub fn prune_bounds(&self, n: usize) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Not(x) => Formula::not(x.prune_bounds(n)),
            Formula::Bool(op, l, r) => {
                Formula::Bool(*op, Box::new(l.prune_bounds(n)), Box::new(r.prune_bounds(n)))
            }
            Formula::Shift(op, x) => Formula::shift(*op, x.prune_bounds(n)),
            Formula::Temporal {
                op,
                bound,
                left,
                right,
            } => Formula::temporal(
                *op,
                bound.map(|b| b.min(n)),
                left.prune_bounds(n),
                right.prune_bounds(n),
            ),
        }
    }

    /// All subformula occurrences in pre-order; index 0 is `self`.
    pub fn occurrences(&self) -> Vec<Occurrence<'_>> {
        let mut out = Vec::new();
        collect_occurrences(self, None, &mut out);
        out
    }
}

/// One node of a formula tree, identified by its pre-order index.
#[derive(Debug, Clone)]
pub struct Occurrence<'a> {
    pub index: usize,
    pub formula: &'a Formula,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

fn collect_occurrences<'a>(f: &'a Formula, parent: Option<usize>, out: &mut Vec<Occurrence<'a>>) {
    let index = out.len();
    out.push(Occurrence {
        index,
        formula: f,
        parent,
        children: Vec::new(),
    });
    for child in f.children() {
        let child_index = out.len();
        out[index].children.push(child_index);
        collect_occurrences(child, Some(index), out);
    }
}

fn display_atom(name: &str) -> &str {
    match name {
        TRUE_ATOM => "true",
        FALSE_ATOM => "false",
        other => other,
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(p) => f.write_str(display_atom(p)),
            Formula::Not(x) => write!(f, "(! {x})"),
            Formula::Bool(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Formula::Shift(op, x) => write!(f, "({} {x})", op.symbol()),
            Formula::Temporal {
                op,
                bound,
                left,
                right,
            } => match bound {
                Some(b) => write!(f, "({left} {}[{b}] {right})", op.symbol()),
                None => write!(f, "({left} {} {right})", op.symbol()),
            },
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::parse(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("unexpected {0}")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown operator '{0}'")]
    UnknownOperator(String),
    #[error("operator '{0}' does not take a bound")]
    BoundNotAllowed(String),
    #[error("bound '{0}' is not a decimal natural number")]
    InvalidBound(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bang,
    Amp,
    Pipe,
    LParen,
    RParen,
    Shift(ShiftOp),
    /// `F`, `G`, `O`, `H` with optional bound.
    Sugar(char, Option<usize>),
    Binary(TemporalOp, Option<usize>),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier '{name}'"),
            Tok::Bang => "'!'".into(),
            Tok::Amp => "'&'".into(),
            Tok::Pipe => "'|'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Shift(op) => format!("operator '{}'", op.symbol()),
            Tok::Sugar(c, _) => format!("operator '{c}'"),
            Tok::Binary(op, _) => format!("operator '{}'", op.symbol()),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    text: &'a str,
    chars: Peekable<CharIndices<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            text,
            chars: text.char_indices().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let next = self.chars.next();
        if let Some((_, c)) = next {
            if c == '\n' {
                self.line += 1;
                self.column = 1;
            } else {
                self.column += 1;
            }
        }
        next
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn error(&self, line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line, column, kind }
    }

    /// Parses an optional `[nat]` suffix after an operator keyword.
    fn bound_suffix(&mut self) -> Result<Option<(usize, usize, usize)>, ParseError> {
        self.skip_ws();
        if !matches!(self.chars.peek(), Some((_, '['))) {
            return Ok(None);
        }
        let (line, column) = (self.line, self.column);
        self.bump();
        let mut digits = String::new();
        loop {
            match self.bump() {
                Some((_, ']')) => break,
                Some((_, c)) => digits.push(c),
                None => return Err(self.error(self.line, self.column, ParseErrorKind::UnexpectedEnd)),
            }
        }
        let trimmed = digits.trim();
        if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.error(line, column, ParseErrorKind::InvalidBound(digits)));
        }
        let value = trimmed
            .parse::<usize>()
            .map_err(|_| self.error(line, column, ParseErrorKind::InvalidBound(digits.clone())))?;
        Ok(Some((value, line, column)))
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let (line, column) = (self.line, self.column);
            let Some(&(start, c)) = self.chars.peek() else {
                return Ok(out);
            };
            let tok = match c {
                '!' => {
                    self.bump();
                    Tok::Bang
                }
                '&' => {
                    self.bump();
                    Tok::Amp
                }
                '|' => {
                    self.bump();
                    Tok::Pipe
                }
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut end = start;
                    while let Some(&(i, c)) = self.chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            end = i + c.len_utf8();
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    let word = &self.text[start..end];
                    let bound = self.bound_suffix()?;
                    let keyword = match word {
                        "X" => Some(Tok::Shift(ShiftOp::NextStrong)),
                        "wX" => Some(Tok::Shift(ShiftOp::NextWeak)),
                        "Y" => Some(Tok::Shift(ShiftOp::YesterdayStrong)),
                        "wY" => Some(Tok::Shift(ShiftOp::YesterdayWeak)),
                        "F" | "G" | "O" | "H" => {
                            Some(Tok::Sugar(word.chars().next().unwrap(), bound.map(|b| b.0)))
                        }
                        "U" => Some(Tok::Binary(TemporalOp::Until, bound.map(|b| b.0))),
                        "R" => Some(Tok::Binary(TemporalOp::Release, bound.map(|b| b.0))),
                        "S" => Some(Tok::Binary(TemporalOp::Since, bound.map(|b| b.0))),
                        "T" => Some(Tok::Binary(TemporalOp::Trigger, bound.map(|b| b.0))),
                        _ => None,
                    };
                    match (keyword, bound) {
                        (Some(Tok::Shift(_)), Some((_, l, c))) => {
                            return Err(self.error(l, c, ParseErrorKind::BoundNotAllowed(word.into())))
                        }
                        (Some(tok), _) => tok,
                        (None, Some(_)) => {
                            return Err(self.error(
                                line,
                                column,
                                ParseErrorKind::UnknownOperator(word.into()),
                            ))
                        }
                        (None, None) => Tok::Ident(word.to_owned()),
                    }
                }
                other => {
                    return Err(self.error(line, column, ParseErrorKind::UnexpectedChar(other)));
                }
            };
            out.push(Spanned { tok, line, column });
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        let lexer = Lexer::new(text);
        let mut end_probe = Lexer::new(text);
        while end_probe.bump().is_some() {}
        let end = (end_probe.line, end_probe.column);
        Ok(Parser {
            toks: lexer.tokens()?,
            pos: 0,
            end,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.pos) {
            Some(s) => ParseError {
                line: s.line,
                column: s.column,
                kind: ParseErrorKind::UnexpectedToken(s.tok.describe()),
            },
            None => ParseError {
                line: self.end.0,
                column: self.end.1,
                kind: ParseErrorKind::UnexpectedEnd,
            },
        }
    }

    fn parse_formula(mut self) -> Result<Formula, ParseError> {
        let f = self.temporal()?;
        if self.pos < self.toks.len() {
            return Err(self.unexpected());
        }
        Ok(f)
    }

    fn temporal(&mut self) -> Result<Formula, ParseError> {
        let left = self.disjunction()?;
        if let Some(&Tok::Binary(op, bound)) = self.peek() {
            self.pos += 1;
            let right = self.temporal()?;
            return Ok(Formula::temporal(op, bound, left, right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let left = self.conjunction()?;
        if self.peek() == Some(&Tok::Pipe) {
            self.pos += 1;
            let right = self.disjunction()?;
            return Ok(Formula::or(left, right));
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let left = self.unary()?;
        if self.peek() == Some(&Tok::Amp) {
            self.pos += 1;
            let right = self.conjunction()?;
            return Ok(Formula::and(left, right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.unexpected());
        };
        match tok {
            Tok::Bang => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Tok::Shift(op) => {
                self.pos += 1;
                Ok(Formula::shift(op, self.unary()?))
            }
            Tok::Sugar(c, bound) => {
                self.pos += 1;
                let body = self.unary()?;
                let (op, constant) = match c {
                    'F' => (TemporalOp::Until, true),
                    'G' => (TemporalOp::Release, false),
                    'O' => (TemporalOp::Since, true),
                    _ => (TemporalOp::Trigger, false),
                };
                Ok(Formula::temporal(op, bound, Formula::constant(constant), body))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                Ok(match name.as_str() {
                    "true" => Formula::constant(true),
                    "false" => Formula::constant(false),
                    _ => Formula::Atom(name),
                })
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.temporal()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(name: &str) -> Formula {
        Formula::atom(name)
    }

    #[test]
    fn parses_until() {
        assert_eq!(Formula::parse("a U b").unwrap(), Formula::until(a("a"), a("b")));
    }

    #[test]
    fn parses_nested_until() {
        let f = Formula::parse("((a U b) U (c U d)) U e").unwrap();
        let expected = Formula::until(
            Formula::until(Formula::until(a("a"), a("b")), Formula::until(a("c"), a("d"))),
            a("e"),
        );
        assert_eq!(f, expected);
        assert_eq!(f.occurrences().len(), 9);
    }

    #[test]
    fn desugars_eventually() {
        assert_eq!(
            Formula::parse("F x").unwrap(),
            Formula::until(Formula::atom(TRUE_ATOM), a("x"))
        );
        assert_eq!(
            Formula::parse("H[2] x").unwrap(),
            Formula::temporal(TemporalOp::Trigger, Some(2), Formula::atom(FALSE_ATOM), a("x"))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        // & binds tighter than |, which binds tighter than temporal operators
        let f = Formula::parse("a & b | c U d S e").unwrap();
        let expected = Formula::until(
            Formula::or(Formula::and(a("a"), a("b")), a("c")),
            Formula::since(a("d"), a("e")),
        );
        assert_eq!(f, expected);
        let g = Formula::parse("X a U wY !b").unwrap();
        assert_eq!(
            g,
            Formula::until(
                Formula::shift(ShiftOp::NextStrong, a("a")),
                Formula::shift(ShiftOp::YesterdayWeak, Formula::not(a("b")))
            )
        );
    }

    #[test]
    fn bounded_operators() {
        let f = Formula::parse("a U[3] b").unwrap();
        assert_eq!(f, Formula::temporal(TemporalOp::Until, Some(3), a("a"), a("b")));
        assert_eq!(Formula::parse("a U [ 3 ] b").unwrap(), f);
    }

    #[test]
    fn prints_fully_parenthesized() {
        assert_eq!(Formula::until(a("a"), a("b")).to_string(), "(a U b)");
        assert_eq!(
            Formula::temporal(TemporalOp::Until, Some(3), a("a"), a("b")).to_string(),
            "(a U[3] b)"
        );
        assert_eq!(Formula::not(a("p")).to_string(), "(! p)");
        assert_eq!(Formula::parse("G true").unwrap().to_string(), "(false R true)");
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = Formula::parse("(").unwrap_err();
        assert_eq!((err.line, err.column), (1, 2));
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);

        let err = Formula::parse("a U\n  b )").unwrap_err();
        assert_eq!((err.line, err.column), (2, 5));

        let err = Formula::parse("a Q[3] b").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownOperator("Q".into()));
        assert_eq!(err.column, 3);

        let err = Formula::parse("a U[x] b").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::InvalidBound("x".into()));
        let err = Formula::parse("a U[-1] b").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::InvalidBound(_)));
        let err = Formula::parse("X[2] a").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::BoundNotAllowed(_)));
        let err = Formula::parse("a $ b").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('$'));
        assert!(Formula::parse("").is_err());
        assert!(Formula::parse("a b").is_err());
    }

    #[test]
    fn pnf_dualities() {
        let f = Formula::parse("!(a U b)").unwrap().to_pnf();
        assert_eq!(f, Formula::release(Formula::not(a("a")), Formula::not(a("b"))));
        assert_eq!(Formula::parse("!!a").unwrap().to_pnf(), a("a"));
        let g = Formula::parse("!(a U[3] b)").unwrap().to_pnf();
        assert_eq!(
            g,
            Formula::temporal(
                TemporalOp::Release,
                Some(3),
                Formula::not(a("a")),
                Formula::not(a("b"))
            )
        );
        let h = Formula::parse("!(wY a & X b)").unwrap().to_pnf();
        assert_eq!(
            h,
            Formula::or(
                Formula::shift(ShiftOp::YesterdayStrong, Formula::not(a("a"))),
                Formula::shift(ShiftOp::NextWeak, Formula::not(a("b")))
            )
        );
        assert!(h.is_pnf());
        assert!(!Formula::parse("!X a").unwrap().is_pnf());
    }

    #[test]
    fn prune_caps_bounds() {
        let f = Formula::parse("a U[100] b").unwrap();
        assert_eq!(f.prune_bounds(5), Formula::parse("a U[5] b").unwrap());
        let g = Formula::parse("a U[3] b").unwrap();
        assert_eq!(g.prune_bounds(5), g);
    }

    #[test]
    fn size_counts_bounds_in_unary() {
        assert_eq!(a("a").size(), 1);
        assert_eq!(Formula::parse("a U b").unwrap().size(), 3);
        assert_eq!(Formula::parse("a U[3] b").unwrap().size(), 6);
        assert_eq!(Formula::parse("a U[3] b").unwrap().node_count(), 3);
    }

    #[test]
    fn occurrences_are_preorder() {
        let f = Formula::parse("a U a").unwrap();
        let occ = f.occurrences();
        assert_eq!(occ.len(), 3);
        assert_eq!(occ[0].children, vec![1, 2]);
        assert_eq!(occ[1].parent, Some(0));
        assert_eq!(occ[1].formula, occ[2].formula);
        assert_ne!(occ[1].index, occ[2].index);
    }
}
