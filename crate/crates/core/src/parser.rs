//! Text format for finite Lie ring presentations `< x, y | r1, r2 = r3 >`.
//!
//! Relators are sums of integer multiples of left-normed brackets. A flat
//! bracket list `[a, b, c]` is expanded to `[[a, b], c]` while parsing, and an
//! equation `A = B` is stored as the relator `A - B`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::int::Int;

/// A relator (or any Lie ring element) over the source generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExprTree {
    /// Index into [`FinitePresentation::generators`].
    Generator(usize),
    /// Nonzero integer multiple of a subexpression.
    Multiple(Int, Box<ExprTree>),
    Sum(Vec<ExprTree>),
    Bracket(Box<ExprTree>, Box<ExprTree>),
}

impl ExprTree {
    pub fn bracket(left: ExprTree, right: ExprTree) -> Self {
        ExprTree::Bracket(Box::new(left), Box::new(right))
    }

    pub fn multiple(coefficient: impl Into<Int>, child: ExprTree) -> Self {
        ExprTree::Multiple(coefficient.into(), Box::new(child))
    }

    /// Left-normed bracket `[e1, e2, ..., ek]`.
    pub fn left_normed(items: Vec<ExprTree>) -> Self {
        let mut iter = items.into_iter();
        let first = iter.next().expect("left-normed bracket needs an entry");
        iter.fold(first, ExprTree::bracket)
    }

    fn negated(self) -> Self {
        match self {
            ExprTree::Multiple(c, child) => ExprTree::Multiple(-c, child),
            other => ExprTree::Multiple(-Int::one(), Box::new(other)),
        }
    }

    /// Largest generator index referenced, if any.
    pub fn max_generator(&self) -> Option<usize> {
        match self {
            ExprTree::Generator(i) => Some(*i),
            ExprTree::Multiple(_, c) => c.max_generator(),
            ExprTree::Sum(cs) => cs.iter().filter_map(ExprTree::max_generator).max(),
            ExprTree::Bracket(l, r) => l.max_generator().max(r.max_generator()),
        }
    }

    /// Formats the tree using `names` for generator references.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayExpr { expr: self, names }
    }
}

/// Result of [`homogeneous_weight`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// Every additive term is a bracket of this many generators.
    Weight(usize),
    Mixed,
}

/// Weight of a relator when all of its additive terms have the same number of
/// generator occurrences.
pub fn homogeneous_weight(expr: &ExprTree) -> Homogeneity {
    fn weight(e: &ExprTree) -> Option<usize> {
        match e {
            ExprTree::Generator(_) => Some(1),
            ExprTree::Multiple(_, c) => weight(c),
            ExprTree::Sum(cs) => {
                let mut ws = cs.iter().map(weight);
                let first = ws.next()??;
                ws.all(|w| w == Some(first)).then_some(first)
            }
            ExprTree::Bracket(l, r) => Some(weight(l)? + weight(r)?),
        }
    }
    weight(expr).map_or(Homogeneity::Mixed, Homogeneity::Weight)
}

/// The parsed `<X | R>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePresentation {
    pub generators: Vec<String>,
    pub relators: Vec<ExprTree>,
}

impl FinitePresentation {
    pub fn new(generators: Vec<String>, relators: Vec<ExprTree>) -> Result<Self, ParseError> {
        if generators.is_empty() {
            return Err(ParseError::new(1, 1, ParseErrorKind::EmptyGeneratorList));
        }
        for (k, g) in generators.iter().enumerate() {
            if g.is_empty() || generators[..k].contains(g) {
                return Err(ParseError::new(1, 1, ParseErrorKind::DuplicateGenerator(g.clone())));
            }
        }
        if let Some(max) = relators.iter().filter_map(ExprTree::max_generator).max() {
            if max >= generators.len() {
                return Err(ParseError::new(1, 1, ParseErrorKind::UndeclaredGenerator(format!("#{}", max + 1))));
            }
        }
        Ok(FinitePresentation { generators, relators })
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }
}

impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generators.join(", "))?;
        for (k, r) in self.relators.iter().enumerate() {
            let sep = if k == 0 { " " } else { ",\n  " };
            write!(f, "{sep}{}", r.display(&self.generators))?;
        }
        write!(f, " >")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Expected { expected: &'static str, found: String },
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("empty generator list")]
    EmptyGeneratorList,
    #[error("zero coefficient")]
    ZeroCoefficient,
    #[error("a bracket needs at least two entries")]
    ShortBracket,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Integer(Int),
    Symbol(char),
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Integer(n) => write!(f, "`{n}`"),
            Token::Symbol(c) => write!(f, "`{c}`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c.is_whitespace() {
            chars.next();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            continue;
        }
        let token = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            Token::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            Token::Integer(s.parse().expect("digits"))
        } else if "<>|,[]()+-*=".contains(c) {
            chars.next();
            column += 1;
            Token::Symbol(c)
        } else {
            return Err(ParseError::new(l, col, ParseErrorKind::UnexpectedChar(c)));
        };
        out.push(Spanned { token, line: l, column: col });
    }
    out.push(Spanned { token: Token::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Spanned>,
    pos: usize,
    generators: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].token
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        let t = &self.tokens[self.pos];
        ParseError::new(t.line, t.column, kind)
    }

    fn expected(&self, expected: &'static str) -> ParseError {
        self.error(ParseErrorKind::Expected { expected, found: self.peek().to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Token::Symbol(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.expected(what))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Token::Ident(s) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.expected("generator name")),
        }
    }

    fn relator(&mut self) -> Result<ExprTree, ParseError> {
        let lhs = self.expr()?;
        if self.eat('=') {
            let rhs = self.expr()?;
            let mut terms = match lhs {
                ExprTree::Sum(ts) => ts,
                other => vec![other],
            };
            terms.push(rhs.negated());
            Ok(ExprTree::Sum(terms))
        } else {
            Ok(lhs)
        }
    }

    fn expr(&mut self) -> Result<ExprTree, ParseError> {
        let mut terms = Vec::new();
        let negate_first = self.eat('-');
        let first = self.term()?;
        terms.push(if negate_first { first.negated() } else { first });
        loop {
            if self.eat('+') {
                terms.push(self.term()?);
            } else if self.eat('-') {
                terms.push(self.term()?.negated());
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { ExprTree::Sum(terms) })
    }

    fn term(&mut self) -> Result<ExprTree, ParseError> {
        if let Token::Integer(n) = self.peek().clone() {
            if n.is_zero() {
                return Err(self.error(ParseErrorKind::ZeroCoefficient));
            }
            self.pos += 1;
            self.expect('*', "`*` after integer coefficient")?;
            let atom = self.atom()?;
            return Ok(ExprTree::Multiple(n, Box::new(atom)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<ExprTree, ParseError> {
        match self.peek().clone() {
            Token::Ident(name) => {
                let idx = self
                    .generators
                    .iter()
                    .position(|g| *g == name)
                    .ok_or_else(|| self.error(ParseErrorKind::UndeclaredGenerator(name)))?;
                self.pos += 1;
                Ok(ExprTree::Generator(idx))
            }
            Token::Symbol('[') => {
                let open = self.pos;
                self.pos += 1;
                let mut items = vec![self.expr()?];
                while self.eat(',') {
                    items.push(self.expr()?);
                }
                self.expect(']', "`,` or `]`")?;
                if items.len() < 2 {
                    let t = &self.tokens[open];
                    return Err(ParseError::new(t.line, t.column, ParseErrorKind::ShortBracket));
                }
                Ok(ExprTree::left_normed(items))
            }
            Token::Symbol('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')', "`)`")?;
                Ok(e)
            }
            _ => Err(self.expected("generator, `[` or `(`")),
        }
    }
}

/// Parses `< gens | relators >`.
pub fn parse_presentation(text: &str) -> Result<FinitePresentation, ParseError> {
    let tokens = tokenize(text)?;
    let mut header = Parser { tokens, pos: 0, generators: &[] };
    header.expect('<', "`<`")?;
    let mut generators: Vec<String> = Vec::new();
    if *header.peek() == Token::Symbol('|') {
        return Err(header.error(ParseErrorKind::EmptyGeneratorList));
    }
    loop {
        let at = header.pos;
        let name = header.ident()?;
        if generators.contains(&name) {
            let t = &header.tokens[at];
            return Err(ParseError::new(t.line, t.column, ParseErrorKind::DuplicateGenerator(name)));
        }
        generators.push(name);
        if !header.eat(',') {
            break;
        }
    }
    header.expect('|', "`,` or `|`")?;
    let mut parser = Parser { tokens: header.tokens, pos: header.pos, generators: &generators };
    let mut relators = Vec::new();
    if !parser.eat('>') {
        loop {
            relators.push(parser.relator()?);
            if parser.eat('>') {
                break;
            }
            parser.expect(',', "`,` or `>`")?;
        }
    }
    if *parser.peek() != Token::End {
        return Err(parser.expected("end of input"));
    }
    Ok(FinitePresentation { generators, relators })
}

/// Parses a single Lie ring element over the generators of `presentation`.
pub fn parse_expression(text: &str, presentation: &FinitePresentation) -> Result<ExprTree, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, generators: &presentation.generators };
    let e = parser.relator()?;
    if *parser.peek() != Token::End {
        return Err(parser.expected("end of input"));
    }
    Ok(e)
}

struct DisplayExpr<'a> {
    expr: &'a ExprTree,
    names: &'a [String],
}

impl DisplayExpr<'_> {
    fn sub<'b>(&'b self, expr: &'b ExprTree) -> DisplayExpr<'b> {
        DisplayExpr { expr, names: self.names }
    }

    // Term position inside a sum: sums need parentheses.
    fn atom(&self, f: &mut fmt::Formatter<'_>, e: &ExprTree) -> fmt::Result {
        match e {
            ExprTree::Sum(_) | ExprTree::Multiple(..) => write!(f, "({})", self.sub(e)),
            _ => write!(f, "{}", self.sub(e)),
        }
    }

    fn multiple(&self, f: &mut fmt::Formatter<'_>, c: &Int, child: &ExprTree, leading: bool) -> fmt::Result {
        if c.is_negative() {
            f.write_str(if leading { "-" } else { " - " })?;
            let abs = c.abs();
            if !abs.is_one() || matches!(child, ExprTree::Multiple(..)) {
                write!(f, "{abs}*")?;
            }
        } else {
            if !leading {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*")?;
        }
        self.atom(f, child)
    }
}

impl fmt::Display for DisplayExpr<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.expr {
            ExprTree::Generator(i) => match self.names.get(*i) {
                Some(n) => f.write_str(n),
                None => write!(f, "#{}", i + 1),
            },
            ExprTree::Multiple(c, child) => self.multiple(f, c, child, true),
            ExprTree::Sum(terms) => {
                for (k, t) in terms.iter().enumerate() {
                    match t {
                        ExprTree::Multiple(c, child) => self.multiple(f, c, child, k == 0)?,
                        ExprTree::Sum(_) => {
                            if k > 0 {
                                f.write_str(" + ")?;
                            }
                            write!(f, "({})", self.sub(t))?;
                        }
                        _ => {
                            if k > 0 {
                                f.write_str(" + ")?;
                            }
                            write!(f, "{}", self.sub(t))?;
                        }
                    }
                }
                Ok(())
            }
            ExprTree::Bracket(..) => {
                // Print the left spine flat: [[a, b], c] as [a, b, c].
                let mut spine = Vec::new();
                let mut cur = self.expr;
                while let ExprTree::Bracket(l, r) = cur {
                    spine.push(&**r);
                    cur = l;
                }
                spine.push(cur);
                spine.reverse();
                f.write_str("[")?;
                for (k, e) in spine.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}", self.sub(e))?;
                }
                f.write_str("]")
            }
        }
    }
}
