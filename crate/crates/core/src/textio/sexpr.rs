use std::fmt;

use thiserror::Error;

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected end of input")]
    UnexpectedEof,
    #[error("unexpected `)`")]
    UnexpectedClose,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown head symbol `{0}`")]
    UnknownHead(String),
    #[error("`{0}` is not allowed here")]
    NotAllowed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{pos}: {kind}")]
pub struct ParseError {
    pub pos: Pos,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError { pos, kind }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SExpr {
    Atom(String, Pos),
    List(Vec<SExpr>, Pos),
}

impl SExpr {
    pub fn pos(&self) -> Pos {
        match self {
            SExpr::Atom(_, p) | SExpr::List(_, p) => *p,
        }
    }

    pub fn atom(&self) -> Option<&str> {
        match self {
            SExpr::Atom(a, _) => Some(a),
            SExpr::List(..) => None,
        }
    }

    /// The head atom and the arguments of a list.
    pub fn call(&self) -> Option<(&str, &[SExpr])> {
        match self {
            SExpr::List(items, _) => match items.split_first() {
                Some((SExpr::Atom(h, _), rest)) => Some((h, rest)),
                _ => None,
            },
            SExpr::Atom(..) => None,
        }
    }
}

/// Reads every top-level expression. `;` starts a comment running to the end of the line.
pub fn read_all(text: &str) -> Result<Vec<SExpr>, ParseError> {
    let mut r = Reader { chars: text.chars().collect(), i: 0, line: 1, col: 1 };
    let mut out = Vec::new();
    loop {
        r.skip_ws();
        if r.peek().is_none() {
            return Ok(out);
        }
        out.push(r.expr()?);
    }
}

/// Reads exactly one expression.
pub fn read_one(text: &str) -> Result<SExpr, ParseError> {
    let mut all = read_all(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(ParseError::new(Pos { line: 1, col: 1 }, ParseErrorKind::UnexpectedEof)),
        _ => Err(ParseError::new(all[1].pos(), ParseErrorKind::Expected("a single expression"))),
    }
}

struct Reader {
    chars: Vec<char>,
    i: usize,
    line: usize,
    col: usize,
}

impl Reader {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.col }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn expr(&mut self) -> Result<SExpr, ParseError> {
        self.skip_ws();
        let start = self.pos();
        match self.peek() {
            None => Err(ParseError::new(start, ParseErrorKind::UnexpectedEof)),
            Some(')') => Err(ParseError::new(start, ParseErrorKind::UnexpectedClose)),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    match self.peek() {
                        None => return Err(ParseError::new(self.pos(), ParseErrorKind::UnexpectedEof)),
                        Some(')') => {
                            self.bump();
                            return Ok(SExpr::List(items, start));
                        }
                        Some(_) => items.push(self.expr()?),
                    }
                }
            }
            Some(_) => {
                let mut s = String::new();
                while let Some(c) = self.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    s.push(c);
                    self.bump();
                }
                Ok(SExpr::Atom(s, start))
            }
        }
    }
}
