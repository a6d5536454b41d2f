//! A DOT subset: `[strict] digraph|graph NAME? { stmt* }` with edge chains
//! `a -> b -> c` or `a -- b`, bare node statements, and attribute lists,
//! graph-level `key = value` statements and `node`/`edge`/`graph` defaults
//! that are all skipped. Subgraphs and ports are not supported.

use super::{AnyGraph, Builder};
use crate::error::{ParseError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Id(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Eq,
    Colon,
    Arrow,
    Dash,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Id(s) => format!("`{s}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Dash => "`--`".into(),
        }
    }
}

type Pos = (usize, usize);

fn is_id_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.'
}

fn lex(text: &str) -> std::result::Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize, n: usize| {
        for _ in 0..n {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = (line, col);
        let next = chars.get(i + 1).copied();
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col, 1);
        } else if c == '/' && next == Some('/') || c == '#' && col == 1 {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, &mut line, &mut col, 1);
            }
        } else if c == '/' && next == Some('*') {
            advance(&mut i, &mut line, &mut col, 2);
            loop {
                if i + 1 >= chars.len() {
                    return Err(ParseError::new(pos.0, pos.1, "unterminated comment"));
                }
                if chars[i] == '*' && chars[i + 1] == '/' {
                    advance(&mut i, &mut line, &mut col, 2);
                    break;
                }
                advance(&mut i, &mut line, &mut col, 1);
            }
        } else if c == '"' {
            advance(&mut i, &mut line, &mut col, 1);
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None => return Err(ParseError::new(pos.0, pos.1, "unterminated string")),
                    Some('"') => {
                        advance(&mut i, &mut line, &mut col, 1);
                        break;
                    }
                    Some('\\') if chars.get(i + 1) == Some(&'"') => {
                        s.push('"');
                        advance(&mut i, &mut line, &mut col, 2);
                    }
                    Some(&ch) => {
                        s.push(ch);
                        advance(&mut i, &mut line, &mut col, 1);
                    }
                }
            }
            out.push((Tok::Id(s), pos));
        } else if c == '-' && next == Some('>') {
            advance(&mut i, &mut line, &mut col, 2);
            out.push((Tok::Arrow, pos));
        } else if c == '-' && next == Some('-') {
            advance(&mut i, &mut line, &mut col, 2);
            out.push((Tok::Dash, pos));
        } else if is_id_char(c) || c == '-' {
            let mut s = String::new();
            s.push(c);
            advance(&mut i, &mut line, &mut col, 1);
            while i < chars.len() && is_id_char(chars[i]) {
                s.push(chars[i]);
                advance(&mut i, &mut line, &mut col, 1);
            }
            out.push((Tok::Id(s), pos));
        } else {
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ';' => Tok::Semi,
                ',' => Tok::Comma,
                '=' => Tok::Eq,
                ':' => Tok::Colon,
                _ => {
                    return Err(ParseError::new(
                        pos.0,
                        pos.1,
                        format!("unexpected character `{c}`"),
                    ))
                }
            };
            advance(&mut i, &mut line, &mut col, 1);
            out.push((tok, pos));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |&(_, p)| p)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.pos();
        ParseError::new(line, column, message)
    }

    fn found(&self) -> String {
        self.peek().map_or("end of input".into(), Tok::describe)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, tok: Tok) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {}, found {}",
                tok.describe(),
                self.found()
            )))
        }
    }

    fn keyword(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Tok::Id(s)) if s.eq_ignore_ascii_case(word))
    }

    fn id(&mut self, what: &str) -> std::result::Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Id(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}, found {}", self.found()))),
        }
    }

    /// Skips `[ ... ]` lists, possibly several in a row.
    fn skip_attributes(&mut self) -> std::result::Result<(), ParseError> {
        while self.peek() == Some(&Tok::LBracket) {
            let open = self.pos();
            self.at += 1;
            loop {
                match self.bump() {
                    Some(Tok::RBracket) => break,
                    Some(Tok::LBracket) => {
                        return Err(ParseError::new(
                            open.0,
                            open.1,
                            "nested `[` in attribute list",
                        ))
                    }
                    Some(_) => {}
                    None => {
                        return Err(ParseError::new(
                            open.0,
                            open.1,
                            "unterminated attribute list",
                        ))
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses the DOT subset; the header decides directedness.
pub fn parse_dot(text: &str) -> Result<AnyGraph> {
    let toks = lex(text)?;
    let end = text
        .lines()
        .enumerate()
        .last()
        .map_or((1, 1), |(i, l)| (i + 1, l.chars().count() + 1));
    let mut p = Parser { toks, at: 0, end };

    if p.keyword("strict") {
        p.at += 1;
    }
    let directed = if p.keyword("digraph") {
        true
    } else if p.keyword("graph") {
        false
    } else {
        return Err(p
            .error(format!(
                "expected `digraph` or `graph`, found {}",
                p.found()
            ))
            .into());
    };
    p.at += 1;
    if matches!(p.peek(), Some(Tok::Id(_))) {
        p.at += 1;
    }
    p.expect(Tok::LBrace)?;

    let mut b = Builder::default();
    loop {
        match p.peek() {
            Some(Tok::RBrace) => {
                p.at += 1;
                break;
            }
            Some(Tok::Semi) => {
                p.at += 1;
                continue;
            }
            None => return Err(p.error("expected `}`, found end of input").into()),
            _ => {}
        }
        if p.keyword("subgraph") || p.peek() == Some(&Tok::LBrace) {
            return Err(p.error("subgraphs are not supported").into());
        }
        if ["node", "edge", "graph"].iter().any(|k| p.keyword(k))
            && p.toks.get(p.at + 1).map(|(t, _)| t) == Some(&Tok::LBracket)
        {
            p.at += 1;
            p.skip_attributes()?;
            continue;
        }

        let first_pos = p.pos();
        let first = p.id("a node name")?;
        if p.peek() == Some(&Tok::Eq) {
            p.at += 1;
            p.id("an attribute value")?;
            continue;
        }
        if p.peek() == Some(&Tok::Colon) {
            return Err(p.error("node ports are not supported").into());
        }
        let mut prev = (first, first_pos);
        let mut chained = false;
        while let Some(op @ (Tok::Arrow | Tok::Dash)) = p.peek().cloned() {
            match (&op, directed) {
                (Tok::Arrow, false) => {
                    return Err(p.error("directed edge `->` in an undirected graph").into())
                }
                (Tok::Dash, true) => {
                    return Err(p.error("undirected edge `--` in a digraph").into())
                }
                _ => {}
            }
            p.at += 1;
            let next_pos = p.pos();
            let next = p.id("a node name")?;
            b.pair(&prev.0, &next, directed, prev.1)?;
            prev = (next, next_pos);
            chained = true;
        }
        if !chained {
            b.vertex(&prev.0);
        }
        p.skip_attributes()?;
        if p.peek() == Some(&Tok::Comma) {
            return Err(p.error("node lists are not supported").into());
        }
    }
    if p.peek().is_some() {
        return Err(p
            .error(format!("unexpected {} after the graph body", p.found()))
            .into());
    }
    b.finish(directed)
}
