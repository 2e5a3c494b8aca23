//! A small syntax check for the DOT subset this crate emits.
//!
//! Accepted: `graph|digraph ["name"|id] { stmt; ... }` where each statement is
//! an attribute assignment (`a=b`), a node (`id [attrs]`) or an edge chain
//! (`id -- id ...` for graphs, `->` for digraphs), optionally with attributes.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Id(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Eq,
    Edge(&'static str),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '{' | '}' | '[' | ']' | ';' | ',' | '=' => {
                chars.next();
                toks.push(match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ';' => Tok::Semi,
                    ',' => Tok::Comma,
                    _ => Tok::Eq,
                });
            }
            '"' => {
                chars.next();
                let mut s = String::new();
                loop {
                    match chars.next() {
                        None => return Err(bad("unterminated string")),
                        Some('\\') => {
                            chars.next();
                        }
                        Some('"') => break,
                        Some(ch) => s.push(ch),
                    }
                }
                toks.push(Tok::Id(s));
            }
            '-' => {
                chars.next();
                match chars.peek() {
                    Some('-') => {
                        chars.next();
                        toks.push(Tok::Edge("--"));
                    }
                    Some('>') => {
                        chars.next();
                        toks.push(Tok::Edge("->"));
                    }
                    _ => {
                        let mut s = String::from("-");
                        while let Some(&d) = chars.peek() {
                            if d.is_ascii_digit() || d == '.' {
                                s.push(d);
                                chars.next();
                            } else {
                                break;
                            }
                        }
                        if s.len() == 1 {
                            return Err(bad("stray '-'"));
                        }
                        toks.push(Tok::Id(s));
                    }
                }
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' || d == '.' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Id(s));
            }
            other => return Err(bad(&format!("unexpected character {other:?}"))),
        }
    }
    Ok(toks)
}

fn bad(msg: &str) -> Error {
    Error::Parse(format!("dot: {msg}"))
}

/// Checks `src` against the accepted subset.
pub fn check(src: &str) -> Result<()> {
    let toks = lex(src)?;
    let mut it = toks.iter().peekable();
    let edge = match it.next() {
        Some(Tok::Id(k)) if k == "graph" => "--",
        Some(Tok::Id(k)) if k == "digraph" => "->",
        _ => return Err(bad("expected 'graph' or 'digraph'")),
    };
    if let Some(Tok::Id(_)) = it.peek() {
        it.next();
    }
    if it.next() != Some(&Tok::LBrace) {
        return Err(bad("expected '{'"));
    }
    loop {
        match it.next() {
            Some(Tok::RBrace) => break,
            Some(Tok::Id(_)) => {}
            Some(t) => return Err(bad(&format!("unexpected {t:?} at statement start"))),
            None => return Err(bad("missing '}'")),
        }
        match it.peek() {
            Some(Tok::Eq) => {
                it.next();
                match it.next() {
                    Some(Tok::Id(_)) => {}
                    _ => return Err(bad("expected value after '='")),
                }
            }
            _ => {
                while let Some(Tok::Edge(op)) = it.peek() {
                    if *op != edge {
                        return Err(bad(&format!("edge '{op}' in a {edge} graph")));
                    }
                    it.next();
                    match it.next() {
                        Some(Tok::Id(_)) => {}
                        _ => return Err(bad("expected node after edge operator")),
                    }
                }
                if let Some(Tok::LBracket) = it.peek() {
                    it.next();
                    attr_list(&mut it)?;
                }
            }
        }
        if it.next() != Some(&Tok::Semi) {
            return Err(bad("expected ';'"));
        }
    }
    if it.next().is_some() {
        return Err(bad("trailing input after '}'"));
    }
    Ok(())
}

fn attr_list<'a, I: Iterator<Item = &'a Tok>>(it: &mut std::iter::Peekable<I>) -> Result<()> {
    loop {
        match it.next() {
            Some(Tok::RBracket) => return Ok(()),
            Some(Tok::Id(_)) => {}
            _ => return Err(bad("expected attribute name")),
        }
        if it.next() != Some(&Tok::Eq) {
            return Err(bad("expected '=' in attribute"));
        }
        match it.next() {
            Some(Tok::Id(_)) => {}
            _ => return Err(bad("expected attribute value")),
        }
        match it.peek() {
            Some(Tok::Comma) => {
                it.next();
            }
            Some(Tok::RBracket) => {}
            _ => return Err(bad("expected ',' or ']'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_emitted_shapes() {
        let src = "graph \"-Sigma(2,5,9)\" {\n  rankdir=BT;\n  n0_m1 [label=\"-2\", shape=doublecircle];\n  n0_m1 -- n0_0 -- infinity;\n}\n";
        check(src).unwrap();
        check("digraph { a -> b; }").unwrap();
    }

    #[test]
    fn rejects_broken() {
        assert!(check("graph { a -- b }").is_err());
        assert!(check("graph { a -> b; }").is_err());
        assert!(check("graph { a [label=\"x\"; }").is_err());
        assert!(check("graph { a; ").is_err());
        assert!(check("tree { }").is_err());
        assert!(check("graph { a; } x").is_err());
    }
}
