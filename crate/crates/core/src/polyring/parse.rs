//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//! Juxtaposition is rejected: `2x` and `x y` are errors.

use crate::error::{Error, Result};
use crate::polyring::poly::Polynomial;
use crate::polyring::rational::Rational;
use crate::polyring::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Num(s) | Tok::Ident(s) => s.clone(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Caret => "^".into(),
            Tok::Slash => "/".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(chars[start..i].iter().collect()), col));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    line: 1,
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Ring,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn fail<T>(&self, message: String) -> Result<T> {
        Err(Error::Parse {
            line: 1,
            column: self.col(),
            message,
        })
    }

    fn unexpected<T>(&self) -> Result<T> {
        match self.peek() {
            Some(t) => self.fail(format!("unexpected token `{}`", t.text())),
            None => self.fail("unexpected end of input".into()),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign = match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e: u32 = match n.parse() {
                        Ok(e) if e <= u16::MAX as u32 => e,
                        _ => return self.fail(format!("exponent `{n}` out of range")),
                    };
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return self.unexpected(),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut text = n;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) => {
                            self.pos += 1;
                            text = format!("{text}/{d}");
                        }
                        _ => return self.unexpected(),
                    }
                }
                match text.parse::<Rational>() {
                    Ok(v) => Ok(Polynomial::constant(self.ring, v)),
                    Err(_) => {
                        self.pos -= 1;
                        self.fail(format!("invalid rational literal `{text}`"))
                    }
                }
            }
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(self.ring, i))
                }
                None => self.fail(format!("unknown variable `{name}`")),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.unexpected(),
                }
            }
            _ => self.unexpected(),
        }
    }
}

impl Polynomial {
    /// Parses a polynomial over `ring`. Errors carry a 1-based column.
    pub fn parse(ring: &Ring, src: &str) -> Result<Polynomial> {
        let toks = lex(src)?;
        let mut p = Parser {
            toks,
            pos: 0,
            ring,
            end_col: src.chars().count() + 1,
        };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return p.unexpected();
        }
        Ok(e)
    }
}

/// Splits on top-level commas (commas inside parentheses are kept).
pub fn split_generators(src: &str) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((src[start..i].to_string(), start));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((src[start..].to_string(), start));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ring::RingDescriptor;

    #[test]
    fn parses_the_documented_example() {
        let r = RingDescriptor::with_xblock(["x1", "x2", "x3"]).unwrap();
        let p = Polynomial::parse(&r, "x1^2*x2 + 3/2*x3^3").unwrap();
        assert_eq!(p.to_string(), "x1^2*x2 + 3/2*x3^3");
        let q = Polynomial::parse(&r, "-(x1 - x2)*(x1 + x2)").unwrap();
        assert_eq!(q, Polynomial::parse(&r, "x2^2 - x1^2").unwrap());
    }

    #[test]
    fn reports_offending_token() {
        let r = RingDescriptor::with_xblock(["x", "y"]).unwrap();
        match Polynomial::parse(&r, "x +* y") {
            Err(Error::Parse { column, message, .. }) => {
                assert_eq!(column, 4);
                assert!(message.contains('*'), "{message}");
            }
            other => panic!("{other:?}"),
        }
        assert!(Polynomial::parse(&r, "2x").is_err());
        assert!(Polynomial::parse(&r, "x y").is_err());
        assert!(Polynomial::parse(&r, "z").is_err());
        assert!(Polynomial::parse(&r, "1/0").is_err());
        assert!(Polynomial::parse(&r, "x^").is_err());
    }

    #[test]
    fn splits_top_level_commas() {
        let parts: Vec<String> = split_generators("x*(y+1), y, z")
            .into_iter()
            .map(|(s, _)| s.trim().to_string())
            .collect();
        assert_eq!(parts, ["x*(y+1)", "y", "z"]);
    }
}
