//! Ideal text format.
//!
//! ```text
//! # comment
//! vars: x y z
//! x*y - z^2
//! y^3
//! ```
//!
//! One generator per line after the `vars:` header. Inline input is a
//! comma-separated generator list plus an explicit variable list.

use detlct::groebner::Ideal;
use detlct::polyring::parse::split_generators;
use detlct::polyring::{Polynomial, RingDescriptor};
use detlct::{Error, Result};

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn relocate(err: Error, line: usize, offset: usize) -> Error {
    match err {
        Error::Parse {
            column, message, ..
        } => Error::Parse {
            line,
            column: column + offset,
            message,
        },
        other => other,
    }
}

/// Parses the file format: a `vars:` header, then one generator per line.
pub fn parse_ideal_file(text: &str) -> Result<Ideal> {
    let mut ring = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        match &ring {
            None => {
                let rest = body.trim_start().strip_prefix("vars:").ok_or_else(|| Error::Parse {
                    line: line_no,
                    column: body.len() - body.trim_start().len() + 1,
                    message: "expected a `vars:` header".into(),
                })?;
                ring = Some(RingDescriptor::with_xblock(rest.split_whitespace())?);
            }
            Some(r) => {
                let p = Polynomial::parse(r, body).map_err(|e| relocate(e, line_no, 0))?;
                gens.push(p);
            }
        }
    }
    let ring = ring.ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "missing `vars:` header".into(),
    })?;
    Ideal::new(&ring, gens)
}

/// Parses `"g1, g2, …"` over the given variables.
pub fn parse_ideal_inline(gens: &str, vars: &[String]) -> Result<Ideal> {
    let ring = RingDescriptor::with_xblock(vars.iter().cloned())?;
    parse_generators(&ring, gens)
}

/// Parses a comma-separated generator list over an existing ring.
pub fn parse_generators(ring: &detlct::polyring::Ring, gens: &str) -> Result<Ideal> {
    let mut polys = Vec::new();
    for (part, offset) in split_generators(gens) {
        if part.trim().is_empty() {
            continue;
        }
        let offset = gens[..offset].chars().count();
        polys.push(Polynomial::parse(ring, &part).map_err(|e| relocate(e, 1, offset))?);
    }
    Ideal::new(ring, polys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_format() {
        let i = parse_ideal_file("# a comment\nvars: x y\nx*y\n").unwrap();
        assert_eq!(i.to_string(), "(x*y)");
        assert_eq!(i.ring().names(), ["x", "y"]);
        let err = parse_ideal_file("vars: x y\nx\nx +* y").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 4, .. }), "{err}");
        assert!(parse_ideal_file("x*y").is_err());
        assert!(matches!(parse_ideal_file("vars: x x\nx").unwrap_err(), Error::DuplicateVariable(_)));
    }

    #[test]
    fn inline_format() {
        let vars: Vec<String> = ["x1", "x2", "x3"].map(String::from).to_vec();
        let i = parse_ideal_inline("x1*x2, x2*x3, x3*x1", &vars).unwrap();
        assert_eq!(i.generators().len(), 3);
        let err = parse_ideal_inline("x1, x1 +* x2", &vars).unwrap_err();
        assert!(matches!(err, Error::Parse { column: 9, .. }), "{err}");
    }
}
