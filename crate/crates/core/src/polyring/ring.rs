use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::order::MonomialOrder;

/// Role of a variable inside a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockTag {
    /// Matrix entries `x_ij` (and, in charts, the current matrix coordinates).
    X,
    /// Link indeterminates `t_ij`.
    T,
    /// Chart coordinates that are no longer matrix entries (`y_11`, `y_1j`, `y_i1`).
    Chart,
    /// Elimination helpers.
    Aux,
}

impl fmt::Display for BlockTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BlockTag::X => "xblock",
            BlockTag::T => "tblock",
            BlockTag::Chart => "chart",
            BlockTag::Aux => "aux",
        };
        f.write_str(s)
    }
}

/// Ordered variable names, each tagged with a block.
///
/// Variable `0` is the largest variable for every order. Extending a ring
/// appends variables; existing indices never move.
#[derive(Debug, Clone)]
pub struct RingDescriptor {
    names: Vec<String>,
    tags: Vec<BlockTag>,
    default_order: MonomialOrder,
}

pub type Ring = Arc<RingDescriptor>;

impl PartialEq for RingDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.tags == other.tags
    }
}

impl Eq for RingDescriptor {}

impl RingDescriptor {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, BlockTag)>) -> Result<Ring> {
        let (names, tags): (Vec<String>, Vec<BlockTag>) =
            vars.into_iter().map(|(n, t)| (n.into(), t)).unzip();
        Self::from_parts(names, tags, MonomialOrder::Grevlex)
    }

    /// Ring whose variables all live in the x block.
    pub fn with_xblock<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ring> {
        Self::new(names.into_iter().map(|n| (n, BlockTag::X)))
    }

    fn from_parts(names: Vec<String>, tags: Vec<BlockTag>, order: MonomialOrder) -> Result<Ring> {
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidVariable(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(RingDescriptor {
            names,
            tags,
            default_order: order,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn tag(&self, i: usize) -> BlockTag {
        self.tags[i]
    }

    pub fn tags(&self) -> &[BlockTag] {
        &self.tags
    }

    pub fn default_order(&self) -> &MonomialOrder {
        &self.default_order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names.iter().map(|n| self.var_index(n.as_ref())).collect()
    }

    /// Indices of all variables carrying `tag`.
    pub fn block(&self, tag: BlockTag) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.tags[i] == tag).collect()
    }

    pub fn block_mask(&self, tag: BlockTag) -> Vec<bool> {
        self.tags.iter().map(|&t| t == tag).collect()
    }

    /// New ring with `vars` appended after the existing variables.
    pub fn extend<S: Into<String>>(
        &self,
        vars: impl IntoIterator<Item = (S, BlockTag)>,
    ) -> Result<Ring> {
        let mut names = self.names.clone();
        let mut tags = self.tags.clone();
        for (n, t) in vars {
            names.push(n.into());
            tags.push(t);
        }
        Self::from_parts(names, tags, self.default_order.clone())
    }

    /// New ring without the variables in `drop` (relative order preserved).
    pub fn restrict(&self, drop: &[usize]) -> Result<Ring> {
        let keep: Vec<usize> = (0..self.nvars()).filter(|i| !drop.contains(i)).collect();
        Self::from_parts(
            keep.iter().map(|&i| self.names[i].clone()).collect(),
            keep.iter().map(|&i| self.tags[i]).collect(),
            self.default_order.clone(),
        )
    }

    /// A variable name not yet used in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..)
            .map(|k| format!("{base}{k}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(
            RingDescriptor::with_xblock(["x", "y", "x"]),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            RingDescriptor::with_xblock(["1x"]),
            Err(Error::InvalidVariable(_))
        ));
    }

    #[test]
    fn extension_keeps_existing_indices() {
        let r = RingDescriptor::with_xblock(["x11", "x12"]).unwrap();
        let s = r.extend([("t11", BlockTag::T)]).unwrap();
        assert_eq!(s.index_of("x12"), Some(1));
        assert_eq!(s.block(BlockTag::T), vec![2]);
        assert_eq!(s.block(BlockTag::X), vec![0, 1]);
        let back = s.restrict(&[2]).unwrap();
        assert_eq!(*back, *r);
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = RingDescriptor::with_xblock(["u", "u0"]).unwrap();
        assert_eq!(r.fresh_name("u"), "u1");
        assert_eq!(r.fresh_name("v"), "v");
    }
}
