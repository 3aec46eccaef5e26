use std::fmt;

use smallvec::SmallVec;

use crate::polyring::ring::RingDescriptor;

pub type Exponent = u16;

/// Dense exponent vector; its length is the number of ring variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn set_exp(&mut self, i: usize, e: Exponent) {
        self.exps[i] = e;
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Sum of the exponents of the variables selected by `mask`.
    pub fn block_degree(&self, mask: &[bool]) -> u32 {
        self.exps
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|(&e, _)| e as u32)
            .sum()
    }

    /// Bit `i % 64` set iff variable `i` occurs.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&e| {
                    Exponent::try_from(e as u32 * n).expect("exponent overflow")
                })
                .collect(),
        }
    }

    /// Exponent vector re-indexed into a ring with `nvars` variables:
    /// entry `i` of `self` goes to `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut out = Self::one(nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            out.exps[map[i]] += e;
        }
        out
    }

    pub fn display<'a>(&'a self, ring: &'a RingDescriptor) -> impl fmt::Display + 'a {
        MonomialDisplay { mon: self, ring }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

struct MonomialDisplay<'a> {
    mon: &'a Monomial,
    ring: &'a RingDescriptor,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mon.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mon.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
