use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::monomial::Monomial;
use crate::polyring::order::MonomialOrder;
use crate::polyring::rational::Rational;
use crate::polyring::ring::{BlockTag, Ring};

/// Sparse polynomial with rational coefficients.
///
/// Terms are kept sorted in decreasing order under the ring's default
/// monomial order and never carry a zero coefficient, so two polynomials
/// over the same ring are equal iff their term vectors are.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    a.check_ring(b)?;
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::ONE)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), Rational::ONE)
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    pub fn term(ring: &Ring, mon: Monomial, c: Rational) -> Self {
        assert_eq!(mon.nvars(), ring.nvars(), "monomial arity");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((mon, c));
        }
        p
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity");
            let e = acc.entry(m).or_insert(Rational::ZERO);
            *e += &c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = ring.default_order();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Leading term under the ring's default order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_under(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Smallest block degree over all terms; `None` for the zero polynomial.
    pub fn block_degree_min(&self, mask: &[bool]) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.block_degree(mask)).min()
    }

    pub fn block_degree_max(&self, mask: &[bool]) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.block_degree(mask)).max()
    }

    /// Smallest x-block degree over all terms.
    pub fn xdegree_min(&self) -> Option<u32> {
        self.block_degree_min(&self.ring.block_mask(BlockTag::X))
    }

    /// Whether variable `i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mon: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        // multiplication by a monomial preserves the order of terms
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.mul(mon), d * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Self::one(&self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Scaled so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(&c.denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            num = num.gcd(&v);
        }
        let mut factor = Rational::from_bigints(den, num.abs());
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, ArithOp::Add)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, ArithOp::Sub)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        poly_arith(self, other, ArithOp::Mul)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let ord = self.ring.default_order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let fix = |c: &Rational| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), fix(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(Rational::ZERO);
                *e += &(ca * cb);
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = self.ring.default_order();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Ring homomorphism into `target`.
    ///
    /// `images[i]` is the image of variable `i`. Every image must live in
    /// `target`.
    pub fn map_into(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidArgument(format!(
                "expected {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|p| !same_ring(p.ring(), target)) {
            let _ = bad;
            return Err(Error::RingMismatch);
        }
        let mut cache: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = cache
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e as u32))
                    .clone();
                t = &t * &pw;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitutes the named variables; the others are kept and must exist
    /// (by name) in `target`.
    pub fn substitute(&self, target: &Ring, assignment: &[(&str, Polynomial)]) -> Result<Polynomial> {
        for (name, _) in assignment {
            self.ring.var_index(name)?;
        }
        let images = (0..self.ring.nvars())
            .map(|i| {
                let name = self.ring.name(i);
                match assignment.iter().find(|(n, _)| *n == name) {
                    Some((_, img)) => {
                        if same_ring(img.ring(), target) {
                            Ok(img.clone())
                        } else {
                            Err(Error::RingMismatch)
                        }
                    }
                    None => Polynomial::var_named(target, name),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        self.map_into(target, &images)
    }

    /// Evaluates the assigned variables at rationals (same ring).
    pub fn evaluate(&self, assignment: &[(&str, Rational)]) -> Result<Polynomial> {
        let ring = self.ring.clone();
        let subs: Vec<(&str, Polynomial)> = assignment
            .iter()
            .map(|(n, v)| (*n, Polynomial::constant(&ring, v.clone())))
            .collect();
        self.substitute(&ring, &subs)
    }

    /// Same polynomial in a ring that contains every variable of this one
    /// (matched by name).
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let map = self
            .ring
            .names()
            .iter()
            .map(|n| target.var_index(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|(m, c)| (m.remap(target.nvars(), &map), c.clone())),
        ))
    }

    /// Same polynomial in a smaller ring; fails if a dropped variable occurs.
    pub fn contract(&self, target: &Ring) -> Result<Polynomial> {
        let map: Vec<Option<usize>> = self
            .ring
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut out = Monomial::one(target.nvars());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => out.set_exp(j, e),
                    None => {
                        return Err(Error::UnknownVariable(self.ring.name(i).to_string()))
                    }
                }
            }
            terms.push((out, c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Quotient and remainder of division by a single polynomial, under the
    /// ring's default order.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_ring(divisor)?;
        let (lm, lc) = divisor.leading().ok_or(Error::DivisionByZero)?;
        let mut quot = Vec::new();
        let mut rem = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            match m.div(lm) {
                Some(q) => {
                    let coef = &c / lc;
                    p = &p - &divisor.mul_monomial(&q, &coef);
                    quot.push((q, coef));
                }
                None => {
                    rem.push(p.terms.remove(0));
                }
            }
        }
        Ok((
            Polynomial::from_terms(&self.ring, quot),
            Polynomial::from_terms(&self.ring, rem),
        ))
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.ring))?;
            } else {
                write!(f, "{abs}*{}", m.display(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.product(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::ONE)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ring::RingDescriptor;
    use proptest::prelude::*;

    fn ring() -> Ring {
        RingDescriptor::with_xblock(["x", "y", "z"]).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring();
        assert_eq!(&p(&r, "x+y") + &p(&r, "x-y"), p(&r, "2*x"));
        assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2-y^2"));
        let zero = &p(&r, "x") * &Polynomial::zero(&r);
        assert!(zero.is_zero());
        assert!(zero.terms().is_empty());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring();
        let s = RingDescriptor::with_xblock(["a"]).unwrap();
        assert!(matches!(
            poly_arith(&p(&r, "x"), &p(&s, "a"), ArithOp::Add),
            Err(Error::RingMismatch)
        ));
    }

    #[test]
    fn substitution() {
        let r = ring();
        let q = p(&r, "x^2 - y");
        let v = q
            .evaluate(&[("x", Rational::from(3)), ("y", Rational::from(9))])
            .unwrap();
        assert!(v.is_zero());
        assert_eq!(q.substitute(&r, &[]).unwrap(), q);
        assert!(matches!(
            q.evaluate(&[("w", Rational::ONE)]),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn division_and_primitive() {
        let r = ring();
        let a = p(&r, "x^2*y - y^3");
        let (q, rem) = a.div_rem(&p(&r, "x - y")).unwrap();
        assert!(rem.is_zero());
        assert_eq!(q, p(&r, "x*y + y^2"));
        assert_eq!(p(&r, "-2/3*x + 4/9*y").primitive(), p(&r, "3*x - 2*y"));
        assert!(a.exact_div(&p(&r, "x")).unwrap().is_none());
    }

    #[test]
    fn embed_and_contract() {
        let r = ring();
        let s = r.extend([("t", BlockTag::T)]).unwrap();
        let a = p(&r, "x*y + z");
        let b = a.embed(&s).unwrap();
        assert_eq!(b.to_string(), "x*y + z");
        assert_eq!(b.contract(&r).unwrap(), a);
        assert!(p(&s, "t").contract(&r).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Vec<([u16; 3], i64)>> {
        proptest::collection::vec(([0u16..3, 0u16..3, 0u16..3], -5i64..5), 0..5)
    }

    fn build(r: &Ring, t: &[([u16; 3], i64)]) -> Polynomial {
        Polynomial::from_terms(
            r,
            t.iter()
                .map(|(e, c)| (Monomial::from_exponents(e), Rational::from(*c))),
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let r = ring();
            let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn xdegree_min_is_a_valuation(a in arb_poly(), b in arb_poly()) {
            let r = RingDescriptor::new([("x", BlockTag::X), ("y", BlockTag::X), ("t", BlockTag::T)]).unwrap();
            let (a, b) = (build(&r, &a), build(&r, &b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let ab = &a * &b;
            prop_assert_eq!(ab.xdegree_min().unwrap(), a.xdegree_min().unwrap() + b.xdegree_min().unwrap());
        }

        #[test]
        fn substitution_is_a_homomorphism(a in arb_poly(), b in arb_poly(), img in arb_poly()) {
            let r = ring();
            let (a, b, img) = (build(&r, &a), build(&r, &b), build(&r, &img));
            let s = |q: &Polynomial| q.substitute(&r, &[("x", img.clone())]).unwrap();
            prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
            prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        }
    }
}
