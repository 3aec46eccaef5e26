use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::dimension::independent_set_dimension;
use crate::groebner::engine::{normal_form, reduced_gb, GbConfig};
use crate::polyring::poly::same_ring;
use crate::polyring::{BlockTag, MonomialOrder, Polynomial, Ring};

/// Ideal given by generators, with its reduced grevlex Gröbner basis cached
/// on first use.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped; the rest are made primitive (integer
    /// coefficients, content one, positive leading coefficient) and
    /// deduplicated.
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            let p = g.primitive();
            if !out.contains(&p) {
                out.push(p);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, [Polynomial::one(ring)]).expect("same ring")
    }

    /// Ideal generated by the given variables.
    pub fn of_variables(ring: &Ring, vars: &[usize]) -> Ideal {
        Ideal::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i))).expect("same ring")
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis under grevlex (cached).
    pub fn gb(&self, config: &GbConfig) -> Result<&[Polynomial]> {
        if let Some(b) = self.gb.get() {
            return Ok(b);
        }
        let b = reduced_gb(&self.gens, &MonomialOrder::Grevlex, config)?;
        Ok(self.gb.get_or_init(|| b))
    }

    pub fn gb_under(&self, order: &MonomialOrder, config: &GbConfig) -> Result<Vec<Polynomial>> {
        if *order == MonomialOrder::Grevlex {
            return Ok(self.gb(config)?.to_vec());
        }
        reduced_gb(&self.gens, order, config)
    }

    pub fn is_unit(&self, config: &GbConfig) -> Result<bool> {
        let b = self.gb(config)?;
        Ok(b.len() == 1 && b[0].is_constant())
    }

    pub fn contains(&self, p: &Polynomial, config: &GbConfig) -> Result<bool> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            return Ok(true);
        }
        let b = self.gb(config)?;
        Ok(normal_form(p, b, &MonomialOrder::Grevlex).is_zero())
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal, config: &GbConfig) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g, config)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by comparing reduced grevlex Gröbner bases.
    pub fn equals(&self, other: &Ideal, config: &GbConfig) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.gb(config)? == other.gb(config)?)
    }

    /// The extension of this ideal to a ring containing all its variables.
    pub fn embed(&self, target: &Ring) -> Result<Ideal> {
        Ideal::new(
            target,
            self.gens
                .iter()
                .map(|g| g.embed(target))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a * b);
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// `I^n` from all n-fold products of generators; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `I ∩ Q[vars not in block]`, returned in the restricted ring.
    pub fn eliminate(&self, block: &[usize], config: &GbConfig) -> Result<Ideal> {
        if let Some(&bad) = block.iter().find(|&&i| i >= self.ring.nvars()) {
            return Err(Error::InvalidArgument(format!("variable index {bad} out of range")));
        }
        let target = self.ring.restrict(block)?;
        if block.is_empty() {
            return Ideal::new(&target, self.gens.iter().map(|g| g.contract(&target)).collect::<Result<Vec<_>>>()?);
        }
        let order = MonomialOrder::elimination(block.to_vec());
        let gb = reduced_gb(&self.gens, &order, config)?;
        let kept = gb
            .into_iter()
            .filter(|g| block.iter().all(|&i| !g.involves(i)))
            .map(|g| g.contract(&target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&target, kept)
    }

    /// `I ∩ J` by eliminating `u` from `u·I + (1 − u)·J`.
    pub fn intersect(&self, other: &Ideal, config: &GbConfig) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let u_name = self.ring.fresh_name("u");
        let ext = self.ring.extend([(u_name, BlockTag::Aux)])?;
        let u_idx = ext.nvars() - 1;
        let u = Polynomial::var(&ext, u_idx);
        let one_minus_u = &Polynomial::one(&ext) - &u;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(&u * &g.embed(&ext)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_u * &g.embed(&ext)?);
        }
        let order = MonomialOrder::elimination(vec![u_idx]);
        let gb = reduced_gb(&gens, &order, config)?;
        let kept = gb
            .into_iter()
            .filter(|g| !g.involves(u_idx))
            .map(|g| g.contract(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }

    /// `I : (g)` as `(I ∩ (g)) / g`.
    pub fn quotient_by(&self, g: &Polynomial, config: &GbConfig) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::InvalidArgument("quotient by the zero polynomial".into()));
        }
        if self.contains(g, config)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, [g.clone()])?;
        let inter = self.intersect(&principal, config)?;
        let mut out = Vec::with_capacity(inter.gens.len());
        for h in &inter.gens {
            match h.exact_div(g)? {
                Some(q) => out.push(q),
                None => {
                    return Err(Error::Invariant(format!(
                        "intersection generator `{h}` is not divisible by `{g}`"
                    )))
                }
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// `I : J = ∩_{g ∈ gens(J)} (I : g)`. Generators of `J` lying in the
    /// ideal of the preceding ones are skipped.
    pub fn quotient(&self, other: &Ideal, config: &GbConfig) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if other.is_zero_ideal() {
            return Err(Error::InvalidArgument("quotient by the zero ideal".into()));
        }
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in &other.gens {
            if !kept.is_empty() && Ideal::new(&self.ring, kept.clone())?.contains(g, config)? {
                continue;
            }
            kept.push(g.clone());
        }
        let mut acc: Option<Ideal> = None;
        for g in &kept {
            let q = self.quotient_by(g, config)?;
            if q.is_unit(config)? {
                continue;
            }
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q, config)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// Krull dimension of `ring / I`; `-1` for the unit ideal.
    pub fn dimension(&self, config: &GbConfig) -> Result<i64> {
        let b = self.gb(config)?;
        let leads: Vec<_> = b.iter().map(|g| g.leading().unwrap().0.clone()).collect();
        Ok(independent_set_dimension(&leads, self.ring.nvars()))
    }

    /// Generators with integer coefficients of a reduced grevlex basis.
    pub fn normalized_basis(&self, config: &GbConfig) -> Result<Vec<Polynomial>> {
        Ok(self.gb(config)?.iter().map(Polynomial::primitive).collect())
    }
}
