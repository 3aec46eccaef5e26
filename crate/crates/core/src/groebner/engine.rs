//! Buchberger's algorithm with the Gebauer–Möller pair criteria and sugar
//! pair selection.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Rational, Ring};

type Term = (Monomial, Rational);

/// Counters reported with every computation (and with aborts).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub zero_reductions: usize,
    pub pairs_pruned: usize,
    pub basis_size: usize,
    pub pairs_remaining: usize,
}

impl fmt::Display for GbStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} pairs processed, {} reduced to zero, {} pruned, basis size {}, {} pairs pending",
            self.pairs_processed,
            self.zero_reductions,
            self.pairs_pruned,
            self.basis_size,
            self.pairs_remaining
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbConfig {
    /// Maximum number of S-pairs reduced before aborting.
    pub max_steps: usize,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { max_steps: 500_000 }
    }
}

impl GbConfig {
    pub fn with_max_steps(max_steps: usize) -> Self {
        GbConfig { max_steps }
    }
}

/// Polynomial sorted decreasingly under the active order.
#[derive(Clone, Debug)]
pub(crate) struct SPoly {
    pub terms: Vec<Term>,
    pub sugar: u32,
}

impl SPoly {
    fn lt(&self) -> &Monomial {
        &self.terms[0].0
    }
}

pub(crate) fn to_sorted(p: &Polynomial, ord: &MonomialOrder) -> Vec<Term> {
    let mut terms = p.terms().to_vec();
    if *ord != *p.ring().default_order() {
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    }
    terms
}

pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Polynomial {
    Polynomial::from_terms(ring, terms)
}

fn make_monic(terms: &mut [Term]) {
    if let Some((_, lc)) = terms.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in terms.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
}

/// `a - coef * q * g`, where the leading terms cancel.
fn sub_mul(a: &[Term], coef: &Rational, q: &Monomial, g: &[Term], ord: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let (mut i, mut j) = (1, 1);
    let mut gm: Option<Monomial> = g.get(1).map(|t| t.0.mul(q));
    while i < a.len() {
        let Some(m) = gm.as_ref() else { break };
        match ord.cmp(&a[i].0, m) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.take().unwrap(), -(coef * &g[j].1)));
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(q));
            }
            Ordering::Equal => {
                let c = &a[i].1 - &(coef * &g[j].1);
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(q));
            }
        }
    }
    out.extend_from_slice(&a[i.min(a.len())..]);
    if let Some(m) = gm {
        out.push((m, -(coef * &g[j].1)));
        for t in &g[j + 1..] {
            out.push((t.0.mul(q), -(coef * &t.1)));
        }
    }
    out
}

/// Reducer lookup: leading monomials with support masks for quick rejection.
pub(crate) struct Reducers<'a> {
    polys: Vec<&'a [Term]>,
    sugars: Vec<u32>,
    masks: Vec<u64>,
}

impl<'a> Reducers<'a> {
    pub fn new() -> Self {
        Reducers {
            polys: Vec::new(),
            sugars: Vec::new(),
            masks: Vec::new(),
        }
    }

    pub fn push(&mut self, terms: &'a [Term], sugar: u32) {
        self.masks.push(terms[0].0.support_mask());
        self.polys.push(terms);
        self.sugars.push(sugar);
    }

    fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.polys.len()).find(|&k| {
            self.masks[k] & !mask == 0 && self.polys[k][0].0.divides(m)
        })
    }
}

/// Reduces `p` by `reducers` (all monic). With `full`, every term is
/// reduced; otherwise only the leading term.
pub(crate) fn reduce(
    mut cur: Vec<Term>,
    mut sugar: u32,
    reducers: &Reducers<'_>,
    ord: &MonomialOrder,
    full: bool,
) -> (Vec<Term>, u32) {
    let mut rem: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < cur.len() {
        match reducers.find(&cur[start].0) {
            Some(k) => {
                let g = reducers.polys[k];
                let q = cur[start].0.div(&g[0].0).expect("divisibility checked");
                let coef = &cur[start].1 / &g[0].1;
                sugar = sugar.max(reducers.sugars[k] + q.degree());
                cur = sub_mul(&cur[start..], &coef, &q, g, ord);
                start = 0;
            }
            None => {
                if !full {
                    rem.extend(cur.drain(start..));
                    break;
                }
                rem.push(std::mem::take(&mut cur[start]));
                start += 1;
            }
        }
    }
    (rem, sugar)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Buchberger<'o> {
    ord: &'o MonomialOrder,
    basis: Vec<SPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    stats: GbStats,
}

impl<'o> Buchberger<'o> {
    fn new(ord: &'o MonomialOrder) -> Self {
        Buchberger {
            ord,
            basis: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            stats: GbStats::default(),
        }
    }

    fn reducers(&self) -> Reducers<'_> {
        let mut r = Reducers::new();
        for (k, p) in self.basis.iter().enumerate() {
            if self.active[k] {
                r.push(&p.terms, p.sugar);
            }
        }
        r
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let d = lcm.degree();
        let si = self.basis[i].sugar + d - self.basis[i].lt().degree();
        let sj = self.basis[j].sugar + d - self.basis[j].lt().degree();
        si.max(sj)
    }

    /// Gebauer–Möller update with the new element `h` (already appended).
    fn update(&mut self, h: usize) {
        let lt_h = self.basis[h].lt().clone();
        // candidate new pairs (g, h)
        let mut cand: Vec<(usize, Monomial, bool)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lt_g = self.basis[g].lt();
                (g, lt_g.lcm(&lt_h), lt_g.is_coprime(&lt_h))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, lcm, coprime)) = cand.pop() {
            let dominated = !coprime
                && cand
                    .iter()
                    .chain(kept.iter())
                    .any(|(_, other, _)| other.divides(&lcm));
            if dominated {
                self.stats.pairs_pruned += 1;
            } else {
                kept.push((g, lcm, coprime));
            }
        }
        // chain criterion on old pairs
        let before = self.pairs.len();
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if !lt_h.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].lt().lcm(&lt_h);
            let lj = basis[p.j].lt().lcm(&lt_h);
            li == p.lcm || lj == p.lcm
        });
        self.stats.pairs_pruned += before - self.pairs.len();
        for (g, lcm, coprime) in kept {
            if coprime {
                self.stats.pairs_pruned += 1;
                continue;
            }
            let sugar = self.pair_sugar(g, h, &lcm);
            self.pairs.push(Pair { i: g, j: h, lcm, sugar });
        }
        for g in 0..h {
            if self.active[g] && lt_h.divides(self.basis[g].lt()) {
                self.active[g] = false;
            }
        }
    }

    fn insert(&mut self, mut p: SPoly) {
        make_monic(&mut p.terms);
        self.basis.push(p);
        self.active.push(true);
        self.update(self.basis.len() - 1);
    }

    fn select(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| ord.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pair: &Pair) -> Vec<Term> {
        let f = &self.basis[pair.i].terms;
        let g = &self.basis[pair.j].terms;
        let qf = pair.lcm.div(&f[0].0).unwrap();
        let qg = pair.lcm.div(&g[0].0).unwrap();
        // both monic: qf*f - qg*g; build qf*f then subtract
        let a: Vec<Term> = f.iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        sub_mul(&a, &Rational::ONE, &qg, g, self.ord)
    }

    fn run(&mut self, config: &GbConfig) -> Result<()> {
        while let Some(pair) = self.select() {
            if self.stats.pairs_processed >= config.max_steps {
                self.pairs.push(pair);
                self.stats.basis_size = self.active.iter().filter(|&&a| a).count();
                self.stats.pairs_remaining = self.pairs.len();
                return Err(Error::StepLimit {
                    limit: config.max_steps,
                    stats: self.stats,
                });
            }
            self.stats.pairs_processed += 1;
            let s = self.spoly(&pair);
            let (h, sugar) = {
                let red = self.reducers();
                reduce(s, pair.sugar, &red, self.ord, true)
            };
            if h.is_empty() {
                self.stats.zero_reductions += 1;
            } else {
                self.insert(SPoly { terms: h, sugar });
            }
        }
        Ok(())
    }

    /// Minimal, fully interreduced, monic basis sorted by leading monomial.
    fn finish(mut self) -> (Vec<Vec<Term>>, GbStats) {
        let mut elems: Vec<SPoly> = self
            .basis
            .drain(..)
            .zip(self.active.iter())
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect();
        // drop non-minimal leading terms (defensive against equal LTs)
        elems.sort_by(|a, b| self.ord.cmp(a.lt(), b.lt()));
        let mut minimal: Vec<SPoly> = Vec::new();
        for p in elems {
            if !minimal.iter().any(|q| q.lt().divides(p.lt())) {
                minimal.push(p);
            }
        }
        let mut out: Vec<Vec<Term>> = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let mut red = Reducers::new();
            for (l, q) in minimal.iter().enumerate() {
                if l != k {
                    red.push(&q.terms, q.sugar);
                }
            }
            let p = &minimal[k];
            let head = p.terms[0].clone();
            let (tail, _) = reduce(p.terms[1..].to_vec(), p.sugar, &red, self.ord, true);
            let mut t = Vec::with_capacity(tail.len() + 1);
            t.push(head);
            t.extend(tail);
            make_monic(&mut t);
            out.push(t);
        }
        // decreasing leading monomials
        out.reverse();
        self.stats.basis_size = out.len();
        self.stats.pairs_remaining = 0;
        (out, self.stats)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `ord`.
///
/// The result is monic, interreduced and sorted by decreasing leading
/// monomial; it is empty for the zero ideal and `[1]` for the unit ideal.
pub fn reduced_gb(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    config: &GbConfig,
) -> Result<Vec<Polynomial>> {
    Ok(reduced_gb_with_stats(gens, ord, config)?.0)
}

pub fn reduced_gb_with_stats(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    config: &GbConfig,
) -> Result<(Vec<Polynomial>, GbStats)> {
    let Some(first) = gens.first() else {
        return Ok((Vec::new(), GbStats::default()));
    };
    let ring = first.ring().clone();
    for g in gens {
        first.check_ring(g)?;
    }
    let mut inputs: Vec<SPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SPoly {
            terms: to_sorted(g, ord),
            sugar: g.total_degree().unwrap_or(0),
        })
        .collect();
    inputs.sort_by(|a, b| ord.cmp(a.lt(), b.lt()));
    let mut bb = Buchberger::new(ord);
    for p in inputs {
        let (h, sugar) = {
            let red = bb.reducers();
            reduce(p.terms, p.sugar, &red, ord, true)
        };
        if !h.is_empty() {
            bb.insert(SPoly { terms: h, sugar });
        }
    }
    bb.run(config)?;
    let (basis, stats) = bb.finish();
    Ok((
        basis.into_iter().map(|t| from_sorted(&ring, t)).collect(),
        stats,
    ))
}

/// Remainder of `p` on division by `gb` under `ord` (fully reduced).
pub fn normal_form(p: &Polynomial, gb: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let sorted: Vec<Vec<Term>> = gb
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut t = to_sorted(g, ord);
            make_monic(&mut t);
            t
        })
        .collect();
    let mut red = Reducers::new();
    for t in &sorted {
        red.push(t, 0);
    }
    let (r, _) = reduce(to_sorted(p, ord), 0, &red, ord, true);
    from_sorted(p.ring(), r)
}

/// S-polynomial of two nonzero polynomials under `ord`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let (lf, cf) = f.leading_under(ord).expect("nonzero");
    let (lg, cg) = g.leading_under(ord).expect("nonzero");
    let l = lf.lcm(lg);
    let a = f.mul_monomial(&l.div(lf).unwrap(), &cf.recip());
    let b = g.mul_monomial(&l.div(lg).unwrap(), &cg.recip());
    &a - &b
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(gb: &[Polynomial], ord: &MonomialOrder) -> bool {
    for i in 0..gb.len() {
        for j in i + 1..gb.len() {
            let s = s_polynomial(&gb[i], &gb[j], ord);
            if !normal_form(&s, gb, ord).is_zero() {
                return false;
            }
        }
    }
    true
}
