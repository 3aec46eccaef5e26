use std::fmt;

use crate::detlink::link::{generic_link, LinkMode, LinkSetup, DEFAULT_SAMPLE_BOUND};
use crate::detlink::spec::{determinantal_ideal, MatrixSpec, StageData};
use crate::error::{Error, Result};
use crate::groebner::{GbConfig, Ideal};
use crate::polyring::{BlockTag, Polynomial};

/// A natural number or `∞` (the order of the zero ideal).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

/// Outcome of the power-containment search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerOrder {
    Exact(u32),
    /// `J ⊆ I^cap`; the true order is at least `cap`.
    CapExceeded(u32),
}

/// Order of `J` along the ideal generated by the variables in `block`:
/// the smallest block degree of any term of any generator.
///
/// A polynomial lies in `(block)^n` iff each of its terms has block degree
/// at least `n`, so the answer does not depend on the generating set.
pub fn ord_variable_block(j: &Ideal, block: &[usize]) -> Result<Order> {
    if block.is_empty() {
        return Err(Error::InvalidArgument("empty variable block".into()));
    }
    let n = j.ring().nvars();
    if let Some(&bad) = block.iter().find(|&&i| i >= n) {
        return Err(Error::InvalidArgument(format!("variable index {bad} out of range")));
    }
    let mut mask = vec![false; n];
    for &i in block {
        mask[i] = true;
    }
    Ok(j.generators()
        .iter()
        .filter_map(|g| g.block_degree_min(&mask))
        .min()
        .map_or(Order::Infinite, Order::Finite))
}

/// Order along the x block of the ideal's ring.
pub fn ord_xblock(j: &Ideal) -> Result<Order> {
    ord_variable_block(j, &j.ring().block(BlockTag::X))
}

/// Largest `n ≤ cap` with `J ⊆ I^n`.
pub fn ord_ideal_power(j: &Ideal, i: &Ideal, cap: u32, config: &GbConfig) -> Result<PowerOrder> {
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be at least 1".into()));
    }
    let mut power = Ideal::unit(i.ring());
    for n in 1..=cap {
        power = power.product(i)?;
        if !j.is_subset_of(&power, config)? {
            return Ok(PowerOrder::Exact(n - 1));
        }
    }
    Ok(PowerOrder::CapExceeded(cap))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeChoice {
    FullGeneric,
    Specialized,
}

impl ModeChoice {
    pub fn name(&self) -> &'static str {
        match self {
            ModeChoice::FullGeneric => "full-generic",
            ModeChoice::Specialized => "specialized",
        }
    }
}

#[derive(Debug, Clone)]
pub struct LinkOptions {
    pub mode: ModeChoice,
    /// Largest ambient variable count attempted without `allow_over_budget`.
    pub budget_vars: u64,
    pub allow_over_budget: bool,
    pub seeds: Vec<u64>,
    pub bound: i64,
    pub gb: GbConfig,
}

impl Default for LinkOptions {
    fn default() -> Self {
        LinkOptions {
            mode: ModeChoice::FullGeneric,
            budget_vars: 14,
            allow_over_budget: false,
            seeds: vec![0, 1, 2],
            bound: DEFAULT_SAMPLE_BOUND,
            gb: GbConfig::default(),
        }
    }
}

impl LinkOptions {
    pub fn specialized() -> Self {
        LinkOptions {
            mode: ModeChoice::Specialized,
            ..Default::default()
        }
    }

    /// Variables the computation for `spec` would use.
    pub fn variables_needed(&self, spec: &MatrixSpec) -> u64 {
        match self.mode {
            ModeChoice::FullGeneric => spec.generic_link_vars(),
            ModeChoice::Specialized => (spec.m() * spec.n()) as u64,
        }
    }

    pub fn check_budget(&self, spec: &MatrixSpec) -> Result<()> {
        let needed = self.variables_needed(spec);
        if needed > self.budget_vars && !self.allow_over_budget {
            return Err(Error::Budget {
                needed,
                budget: self.budget_vars,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderStatus {
    Agree,
    Disagree,
    /// Specialized samples disagreed with each other.
    Inconclusive,
}

impl OrderStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrderStatus::Agree => "agree",
            OrderStatus::Disagree => "disagree",
            OrderStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone)]
pub struct OrderReport {
    pub spec: MatrixSpec,
    pub stage: StageData,
    pub mode: ModeChoice,
    pub predicted: u64,
    /// `None` when the specialized samples were inconsistent.
    pub computed: Option<u64>,
    /// `(seed, order)` per specialized sample; empty in full-generic mode.
    pub samples: Vec<(u64, u64)>,
    pub status: OrderStatus,
}

impl OrderReport {
    pub fn agree(&self) -> bool {
        self.status == OrderStatus::Agree
    }
}

fn link_order(link: &LinkSetup) -> Result<u64> {
    let block = link.ambient.block(BlockTag::X);
    match ord_variable_block(&link.link, &block)? {
        Order::Finite(n) => Ok(n as u64),
        Order::Infinite => Err(Error::Invariant("link ideal is zero".into())),
    }
}

/// Order of the generic link of `I_{r_i}` of a fresh `m_i x n_i` matrix
/// along its entries, next to the predicted `min(r_i, q_i)`.
pub fn computed_link_order(spec: &MatrixSpec, i: usize, opts: &LinkOptions) -> Result<OrderReport> {
    let stage = spec.stage(i)?;
    let local = spec.stage_spec(i)?;
    opts.check_budget(&local)?;
    let base = determinantal_ideal(&local)?;
    let c = local.codim() as usize;
    let predicted = stage.predicted_link_order();
    let (computed, samples) = match opts.mode {
        ModeChoice::FullGeneric => {
            let link = generic_link(&base, Some(c), LinkMode::FullGeneric, &opts.gb)?;
            (Some(link_order(&link)?), Vec::new())
        }
        ModeChoice::Specialized => {
            if opts.seeds.is_empty() {
                return Err(Error::InvalidArgument("no seeds given".into()));
            }
            let mut samples = Vec::with_capacity(opts.seeds.len());
            for &seed in &opts.seeds {
                let mode = LinkMode::Specialized {
                    seed,
                    bound: opts.bound,
                };
                let link = generic_link(&base, Some(c), mode, &opts.gb)?;
                samples.push((seed, link_order(&link)?));
            }
            let first = samples[0].1;
            let consistent = samples.iter().all(|&(_, o)| o == first);
            (consistent.then_some(first), samples)
        }
    };
    let status = match computed {
        None => OrderStatus::Inconclusive,
        Some(v) if v == predicted => OrderStatus::Agree,
        Some(_) => OrderStatus::Disagree,
    };
    Ok(OrderReport {
        spec: *spec,
        stage,
        mode: opts.mode,
        predicted,
        computed,
        samples,
        status,
    })
}

#[derive(Debug, Clone)]
pub struct DegreeReport {
    pub spec: MatrixSpec,
    /// `(n − r + 1)(m − r)(r − 1)`.
    pub expected: u64,
    /// `rc − m(n − r + 1)` evaluated exactly.
    pub identity_lhs: i64,
    pub identity_holds: bool,
    /// Smallest x-degree among reduced-basis elements of `I_Y` outside `I_V`.
    pub min_new_degree: Option<u32>,
    pub pass: bool,
}

/// `rc − m(n − r + 1) = (n − r + 1)(m − r)(r − 1)` for one spec.
pub fn degree_identity(spec: &MatrixSpec) -> (i64, i64) {
    let (m, n, r) = (spec.m() as i64, spec.n() as i64, spec.r() as i64);
    let lhs = r * spec.codim() as i64 - m * (n - r + 1);
    (lhs, spec.link_degree() as i64)
}

pub fn link_min_degree_check(spec: &MatrixSpec, opts: &LinkOptions) -> Result<DegreeReport> {
    let (lhs, rhs) = degree_identity(spec);
    let full = LinkOptions {
        mode: ModeChoice::FullGeneric,
        ..opts.clone()
    };
    full.check_budget(spec)?;
    let base = determinantal_ideal(spec)?;
    let link = generic_link(&base, Some(spec.codim() as usize), LinkMode::FullGeneric, &opts.gb)?;
    let xmask = link.ambient.block_mask(BlockTag::X);
    let mut min_new: Option<u32> = None;
    for g in link.link.gb(&opts.gb)? {
        if link.iv.contains(g, &opts.gb)? {
            continue;
        }
        let d = g.block_degree_min(&xmask).expect("nonzero");
        min_new = Some(min_new.map_or(d, |m| m.min(d)));
    }
    let identity_holds = lhs == rhs;
    Ok(DegreeReport {
        spec: *spec,
        expected: rhs as u64,
        identity_lhs: lhs,
        identity_holds,
        min_new_degree: min_new,
        pass: identity_holds && min_new == Some(rhs as u32),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub without: Order,
    pub with: Order,
}

impl InvarianceReport {
    pub fn agree(&self) -> bool {
        self.without == self.with
    }
}

/// Links built from the generators of `base` with and without the extra
/// element `redundant ∈ base` have the same order along `block`.
pub fn order_invariance_check(
    base: &Ideal,
    redundant: &Polynomial,
    block: &[&str],
    config: &GbConfig,
) -> Result<InvarianceReport> {
    if !base.contains(redundant, config)? {
        return Err(Error::InvalidArgument(format!(
            "`{redundant}` is not in the ideal"
        )));
    }
    let c = crate::detlink::link::codimension(base, config)?;
    let enlarged = Ideal::new(
        base.ring(),
        base.generators().iter().cloned().chain([redundant.clone()]),
    )?;
    let order = |i: &Ideal| -> Result<Order> {
        let link = generic_link(i, Some(c), LinkMode::FullGeneric, config)?;
        let idx = link.ambient.indices_of(block)?;
        ord_variable_block(&link.link, &idx)
    };
    Ok(InvarianceReport {
        without: order(base)?,
        with: order(&enlarged)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RingDescriptor;

    fn cfg() -> GbConfig {
        GbConfig::default()
    }

    #[test]
    fn block_orders() {
        let spec = MatrixSpec::new(3, 2, 2).unwrap();
        let x = determinantal_ideal(&spec).unwrap();
        assert_eq!(ord_xblock(&x).unwrap(), Order::Finite(2));
        let vars = Ideal::of_variables(x.ring(), &x.ring().block(BlockTag::X));
        assert_eq!(ord_ideal_power(&x, &vars, 4, &cfg()).unwrap(), PowerOrder::Exact(2));
        assert_eq!(ord_xblock(&Ideal::zero(x.ring())).unwrap(), Order::Infinite);
        assert!(ord_variable_block(&x, &[]).is_err());
    }

    #[test]
    fn power_orders() {
        let ring = RingDescriptor::with_xblock(["x", "y"]).unwrap();
        let m = Ideal::parse(&ring, &["x", "y"]).unwrap();
        assert_eq!(ord_ideal_power(&m.power(3), &m, 5, &cfg()).unwrap(), PowerOrder::Exact(3));
        assert_eq!(ord_ideal_power(&m.power(3), &m, 2, &cfg()).unwrap(), PowerOrder::CapExceeded(2));
        let y = Ideal::parse(&ring, &["y"]).unwrap();
        let x = Ideal::parse(&ring, &["x"]).unwrap();
        assert_eq!(ord_ideal_power(&y, &x, 3, &cfg()).unwrap(), PowerOrder::Exact(0));
    }

    #[test]
    fn link_orders_match_prediction() {
        let opts = LinkOptions::default();
        for (m, n, r, i, expect) in [(3, 2, 2, 1, 1), (2, 2, 2, 1, 0), (3, 2, 2, 2, 0), (1, 1, 1, 1, 0)] {
            let spec = MatrixSpec::new(m, n, r).unwrap();
            let rep = computed_link_order(&spec, i, &opts).unwrap();
            assert_eq!(rep.predicted, expect);
            assert_eq!(rep.computed, Some(expect));
            assert!(rep.agree());
        }
    }

    #[test]
    fn budget_guard() {
        let spec = MatrixSpec::new(4, 4, 2).unwrap();
        let err = computed_link_order(&spec, 1, &LinkOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Budget { needed: 16, .. } | Error::Budget { .. }));
        assert!(err.is_resource());
    }

    #[test]
    fn min_degree() {
        let opts = LinkOptions::default();
        let rep = link_min_degree_check(&MatrixSpec::new(3, 2, 2).unwrap(), &opts).unwrap();
        assert_eq!(rep.min_new_degree, Some(1));
        assert!(rep.pass);
        let rep = link_min_degree_check(&MatrixSpec::new(2, 2, 2).unwrap(), &opts).unwrap();
        assert_eq!(rep.min_new_degree, Some(0));
        assert!(rep.pass);
        assert_eq!(degree_identity(&MatrixSpec::new(5, 3, 2).unwrap()), (6, 6));
    }

    #[test]
    fn invariance_examples() {
        let spec = MatrixSpec::new(3, 2, 2).unwrap();
        let x = determinantal_ideal(&spec).unwrap();
        let d1 = x.generators()[0].clone();
        let red = &Polynomial::var_named(x.ring(), "x11").unwrap() * &d1;
        let names: Vec<&str> = x.ring().names().iter().map(String::as_str).collect();
        let rep = order_invariance_check(&x, &red, &names, &cfg()).unwrap();
        assert_eq!(rep, InvarianceReport { without: Order::Finite(1), with: Order::Finite(1) });

        let ring = RingDescriptor::with_xblock(["x"]).unwrap();
        let i = Ideal::parse(&ring, &["x"]).unwrap();
        let rep = order_invariance_check(&i, &Polynomial::parse(&ring, "x^2").unwrap(), &["x"], &cfg()).unwrap();
        assert_eq!(rep, InvarianceReport { without: Order::Finite(0), with: Order::Finite(0) });

        let ring = RingDescriptor::with_xblock(["x1", "x2", "x3"]).unwrap();
        let i = Ideal::parse(&ring, &["x1^2*x2", "x3^3"]).unwrap();
        let red = Polynomial::parse(&ring, "x1^2*x2 + x3^3").unwrap();
        let rep = order_invariance_check(&i, &red, &["x1", "x2", "x3"], &cfg()).unwrap();
        assert!(rep.agree());
        assert!(order_invariance_check(&i, &Polynomial::parse(&ring, "x1").unwrap(), &["x1"], &cfg()).is_err());
    }
}
