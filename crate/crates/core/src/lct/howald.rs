//! Thresholds of monomial ideals from the Newton polyhedron.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::lct::formula::{LctCertificate, LctMethod, LctResult};
use crate::polyring::{Monomial, Rational};
use crate::simplexq::{lp_solve, LpProblem, LpStatus};

/// Exponent vectors of the minimal generators of a monomial ideal, in
/// generator order. Errors on non-monomial input, the zero ideal and the
/// unit ideal.
pub fn minimal_monomial_generators(ideal: &Ideal) -> Result<Vec<Monomial>> {
    if ideal.is_zero_ideal() {
        return Err(Error::InvalidArgument("the zero ideal has no threshold".into()));
    }
    let mut mons = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        if !g.is_monomial() {
            return Err(Error::NotMonomial(g.to_string()));
        }
        let m = g.terms()[0].0.clone();
        if m.is_one() {
            return Err(Error::InvalidArgument("the unit ideal has no threshold".into()));
        }
        mons.push(m);
    }
    let mut keep: Vec<Monomial> = Vec::with_capacity(mons.len());
    for (i, m) in mons.iter().enumerate() {
        let redundant = mons
            .iter()
            .enumerate()
            .any(|(j, o)| j != i && o.divides(m) && (o != m || j < i));
        if !redundant {
            keep.push(m.clone());
        }
    }
    Ok(keep)
}

/// `maximize Σβ_j subject to Σ_j β_j v_j ≤ 1, β ≥ 0`, one row per variable.
pub fn newton_lp(gens: &[Monomial], nvars: usize) -> LpProblem {
    let constraints = (0..nvars)
        .map(|i| gens.iter().map(|g| Rational::from(g.exp(i) as u32)).collect())
        .collect();
    LpProblem::new(vec![Rational::ONE; gens.len()], constraints, vec![Rational::ONE; nvars])
        .expect("consistent dimensions")
}

/// Threshold of a monomial ideal via Howald's linear program. The dual
/// solution is an optimal monomial weight vector.
pub fn howald_lct(ideal: &Ideal) -> Result<LctResult> {
    let gens = minimal_monomial_generators(ideal)?;
    let problem = newton_lp(&gens, ideal.ring().nvars());
    let certificate = lp_solve(&problem);
    if certificate.status != LpStatus::Optimal || !certificate.validates(&problem) {
        return Err(Error::Invariant(format!(
            "Newton polyhedron LP ended {} without a valid certificate",
            certificate.status.as_str()
        )));
    }
    let value = certificate.objective_value.clone().expect("optimal");
    Ok(LctResult {
        value,
        method: LctMethod::HowaldLp,
        certificate: Some(LctCertificate::Lp {
            problem,
            certificate,
            generators: gens
                .iter()
                .map(|g| g.exponents().iter().map(|&e| e as u32).collect())
                .collect(),
        }),
    })
}

/// Optimal weight vector from a Howald result.
pub fn optimal_weights(result: &LctResult) -> Option<&[Rational]> {
    result.lp().and_then(|(_, c)| c.dual.as_deref())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightBound {
    Finite(Rational),
    /// `ord_w(I) = 0`: the valuation gives no constraint.
    Infinite,
}

impl fmt::Display for WeightBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightBound::Finite(v) => write!(f, "{v}"),
            WeightBound::Infinite => f.write_str("inf"),
        }
    }
}

/// `ord_w(I)`: smallest `⟨w, e⟩` over all terms of all generators.
pub fn weighted_order(ideal: &Ideal, w: &[Rational]) -> Result<Rational> {
    if w.len() != ideal.ring().nvars() {
        return Err(Error::InvalidArgument(format!(
            "{} weights for {} variables",
            w.len(),
            ideal.ring().nvars()
        )));
    }
    if w.iter().any(Rational::is_negative) {
        return Err(Error::InvalidArgument("weights must be nonnegative".into()));
    }
    if ideal.is_zero_ideal() {
        return Err(Error::InvalidArgument("the zero ideal has no order".into()));
    }
    let pair = |m: &Monomial| -> Rational {
        m.exponents()
            .iter()
            .zip(w)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, wi)| wi * &Rational::from(e as u32))
            .sum()
    };
    Ok(ideal
        .generators()
        .iter()
        .flat_map(|g| g.terms().iter().map(|(m, _)| pair(m)))
        .min()
        .expect("nonzero generators have terms"))
}

/// Upper bound `(Σ w_i) / ord_w(I)` on the threshold.
pub fn weight_bound(ideal: &Ideal, w: &[Rational]) -> Result<WeightBound> {
    if w.iter().all(Rational::is_zero) {
        return Err(Error::InvalidArgument("weight vector is zero".into()));
    }
    let ord = weighted_order(ideal, w)?;
    if ord.is_zero() {
        return Ok(WeightBound::Infinite);
    }
    let total: Rational = w.iter().cloned().sum();
    Ok(WeightBound::Finite(&total / &ord))
}
