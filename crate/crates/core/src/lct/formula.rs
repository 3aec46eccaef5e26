use std::fmt;

use crate::detlink::{resolution_data, MatrixSpec};
use crate::error::{Error, Result};
use crate::polyring::Rational;
use crate::simplexq::{LpCertificate, LpProblem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LctMethod {
    DeterminantalFormula,
    HowaldLp,
    ResolutionMinimum,
}

impl LctMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            LctMethod::DeterminantalFormula => "determinantal-formula",
            LctMethod::HowaldLp => "howald-lp",
            LctMethod::ResolutionMinimum => "resolution-minimum",
        }
    }
}

impl fmt::Display for LctMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LctCertificate {
    Lp {
        problem: LpProblem,
        certificate: LpCertificate,
        /// Exponent vectors of the minimal monomial generators (LP columns).
        generators: Vec<Vec<u32>>,
    },
    /// Smallest `t` attaining the minimum of the closed form.
    MinimizingIndex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LctResult {
    pub value: Rational,
    pub method: LctMethod,
    pub certificate: Option<LctCertificate>,
}

impl LctResult {
    pub fn minimizing_index(&self) -> Option<usize> {
        match self.certificate {
            Some(LctCertificate::MinimizingIndex(t)) => Some(t),
            _ => None,
        }
    }

    pub fn lp(&self) -> Option<(&LpProblem, &LpCertificate)> {
        match &self.certificate {
            Some(LctCertificate::Lp {
                problem,
                certificate,
                ..
            }) => Some((problem, certificate)),
            _ => None,
        }
    }
}

/// `(m − t)(n − t)/(r − t)` for `t = 0, …, r − 1`.
pub fn determinantal_ratios(spec: &MatrixSpec) -> Vec<Rational> {
    let (m, n, r) = (spec.m() as i64, spec.n() as i64, spec.r() as i64);
    (0..r).map(|t| Rational::new((m - t) * (n - t), r - t)).collect()
}

/// Minimum of `(k_i + 1)/a_i` over the resolution stages, with the smallest
/// minimizing stage.
pub fn resolution_minimum(spec: &MatrixSpec) -> (Rational, usize) {
    let mut best: Option<(Rational, usize)> = None;
    for s in resolution_data(spec) {
        let v = Rational::new((s.k_i + 1) as i64, s.a_i as i64);
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, s.i));
        }
    }
    best.expect("at least one stage")
}

/// Closed form `min_{0 ≤ t < r} (m − t)(n − t)/(r − t)`, cross-checked
/// against the resolution data.
pub fn lct_determinantal(spec: &MatrixSpec) -> Result<LctResult> {
    let ratios = determinantal_ratios(spec);
    let (mut t_star, mut value) = (0, ratios[0].clone());
    for (t, v) in ratios.iter().enumerate().skip(1) {
        if *v < value {
            t_star = t;
            value = v.clone();
        }
    }
    let (res_value, res_stage) = resolution_minimum(spec);
    if res_value != value || res_stage != t_star + 1 {
        return Err(Error::Invariant(format!(
            "closed form {value} at t = {t_star} disagrees with stage minimum {res_value} at i = {res_stage}"
        )));
    }
    Ok(LctResult {
        value,
        method: LctMethod::DeterminantalFormula,
        certificate: Some(LctCertificate::MinimizingIndex(t_star)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lct(m: usize, n: usize, r: usize) -> LctResult {
        lct_determinantal(&MatrixSpec::new(m, n, r).unwrap()).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let l = lct(3, 2, 2);
        assert_eq!(l.value, Rational::from(2));
        assert_eq!(l.minimizing_index(), Some(1));
        for m in 1..=6 {
            assert_eq!(lct(m, m, m).value, Rational::ONE);
        }
        let l = lct(4, 4, 2);
        assert_eq!(l.value, Rational::from(8));
        assert_eq!(l.minimizing_index(), Some(0));
        assert_eq!(lct(5, 3, 1).value, Rational::from(15));
    }

    #[test]
    fn agrees_with_stage_minimum_and_codim_bound() {
        for m in 1..=30 {
            for n in 1..=m {
                for r in 1..=n {
                    let spec = MatrixSpec::new(m, n, r).unwrap();
                    let l = lct_determinantal(&spec).unwrap();
                    assert_eq!(l.value, resolution_minimum(&spec).0);
                    let c = Rational::from(spec.codim() as i64);
                    assert!(l.value <= c);
                    if r == 1 || m == r || (n == r && m == r + 1) {
                        assert_eq!(l.value, c, "{spec}");
                    }
                }
            }
        }
    }
}
