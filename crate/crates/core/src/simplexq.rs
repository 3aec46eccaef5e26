//! Exact rational linear programming.
//!
//! Solves `maximize c·β subject to Aβ ≤ b, β ≥ 0` with a dense two-phase
//! tableau and Bland's pivoting rule, and returns primal and dual optimal
//! vectors that are re-checked in exact arithmetic.

use crate::error::{Error, Result};
use crate::polyring::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Vec<Rational>>,
    pub bounds: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

impl LpStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            LpStatus::Optimal => "optimal",
            LpStatus::Infeasible => "infeasible",
            LpStatus::Unbounded => "unbounded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpCertificate {
    pub status: LpStatus,
    pub primal: Option<Vec<Rational>>,
    pub dual: Option<Vec<Rational>>,
    pub objective_value: Option<Rational>,
    /// Pivots performed over both phases.
    pub pivots: usize,
}

impl LpProblem {
    pub fn new(
        objective: Vec<Rational>,
        constraints: Vec<Vec<Rational>>,
        bounds: Vec<Rational>,
    ) -> Result<Self> {
        if constraints.len() != bounds.len() {
            return Err(Error::InvalidArgument(format!(
                "{} constraint rows but {} bounds",
                constraints.len(),
                bounds.len()
            )));
        }
        if let Some(row) = constraints.iter().find(|r| r.len() != objective.len()) {
            return Err(Error::InvalidArgument(format!(
                "constraint row of length {} for {} variables",
                row.len(),
                objective.len()
            )));
        }
        Ok(LpProblem {
            objective,
            constraints,
            bounds,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.bounds.len()
    }

    /// The dual `minimize b·y s.t. Aᵀy ≥ c, y ≥ 0`, written in the same
    /// maximization form: `maximize −b·y s.t. −Aᵀy ≤ −c`.
    pub fn dual(&self) -> LpProblem {
        let (m, n) = (self.num_constraints(), self.num_vars());
        let constraints = (0..n)
            .map(|j| (0..m).map(|i| -&self.constraints[i][j]).collect())
            .collect();
        LpProblem {
            objective: self.bounds.iter().map(|b| -b).collect(),
            constraints,
            bounds: self.objective.iter().map(|c| -c).collect(),
        }
    }

    pub fn is_primal_feasible(&self, beta: &[Rational]) -> bool {
        beta.len() == self.num_vars()
            && beta.iter().all(|b| !b.is_negative())
            && self
                .constraints
                .iter()
                .zip(&self.bounds)
                .all(|(row, b)| dot(row, beta) <= *b)
    }

    pub fn is_dual_feasible(&self, y: &[Rational]) -> bool {
        y.len() == self.num_constraints()
            && y.iter().all(|v| !v.is_negative())
            && (0..self.num_vars()).all(|j| {
                let col: Rational = (0..self.num_constraints())
                    .map(|i| &self.constraints[i][j] * &y[i])
                    .sum();
                col >= self.objective[j]
            })
    }
}

impl LpCertificate {
    /// Exact re-check: primal and dual feasibility plus equal objectives.
    pub fn validates(&self, p: &LpProblem) -> bool {
        match self.status {
            LpStatus::Optimal => {
                let (Some(beta), Some(y), Some(v)) = (&self.primal, &self.dual, &self.objective_value)
                else {
                    return false;
                };
                p.is_primal_feasible(beta)
                    && p.is_dual_feasible(y)
                    && dot(&p.objective, beta) == *v
                    && dot(&p.bounds, y) == *v
            }
            _ => self.primal.is_none() && self.objective_value.is_none(),
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
    pivots: usize,
}

enum PhaseOutcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        self.rhs[r] = &self.rhs[r] * &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v = &*v - &(&f * p);
                }
            }
            self.rhs[i] = &self.rhs[i] - &(&f * &prhs);
        }
        self.basis[r] = c;
        self.pivots += 1;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut d = cost.to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (dj, a) in d.iter_mut().zip(&self.rows[r]) {
                if !a.is_zero() {
                    *dj = &*dj - &(&cost[b] * a);
                }
            }
        }
        d
    }

    /// Maximizes `cost` over the columns flagged in `allowed` with Bland's rule.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> PhaseOutcome {
        loop {
            let d = self.reduced_costs(cost);
            let Some(enter) = (0..self.ncols).find(|&j| allowed[j] && d[j].is_positive()) else {
                return PhaseOutcome::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                leave = match leave {
                    None => Some((r, ratio)),
                    Some((lr, lratio)) => {
                        if ratio < lratio || (ratio == lratio && self.basis[r] < self.basis[lr]) {
                            Some((r, ratio))
                        } else {
                            Some((lr, lratio))
                        }
                    }
                };
            }
            match leave {
                None => return PhaseOutcome::Unbounded,
                Some((r, _)) => self.pivot(r, enter),
            }
        }
    }
}

/// Solves the problem exactly. Deterministic for a given input.
pub fn lp_solve(p: &LpProblem) -> LpCertificate {
    let (m, n) = (p.num_constraints(), p.num_vars());
    let flipped: Vec<bool> = p.bounds.iter().map(Rational::is_negative).collect();
    let nart = flipped.iter().filter(|&&f| f).count();
    let ncols = n + m + nart;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art = n + m;
    for i in 0..m {
        let sign = if flipped[i] { -Rational::ONE } else { Rational::ONE };
        let mut row = vec![Rational::ZERO; ncols];
        for (x, a) in row.iter_mut().zip(&p.constraints[i]) {
            *x = a * &sign;
        }
        row[n + i] = sign.clone();
        if flipped[i] {
            row[art] = Rational::ONE;
            basis.push(art);
            art += 1;
        } else {
            basis.push(n + i);
        }
        rows.push(row);
        rhs.push(&p.bounds[i] * &sign);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis,
        ncols,
        pivots: 0,
    };

    if nart > 0 {
        let cost: Vec<Rational> = (0..ncols)
            .map(|j| if j >= n + m { -Rational::ONE } else { Rational::ZERO })
            .collect();
        let all = vec![true; ncols];
        t.optimize(&cost, &all);
        let infeasibility: Rational = t
            .basis
            .iter()
            .zip(&t.rhs)
            .filter(|(&b, _)| b >= n + m)
            .map(|(_, v)| v.clone())
            .sum();
        if infeasibility.is_positive() {
            return LpCertificate {
                status: LpStatus::Infeasible,
                primal: None,
                dual: None,
                objective_value: None,
                pivots: t.pivots,
            };
        }
        // drive remaining (zero-level) artificials out of the basis
        for r in 0..m {
            if t.basis[r] >= n + m {
                let c = (0..n + m)
                    .find(|&j| !t.rows[r][j].is_zero())
                    .expect("slack columns keep full row rank");
                t.pivot(r, c);
            }
        }
    }

    let cost: Vec<Rational> = (0..ncols)
        .map(|j| if j < n { p.objective[j].clone() } else { Rational::ZERO })
        .collect();
    let allowed: Vec<bool> = (0..ncols).map(|j| j < n + m).collect();
    if let PhaseOutcome::Unbounded = t.optimize(&cost, &allowed) {
        return LpCertificate {
            status: LpStatus::Unbounded,
            primal: None,
            dual: None,
            objective_value: None,
            pivots: t.pivots,
        };
    }
    let mut primal = vec![Rational::ZERO; n];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < n {
            primal[b] = t.rhs[r].clone();
        }
    }
    // y = c_B B⁻¹; the slack columns of the tableau hold B⁻¹ (row flips cancel)
    let dual: Vec<Rational> = (0..m)
        .map(|i| {
            t.basis
                .iter()
                .enumerate()
                .map(|(r, &b)| &cost[b] * &t.rows[r][n + i])
                .sum()
        })
        .collect();
    let value = dot(&p.objective, &primal);
    LpCertificate {
        status: LpStatus::Optimal,
        primal: Some(primal),
        dual: Some(dual),
        objective_value: Some(value),
        pivots: t.pivots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::binomial;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn lp(c: &[i64], a: &[&[i64]], b: &[i64]) -> LpProblem {
        LpProblem::new(
            c.iter().map(|&v| q(v)).collect(),
            a.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(),
            b.iter().map(|&v| q(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn triangle_lp_has_hand_certificates() {
        let p = lp(&[1, 1, 1], &[&[1, 0, 1], &[1, 1, 0], &[0, 1, 1]], &[1, 1, 1]);
        let cert = lp_solve(&p);
        let half = Rational::new(1, 2);
        assert_eq!(cert.status, LpStatus::Optimal);
        assert_eq!(cert.objective_value, Some(Rational::new(3, 2)));
        assert_eq!(cert.primal, Some(vec![half.clone(); 3]));
        assert_eq!(cert.dual, Some(vec![half; 3]));
        assert!(cert.validates(&p));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let p = lp(&[1], &[&[1]], &[-1]);
        assert_eq!(lp_solve(&p).status, LpStatus::Infeasible);
        let p = lp(&[1], &[], &[]);
        assert_eq!(lp_solve(&p).status, LpStatus::Unbounded);
        let p = lp(&[1, 1], &[&[1, -1]], &[2]);
        assert_eq!(lp_solve(&p).status, LpStatus::Unbounded);
    }

    #[test]
    fn negative_bounds_need_phase_one() {
        // maximize -x - y s.t. -x - y <= -2, x <= 3  → optimum -2
        let p = lp(&[-1, -1], &[&[-1, -1], &[1, 0]], &[-2, 3]);
        let cert = lp_solve(&p);
        assert_eq!(cert.objective_value, Some(q(-2)));
        assert!(cert.validates(&p));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        assert!(LpProblem::new(vec![q(1)], vec![vec![q(1), q(2)]], vec![q(1)]).is_err());
        assert!(LpProblem::new(vec![q(1)], vec![vec![q(1)]], vec![]).is_err());
    }

    fn arb_feasible() -> impl Strategy<Value = LpProblem> {
        (1usize..5, 1usize..5).prop_flat_map(|(n, m)| {
            (
                proptest::collection::vec(-4i64..6, n),
                proptest::collection::vec(proptest::collection::vec(-3i64..6, n), m),
                proptest::collection::vec(0i64..8, m),
            )
                .prop_map(|(c, a, b)| {
                    LpProblem::new(
                        c.into_iter().map(q).collect(),
                        a.into_iter()
                            .map(|r| r.into_iter().map(q).collect())
                            .collect(),
                        b.into_iter().map(q).collect(),
                    )
                    .unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn optimal_certificates_validate(p in arb_feasible()) {
            let cert = lp_solve(&p);
            // b ≥ 0 makes β = 0 feasible
            prop_assert_ne!(cert.status, LpStatus::Infeasible);
            let bound = binomial((p.num_vars() + p.num_constraints()) as u64, p.num_constraints() as u64);
            prop_assert!(cert.pivots as u64 <= bound);
            if cert.status == LpStatus::Optimal {
                prop_assert!(cert.validates(&p));
                let d = lp_solve(&p.dual());
                prop_assert_eq!(d.status, LpStatus::Optimal);
                prop_assert_eq!(-d.objective_value.unwrap(), cert.objective_value.unwrap());
            } else {
                prop_assert_eq!(lp_solve(&p.dual()).status, LpStatus::Infeasible);
            }
        }
    }
}
