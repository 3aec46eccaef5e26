use std::cmp::Ordering;

use crate::polyring::monomial::Monomial;
use crate::polyring::rational::Rational;

/// Monomial orders. Variable 0 is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Compares the total degree in `elim` first, then falls back to `inner`.
    /// Any monomial involving an `elim` variable beats every monomial free of them.
    BlockElimination {
        elim: Vec<usize>,
        inner: Box<MonomialOrder>,
    },
    /// Compares the `weights` pairing first (weights are nonnegative), ties by `tie`.
    WeightRefined {
        weights: Vec<Rational>,
        tie: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn elimination(elim: Vec<usize>) -> Self {
        MonomialOrder::BlockElimination {
            elim,
            inner: Box::new(MonomialOrder::Grevlex),
        }
    }

    /// `None` when a weight is negative (the result would not be a well-order).
    pub fn weighted(weights: Vec<Rational>, tie: MonomialOrder) -> Option<Self> {
        if weights.iter().any(Rational::is_negative) {
            return None;
        }
        Some(MonomialOrder::WeightRefined {
            weights,
            tie: Box::new(tie),
        })
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::BlockElimination { inner, .. } => format!("elim({})", inner.name()),
            MonomialOrder::WeightRefined { tie, .. } => format!("weight({})", tie.name()),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::BlockElimination { elim, inner } => {
                let da: u32 = elim.iter().map(|&i| a.exp(i) as u32).sum();
                let db: u32 = elim.iter().map(|&i| b.exp(i) as u32).sum();
                da.cmp(&db).then_with(|| inner.cmp(a, b))
            }
            MonomialOrder::WeightRefined { weights, tie } => {
                let dot = |m: &Monomial| -> Rational {
                    weights
                        .iter()
                        .zip(m.exponents())
                        .filter(|(_, &e)| e > 0)
                        .map(|(w, &e)| w * &Rational::from(e as u32))
                        .sum()
                };
                dot(a).cmp(&dot(b)).then_with(|| tie.cmp(a, b))
            }
        }
    }
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x > y > z; xz < y^2 in grevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_dominates() {
        let o = MonomialOrder::elimination(vec![2]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::elimination(vec![0, 2]),
            MonomialOrder::weighted(
                vec![Rational::new(1, 2), Rational::ZERO, Rational::new(1, 3), Rational::ONE],
                MonomialOrder::Grevlex,
            )
            .unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_and_well_founded(
            a in proptest::collection::vec(0u16..4, 4),
            b in proptest::collection::vec(0u16..4, 4),
            c in proptest::collection::vec(0u16..4, 4),
        ) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            let one = Monomial::one(4);
            for o in orders() {
                prop_assert_ne!(o.cmp(&one, &a), Ordering::Greater);
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_eq!(ab == Ordering::Equal, a == b);
            }
        }
    }
}
