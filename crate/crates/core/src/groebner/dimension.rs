//! Krull dimension of `k[x]/I` from the leading-term ideal: the size of a
//! largest set of variables that supports no leading monomial.

use crate::polyring::Monomial;

/// Largest `|S|` such that no monomial in `leads` has its support inside `S`.
/// Returns `-1` when some lead is the constant monomial (unit ideal).
pub fn independent_set_dimension(leads: &[Monomial], nvars: usize) -> i64 {
    if leads.iter().any(Monomial::is_one) {
        return -1;
    }
    let supports: Vec<Vec<usize>> = leads
        .iter()
        .map(|m| (0..nvars).filter(|&i| m.exp(i) > 0).collect())
        .collect();
    let mut chosen = vec![false; nvars];
    let mut best = 0usize;
    search(0, 0, &supports, &mut chosen, &mut best);
    best as i64
}

fn independent(supports: &[Vec<usize>], chosen: &[bool]) -> bool {
    !supports.iter().any(|s| s.iter().all(|&i| chosen[i]))
}

fn search(v: usize, size: usize, supports: &[Vec<usize>], chosen: &mut [bool], best: &mut usize) {
    let n = chosen.len();
    if size + (n - v) <= *best {
        return;
    }
    if v == n {
        *best = size;
        return;
    }
    chosen[v] = true;
    if independent(supports, chosen) {
        search(v + 1, size + 1, supports, chosen, best);
    }
    chosen[v] = false;
    search(v + 1, size, supports, chosen, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Exhaustive oracle over all subsets.
    fn brute(leads: &[Monomial], nvars: usize) -> i64 {
        if leads.iter().any(Monomial::is_one) {
            return -1;
        }
        let mut best = 0;
        for mask in 0u32..(1 << nvars) {
            let ok = leads.iter().all(|m| {
                (0..nvars).any(|i| m.exp(i) > 0 && mask & (1 << i) == 0)
            });
            if ok {
                best = best.max(mask.count_ones() as i64);
            }
        }
        best
    }

    #[test]
    fn small_cases() {
        let x = Monomial::from_exponents(&[1, 0]);
        assert_eq!(independent_set_dimension(&[x], 2), 1);
        assert_eq!(independent_set_dimension(&[], 3), 3);
        assert_eq!(independent_set_dimension(&[Monomial::one(2)], 2), -1);
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(
            leads in proptest::collection::vec(proptest::collection::vec(0u16..3, 6), 0..6)
        ) {
            let leads: Vec<Monomial> = leads
                .iter()
                .map(|e| Monomial::from_exponents(e))
                .filter(|m| !m.is_one())
                .collect();
            prop_assert_eq!(independent_set_dimension(&leads, 6), brute(&leads, 6));
        }
    }
}
