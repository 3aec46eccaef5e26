use crate::error::{Error, Result};
use crate::polyring::poly::Polynomial;
use crate::polyring::ring::Ring;

/// Row-major grid of polynomials.
pub type Grid = Vec<Vec<Polynomial>>;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Determinant by Laplace expansion along the first row.
pub fn determinant(ring: &Ring, m: &[Vec<&Polynomial>]) -> Polynomial {
    let k = m.len();
    match k {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        2 => &(m[0][0] * m[1][1]) - &(m[0][1] * m[1][0]),
        _ => {
            let mut acc = Polynomial::zero(ring);
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<&Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| *p)
                            .collect()
                    })
                    .collect();
                let term = m[0][j] * &determinant(ring, &sub);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// All `r x r` minors, ordered by row subset and then column subset
/// (both lexicographic). Each minor is the plain determinant of the
/// selected submatrix.
pub fn matrix_minors(entries: &Grid, r: usize) -> Result<Vec<Polynomial>> {
    let m = entries.len();
    let n = entries.first().map_or(0, Vec::len);
    if entries.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument("ragged matrix".into()));
    }
    if r == 0 || r > m.min(n) {
        return Err(Error::InvalidArgument(format!(
            "minor size {r} out of range for a {m}x{n} matrix"
        )));
    }
    let ring = entries[0][0].ring().clone();
    let mut out = Vec::new();
    for rows in combinations(m, r) {
        for cols in combinations(n, r) {
            let sub: Vec<Vec<&Polynomial>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| &entries[i][j]).collect())
                .collect();
            out.push(determinant(&ring, &sub));
        }
    }
    Ok(out)
}

/// Fresh generic matrix: variables named by `name(i, j)` (1-based) must
/// already exist in `ring`.
pub fn generic_matrix(
    ring: &Ring,
    rows: usize,
    cols: usize,
    name: impl Fn(usize, usize) -> String,
) -> Result<Grid> {
    (1..=rows)
        .map(|i| {
            (1..=cols)
                .map(|j| Polynomial::var_named(ring, &name(i, j)))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ring::RingDescriptor;

    fn xname(i: usize, j: usize) -> String {
        format!("x{i}{j}")
    }

    fn generic(m: usize, n: usize) -> (Ring, Grid) {
        let names: Vec<String> = (1..=m)
            .flat_map(|i| (1..=n).map(move |j| xname(i, j)))
            .collect();
        let ring = RingDescriptor::with_xblock(names).unwrap();
        let g = generic_matrix(&ring, m, n, xname).unwrap();
        (ring, g)
    }

    #[test]
    fn two_by_two_determinant() {
        let (ring, g) = generic(2, 2);
        let minors = matrix_minors(&g, 2).unwrap();
        assert_eq!(
            minors,
            vec![Polynomial::parse(&ring, "x11*x22 - x12*x21").unwrap()]
        );
    }

    #[test]
    fn counts_and_entries() {
        let (_, g) = generic(3, 2);
        assert_eq!(matrix_minors(&g, 2).unwrap().len(), 3);
        let ones = matrix_minors(&g, 1).unwrap();
        assert_eq!(ones.len(), 6);
        assert!(ones.iter().all(|p| p.is_monomial()));
        let (_, g) = generic(4, 3);
        for r in 1..=3 {
            let want = binomial(4, r as u64) * binomial(3, r as u64);
            assert_eq!(matrix_minors(&g, r).unwrap().len() as u64, want);
        }
        assert!(matrix_minors(&g, 0).is_err());
        assert!(matrix_minors(&g, 4).is_err());
    }

    #[test]
    fn three_by_three_has_six_terms() {
        let (_, g) = generic(3, 3);
        let d = matrix_minors(&g, 3).unwrap();
        assert_eq!(d[0].len(), 6);
    }
}
