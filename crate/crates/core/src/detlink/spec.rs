use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{binomial, generic_matrix, matrix_minors, Grid, Ring, RingDescriptor};

/// Shape of a generic determinantal ideal: the `r x r` minors of an
/// `m x n` matrix of indeterminates, normalized to `m ≥ n ≥ r ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixSpec {
    m: usize,
    n: usize,
    r: usize,
}

impl MatrixSpec {
    /// Inputs with `n > m` are transposed.
    pub fn new(m: usize, n: usize, r: usize) -> Result<Self> {
        let (m, n) = if n > m { (n, m) } else { (m, n) };
        if r == 0 || r > n {
            return Err(Error::InvalidArgument(format!(
                "minor size r = {r} must satisfy 1 <= r <= min(m, n) = {n}"
            )));
        }
        Ok(MatrixSpec { m, n, r })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Codimension `(m − r + 1)(n − r + 1)`.
    pub fn codim(&self) -> u64 {
        ((self.m - self.r + 1) * (self.n - self.r + 1)) as u64
    }

    /// Number of `r x r` minors.
    pub fn num_minors(&self) -> u64 {
        binomial(self.m as u64, self.r as u64) * binomial(self.n as u64, self.r as u64)
    }

    /// `(n − r + 1)(m − r)(r − 1)`, the degree of the new link generators.
    pub fn link_degree(&self) -> u64 {
        ((self.n - self.r + 1) * (self.m - self.r) * (self.r - 1)) as u64
    }

    /// Variables of the full generic link: `mn + c·μ`.
    pub fn generic_link_vars(&self) -> u64 {
        (self.m * self.n) as u64 + self.codim() * self.num_minors()
    }

    pub fn stage(&self, i: usize) -> Result<StageData> {
        if i == 0 || i > self.r {
            return Err(Error::InvalidArgument(format!(
                "stage {i} out of range 1..={}",
                self.r
            )));
        }
        let (m, n, r) = (self.m as u64, self.n as u64, self.r as u64);
        let i = i as u64;
        let (mi, ni, ri) = (m - i + 1, n - i + 1, r - i + 1);
        Ok(StageData {
            i: i as usize,
            m_i: mi,
            n_i: ni,
            r_i: ri,
            a_i: r - i + 1,
            k_i: mi * ni - 1,
            q_i: (ni - ri + 1) * (mi - ri) * (ri - 1),
        })
    }

    /// The spec of the stage-`i` matrix, `m_i x n_i` with minors of size `r_i`.
    pub fn stage_spec(&self, i: usize) -> Result<MatrixSpec> {
        let s = self.stage(i)?;
        MatrixSpec::new(s.m_i as usize, s.n_i as usize, s.r_i as usize)
    }
}

impl fmt::Display for MatrixSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, self.n, self.r)
    }
}

/// Numbers attached to the `i`-th blow-up of the determinantal resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageData {
    pub i: usize,
    pub m_i: u64,
    pub n_i: u64,
    pub r_i: u64,
    /// Multiplicity of the determinantal ideal along `E_i`.
    pub a_i: u64,
    /// Discrepancy of `E_i`.
    pub k_i: u64,
    /// Degree bound governing the order of the link along `E_i`.
    pub q_i: u64,
}

impl StageData {
    /// `min(r_i, q_i)`.
    pub fn predicted_link_order(&self) -> u64 {
        self.r_i.min(self.q_i)
    }
}

/// Stages `1..=r` of the resolution.
pub fn resolution_data(spec: &MatrixSpec) -> Vec<StageData> {
    (1..=spec.r())
        .map(|i| spec.stage(i).expect("in range"))
        .collect()
}

pub fn predicted_link_order(spec: &MatrixSpec, i: usize) -> Result<u64> {
    Ok(spec.stage(i)?.predicted_link_order())
}

/// `x{i}{j}` for small matrices, `x{i}_{j}` once an index can exceed 9.
pub fn entry_name(prefix: &str, rows: usize, cols: usize, i: usize, j: usize) -> String {
    if rows <= 9 && cols <= 9 {
        format!("{prefix}{i}{j}")
    } else {
        format!("{prefix}{i}_{j}")
    }
}

/// Ring `Q[x_ij]` together with the generic matrix.
pub fn generic_matrix_ring(rows: usize, cols: usize) -> Result<(Ring, Grid)> {
    let names = (1..=rows).flat_map(|i| (1..=cols).map(move |j| entry_name("x", rows, cols, i, j)));
    let ring = RingDescriptor::with_xblock(names)?;
    let grid = generic_matrix(&ring, rows, cols, |i, j| entry_name("x", rows, cols, i, j))?;
    Ok((ring, grid))
}

/// `I_r(M)` for a fresh generic `m x n` matrix.
pub fn determinantal_ideal(spec: &MatrixSpec) -> Result<Ideal> {
    let (ring, grid) = generic_matrix_ring(spec.m(), spec.n())?;
    Ideal::new(&ring, matrix_minors(&grid, spec.r())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(s: &StageData) -> (u64, u64, u64) {
        (s.a_i, s.k_i, s.q_i)
    }

    #[test]
    fn construction_normalizes() {
        let s = MatrixSpec::new(2, 3, 2).unwrap();
        assert_eq!((s.m(), s.n(), s.r()), (3, 2, 2));
        assert_eq!(s.codim(), 2);
        assert!(MatrixSpec::new(3, 2, 3).is_err());
        assert!(MatrixSpec::new(3, 2, 0).is_err());
    }

    #[test]
    fn stage_tables() {
        let d = resolution_data(&MatrixSpec::new(3, 2, 2).unwrap());
        assert_eq!(d.iter().map(triple).collect::<Vec<_>>(), [(2, 5, 1), (1, 1, 0)]);
        let d = resolution_data(&MatrixSpec::new(1, 1, 1).unwrap());
        assert_eq!(d.iter().map(triple).collect::<Vec<_>>(), [(1, 0, 0)]);
        let d = resolution_data(&MatrixSpec::new(4, 4, 2).unwrap());
        assert_eq!(d.iter().map(triple).collect::<Vec<_>>(), [(2, 15, 6), (1, 8, 0)]);
    }

    #[test]
    fn stage_invariants_hold() {
        for m in 1..=12 {
            for n in 1..=m {
                for r in 1..=n {
                    let spec = MatrixSpec::new(m, n, r).unwrap();
                    for s in resolution_data(&spec) {
                        assert!(s.a_i >= 1);
                        assert_eq!(s.m_i - s.r_i, (m - r) as u64);
                        assert_eq!(s.n_i - s.r_i, (n - r) as u64);
                    }
                }
            }
        }
    }

    #[test]
    fn predicted_orders() {
        let p = |m, n, r, i| predicted_link_order(&MatrixSpec::new(m, n, r).unwrap(), i).unwrap();
        assert_eq!(p(3, 2, 2, 1), 1);
        assert_eq!(p(2, 2, 2, 1), 0);
        assert_eq!(p(4, 4, 2, 1), 2);
        assert!(predicted_link_order(&MatrixSpec::new(3, 2, 2).unwrap(), 3).is_err());
        assert!(predicted_link_order(&MatrixSpec::new(3, 2, 2).unwrap(), 0).is_err());
    }

    #[test]
    fn determinantal_ideals() {
        let i = determinantal_ideal(&MatrixSpec::new(2, 2, 2).unwrap()).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].to_string(), "x12*x21 - x11*x22");
        let i = determinantal_ideal(&MatrixSpec::new(3, 2, 2).unwrap()).unwrap();
        assert_eq!(i.generators().len(), 3);
        let i = determinantal_ideal(&MatrixSpec::new(3, 4, 1).unwrap()).unwrap();
        assert_eq!(i.generators().len(), 12);
        assert!(i.generators().iter().all(|g| g.is_monomial() && g.total_degree() == Some(1)));
    }
}
