use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detlink::spec::entry_name;
use crate::error::{Error, Result};
use crate::groebner::{GbConfig, Ideal};
use crate::polyring::{determinant, BlockTag, Grid, Polynomial, Rational, Ring};

/// Default sampling range `[−B, B]` for specialized link matrices.
pub const DEFAULT_SAMPLE_BOUND: i64 = 1000;
/// Resampling attempts before a specialized link is rejected.
pub const MAX_SAMPLE_ATTEMPTS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkMode {
    /// `T` is a matrix of fresh indeterminates.
    FullGeneric,
    /// `T` has integer entries drawn uniformly from `[−bound, bound]`.
    Specialized { seed: u64, bound: i64 },
}

impl LinkMode {
    pub fn specialized(seed: u64) -> LinkMode {
        LinkMode::Specialized {
            seed,
            bound: DEFAULT_SAMPLE_BOUND,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LinkMode::FullGeneric => "full-generic",
            LinkMode::Specialized { .. } => "specialized",
        }
    }
}

/// A link `I_Y = I_V : I_X` with `I_V = (f_1, …, f_c)`, `f_j = Σ_l t_jl g_l`.
#[derive(Debug, Clone)]
pub struct LinkSetup {
    pub base: Ideal,
    pub mu: usize,
    pub c: usize,
    pub mode: LinkMode,
    /// `c x μ`; variables in full-generic mode, integers otherwise.
    pub tmatrix: Grid,
    pub fs: Vec<Polynomial>,
    pub ambient: Ring,
    /// `I_X` extended to the ambient ring.
    pub base_ext: Ideal,
    pub iv: Ideal,
    pub link: Ideal,
    /// Samples drawn (1 in full-generic mode).
    pub attempts: usize,
}

impl LinkSetup {
    /// `I_Y · I_X ⊆ I_V`.
    pub fn product_contained(&self, config: &GbConfig) -> Result<bool> {
        self.link.product(&self.base_ext)?.is_subset_of(&self.iv, config)
    }
}

fn t_prefix(ring: &Ring, c: usize, mu: usize) -> String {
    ["t", "tt", "t_", "lt"]
        .iter()
        .find(|p| {
            (1..=c).all(|j| (1..=mu).all(|l| ring.index_of(&entry_name(p, c, mu, j, l)).is_none()))
        })
        .map_or_else(|| ring.fresh_name("t"), |p| p.to_string())
}

fn combine(ring: &Ring, row: &[Polynomial], gens: &[Polynomial]) -> Polynomial {
    row.iter()
        .zip(gens)
        .fold(Polynomial::zero(ring), |acc, (t, g)| &acc + &(t * g))
}

/// Codimension `nvars − dim` of `I` in its ring.
pub fn codimension(ideal: &Ideal, config: &GbConfig) -> Result<usize> {
    let d = ideal.dimension(config)?;
    if d < 0 {
        return Err(Error::InvalidArgument("the unit ideal has no link".into()));
    }
    Ok(ideal.ring().nvars() - d as usize)
}

/// Builds the generic link of `base`. The codimension `c` is derived from
/// the dimension when not supplied.
pub fn generic_link(
    base: &Ideal,
    c: Option<usize>,
    mode: LinkMode,
    config: &GbConfig,
) -> Result<LinkSetup> {
    let gens = base.generators().to_vec();
    if gens.is_empty() {
        return Err(Error::InvalidArgument("the zero ideal has no link".into()));
    }
    let mu = gens.len();
    let c = match c {
        Some(c) => c,
        None => codimension(base, config)?,
    };
    if c == 0 || c > mu {
        return Err(Error::InvalidArgument(format!(
            "codimension {c} is incompatible with {mu} generators"
        )));
    }
    let base_ring = base.ring().clone();
    match mode {
        LinkMode::FullGeneric => {
            let p = t_prefix(&base_ring, c, mu);
            let tnames: Vec<String> = (1..=c)
                .flat_map(|j| (1..=mu).map(move |l| (j, l)))
                .map(|(j, l)| entry_name(&p, c, mu, j, l))
                .collect();
            let ambient = base_ring.extend(tnames.iter().map(|n| (n.clone(), BlockTag::T)))?;
            let tmatrix: Grid = (0..c)
                .map(|j| {
                    (0..mu)
                        .map(|l| Polynomial::var_named(&ambient, &tnames[j * mu + l]))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?;
            finish(base, gens, c, mode, ambient, tmatrix, 1, config)
        }
        LinkMode::Specialized { seed, bound } => {
            if bound < 1 {
                return Err(Error::InvalidArgument(format!("sampling bound {bound} must be positive")));
            }
            let ambient = base_ring.clone();
            let expected = ambient.nvars() as i64 - c as i64;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut got = i64::MIN;
            for attempt in 1..=MAX_SAMPLE_ATTEMPTS {
                let tmatrix: Grid = (0..c)
                    .map(|_| {
                        (0..mu)
                            .map(|_| {
                                Polynomial::constant(&ambient, Rational::from(rng.gen_range(-bound..=bound)))
                            })
                            .collect()
                    })
                    .collect();
                let ext: Vec<Polynomial> = gens.iter().map(|g| g.embed(&ambient)).collect::<Result<_>>()?;
                let fs: Vec<Polynomial> = tmatrix.iter().map(|row| combine(&ambient, row, &ext)).collect();
                got = Ideal::new(&ambient, fs)?.dimension(config)?;
                if got == expected {
                    return finish(base, gens, c, mode, ambient, tmatrix, attempt, config);
                }
            }
            Err(Error::Codimension {
                attempts: MAX_SAMPLE_ATTEMPTS,
                expected: c,
                got: ambient.nvars() as i64 - got,
            })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    base: &Ideal,
    gens: Vec<Polynomial>,
    c: usize,
    mode: LinkMode,
    ambient: Ring,
    tmatrix: Grid,
    attempts: usize,
    config: &GbConfig,
) -> Result<LinkSetup> {
    let ext: Vec<Polynomial> = gens.iter().map(|g| g.embed(&ambient)).collect::<Result<_>>()?;
    let fs: Vec<Polynomial> = tmatrix.iter().map(|row| combine(&ambient, row, &ext)).collect();
    let iv = Ideal::new(&ambient, fs.clone())?;
    let base_ext = Ideal::new(&ambient, ext)?;
    let link = iv.quotient(&base_ext, config)?;
    Ok(LinkSetup {
        base: base.clone(),
        mu: gens.len(),
        c,
        mode,
        tmatrix,
        fs,
        ambient,
        base_ext,
        iv,
        link,
        attempts,
    })
}

/// For the maximal minors of an `(n+1) x n` matrix `M`: the `(n + c) x (n+1)`
/// matrix stacking `Mᵀ` over the link matrix, with the columns of `T`
/// permuted and signed so that the minor using all rows of `Mᵀ` and row
/// `j` of `T` is exactly `f_j`.
pub fn stacked_link_matrix(link: &LinkSetup, matrix: &Grid) -> Result<Grid> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if rows != cols + 1 || link.mu != rows {
        return Err(Error::InvalidArgument(format!(
            "stacking needs the maximal minors of an (n+1) x n matrix, got {rows}x{cols} with {} generators",
            link.mu
        )));
    }
    let amb = &link.ambient;
    let xt: Grid = (0..cols)
        .map(|j| (0..rows).map(|i| matrix[i][j].embed(amb)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    // cofactor of position k in an appended row
    let cofactors: Vec<Polynomial> = (0..rows)
        .map(|k| {
            let unit: Vec<Polynomial> = (0..rows)
                .map(|i| if i == k { Polynomial::one(amb) } else { Polynomial::zero(amb) })
                .collect();
            let refs: Vec<Vec<&Polynomial>> =
                xt.iter().chain([&unit]).map(|r| r.iter().collect()).collect();
            determinant(amb, &refs)
        })
        .collect();
    let mut placement = Vec::with_capacity(rows);
    for g in link.base_ext.generators() {
        let neg = -g;
        let found = cofactors.iter().enumerate().find_map(|(k, cf)| {
            if cf == g {
                Some((k, Rational::ONE))
            } else if *cf == neg {
                Some((k, -Rational::ONE))
            } else {
                None
            }
        });
        match found {
            Some(p) => placement.push(p),
            None => return Err(Error::InvalidArgument(format!("`{g}` is not a maximal minor"))),
        }
    }
    let mut out = xt;
    for trow in &link.tmatrix {
        let mut row = vec![Polynomial::zero(amb); rows];
        for (l, (k, sign)) in placement.iter().enumerate() {
            row[*k] = trow[l].scale(sign);
        }
        out.push(row);
    }
    Ok(out)
}

/// `I_V : I_Y = I_X` in the ambient ring.
pub fn double_link_check(link: &LinkSetup, config: &GbConfig) -> Result<bool> {
    link.iv.quotient(&link.link, config)?.equals(&link.base_ext, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detlink::spec::{determinantal_ideal, MatrixSpec};
    use crate::polyring::{matrix_minors, RingDescriptor};

    fn cfg() -> GbConfig {
        GbConfig::default()
    }

    #[test]
    fn principal_link_is_the_coefficient() {
        let ring = RingDescriptor::with_xblock(["x", "y"]).unwrap();
        let i = Ideal::parse(&ring, &["x^2 - y^3"]).unwrap();
        let l = generic_link(&i, None, LinkMode::FullGeneric, &cfg()).unwrap();
        assert_eq!(l.c, 1);
        let t = Ideal::parse(&l.ambient, &["t11"]).unwrap();
        assert!(l.link.equals(&t, &cfg()).unwrap());
        assert!(double_link_check(&l, &cfg()).unwrap());
    }

    #[test]
    fn stacked_minors_for_three_by_two() {
        let i = determinantal_ideal(&MatrixSpec::new(3, 2, 2).unwrap()).unwrap();
        let l = generic_link(&i, None, LinkMode::FullGeneric, &cfg()).unwrap();
        assert_eq!((l.c, l.mu), (2, 3));
        let (_, m) = crate::detlink::spec::generic_matrix_ring(3, 2).unwrap();
        let stacked = stacked_link_matrix(&l, &m).unwrap();
        assert_eq!(stacked.len(), 4);
        let expected = Ideal::new(&l.ambient, matrix_minors(&stacked, 3).unwrap()).unwrap();
        assert!(l.link.equals(&expected, &cfg()).unwrap());
        assert!(l.product_contained(&cfg()).unwrap());
        assert!(double_link_check(&l, &cfg()).unwrap());
    }

    #[test]
    fn complete_intersection_adds_the_determinant() {
        let ring = RingDescriptor::with_xblock(["x1", "x2", "x3"]).unwrap();
        let i = Ideal::parse(&ring, &["x1^2*x2", "x3^3"]).unwrap();
        let l = generic_link(&i, Some(2), LinkMode::FullGeneric, &cfg()).unwrap();
        let expected = Ideal::parse(
            &l.ambient,
            &[
                "x1^2*x2*t11 + x3^3*t12",
                "x1^2*x2*t21 + x3^3*t22",
                "t12*t21 - t11*t22",
            ],
        )
        .unwrap();
        assert!(l.link.equals(&expected, &cfg()).unwrap());
    }

    #[test]
    fn variable_complete_intersection_double_links() {
        let ring = RingDescriptor::with_xblock(["x1", "x2"]).unwrap();
        let i = Ideal::parse(&ring, &["x1", "x2"]).unwrap();
        let l = generic_link(&i, Some(2), LinkMode::FullGeneric, &cfg()).unwrap();
        let expected = l.iv.sum(&Ideal::parse(&l.ambient, &["t11*t22 - t12*t21"]).unwrap()).unwrap();
        assert!(l.link.equals(&expected, &cfg()).unwrap());
        assert!(double_link_check(&l, &cfg()).unwrap());
    }

    #[test]
    fn specialized_links_are_deterministic() {
        let i = determinantal_ideal(&MatrixSpec::new(3, 2, 2).unwrap()).unwrap();
        let a = generic_link(&i, None, LinkMode::specialized(7), &cfg()).unwrap();
        let b = generic_link(&i, None, LinkMode::specialized(7), &cfg()).unwrap();
        assert_eq!(a.fs, b.fs);
        assert!(a.link.equals(&b.link, &cfg()).unwrap());
        assert!(a.product_contained(&cfg()).unwrap());
        assert!(a.tmatrix.iter().flatten().all(Polynomial::is_constant));
    }

    #[test]
    fn bad_codimension_is_rejected() {
        let ring = RingDescriptor::with_xblock(["x", "y"]).unwrap();
        let i = Ideal::parse(&ring, &["x", "y"]).unwrap();
        assert!(generic_link(&i, Some(3), LinkMode::FullGeneric, &cfg()).is_err());
        // a codimension that no specialization can realize
        let j = Ideal::parse(&ring, &["x", "x*y"]).unwrap();
        let err = generic_link(&j, Some(2), LinkMode::specialized(0), &cfg()).unwrap_err();
        assert!(matches!(err, Error::Codimension { expected: 2, got: 1, .. }));
        assert!(generic_link(&Ideal::unit(&ring), None, LinkMode::FullGeneric, &cfg()).is_err());
    }
}
