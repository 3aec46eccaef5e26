//! One blow-up of the determinantal resolution, followed on the chart
//! where the `(1,1)` entry generates the exceptional divisor.
//!
//! With `x11 ↦ e`, `x_ij ↦ e·y_ij` and `f_ij = y_ij − y_i1·y_1j`, every
//! `ℓ x ℓ` minor picks up exactly `e^ℓ`, and what remains generates the
//! `(ℓ−1) x (ℓ−1)` minors of the `f`-matrix.

use crate::detlink::spec::{generic_matrix_ring, MatrixSpec};
use crate::error::{Error, Result};
use crate::groebner::{GbConfig, Ideal};
use crate::polyring::{matrix_minors, BlockTag, Grid, Monomial, Polynomial, Rational, Ring, RingDescriptor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalRecord {
    pub stage: usize,
    /// Name of the local equation of the exceptional divisor.
    pub variable: String,
    pub exponent: u32,
}

#[derive(Debug, Clone)]
pub struct ChartState {
    ring: Ring,
    matrix: Grid,
    r: usize,
    strict_transform: Ideal,
    exceptional: Vec<ExceptionalRecord>,
}

impl ChartState {
    pub fn initial(spec: &MatrixSpec) -> Result<ChartState> {
        let (ring, matrix) = generic_matrix_ring(spec.m(), spec.n())?;
        let strict_transform = Ideal::new(&ring, matrix_minors(&matrix, spec.r())?)?;
        Ok(ChartState {
            ring,
            matrix,
            r: spec.r(),
            strict_transform,
            exceptional: Vec::new(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn matrix(&self) -> &Grid {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    /// Current minor size.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn strict_transform(&self) -> &Ideal {
        &self.strict_transform
    }

    pub fn exceptional_record(&self) -> &[ExceptionalRecord] {
        &self.exceptional
    }

    pub fn stage(&self) -> usize {
        self.exceptional.len()
    }

    /// Ideal of the current-size minors of the current matrix.
    pub fn minors_ideal(&self) -> Result<Ideal> {
        if self.r == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        Ideal::new(&self.ring, matrix_minors(&self.matrix, self.r)?)
    }

    /// Whether the strict transform equals the minors ideal of the matrix.
    pub fn strict_transform_matches(&self, config: &GbConfig) -> Result<bool> {
        self.strict_transform.equals(&self.minors_ideal()?, config)
    }

    pub fn step(&self) -> Result<ChartState> {
        blowup_chart_step(self)
    }
}

fn chart_name(prefix: &str, stage: usize, i: usize, j: usize) -> String {
    format!("{prefix}{stage}_{i}_{j}")
}

/// Exponent of variable `v` dividing every term, and the quotient.
fn split_power(p: &Polynomial, v: usize) -> (u32, Polynomial) {
    let k = p.terms().iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0);
    let mut divisor = Monomial::one(p.ring().nvars());
    divisor.set_exp(v, k);
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| (m.div(&divisor).expect("min exponent divides"), c.clone()));
    (k as u32, Polynomial::from_terms(p.ring(), terms))
}

/// Blows up the ideal of the matrix entries and passes to the `U11` chart.
pub fn blowup_chart_step(state: &ChartState) -> Result<ChartState> {
    let (rows, cols) = (state.rows(), state.cols());
    if state.r == 0 || rows == 0 || cols == 0 || state.r > rows.min(cols) {
        return Err(Error::InvalidArgument(format!(
            "cannot blow up: {rows}x{cols} matrix with minor size {}",
            state.r
        )));
    }
    let mut entry_vars = Vec::with_capacity(rows * cols);
    for row in &state.matrix {
        for e in row {
            let m = match e.terms() {
                [(m, c)] if c.is_one() && m.degree() == 1 => m,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "matrix entry `{e}` is not a variable"
                    )))
                }
            };
            let v = (0..m.nvars()).find(|&i| m.exp(i) == 1).expect("degree one");
            entry_vars.push(v);
        }
    }
    let stage = state.stage() + 1;
    let carried: Vec<usize> = (0..state.ring.nvars())
        .filter(|i| !entry_vars.contains(i))
        .collect();
    let kept = carried
        .iter()
        .map(|&i| (state.ring.name(i).to_string(), state.ring.tag(i)));

    // working ring: carried variables, then y_ij for every entry
    let y_vars: Vec<(String, BlockTag)> = (1..=rows)
        .flat_map(|i| {
            (1..=cols).map(move |j| {
                let tag = if i > 1 && j > 1 { BlockTag::X } else { BlockTag::Chart };
                (chart_name("y", stage, i, j), tag)
            })
        })
        .collect();
    let work = RingDescriptor::new(kept.clone().chain(y_vars.iter().cloned()))?;
    let y = |i: usize, j: usize| Polynomial::var_named(&work, &chart_name("y", stage, i, j));
    let e_idx = work.var_index(&chart_name("y", stage, 1, 1))?;
    let e = Polynomial::var(&work, e_idx);

    let mut images = vec![Polynomial::zero(&work); state.ring.nvars()];
    for &c in &carried {
        images[c] = Polynomial::var_named(&work, state.ring.name(c))?;
    }
    for i in 1..=rows {
        for j in 1..=cols {
            let v = entry_vars[(i - 1) * cols + (j - 1)];
            images[v] = if i == 1 && j == 1 { e.clone() } else { &e * &y(i, j)? };
        }
    }

    // total transform, then strip the common power of the exceptional equation
    let mut transformed = Vec::with_capacity(state.strict_transform.generators().len());
    let mut exponent = u32::MAX;
    for g in state.strict_transform.generators() {
        let t = g.map_into(&work, &images)?;
        let (k, rest) = split_power(&t, e_idx);
        exponent = exponent.min(k);
        transformed.push((k, rest));
    }
    if transformed.is_empty() {
        return Err(Error::InvalidArgument("strict transform is the zero ideal".into()));
    }
    let stripped: Vec<Polynomial> = transformed
        .into_iter()
        .map(|(k, rest)| {
            let mut extra = Monomial::one(work.nvars());
            extra.set_exp(e_idx, (k - exponent) as u16);
            rest.mul_monomial(&extra, &Rational::ONE)
        })
        .collect();

    // coordinate change y_ij = f_ij + y_i1·y_1j for i, j ≥ 2
    let f_vars = (2..=rows).flat_map(|i| {
        (2..=cols).map(move |j| (chart_name("f", stage, i - 1, j - 1), BlockTag::X))
    });
    let next_ring = RingDescriptor::new(
        kept.chain(y_vars.iter().filter(|(_, t)| *t == BlockTag::Chart).cloned())
            .chain(f_vars),
    )?;
    let mut coords = Vec::with_capacity(work.nvars());
    for v in 0..work.nvars() {
        let name = work.name(v);
        let img = match y_vars.iter().position(|(n, _)| n == name) {
            Some(pos) if y_vars[pos].1 == BlockTag::X => {
                let (i, j) = (pos / cols + 1, pos % cols + 1);
                let f = Polynomial::var_named(&next_ring, &chart_name("f", stage, i - 1, j - 1))?;
                let yi1 = Polynomial::var_named(&next_ring, &chart_name("y", stage, i, 1))?;
                let y1j = Polynomial::var_named(&next_ring, &chart_name("y", stage, 1, j))?;
                &f + &(&yi1 * &y1j)
            }
            _ => Polynomial::var_named(&next_ring, name)?,
        };
        coords.push(img);
    }
    let strict = stripped
        .iter()
        .map(|p| p.map_into(&next_ring, &coords))
        .collect::<Result<Vec<_>>>()?;

    let matrix: Grid = (1..rows)
        .map(|i| {
            (1..cols)
                .map(|j| Polynomial::var_named(&next_ring, &chart_name("f", stage, i, j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut exceptional = state.exceptional.clone();
    exceptional.push(ExceptionalRecord {
        stage,
        variable: chart_name("y", stage, 1, 1),
        exponent,
    });
    Ok(ChartState {
        strict_transform: Ideal::new(&next_ring, strict)?,
        ring: next_ring,
        matrix,
        r: state.r - 1,
        exceptional,
    })
}
