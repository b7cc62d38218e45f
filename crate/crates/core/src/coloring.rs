//! Integer colorings of a diagram.
//!
//! A Z-coloring assigns an integer to every arc such that at each crossing
//! twice the over-arc color equals the sum of the two under-arc colors.
//! The colorings of a fixed diagram form the integer kernel of its coloring
//! matrix, which is where every question in this module gets answered.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Diagram, ValidationReport};
use crate::generators::{build_torus_matrix, build_torus_mirror_matrix, torus_layout, TorusSpec};
use crate::intlinalg::{
    determinant, integer_kernel, mat_vec, smith_normal_form, IntMatrix, KernelBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(ValidationReport),
    #[error("coloring has {found} colors but the diagram has {expected} arcs")]
    LengthMismatch { expected: usize, found: usize },
    #[error("determinant is only defined here for connected diagrams without free circles")]
    Unsupported,
    #[error("minor index ({row}, {col}) out of range")]
    MinorOutOfRange { row: usize, col: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("torus coloring needs an even strand count above 2, got n = {0}")]
    TorusHypothesis(usize),
    #[error("color value does not fit in 64 bits")]
    Overflow,
}

/// Colors indexed by arc.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZColoring {
    pub colors: Vec<i64>,
}

impl ZColoring {
    pub fn new(colors: Vec<i64>) -> Self {
        Self { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.colors.windows(2).all(|w| w[0] == w[1])
    }

    pub fn color_set(&self) -> BTreeSet<i64> {
        self.colors.iter().copied().collect()
    }

    pub fn try_from_big(v: &[BigInt]) -> Result<Self, ColoringError> {
        v.iter()
            .map(|x| x.to_i64().ok_or(ColoringError::Overflow))
            .collect::<Result<_, _>>()
            .map(Self::new)
    }
}

/// Number of distinct colors in a coloring's image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorCount(pub usize);

impl std::fmt::Display for ColorCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// On-disk coloring document: `{"diagram": <name>, "colors": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub diagram: String,
    pub colors: Vec<i64>,
}

impl ColoringFile {
    pub fn new(diagram: &Diagram, coloring: &ZColoring) -> Self {
        Self {
            diagram: diagram.name.clone(),
            colors: coloring.colors.clone(),
        }
    }

    pub fn coloring(&self) -> ZColoring {
        ZColoring::new(self.colors.clone())
    }
}

/// All Z-colorings of a fixed diagram, as a kernel lattice.
#[derive(Debug, Clone)]
pub struct ColoringSpace {
    pub kernel: KernelBasis,
    /// Coordinates of the all-ones vector in `kernel`.
    pub trivial_coords: Vec<BigInt>,
}

impl ColoringSpace {
    pub fn dim(&self) -> usize {
        self.kernel.dim
    }
}

/// Outcome of [`verify_coloring`]: indices of crossings where the relation
/// fails. Empty means the coloring is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColoringReport {
    pub failed_crossings: Vec<usize>,
}

impl ColoringReport {
    pub fn is_valid(&self) -> bool {
        self.failed_crossings.is_empty()
    }
}

fn require_valid(d: &Diagram) -> Result<(), ColoringError> {
    let report = d.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(ColoringError::InvalidDiagram(report))
    }
}

/// One row per crossing, one column per arc: `+2` on the over-arc and `-1`
/// on each under-arc, accumulated when indices coincide.
pub fn coloring_matrix(d: &Diagram) -> IntMatrix {
    let mut m = IntMatrix::zeros(d.crossing_count(), d.arc_count);
    for (i, c) in d.crossings.iter().enumerate() {
        m[(i, c.over)] += 2;
        m[(i, c.under[0])] -= 1;
        m[(i, c.under[1])] -= 1;
    }
    m
}

pub fn coloring_space(d: &Diagram) -> Result<ColoringSpace, ColoringError> {
    require_valid(d)?;
    let kernel = integer_kernel(&coloring_matrix(d));
    let ones = vec![BigInt::one(); d.arc_count];
    let trivial_coords = kernel
        .coordinates(&ones)
        .expect("rows of a coloring matrix sum to zero");
    Ok(ColoringSpace {
        kernel,
        trivial_coords,
    })
}

/// Lattice basis of the colorings that vanish on arc 0.
///
/// Every coloring is uniquely `t·(1, ..., 1) + w` with `w` in this
/// sublattice, so it complements the trivial direction in the full
/// coloring lattice.
pub fn nontrivial_basis(d: &Diagram) -> Result<KernelBasis, ColoringError> {
    require_valid(d)?;
    let mut m = coloring_matrix(d);
    if d.arc_count == 0 {
        return Ok(integer_kernel(&m));
    }
    let mut pin = vec![BigInt::zero(); d.arc_count];
    pin[0] = BigInt::one();
    m.push_row(&pin).expect("row length matches arc count");
    Ok(integer_kernel(&m))
}

/// Diagram-level Z-colorability: the diagram carries a nonconstant coloring.
pub fn is_z_colorable(d: &Diagram) -> Result<bool, ColoringError> {
    Ok(coloring_space(d)?.dim() >= 2)
}

pub fn verify_coloring(d: &Diagram, c: &ZColoring) -> Result<ColoringReport, ColoringError> {
    if c.len() != d.arc_count {
        return Err(ColoringError::LengthMismatch {
            expected: d.arc_count,
            found: c.len(),
        });
    }
    let color = |a: usize| i128::from(c.colors[a]);
    let failed_crossings = d
        .crossings
        .iter()
        .enumerate()
        .filter(|(_, x)| 2 * color(x.over) != color(x.under[0]) + color(x.under[1]))
        .map(|(i, _)| i)
        .collect();
    Ok(ColoringReport { failed_crossings })
}

/// Shifts the minimum to 0 and divides out the common factor.
pub fn normalize(c: &ZColoring) -> ZColoring {
    let Some(&min) = c.colors.iter().min() else {
        return c.clone();
    };
    let shifted: Vec<i64> = c.colors.iter().map(|&x| x - min).collect();
    let g = shifted.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return ZColoring::new(shifted);
    }
    ZColoring::new(shifted.into_iter().map(|x| x / g).collect())
}

pub fn count_colors(c: &ZColoring) -> ColorCount {
    ColorCount(c.color_set().len())
}

/// `|det|` of the coloring matrix with row `row` and column `col` deleted.
pub fn determinant_minor(d: &Diagram, row: usize, col: usize) -> Result<BigInt, ColoringError> {
    require_valid(d)?;
    if !d.is_connected() || d.arc_count != d.crossing_count() {
        return Err(ColoringError::Unsupported);
    }
    if row >= d.crossing_count() || col >= d.arc_count {
        return Err(ColoringError::MinorOutOfRange { row, col });
    }
    let minor = coloring_matrix(d).minor(row, col);
    let det = determinant(&minor).expect("minor of a square matrix is square");
    Ok(num_traits::Signed::abs(&det))
}

/// Link determinant from the last-row/last-column minor.
pub fn link_determinant(d: &Diagram) -> Result<BigInt, ColoringError> {
    require_valid(d)?;
    let n = d.crossing_count();
    if n == 0 {
        return Err(ColoringError::Unsupported);
    }
    determinant_minor(d, n - 1, d.arc_count.saturating_sub(1))
}

/// Number of colorings modulo `q`, from the invariant factors: a system
/// `D·y ≡ 0 (mod q)` has `gcd(d_i, q)` choices per nonzero factor and `q`
/// per zero column.
pub fn fox_coloring_count(d: &Diagram, q: u64) -> Result<BigInt, ColoringError> {
    require_valid(d)?;
    if q < 2 {
        return Err(ColoringError::BadModulus(q));
    }
    let snf = smith_normal_form(&coloring_matrix(d));
    let q = BigInt::from(q);
    let mut count: BigInt = snf.invariant_factors().iter().map(|f| f.gcd(&q)).product();
    for _ in snf.rank..d.arc_count {
        count *= &q;
    }
    Ok(count)
}

/// True iff the diagram has a nonconstant coloring modulo `q`.
pub fn fox_colorable(d: &Diagram, q: u64) -> Result<bool, ColoringError> {
    let count = fox_coloring_count(d, q)?;
    let constants = if d.arc_count == 0 { 1 } else { q };
    Ok(count > BigInt::from(constants))
}

/// Column states of a torus braid propagated by the recoloring matrix.
#[derive(Debug, Clone)]
pub struct TorusPropagator {
    /// The recoloring matrix used for one column (the mirror matrix when
    /// `p < 0`).
    pub matrix: IntMatrix,
    /// `states[j]` holds the colors entering column `j`; the last entry is
    /// the state after the final column, to compare with `states[0]`.
    pub states: Vec<Vec<BigInt>>,
}

impl TorusPropagator {
    /// Propagates the seed `(1, 0, ..., 0, 1)` across every column.
    pub fn new(spec: &TorusSpec) -> Self {
        let n = spec.n();
        let mut seed = vec![BigInt::zero(); n];
        seed[0] = BigInt::one();
        seed[n - 1] = BigInt::one();
        Self::with_seed(spec, seed)
    }

    pub fn with_seed(spec: &TorusSpec, seed: Vec<BigInt>) -> Self {
        let matrix = if spec.is_mirrored() {
            build_torus_mirror_matrix(spec.n())
        } else {
            build_torus_matrix(spec.n())
        };
        let mut states = Vec::with_capacity(spec.columns() + 1);
        states.push(seed);
        for _ in 0..spec.columns() {
            let next = mat_vec(&matrix, states.last().unwrap()).expect("state has n entries");
            states.push(next);
        }
        Self { matrix, states }
    }

    /// Whether the last state equals the seed, i.e. the braid closure
    /// accepts the propagated colors.
    pub fn closes(&self) -> bool {
        self.states.first() == self.states.last()
    }
}

/// The four-color coloring of the standard `T(pn, n)` diagram, `n` even
/// and greater than 2, built column by column from the propagated states.
pub fn torus_coloring(spec: &TorusSpec) -> Result<ZColoring, ColoringError> {
    let n = spec.n();
    if n <= 2 || !n.is_multiple_of(2) {
        return Err(ColoringError::TorusHypothesis(n));
    }
    let layout = torus_layout(spec);
    let prop = TorusPropagator::new(spec);
    debug_assert!(prop.closes());
    let mut colors = vec![0i64; layout.diagram.arc_count];
    for (arcs, state) in layout.columns.iter().zip(&prop.states) {
        for (&arc, x) in arcs.iter().zip(state) {
            colors[arc] = x.to_i64().ok_or(ColoringError::Overflow)?;
        }
    }
    let coloring = ZColoring::new(colors);
    debug_assert!(verify_coloring(&layout.diagram, &coloring)
        .unwrap()
        .is_valid());
    Ok(coloring)
}
