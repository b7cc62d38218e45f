//! Diagram families: pretzel links and closed-braid torus links.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::diagram::{Crossing, Diagram, UnionFind};
use crate::intlinalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("a pretzel link needs at least one twist region")]
    NoTwists,
    #[error("twist region {index} has zero crossings; 0-tangles are unsupported")]
    ZeroTangle { index: usize },
    #[error("torus parameter p must be nonzero")]
    ZeroP,
    #[error("a torus braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("{name} contains a closed strand that passes over every crossing it meets")]
    OverOnlyLoop { name: String },
}

/// Twist counts `(a_1, ..., a_k)` of a pretzel link, all nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PretzelSpec {
    twists: Vec<i64>,
}

impl PretzelSpec {
    pub fn new(twists: Vec<i64>) -> Result<Self, GeneratorError> {
        if twists.is_empty() {
            return Err(GeneratorError::NoTwists);
        }
        if let Some(index) = twists.iter().position(|&a| a == 0) {
            return Err(GeneratorError::ZeroTangle { index });
        }
        Ok(Self { twists })
    }

    /// `P(n, -n, ..., n, -n)` with `strands` twist regions.
    pub fn alternating(n: i64, strands: usize) -> Result<Self, GeneratorError> {
        Self::new(
            (0..strands)
                .map(|i| if i % 2 == 0 { n } else { -n })
                .collect(),
        )
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }
}

impl fmt::Display for PretzelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twists.iter().map(ToString::to_string).collect();
        write!(f, "P({})", parts.join(","))
    }
}

/// Closed braid of `T(pn, n)`: `|p|·n` columns on `n` strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusSpec {
    p: i64,
    n: usize,
}

impl TorusSpec {
    pub fn new(p: i64, n: usize) -> Result<Self, GeneratorError> {
        if p == 0 {
            return Err(GeneratorError::ZeroP);
        }
        if n < 2 {
            return Err(GeneratorError::TooFewStrands(n));
        }
        Ok(Self { p, n })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> usize {
        self.p.unsigned_abs() as usize * self.n
    }

    pub fn is_mirrored(&self) -> bool {
        self.p < 0
    }
}

impl fmt::Display for TorusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p * self.n as i64, self.n)
    }
}

/// A generated pretzel diagram plus the arc sequence of each twist region.
///
/// `regions[i]` lists `|a_i| + 2` arcs top to bottom; crossing `j` of the
/// region (1-based) has over-arc `regions[i][j]` and under-arcs
/// `regions[i][j - 1]`, `regions[i][j + 1]`.
#[derive(Debug, Clone)]
pub struct PretzelLayout {
    pub diagram: Diagram,
    pub regions: Vec<Vec<usize>>,
}

/// A generated torus diagram plus the arc at every braid position.
///
/// `columns[j][i]` is the arc in position `i` just left of column `j`;
/// column 0 sits at the closure seam, so `columns[0]` is `0..n`.
#[derive(Debug, Clone)]
pub struct TorusLayout {
    pub diagram: Diagram,
    pub columns: Vec<Vec<usize>>,
}

// Renumbers union-find classes in first-appearance order over `labels`.
fn relabel(uf: &mut UnionFind, order: impl IntoIterator<Item = usize>, size: usize) -> Vec<usize> {
    let mut index = vec![usize::MAX; size];
    let mut next = 0;
    let mut out = vec![usize::MAX; size];
    for label in order {
        let root = uf.find(label);
        if index[root] == usize::MAX {
            index[root] = next;
            next += 1;
        }
        out[label] = index[root];
    }
    out
}

/// Builds the standard diagram of a pretzel link together with its layout.
///
/// Twist regions sit side by side; region `i` is a vertical 2-strand twist
/// with `|a_i|` crossings. Its NE end joins the NW end of region `i + 1` and
/// its SE end joins the SW end of region `i + 1`, cyclically. Positive
/// twists have the strand running NW to SE passing over; negative twists
/// are the mirror image.
pub fn pretzel_layout(spec: &PretzelSpec) -> Result<PretzelLayout, GeneratorError> {
    // Region i owns local labels base[i] .. base[i] + m + 2, one per arc
    // segment u_0 .. u_{m+1}.
    let mut base = Vec::with_capacity(spec.twists.len());
    let mut total = 0;
    for &a in &spec.twists {
        base.push(total);
        total += a.unsigned_abs() as usize + 2;
    }

    // (NW, NE, SW, SE) local labels per region.
    let corners: Vec<[usize; 4]> = spec
        .twists
        .iter()
        .zip(&base)
        .map(|(&a, &b)| {
            let m = a.unsigned_abs() as usize;
            if a > 0 {
                [b + 1, b, b + m + 1, b + m]
            } else {
                [b, b + 1, b + m, b + m + 1]
            }
        })
        .collect();

    let mut uf = UnionFind::new(total);
    let k = corners.len();
    for i in 0..k {
        let next = &corners[(i + 1) % k];
        uf.union(corners[i][1], next[0]);
        uf.union(corners[i][3], next[2]);
    }

    let arc_of = relabel(&mut uf, 0..total, total);
    let arc_count = arc_of.iter().copied().max().map_or(0, |x| x + 1);

    let mut crossings = Vec::new();
    let mut regions = Vec::with_capacity(k);
    let mut under_ends = vec![0usize; arc_count];
    for (&a, &b) in spec.twists.iter().zip(&base) {
        let m = a.unsigned_abs() as usize;
        for j in 1..=m {
            let (prev, next) = (arc_of[b + j - 1], arc_of[b + j + 1]);
            under_ends[prev] += 1;
            under_ends[next] += 1;
            crossings.push(Crossing::new(arc_of[b + j], prev, next));
        }
        regions.push((b..b + m + 2).map(|l| arc_of[l]).collect());
    }

    let name = spec.to_string();
    if under_ends.contains(&0) {
        return Err(GeneratorError::OverOnlyLoop { name });
    }
    let mut diagram = Diagram::new(name, arc_count, crossings, 0);
    diagram.claimed_minimal = true;
    Ok(PretzelLayout { diagram, regions })
}

pub fn gen_pretzel(spec: &PretzelSpec) -> Result<Diagram, GeneratorError> {
    pretzel_layout(spec).map(|l| l.diagram)
}

/// Builds the standard closed-braid diagram of `T(pn, n)`.
///
/// For `p > 0` each column carries the strand in the last position over
/// the other `n - 1` strands to the first position, while every other
/// strand shifts down one position after a single under-pass. For `p < 0`
/// the mirror column is used: the strand in the first position crosses
/// over to the last.
pub fn torus_layout(spec: &TorusSpec) -> TorusLayout {
    let n = spec.n;
    let cols = spec.columns();
    let seg = |j: usize, i: usize| (j % cols) * n + i;
    let total = cols * n;

    let mut uf = UnionFind::new(total);
    for j in 0..cols {
        if spec.is_mirrored() {
            uf.union(seg(j, 0), seg(j + 1, n - 1));
        } else {
            uf.union(seg(j, n - 1), seg(j + 1, 0));
        }
    }
    let arc_of = relabel(&mut uf, 0..total, total);
    let arc_count = total - cols;

    let mut crossings = Vec::with_capacity(cols * (n - 1));
    for j in 0..cols {
        if spec.is_mirrored() {
            let over = arc_of[seg(j, 0)];
            for i in 1..n {
                crossings.push(Crossing::new(
                    over,
                    arc_of[seg(j, i)],
                    arc_of[seg(j + 1, i - 1)],
                ));
            }
        } else {
            let over = arc_of[seg(j, n - 1)];
            for i in 0..n - 1 {
                crossings.push(Crossing::new(
                    over,
                    arc_of[seg(j, i)],
                    arc_of[seg(j + 1, i + 1)],
                ));
            }
        }
    }

    let columns = (0..cols)
        .map(|j| (0..n).map(|i| arc_of[seg(j, i)]).collect())
        .collect();
    let mut diagram = Diagram::new(spec.to_string(), arc_count, crossings, 0);
    diagram.claimed_minimal = true;
    TorusLayout { diagram, columns }
}

pub fn gen_torus(spec: &TorusSpec) -> Diagram {
    torus_layout(spec).diagram
}

/// Column recoloring matrix for `n` strands: first row `(0, ..., 0, 1)`,
/// row `i ≥ 2` has `-1` in column `i - 1` and `2` in the last column.
///
/// If `X` holds the colors entering a column, `A·X` holds the colors
/// leaving it.
pub fn build_torus_matrix(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| {
        let v = match (i, j) {
            (0, j) if j == n - 1 => 1,
            (0, _) => 0,
            (_, j) if j == n - 1 => 2,
            (i, j) if j + 1 == i => -1,
            _ => 0,
        };
        BigInt::from(v)
    })
}

/// Recoloring matrix of the mirrored column. It is the inverse of
/// [`build_torus_matrix`]: last row `(1, 0, ..., 0)`, row `i < n` has `2`
/// in the first column and `-1` in column `i + 1`.
pub fn build_torus_mirror_matrix(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| {
        let v = match (i, j) {
            (i, 0) if i == n - 1 => 1,
            (i, _) if i == n - 1 => 0,
            (_, 0) => 2,
            (i, j) if j == i + 1 => -1,
            _ => 0,
        };
        BigInt::from(v)
    })
}
