//! Fewest distinct colors over the nontrivial colorings of a fixed diagram.
//!
//! Colorings are `t·(1, ..., 1) + Σ c_i v_i` where the `v_i` span the
//! colorings vanishing on arc 0. The distinct-color count ignores the shift
//! `t` and any nonzero rescaling of `(c_1, ..., c_k)`, so only primitive
//! coefficient vectors need to be examined. With a single direction
//! (`k = 1`) that is one vector up to sign and the answer is exact; for
//! larger `k` the coefficients are searched in a box.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{
    coloring_matrix, count_colors, nontrivial_basis, normalize, ColorCount, ColoringError,
    ZColoring,
};
use crate::diagram::Diagram;

pub const DEFAULT_BOUND: u32 = 6;

/// Largest diagram the brute-force oracle accepts.
pub const BRUTE_FORCE_MAX_ARCS: usize = 14;

const MAX_SEARCH_POINTS: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinColorError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("diagram admits no nontrivial coloring")]
    NoNontrivialColoring,
    #[error("color set needs a 2-dimensional coloring space, found dimension {dim}")]
    NotApplicable { dim: usize },
    #[error("brute force is limited to {BRUTE_FORCE_MAX_ARCS} arcs, diagram has {arcs}")]
    TooLarge { arcs: usize },
    #[error("search bound must be positive")]
    ZeroBound,
    #[error("coefficient box [-{bound}, {bound}]^{dim} is too large to search")]
    SearchSpaceTooLarge { dim: usize, bound: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinColorResult {
    pub minimum: ColorCount,
    /// Normalized (min 0, gcd 1); lexicographically smallest among the
    /// colorings examined that attain `minimum`.
    pub witness: ZColoring,
    /// True when the search provably covered every nontrivial coloring.
    pub exact: bool,
    pub bound_used: u32,
}

fn to_i64_vectors(basis: &[Vec<num_bigint::BigInt>]) -> Result<Vec<Vec<i64>>, MinColorError> {
    basis
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| x.to_i64().ok_or(ColoringError::Overflow.into()))
                .collect()
        })
        .collect()
}

fn combine(basis: &[Vec<i64>], coeffs: &[i64]) -> Option<Vec<i64>> {
    let mut out = vec![0i64; basis[0].len()];
    for (v, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(v) {
            *o = o.checked_add(x.checked_mul(c)?)?;
        }
    }
    Some(out)
}

fn score(basis: &[Vec<i64>], coeffs: &[i64]) -> Option<(ColorCount, Vec<i64>)> {
    let w = normalize(&ZColoring::new(combine(basis, coeffs)?));
    Some((count_colors(&w), w.colors))
}

/// Minimal number of colors over the nontrivial colorings of `d`.
///
/// Coefficient vectors with entries in `[-bound, bound]` are examined when
/// the complement of the trivial direction has dimension above one; the
/// result is then flagged inexact.
pub fn min_colors(d: &Diagram, bound: u32) -> Result<MinColorResult, MinColorError> {
    if bound == 0 {
        return Err(MinColorError::ZeroBound);
    }
    let basis = nontrivial_basis(d)?;
    let k = basis.dim;
    if k == 0 {
        return Err(MinColorError::NoNontrivialColoring);
    }
    let basis = to_i64_vectors(&basis.vectors)?;

    let best = if k == 1 {
        [1i64, -1].iter().filter_map(|&c| score(&basis, &[c])).min()
    } else {
        let side = 2 * u64::from(bound) + 1;
        let points = u32::try_from(k)
            .ok()
            .and_then(|k| side.checked_pow(k))
            .filter(|&p| p <= MAX_SEARCH_POINTS)
            .ok_or(MinColorError::SearchSpaceTooLarge { dim: k, bound })?;
        let b = i64::from(bound);
        (0..points)
            .into_par_iter()
            .filter_map(|mut index| {
                let mut coeffs = vec![0i64; k];
                for c in coeffs.iter_mut() {
                    *c = (index % side) as i64 - b;
                    index /= side;
                }
                let g = coeffs.iter().fold(0i64, |g, &c| g.gcd(&c));
                if g != 1 {
                    return None;
                }
                score(&basis, &coeffs)
            })
            .min()
    };

    let (minimum, colors) = best.ok_or(ColoringError::Overflow)?;
    Ok(MinColorResult {
        minimum,
        witness: ZColoring::new(colors),
        exact: k == 1,
        bound_used: bound,
    })
}

/// Normalized color set of the nontrivial coloring of a diagram whose
/// coloring space has dimension exactly 2.
///
/// That coloring is unique up to `c -> s·c + t`, which leaves two
/// normalized forms, mirror images under `c -> max - c`. The one returned
/// has the lexicographically greater ascending color list, so gaps in the
/// set sit towards the low end.
pub fn color_set(d: &Diagram) -> Result<BTreeSet<i64>, MinColorError> {
    let basis = nontrivial_basis(d)?;
    if basis.dim != 1 {
        return Err(MinColorError::NotApplicable { dim: basis.dim + 1 });
    }
    let basis = to_i64_vectors(&basis.vectors)?;
    let set = |c: i64| -> Result<Vec<i64>, MinColorError> {
        let w = combine(&basis, &[c]).ok_or(ColoringError::Overflow)?;
        Ok(normalize(&ZColoring::new(w))
            .color_set()
            .into_iter()
            .collect())
    };
    Ok(set(1)?.max(set(-1)?).into_iter().collect())
}

/// Minimal distinct-color count over all nonconstant colorings with every
/// color in `[0, max_color]`, by direct enumeration.
///
/// Arcs are assigned in index order and each crossing relation is
/// propagated as soon as it pins down a remaining arc. Nothing from the
/// kernel computation or the scaling reduction is used.
pub fn brute_force_min(d: &Diagram, max_color: u32) -> Result<ColorCount, MinColorError> {
    if d.arc_count > BRUTE_FORCE_MAX_ARCS {
        return Err(MinColorError::TooLarge { arcs: d.arc_count });
    }
    let report = d.validate();
    if !report.is_valid() {
        return Err(ColoringError::InvalidDiagram(report).into());
    }
    let m = coloring_matrix(d);
    let rows: Vec<Vec<(usize, i64)>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter_map(|(j, x)| x.to_i64().filter(|&x| x != 0).map(|x| (j, x)))
                .collect()
        })
        .collect();

    let mut search = BruteForce {
        rows,
        max_color: i64::from(max_color),
        best: None,
    };
    search.run(vec![None; d.arc_count]);
    search.best.ok_or(MinColorError::NoNontrivialColoring)
}

struct BruteForce {
    rows: Vec<Vec<(usize, i64)>>,
    max_color: i64,
    best: Option<ColorCount>,
}

impl BruteForce {
    // Fills in every arc forced by a relation with exactly one unknown.
    // Returns false on a contradiction or an out-of-range color.
    fn propagate(&self, colors: &mut [Option<i64>]) -> bool {
        loop {
            let mut changed = false;
            for row in &self.rows {
                let mut unknown = None;
                let mut unknowns = 0;
                let mut sum = 0i64;
                for &(arc, coef) in row {
                    match colors[arc] {
                        Some(c) => sum += coef * c,
                        None => {
                            unknowns += 1;
                            unknown = Some((arc, coef));
                        }
                    }
                }
                match (unknowns, unknown) {
                    (0, _) if sum != 0 => return false,
                    (1, Some((arc, coef))) => {
                        if sum % coef != 0 {
                            return false;
                        }
                        let value = -sum / coef;
                        if !(0..=self.max_color).contains(&value) {
                            return false;
                        }
                        colors[arc] = Some(value);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self, mut colors: Vec<Option<i64>>) {
        if !self.propagate(&mut colors) {
            return;
        }
        match colors.iter().position(Option::is_none) {
            Some(arc) => {
                for value in 0..=self.max_color {
                    let mut next = colors.clone();
                    next[arc] = Some(value);
                    self.run(next);
                }
            }
            None => {
                let c = ZColoring::new(colors.into_iter().map(Option::unwrap).collect());
                if c.is_trivial() {
                    return;
                }
                let count = count_colors(&c);
                if self.best.is_none_or(|b| count < b) {
                    self.best = Some(count);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::diagram::{free_circles, trefoil};
    use crate::generators::{gen_pretzel, PretzelSpec};

    fn pretzel(twists: &[i64]) -> Diagram {
        gen_pretzel(&PretzelSpec::new(twists.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn corollary_fixture_uses_four_colors() {
        let d = pretzel(&[2, -2, 2, -2]);
        let r = min_colors(&d, DEFAULT_BOUND).unwrap();
        assert_eq!(r.minimum, ColorCount(4));
        assert!(r.exact);
        assert_eq!(r.witness.color_set(), BTreeSet::from([0, 1, 2, 3]));
        assert!(verify_coloring(&d, &r.witness).unwrap().is_valid());
    }

    #[test]
    fn four_twists_need_six_colors() {
        let r = min_colors(&pretzel(&[4, -4, 4, -4]), DEFAULT_BOUND).unwrap();
        assert_eq!(r.minimum, ColorCount(6));
        assert!(r.exact);
    }

    #[test]
    fn unbalanced_pretzel_needs_nine_colors() {
        let d = pretzel(&[-2, 3, 6]);
        assert_eq!(
            min_colors(&d, DEFAULT_BOUND).unwrap().minimum,
            ColorCount(9)
        );
        assert_eq!(
            color_set(&d).unwrap(),
            BTreeSet::from([0, 2, 3, 4, 5, 6, 7, 8, 9])
        );
    }

    #[test]
    fn free_circles_need_two() {
        let r = min_colors(&free_circles(2), DEFAULT_BOUND).unwrap();
        assert_eq!(r.minimum, ColorCount(2));
        assert_eq!(r.witness.colors, vec![0, 1]);
        assert_eq!(brute_force_min(&free_circles(2), 1).unwrap(), ColorCount(2));
    }

    #[test]
    fn trefoil_has_no_nontrivial_coloring() {
        assert_eq!(
            min_colors(&trefoil(), DEFAULT_BOUND),
            Err(MinColorError::NoNontrivialColoring)
        );
        assert_eq!(
            brute_force_min(&trefoil(), 6),
            Err(MinColorError::NoNontrivialColoring)
        );
    }

    #[test]
    fn brute_force_matches_on_small_pretzel() {
        assert_eq!(
            brute_force_min(&pretzel(&[2, -2, 2, -2]), 4).unwrap(),
            ColorCount(4)
        );
    }

    #[test]
    fn brute_force_size_guard() {
        let d = pretzel(&[4, -4, 4, -4]);
        assert_eq!(
            brute_force_min(&d, 4),
            Err(MinColorError::TooLarge { arcs: 16 })
        );
    }

    #[test]
    fn color_set_requires_dimension_two() {
        assert_eq!(
            color_set(&trefoil()),
            Err(MinColorError::NotApplicable { dim: 1 })
        );
        assert_eq!(
            color_set(&free_circles(3)),
            Err(MinColorError::NotApplicable { dim: 3 })
        );
    }

    #[test]
    fn zero_bound_rejected() {
        assert_eq!(
            min_colors(&free_circles(2), 0),
            Err(MinColorError::ZeroBound)
        );
    }

    #[test]
    fn higher_dimension_is_bounded() {
        let r = min_colors(&free_circles(3), 2).unwrap();
        assert_eq!(r.minimum, ColorCount(2));
        assert!(!r.exact);
        assert_eq!(r.witness.colors, vec![0, 0, 1]);
    }
}
