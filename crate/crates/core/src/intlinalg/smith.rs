use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U · M · V = D` with unimodular `U` and `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_rank`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Integer kernel of a matrix as a lattice basis.
///
/// The vectors are in row Hermite normal form when stacked as rows: pivot
/// columns strictly increase, pivots are positive, and entries above a
/// pivot lie in `[0, pivot)`. That form is unique for the lattice, so two
/// kernels can be compared verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub dim: usize,
    pub vectors: Vec<Vec<BigInt>>,
}

impl KernelBasis {
    /// Coordinates of `v` in this basis, or `None` when `v` is not in the
    /// lattice spanned by the basis.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim);
        for b in &self.vectors {
            if b.len() != rest.len() {
                return None;
            }
            let p = b.iter().position(|x| !x.is_zero())?;
            let (q, r) = rest[p].div_rem(&b[p]);
            if !r.is_zero() {
                return None;
            }
            for (x, y) in rest.iter_mut().zip(b) {
                *x -= &q * y;
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    /// Integer combination `Σ coeffs[i] · vectors[i]`.
    pub fn combine(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        let len = self.vectors.first().map_or(0, Vec::len);
        let mut out = vec![BigInt::zero(); len];
        for (c, b) in coeffs.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        out
    }
}

// Smallest nonzero absolute value in the block rows[t..] x cols[t..];
// ties go to the lowest (row, col) in row-major order.
fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => x.magnitude() < a[b].magnitude(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Computes the Smith normal form of `m` together with its transforms.
///
/// Pivoting is deterministic (smallest magnitude, then lowest index), so
/// repeated calls return identical `U` and `V`. The reported diagonal is
/// nonnegative.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut t = 0;

    while t < rows.min(cols) {
        let Some((pi, pj)) = find_pivot(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !a[(t, j)].is_zero();
            }

            if dirty {
                // A remainder survived: move the smallest entry of the pivot
                // row/column into the pivot and sweep again.
                let mut best = (t, t);
                for i in t + 1..rows {
                    let x = &a[(i, t)];
                    if !x.is_zero() && x.magnitude() < a[best].magnitude() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let x = &a[(t, j)];
                    if !x.is_zero() && x.magnitude() < a[best].magnitude() {
                        best = (t, j);
                    }
                }
                a.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }

            let pivot = a[(t, t)].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if a[(t, t)].sign() == Sign::Minus {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SmithDecomposition {
        u,
        v,
        d: a,
        rank: t,
    }
}

/// Row Hermite normal form of a full-row-rank integer matrix given as rows.
pub(crate) fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut r = 0;
    for col in 0..width {
        if r == rows.len() {
            break;
        }
        // Euclid on column `col` among rows r.. until one nonzero remains.
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| rows[i][col].magnitude() < rows[b][col].magnitude()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                let (head, tail) = rows.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[r]) {
                    *x -= &q * y;
                }
                done &= tail[0][col].is_zero();
            }
            if done {
                break;
            }
        }
        if rows[r][col].is_zero() {
            continue;
        }
        if rows[r][col].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let pivot_row = &tail[0];
        for above in head.iter_mut() {
            let q = above[col].div_floor(&pivot_row[col]);
            if q.is_zero() {
                continue;
            }
            for (x, y) in above.iter_mut().zip(pivot_row) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    rows
}

/// Lattice basis of `{ v ∈ Z^cols : M v = 0 }` in canonical Hermite form.
pub fn integer_kernel(m: &IntMatrix) -> KernelBasis {
    let snf = smith_normal_form(m);
    let raw: Vec<Vec<BigInt>> = (snf.rank..m.cols()).map(|j| snf.v.column(j)).collect();
    let vectors = hermite_rows(raw);
    KernelBasis {
        dim: vectors.len(),
        vectors,
    }
}
