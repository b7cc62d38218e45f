//! Independent oracles shared by the integration tests. None of these go
//! through the Smith normal form or the kernel code they are used to check.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use zcolor::{gen_pretzel, gen_torus, Diagram, IntMatrix, PretzelSpec, TorusSpec};

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => i128::from(m[0][0]),
        _ => (0..n)
            .map(|j| {
                let sub: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * i128::from(m[0][j]) * det_cofactor(&sub)
            })
            .sum(),
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Invariant factors from determinantal divisors: `D_k` is the gcd of all
/// k×k minors, and `d_k = D_k / D_{k-1}`.
pub fn invariant_factors_by_minors(m: &[Vec<i64>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                    .collect();
                g = g.gcd(&det_cofactor(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// All integer vectors with entries in `[-bound, bound]` annihilated by `m`.
pub fn kernel_points(m: &[Vec<i64>], cols: usize, bound: i64) -> Vec<Vec<i64>> {
    let side = (2 * bound + 1) as usize;
    let total = side.pow(cols as u32);
    (0..total)
        .map(|mut idx| {
            (0..cols)
                .map(|_| {
                    let v = (idx % side) as i64 - bound;
                    idx /= side;
                    v
                })
                .collect::<Vec<i64>>()
        })
        .filter(|v| {
            m.iter()
                .all(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() == 0)
        })
        .collect()
}

/// Number of colorings modulo `q`, by exhaustive assignment with early
/// rejection of crossings whose three arcs are already colored.
pub fn fox_count_brute(d: &Diagram, q: i64) -> u64 {
    fn go(d: &Diagram, q: i64, colors: &mut Vec<i64>) -> u64 {
        let k = colors.len();
        for c in &d.crossings {
            if c.slots().iter().all(|&a| a < k) {
                let r = 2 * colors[c.over] - colors[c.under[0]] - colors[c.under[1]];
                if r.rem_euclid(q) != 0 {
                    return 0;
                }
            }
        }
        if k == d.arc_count {
            return 1;
        }
        let mut total = 0;
        for v in 0..q {
            colors.push(v);
            total += go(d, q, colors);
            colors.pop();
        }
        total
    }
    go(d, q, &mut Vec::new())
}

pub fn to_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    use num_traits::ToPrimitive;
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_i64().unwrap()).collect())
        .collect()
}

pub fn abs_big(x: &BigInt) -> BigInt {
    x.abs()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn pretzel(twists: &[i64]) -> Diagram {
    gen_pretzel(&PretzelSpec::new(twists.to_vec()).unwrap()).unwrap()
}

pub fn torus(p: i64, n: usize) -> Diagram {
    gen_torus(&TorusSpec::new(p, n).unwrap())
}

/// Connected, non-split fixtures from the generated families.
pub fn nonsplit_fixtures() -> Vec<Diagram> {
    let mut out = Vec::new();
    for n in [2, 4, 6] {
        for strands in [4, 6] {
            out.push(gen_pretzel(&PretzelSpec::alternating(n, strands).unwrap()).unwrap());
        }
    }
    for n in 2..=5 {
        out.push(pretzel(&[-n, n + 1, n * (n + 1)]));
    }
    for (p, n) in [(1, 4), (2, 4), (-1, 4), (1, 6)] {
        out.push(torus(p, n));
    }
    out
}
