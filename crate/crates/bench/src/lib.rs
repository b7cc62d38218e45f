//! Shared inputs for the criterion benches.

use zcolor::{gen_pretzel, gen_torus, Diagram, PretzelSpec, TorusSpec};

/// `P(-n, n+1, n(n+1))`.
pub fn unbalanced_pretzel(n: i64) -> Diagram {
    gen_pretzel(&PretzelSpec::new(vec![-n, n + 1, n * (n + 1)]).unwrap()).unwrap()
}

/// `P(n, -n, ..., n, -n)` with `strands` regions.
pub fn alternating_pretzel(n: i64, strands: usize) -> Diagram {
    gen_pretzel(&PretzelSpec::alternating(n, strands).unwrap()).unwrap()
}

pub fn torus(p: i64, n: usize) -> Diagram {
    gen_torus(&TorusSpec::new(p, n).unwrap())
}
