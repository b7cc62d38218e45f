//! Integer (Z-)colorings of link diagrams.
//!
//! The crate models a link diagram as arcs and crossings, builds its
//! coloring matrix, and answers questions about the colorings exactly:
//! the integer kernel, the link determinant, Fox colorability modulo `q`,
//! and the fewest distinct colors any nontrivial coloring can use.
//! Generators produce the standard diagrams of pretzel links and of torus
//! links `T(pn, n)` as closed braids.
//!
//! ```
//! use zcolor::{gen_pretzel, min_colors, PretzelSpec, DEFAULT_BOUND};
//!
//! let d = gen_pretzel(&PretzelSpec::new(vec![2, -2, 2, -2]).unwrap()).unwrap();
//! let r = min_colors(&d, DEFAULT_BOUND).unwrap();
//! assert_eq!(r.minimum.0, 4);
//! assert_eq!(r.witness.color_set().into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
//! ```

pub mod coloring;
pub mod diagram;
pub mod generators;
pub mod intlinalg;
pub mod mincolor;

pub use coloring::{
    coloring_matrix, coloring_space, count_colors, determinant_minor, fox_colorable,
    fox_coloring_count, is_z_colorable, link_determinant, nontrivial_basis, normalize,
    torus_coloring, verify_coloring, ColorCount, ColoringError, ColoringFile, ColoringReport,
    ColoringSpace, TorusPropagator, ZColoring,
};
pub use diagram::{Crossing, Diagram, DiagramError, ValidationReport, Violation};
pub use generators::{
    build_torus_matrix, build_torus_mirror_matrix, gen_pretzel, gen_torus, pretzel_layout,
    torus_layout, GeneratorError, PretzelLayout, PretzelSpec, TorusLayout, TorusSpec,
};
pub use intlinalg::{
    determinant, integer_kernel, mat_vec, smith_normal_form, IntMatrix, KernelBasis, LinalgError,
    SmithDecomposition,
};
pub use mincolor::{
    brute_force_min, color_set, min_colors, MinColorError, MinColorResult, DEFAULT_BOUND,
};
pub use num_bigint::BigInt;
