//! The polyhedron `D`: its vertices, the complex lines and bisectors that
//! carry its facets, and its facet complex.

pub mod bisectors;
pub mod facets;
pub mod lemmas;
pub mod lines;
pub mod vertices;

pub use bisectors::{
    bisector_table, classify_point, condition_residual, equidistance_residual, giraud_residual,
    membership, BisectorSpec, Membership,
};
pub use facets::{facet_complex, FacetComplex, FacetCounts, RidgeId, RidgeType, EDGES, RIDGES};
pub use lemmas::{
    lemma_bounds_check, side_inequalities, side_inequality_check, xi_coords, xi_rotation_defect,
    LemmaBounds, SideInequality,
};
pub use lines::{line_table, ComplexLine, LineLabel};
pub use vertices::{vertex_residuals, vertex_table, VertexEntry, VertexTable, IOTA_PERMUTATION};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cxgeom::{affine, Vec3, C64};
use crate::moves::GeneratorSet;

/// Seeded rejection sampling for a point strictly inside `D`.
pub fn interior_witness(gens: &GeneratorSet, seed: u64, tol: f64) -> Option<Vec3> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = gens.trig();
    let r1 = (t.c0 / t.s).sqrt();
    let r2 = (t.sp / t.s).sqrt();
    for _ in 0..200_000 {
        let z1 = C64::from_polar(rng.random_range(0.0..r1), rng.random_range(-t.phi..0.0));
        let z2 = C64::from_polar(rng.random_range(0.0..r2), rng.random_range(0.0..t.theta));
        let z = affine(z1, z2);
        if gens.form().norm(&z) <= 0.0 {
            continue;
        }
        if let Ok(Membership::Interior) = membership(gens, &z, tol) {
            return Some(z);
        }
    }
    None
}
