//! Randomized linearity probe of the structure maps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GradedHopfQuasigroup, StructureMap};
use crate::linalg::Vector;
use crate::report::{CheckReport, Outcome, Witness};

/// Applies every structure map to a seeded random combination of basis
/// vectors and compares with the same combination of the basis images.
pub fn linearity_probe(h: &GradedHopfQuasigroup, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = h.field();
    let mut outcome = Outcome::Holds;
    for which in h.structure_maps() {
        let map = h.map(which);
        let coeffs: Vec<i64> = (0..map.src_dim()).map(|_| rng.gen_range(-3..=3)).collect();
        let input = Vector::from_ints(f, &coeffs);
        let direct = map.apply(&input).expect("input has the map's source dimension");
        let mut combined = Vector::zeros(f, map.dst_dim());
        for (i, c) in input.iter_nonzero() {
            combined = combined.add(&map.column(i).scale(c).expect("same field")).expect("same shape");
        }
        if direct != combined {
            let grades = match which {
                StructureMap::Mult(p, q) => vec![p, q],
                StructureMap::Unit => vec![],
                StructureMap::Comult(p) | StructureMap::Counit(p) | StructureMap::Antipode(p) => vec![p],
            };
            outcome = Outcome::Witness(Witness { grades, basis: vec![], lhs: direct, rhs: combined });
            break;
        }
    }
    let mut r = CheckReport::new("linearity");
    r.record("linearity", "F(Σ cᵢeᵢ) = Σ cᵢF(eᵢ)", outcome);
    r
}
