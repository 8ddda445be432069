//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use quasihopf::quasigroup::catalog;
use quasihopf::quasimodule::{attach_kx_coaction, build_kx};
use quasihopf::{build_kq, trivial_grading, Field, GradedHopfQuasigroup, HopfQuasigroupData, HopfQuasimodule};

/// `kQ` over the rationals for a catalog loop.
pub fn kq(name: &str) -> GradedHopfQuasigroup {
    build_kq(&catalog(name).expect("catalog name"), Field::Rational)
}

/// The loop algebra `kL` with the one-element grading.
pub fn kl(name: &str) -> Arc<GradedHopfQuasigroup> {
    let data = HopfQuasigroupData::loop_algebra(&catalog(name).expect("catalog name"), Field::Rational);
    Arc::new(trivial_grading(&data).expect("loop algebras are Hopf quasigroups"))
}

/// `kX` with `s` basis vectors per grade and the identity coaction.
pub fn kx(name: &str, s: usize) -> HopfQuasimodule {
    let q = catalog(name).expect("catalog name");
    attach_kx_coaction(build_kx(&q, &vec![s; q.order()], Field::Rational).expect("uniform sizes")).expect("kX coaction")
}
