pub mod linalg;

pub use linalg::{Chain, Field, LinMap, LinalgError, Scalar, Vector};
pub mod quasigroup;
pub mod report;

pub use quasigroup::{PropertyFlags, Quasigroup, QuasigroupError};
pub use report::{CheckReport, CheckResult, Status, Witness};
pub mod hopf;

pub use hopf::{build_kq, trivial_grading, GradedBialgebra, GradedHopfQuasigroup, HopfError, HopfQuasigroupData};
pub mod galois;

pub use galois::{GaloisError, GaloisFamily, GaloisKind, Predicate};
pub mod quasimodule;

pub use quasimodule::{GradedQuasimodule, HopfQuasimodule, ModuleError};
pub mod dimodule;

pub use dimodule::{LongDimodule, RightComodule};
pub mod smash;
pub use smash::{QuasimoduleHopfQuasigroup, SmashError, UngradedQuasimodule};
pub mod io;
