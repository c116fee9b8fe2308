//! Combinatorial and K-theoretic machinery on the nilpotent cone side of a
//! reductive group: root data, the extended affine Weyl group with its
//! Bruhat order, alcove geometry for the p-dilated dot action, two-sided
//! Kazhdan-Lusztig cell shapes in type A via the affine matrix-ball
//! construction, nilpotent orbits of gl_n with their determinantal rank
//! conditions, and q-graded characters of Andersen-Jantzen sheaves.
//!
//! All arithmetic is exact: integer lattice coordinates, integer Laurent
//! polynomials, and exact fields ([`field::Rat`], [`field::Fp`]) in the
//! linear-algebra layer.

pub mod affine;
pub mod alcoves;
pub mod cells;
pub mod characters;
pub mod error;
pub mod field;
pub mod linalg;
pub mod nilpotent;
pub mod oracles;
pub mod partitions;
pub mod root_data;

pub use error::CoreError;
pub use field::{Fp, Rat, Scalar};
pub use partitions::Partition;
pub use root_data::{Coroot, RootDatum, Weight, WeylElement};

/// Exact rational matrices, the concrete scalar type used by the
/// rank-condition point tests.
pub type QMat = linalg::Mat<Rat>;
