//! Exact representation theory for small finite groups.
//!
//! Scalars live in `Q(sqrt2, sqrt3)` ([`QuadNumber`]), which is enough for
//! the full tetrahedral group and its irreducible representations. The
//! group, matrix and polynomial layers are generic over [`Scalar`], so the
//! same code also runs over `f64` or plain rationals.

pub mod algebra;
pub mod chartable;
pub mod clebsch;
pub mod error;
pub mod exactnum;
pub mod fixture;
pub mod genfile;
pub mod group;
pub mod irreps;
pub mod iso;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod repr;
pub mod scalar;
pub mod structure;

pub use error::{Error, Result};
pub use exactnum::{QuadNumber, Rational};
pub use group::{Group, GroupElement, Permutation};
pub use linalg::Matrix;
pub use poly::Polynomial;
pub use repr::{CharacterTable, Representation};
pub use scalar::Scalar;

pub type QMatrix = Matrix<QuadNumber>;
pub type QGroup = Group<QuadNumber>;
pub type QPolynomial = Polynomial<QuadNumber>;
pub type RationalMatrix = Matrix<Rational>;
pub type F64Matrix = Matrix<f64>;
pub type F64Group = Group<f64>;
