//! Exact verification of monoidal Hom-Hopf algebras, twisted Yetter–Drinfeld
//! Hom-modules and the braided T-category they form.
//!
//! Everything is generic over an exact [`Field`]; [`Scalar`] and the aliases
//! below fix it to arbitrary-precision rationals.

pub mod exactlin;
pub mod field;
pub mod format;
pub mod h4;
pub mod hom_algebra;
pub mod report;
pub mod t_category;
pub mod tensor;
pub mod yd_modules;

pub use field::Field;

pub type Scalar = num_rational::BigRational;
pub type Matrix = exactlin::LinearMap<Scalar>;
pub type HopfAlgebra = hom_algebra::HomHopfAlgebra<Scalar>;
pub type Automorphism = hom_algebra::HopfAutomorphism<Scalar>;
pub type Pair = t_category::AutPair<Scalar>;
pub type YdModule = yd_modules::YDModule<Scalar>;
