//! Exact computational commutative algebra over prime fields: weighted-graded
//! polynomial quotient rings, Groebner bases, finitely presented graded
//! modules, Koszul homology and free resolutions, Frobenius pushforwards and
//! Hilbert-Kunz data, asymptotic Cohen-Macaulay diagnostics, closure-operation
//! evidence, and Serre intersection multiplicities.

pub mod error;
pub mod field;
pub mod monomial;
pub mod poly;
pub mod parse;
pub mod groebner;
pub mod ring;
pub mod hilbert;
pub mod ideal;
pub mod module;
pub mod complex;
pub mod frobenius;
pub mod series;
pub mod family;
pub mod limcm;
pub mod newton;
pub mod closure;
pub mod serre;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use ideal::Ideal;
pub use module::{FreeModule, GradedModule, Length, ModuleMap};
pub use poly::Polynomial;
pub use ring::GradedRing;
