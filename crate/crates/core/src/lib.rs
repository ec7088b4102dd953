//! Exact polynomial and ideal computations for determinantal linkage.

pub mod automorphism;
pub mod bench;
pub mod error;
pub mod families;
pub mod graph;
pub mod groebner;
pub mod identities;
pub mod ideal_ops;
pub mod monomial;
pub mod poly;
pub mod space;
pub mod text;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{coeff, Coeff, MultiDegree, Polynomial, Substitution, Term};
pub use space::{Var, VarSpace};
pub use groebner::{Budget, Ideal};
