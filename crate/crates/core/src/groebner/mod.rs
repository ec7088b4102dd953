//! Division, S-polynomials, Buchberger's algorithm and ideal predicates.

mod buchberger;
mod division;
mod ideal;

pub use buchberger::{buchberger, Budget, BuchbergerOptions, BuchbergerStats};
pub use division::{divide, s_polynomial, DivisionResult};
pub use ideal::{is_groebner_basis, is_groebner_basis_until, reduce_basis, GbCertificate, GbWitness, GroebnerBasis, Ideal};
