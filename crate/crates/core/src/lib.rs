//! Exact computation of certified vanishing orders nu(F(z) - G(z))
//! between Mahler functions and algebraic approximants.
//!
//! A Mahler function F satisfies a_0(z)F(z) + a_1(z)F(z^k) + ... +
//! a_d(z)F(z^{k^d}) = 0 for polynomials a_i and a radix k >= 2. For an
//! algebraic (or rational) approximant G, an explicit bound B caps the
//! possible vanishing order of F - G; expanding both series to order B
//! therefore either pins down nu(F - G) exactly or refutes one of the
//! asserted hypotheses. Everything runs over exact rationals, so every
//! certificate is reproducible bit for bit.

pub mod algebraic;
pub mod bipoly;
pub mod corpus;
mod intpoly;
pub mod json;
pub mod mahler;
pub mod parser;
pub mod poly;
pub mod rat;
pub mod resultant;
pub mod series;
pub mod zeroorder;

pub use algebraic::AlgebraicFunction;
pub use bipoly::BiPoly;
pub use mahler::MahlerFunction;
pub use poly::Poly;
pub use rat::Rat;
pub use series::{Series, Valuation};
pub use zeroorder::{Approximant, NuCertificate, RationalFunction};
