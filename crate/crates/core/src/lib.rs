//! Exact computations in the nil Hecke algebra and the Demazure descent
//! algebra of a finite Coxeter group.
//!
//! The crate builds both algebras over an exact coefficient field, checks
//! that every Coxeter braid relation `B_kl` equals `(-1)^m * Delta_kl * B^D_kl`,
//! and produces explicit certificates that each Demazure braid relation lies
//! in the two-sided ideal generated by the Coxeter braid relations.

pub mod scalar;
pub mod poly;
pub mod coxeter;
pub mod nilhecke;
pub mod descent;
pub mod certificate;
pub mod json;
pub mod equivariant;
pub mod selftest;
pub mod cli;
