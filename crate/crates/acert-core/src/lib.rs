//! Exact symbolic computation of homological invariants (Ext, grade,
//! projective dimension, characteristic-variety dimensions) for finitely
//! presented modules over the relative Weyl algebra A = D_n ⊗ Q[s_1..s_r],
//! and machine-checked exactness certificates for chain complexes, with the
//! logarithmic/Spencer-complex application to divisors.
//!
//! Layering, bottom up: [`monomial`], [`order`] and [`mvec`] hold the term
//! data; [`engine`] is the shared left Gröbner kernel; [`poly`] and [`weyl`]
//! are the commutative and Weyl rings built on it; [`homlib`] computes
//! homology, Ext and grade; [`charvar`] the characteristic-variety
//! dimensions; [`certifier`] issues acyclicity certificates; [`logspencer`]
//! applies everything to logarithmic derivations of divisors. [`text`] is the
//! shared element grammar and [`guard`] the resource limits used by batch
//! front-ends.

pub mod certifier;
pub mod charvar;
pub mod engine;
pub mod guard;
pub mod homlib;
pub mod logspencer;
pub mod monomial;
pub mod mvec;
pub mod order;
pub mod poly;
pub mod text;
pub mod weyl;
