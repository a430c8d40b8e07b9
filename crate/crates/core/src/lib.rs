//! Exact computations for infinitesimal Hecke algebras of the reflection
//! groups G(de,e,r) with d ≤ 2.
//!
//! The layers build on each other:
//!
//! * [`arith`] — rationals, cyclotomic fields, prime fields, ℚ(q);
//! * [`groups`] — G(de,e,r) as monomial groups, reflections, classes;
//! * [`reps`] — seminormal models, Clifford splitting, characters;
//! * [`classify`] — Ref / QRef / ΛRef, X(ρ), ≈ and the predicted decomposition;
//! * [`lie`] — bracket closure, exact and modulo p, with the structural checks;
//! * [`hecke`] — invariant forms for Hecke matrix models over ℚ(q).

pub mod arith;
pub mod classify;
pub mod groups;
pub mod hecke;
pub mod lie;
pub mod linalg;
pub mod model_file;
pub mod par;
pub mod reps;
