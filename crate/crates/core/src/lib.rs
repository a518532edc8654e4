//! Power-series interpolations of the Fibonacci and Lucas polynomials.
//!
//! The series `Φ_j(t, x)` and `Λ_j(t, x)` have coefficients that are
//! polynomials in a real parameter `t` and reduce to `F_n(x)` and `L_n(x)`
//! at integer `t`. This crate builds them exactly, checks their closed forms
//! and identities as truncated series over `ℚ[t]`, and ships a small
//! identity language for checking user-written relations.

pub mod classical;
pub mod cli;
pub mod dsl;
pub mod exact;
pub mod interpolants;
pub mod series;
