#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

//! Reduced words of Coxeter group elements in types A and B, the graph of
//! braid moves connecting them, and a set-valued metric on that graph.
//!
//! The groups are the symmetric group on `n` letters (type A, generators
//! `s_1 .. s_{n-1}`) and the group of signed permutations of `n` letters
//! (type B, generators `s_0 .. s_{n-1}`). A reduced word for an element `w`
//! is a shortest product of generators evaluating to `w`; two reduced words
//! are adjacent when a single braid relation transforms one into the other.
//!
//! Everything in this crate works without `std`; only `alloc` is required.
//! All iteration orders, set types, and serializations are deterministic.
//!
//! Module map:
//!
//! * [`coxeter`]: elements, words, hyperplanes, crossing sequences.
//! * [`rank2`]: rank-two flats, induced orders, separation sets, and the
//!   metric-axiom test harness.
//! * [`wordgraph`]: word enumeration, graph construction, distances,
//!   diameter, accessibility.
//! * [`canonical`]: the modular-flag word of an element and accessibility
//!   certificates built from it.
//! * [`formulas`]: closed-form flat counts, geometric cross-validation, and
//!   the diameter-bound survey.

extern crate alloc;

pub mod bitset;
pub mod canonical;
pub mod coxeter;
pub mod error;
pub mod formulas;
pub mod rank2;
pub mod rng;
pub mod wordgraph;

pub use error::{Error, Result};
