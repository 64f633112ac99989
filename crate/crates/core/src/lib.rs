//! Cycle systems on matroids and their coparking functions.
//!
//! The library is organized around a small number of value types: a
//! [`GroundSet`](subset::GroundSet) of labeled elements, bitset
//! [`Subset`](subset::Subset)s over it, [`Matroid`](matroid::Matroid)s with
//! rank oracles (graphic, uniform, circuit-defined, plus dual / minor /
//! direct-sum views), [`CycleSystem`](cycle_system::CycleSystem)s, and the
//! machinery built on top of them: coparking functions, Tutte polynomials and
//! h-vectors, and the deletion/contraction trees realizing the
//! basis-to-coparking bijections.

pub mod bijection;
pub mod coparking;
pub mod cycle_system;
pub mod graph;
pub mod instances;
pub mod matroid;
pub mod subset;
pub mod tutte;

mod error;

pub use error::{Error, Result};
