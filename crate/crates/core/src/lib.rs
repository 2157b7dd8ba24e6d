//! Invariants of oriented singular links from finite algebraic structures.
//!
//! The crate covers the whole pipeline: operation tables and axiom checkers
//! ([`algebra`]), diagrams with rotation systems ([`diagram`]), coloring
//! enumeration ([`coloring`]) and the invariants computed from colorings
//! ([`invariants`]), all reported as exact multiset values ([`polynomial`]).

pub mod algebra;
pub mod coloring;
pub mod diagram;
pub mod invariants;
pub mod polynomial;
