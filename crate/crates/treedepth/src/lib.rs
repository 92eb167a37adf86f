//! Exact tree-depth toolkit: a memoizing exact solver with ranking
//! certificates, criticality and 1-uniqueness decision procedures,
//! generators for the critical graph families under study, interchange
//! codecs (graph6, DOT, JSON), and an exhaustive small-graph scanner
//! that checks the open conjectures on critical graphs.

pub mod codec;
pub mod criticality;
pub mod families;
pub mod graph;
pub mod scanner;
pub mod solver;
