//! Command-line companion to `tourney-core`: input parsing, Graphviz export,
//! a worker-pool enumeration, and the exhaustive claim checkers behind
//! `tourney verify`.

pub mod dot;
pub mod parallel;
pub mod pattern;
pub mod verify;
