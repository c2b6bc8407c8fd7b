//! Exact q,t-enumeration of decorated labelled lattice paths, the schedule
//! product formula for valley-decorated square paths, and the Macdonald
//! operator calculus needed to compare both sides of the Delta and Delta
//! square identities.

pub mod qt;
pub mod partition;
pub mod paths;
pub mod schedule;
pub mod symfunc;
pub mod verify;
