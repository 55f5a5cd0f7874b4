//! Length generating functions of fully commutative elements in classical
//! Coxeter groups: exact series kernel, formula catalog, brute-force heap
//! enumeration and a verification harness tying them together.

pub mod exec;
pub mod series;
pub mod catalog;
pub mod oracle;
pub mod verify;
