//! Exhaustive enumeration of admissible Kupisch series and the
//! theorem-verification harness behind the `nakayama` CLI.

pub mod enumerate;
pub mod verify;
