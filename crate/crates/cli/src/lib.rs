//! Library half of the `bisectorc` binary: argument types, report
//! serialization and the randomized self-check suites.

pub mod args;
pub mod commands;
pub mod input;
pub mod report;
pub mod selftest;
