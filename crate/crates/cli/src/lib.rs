//! The pieces behind the `garnish` binary: stack-spec parsing, pipeline
//! execution, report rendering, and the dispatch microbenchmark. They live
//! in a library so integration tests can drive them directly.

pub mod bench;
pub mod pipeline;
pub mod report;
pub mod stack;
