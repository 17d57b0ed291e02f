//! Nothing lives here; the crate exists to host `benches/dispatch.rs`,
//! which compares the per-call cost of the dispatch mechanisms.
