//! Compilation and noisy simulation for circuits encoded in multi-qubit
//! [[4,2,2]] Iceberg code patches.
//!
//! The crate is organised as a pass pipeline over a small circuit IR:
//!
//! - [`ir`] — gate set, OpenQASM-subset parser, moment scheduling and local
//!   gate cancellation.
//! - [`hcommute`] — commutes every Hadamard to the end of the circuit,
//!   leaving at most one residual H per qubit.
//! - [`merge`] — finds pairs of gates that can be applied patch-wise or
//!   transversally and resolves conflicts between overlapping merges.
//! - [`pack`] — scores qubit pairs, greedily packs qubits into patches and
//!   places patches on a 2-D grid.
//! - [`code`] — the [[4,2,2]] code itself: stabilizers, encoding/decoding
//!   circuits and the encoded gate template library with cost contracts.
//! - [`translate`] — rewrites a merged logical circuit into a physical
//!   circuit over patch qubits and parity ancillas.
//! - [`sim`] — exact state-vector oracle, tableau/Pauli-frame sampler,
//!   noise channels, post-selection and TVD/LSR metrics.
//! - [`random`] — seeded random-circuit generator used by the benchmark
//!   harness.
//! - [`pipeline`] — pass orchestration shared by the CLI and tests.

pub mod code;
pub mod hcommute;
pub mod ir;
pub mod merge;
pub mod pack;
pub mod pipeline;
pub mod random;
pub mod sim;
pub mod translate;
