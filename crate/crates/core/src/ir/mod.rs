//! Circuit intermediate representation.
//!
//! A [`LogicalCircuit`] is an ordered list of gates over program qubits in
//! the gate set {H, X, Z, S, SX, Rx, Rz, CX, CZ, XCX, SWAP}. Compiled
//! circuits may additionally contain patch-wise macros (HH, XX, ZZ) and
//! merged transversal two-qubit macros, which never appear in freshly
//! parsed circuits.

mod cancel;
mod circuit;
mod gate;
mod parse;
mod schedule;

pub use cancel::cancel_adjacent;
pub use circuit::LogicalCircuit;
pub use gate::{Gate, GateKind, Qubit};
pub use parse::{emit_qasm, parse_qasm, ParseError};
pub use schedule::{depth, moments};
