//! The [[4,2,2]] Iceberg code.
//!
//! Convention (0-indexed data qubits within a patch):
//!
//! - stabilizers `S_X = X0 X1 X2 X3`, `S_Z = Z0 Z1 Z2 Z3`
//! - logical slot 0: `X̄ = X0 X1`, `Z̄ = Z0 Z2`
//! - logical slot 1: `X̄ = X0 X2`, `Z̄ = Z0 Z1`
//!
//! Codewords are the even-parity strings; the logical readout of slot 0 is
//! `c0 ⊕ c2` and of slot 1 is `c0 ⊕ c1`. Logical operations never touch the
//! two parity ancillas; only decoding does.

mod patch;
mod phys;
mod templates;
mod verify;

pub use patch::Patch;
pub use phys::{phys_counts, phys_depth, PhysGate};
pub use templates::{
    all_table_rows, encoding_gates, decoding_gates, expected_cost, library_json, template,
    Cost, DecodePlan, GateTemplate, TemplateError, Variant, ENCODE_SOURCE_SLOTS,
};
pub use verify::{verify_template, VerifyReport};

/// Code parameters of the [[4,2,2]] member of the [[n, n-2, 2]] family.
#[derive(Clone, Copy, Debug)]
pub struct CodeParams {
    pub n_code: usize,
    pub k: usize,
    pub d: usize,
}

impl Default for CodeParams {
    fn default() -> Self {
        CodeParams { n_code: 4, k: 2, d: 2 }
    }
}

impl CodeParams {
    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n_code as f64
    }
}

/// Per-slot logical X supports over data qubits 0..4.
pub const X_SUPPORT: [[usize; 2]; 2] = [[0, 1], [0, 2]];
/// Per-slot logical Z supports.
pub const Z_SUPPORT: [[usize; 2]; 2] = [[0, 2], [0, 1]];

/// Data qubits per patch.
pub const DATA_QUBITS: usize = 4;
/// Parity ancillas per patch (X-syndrome, Z-syndrome).
pub const ANCILLA_QUBITS: usize = 2;
/// Total physical qubits per patch.
pub const PATCH_QUBITS: usize = DATA_QUBITS + ANCILLA_QUBITS;

/// Logical readout of both slots from a 4-bit data string.
pub fn logical_readout(data: [u8; 4]) -> (u8, u8) {
    (data[0] ^ data[2], data[0] ^ data[1])
}

/// Detection predicate: both syndrome bits clear and the data string is one
/// of the 8 valid (even-parity) codewords.
pub fn accept(syndrome_x: u8, syndrome_z: u8, data: [u8; 4]) -> bool {
    syndrome_x == 0 && syndrome_z == 0 && (data[0] ^ data[1] ^ data[2] ^ data[3]) == 0
}
