use serde::{Deserialize, Serialize};

use super::{ANCILLA_QUBITS, DATA_QUBITS};

/// One code instance: four data qubit ids, two parity ancilla ids, and the
/// relabel history of its logical slots. Logical operations never act on
/// the ancillas; they are used by decoding only.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Patch {
    pub data: [usize; DATA_QUBITS],
    pub ancillas: [usize; ANCILLA_QUBITS],
    /// `slot_map[s]` is the current physical slot of logical slot `s`.
    /// Starts as the identity and flips on every relabel event.
    pub slot_map: [usize; 2],
    /// Number of relabel events applied (for diagnostics).
    pub relabels: usize,
}

impl Patch {
    /// A patch whose qubits are laid out contiguously from `base`:
    /// data `base..base+4`, X-syndrome ancilla `base+4`, Z-syndrome `base+5`.
    pub fn contiguous(base: usize) -> Self {
        Patch {
            data: [base, base + 1, base + 2, base + 3],
            ancillas: [base + 4, base + 5],
            slot_map: [0, 1],
            relabels: 0,
        }
    }

    pub fn anc_x(&self) -> usize {
        self.ancillas[0]
    }

    pub fn anc_z(&self) -> usize {
        self.ancillas[1]
    }

    /// Applies a logical slot relabel (slot 0 <-> slot 1), as induced by the
    /// patch-wise HH template.
    pub fn relabel(&mut self) {
        self.slot_map.swap(0, 1);
        self.relabels += 1;
    }

    /// Physical slot currently holding logical slot `s`.
    pub fn slot(&self, s: usize) -> usize {
        self.slot_map[s]
    }
}
