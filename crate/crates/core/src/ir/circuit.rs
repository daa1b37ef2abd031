use serde::{Deserialize, Serialize};

use super::{Gate, Qubit};

/// An ordered gate list over `num_qubits` program qubits.
///
/// Values are immutable after construction; passes produce new circuits.
/// `measured` records whether the source program ended with a terminal
/// full-register measurement (the translator re-attaches measurement
/// regardless).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogicalCircuit {
    pub num_qubits: usize,
    pub gates: Vec<Gate>,
    pub measured: bool,
}

impl LogicalCircuit {
    pub fn new(num_qubits: usize) -> Self {
        LogicalCircuit {
            num_qubits,
            gates: Vec::new(),
            measured: false,
        }
    }

    pub fn with_gates(num_qubits: usize, gates: Vec<Gate>) -> Self {
        for g in &gates {
            for &q in &g.ops {
                assert!(q < num_qubits, "operand {} out of range (n={})", q, num_qubits);
            }
        }
        LogicalCircuit {
            num_qubits,
            gates,
            measured: false,
        }
    }

    pub fn push(&mut self, g: Gate) {
        for &q in &g.ops {
            assert!(q < self.num_qubits);
        }
        self.gates.push(g);
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Gate indices touching qubit `q`, in circuit order.
    pub fn timeline(&self, q: Qubit) -> Vec<usize> {
        self.gates
            .iter()
            .enumerate()
            .filter(|(_, g)| g.touches(q))
            .map(|(i, _)| i)
            .collect()
    }

    /// Relabels qubits: gate operands `q` become `perm[q]`.
    pub fn permuted(&self, perm: &[Qubit]) -> LogicalCircuit {
        assert_eq!(perm.len(), self.num_qubits);
        let gates = self
            .gates
            .iter()
            .map(|g| Gate::new(g.kind, g.ops.iter().map(|&q| perm[q]).collect()))
            .collect();
        LogicalCircuit {
            num_qubits: self.num_qubits,
            gates,
            measured: self.measured,
        }
    }
}
