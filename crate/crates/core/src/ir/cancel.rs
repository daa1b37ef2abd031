use super::{Gate, GateKind, LogicalCircuit, Qubit};

/// Removes adjacent self-inverse pairs (H·H, X·X, Z·Z, CX·CX, CZ·CZ,
/// XCX·XCX, SWAP·SWAP) on identical operands where no intervening gate
/// shares an operand, repeating until a fixed point. SWAP gates are
/// transparent: the tracked operands are relabeled through them before
/// matching, so e.g. `H(0) SWAP(0,1) H(1)` reduces to `SWAP(0,1)`.
pub fn cancel_adjacent(c: &LogicalCircuit) -> LogicalCircuit {
    let mut gates = c.gates.clone();
    loop {
        match find_cancelling_pair(&gates) {
            Some((i, j)) => {
                gates.remove(j);
                gates.remove(i);
            }
            None => break,
        }
    }
    LogicalCircuit {
        num_qubits: c.num_qubits,
        gates,
        measured: c.measured,
    }
}

fn find_cancelling_pair(gates: &[Gate]) -> Option<(usize, usize)> {
    for i in 0..gates.len() {
        if !gates[i].kind.is_self_inverse() {
            continue;
        }
        if let Some(j) = match_forward(gates, i) {
            return Some((i, j));
        }
    }
    None
}

/// Scans forward from gate `i` for its inverse, relabeling the tracked
/// operands through intervening SWAPs. A non-SWAP gate sharing a tracked
/// operand blocks the scan.
fn match_forward(gates: &[Gate], i: usize) -> Option<usize> {
    let g = &gates[i];
    let mut tracked: Vec<Qubit> = g.ops.clone();
    for (j, h) in gates.iter().enumerate().skip(i + 1) {
        if h.kind == GateKind::Swap && g.kind == GateKind::Swap && h.same_operands(&tracked) {
            return Some(j);
        }
        if h.kind == GateKind::Swap {
            for q in tracked.iter_mut() {
                if *q == h.ops[0] {
                    *q = h.ops[1];
                } else if *q == h.ops[1] {
                    *q = h.ops[0];
                }
            }
            continue;
        }
        if h.kind == g.kind && h.same_operands(&tracked) {
            return Some(j);
        }
        if tracked.iter().any(|&q| h.touches(q)) {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_inverse_pair_cancels() {
        let c = LogicalCircuit::with_gates(1, vec![Gate::x(0), Gate::x(0)]);
        assert!(cancel_adjacent(&c).gates.is_empty());
    }

    #[test]
    fn disjoint_interleaved_gate_does_not_block() {
        let c = LogicalCircuit::with_gates(2, vec![Gate::h(0), Gate::x(1), Gate::h(0)]);
        assert_eq!(cancel_adjacent(&c).gates, vec![Gate::x(1)]);
    }

    #[test]
    fn shared_operand_blocks() {
        let c = LogicalCircuit::with_gates(1, vec![Gate::h(0), Gate::x(0), Gate::h(0)]);
        assert_eq!(cancel_adjacent(&c).gates.len(), 3);
    }

    #[test]
    fn commutes_through_swap() {
        let c = LogicalCircuit::with_gates(2, vec![Gate::h(0), Gate::swap(0, 1), Gate::h(1)]);
        assert_eq!(cancel_adjacent(&c).gates, vec![Gate::swap(0, 1)]);
    }

    #[test]
    fn cx_through_swap() {
        let c = LogicalCircuit::with_gates(
            3,
            vec![Gate::cx(0, 1), Gate::swap(1, 2), Gate::cx(0, 2)],
        );
        assert_eq!(cancel_adjacent(&c).gates, vec![Gate::swap(1, 2)]);
    }

    #[test]
    fn swap_pair_with_disjoint_interleaving() {
        let c = LogicalCircuit::with_gates(
            3,
            vec![Gate::swap(0, 1), Gate::x(2), Gate::swap(0, 1)],
        );
        assert_eq!(cancel_adjacent(&c).gates, vec![Gate::x(2)]);
    }

    #[test]
    fn cz_matches_either_operand_order() {
        let c = LogicalCircuit::with_gates(2, vec![Gate::cz(0, 1), Gate::cz(1, 0)]);
        assert!(cancel_adjacent(&c).gates.is_empty());
    }

    #[test]
    fn cx_direction_matters() {
        let c = LogicalCircuit::with_gates(2, vec![Gate::cx(0, 1), Gate::cx(1, 0)]);
        assert_eq!(cancel_adjacent(&c).gates.len(), 2);
    }

    #[test]
    fn cascading_cancellation_reaches_fixed_point() {
        // X H H X -> X X -> empty
        let c = LogicalCircuit::with_gates(
            1,
            vec![Gate::x(0), Gate::h(0), Gate::h(0), Gate::x(0)],
        );
        assert!(cancel_adjacent(&c).gates.is_empty());
    }
}
