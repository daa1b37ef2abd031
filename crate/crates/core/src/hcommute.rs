//! Hadamard commutation.
//!
//! Every H is pushed rightward through the circuit as a per-qubit frame,
//! rewriting the basis of each gate it passes (X↔Z, S↔SX, Rx↔Rz, CX↔CZ/XCX).
//! Frames toggle on H gates, so pairs cancel; at the end of the pass at most
//! one residual H per qubit remains, appended at the circuit tail.

use thiserror::Error;

use crate::ir::{Gate, GateKind, LogicalCircuit, Qubit};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("qubit {0} is not an operand of the gate")]
pub struct NotAnOperand(pub Qubit);

/// Rewrites `g` as H_q · g · H_q within the gate set. `q` must be an
/// operand and `g` must not itself be an H. SWAP is returned unchanged
/// (the frame follows the relabeled qubit instead).
pub fn conjugate_by_h(g: &Gate, q: Qubit) -> Result<Gate, NotAnOperand> {
    use GateKind::*;
    if !g.touches(q) {
        return Err(NotAnOperand(q));
    }
    let other = || -> Qubit {
        if g.ops[0] == q {
            g.ops[1]
        } else {
            g.ops[0]
        }
    };
    Ok(match g.kind {
        X => Gate::z(q),
        Z => Gate::x(q),
        S => Gate::sx(q),
        Sx => Gate::s(q),
        Rx(t) => Gate::rz(t, q),
        Rz(t) => Gate::rx(t, q),
        Cx => {
            if g.ops[0] == q {
                // control conjugated: CX -> XCX
                Gate::xcx(g.ops[0], g.ops[1])
            } else {
                // target conjugated: CX -> CZ
                Gate::cz(g.ops[0], g.ops[1])
            }
        }
        Cz => Gate::cx(other(), q),
        Xcx => Gate::cx(q, other()),
        Swap => g.clone(),
        H => panic!("conjugate_by_h is undefined for H itself"),
        _ => panic!("macro kinds cannot be conjugated: {:?}", g.kind),
    })
}

/// Commutes all Hadamards to the end of the circuit. The output carries at
/// most one H per qubit, all at the tail, and equals the input unitary up
/// to global phase.
pub fn commute_hadamards(c: &LogicalCircuit) -> LogicalCircuit {
    let mut frame = vec![false; c.num_qubits];
    let mut out = Vec::with_capacity(c.gates.len());
    for g in &c.gates {
        match g.kind {
            GateKind::H => {
                frame[g.ops[0]] = !frame[g.ops[0]];
            }
            GateKind::Swap => {
                frame.swap(g.ops[0], g.ops[1]);
                out.push(g.clone());
            }
            _ => {
                let mut cur = g.clone();
                for &q in &g.ops {
                    if frame[q] {
                        cur = conjugate_by_h(&cur, q).expect("operand invariant");
                    }
                }
                out.push(cur);
            }
        }
    }
    for (q, &f) in frame.iter().enumerate() {
        if f {
            out.push(Gate::h(q));
        }
    }
    LogicalCircuit {
        num_qubits: c.num_qubits,
        gates: out,
        measured: c.measured,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::circuits_equal_up_to_phase;

    #[test]
    fn h_pair_cancels() {
        let c = LogicalCircuit::with_gates(1, vec![Gate::h(0), Gate::h(0)]);
        assert!(commute_hadamards(&c).gates.is_empty());
    }

    #[test]
    fn conjugation_rules() {
        assert_eq!(conjugate_by_h(&Gate::x(3), 3).unwrap(), Gate::z(3));
        assert_eq!(conjugate_by_h(&Gate::z(3), 3).unwrap(), Gate::x(3));
        assert_eq!(conjugate_by_h(&Gate::s(1), 1).unwrap(), Gate::sx(1));
        assert_eq!(conjugate_by_h(&Gate::sx(1), 1).unwrap(), Gate::s(1));
        assert_eq!(
            conjugate_by_h(&Gate::rx(0.3, 0), 0).unwrap(),
            Gate::rz(0.3, 0)
        );
        // CX with q=control -> XCX; q=target -> CZ
        assert_eq!(conjugate_by_h(&Gate::cx(0, 1), 0).unwrap(), Gate::xcx(0, 1));
        assert_eq!(conjugate_by_h(&Gate::cx(0, 1), 1).unwrap(), Gate::cz(0, 1));
        // CZ: q becomes the target of a CX
        assert_eq!(conjugate_by_h(&Gate::cz(0, 1), 1).unwrap(), Gate::cx(0, 1));
        assert_eq!(conjugate_by_h(&Gate::cz(0, 1), 0).unwrap(), Gate::cx(1, 0));
        // XCX: q becomes the control of a CX
        assert_eq!(conjugate_by_h(&Gate::xcx(0, 1), 0).unwrap(), Gate::cx(0, 1));
        assert_eq!(conjugate_by_h(&Gate::xcx(0, 1), 1).unwrap(), Gate::cx(1, 0));
        assert_eq!(
            conjugate_by_h(&Gate::swap(0, 1), 0).unwrap(),
            Gate::swap(0, 1)
        );
        assert_eq!(conjugate_by_h(&Gate::x(2), 0), Err(NotAnOperand(0)));
    }

    #[test]
    fn conjugation_is_unitary_exact() {
        // H_q g H_q must equal the rewritten gate on the full 2-qubit space.
        let cases: Vec<(Gate, Qubit)> = vec![
            (Gate::x(0), 0),
            (Gate::z(0), 0),
            (Gate::s(0), 0),
            (Gate::sx(0), 0),
            (Gate::rx(0.7, 0), 0),
            (Gate::rz(-1.2, 0), 0),
            (Gate::cx(0, 1), 0),
            (Gate::cx(0, 1), 1),
            (Gate::cz(0, 1), 0),
            (Gate::cz(0, 1), 1),
            (Gate::xcx(0, 1), 0),
            (Gate::xcx(0, 1), 1),
        ];
        for (g, q) in cases {
            let lhs = LogicalCircuit::with_gates(2, vec![Gate::h(q), g.clone(), Gate::h(q)]);
            let rhs =
                LogicalCircuit::with_gates(2, vec![conjugate_by_h(&g, q).unwrap()]);
            assert!(
                circuits_equal_up_to_phase(&lhs, &rhs, 1e-10),
                "conjugation mismatch for {:?} on {}",
                g,
                q
            );
        }
    }

    #[test]
    fn figure_pattern_three_hadamards_to_one() {
        // Top qubit: H ... X->Z, CX->XCX ... cancels a later H.
        // Bottom qubit: X->Z, CZ->CX, frame reaches the end.
        let c = LogicalCircuit::with_gates(
            2,
            vec![
                Gate::h(0),
                Gate::x(0),
                Gate::cx(0, 1),
                Gate::h(0),
                Gate::h(1),
                Gate::x(1),
                Gate::cz(0, 1),
            ],
        );
        let out = commute_hadamards(&c);
        let n_h = out
            .gates
            .iter()
            .filter(|g| g.kind == GateKind::H)
            .count();
        assert_eq!(n_h, 1);
        assert_eq!(
            out.gates,
            vec![
                Gate::z(0),
                Gate::xcx(0, 1),
                Gate::z(1),
                Gate::cx(0, 1),
                Gate::h(1),
            ]
        );
        assert!(circuits_equal_up_to_phase(&c, &out, 1e-10));
    }

    #[test]
    fn swap_moves_the_frame() {
        let c = LogicalCircuit::with_gates(2, vec![Gate::h(0), Gate::swap(0, 1), Gate::x(1)]);
        let out = commute_hadamards(&c);
        // frame follows qubit through the swap: X on 1 becomes Z on 1
        assert_eq!(out.gates, vec![Gate::swap(0, 1), Gate::z(1), Gate::h(1)]);
        assert!(circuits_equal_up_to_phase(&c, &out, 1e-10));
    }
}
