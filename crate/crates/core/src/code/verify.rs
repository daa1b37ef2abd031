//! State-vector conjugation oracle for the template library.

use num_complex::Complex64 as C64;

use super::templates::{expected_cost, Cost, GateTemplate, ENCODE_SOURCE_SLOTS};
use super::{encoding_gates, Variant};
use crate::code::PhysGate;
use crate::ir::{Gate, LogicalCircuit};
use crate::sim::statevector::{unitary_distance_up_to_phase, StateVector};

pub const VERIFY_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub logical_ok: bool,
    pub cost_ok: bool,
    pub codespace_ok: bool,
    pub derived: Cost,
    pub expected: Option<Cost>,
    pub max_deviation: f64,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.logical_ok && self.cost_ok && self.codespace_ok
    }
}

/// Encoded computational-basis states of `n_patches` patches over data
/// qubits only (patch p occupies qubits 4p..4p+4). Logical bit `2p + s` of
/// the basis index is slot `s` of patch `p`.
pub fn encoded_basis(n_patches: usize) -> Vec<StateVector> {
    let nq = 4 * n_patches;
    let n_logical = 2 * n_patches;
    let mut basis = Vec::with_capacity(1 << n_logical);
    for idx in 0..(1usize << n_logical) {
        let mut sv = StateVector::zero(nq).expect("within cap");
        for p in 0..n_patches {
            for s in 0..2 {
                if (idx >> (2 * p + s)) & 1 == 1 {
                    sv.apply_phys(&PhysGate::X(4 * p + ENCODE_SOURCE_SLOTS[s]));
                }
            }
            for g in encoding_gates(4 * p) {
                sv.apply_phys(&g);
            }
        }
        basis.push(sv);
    }
    basis
}

/// Exact conjugation check: encodes a basis of logical states, applies the
/// template, and compares the resulting logical action (including declared
/// relabels) against the intended logical unitary up to global phase. The
/// derived cost is checked against the contracted cost table.
pub fn verify_template(t: &GateTemplate) -> VerifyReport {
    let n_patches = if t.uses_patch_b() || matches!(t.variant, Variant::Inter | Variant::Transversal)
    {
        2
    } else {
        1
    };
    let n_logical = 2 * n_patches;
    let dim = 1usize << n_logical;
    let basis = encoded_basis(n_patches);

    // Logical action matrix L[r][c] = <enc_r | U | enc_c>.
    let mut l = vec![vec![C64::new(0.0, 0.0); dim]; dim];
    let mut codespace_ok = true;
    for c in 0..dim {
        let mut sv = basis[c].clone();
        for g in &t.seq {
            sv.apply_phys(g);
        }
        let mut col_norm = 0.0;
        for r in 0..dim {
            let amp: C64 = basis[r]
                .amps
                .iter()
                .zip(sv.amps.iter())
                .map(|(b, s)| b.conj() * s)
                .sum();
            col_norm += amp.norm_sqr();
            l[r][c] = amp;
        }
        if (col_norm - 1.0).abs() > VERIFY_TOL {
            codespace_ok = false;
        }
    }

    // Intended logical unitary, with relabels applied after the gates.
    let mut gates: Vec<Gate> = t.logical.clone();
    if t.relabel_a {
        gates.push(Gate::swap(0, 1));
    }
    if t.relabel_b {
        gates.push(Gate::swap(2, 3));
    }
    let logical_circuit = LogicalCircuit::with_gates(n_logical, gates);
    let expected_u = crate::sim::circuit_unitary(&logical_circuit).expect("small");
    let max_deviation = unitary_distance_up_to_phase(&expected_u, &l);

    let derived = t.cost();
    let expected = expected_cost(t.kind, t.variant);
    VerifyReport {
        logical_ok: max_deviation < VERIFY_TOL,
        cost_ok: expected.map_or(true, |e| e == derived),
        codespace_ok,
        derived,
        expected,
        max_deviation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::templates::all_table_rows;
    use crate::ir::GateKind;

    #[test]
    fn every_table_row_verifies() {
        for t in all_table_rows() {
            let r = verify_template(&t);
            assert!(
                r.pass(),
                "{:?} {:?} failed: logical={} cost={} codespace={} dev={:.2e} derived={:?} expected={:?}",
                t.kind,
                t.variant,
                r.logical_ok,
                r.cost_ok,
                r.codespace_ok,
                r.max_deviation,
                r.derived,
                r.expected
            );
        }
    }

    #[test]
    fn corrupted_template_fails() {
        let mut t = crate::code::template(GateKind::H, Variant::Targeted, &[0]).unwrap();
        t.seq.pop();
        let r = verify_template(&t);
        assert!(!r.pass());
    }

    #[test]
    fn identity_template_passes() {
        let t = GateTemplate {
            kind: GateKind::X,
            variant: Variant::Targeted,
            seq: vec![],
            logical: vec![],
            relabel_a: false,
            relabel_b: false,
        };
        let r = verify_template(&t);
        assert!(r.logical_ok && r.codespace_ok);
    }

    #[test]
    fn all_position_variants_verify() {
        use crate::code::templates::{inter_directed, transversal_directed};
        use GateKind::*;
        for kind in [X, Z, S, Sx, H, Rx(1.1), Rz(-0.4)] {
            for slot in 0..2 {
                let t = crate::code::template(kind, Variant::Targeted, &[slot]).unwrap();
                let r = verify_template(&t);
                assert!(r.pass(), "{:?} targeted slot {} dev={:.2e}", kind, slot, r.max_deviation);
            }
        }
        for kind in [Cx, Cz, Xcx] {
            for (a, b) in [(0, 1), (1, 0)] {
                let t = crate::code::template(kind, Variant::Intra, &[a, b]).unwrap();
                assert!(verify_template(&t).pass(), "{:?} intra {}->{}", kind, a, b);
            }
            for a_slot in 0..2 {
                for b_slot in 0..2 {
                    for a_ctrl in [true, false] {
                        let t = inter_directed(kind, a_slot, b_slot, a_ctrl);
                        let r = verify_template(&t);
                        assert!(
                            r.pass(),
                            "{:?} inter a{} b{} actrl={} dev={:.2e}",
                            kind,
                            a_slot,
                            b_slot,
                            a_ctrl,
                            r.max_deviation
                        );
                    }
                }
            }
            for aligned in [true, false] {
                for a_ctrl in [true, false] {
                    let t = transversal_directed(kind, aligned, a_ctrl);
                    let r = verify_template(&t);
                    assert!(
                        r.pass(),
                        "{:?} transversal aligned={} actrl={} dev={:.2e}",
                        kind,
                        aligned,
                        a_ctrl,
                        r.max_deviation
                    );
                }
            }
        }
    }
}
