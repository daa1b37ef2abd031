//! Dense state-vector simulation, the ground-truth oracle for every
//! equivalence check in the crate. Capped at 14 qubits (16384 amplitudes);
//! unitary extraction is capped at 7 qubits.

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::code::PhysGate;
use crate::ir::{Gate, GateKind, LogicalCircuit};

pub const MAX_QUBITS: usize = 14;
pub const MAX_UNITARY_QUBITS: usize = 7;

#[derive(Debug, Error)]
pub enum StateVectorError {
    #[error("{0} qubits exceed the dense-simulation cap of {1}")]
    TooLarge(usize, usize),
}

/// Basis convention: amplitude index bit `q` holds the state of qubit `q`
/// (qubit 0 is the least significant bit).
#[derive(Clone, Debug)]
pub struct StateVector {
    pub n: usize,
    pub amps: Vec<C64>,
}

pub type M2 = [[C64; 2]; 2];
pub type M4 = [[C64; 4]; 4];

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn mat_h() -> M2 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [[c(s, 0.), c(s, 0.)], [c(s, 0.), c(-s, 0.)]]
}
pub fn mat_x() -> M2 {
    [[c(0., 0.), c(1., 0.)], [c(1., 0.), c(0., 0.)]]
}
pub fn mat_z() -> M2 {
    [[c(1., 0.), c(0., 0.)], [c(0., 0.), c(-1., 0.)]]
}
pub fn mat_s() -> M2 {
    [[c(1., 0.), c(0., 0.)], [c(0., 0.), c(0., 1.)]]
}
pub fn mat_sdg() -> M2 {
    [[c(1., 0.), c(0., 0.)], [c(0., 0.), c(0., -1.)]]
}
pub fn mat_sx() -> M2 {
    [
        [c(0.5, 0.5), c(0.5, -0.5)],
        [c(0.5, -0.5), c(0.5, 0.5)],
    ]
}
pub fn mat_sxdg() -> M2 {
    [
        [c(0.5, -0.5), c(0.5, 0.5)],
        [c(0.5, 0.5), c(0.5, -0.5)],
    ]
}
pub fn mat_rx(theta: f64) -> M2 {
    let (s, co) = (theta / 2.).sin_cos();
    [[c(co, 0.), c(0., -s)], [c(0., -s), c(co, 0.)]]
}
pub fn mat_rz(theta: f64) -> M2 {
    let (s, co) = (theta / 2.).sin_cos();
    [[c(co, -s), c(0., 0.)], [c(0., 0.), c(co, s)]]
}

/// Two-qubit matrices act on local index `bit(first) + 2*bit(second)`.
pub fn mat_cx() -> M4 {
    // first operand = control, second = target
    let z = c(0., 0.);
    let o = c(1., 0.);
    [
        [o, z, z, z],
        [z, z, z, o],
        [z, z, o, z],
        [z, o, z, z],
    ]
}
pub fn mat_cz() -> M4 {
    let z = c(0., 0.);
    let o = c(1., 0.);
    [
        [o, z, z, z],
        [z, o, z, z],
        [z, z, o, z],
        [z, z, z, -o],
    ]
}
pub fn mat_swap() -> M4 {
    let z = c(0., 0.);
    let o = c(1., 0.);
    [
        [o, z, z, z],
        [z, z, o, z],
        [z, o, z, z],
        [z, z, z, o],
    ]
}
/// XCX from the identity (H⊗H)·CZ·(H⊗H).
pub fn mat_xcx() -> M4 {
    let h = mat_h();
    let mut hh = [[c(0., 0.); 4]; 4];
    for r in 0..4 {
        for col in 0..4 {
            hh[r][col] = h[r & 1][col & 1] * h[r >> 1][col >> 1];
        }
    }
    mat_mul4(&mat_mul4(&hh, &mat_cz()), &hh)
}

fn mat_mul4(a: &M4, b: &M4) -> M4 {
    let mut out = [[c(0., 0.); 4]; 4];
    for r in 0..4 {
        for cc in 0..4 {
            let mut acc = c(0., 0.);
            for k in 0..4 {
                acc += a[r][k] * b[k][cc];
            }
            out[r][cc] = acc;
        }
    }
    out
}

impl StateVector {
    /// |0...0⟩ on `n` qubits.
    pub fn zero(n: usize) -> Result<Self, StateVectorError> {
        if n > MAX_QUBITS {
            return Err(StateVectorError::TooLarge(n, MAX_QUBITS));
        }
        let mut amps = vec![c(0., 0.); 1 << n];
        amps[0] = c(1., 0.);
        Ok(StateVector { n, amps })
    }

    pub fn from_amps(n: usize, amps: Vec<C64>) -> Self {
        assert_eq!(amps.len(), 1 << n);
        StateVector { n, amps }
    }

    pub fn apply_1q(&mut self, m: &M2, q: usize) {
        debug_assert!(q < self.n);
        let bit = 1usize << q;
        for base in 0..self.amps.len() {
            if base & bit != 0 {
                continue;
            }
            let a0 = self.amps[base];
            let a1 = self.amps[base | bit];
            self.amps[base] = m[0][0] * a0 + m[0][1] * a1;
            self.amps[base | bit] = m[1][0] * a0 + m[1][1] * a1;
        }
    }

    pub fn apply_2q(&mut self, m: &M4, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        let ba = 1usize << a;
        let bb = 1usize << b;
        for base in 0..self.amps.len() {
            if base & ba != 0 || base & bb != 0 {
                continue;
            }
            let idx = [base, base | ba, base | bb, base | ba | bb];
            let old = [
                self.amps[idx[0]],
                self.amps[idx[1]],
                self.amps[idx[2]],
                self.amps[idx[3]],
            ];
            for r in 0..4 {
                let mut acc = c(0., 0.);
                for k in 0..4 {
                    acc += m[r][k] * old[k];
                }
                self.amps[idx[r]] = acc;
            }
        }
    }

    /// Applies a logical gate; macros act by their logical meaning.
    pub fn apply_gate(&mut self, g: &Gate) {
        use GateKind::*;
        match g.kind {
            H => self.apply_1q(&mat_h(), g.ops[0]),
            X => self.apply_1q(&mat_x(), g.ops[0]),
            Z => self.apply_1q(&mat_z(), g.ops[0]),
            S => self.apply_1q(&mat_s(), g.ops[0]),
            Sx => self.apply_1q(&mat_sx(), g.ops[0]),
            Rx(t) => self.apply_1q(&mat_rx(t), g.ops[0]),
            Rz(t) => self.apply_1q(&mat_rz(t), g.ops[0]),
            Cx => self.apply_2q(&mat_cx(), g.ops[0], g.ops[1]),
            Cz => self.apply_2q(&mat_cz(), g.ops[0], g.ops[1]),
            Xcx => self.apply_2q(&mat_xcx(), g.ops[0], g.ops[1]),
            Swap => self.apply_2q(&mat_swap(), g.ops[0], g.ops[1]),
            Hh => {
                for &q in &g.ops {
                    self.apply_1q(&mat_h(), q);
                }
            }
            Xx => {
                for &q in &g.ops {
                    self.apply_1q(&mat_x(), q);
                }
            }
            Zz => {
                for &q in &g.ops {
                    self.apply_1q(&mat_z(), q);
                }
            }
            MergedCx => {
                self.apply_2q(&mat_cx(), g.ops[0], g.ops[1]);
                self.apply_2q(&mat_cx(), g.ops[2], g.ops[3]);
            }
            MergedCz => {
                self.apply_2q(&mat_cz(), g.ops[0], g.ops[1]);
                self.apply_2q(&mat_cz(), g.ops[2], g.ops[3]);
            }
            MergedXcx => {
                self.apply_2q(&mat_xcx(), g.ops[0], g.ops[1]);
                self.apply_2q(&mat_xcx(), g.ops[2], g.ops[3]);
            }
        }
    }

    pub fn apply_circuit(&mut self, c: &LogicalCircuit) {
        for g in &c.gates {
            self.apply_gate(g);
        }
    }

    pub fn apply_phys(&mut self, g: &PhysGate) {
        use PhysGate::*;
        match *g {
            H(q) => self.apply_1q(&mat_h(), q),
            X(q) => self.apply_1q(&mat_x(), q),
            Z(q) => self.apply_1q(&mat_z(), q),
            S(q) => self.apply_1q(&mat_s(), q),
            Sdg(q) => self.apply_1q(&mat_sdg(), q),
            Sx(q) => self.apply_1q(&mat_sx(), q),
            Sxdg(q) => self.apply_1q(&mat_sxdg(), q),
            Rx(q, t) => self.apply_1q(&mat_rx(t), q),
            Rz(q, t) => self.apply_1q(&mat_rz(t), q),
            Cx(a, b) => self.apply_2q(&mat_cx(), a, b),
            Cz(a, b) => self.apply_2q(&mat_cz(), a, b),
        }
    }

    /// Born probabilities over the full computational basis.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// ⟨ψ|P|ψ⟩ for a Pauli string given as per-qubit characters from
    /// {I, X, Y, Z}.
    pub fn pauli_expectation(&self, paulis: &[(usize, char)]) -> C64 {
        let mut phi = self.clone();
        for &(q, p) in paulis {
            match p {
                'X' => phi.apply_1q(&mat_x(), q),
                'Y' => {
                    let y = [[c(0., 0.), c(0., -1.)], [c(0., 1.), c(0., 0.)]];
                    phi.apply_1q(&y, q)
                }
                'Z' => phi.apply_1q(&mat_z(), q),
                _ => {}
            }
        }
        self.amps
            .iter()
            .zip(phi.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// Dense unitary of a qubit-count-limited operation, built column by column.
pub fn unitary_of(
    n: usize,
    mut apply: impl FnMut(&mut StateVector),
) -> Result<Vec<Vec<C64>>, StateVectorError> {
    if n > MAX_UNITARY_QUBITS {
        return Err(StateVectorError::TooLarge(n, MAX_UNITARY_QUBITS));
    }
    let dim = 1usize << n;
    let mut cols = Vec::with_capacity(dim);
    for b in 0..dim {
        let mut amps = vec![c(0., 0.); dim];
        amps[b] = c(1., 0.);
        let mut sv = StateVector::from_amps(n, amps);
        apply(&mut sv);
        cols.push(sv.amps);
    }
    // transpose: cols[b][r] -> u[r][b]
    let mut u = vec![vec![c(0., 0.); dim]; dim];
    for (b, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            u[r][b] = *v;
        }
    }
    Ok(u)
}

pub fn circuit_unitary(cir: &LogicalCircuit) -> Result<Vec<Vec<C64>>, StateVectorError> {
    unitary_of(cir.num_qubits, |sv| sv.apply_circuit(cir))
}

/// Equality up to global phase: returns the maximum entry-wise deviation
/// after aligning phases on the largest entry of `a`.
pub fn unitary_distance_up_to_phase(a: &[Vec<C64>], b: &[Vec<C64>]) -> f64 {
    let dim = a.len();
    let mut best = (0usize, 0usize);
    let mut mag = 0.0;
    for r in 0..dim {
        for cc in 0..dim {
            if a[r][cc].norm() > mag {
                mag = a[r][cc].norm();
                best = (r, cc);
            }
        }
    }
    if mag < 1e-12 {
        return f64::INFINITY;
    }
    let (r0, c0) = best;
    if b[r0][c0].norm() < 1e-12 {
        return f64::INFINITY;
    }
    let phase = a[r0][c0] / b[r0][c0];
    let phase = phase / C64::new(phase.norm(), 0.0);
    let mut worst: f64 = 0.0;
    for r in 0..dim {
        for cc in 0..dim {
            worst = worst.max((a[r][cc] - b[r][cc] * phase).norm());
        }
    }
    worst
}

pub fn circuits_equal_up_to_phase(a: &LogicalCircuit, b: &LogicalCircuit, tol: f64) -> bool {
    assert_eq!(a.num_qubits, b.num_qubits);
    let ua = circuit_unitary(a).expect("unitary cap");
    let ub = circuit_unitary(b).expect("unitary cap");
    unitary_distance_up_to_phase(&ua, &ub) < tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::Gate;

    #[test]
    fn h_on_zero_gives_plus() {
        let mut sv = StateVector::zero(1).unwrap();
        sv.apply_gate(&Gate::h(0));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((sv.amps[0] - c(s, 0.)).norm() < 1e-12);
        assert!((sv.amps[1] - c(s, 0.)).norm() < 1e-12);
    }

    #[test]
    fn xcx_equals_hh_cz_hh() {
        let direct = LogicalCircuit::with_gates(2, vec![Gate::xcx(0, 1)]);
        let expanded = LogicalCircuit::with_gates(
            2,
            vec![
                Gate::h(0),
                Gate::h(1),
                Gate::cz(0, 1),
                Gate::h(0),
                Gate::h(1),
            ],
        );
        assert!(circuits_equal_up_to_phase(&direct, &expanded, 1e-10));
    }

    #[test]
    fn hsh_is_sx() {
        let a = LogicalCircuit::with_gates(1, vec![Gate::h(0), Gate::s(0), Gate::h(0)]);
        let b = LogicalCircuit::with_gates(1, vec![Gate::sx(0)]);
        assert!(circuits_equal_up_to_phase(&a, &b, 1e-10));
    }

    #[test]
    fn rejects_too_large() {
        assert!(StateVector::zero(15).is_err());
        assert!(unitary_of(8, |_| {}).is_err());
    }

    #[test]
    fn sx_sxdg_inverse() {
        let mut sv = StateVector::zero(1).unwrap();
        sv.apply_phys(&PhysGate::Sx(0));
        sv.apply_phys(&PhysGate::Sxdg(0));
        assert!((sv.amps[0] - c(1., 0.)).norm() < 1e-12);
    }
}
