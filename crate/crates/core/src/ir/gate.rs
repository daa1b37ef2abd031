use serde::{Deserialize, Serialize};

pub type Qubit = usize;

/// Gate vocabulary.
///
/// The first eleven kinds are the input gate set. `Hh`, `Xx`, `Zz` are
/// patch-wise macros and `MergedCx`/`MergedCz`/`MergedXcx` are transversal
/// two-qubit macros; all six are introduced by the merge pass only.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum GateKind {
    H,
    X,
    Z,
    S,
    Sx,
    Rx(f64),
    Rz(f64),
    Cx,
    Cz,
    Xcx,
    Swap,
    Hh,
    Xx,
    Zz,
    MergedCx,
    MergedCz,
    MergedXcx,
}

impl GateKind {
    /// Number of operands the kind accepts. Patch-wise macros take two
    /// qubits normally and one when applied to a solo patch.
    pub fn arity(&self) -> std::ops::RangeInclusive<usize> {
        use GateKind::*;
        match self {
            H | X | Z | S | Sx | Rx(_) | Rz(_) => 1..=1,
            Cx | Cz | Xcx | Swap => 2..=2,
            Hh | Xx | Zz => 1..=2,
            MergedCx | MergedCz | MergedXcx => 4..=4,
        }
    }

    pub fn is_macro(&self) -> bool {
        use GateKind::*;
        matches!(self, Hh | Xx | Zz | MergedCx | MergedCz | MergedXcx)
    }

    /// Self-inverse kinds participate in adjacent-pair cancellation.
    pub fn is_self_inverse(&self) -> bool {
        use GateKind::*;
        matches!(self, H | X | Z | Cx | Cz | Xcx | Swap)
    }

    /// For two-qubit kinds, whether the operand order is irrelevant.
    pub fn symmetric(&self) -> bool {
        use GateKind::*;
        matches!(self, Cz | Xcx | Swap)
    }

    pub fn name(&self) -> &'static str {
        use GateKind::*;
        match self {
            H => "h",
            X => "x",
            Z => "z",
            S => "s",
            Sx => "sx",
            Rx(_) => "rx",
            Rz(_) => "rz",
            Cx => "cx",
            Cz => "cz",
            Xcx => "xcx",
            Swap => "swap",
            Hh => "hh",
            Xx => "xx",
            Zz => "zz",
            MergedCx => "mcx",
            MergedCz => "mcz",
            MergedXcx => "mxcx",
        }
    }
}

/// A gate with ordered operands. For `Cx` the operands are
/// (control, target); merged macros carry (a1, b1, a2, b2) where (a1, b1)
/// and (a2, b2) are the two constituent gates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub ops: Vec<Qubit>,
}

impl Gate {
    pub fn new(kind: GateKind, ops: Vec<Qubit>) -> Self {
        assert!(
            kind.arity().contains(&ops.len()),
            "operand count {} invalid for {:?}",
            ops.len(),
            kind
        );
        for i in 0..ops.len() {
            for j in i + 1..ops.len() {
                assert_ne!(ops[i], ops[j], "operands must be distinct: {:?} {:?}", kind, ops);
            }
        }
        Gate { kind, ops }
    }

    pub fn h(q: Qubit) -> Self {
        Gate::new(GateKind::H, vec![q])
    }
    pub fn x(q: Qubit) -> Self {
        Gate::new(GateKind::X, vec![q])
    }
    pub fn z(q: Qubit) -> Self {
        Gate::new(GateKind::Z, vec![q])
    }
    pub fn s(q: Qubit) -> Self {
        Gate::new(GateKind::S, vec![q])
    }
    pub fn sx(q: Qubit) -> Self {
        Gate::new(GateKind::Sx, vec![q])
    }
    pub fn rx(theta: f64, q: Qubit) -> Self {
        Gate::new(GateKind::Rx(theta), vec![q])
    }
    pub fn rz(theta: f64, q: Qubit) -> Self {
        Gate::new(GateKind::Rz(theta), vec![q])
    }
    pub fn cx(c: Qubit, t: Qubit) -> Self {
        Gate::new(GateKind::Cx, vec![c, t])
    }
    pub fn cz(a: Qubit, b: Qubit) -> Self {
        Gate::new(GateKind::Cz, vec![a, b])
    }
    pub fn xcx(a: Qubit, b: Qubit) -> Self {
        Gate::new(GateKind::Xcx, vec![a, b])
    }
    pub fn swap(a: Qubit, b: Qubit) -> Self {
        Gate::new(GateKind::Swap, vec![a, b])
    }

    pub fn touches(&self, q: Qubit) -> bool {
        self.ops.contains(&q)
    }

    pub fn shares_operand(&self, other: &Gate) -> bool {
        self.ops.iter().any(|q| other.ops.contains(q))
    }

    /// Operand equality for cancellation: exact for ordered kinds, as a set
    /// for symmetric kinds.
    pub fn same_operands(&self, ops: &[Qubit]) -> bool {
        if self.ops.len() != ops.len() {
            return false;
        }
        if self.kind.symmetric() {
            self.ops.iter().all(|q| ops.contains(q))
        } else {
            self.ops == ops
        }
    }
}
