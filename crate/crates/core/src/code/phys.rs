use serde::{Deserialize, Serialize};

/// A physical gate over data/ancilla qubits. This is the vocabulary of
/// encoded gate templates and translated circuits; logical SWAPs never
/// reach the physical level (they become tracker relabels).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum PhysGate {
    H(usize),
    X(usize),
    Z(usize),
    S(usize),
    Sdg(usize),
    Sx(usize),
    Sxdg(usize),
    Rx(usize, f64),
    Rz(usize, f64),
    Cx(usize, usize),
    Cz(usize, usize),
}

impl PhysGate {
    pub fn qubits(&self) -> (usize, Option<usize>) {
        use PhysGate::*;
        match *self {
            H(q) | X(q) | Z(q) | S(q) | Sdg(q) | Sx(q) | Sxdg(q) | Rx(q, _) | Rz(q, _) => (q, None),
            Cx(a, b) | Cz(a, b) => (a, Some(b)),
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, PhysGate::Cx(..) | PhysGate::Cz(..))
    }

    pub fn is_clifford(&self) -> bool {
        !matches!(self, PhysGate::Rx(..) | PhysGate::Rz(..))
    }

    /// Remaps qubit indices through `f`.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> PhysGate {
        use PhysGate::*;
        match *self {
            H(q) => H(f(q)),
            X(q) => X(f(q)),
            Z(q) => Z(f(q)),
            S(q) => S(f(q)),
            Sdg(q) => Sdg(f(q)),
            Sx(q) => Sx(f(q)),
            Sxdg(q) => Sxdg(f(q)),
            Rx(q, t) => Rx(f(q), t),
            Rz(q, t) => Rz(f(q), t),
            Cx(a, b) => Cx(f(a), f(b)),
            Cz(a, b) => Cz(f(a), f(b)),
        }
    }

    pub fn name(&self) -> &'static str {
        use PhysGate::*;
        match self {
            H(_) => "h",
            X(_) => "x",
            Z(_) => "z",
            S(_) => "s",
            Sdg(_) => "sdg",
            Sx(_) => "sx",
            Sxdg(_) => "sxdg",
            Rx(..) => "rx",
            Rz(..) => "rz",
            Cx(..) => "cx",
            Cz(..) => "cz",
        }
    }
}

/// ASAP moment depth of a physical gate sequence over an implicit qubit set.
pub fn phys_depth(seq: &[PhysGate]) -> usize {
    let mut ready: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut depth = 0;
    for g in seq {
        let (a, b) = g.qubits();
        let mut m = *ready.get(&a).unwrap_or(&0);
        if let Some(b) = b {
            m = m.max(*ready.get(&b).unwrap_or(&0));
        }
        ready.insert(a, m + 1);
        if let Some(b) = b {
            ready.insert(b, m + 1);
        }
        depth = depth.max(m + 1);
    }
    depth
}

/// (1q, 2q) gate counts of a physical sequence.
pub fn phys_counts(seq: &[PhysGate]) -> (usize, usize) {
    let two = seq.iter().filter(|g| g.is_two_qubit()).count();
    (seq.len() - two, two)
}
