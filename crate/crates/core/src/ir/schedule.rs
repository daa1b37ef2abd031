use super::LogicalCircuit;

/// ASAP moment partition: a gate enters the earliest moment after all gates
/// sharing an operand. The concatenation of moments is a valid topological
/// order of the dependency DAG.
pub fn moments(c: &LogicalCircuit) -> Vec<Vec<usize>> {
    let mut ready = vec![0usize; c.num_qubits];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, g) in c.gates.iter().enumerate() {
        let m = g.ops.iter().map(|&q| ready[q]).max().unwrap_or(0);
        if m == out.len() {
            out.push(Vec::new());
        }
        out[m].push(i);
        for &q in &g.ops {
            ready[q] = m + 1;
        }
    }
    out
}

/// Moment-based circuit depth under ASAP scheduling with unit gate time.
pub fn depth(c: &LogicalCircuit) -> usize {
    let mut ready = vec![0usize; c.num_qubits];
    let mut d = 0;
    for g in &c.gates {
        let m = g.ops.iter().map(|&q| ready[q]).max().unwrap_or(0);
        for &q in &g.ops {
            ready[q] = m + 1;
        }
        d = d.max(m + 1);
    }
    d
}

/// Moment index of every gate.
pub fn moment_of(c: &LogicalCircuit) -> Vec<usize> {
    let mut ready = vec![0usize; c.num_qubits];
    let mut out = Vec::with_capacity(c.gates.len());
    for g in &c.gates {
        let m = g.ops.iter().map(|&q| ready[q]).max().unwrap_or(0);
        for &q in &g.ops {
            ready[q] = m + 1;
        }
        out.push(m);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::Gate;

    #[test]
    fn disjoint_gates_share_a_moment() {
        let c = LogicalCircuit::with_gates(2, vec![Gate::h(0), Gate::x(1)]);
        assert_eq!(depth(&c), 1);
        assert_eq!(moments(&c), vec![vec![0, 1]]);
    }

    #[test]
    fn dependency_chain() {
        let c = LogicalCircuit::with_gates(2, vec![Gate::h(0), Gate::cx(0, 1), Gate::x(1)]);
        assert_eq!(depth(&c), 3);
    }

    #[test]
    fn both_h_depend_on_cx() {
        let c = LogicalCircuit::with_gates(2, vec![Gate::cx(0, 1), Gate::h(0), Gate::h(1)]);
        assert_eq!(moments(&c), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn empty_circuit() {
        let c = LogicalCircuit::new(3);
        assert!(moments(&c).is_empty());
        assert_eq!(depth(&c), 0);
    }
}
