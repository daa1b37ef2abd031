use thiserror::Error;

use super::{Gate, GateKind, LogicalCircuit};

/// Errors produced by [`parse_qasm`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unsupported gate or statement `{0}`")]
    UnsupportedGate(String),
    #[error("malformed syntax: {0}")]
    MalformedSyntax(String),
    #[error("multiple quantum or classical registers are not supported")]
    MultipleRegisters,
}

/// Parses an OpenQASM 2.0 subset: one `qreg`, an optional `creg`, the gates
/// {h, x, z, s, sdg, sx, rx, rz, cx, cz, swap} (plus `xcx` as an extension
/// so emitted circuits round-trip), `barrier`, and terminal `measure`.
///
/// `sdg` is expanded to three S gates. Barriers and the terminal
/// full-register measurement are recorded but stripped from the gate list;
/// measurement is re-attached by the translator. A gate appearing after a
/// measurement is rejected.
pub fn parse_qasm(text: &str) -> Result<LogicalCircuit, ParseError> {
    let cleaned = strip_comments(text);
    let mut qreg: Option<(String, usize)> = None;
    let mut creg: Option<String> = None;
    let mut gates: Vec<Gate> = Vec::new();
    let mut measured = false;

    for raw in cleaned.split(';') {
        let stmt = raw.trim();
        if stmt.is_empty() {
            continue;
        }
        let (head, rest) = split_head(stmt);
        let head_lc = head.to_ascii_lowercase();
        match head_lc.as_str() {
            "openqasm" | "include" => continue,
            "qreg" => {
                if qreg.is_some() {
                    return Err(ParseError::MultipleRegisters);
                }
                let (name, size) = parse_reg_decl(rest)?;
                qreg = Some((name, size));
            }
            "creg" => {
                if creg.is_some() {
                    return Err(ParseError::MultipleRegisters);
                }
                let (name, _) = parse_reg_decl(rest)?;
                creg = Some(name);
            }
            "barrier" => continue,
            "measure" => {
                let (qname, _) = qreg
                    .as_ref()
                    .ok_or_else(|| ParseError::MalformedSyntax("measure before qreg".into()))?;
                // Accept `measure q -> c` and `measure q[i] -> c[j]`.
                let lhs = rest
                    .split("->")
                    .next()
                    .ok_or_else(|| ParseError::MalformedSyntax(stmt.into()))?
                    .trim();
                if !lhs.starts_with(qname.as_str()) {
                    return Err(ParseError::MalformedSyntax(format!(
                        "measure of unknown register `{lhs}`"
                    )));
                }
                measured = true;
            }
            _ => {
                if measured {
                    return Err(ParseError::MalformedSyntax(
                        "gate after measurement; only terminal measurement is supported".into(),
                    ));
                }
                let (qname, qsize) = qreg
                    .as_ref()
                    .ok_or_else(|| ParseError::MalformedSyntax("gate before qreg".into()))?;
                parse_gate(&head_lc, rest, qname, *qsize, &mut gates)?;
            }
        }
    }

    let (_, n) = qreg.ok_or_else(|| ParseError::MalformedSyntax("missing qreg".into()))?;
    let mut c = LogicalCircuit::with_gates(n, gates);
    c.measured = measured;
    Ok(c)
}

/// Emits the circuit back as OpenQASM 2.0 text. Patch-wise and merged
/// macros are expanded to their logical meaning so the emitter is total.
pub fn emit_qasm(c: &LogicalCircuit) -> String {
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    out.push_str(&format!("qreg q[{}];\n", c.num_qubits));
    if c.measured {
        out.push_str(&format!("creg c[{}];\n", c.num_qubits));
    }
    for g in &c.gates {
        emit_gate(&mut out, g);
    }
    if c.measured {
        out.push_str("measure q -> c;\n");
    }
    out
}

fn emit_gate(out: &mut String, g: &Gate) {
    use GateKind::*;
    match g.kind {
        H | X | Z | S | Sx => out.push_str(&format!("{} q[{}];\n", g.kind.name(), g.ops[0])),
        Rx(t) => out.push_str(&format!("rx({}) q[{}];\n", t, g.ops[0])),
        Rz(t) => out.push_str(&format!("rz({}) q[{}];\n", t, g.ops[0])),
        Cx | Cz | Xcx | Swap => out.push_str(&format!(
            "{} q[{}],q[{}];\n",
            g.kind.name(),
            g.ops[0],
            g.ops[1]
        )),
        Hh | Xx | Zz => {
            let name = match g.kind {
                Hh => "h",
                Xx => "x",
                _ => "z",
            };
            for &q in &g.ops {
                out.push_str(&format!("{} q[{}];\n", name, q));
            }
        }
        MergedCx | MergedCz | MergedXcx => {
            let name = match g.kind {
                MergedCx => "cx",
                MergedCz => "cz",
                _ => "xcx",
            };
            out.push_str(&format!("{} q[{}],q[{}];\n", name, g.ops[0], g.ops[1]));
            out.push_str(&format!("{} q[{}],q[{}];\n", name, g.ops[2], g.ops[3]));
        }
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| match l.find("//") {
            Some(i) => &l[..i],
            None => l,
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn split_head(stmt: &str) -> (&str, &str) {
    let end = stmt
        .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
        .unwrap_or(stmt.len());
    (&stmt[..end], stmt[end..].trim())
}

fn parse_reg_decl(rest: &str) -> Result<(String, usize), ParseError> {
    let open = rest.find('[');
    let close = rest.find(']');
    match (open, close) {
        (Some(o), Some(c)) if o < c => {
            let name = rest[..o].trim().to_string();
            let size: usize = rest[o + 1..c]
                .trim()
                .parse()
                .map_err(|_| ParseError::MalformedSyntax(format!("bad register size in `{rest}`")))?;
            Ok((name, size))
        }
        _ => Err(ParseError::MalformedSyntax(format!("bad register declaration `{rest}`"))),
    }
}

fn parse_gate(
    name: &str,
    rest: &str,
    qname: &str,
    qsize: usize,
    gates: &mut Vec<Gate>,
) -> Result<(), ParseError> {
    let (param, args) = if let Some(stripped) = rest.strip_prefix('(') {
        let close = find_matching(stripped)
            .ok_or_else(|| ParseError::MalformedSyntax(format!("unbalanced parens in `{rest}`")))?;
        (Some(&stripped[..close]), stripped[close + 1..].trim())
    } else {
        (None, rest)
    };

    let ops = parse_operands(args, qname, qsize)?;
    let op1 = |ops: &[usize]| -> Result<usize, ParseError> {
        if ops.len() == 1 {
            Ok(ops[0])
        } else {
            Err(ParseError::MalformedSyntax(format!("`{name}` takes one operand")))
        }
    };
    let op2 = |ops: &[usize]| -> Result<(usize, usize), ParseError> {
        if ops.len() == 2 && ops[0] != ops[1] {
            Ok((ops[0], ops[1]))
        } else {
            Err(ParseError::MalformedSyntax(format!(
                "`{name}` takes two distinct operands"
            )))
        }
    };

    match name {
        "h" => gates.push(Gate::h(op1(&ops)?)),
        "x" => gates.push(Gate::x(op1(&ops)?)),
        "z" => gates.push(Gate::z(op1(&ops)?)),
        "s" => gates.push(Gate::s(op1(&ops)?)),
        "sdg" => {
            let q = op1(&ops)?;
            for _ in 0..3 {
                gates.push(Gate::s(q));
            }
        }
        "sx" => gates.push(Gate::sx(op1(&ops)?)),
        "rx" | "rz" => {
            let q = op1(&ops)?;
            let expr = param
                .ok_or_else(|| ParseError::MalformedSyntax(format!("`{name}` needs an angle")))?;
            let theta = eval_expr(expr)?;
            if !theta.is_finite() {
                return Err(ParseError::MalformedSyntax(format!("non-finite angle `{expr}`")));
            }
            gates.push(if name == "rx" {
                Gate::rx(theta, q)
            } else {
                Gate::rz(theta, q)
            });
        }
        "cx" => {
            let (a, b) = op2(&ops)?;
            gates.push(Gate::cx(a, b));
        }
        "cz" => {
            let (a, b) = op2(&ops)?;
            gates.push(Gate::cz(a, b));
        }
        "xcx" => {
            let (a, b) = op2(&ops)?;
            gates.push(Gate::xcx(a, b));
        }
        "swap" => {
            let (a, b) = op2(&ops)?;
            gates.push(Gate::swap(a, b));
        }
        other => return Err(ParseError::UnsupportedGate(other.to_string())),
    }
    Ok(())
}

fn find_matching(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_operands(args: &str, qname: &str, qsize: usize) -> Result<Vec<usize>, ParseError> {
    let mut ops = Vec::new();
    for piece in args.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(ParseError::MalformedSyntax(format!("empty operand in `{args}`")));
        }
        let open = piece
            .find('[')
            .ok_or_else(|| ParseError::MalformedSyntax(format!("operand `{piece}` needs an index")))?;
        let close = piece
            .find(']')
            .ok_or_else(|| ParseError::MalformedSyntax(format!("operand `{piece}` needs an index")))?;
        let name = piece[..open].trim();
        if name != qname {
            return Err(ParseError::MalformedSyntax(format!("unknown register `{name}`")));
        }
        let idx: usize = piece[open + 1..close]
            .trim()
            .parse()
            .map_err(|_| ParseError::MalformedSyntax(format!("bad index in `{piece}`")))?;
        if idx >= qsize {
            return Err(ParseError::MalformedSyntax(format!(
                "index {idx} out of range for {qname}[{qsize}]"
            )));
        }
        ops.push(idx);
    }
    Ok(ops)
}

/// Evaluates an angle expression: numbers, `pi`, `+ - * /`, parentheses and
/// unary minus.
fn eval_expr(expr: &str) -> Result<f64, ParseError> {
    let tokens = tokenize(expr)?;
    let mut pos = 0;
    let v = parse_sum(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(ParseError::MalformedSyntax(format!("trailing tokens in `{expr}`")));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Pi,
    Plus,
    Minus,
    Star,
    Slash,
    Open,
    Close,
}

fn tokenize(expr: &str) -> Result<Vec<Tok>, ParseError> {
    let mut out = Vec::new();
    let bytes: Vec<char> = expr.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        match ch {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '(' => {
                out.push(Tok::Open);
                i += 1;
            }
            ')' => {
                out.push(Tok::Close);
                i += 1;
            }
            'p' | 'P' => {
                if i + 1 < bytes.len() && (bytes[i + 1] == 'i' || bytes[i + 1] == 'I') {
                    out.push(Tok::Pi);
                    i += 2;
                } else {
                    return Err(ParseError::MalformedSyntax(format!("bad token in `{expr}`")));
                }
            }
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_digit()
                        || bytes[i] == '.'
                        || bytes[i] == 'e'
                        || bytes[i] == 'E'
                        || ((bytes[i] == '+' || bytes[i] == '-')
                            && i > start
                            && (bytes[i - 1] == 'e' || bytes[i - 1] == 'E')))
                {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                let v: f64 = s
                    .parse()
                    .map_err(|_| ParseError::MalformedSyntax(format!("bad number `{s}`")))?;
                out.push(Tok::Num(v));
            }
            _ => return Err(ParseError::MalformedSyntax(format!("bad token `{ch}` in `{expr}`"))),
        }
    }
    Ok(out)
}

fn parse_sum(tokens: &[Tok], pos: &mut usize) -> Result<f64, ParseError> {
    let mut acc = parse_product(tokens, pos)?;
    while *pos < tokens.len() {
        match tokens[*pos] {
            Tok::Plus => {
                *pos += 1;
                acc += parse_product(tokens, pos)?;
            }
            Tok::Minus => {
                *pos += 1;
                acc -= parse_product(tokens, pos)?;
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_product(tokens: &[Tok], pos: &mut usize) -> Result<f64, ParseError> {
    let mut acc = parse_atom(tokens, pos)?;
    while *pos < tokens.len() {
        match tokens[*pos] {
            Tok::Star => {
                *pos += 1;
                acc *= parse_atom(tokens, pos)?;
            }
            Tok::Slash => {
                *pos += 1;
                acc /= parse_atom(tokens, pos)?;
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_atom(tokens: &[Tok], pos: &mut usize) -> Result<f64, ParseError> {
    if *pos >= tokens.len() {
        return Err(ParseError::MalformedSyntax("truncated expression".into()));
    }
    match tokens[*pos] {
        Tok::Num(v) => {
            *pos += 1;
            Ok(v)
        }
        Tok::Pi => {
            *pos += 1;
            Ok(std::f64::consts::PI)
        }
        Tok::Minus => {
            *pos += 1;
            Ok(-parse_atom(tokens, pos)?)
        }
        Tok::Plus => {
            *pos += 1;
            parse_atom(tokens, pos)
        }
        Tok::Open => {
            *pos += 1;
            let v = parse_sum(tokens, pos)?;
            if *pos >= tokens.len() || tokens[*pos] != Tok::Close {
                return Err(ParseError::MalformedSyntax("unbalanced parens".into()));
            }
            *pos += 1;
            Ok(v)
        }
        _ => Err(ParseError::MalformedSyntax("unexpected token".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_program() {
        let c = parse_qasm("qreg q[2]; h q[0]; cx q[0],q[1];").unwrap();
        assert_eq!(c.num_qubits, 2);
        assert_eq!(c.gates, vec![Gate::h(0), Gate::cx(0, 1)]);
    }

    #[test]
    fn empty_program() {
        let c = parse_qasm("qreg q[3];").unwrap();
        assert_eq!(c.num_qubits, 3);
        assert!(c.gates.is_empty());
    }

    #[test]
    fn rejects_out_of_subset_gate() {
        let err = parse_qasm("qreg q[2]; ccx q[0],q[1],q[0];").unwrap_err();
        assert_eq!(err, ParseError::UnsupportedGate("ccx".into()));
    }

    #[test]
    fn rejects_multiple_qregs() {
        let err = parse_qasm("qreg q[2]; qreg r[2];").unwrap_err();
        assert_eq!(err, ParseError::MultipleRegisters);
    }

    #[test]
    fn sdg_expands_to_three_s() {
        let c = parse_qasm("qreg q[1]; sdg q[0];").unwrap();
        assert_eq!(c.gates, vec![Gate::s(0), Gate::s(0), Gate::s(0)]);
    }

    #[test]
    fn measurement_is_recorded_and_stripped() {
        let c = parse_qasm("qreg q[2]; creg c[2]; h q[0]; barrier q[0],q[1]; measure q -> c;")
            .unwrap();
        assert!(c.measured);
        assert_eq!(c.gates, vec![Gate::h(0)]);
    }

    #[test]
    fn mid_circuit_measurement_rejected() {
        let err = parse_qasm("qreg q[1]; creg c[1]; measure q[0] -> c[0]; x q[0];").unwrap_err();
        assert!(matches!(err, ParseError::MalformedSyntax(_)));
    }

    #[test]
    fn angle_expressions() {
        let c = parse_qasm("qreg q[1]; rz(pi/2) q[0]; rx(-0.5*pi + 1e-1) q[0];").unwrap();
        match (c.gates[0].kind, c.gates[1].kind) {
            (GateKind::Rz(a), GateKind::Rx(b)) => {
                assert!((a - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
                assert!((b - (-0.5 * std::f64::consts::PI + 0.1)).abs() < 1e-15);
            }
            other => panic!("unexpected kinds {:?}", other),
        }
    }

    #[test]
    fn comments_are_ignored() {
        let c = parse_qasm("// header\nqreg q[1]; // decl\nx q[0]; // gate").unwrap();
        assert_eq!(c.gates, vec![Gate::x(0)]);
    }
}
