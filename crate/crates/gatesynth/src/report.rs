//! Gate-count reports for synthesized circuits.

use crate::circuit::{Circuit, GateTag};
use serde::{Deserialize, Serialize};

/// Summary of a circuit: counts per gate class plus provenance fields.
///
/// `total_basic` counts gates in the basic set only (one-qubit gates and
/// XORs); coarser gates (Toffolis, controlled-V, wider controls) are tallied
/// separately so counts are meaningful at every granularity a synthesis
/// routine emits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthesisReport {
    /// Register width of the circuit.
    pub num_wires: usize,
    /// Uncontrolled one-qubit gates.
    pub one_qubit: usize,
    /// Controlled-NOTs.
    pub xor: usize,
    /// Two-control NOTs.
    pub toffoli: usize,
    /// One-control gates with a non-NOT payload.
    pub controlled_v: usize,
    /// Gates with two or more controls and a non-NOT payload, or more than
    /// two controls.
    pub other_controlled: usize,
    /// `one_qubit + xor`.
    pub total_basic: usize,
    /// Synthesis method that produced the circuit (empty for plain counts).
    pub method: String,
    /// Operator distance to the synthesis target, when the producer
    /// measured one.
    pub achieved_distance: Option<f64>,
}

/// Tallies the gates of a circuit into a report with no method/distance
/// provenance.
pub fn count_basic(c: &Circuit) -> SynthesisReport {
    let mut r = SynthesisReport {
        num_wires: c.num_wires,
        one_qubit: 0,
        xor: 0,
        toffoli: 0,
        controlled_v: 0,
        other_controlled: 0,
        total_basic: 0,
        method: String::new(),
        achieved_distance: None,
    };
    for g in &c.gates {
        match g.tag() {
            GateTag::OneQubit => r.one_qubit += 1,
            GateTag::Xor => r.xor += 1,
            GateTag::Toffoli => r.toffoli += 1,
            GateTag::ControlledV => r.controlled_v += 1,
            GateTag::OtherControlled => r.other_controlled += 1,
        }
    }
    r.total_basic = r.one_qubit + r.xor;
    r
}

impl SynthesisReport {
    /// Counts `c` and stamps the producing method.
    pub fn for_method(c: &Circuit, method: &str) -> Self {
        let mut r = count_basic(c);
        r.method = method.to_string();
        r
    }

    /// Single-line JSON rendering.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;
    use crate::mat2::Unitary2;

    #[test]
    fn counts_by_class() {
        let mut c = Circuit::new(4);
        c.push(Gate::one_qubit(0, Unitary2::ry(0.4)));
        c.push(Gate::xor(0, 1));
        c.push(Gate::toffoli(0, 1, 2));
        c.push(Gate::controlled(&[2], 3, Unitary2::rz(0.2)));
        c.push(Gate::controlled(&[0, 1, 2], 3, Unitary2::pauli_x()));
        c.push(Gate::controlled(&[0, 1], 2, Unitary2::ry(0.1)));
        let r = count_basic(&c);
        assert_eq!(
            (r.one_qubit, r.xor, r.toffoli, r.controlled_v, r.other_controlled),
            (1, 1, 1, 1, 2)
        );
        assert_eq!(r.total_basic, 2);
    }

    #[test]
    fn json_roundtrip() {
        let mut c = Circuit::new(2);
        c.push(Gate::xor(0, 1));
        let r = SynthesisReport::for_method(&c, "controlled-u");
        let s = r.to_json();
        assert!(!s.contains('\n'));
        let back: SynthesisReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
