"""Circuit serialization: OpenQASM 3.0 and a JSON gate list.

QASM lowering uses only ``x``, ``cx`` and ``ccx``. And/AndDagger both
lower to ``ccx`` (semantics-preserving; the T advantage is metadata) with
a marker comment line so the resource audit stays reconstructable from
the file. Classically controlled X slots emit an ``x`` when their bit is
1 and are elided when 0. Registers flatten as ``b``, ``anc`` and ``ctl``.
"""
from __future__ import annotations

import json

from .ir import Circuit, GateKind, QubitRef, Register
from .resources import ResourceReport, census

_REGISTER_NAMES = {Register.DATA: "b", Register.ANCILLA: "anc", Register.CONTROL: "ctl"}


def _ref(q: QubitRef) -> str:
    return f"{_REGISTER_NAMES[q.register]}[{q.index}]"


def to_qasm3(circuit: Circuit, report: ResourceReport | None = None) -> str:
    """Render the circuit as an OpenQASM 3.0 program.

    The header comment block carries the JSON resource report verbatim plus
    a one-line T-count summary.
    """
    if report is None:
        report = census(circuit)
    lines = ["OPENQASM 3.0;"]
    lines.append(f"// resource_report: {report.to_json()}")
    lines.append(f"// t_count={report.t_count}")
    lines.append(f"qubit[{circuit.n_data}] b;")
    if circuit.n_ancilla:
        lines.append(f"qubit[{circuit.n_ancilla}] anc;")
    if circuit.has_control:
        lines.append("qubit[1] ctl;")
    for gate in circuit.gates:
        ops = ", ".join(_ref(q) for q in gate.operands)
        if gate.kind is GateKind.X:
            lines.append(f"x {ops};")
        elif gate.kind is GateKind.CX_CLASSICAL:
            if gate.classical_bit:
                lines.append(f"x {ops};")
        elif gate.kind is GateKind.CNOT:
            lines.append(f"cx {ops};")
        elif gate.kind is GateKind.TOFFOLI:
            lines.append(f"ccx {ops};")
        elif gate.kind is GateKind.AND:
            lines.append("// and")
            lines.append(f"ccx {ops};")
        else:
            lines.append("// and_dagger")
            lines.append(f"ccx {ops};")
    return "\n".join(lines) + "\n"


def to_json_dict(circuit: Circuit) -> dict:
    """IR-level JSON gate list; bit-0 slots are kept, with their bit recorded."""
    gates = []
    for gate in circuit.gates:
        entry: dict = {
            "kind": gate.kind.value,
            "operands": [[q.register.value, q.index] for q in gate.operands],
        }
        if gate.kind is GateKind.CX_CLASSICAL:
            entry["bit"] = gate.classical_bit
        gates.append(entry)
    return {
        "n_data": circuit.n_data,
        "n_ancilla": circuit.n_ancilla,
        "has_control": circuit.has_control,
        "gates": gates,
    }


def to_json(circuit: Circuit) -> str:
    return json.dumps(to_json_dict(circuit))


def to_text(circuit: Circuit) -> str:
    """Debug rendering: one IR gate per line, bit-0 slots included."""
    lines = [
        f"# n_data={circuit.n_data} n_ancilla={circuit.n_ancilla} "
        f"has_control={circuit.has_control} variant={circuit.variant.value} gates={len(circuit.gates)}"
    ]
    for gate in circuit.gates:
        ops = " ".join(_ref(q) for q in gate.operands)
        if gate.kind is GateKind.CX_CLASSICAL:
            lines.append(f"cx_classical[{gate.classical_bit}] {ops}")
        else:
            lines.append(f"{gate.kind.value} {ops}")
    return "\n".join(lines) + "\n"
