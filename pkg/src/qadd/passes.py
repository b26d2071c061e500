"""Peephole rewrite passes.

Adjacency is commutation-aware with a purely syntactic rule: two gates
commute iff their qubit sets are disjoint. That is sound (it never claims
a false commutation) and is enough to collapse the mirrored compute and
uncompute ladders of the quadratic adder down to a linear circuit.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownPass
from .ir import Circuit, Gate, GateKind, classical_x, inverse_of, validate


@dataclass(frozen=True)
class PassReport:
    pass_name: str
    gates_before: int
    gates_after: int
    iterations_to_fixpoint: int


def _replace_gates(circuit: Circuit, gates: list[Gate]) -> Circuit:
    return Circuit(
        n_data=circuit.n_data,
        n_ancilla=circuit.n_ancilla,
        gates=tuple(gates),
        has_control=circuit.has_control,
        variant=circuit.variant,
        constant=circuit.constant,
    )


def _find_inverse_pair(gates: list[Gate]) -> tuple[int, int] | None:
    for i, gate in enumerate(gates):
        qubits = gate.qubits()
        wanted = inverse_of(gate)
        for j in range(i + 1, len(gates)):
            other = gates[j]
            if qubits.isdisjoint(other.qubits()):
                continue
            if other == wanted:
                return (i, j)
            break
    return None


def cancel_adjacent_inverses(circuit: Circuit) -> tuple[Circuit, PassReport]:
    """Remove gate pairs (g, inverse_of(g)) separated only by disjoint gates.

    Runs to fixpoint; the output induces the same permutation as the input.
    """
    validate(circuit)
    gates = list(circuit.gates)
    before = len(gates)
    iterations = 0
    while True:
        iterations += 1
        pair = _find_inverse_pair(gates)
        if pair is None:
            break
        i, j = pair
        del gates[j]
        del gates[i]
    result = _replace_gates(circuit, gates)
    return result, PassReport("cancel-inverses", before, len(gates), iterations)


def _mergeable(gate: Gate) -> bool:
    return gate.kind in (GateKind.CX_CLASSICAL, GateKind.X)


def _bit_of(gate: Gate) -> int:
    return 1 if gate.kind is GateKind.X else gate.classical_bit


def _find_merge(gates: list[Gate]) -> tuple[int, int] | None:
    for i, gate in enumerate(gates):
        if not _mergeable(gate):
            continue
        qubits = gate.qubits()
        for j in range(i + 1, len(gates)):
            other = gates[j]
            if qubits.isdisjoint(other.qubits()):
                continue
            if _mergeable(other) and not (gate.kind is GateKind.X and other.kind is GateKind.X):
                return (i, j)
            break
    return None


def merge_classical_x(circuit: Circuit) -> tuple[Circuit, PassReport]:
    """Merge adjacent single-qubit toggles on the same qubit into one slot.

    Two classically controlled X slots merge by XOR of their bits; a slot
    next to an unconditional X merges to a slot with the bit flipped.
    Bit-0 slots are kept (they stay in the census and are elided only on
    export). Pairs of plain X gates are left to the cancellation pass.
    """
    validate(circuit)
    gates = list(circuit.gates)
    before = len(gates)
    iterations = 0
    while True:
        iterations += 1
        pair = _find_merge(gates)
        if pair is None:
            break
        i, j = pair
        merged = classical_x(_bit_of(gates[i]) ^ _bit_of(gates[j]), gates[i].target)
        del gates[j]
        gates[i] = merged
    result = _replace_gates(circuit, gates)
    return result, PassReport("merge-classical-x", before, len(gates), iterations)


PASSES = {
    "cancel-inverses": cancel_adjacent_inverses,
    "merge-classical-x": merge_classical_x,
}


def run_pipeline(circuit: Circuit, pass_names: list[str]) -> tuple[Circuit, list[PassReport]]:
    """Apply the named passes in order, iterating to a global fixpoint.

    The iteration count is bounded by the initial gate count since every
    effective pass application strictly shrinks the gate list.
    """
    for name in pass_names:
        if name not in PASSES:
            raise UnknownPass(f"unknown pass '{name}' (registered: {sorted(PASSES)})")
    reports: list[PassReport] = []
    for _ in range(len(circuit.gates) + 1):
        size = len(circuit.gates)
        for name in pass_names:
            circuit, report = PASSES[name](circuit)
            reports.append(report)
        if len(circuit.gates) == size:
            break
    return circuit, reports
