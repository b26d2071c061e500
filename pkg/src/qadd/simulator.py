"""Exact basis-state semantics for the classical-reversible gate set.

Every gate in the IR permutes computational basis states, so a state is
just a triple of bit words (data, ancilla, control) and a circuit is a
permutation of them. ``run`` walks one state through the gate list;
``permutation_table`` sweeps every basis input at once with bit-parallel
numpy arrays, which keeps exhaustive verification up to ~20 qubits cheap.

The AND discipline is enforced dynamically: And requires a zeroed target,
AndDagger requires the target to equal the conjunction of its controls,
and every ancilla must be 0 again when the circuit ends.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AndDaggerMismatch,
    AndTargetNotZero,
    CapExceeded,
    DirtyAncilla,
    WidthMismatch,
)
from .ir import Circuit, Gate, GateKind, Register, validate


@dataclass(frozen=True)
class BasisState:
    """Bit assignment for all registers of a circuit."""

    data_bits: int
    ancilla_bits: int = 0
    control_bit: int = 0


def _read(state: BasisState, register: Register, index: int) -> int:
    if register is Register.DATA:
        return (state.data_bits >> index) & 1
    if register is Register.ANCILLA:
        return (state.ancilla_bits >> index) & 1
    return state.control_bit & 1


def _flipped(state: BasisState, register: Register, index: int) -> BasisState:
    if register is Register.DATA:
        return BasisState(state.data_bits ^ (1 << index), state.ancilla_bits, state.control_bit)
    if register is Register.ANCILLA:
        return BasisState(state.data_bits, state.ancilla_bits ^ (1 << index), state.control_bit)
    return BasisState(state.data_bits, state.ancilla_bits, state.control_bit ^ 1)


def apply_gate(state: BasisState, gate: Gate) -> BasisState:
    """Apply one gate to a basis state, returning the new state."""
    kind = gate.kind
    target = gate.target
    if kind is GateKind.X:
        return _flipped(state, target.register, target.index)
    if kind is GateKind.CX_CLASSICAL:
        if gate.classical_bit:
            return _flipped(state, target.register, target.index)
        return state
    if kind is GateKind.CNOT:
        c = gate.operands[0]
        if _read(state, c.register, c.index):
            return _flipped(state, target.register, target.index)
        return state
    c1, c2 = gate.operands[0], gate.operands[1]
    conj = _read(state, c1.register, c1.index) & _read(state, c2.register, c2.index)
    if kind is GateKind.TOFFOLI:
        if conj:
            return _flipped(state, target.register, target.index)
        return state
    t = _read(state, target.register, target.index)
    if kind is GateKind.AND:
        if t:
            raise AndTargetNotZero(f"And target {target} is 1")
        if conj:
            return _flipped(state, target.register, target.index)
        return state
    # AND_DAGGER: strict uncomputation.
    if t != conj:
        raise AndDaggerMismatch(f"AndDagger target {target} holds {t}, controls give {conj}")
    if t:
        return _flipped(state, target.register, target.index)
    return state


def run(circuit: Circuit, state: BasisState) -> BasisState:
    """Run a validated circuit on one basis state.

    Ancillas must enter and leave in 0; a nonzero ancilla word at either
    end raises DirtyAncilla.
    """
    validate(circuit)
    if state.ancilla_bits != 0:
        raise DirtyAncilla("input ancillas must be 0")
    for gate in circuit.gates:
        state = apply_gate(state, gate)
    if state.ancilla_bits != 0:
        raise DirtyAncilla(f"ancillas finished in state {state.ancilla_bits:b}")
    return state


def _apply_gate_vec(regs: dict[Register, np.ndarray], gate: Gate) -> None:
    kind = gate.kind
    target = gate.target
    tr, ti = regs[target.register], target.index
    if kind is GateKind.X:
        tr ^= 1 << ti
        return
    if kind is GateKind.CX_CLASSICAL:
        if gate.classical_bit:
            tr ^= 1 << ti
        return
    if kind is GateKind.CNOT:
        c = gate.operands[0]
        tr ^= ((regs[c.register] >> c.index) & 1) << ti
        return
    c1, c2 = gate.operands[0], gate.operands[1]
    conj = ((regs[c1.register] >> c1.index) & 1) & ((regs[c2.register] >> c2.index) & 1)
    if kind is GateKind.TOFFOLI:
        tr ^= conj << ti
        return
    held = (tr >> ti) & 1
    if kind is GateKind.AND:
        if held.any():
            raise AndTargetNotZero(f"And target {target} is 1 on some basis input")
        tr ^= conj << ti
        return
    if (held != conj).any():
        raise AndDaggerMismatch(f"AndDagger on {target} does not match its controls on some basis input")
    tr ^= conj << ti


def permutation_table(circuit: Circuit, cap: int = 20) -> np.ndarray:
    """Map every basis input through the circuit.

    Returns an int64 array ``table`` with ``table[i]`` the output index for
    input ``i``, where an input is encoded as ``control * 2^n_data + data``
    (ancillas start at and must return to 0, so they are not part of the
    index). The result is checked to be a bijection.
    """
    width = circuit.n_data + (1 if circuit.has_control else 0)
    if width > cap:
        raise CapExceeded(f"{width} index qubits exceed the cap of {cap}")
    validate(circuit)
    size = 1 << width
    lanes = np.arange(size, dtype=np.int64)
    regs = {
        Register.DATA: lanes & ((1 << circuit.n_data) - 1),
        Register.ANCILLA: np.zeros(size, dtype=np.int64),
        Register.CONTROL: lanes >> circuit.n_data,
    }
    for gate in circuit.gates:
        _apply_gate_vec(regs, gate)
    if regs[Register.ANCILLA].any():
        raise DirtyAncilla("ancillas finished nonzero on some basis input")
    table = (regs[Register.CONTROL] << circuit.n_data) | regs[Register.DATA]
    if np.unique(table).size != size:
        raise WidthMismatch("simulated map is not a bijection")  # unreachable for this gate set
    return table


@dataclass(frozen=True)
class EquivalenceResult:
    """Outcome of a permutation comparison; falsy when a counterexample exists."""

    equal: bool
    input_index: int | None = None
    left_output: int | None = None
    right_output: int | None = None

    def __bool__(self) -> bool:
        return self.equal


def assert_equivalent(left: Circuit, right: Circuit, cap: int = 20) -> EquivalenceResult:
    """Compare two circuits over the full basis; report the least differing input."""
    if left.n_data != right.n_data or left.has_control != right.has_control:
        raise WidthMismatch("circuits act on different registers")
    t_left = permutation_table(left, cap=cap)
    t_right = permutation_table(right, cap=cap)
    diff = np.flatnonzero(t_left != t_right)
    if diff.size == 0:
        return EquivalenceResult(equal=True)
    i = int(diff[0])
    return EquivalenceResult(
        equal=False,
        input_index=i,
        left_output=int(t_left[i]),
        right_output=int(t_right[i]),
    )
