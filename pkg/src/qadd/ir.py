"""Circuit intermediate representation.

The gate set is purely classical-reversible: X, classically controlled X
(a "slot" that is an X when its classical bit is 1 and a no-op when 0),
CNOT, Toffoli, and the temporary logical AND / AND-dagger pair. Circuits
are immutable records over three named registers (data, ancilla, optional
one-qubit control).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    ArityMismatch,
    DanglingAnd,
    DuplicateOperand,
    MismatchedAndDagger,
    OperandCollision,
    UnknownQubit,
    WidthMismatch,
)


class Register(Enum):
    DATA = "data"
    ANCILLA = "ancilla"
    CONTROL = "control"


_REGISTER_RANK = {Register.DATA: 0, Register.ANCILLA: 1, Register.CONTROL: 2}


@dataclass(frozen=True, order=False)
class QubitRef:
    """A qubit named by (register, index); index 0 is the least significant data bit."""

    register: Register
    index: int

    def sort_key(self) -> tuple[int, int]:
        return (_REGISTER_RANK[self.register], self.index)

    def __repr__(self) -> str:
        return f"{self.register.value}[{self.index}]"


def data_qubit(index: int) -> QubitRef:
    return QubitRef(Register.DATA, index)


def ancilla_qubit(index: int) -> QubitRef:
    return QubitRef(Register.ANCILLA, index)


def control_qubit() -> QubitRef:
    return QubitRef(Register.CONTROL, 0)


class GateKind(Enum):
    X = "x"
    CX_CLASSICAL = "cx_classical"
    CNOT = "cnot"
    TOFFOLI = "toffoli"
    AND = "and"
    AND_DAGGER = "and_dagger"


GATE_ARITY = {
    GateKind.X: 1,
    GateKind.CX_CLASSICAL: 1,
    GateKind.CNOT: 2,
    GateKind.TOFFOLI: 3,
    GateKind.AND: 3,
    GateKind.AND_DAGGER: 3,
}


@dataclass(frozen=True)
class Gate:
    """One primitive operation. Operands store controls first, target last.

    ``classical_bit`` is present exactly for CX_CLASSICAL; a bit value of 0
    is a legal no-op slot (kept in the IR for the gate census, elided on
    export).
    """

    kind: GateKind
    operands: tuple[QubitRef, ...]
    classical_bit: int | None = None

    @property
    def target(self) -> QubitRef:
        return self.operands[-1]

    @property
    def controls(self) -> tuple[QubitRef, ...]:
        return self.operands[:-1]

    def qubits(self) -> frozenset[QubitRef]:
        return frozenset(self.operands)

    def __repr__(self) -> str:
        ops = ", ".join(repr(q) for q in self.operands)
        if self.kind is GateKind.CX_CLASSICAL:
            return f"cx_classical[{self.classical_bit}]({ops})"
        return f"{self.kind.value}({ops})"


def _check_distinct(*qubits: QubitRef) -> None:
    if len(set(qubits)) != len(qubits):
        raise OperandCollision(f"operands must be distinct qubits: {list(qubits)}")


def x_gate(target: QubitRef) -> Gate:
    return Gate(GateKind.X, (target,))


def classical_x(bit: int, target: QubitRef) -> Gate:
    if bit not in (0, 1):
        raise ValueError(f"classical bit must be 0 or 1, got {bit}")
    return Gate(GateKind.CX_CLASSICAL, (target,), classical_bit=bit)


def cnot(control: QubitRef, target: QubitRef) -> Gate:
    _check_distinct(control, target)
    return Gate(GateKind.CNOT, (control, target))


def toffoli(control1: QubitRef, control2: QubitRef, target: QubitRef) -> Gate:
    _check_distinct(control1, control2, target)
    return Gate(GateKind.TOFFOLI, (control1, control2, target))


def _canonical_pair(c1: QubitRef, c2: QubitRef) -> tuple[QubitRef, QubitRef]:
    # Canonical ascending order makes And/AndDagger equality deterministic.
    return (c1, c2) if c1.sort_key() <= c2.sort_key() else (c2, c1)


def logical_and(control1: QubitRef, control2: QubitRef, target: QubitRef) -> Gate:
    _check_distinct(control1, control2, target)
    c1, c2 = _canonical_pair(control1, control2)
    return Gate(GateKind.AND, (c1, c2, target))


def logical_and_dagger(control1: QubitRef, control2: QubitRef, target: QubitRef) -> Gate:
    _check_distinct(control1, control2, target)
    c1, c2 = _canonical_pair(control1, control2)
    return Gate(GateKind.AND_DAGGER, (c1, c2, target))


@dataclass(frozen=True)
class Constant:
    """The classical addend, reduced mod 2^width and split as odd_part * 2^shift.

    A constant congruent to 0 is the identity; then odd_part is 0 and
    effective_width is 0.
    """

    raw: int
    width: int
    shift: int
    odd_part: int
    effective_width: int

    @property
    def is_identity(self) -> bool:
        return self.odd_part == 0

    def bit(self, i: int) -> int:
        """Bit i of the odd part (bit significance within the effective slice)."""
        return (self.odd_part >> i) & 1


class Variant(Enum):
    UNOPTIMIZED = "unoptimized"
    OPTIMIZED = "optimized"
    CONTROLLED = "controlled"
    BASELINE_CUCCARO = "baseline_cuccaro"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over declared registers. Immutable after construction."""

    n_data: int
    n_ancilla: int
    gates: tuple[Gate, ...]
    has_control: bool = False
    variant: Variant = Variant.CUSTOM
    constant: Constant | None = field(default=None)

    def __len__(self) -> int:
        return len(self.gates)


def _resolve(circuit: Circuit, q: QubitRef, idx: int) -> None:
    if q.index < 0:
        raise UnknownQubit(f"gate {idx}: negative index {q}", idx)
    if q.register is Register.DATA:
        if q.index >= circuit.n_data:
            raise UnknownQubit(f"gate {idx}: {q} outside data register of size {circuit.n_data}", idx)
    elif q.register is Register.ANCILLA:
        if q.index >= circuit.n_ancilla:
            raise UnknownQubit(f"gate {idx}: {q} outside ancilla register of size {circuit.n_ancilla}", idx)
    else:
        if not circuit.has_control:
            raise UnknownQubit(f"gate {idx}: {q} but circuit has no control register", idx)
        if q.index != 0:
            raise UnknownQubit(f"gate {idx}: control register has exactly one qubit", idx)


def validate(circuit: Circuit) -> None:
    """Check all structural invariants; raise ValidationError at the first violation.

    Enforced rules: operand arity per kind, classical_bit present exactly for
    CX_CLASSICAL, distinct operands, operands resolving against the declared
    registers, and balanced And/AndDagger scopes (each AndDagger closes the
    most recent open And on its target with the same control set, and no And
    is left open at the end).
    """
    if circuit.n_data < 1:
        raise WidthMismatch("circuit must declare at least one data qubit")
    open_ands: dict[QubitRef, list[tuple[int, frozenset[QubitRef]]]] = {}
    for idx, gate in enumerate(circuit.gates):
        arity = GATE_ARITY.get(gate.kind)
        if arity is None or len(gate.operands) != arity:
            raise ArityMismatch(
                f"gate {idx}: {gate.kind.value} expects {arity} operands, got {len(gate.operands)}", idx
            )
        if gate.kind is GateKind.CX_CLASSICAL:
            if gate.classical_bit not in (0, 1):
                raise ArityMismatch(f"gate {idx}: cx_classical requires a 0/1 classical bit", idx)
        elif gate.classical_bit is not None:
            raise ArityMismatch(f"gate {idx}: only cx_classical carries a classical bit", idx)
        if len(set(gate.operands)) != len(gate.operands):
            raise DuplicateOperand(f"gate {idx}: repeated operand in {gate}", idx)
        for q in gate.operands:
            _resolve(circuit, q, idx)
        if gate.kind is GateKind.AND:
            open_ands.setdefault(gate.target, []).append((idx, frozenset(gate.controls)))
        elif gate.kind is GateKind.AND_DAGGER:
            stack = open_ands.get(gate.target)
            if not stack:
                raise MismatchedAndDagger(f"gate {idx}: AndDagger on {gate.target} with no open And", idx)
            _, controls = stack.pop()
            if controls != frozenset(gate.controls):
                raise MismatchedAndDagger(
                    f"gate {idx}: AndDagger controls {set(gate.controls)} do not match open And {set(controls)}",
                    idx,
                )
    remaining = [entry for stack in open_ands.values() for entry in stack]
    if remaining:
        first = min(idx for idx, _ in remaining)
        raise DanglingAnd(f"gate {first}: And never closed by an AndDagger", first)


_SELF_INVERSE = (GateKind.X, GateKind.CX_CLASSICAL, GateKind.CNOT, GateKind.TOFFOLI)


def inverse_of(gate: Gate) -> Gate:
    """Gate-level inverse: everything is self-inverse except And <-> AndDagger."""
    if gate.kind in _SELF_INVERSE:
        return gate
    if gate.kind is GateKind.AND:
        return Gate(GateKind.AND_DAGGER, gate.operands)
    return Gate(GateKind.AND, gate.operands)


def adjoint(circuit: Circuit) -> Circuit:
    """Reverse the gate list, inverting each gate. The result validates."""
    validate(circuit)
    gates = tuple(inverse_of(g) for g in reversed(circuit.gates))
    return Circuit(
        n_data=circuit.n_data,
        n_ancilla=circuit.n_ancilla,
        gates=gates,
        has_control=circuit.has_control,
        variant=circuit.variant,
        constant=circuit.constant,
    )


def concatenate(first: Circuit, second: Circuit) -> Circuit:
    """Sequential composition over a shared data register.

    Ancilla registers are unified to the wider of the two; the result is
    tagged custom.
    """
    if first.n_data != second.n_data or first.has_control != second.has_control:
        raise WidthMismatch("cannot concatenate circuits over different registers")
    return Circuit(
        n_data=first.n_data,
        n_ancilla=max(first.n_ancilla, second.n_ancilla),
        gates=first.gates + second.gates,
        has_control=first.has_control,
        variant=Variant.CUSTOM,
        constant=None,
    )
