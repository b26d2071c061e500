"""Constructors for the adder-by-constant circuits.

All builders add a fixed classical constant to the data register in place,
modulo 2^n. The addend is first normalized: reduced mod 2^n and split into
an odd part times a power of two, so the circuits only ever handle an odd
addend acting on the top ``effective_width`` data qubits.

Carry chain used throughout (odd addend, so bit 0 of the addend is 1):
the first carry equals data bit 0 and never needs its own qubit; each next
carry is the majority of (addend bit, data bit, previous carry).
"""
from __future__ import annotations

from .errors import WidthMismatch, WidthTooSmall, WidthZero
from .ir import (
    Circuit,
    Constant,
    Gate,
    QubitRef,
    Variant,
    ancilla_qubit,
    classical_x,
    cnot,
    control_qubit,
    data_qubit,
    inverse_of,
    logical_and,
    logical_and_dagger,
    toffoli,
    x_gate,
)


def maj_value(x: int, y: int, a: int) -> int:
    """Majority of three bits, floor((x + y + a) / 2)."""
    return (x + y + a) // 2


def normalize_constant(addend: int, width: int) -> Constant:
    """Reduce the addend mod 2^width and factor out trailing zeros.

    A zero result is flagged as the identity (odd_part 0, effective_width 0).
    """
    if width < 1:
        raise WidthZero(f"register width must be >= 1, got {width}")
    if addend < 0:
        raise ValueError(f"addend must be non-negative, got {addend}")
    raw = addend % (1 << width)
    if raw == 0:
        return Constant(raw=0, width=width, shift=0, odd_part=0, effective_width=0)
    shift = (raw & -raw).bit_length() - 1
    odd = raw >> shift
    return Constant(raw=raw, width=width, shift=shift, odd_part=odd, effective_width=width - shift)


def maj_block(a_bit: int, x: QubitRef, y: QubitRef, t: QubitRef) -> list[Gate]:
    """Majority block: t <- MAJ(x, y, a_bit) with x and y restored.

    Emits 5 classically controlled X slots around one Toffoli; t must be a
    zeroed qubit at execution time (the simulator enforces Toffoli targets
    loosely, but the block only computes the majority when t starts at 0).
    """
    return [
        classical_x(a_bit, x),
        classical_x(a_bit, y),
        toffoli(x, y, t),
        classical_x(a_bit, x),
        classical_x(a_bit, y),
        classical_x(a_bit, t),
    ]


def _require(constant: Constant, width: int, minimum: int) -> None:
    if constant.width != width:
        raise WidthMismatch(f"constant normalized for width {constant.width}, circuit width {width}")
    if constant.is_identity:
        raise ValueError("identity constant: the adder is an empty circuit, use synth()")
    if constant.effective_width < minimum:
        raise WidthTooSmall(
            f"effective width {constant.effective_width} below the construction minimum {minimum}"
        )


def synth_unoptimized(constant: Constant, width: int) -> Circuit:
    """Quadratic-size carry-recompute adder.

    For each data bit from the top down, recompute the whole carry ladder
    into fresh ancillas with majority blocks, add the carry into the bit,
    uncompute the ladder, then toggle by the addend bit. Uses one ancilla
    per carry (effective_width - 1 total) and (m-1)(m-2) Toffolis for
    effective width m.
    """
    _require(constant, width, 4)
    m = constant.effective_width
    z = constant.shift
    d = [data_qubit(z + i) for i in range(m)]
    u = [ancilla_qubit(j) for j in range(m - 1)]  # u[j] holds carry j+1 while computed

    gates: list[Gate] = []
    for i in range(m - 1, 0, -1):
        ladder: list[Gate] = [cnot(d[0], u[0])]
        for j in range(2, i + 1):
            ladder.extend(maj_block(constant.bit(j - 1), d[j - 1], u[j - 2], u[j - 1]))
        gates.extend(ladder)
        gates.append(cnot(u[i - 1], d[i]))
        gates.extend(inverse_of(g) for g in reversed(ladder))
        gates.append(classical_x(constant.bit(i), d[i]))
    gates.append(x_gate(d[0]))

    return Circuit(
        n_data=width,
        n_ancilla=m - 1,
        gates=tuple(gates),
        variant=Variant.UNOPTIMIZED,
        constant=constant,
    )


def synth_optimized(constant: Constant, width: int) -> Circuit:
    """Linear-size adder with AND-pair carries.

    One forward sweep computes carries into ancillas with AND gates (the
    first carry is just data bit 0 and stays in place), a top block applies
    the two highest sum bits with a single Toffoli, and the mirrored
    downward sweep uncomputes the carries while applying the remaining sum
    bits. Adjacent classically controlled X slots produced by consecutive
    sweep steps are emitted pre-merged (XOR of their bits).

    Effective width m >= 4; m - 3 ancillas; T-count 4m - 5.
    """
    _require(constant, width, 4)
    m = constant.effective_width
    z = constant.shift
    a = constant.bit
    d = [data_qubit(z + i) for i in range(m)]

    def carrier(level: int) -> QubitRef:
        # Qubit holding carry `level`: level 1 is data bit 0, higher levels
        # live on ancillas.
        return d[0] if level == 1 else ancilla_qubit(level - 2)

    gates: list[Gate] = []
    # Forward sweep: compute carry i+1 from (data bit i, carry i).
    for i in range(1, m - 2):
        prev = a(i - 1) if i > 1 else 0
        gates.append(classical_x(a(i), d[i]))
        gates.append(classical_x(prev ^ a(i), carrier(i)))
        gates.append(logical_and(d[i], carrier(i), carrier(i + 1)))
    # Top block: bits m-2 and m-1 share one Toffoli instead of an AND pair.
    gates.append(classical_x(a(m - 2), d[m - 2]))
    gates.append(classical_x(a(m - 3) ^ a(m - 2), carrier(m - 2)))
    gates.append(toffoli(d[m - 2], carrier(m - 2), d[m - 1]))
    gates.append(classical_x(a(m - 2) ^ a(m - 1), d[m - 1]))
    gates.append(cnot(carrier(m - 2), d[m - 2]))
    gates.append(classical_x(a(m - 2), d[m - 2]))
    # Downward sweep: uncompute carries, applying sum bits on the way.
    for i in range(m - 3, 0, -1):
        gates.append(classical_x(a(i + 1) ^ a(i), carrier(i + 1)))
        gates.append(logical_and_dagger(d[i], carrier(i), carrier(i + 1)))
        gates.append(cnot(carrier(i), d[i]))
        gates.append(classical_x(a(i), d[i]))
    gates.append(classical_x(a(1), d[0]))
    gates.append(x_gate(d[0]))

    return Circuit(
        n_data=width,
        n_ancilla=m - 3,
        gates=tuple(gates),
        variant=Variant.OPTIMIZED,
        constant=constant,
    )


def synth_controlled(constant: Constant, width: int) -> Circuit:
    """Controlled adder: adds the constant iff the control qubit is 1.

    Same sweep structure as the optimized adder, but every gate targeting a
    data qubit is promoted to a control-qubit-controlled form (classical
    slots with bit 1 become CNOT(control, data) and are elided when 0),
    while ancilla-targeting slots stay classical. The last carry is kept on
    an ancilla so the top block needs only a Toffoli, never a
    triple-controlled gate.

    Effective width m >= 3; m - 2 ancillas; m - 1 Toffolis; T-count 11m - 15.
    """
    _require(constant, width, 3)
    m = constant.effective_width
    z = constant.shift
    a = constant.bit
    g = control_qubit()
    d = [data_qubit(z + i) for i in range(m)]

    def carrier(level: int) -> QubitRef:
        return d[0] if level == 1 else ancilla_qubit(level - 2)

    def promoted(bit: int, data_target: QubitRef) -> list[Gate]:
        return [cnot(g, data_target)] if bit else []

    gates: list[Gate] = []
    # Forward sweep over one more level than the uncontrolled adder.
    for i in range(1, m - 1):
        gates.extend(promoted(a(i), d[i]))
        if i == 1:
            gates.extend(promoted(a(1), carrier(1)))
        else:
            gates.append(classical_x(a(i - 1) ^ a(i), carrier(i)))
        gates.append(logical_and(d[i], carrier(i), carrier(i + 1)))
    # Bring the top carry ancilla to its clean value before using it.
    gates.append(classical_x(a(m - 2), carrier(m - 1)))
    gates.append(toffoli(g, carrier(m - 1), d[m - 1]))
    gates.extend(promoted(a(m - 1), d[m - 1]))
    # Downward sweep.
    for i in range(m - 2, 0, -1):
        nxt = a(i + 1) if i < m - 2 else 0
        gates.append(classical_x(nxt ^ a(i), carrier(i + 1)))
        gates.append(logical_and_dagger(d[i], carrier(i), carrier(i + 1)))
        gates.append(toffoli(g, carrier(i), d[i]))
        gates.extend(promoted(a(i), d[i]))
    gates.extend(promoted(a(1), carrier(1)))
    gates.append(cnot(g, d[0]))

    return Circuit(
        n_data=width,
        n_ancilla=m - 2,
        gates=tuple(gates),
        has_control=True,
        variant=Variant.CONTROLLED,
        constant=constant,
    )


def synth_small(constant: Constant, n_eff: int) -> Circuit:
    """Ancilla-free adders for effective widths 1 to 3."""
    if constant.is_identity or constant.effective_width != n_eff or n_eff not in (1, 2, 3):
        raise WidthMismatch(
            f"synth_small handles odd constants of effective width 1..3, got width {constant.effective_width}"
        )
    z = constant.shift
    a = constant.bit
    d = [data_qubit(z + i) for i in range(n_eff)]
    if n_eff == 1:
        gates = [x_gate(d[0])]
    elif n_eff == 2:
        gates = [cnot(d[0], d[1]), classical_x(a(1), d[1]), x_gate(d[0])]
    else:
        # Top block of the optimized adder with the carry kept on data bit 0.
        gates = [
            classical_x(a(1), d[1]),
            classical_x(a(1), d[0]),
            toffoli(d[1], d[0], d[2]),
            classical_x(a(1) ^ a(2), d[2]),
            cnot(d[0], d[1]),
            classical_x(a(1), d[1]),
            classical_x(a(1), d[0]),
            x_gate(d[0]),
        ]
    return Circuit(
        n_data=constant.width,
        n_ancilla=0,
        gates=tuple(gates),
        variant=Variant.OPTIMIZED,
        constant=constant,
    )


def _synth_controlled_small(constant: Constant) -> Circuit:
    """Controlled adders for effective widths 1 and 2 (width 3 has the
    general construction)."""
    z = constant.shift
    a = constant.bit
    g = control_qubit()
    d = [data_qubit(z + i) for i in range(constant.effective_width)]
    if constant.effective_width == 1:
        gates = [cnot(g, d[0])]
    else:
        gates = [toffoli(g, d[0], d[1])]
        if a(1):
            gates.append(cnot(g, d[1]))
        gates.append(cnot(g, d[0]))
    return Circuit(
        n_data=constant.width,
        n_ancilla=0,
        gates=tuple(gates),
        has_control=True,
        variant=Variant.CONTROLLED,
        constant=constant,
    )


def synth(
    addend: int,
    width: int,
    variant: Variant = Variant.OPTIMIZED,
    controlled: bool = False,
) -> Circuit:
    """Normalize the addend and dispatch to the right builder.

    A zero addend (mod 2^width) yields an empty circuit; even addends get
    an adder over only the top effective_width qubits.
    """
    constant = normalize_constant(addend, width)
    if variant is Variant.CONTROLLED:
        controlled = True
    if constant.is_identity:
        return Circuit(
            n_data=width,
            n_ancilla=0,
            gates=(),
            has_control=controlled,
            variant=Variant.CONTROLLED if controlled else variant,
            constant=constant,
        )
    m = constant.effective_width
    if controlled:
        if m >= 3:
            return synth_controlled(constant, width)
        return _synth_controlled_small(constant)
    if m <= 3:
        return synth_small(constant, m)
    if variant is Variant.UNOPTIMIZED:
        return synth_unoptimized(constant, width)
    return synth_optimized(constant, width)
