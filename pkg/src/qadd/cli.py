"""Command-line interface.

Commands: synth (emit a circuit), verify (sweep against the classical
addition oracle), count (resource report), compare (cost table), equiv
(permutation equality of two variants).

Exit codes: 0 success, 1 semantic failure (verification mismatch,
nonconformance under --strict, counterexample), 2 usage error, 3 internal
validation failure. The default RNG seed comes from QADD_SEED and is
echoed in every sampled output.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .baseline import comparison_table, comparison_to_json, comparison_to_text, reduce_to_constant, synth_cuccaro_mod
from .errors import QaddError, SimulationError, ValidationError
from .export import to_json, to_qasm3, to_text
from .ir import Circuit, Variant
from .passes import PASSES, run_pipeline
from .resources import census
from .simulator import BasisState, assert_equivalent, permutation_table
from .simulator import run as run_circuit
from .synthesis import synth

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

EXHAUSTIVE_CAP = 16

VARIANT_CHOICES = ("optimized", "unoptimized", "controlled", "cuccaro")


def _default_seed() -> int:
    try:
        return int(os.environ.get("QADD_SEED", "0"))
    except ValueError:
        return 0


def _build_variant(name: str, constant: int, width: int) -> Circuit:
    if name == "cuccaro":
        return reduce_to_constant(synth_cuccaro_mod(width), constant)
    if name == "controlled":
        return synth(constant, width, controlled=True)
    return synth(constant, width, variant=Variant(name))


def _apply_passes(circuit: Circuit, spec: str | None) -> Circuit:
    if not spec:
        return circuit
    names = [p.strip() for p in spec.split(",") if p.strip()]
    circuit, _ = run_pipeline(circuit, names)
    return circuit


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_synth(args: argparse.Namespace) -> int:
    circuit = _build_variant(args.variant, args.constant, args.width)
    circuit = _apply_passes(circuit, args.passes)
    if args.format == "qasm":
        text = to_qasm3(circuit)
    elif args.format == "json":
        text = to_json(circuit) + "\n"
    else:
        text = to_text(circuit)
    _write(text, args.out)
    return EXIT_OK


def _oracle(constant: int, width: int, b: int) -> int:
    return (constant + b) % (1 << width)


def cmd_verify(args: argparse.Namespace) -> int:
    circuit = _build_variant(args.variant, args.constant, args.width)
    controlled = circuit.has_control
    lines = [
        f"verify variant={args.variant} constant={args.constant} width={args.width}",
    ]
    failures: list[str] = []
    if args.samples is None:
        table = permutation_table(circuit)
        size = 1 << args.width
        total = 0
        for g in range(2 if controlled else 1):
            base = g << args.width
            for b in range(size):
                expected = _oracle(args.constant, args.width, b) if (not controlled or g) else b
                total += 1
                if table[base + b] != base + expected:
                    failures.append(
                        f"fail control={g} input={b} expected={expected} got={table[base + b] - base}"
                    )
        lines.append(f"{total - len(failures)}/{total} pass")
    else:
        rng = random.Random(args.seed)
        size = 1 << args.width
        total = 0
        for _ in range(args.samples):
            b = rng.randrange(size)
            for g in range(2 if controlled else 1):
                expected = _oracle(args.constant, args.width, b) if (not controlled or g) else b
                state = run_circuit(circuit, BasisState(data_bits=b, control_bit=g))
                total += 1
                if state.data_bits != expected:
                    failures.append(
                        f"fail control={g} input={b} expected={expected} got={state.data_bits}"
                    )
        lines.append(f"seed={args.seed} samples={args.samples}")
        lines.append(f"{total - len(failures)}/{total} pass")
    if failures:
        lines.append(failures[0])
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_SEMANTIC if failures else EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    circuit = _build_variant(args.variant, args.constant, args.width)
    circuit = _apply_passes(circuit, args.passes)
    report = census(circuit)
    if args.format == "json":
        _write(report.to_json() + "\n", args.out)
    else:
        body = "\n".join(f"{k}={v}" for k, v in report.to_dict().items())
        _write(body + "\n", args.out)
    if args.strict and not report.conforms:
        return EXIT_SEMANTIC
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    rows = comparison_table(args.width)
    if args.format == "json":
        _write(comparison_to_json(args.width, rows) + "\n", args.out)
    else:
        _write(comparison_to_text(args.width, rows), args.out)
    if args.strict:
        for row in rows:
            if row.ancilla_measured is not None and row.ancilla_measured != row.ancilla_formula:
                return EXIT_SEMANTIC
            if row.t_measured is not None and row.t_measured != row.t_formula:
                return EXIT_SEMANTIC
    return EXIT_OK


def cmd_equiv(args: argparse.Namespace) -> int:
    left = _apply_passes(_build_variant(args.left, args.constant, args.width), args.passes)
    right = _apply_passes(_build_variant(args.right, args.constant, args.width), args.passes)
    result = assert_equivalent(left, right)
    if result.equal:
        _write(f"equivalent constant={args.constant} width={args.width} left={args.left} right={args.right}\n", args.out)
        return EXIT_OK
    _write(
        f"counterexample input={result.input_index} left={result.left_output} right={result.right_output}\n",
        args.out,
    )
    return EXIT_SEMANTIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qadd", description="Quantum adder-by-constant toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, variants: bool = True) -> None:
        p.add_argument("--constant", type=int, required=True, help="classical addend a")
        p.add_argument("--width", type=int, required=True, help="data register width n")
        if variants:
            p.add_argument("--variant", choices=VARIANT_CHOICES, default="optimized")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_synth = sub.add_parser("synth", help="synthesize a circuit and write it out")
    common(p_synth)
    p_synth.add_argument("--passes", default=None, help=f"comma-separated pass names from {sorted(PASSES)}")
    p_synth.add_argument("--format", choices=("qasm", "json", "text"), default="qasm")
    p_synth.set_defaults(func=cmd_synth)

    p_verify = sub.add_parser("verify", help="sweep the circuit against the classical oracle")
    common(p_verify)
    p_verify.add_argument("--exhaustive", action="store_true", help="force the exhaustive sweep")
    p_verify.add_argument("--samples", type=int, default=None, help="number of sampled inputs")
    p_verify.add_argument("--seed", type=int, default=_default_seed())
    p_verify.set_defaults(func=cmd_verify)

    p_count = sub.add_parser("count", help="emit the resource report")
    common(p_count)
    p_count.add_argument("--passes", default=None)
    p_count.add_argument("--strict", action="store_true", help="exit 1 unless the report conforms")
    p_count.add_argument("--format", choices=("json", "text"), default="json")
    p_count.set_defaults(func=cmd_count)

    p_compare = sub.add_parser("compare", help="emit the adder cost comparison table")
    p_compare.add_argument("--width", type=int, required=True)
    p_compare.add_argument("--strict", action="store_true")
    p_compare.add_argument("--format", choices=("text", "json"), default="text")
    p_compare.add_argument("--out", default=None)
    p_compare.set_defaults(func=cmd_compare)

    p_equiv = sub.add_parser("equiv", help="check two variants for permutation equality")
    common(p_equiv, variants=False)
    p_equiv.add_argument("--left", choices=VARIANT_CHOICES, required=True)
    p_equiv.add_argument("--right", choices=VARIANT_CHOICES, required=True)
    p_equiv.add_argument("--passes", default=None)
    p_equiv.set_defaults(func=cmd_equiv)

    return parser


def _check_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    width = getattr(args, "width", 1)
    if width < 1:
        parser.error("--width must be >= 1")
    if getattr(args, "constant", 0) < 0:
        parser.error("--constant must be non-negative")
    if getattr(args, "samples", None) is not None and args.samples < 1:
        parser.error("--samples must be >= 1")
    if args.command == "verify" and args.samples is None:
        cap = EXHAUSTIVE_CAP if not getattr(args, "exhaustive", False) else 20
        if width > cap:
            parser.error(f"width {width} too large for an exhaustive sweep; pass --samples K")
    if args.command == "compare" and width < 4:
        parser.error("--width must be >= 4 for compare")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_args(parser, args)
    try:
        return args.func(args)
    except (ValidationError, SimulationError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except QaddError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
