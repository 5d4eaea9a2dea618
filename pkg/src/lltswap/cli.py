"""
Command-line front end.

    lltswap compute   --input tuple.json --n 3
    lltswap lattice   --input tuple.json --n 2 --format svg --index 0
    lltswap swap      --input tuple.json --n 3
    lltswap beads     --input tuple.json --format tikz
    lltswap matchings --input tuple.json
    lltswap relations --input family.json --n 3
    lltswap verify    --corpus worked

Input is JSON: {"tuple": [{"outer": [...], "inner": [...]}, ...], "n": 3}. For
`relations` use {"family": {"values": [...]}} or {"family": [tuple, ...]};
`matchings` also accepts {"beads": {"top": "RRB", "bottom": "B"}}.

Exit status: 0 success, 2 malformed input, 3 precondition violated,
4 an identity that must hold failed (the counterexample goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import acceptance, render
from .errors import InvariantError, PreconditionError
from .lattice import enumerate_configs, partition_function
from .poly import Polynomial
from .relations import catalan_transfer, solve_g, transfer_matrix
from .shapes import ShapeError, ShapeTuple, swap_adjacent
from .swap import (
    BeadSequence, bead_sequence, classify_unique, direct_weight_change, enumerate_noncrossing_matchings,
    induced_matching, lemma_a1_criterion, matching_weight, phi, theorem_swap_check, walk_statistics,
    walks, weight_change,
)
from .tableaux import llt_poly

EXIT_SCHEMA, EXIT_PRECONDITION, EXIT_INVARIANT = 2, 3, 4


class SchemaError(ValueError):
    pass


def _load(args) -> dict:
    if args.input is None:
        return {}
    try:
        if args.input == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.input) as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read JSON input: {exc}") from exc
    if isinstance(data, list):
        data = {"tuple": data}
    if not isinstance(data, dict):
        raise SchemaError("input must be a JSON object")
    return data


def _tuple(data: dict) -> ShapeTuple:
    if "tuple" not in data:
        raise SchemaError('input needs a "tuple" field')
    try:
        return ShapeTuple.from_json(data["tuple"])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed tuple: {exc}") from exc


def _n(args, data: dict, required: bool = True) -> int | None:
    n = args.n if args.n is not None else data.get("n")
    if n is None:
        if required:
            raise SchemaError("an alphabet size is needed (--n or \"n\")")
        return None
    if not isinstance(n, int) or n < 1:
        raise SchemaError("n must be a positive integer")
    return n


def _emit_poly(p: Polynomial, fmt: str) -> str:
    if fmt == "text":
        return p.to_text() + "\n"
    return json.dumps(p.to_json()) + "\n"


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _pick_config(tup: ShapeTuple, n: int, index: int):
    for k, c in enumerate(enumerate_configs(tup, n)):
        if k == index:
            return c
    raise PreconditionError(f"there is no configuration with index {index}")


# commands


def cmd_compute(args, data) -> str:
    return _emit_poly(llt_poly(_tuple(data), _n(args, data)), args.format)


def cmd_lattice(args, data) -> str:
    tup, n = _tuple(data), _n(args, data)
    if args.format in ("svg", "tikz"):
        c = _pick_config(tup, n, args.index or 0)
        return render.config_svg(c) if args.format == "svg" else render.config_tikz(c)
    z = partition_function(tup, n)
    if args.format == "text" and not args.configs:
        return z.to_text() + "\n"
    out = {"partition_function": z.to_json()}
    if args.configs:
        out["configurations"] = [c.to_json() for c in enumerate_configs(tup, n)]
    return _dump(out)


def cmd_swap(args, data) -> str:
    tup, n = _tuple(data), _n(args, data)
    if args.index is not None:
        c = _pick_config(tup, n, args.index)
        ws = walks(c)
        if args.format == "svg":
            return render.config_svg(c, ws)
        if args.format == "tikz":
            return render.config_tikz(c, ws)
        out = {
            "walks": [dict(w.to_json(), statistics=walk_statistics(w)) for w in ws],
            "matching": induced_matching(c).to_json(),
            "weight_change": weight_change(c),
            "direct_weight_change": direct_weight_change(c),
            "image": phi(c).to_json(),
        }
        return _dump(out)

    exponent = theorem_swap_check(tup, n)
    swapped = swap_adjacent(tup, 1)
    target = set(enumerate_configs(swapped, n))
    count = 0
    image = set()
    for c in enumerate_configs(tup, n):
        count += 1
        p = phi(c)
        if p not in target or phi(p) != c:
            raise InvariantError(f"phi fails on configuration {count - 1} of {tup}")
        if weight_change(c) != direct_weight_change(c):
            raise InvariantError(f"weight law fails on configuration {count - 1} of {tup}")
        image.add(p)
    if image != target:
        raise InvariantError(f"phi is not onto the configurations of {swapped}")
    out = {"tuple": repr(tup), "swapped": repr(swapped), "unique_matching": exponent is not None,
           "exponent": exponent, "configurations": count, "bijection": True, "weight_law": True}
    if args.format == "text":
        if exponent is None:
            return f"no unique matching; phi verified on {count} configurations\n"
        return f"L = t^{exponent} * L_swap (phi verified on {count} configurations)\n"
    return _dump(out)


def cmd_beads(args, data) -> str:
    beads = bead_sequence(_tuple(data))
    if args.format == "svg":
        return render.beads_svg(beads)
    if args.format == "tikz":
        return render.beads_tikz(beads)
    if args.format == "text":
        return str(beads) + "\n"
    return _dump(beads.to_json())


def cmd_matchings(args, data) -> str:
    if "beads" in data:
        spec = data["beads"]
        try:
            beads = BeadSequence.from_colors(spec.get("top", ""), spec.get("bottom", ""))
        except (KeyError, AttributeError) as exc:
            raise SchemaError(f"malformed beads: {exc}") from exc
    else:
        beads = bead_sequence(_tuple(data))
    found = enumerate_noncrossing_matchings(beads)
    unique = len(found) == 1
    classified = classify_unique(beads)
    if unique != classified:
        raise InvariantError(f"closed-form classification disagrees for {beads}")
    if args.format in ("svg", "tikz"):
        pick = found[args.index or 0] if found else None
        return render.beads_svg(beads, pick) if args.format == "svg" else render.beads_tikz(beads, pick)
    if args.format == "text":
        lines = [str(beads), f"{len(found)} matching(s), unique={unique}"]
        lines += [f"  {m}  weight t^{matching_weight(m)}" for m in found]
        return "\n".join(lines) + "\n"
    return _dump({
        "beads": beads.to_json(),
        "matchings": [dict(m.to_json(), weight=matching_weight(m)) for m in found],
        "unique": unique,
        "classification": classified,
        "exists": lemma_a1_criterion(beads),
    })


def cmd_relations(args, data) -> str:
    n = _n(args, data)
    fam = data.get("family")
    if isinstance(fam, dict) and "values" in fam:
        matrix = catalan_transfer(fam["values"], n)
    elif isinstance(fam, list):
        try:
            tuples = [ShapeTuple.from_json(t) for t in fam]
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"malformed family: {exc}") from exc
        matrix = transfer_matrix(tuples, n)
    else:
        raise SchemaError('input needs "family": {"values": [...]} or a list of tuples')
    size = len(matrix.order)
    llts = [llt_poly(t, n) for t in matrix.tuples[:size]]
    if solve_g(matrix, llts) != list(matrix.g):
        raise InvariantError("g polynomials from configurations disagree with the solved system")
    if args.format == "text":
        lines = [f"{t!r}: " + " ".join(row) for t, row in zip(matrix.tuples, matrix.rows_text())]
        lines += [f"g{j + 1} = {g.to_text()}" for j, g in enumerate(matrix.g)]
        return "\n".join(lines) + "\n"
    out = matrix.to_json()
    out["tuples"] = [t.to_json() for t in matrix.tuples]
    return _dump(out)


def cmd_verify(args, data) -> str:
    name = args.corpus or "all"
    if name not in acceptance.CORPORA:
        raise SchemaError(f"unknown corpus {name!r}; choose from {sorted(acceptance.CORPORA)}")
    results = acceptance.run(acceptance.CORPORA[name], workers=args.workers)
    for r in results:
        if not r.passed and r.failures:
            print(f"criterion {r.number} counterexamples: {r.failures}", file=sys.stderr)
    text = "\n".join(r.line() for r in results) + "\n"
    if not all(r.passed for r in results):
        raise _VerifyFailed(text)
    return text


class _VerifyFailed(Exception):
    pass


COMMANDS = {
    "compute": cmd_compute, "lattice": cmd_lattice, "swap": cmd_swap, "beads": cmd_beads,
    "matchings": cmd_matchings, "relations": cmd_relations, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lltswap", description="Exact LLT polynomial computations.")
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("--input", help="JSON input file, or - for standard input")
    parser.add_argument("--n", type=int, help="alphabet size (number of lattice rows)")
    parser.add_argument("--format", choices=["json", "text", "svg", "tikz"], default="json")
    parser.add_argument("--workers", type=int, default=1, help="worker processes for corpus scans")
    parser.add_argument("--corpus", help="verify: one of " + ", ".join(acceptance.CORPORA))
    parser.add_argument("--index", type=int, help="configuration or matching to show")
    parser.add_argument("--configs", action="store_true", help="lattice: also list every configuration")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data = _load(args)
        out = COMMANDS[args.command](args, data)
    except (SchemaError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantError as exc:
        print(f"invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except _VerifyFailed as exc:
        sys.stdout.write(str(exc))
        return EXIT_INVARIANT
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
