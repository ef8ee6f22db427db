"""Command-line front end.

Every computation is exposed on text or JSON input; exit status separates
mathematical outcomes from usage problems so shell pipelines can tell a
singular matrix from a typo:

* 0 success,
* 1 mathematical error (singular / undefined / inconsistent),
* 2 input error (parse failure, bad flags, incompatible shapes),

with a one-line ``error: <code>[: detail]`` diagnostic on stderr.
"""

import argparse
import json
import sys

from .errors import (
    DimensionMismatch,
    InvalidMorphismError,
    ParseError,
    SingularMatrixError,
)
from .matrix import Matrix, cr_product, format_matrix, parse_matrix, rc_product
from .quasidet import (
    cr_inverse,
    cr_quasideterminant,
    rc_inverse,
    rc_quasideterminant,
)
from .quaternion import format_quaternion
from .rank import cr_rank, rc_rank, solve_general
from .representations import (
    check_morphism,
    decompose_morphism,
    morphism_from_json,
    morphism_to_json,
    representation_from_json,
    representation_to_json,
)

REFERENCE_EXAMPLE = parse_matrix("[k, -i; -1+k, -i-j]")


class MathError(Exception):
    """Mathematical failure; carries the one-word diagnostic code."""

    def __init__(self, code):
        super().__init__(code)
        self.code = code


def _fraction_json(f):
    return {"num": f.numerator, "den": f.denominator}


def quaternion_json(q):
    return {
        "w": _fraction_json(q.w),
        "x": _fraction_json(q.x),
        "y": _fraction_json(q.y),
        "z": _fraction_json(q.z),
    }


def matrix_json(m):
    return {
        "rows": m.rows,
        "cols": m.cols,
        "cells": [[quaternion_json(e) for e in row] for row in m.cells],
    }


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="skewlin",
        description="Exact skew-field linear algebra on quaternion matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_command(name, help_text, arity):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("matrices", nargs="*", metavar="MATRIX",
                       help="matrix text like '[k, -i; -1+k, -i-j]'")
        p.add_argument("--file", action="append", default=[],
                       help="read a matrix from a file (repeatable)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(arity=arity)
        return p

    p = matrix_command("qdet", "quasideterminant at a position", 1)
    p.add_argument("--kind", choices=("rc", "cr"), default="rc")
    p.add_argument("--pos", required=True, metavar="P,R",
                   help="1-based position, e.g. 2,2")

    p = matrix_command("inv", "two-sided inverse", 1)
    p.add_argument("--kind", choices=("rc", "cr"), default="rc")

    p = matrix_command("rank", "rank and major minor", 1)
    p.add_argument("--kind", choices=("rc", "cr"), default="rc")

    p = matrix_command("mul", "product of two matrices", 2)
    p.add_argument("--kind", choices=("rc", "cr"), default="rc")

    p = matrix_command("solve", "general solver for x*A = b", 1)
    p.add_argument("--rhs", required=True, metavar="ROW",
                   help="right-hand side row, e.g. '[k, -i]'")

    p = sub.add_parser("repr-decompose",
                       help="factor a representation morphism (JSON in/out)")
    p.add_argument("--file", action="append", default=[],
                   help="read the JSON instance from a file")
    p.add_argument("--format", choices=("text", "json"), default="json")

    p = sub.add_parser("demo", help="built-in demonstrations")
    p.add_argument("topic", choices=("paper-example",))

    return parser


def _gather_matrices(args):
    texts = list(args.matrices)
    for path in args.file:
        with open(path, encoding="utf-8") as handle:
            texts.append(handle.read())
    if not texts:
        texts.append(sys.stdin.read())
    if len(texts) != args.arity:
        raise ValueError(f"expected {args.arity} matrix input(s), got {len(texts)}")
    return [parse_matrix(t) for t in texts]


def _parse_position(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--pos wants P,R with 1-based indices, got {text!r}")
    return int(parts[0]), int(parts[1])


def _emit(out, args, text_value, json_value):
    if args.format == "json":
        print(json.dumps(json_value, sort_keys=True), file=out)
    else:
        print(text_value, file=out)


def _run_qdet(args, out):
    (matrix,) = _gather_matrices(args)
    p, r = _parse_position(args.pos)
    qdet = rc_quasideterminant if args.kind == "rc" else cr_quasideterminant
    value = qdet(matrix, p, r)
    if value is None:
        raise MathError("undefined")
    _emit(out, args, format_quaternion(value), quaternion_json(value))


def _run_inv(args, out):
    (matrix,) = _gather_matrices(args)
    invert = rc_inverse if args.kind == "rc" else cr_inverse
    try:
        result = invert(matrix)
    except SingularMatrixError:
        raise MathError("singular") from None
    _emit(out, args, format_matrix(result), matrix_json(result))


def _rank_json(report):
    return {
        "rank": report.rank,
        "rows": list(report.minor.rows) if report.minor else None,
        "cols": list(report.minor.cols) if report.minor else None,
    }


def _run_rank(args, out):
    (matrix,) = _gather_matrices(args)
    report = (rc_rank if args.kind == "rc" else cr_rank)(matrix)
    if report.minor is None:
        text = f"rank: {report.rank}\nminor: absent"
    else:
        rows = ",".join(str(i) for i in report.minor.rows)
        cols = ",".join(str(j) for j in report.minor.cols)
        text = f"rank: {report.rank}\nminor rows: {rows}\nminor cols: {cols}"
    _emit(out, args, text, _rank_json(report))


def _run_mul(args, out):
    a, b = _gather_matrices(args)
    product = rc_product if args.kind == "rc" else cr_product
    result = product(a, b)
    _emit(out, args, format_matrix(result), matrix_json(result))


def _run_solve(args, out):
    (matrix,) = _gather_matrices(args)
    rhs = parse_matrix(args.rhs)
    solution = solve_general(matrix, rhs)
    lines = [f"consistent: {'yes' if solution.consistent else 'no'}"]
    if solution.particular is not None:
        lines.append(f"particular: {format_matrix(solution.particular)}")
    free = ",".join(str(i) for i in solution.free_variables) or "-"
    lines.append(f"free variables: {free}")
    for row in solution.homogeneous_basis:
        lines.append(f"basis: {format_matrix(row)}")
    payload = {
        "consistent": solution.consistent,
        "particular": matrix_json(solution.particular)
        if solution.particular is not None
        else None,
        "free_variables": list(solution.free_variables),
        "basis": [matrix_json(row) for row in solution.homogeneous_basis],
    }
    _emit(out, args, "\n".join(lines), payload)
    if not solution.consistent:
        raise MathError("inconsistent")


def _run_repr_decompose(args, out):
    if args.file:
        with open(args.file[0], encoding="utf-8") as handle:
            instance = json.load(handle)
    else:
        instance = json.load(sys.stdin)
    source = representation_from_json(instance["f"])
    target = representation_from_json(instance["g"])
    morphism = morphism_from_json(instance["morphism"], source, target)
    if not check_morphism(morphism):
        raise MathError("invalid-morphism")
    decomposition = decompose_morphism(morphism)
    to_quotient, across, into_target = decomposition.factor_morphisms(morphism)
    payload = {
        "quotient": representation_to_json(decomposition.quotient),
        "image": representation_to_json(decomposition.image),
        "projection": morphism_to_json(to_quotient),
        "bijection": morphism_to_json(across),
        "inclusion": morphism_to_json(into_target),
    }
    print(json.dumps(payload, sort_keys=True), file=out)


def _run_demo(args, out):
    a = REFERENCE_EXAMPLE
    print(f"matrix: {format_matrix(a)}", file=out)
    print(f"rc quasideterminant at (2,2): {format_quaternion(rc_quasideterminant(a, 2, 2))}",
          file=out)
    print(f"cr quasideterminant at (1,1): {format_quaternion(cr_quasideterminant(a, 1, 1))}",
          file=out)
    print(f"rc rank: {rc_rank(a).rank}", file=out)
    print(f"cr rank: {cr_rank(a).rank}", file=out)


_RUNNERS = {
    "qdet": _run_qdet,
    "inv": _run_inv,
    "rank": _run_rank,
    "mul": _run_mul,
    "solve": _run_solve,
    "repr-decompose": _run_repr_decompose,
    "demo": _run_demo,
}


def run(argv, out=None, err=None):
    """Parse ``argv`` (no program name) and execute; returns the exit status."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _RUNNERS[args.command](args, out)
    except MathError as exc:
        print(f"error: {exc.code}", file=err)
        return 1
    except SingularMatrixError:
        print("error: singular", file=err)
        return 1
    except ParseError as exc:
        print(f"error: parse: {exc}", file=err)
        return 2
    except DimensionMismatch as exc:
        print(f"error: dimension: {exc}", file=err)
        return 2
    except InvalidMorphismError as exc:
        print(f"error: invalid-morphism: {exc}", file=err)
        return 2
    except (ValueError, IndexError, KeyError, OSError) as exc:
        print(f"error: input: {exc}", file=err)
        return 2
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
