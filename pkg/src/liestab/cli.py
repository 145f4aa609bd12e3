"""Command-line interface.

Subcommands::

    build      --series <A|B|C|D|G> --rank <k> --out <path>
    invariants --alg <path> --degree <l> --out <path>
    stabilizer --alg <path> --form <path>[#index] --out <path>
    verify     --series <S> --rank <k> --degree <l> [--seed <u64>] [--out <path>]
    mgroup     --alg <path> --degree <l>
    profile    --alg <path>

Exit codes: 0 = pass, 1 = verification failure, 2 = usage or schema error.
All files are JSON in the formats of :mod:`liestab.serialize`; identical
inputs and seed produce byte-identical outputs.  The environment variable
``LIESTAB_LOG`` (debug/info/warning/error) sets the log level; there are no
other environment interfaces.

Inputs are capped at dimension 30 and 100000 monomials per degree by default;
pass --allow-large to lift the cap.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from math import comb

from . import serialize
from .liealg import LieAlgebra, build
from .stab import (
    centralizer_of_ad,
    invariant_forms,
    invariant_profile,
    scalar_group,
    stabilizer_algebra,
    verify_stabilizer,
)

MAX_DIM = 30
MAX_MONOMIALS = 100_000

EXIT_PASS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _configure_logging() -> None:
    level_name = os.environ.get("LIESTAB_LOG", "warning").upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _check_dim_cap(dim: int, allow_large: bool) -> None:
    if dim > MAX_DIM and not allow_large:
        raise UsageError(
            f"algebra dimension {dim} exceeds the cap of {MAX_DIM}; "
            "pass --allow-large to proceed anyway"
        )


def _check_monomial_cap(dim: int, degree: int, allow_large: bool) -> None:
    count = comb(dim, degree)
    if count > MAX_MONOMIALS and not allow_large:
        raise UsageError(
            f"degree {degree} on dimension {dim} needs {count} monomials, "
            f"over the cap of {MAX_MONOMIALS}; pass --allow-large to proceed anyway"
        )


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_json(path: str):
    import json

    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise serialize.SchemaError(f"{path}: invalid JSON ({exc})") from None


def _load_algebra(path: str, allow_large: bool) -> LieAlgebra:
    g = serialize.algebra_from_json(_load_json(path))
    _check_dim_cap(g.dim, allow_large)
    return g


def cmd_build(args) -> int:
    g = build(args.series, args.rank)
    _check_dim_cap(g.dim, args.allow_large)
    _write_output(serialize.dumps(serialize.algebra_to_json(g)), args.out)
    return EXIT_PASS


def cmd_invariants(args) -> int:
    g = _load_algebra(args.alg, args.allow_large)
    if not 0 <= args.degree <= g.dim:
        raise UsageError(f"degree must be in 0..{g.dim}")
    _check_monomial_cap(g.dim, args.degree, args.allow_large)
    forms = invariant_forms(g, args.degree)
    _write_output(serialize.dumps(serialize.forms_to_json(forms)), args.out)
    return EXIT_PASS


def _load_form(form_ref: str, allow_large: bool):
    path, _, index = form_ref.partition("#")
    doc = _load_json(path)
    if isinstance(doc, list):
        forms = serialize.forms_from_json(doc)
        pos = 0
        if index:
            try:
                pos = int(index)
            except ValueError:
                raise UsageError(f"bad form index {index!r} in {form_ref!r}") from None
        if not 0 <= pos < len(forms):
            raise UsageError(f"form index {pos} out of range; file holds {len(forms)} forms")
        return forms[pos]
    if index:
        raise UsageError("#index is only valid when the form file holds a list")
    return serialize.form_from_json(doc)


def cmd_stabilizer(args) -> int:
    g = _load_algebra(args.alg, args.allow_large)
    w = _load_form(args.form, args.allow_large)
    if w.ambient_dim != g.dim:
        raise serialize.SchemaError(
            f"form ambient dimension {w.ambient_dim} does not match algebra dimension {g.dim}"
        )
    if w.is_zero():
        raise serialize.SchemaError("form must be nonzero for the stabilizer command")
    _check_monomial_cap(g.dim, w.degree, args.allow_large)
    sub = stabilizer_algebra(g, w)
    _write_output(serialize.dumps(serialize.subspace_to_json(sub)), args.out)
    return EXIT_PASS


def cmd_verify(args) -> int:
    g = build(args.series, args.rank)
    _check_dim_cap(g.dim, args.allow_large)
    if not 1 <= args.degree < g.dim:
        raise UsageError(f"degree must satisfy 1 <= degree < dim = {g.dim}")
    _check_monomial_cap(g.dim, args.degree, args.allow_large)
    report = verify_stabilizer(g, args.degree, seed=args.seed)
    _write_output(serialize.dumps(serialize.report_to_json(report)), args.out)
    return EXIT_PASS if report.overall_pass else EXIT_VERIFICATION_FAILURE


def cmd_mgroup(args) -> int:
    g = _load_algebra(args.alg, args.allow_large)
    if args.degree < 1:
        raise UsageError("degree must be at least 1")
    record = scalar_group(g, args.degree)
    centralizer = centralizer_of_ad(g)
    payload = {
        "algebra": g.name,
        "degree": args.degree,
        "centralizer_dim": centralizer.dim,
        "order": record.order,
        "generator_description": record.generator_description,
    }
    _write_output(serialize.dumps(payload), None)
    return EXIT_PASS


def cmd_profile(args) -> int:
    g = _load_algebra(args.alg, args.allow_large)
    worst = max(comb(g.dim, l) for l in range(g.dim + 1))
    if worst > MAX_MONOMIALS and not args.allow_large:
        raise UsageError(
            f"profile needs up to {worst} monomials, over the cap of {MAX_MONOMIALS}; "
            "pass --allow-large to proceed anyway"
        )
    dims = invariant_profile(g)
    _write_output(serialize.dumps({"algebra": g.name, "dims": dims}), None)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liestab",
        description="Exact verification of stabilizers of adjoint-invariant forms "
        "on split simple Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_allow_large(p):
        p.add_argument(
            "--allow-large",
            action="store_true",
            help=f"lift the size caps (dim <= {MAX_DIM}, {MAX_MONOMIALS} monomials)",
        )

    p = sub.add_parser("build", help="construct an algebra and write it as JSON")
    p.add_argument("--series", required=True, choices=list("ABCDG"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--out", default=None)
    add_allow_large(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("invariants", help="basis of adjoint-invariant forms of a degree")
    p.add_argument("--alg", required=True)
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--out", default=None)
    add_allow_large(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("stabilizer", help="stabilizer subalgebra of a form")
    p.add_argument("--alg", required=True)
    p.add_argument("--form", required=True, help="form file, optionally with #index")
    p.add_argument("--out", default=None)
    add_allow_large(p)
    p.set_defaults(func=cmd_stabilizer)

    p = sub.add_parser("verify", help="run the full stabilizer verification pipeline")
    p.add_argument("--series", required=True, choices=list("ABCDG"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    add_allow_large(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mgroup", help="commuting scalar symmetries of a given order")
    p.add_argument("--alg", required=True)
    p.add_argument("--degree", required=True, type=int)
    add_allow_large(p)
    p.set_defaults(func=cmd_mgroup)

    p = sub.add_parser("profile", help="invariant-form dimension at every degree")
    p.add_argument("--alg", required=True)
    add_allow_large(p)
    p.set_defaults(func=cmd_profile)

    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, serialize.SchemaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
