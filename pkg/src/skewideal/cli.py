"""Command line entry point: ``skewideal <command> <config.json> [options]``.

Exit status 0 on success, 1 when the generators do not define an ideal
code (non-basic Smith form), 2 on any validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraError, block_decomposition
from .config import ConfigError, JobConfig, load_config
from .idealcode import (
    IdealCode,
    NotAnIdealCode,
    VerificationError,
    basic_encoder,
    compute_idempotent,
    parity_check_matrix,
    smith_of,
)
from .maps import block_action, map_order
from .metrics import SearchTooLarge, free_distance
from .polymatrix import first_obstruction, is_basic
from .separability import STRATEGIES, SeparabilityResult, build_separability, lift_to_ore
from .textio import format_algebra_element, format_ore, format_poly, format_polymatrix

COMMANDS = ("check-algebra", "separability", "idempotent", "parity-check", "distances", "info")

EXIT_OK, EXIT_NOT_IDEAL, EXIT_INVALID = 0, 1, 2


class _Report:
    """Collects text lines and a parallel JSON document."""

    def __init__(self):
        self.lines: list[str] = []
        self.data: dict = {}

    def add(self, key: str, value, text: str | None = None) -> None:
        self.data[key] = value
        self.lines.append(text if text is not None else f"{key} = {value}")

    def emit(self, mode: str) -> str:
        if mode == "json":
            return json.dumps(self.data, indent=2, sort_keys=False)
        return "\n".join(self.lines)


def _modulus_text(F) -> str:
    def term(d, c):
        mono = "" if d == 0 else "x" if d == 1 else f"x^{d}"
        if not mono:
            return str(c)
        return mono if c == 1 else f"{c} {mono}"

    return " + ".join(term(d, c) for d, c in reversed(list(enumerate(F.modulus))) if c)


def _matrix_rows(M) -> list[list[str]]:
    return [[format_poly(e) for e in r] for r in M.rows]


def _separability(job: JobConfig) -> SeparabilityResult:
    return build_separability(
        job.algebra, job.sigma, job.delta, job.strategy, job.j,
        base_strategy=job.base_strategy, pairs=job.pairs,
    )


def _code(job: JobConfig) -> IdealCode:
    M, snf = smith_of(job.generators)
    if not is_basic(snf):
        pos, fac = first_obstruction(snf)
        raise NotAnIdealCode(pos, format_poly(fac))
    sep = lift_to_ore(_separability(job).element, job.ring)
    return compute_idempotent(job.generators, sep)


def cmd_check_algebra(job: JobConfig, args, rep: _Report) -> None:
    A = job.algebra
    rep.add("field", f"GF({job.field.order})", f"field: GF({job.field.order}), modulus {_modulus_text(job.field)}")
    rep.add("algebra", A.kind, f"algebra: {A.kind}, dimension {A.dim}")
    rep.add("basis", list(A.labels), "basis: " + ", ".join(A.labels))
    rep.add("associativity", "OK", "associativity: OK")
    rep.add("unit", format_algebra_element(A.one()), "unit: " + format_algebra_element(A.one()))
    rep.add("commutative", A.is_commutative(), f"commutative: {'yes' if A.is_commutative() else 'no'}")
    order = map_order(job.sigma)
    rep.add("sigma_order", order, f"sigma: automorphism OK, order {order}")
    if job.delta is None or job.delta.is_zero():
        rep.add("delta", None, "delta: 0")
    else:
        rep.add("delta", "OK", "delta: sigma-derivation OK")
    try:
        blocks = block_decomposition(A)
    except AlgebraError:
        rep.add("blocks", None, "blocks: not available")
        return
    rep.add("blocks", [format_algebra_element(e) for e in blocks.idempotents],
            "blocks: " + "; ".join(format_algebra_element(e) for e in blocks.idempotents))
    rep.add("block_dims", list(blocks.dims), "block dimensions: " + ", ".join(map(str, blocks.dims)))
    act = block_action(job.sigma, blocks)
    rep.add("orbits", [list(o) for o in act.orbits],
            "sigma orbits: " + " ".join("(" + " ".join(map(str, o)) + ")" for o in act.orbits))


def cmd_separability(job: JobConfig, args, rep: _Report) -> None:
    res = _separability(job)
    p = res.element
    rep.add("strategy", res.strategy, f"strategy: {res.strategy}")
    rep.add("terms", [[format_algebra_element(a), format_algebra_element(b)] for a, b in p.pairs],
            "p = " + "\n  + ".join(f"({format_algebra_element(a)}) (x) ({format_algebra_element(b)})"
                                   for a, b in p.pairs))
    rep.add("mu", "OK", "mu(p) = 1: OK")
    rep.add("commutes", "OK", "r p = p r: OK")
    rep.add("sigma_invariant", "OK", "sigma-invariance: OK")
    rep.add("delta_annihilated", "OK", "delta annihilation: OK")
    for note in res.notes:
        rep.lines.append(f"note: {note}")


def cmd_idempotent(job: JobConfig, args, rep: _Report) -> None:
    code = _code(job)
    rep.add("n", code.n)
    rep.add("k", code.k)
    rep.add("e", format_ore(code.idempotent), "e = " + format_ore(code.idempotent))
    rep.add("idempotent", "OK", "e^2 = e: OK")
    rep.add("annihilates", "OK", "g(1-e) = 0: OK")
    rep.add("ideal_equality", "OK", "ideal equality: OK")


def cmd_parity_check(job: JobConfig, args, rep: _Report) -> None:
    code = _code(job)
    H = parity_check_matrix(code)
    rep.add("f", format_ore(code.complement), "f = 1 - e = " + format_ore(code.complement))
    rep.add("parity_check", _matrix_rows(H), "M(f) =\n" + format_polymatrix(H))


def cmd_distances(job: JobConfig, args, rep: _Report) -> None:
    code = _code(job)
    prof = free_distance(basic_encoder(code), args.max_j)
    rep.add("n", prof.n)
    rep.add("k", prof.k)
    rep.add("degree", prof.degree)
    rep.add("column_distances", prof.column_distances,
            "column distances: " + ", ".join(f"d^c_{j} = {d}" for j, d in enumerate(prof.column_distances)))
    rep.add("row_distances", prof.row_distances,
            "row distances: " + ", ".join(f"d^r_{j} = {d}" for j, d in enumerate(prof.row_distances)))
    rep.add("singleton_bound", prof.singleton_bound, f"singleton bound = {prof.singleton_bound}")
    if prof.free_distance is not None:
        rep.add("free_distance", {"value": prof.free_distance, "certificate": prof.certificate},
                f"d_free = {prof.free_distance} ({prof.certificate})")
    else:
        lo, hi = prof.bracket
        rep.add("free_distance", {"bracket": [lo, hi], "certificate": "exhausted"},
                f"d_free in [{lo}, {hi if hi is not None else '?'}] (exhausted)")


def cmd_info(job: JobConfig, args, rep: _Report) -> None:
    M, snf = smith_of(job.generators)
    rep.add("field", f"GF({job.field.order})", f"field: GF({job.field.order})")
    rep.add("algebra", job.algebra.kind, f"algebra: {job.algebra.kind}, dimension {job.algebra.dim}")
    rep.add("generators", [format_ore(g) for g in job.generators],
            "\n".join(f"g_{i} = {format_ore(g)}" for i, g in enumerate(job.generators)))
    rep.add("generator_matrix", _matrix_rows(M), "M(G) =\n" + format_polymatrix(M))
    rep.add("invariant_factors", [format_poly(f) for f in snf.invariant_factors],
            "invariant factors: " + ", ".join(format_poly(f) for f in snf.invariant_factors))
    rep.add("rank", snf.rank, f"rank = {snf.rank}")
    rep.add("basic", is_basic(snf), f"basic: {'yes' if is_basic(snf) else 'no'}")


HANDLERS = {
    "check-algebra": cmd_check_algebra,
    "separability": cmd_separability,
    "idempotent": cmd_idempotent,
    "parity-check": cmd_parity_check,
    "distances": cmd_distances,
    "info": cmd_info,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewideal", description="Idempotent generators of ideal convolutional codes.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("config", help="JSON job description")
    ap.add_argument("--strategy", choices=STRATEGIES, help="override the separability strategy")
    ap.add_argument("--max-j", type=int, default=4, help="largest j for distance search (default 4)")
    ap.add_argument("--output", choices=("text", "json"), default="text")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = load_config(args.config)
        if args.strategy:
            job.strategy = args.strategy
        rep = _Report()
        HANDLERS[args.command](job, args, rep)
    except NotAnIdealCode as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NOT_IDEAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ConfigError, AlgebraError, VerificationError, SearchTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(rep.emit(args.output))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
