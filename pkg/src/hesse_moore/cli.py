"""Command-line front end: every construction and verification as a
subcommand with canonical JSON output.

Output JSON is deterministic byte-for-byte for fixed inputs (sorted
keys, compact separators); timing goes to standard error so it never
perturbs the payload.  Exit codes: 0 ok, 1 domain error, 2 usage error.
The environment variable HESSE_MOORE_SEED fixes the randomness source
used by sampled checks in `verify all`.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import ext as ext_mod
from . import heisenberg as heis
from . import ulrich as ulrich_mod
from . import verify as verify_mod
from .field import FieldElement, primitive_root_of_unity
from .hesse import HesseCurve, curve_through
from .moore import (
    FormMatrix,
    KernelError,
    ProjectivePoint,
    left_kernel_point,
    moore,
    moore_adjugate,
    moore_det,
    moore_scalar,
)
from .poly import HomForm


class UsageError(ValueError):
    pass


def _triple(text: str, p: int):
    if text is None:
        raise UsageError("missing a required point/triple option for this action")
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected three comma-separated residues, got {text!r}")
    return tuple(FieldElement(int(v), p) for v in parts)


def _point(text: str, p: int) -> ProjectivePoint:
    return ProjectivePoint(_triple(text, p))


def _curve(args) -> HesseCurve:
    p = args.p
    if args.lam is not None:
        lam = args.lam % p
        if args.lambda_sign == "plus":
            lam = (-lam) % p
        return HesseCurve.from_lambda(lam, p)
    if getattr(args, "a", None):
        return curve_through(_point(args.a, p))
    raise UsageError("need --lambda or --a to determine the curve")


def _sorted_points(points) -> list[list[int]]:
    return sorted(pt.as_ints() for pt in points)


def _matrix_payload(m: FormMatrix) -> list[list[str]]:
    return m.serialize()


def _parse_matrix(text: str, degree: int, p: int) -> FormMatrix:
    try:
        cells = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"matrix must be JSON (3x3 array of form strings): {exc}")
    if not (isinstance(cells, list) and len(cells) == 3 and all(len(r) == 3 for r in cells)):
        raise UsageError("matrix must be a 3x3 array of form strings")
    return FormMatrix(
        [[HomForm.parse(cell, degree, p) for cell in row] for row in cells]
    )


# -- hesse ---------------------------------------------------------------


def cmd_hesse(args):
    curve = _curve(args)
    action = args.action
    if action == "points":
        pts = curve.enumerate_points()
        return {"count": len(pts), "lambda": curve.lam.value, "p": curve.p,
                "points": _sorted_points(pts)}
    if action in ("add", "sub"):
        x = _point(args.x, args.p)
        a = _point(args.a, args.p)
        op = curve.add if action == "add" else curve.sub
        return {"point": op(x, a).as_ints()}
    if action in ("double", "triple"):
        a = _point(args.a, args.p)
        op = curve.double if action == "double" else curve.triple
        return {"point": op(a).as_ints()}
    if action == "mul":
        if args.n is None:
            raise UsageError("mul needs --n")
        a = _point(args.a, args.p)
        return {"n": args.n, "point": curve.mul(args.n, a).as_ints()}
    if action == "torsion3":
        pts = curve.torsion3()
        return {"count": len(pts), "points": _sorted_points(pts)}
    if action == "torsion6":
        pts = curve.torsion6()
        primitive = [
            a for a in pts
            if curve.mul(2, a) != curve.identity and curve.mul(3, a) != curve.identity
        ]
        return {"count": len(pts), "points": _sorted_points(pts),
                "primitive_count": len(primitive)}
    raise UsageError(f"unknown hesse action {action!r}")


# -- moore ---------------------------------------------------------------


def cmd_moore(args):
    a = _triple(args.a, args.p)
    if args.action == "build":
        return {"matrix": _matrix_payload(moore(a))}
    if args.action == "det":
        return {"det": moore_det(a).serialize()}
    if args.action == "adjugate":
        return {"adjugate": _matrix_payload(moore_adjugate(a))}
    if args.action == "kernel":
        x = _triple(args.x, args.p)
        pt = left_kernel_point(moore_scalar(a, x))
        return {"point": pt.as_ints()}
    raise UsageError(f"unknown moore action {args.action!r}")


# -- heis ----------------------------------------------------------------


def cmd_heis(args):
    p = args.p
    if args.action == "orbit":
        orb = heis.orbit(_triple(args.a, p))
        return {"orbit": _sorted_points(orb), "size": len(orb)}
    if args.action == "invariants":
        t = heis.trace_invariants(_triple(args.a, p))
        return {"invariants": [c.value for c in t]}
    if args.action == "equiv":
        a = _triple(args.a, p)
        a2 = _triple(args.a2, p)
        return {
            "equivalent": heis.are_equivalent(a, a2),
            "invariants": [c.value for c in heis.trace_invariants(a)],
            "invariants2": [c.value for c in heis.trace_invariants(a2)],
            "orbit_size": len(heis.orbit(a)),
        }
    if args.action == "characters":
        n = args.n
        zeta = primitive_root_of_unity(p, n)
        table = {}
        for j in range(n):
            chi = heis.schrodinger_character(n, j, zeta)
            table[str(j)] = {
                f"{g.r},{g.s},{g.t}": chi(g).value for g in heis.hn_elements(n)
            }
        return {"n": n, "p": p, "zeta": zeta.value, "table": table}
    if args.action == "restrict":
        zeta = primitive_root_of_unity(p, args.n)
        holds = heis.verify_restriction(args.n, args.d, args.j, zeta)
        return {"n": args.n, "d": args.d, "j": args.j, "holds": holds}
    if args.action == "tensor":
        zeta = primitive_root_of_unity(p, 3)
        return {"holds": heis.verify_tensor_h3(zeta), "p": p}
    raise UsageError(f"unknown heis action {args.action!r}")


# -- ulrich ---------------------------------------------------------------


def cmd_ulrich(args):
    p = args.p
    a = _triple(args.a, p)
    if args.action == "rank1":
        fac = ulrich_mod.moore_factorization(a)
        return {
            "A": _matrix_payload(fac.A),
            "B": _matrix_payload(fac.B),
            "certified": True,
            "f": fac.f.form.serialize(),
        }
    if args.action == "rank2":
        blocks = ulrich_mod.rank2_ulrich(a)
        return {
            "A": blocks.factorization.A.serialize(),
            "B": blocks.factorization.B.serialize(),
            "certified": True,
            "divergence": blocks.divergence.value,
            "extension_triple": [c.value for c in blocks.extension_triple],
            "f": blocks.factorization.f.form.serialize(),
        }
    fac = ulrich_mod.moore_factorization(a)
    if args.C is None:
        raise UsageError(f"{args.action} needs --C")
    C = _parse_matrix(args.C, args.deg, p)
    if args.action == "partner":
        D = ulrich_mod.partner_D(fac, C)
        return {"D": _matrix_payload(D)}
    if args.action == "trace":
        return {
            "bcb_congruence": ulrich_mod.bcb_congruence(fac, C),
            "bcb_divisible": ulrich_mod.bcb_divisible(fac, C),
            "trace_criterion": ulrich_mod.trace_criterion(fac, C),
        }
    raise UsageError(f"unknown ulrich action {args.action!r}")


# -- ext ------------------------------------------------------------------


def cmd_ext(args):
    p = args.p
    a = _triple(args.a, p)
    if args.action == "dims":
        shifts = [int(v) for v in args.m.split(",")]
        dims = {
            str(m): ext_mod.ext_space(a, m).quotient_dimension for m in shifts
        }
        return {"dims": dims}
    if args.action == "basis":
        m = int(args.m)
        space = ext_mod.ext_space(a, m)
        return {
            "homotopies": [_matrix_payload(c) for c in space.homotopy_basis],
            "m": m,
            "quotient_dimension": space.quotient_dimension,
            "representatives": [_matrix_payload(c) for c in space.representatives],
            "solutions": [_matrix_payload(c) for c in space.solution_basis],
        }
    if args.action == "class":
        if args.C is None:
            raise UsageError("class needs --C")
        C = _parse_matrix(args.C, 1, p)
        value = ext_mod.divergence_class(a, C)
        return {"class": value.value}
    raise UsageError(f"unknown ext action {args.action!r}")


# -- verify ---------------------------------------------------------------


def cmd_verify(args):
    seed = int(os.environ.get("HESSE_MOORE_SEED", "0"))
    rng = random.Random(seed)
    results = verify_mod.run_all(rng, p=args.p)
    payload = {
        "checks": [
            {"detail": r.detail, "name": r.name, "passed": r.passed}
            for r in results
        ],
        "failed": sum(not r.passed for r in results),
        "passed": sum(r.passed for r in results),
        "seed": seed,
    }
    return payload, all(r.passed for r in results)


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hesse-moore",
        description="Moore-matrix determinantal representations of Hesse cubics",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    def common(sp, lam=False, a=False, x=False, a2=False):
        sp.add_argument("--p", type=int, required=True, help="field modulus")
        if lam:
            sp.add_argument("--lambda", dest="lam", type=int, default=None)
            sp.add_argument(
                "--lambda-sign",
                choices=("minus", "plus"),
                default="minus",
                help="sign convention: 'minus' is the internal x0^3+x1^3+x2^3 - lam*x0x1x2;"
                " 'plus' negates lam on the way in",
            )
        if a:
            sp.add_argument("--a", required=False, default=None)
        if x:
            sp.add_argument("--x", default=None)
        if a2:
            sp.add_argument("--a2", default=None)

    hesse = sub.add_parser("hesse", help="curve group law and torsion")
    hesse.add_argument(
        "action",
        choices=("points", "add", "sub", "double", "triple", "mul",
                 "torsion3", "torsion6"),
    )
    common(hesse, lam=True, a=True, x=True)
    hesse.add_argument("--n", type=int, default=None, help="multiplier for mul")
    hesse.set_defaults(handler=cmd_hesse)

    moore_p = sub.add_parser("moore", help="Moore matrices")
    moore_p.add_argument("action", choices=("build", "det", "adjugate", "kernel"))
    common(moore_p, a=True, x=True)
    moore_p.set_defaults(handler=cmd_moore)

    heis_p = sub.add_parser("heis", help="Heisenberg actions and characters")
    heis_p.add_argument(
        "action",
        choices=("orbit", "invariants", "equiv", "characters", "restrict", "tensor"),
    )
    common(heis_p, a=True, a2=True)
    heis_p.add_argument("--n", type=int, default=3)
    heis_p.add_argument("--d", type=int, default=3)
    heis_p.add_argument("--j", type=int, default=1)
    heis_p.set_defaults(handler=cmd_heis)

    ulrich_p = sub.add_parser("ulrich", help="matrix factorizations")
    ulrich_p.add_argument("action", choices=("rank1", "rank2", "partner", "trace"))
    common(ulrich_p, a=True)
    ulrich_p.add_argument("--C", default=None, help="JSON 3x3 array of form strings")
    ulrich_p.add_argument("--deg", type=int, default=1, help="entry degree of --C")
    ulrich_p.set_defaults(handler=cmd_ulrich)

    ext_p = sub.add_parser("ext", help="graded extension spaces")
    ext_p.add_argument("action", choices=("dims", "basis", "class"))
    common(ext_p, a=True)
    ext_p.add_argument("--m", default="-2,-1,0,1",
                       help="shift(s), comma-separated; use --m=-1 for negative values")
    ext_p.add_argument("--C", default=None, help="JSON 3x3 array of linear-form strings")
    ext_p.set_defaults(handler=cmd_ext)

    verify_p = sub.add_parser("verify", help="acceptance battery")
    verify_p.add_argument("action", choices=("all",))
    verify_p.add_argument("--p", type=int, default=None,
                          help="restrict prime-parameterized sweeps to F_p")
    verify_p.set_defaults(handler=cmd_verify)

    return parser


_DOMAIN_ERRORS = (
    ValueError,  # includes UsageError subclasses raised post-parse, Kernel/Factorization errors
    ZeroDivisionError,
    ext_mod.RepresentationError,
    KernelError,
    ulrich_mod.FactorizationError,
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        out = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except TypeError as exc:
        # missing argument for the chosen action (e.g. --x for kernel)
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(json.dumps({"error": str(exc), "status": "error"},
                         sort_keys=True, separators=(",", ":")))
        return 1
    ok = True
    if isinstance(out, tuple):
        out, ok = out
    payload = {"status": "ok"}
    payload.update(out)
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    elapsed_ms = (time.monotonic() - start) * 1000.0
    print(f"timing_ms={elapsed_ms:.1f}", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
