"""Command-line front end.

Exit status: 0 when the check holds or the solve succeeded and re-verified,
1 when a check fails (the report carries a witness), 2 on usage, input or
scope errors.  Elements, permutations and subsets are 1-based on the command
line and in every document.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .characterize import (
    FAMILIES,
    PointSet,
    characterize,
    least_in,
    prefix_property,
    signed_prefix_property,
    witness_shift_signed,
    witness_shift_sub,
    witness_shift_super,
)
from .exact import fmt, fmt_point, q, to_json
from .ground import Biset, fmt_set, members
from .io import (
    SchemaError,
    biset_function_from_doc,
    biset_function_to_doc,
    load,
    points_to_doc,
    set_function_from_doc,
    set_function_to_doc,
)
from .majorization import ScalingShift, ab_compare, is_least_element
from .optimize import (
    DerivativeOracle,
    LeastElementRequest,
    UnsupportedError,
    check_exchange_optimality,
    least_element,
)
from .polyhedra import (
    Polyhedron,
    base_vertices,
    bisub_vertices,
    enumerate_integral_points,
    greedy_vertex,
    member,
    signed_greedy_vertex,
    violated_constraint,
)
from .setfn import (
    SUPERMODULAR,
    bisubmodular_violation,
    dual,
    submodular_violation,
    supermodular_violation,
)

ORDERS = {
    "full": "full",
    "sub": "weak_sub",
    "super": "weak_super",
    "abs": "weak_abs",
    "weak_sub": "weak_sub",
    "weak_super": "weak_super",
    "weak_abs": "weak_abs",
}
ORDER_SYMBOL = {"full": "≺", "weak_sub": "≺↓", "weak_super": "≺↑", "weak_abs": "≺abs"}


class CliError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------- parsing


def _csv(text: str, what: str) -> tuple:
    try:
        return tuple(q(v) for v in text.split(",") if v.strip() != "")
    except (TypeError, ValueError) as exc:
        raise CliError("usage", f"{what}: {exc}") from exc


def _perm(text: str, n: int) -> tuple:
    vals = _csv(text, "--pi")
    if sorted(vals) != list(range(1, n + 1)):
        raise CliError("usage", f"--pi must be a permutation of 1..{n}")
    return tuple(v - 1 for v in vals)


def _signs(text: str, n: int) -> tuple:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("+", "+1", "1"):
            out.append(1)
        elif tok in ("-", "-1"):
            out.append(-1)
        else:
            raise CliError("usage", f"--sign entries must be + or -, got {tok!r}")
    if len(out) != n:
        raise CliError("usage", f"--sign needs {n} entries")
    return tuple(out)


def _box(text: str, n: int) -> list:
    parts = text.split(",")
    if len(parts) != n:
        raise CliError("usage", f"--box needs {n} lo:hi ranges")
    out = []
    for p in parts:
        try:
            lo, hi = p.split(":")
            out.append((q(lo), q(hi)))
        except ValueError as exc:
            raise CliError("usage", f"bad --box range {p!r}") from exc
    return out


def _load(path):
    try:
        return load(path)
    except FileNotFoundError as exc:
        raise CliError("file_not_found", f"{path}: no such file") from exc
    except OSError as exc:
        raise CliError("io", f"{path}: {exc}") from exc


def _setfn(path):
    return set_function_from_doc(_load(path))


def _bifn(path):
    return biset_function_from_doc(_load(path))


def _ab(args, n) -> ScalingShift:
    a = _csv(args.a, "--a") if args.a else None
    b = _csv(args.b, "--b") if args.b else None
    try:
        return ScalingShift.make(n, a, b)
    except ValueError as exc:
        raise CliError("usage", str(exc)) from exc


def _order(name: str) -> str:
    if name not in ORDERS:
        raise CliError("usage", f"unknown order {name!r}")
    return ORDERS[name]


def _glue_negative(argv: Sequence[str]) -> list:
    """Attach values like ``-1,2`` to the preceding long option so argparse accepts them."""
    out: list = []
    for tok in argv:
        if (
            out
            and out[-1].startswith("--")
            and "=" not in out[-1]
            and len(tok) > 1
            and tok[0] == "-"
            and (tok[1].isdigit() or tok[1] in ".,")
        ):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


# ---------------------------------------------------------------- output


def _jsonable(obj):
    if isinstance(obj, Biset):
        return {"S": [i + 1 for i in members(obj.pos)], "T": [i + 1 for i in members(obj.neg)]}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    return to_json(obj)


def _emit(args, report: dict, lines: list) -> None:
    if args.json:
        print(json.dumps(_jsonable(report), sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _onebased(pi):
    return tuple(i + 1 for i in pi)


# ---------------------------------------------------------------- verbs


def cmd_check(args) -> int:
    if bool(args.fn) == bool(args.bifn):
        raise CliError("usage", "give exactly one of --fn or --bifn")
    if args.fn:
        f = _setfn(args.fn)
        if f.kind == SUPERMODULAR:
            bad = supermodular_violation(f, args.mode)
        else:
            bad = submodular_violation(f, args.mode)
        holds = bad is None
        report = {"property": f.kind, "holds": holds}
        lines = [f"{f.kind}: {'true' if holds else 'false'}"]
        if bad is not None:
            a, b = bad
            report["witness"] = [[i + 1 for i in members(a)], [i + 1 for i in members(b)]]
            lines.append(
                f"violated by A={fmt_set(a)}, B={fmt_set(b)}: "
                f"f(A)+f(B)={fmt(f(a) + f(b))}, f(A∪B)+f(A∩B)={fmt(f(a | b) + f(a & b))}"
            )
    else:
        h = _bifn(args.bifn)
        try:
            bad = bisubmodular_violation(h, max_n=args.max_n)
        except ValueError as exc:
            raise CliError("unsupported", str(exc)) from exc
        holds = bad is None
        report = {"property": "bisubmodular", "holds": holds}
        lines = [f"bisubmodular: {'true' if holds else 'false'}"]
        if bad is not None:
            report["witness"] = list(bad)
            lines.append(f"violated by {bad[0]} and {bad[1]}")
    _emit(args, report, lines)
    return 0 if holds else 1


def cmd_vertex(args) -> int:
    if bool(args.fn) == bool(args.bifn):
        raise CliError("usage", "give exactly one of --fn or --bifn")
    if args.fn:
        f = _setfn(args.fn)
        pi = _perm(args.pi, f.n)
        x = greedy_vertex(f, pi)
        poly = Polyhedron(f, "Bsup" if f.kind == SUPERMODULAR else "B")
    else:
        h = _bifn(args.bifn)
        if not args.sign:
            raise CliError("usage", "--sign is required with --bifn")
        pi = _perm(args.pi, h.n)
        s = _signs(args.sign, h.n)
        x = signed_greedy_vertex(h, pi, s)
        poly = Polyhedron(h, "Btilde")
    bad = violated_constraint(poly, x)
    report = {"point": x, "member": bad is None, "polyhedron": poly.kind}
    lines = [fmt_point(x)]
    if bad is not None:
        report["violated"] = bad if isinstance(bad, Biset) else [i + 1 for i in members(bad)]
        shown = bad if isinstance(bad, Biset) else fmt_set(bad)
        lines.append(f"not a member of {poly.kind}: constraint {shown} violated")
    _emit(args, report, lines)
    return 0 if bad is None else 1


def cmd_enumerate(args) -> int:
    if bool(args.fn) == bool(args.bifn):
        raise CliError("usage", "give exactly one of --fn or --bifn")
    if args.fn:
        f = _setfn(args.fn)
        fam = args.family or "B"
        if fam not in ("P", "B", "Psup", "Bsup"):
            raise CliError("usage", f"--family {fam} needs a biset function")
        poly = Polyhedron(f, fam)
        n = f.n
    else:
        h = _bifn(args.bifn)
        poly = Polyhedron(h, "Btilde")
        n = h.n
    box = _box(args.box, n) if args.box else None
    try:
        pts = enumerate_integral_points(poly, box)
    except ValueError as exc:
        raise CliError("precondition", str(exc)) from exc
    doc = points_to_doc(n, pts)
    _emit(args, doc, [fmt_point(p) for p in pts] + [f"{len(pts)} points"])
    return 0


def cmd_compare(args) -> int:
    x = _csv(args.x, "--x")
    y = _csv(args.y, "--y")
    if len(x) != len(y):
        raise CliError("usage", "--x and --y must have the same length")
    kind = _order(args.order)
    ab = _ab(args, len(x))
    holds = ab_compare(x, y, ab, kind)
    _emit(
        args,
        {"order": kind, "holds": holds},
        [f"x {ORDER_SYMBOL[kind]} y: {'true' if holds else 'false'}"],
    )
    return 0 if holds else 1


def _least_polyhedron(args):
    if bool(args.fn) == bool(args.bifn):
        raise CliError("usage", "give exactly one of --fn or --bifn")
    fam = args.family
    if args.fn:
        f = _setfn(args.fn)
        if fam not in ("P", "B", "Psup", "Bsup"):
            raise CliError("usage", f"--family {fam} needs a biset function")
        try:
            return Polyhedron(f, fam)
        except ValueError as exc:
            raise CliError("schema", str(exc)) from exc
    h = _bifn(args.bifn)
    if fam != "Btilde":
        raise CliError("usage", "a biset function needs --family Btilde")
    return Polyhedron(h, fam)


def _spot_candidates(poly: Polyhedron, x):
    """Members to re-check a solution against: the vertices of the relevant polytope."""
    src = poly.source
    if poly.kind == "Btilde":
        return bisub_vertices(src)
    if poly.kind in ("B", "P"):
        return base_vertices(src)
    return base_vertices(dual(src)) if poly.kind in ("Bsup", "Psup") else []


def cmd_least(args) -> int:
    poly = _least_polyhedron(args)
    kind = _order(args.kind)
    ab = _ab(args, poly.n)
    try:
        x = least_element(LeastElementRequest(poly, ab, kind, args.integral))
    except UnsupportedError as exc:
        raise CliError("unsupported", str(exc)) from exc
    except ValueError as exc:
        raise CliError("precondition", str(exc)) from exc
    ok = member(poly, x)
    if ok:
        cands = list(_spot_candidates(poly, x))
        if args.integral:
            cands = [c for c in cands if all(isinstance(v, int) for v in c)]
        check = is_least_element(x, cands + [x], ab, kind)
        ok = check.ok
    report = {"point": x, "kind": kind, "family": poly.kind, "verified": ok}
    _emit(args, report, [fmt_point(x)] + ([] if ok else ["verification failed"]))
    return 0 if ok else 1


def cmd_condition(args) -> int:
    f = _setfn(args.fn)
    x = _csv(args.x, "--x")
    if len(x) != f.n:
        raise CliError("usage", f"--x needs {f.n} entries")
    text = args.phi
    if not (text == "quadratic" or text.startswith("quadratic:")):
        raise CliError("usage", "--phi must be quadratic or quadratic:b1,...,bn")
    b = _csv(text.split(":", 1)[1], "--phi") if ":" in text else None
    try:
        ab = ScalingShift.make(f.n, None, b)
    except ValueError as exc:
        raise CliError("usage", str(exc)) from exc
    poly = Polyhedron(f, "Bsup" if f.kind == SUPERMODULAR else "B")
    if not member(poly, x):
        raise CliError("precondition", f"x is not a member of {poly.kind}")
    res = check_exchange_optimality(poly, x, DerivativeOracle.quadratic(ab, args.integral))
    report = {"holds": res.ok}
    lines = [f"condition 1: {'true' if res.ok else 'false'}"]
    if not res.ok:
        i, k = res.pair
        report["pair"] = [i + 1, k + 1]
        lines.append(f"moving from x_{i + 1} to x_{k + 1} decreases the objective")
    _emit(args, report, lines)
    return 0 if res.ok else 1


def _pointset(args) -> PointSet:
    from .io import points_from_doc

    n, pts = points_from_doc(_load(args.points))
    return PointSet(n, pts)


def cmd_characterize(args) -> int:
    c = _pointset(args)
    integral = True if args.integral else (False if args.continuous else None)
    try:
        rep = characterize(c, args.family, integral)
    except ValueError as exc:
        raise CliError("precondition", str(exc)) from exc
    induced = (
        biset_function_to_doc(rep.induced)
        if args.family == "bisub"
        else set_function_to_doc(rep.induced)
    )
    failures = []
    for fl in rep.failures:
        fl = dict(fl)
        if "pi" in fl:
            fl["pi"] = _onebased(fl["pi"])
        if fl.get("s") is None:
            fl.pop("s", None)
        if "pair" in fl and not isinstance(fl["pair"][0], Biset):
            fl["pair"] = [[i + 1 for i in members(m)] for m in fl["pair"]]
        failures.append(fl)
    report = {"family": rep.family, "holds": rep.holds, "induced": induced, "failures": failures}
    lines = [f"{rep.family}: {'holds' if rep.holds else 'fails'}"]
    for fl in failures:
        lines.append("  " + ", ".join(f"{k}={_text(v)}" for k, v in fl.items()))
    if rep.holds and rep.family != "bisub":
        order = {"super": "weak_super", "sub": "weak_sub", "base": "full"}[rep.family]
        x = least_in(c, ScalingShift.make(c.n), order)
        if x is not None:
            report["least"] = x
            lines.append(f"least (1,0) element: {fmt_point(x)}")
    _emit(args, report, lines)
    return 0 if rep.holds else 1


def _text(v):
    if isinstance(v, Biset):
        return str(v)
    if isinstance(v, (list, tuple)):
        if v and all(not isinstance(u, (list, tuple, Biset)) for u in v):
            return fmt_point(v)
        return "[" + "; ".join(_text(u) for u in v) + "]"
    return fmt(v) if not isinstance(v, str) else v


def cmd_witness(args) -> int:
    c = _pointset(args)
    pi = _perm(args.pi, c.n)
    if args.sign:
        s = _signs(args.sign, c.n)
        b = witness_shift_signed(c, pi, s)
        kind = "weak_abs"
        pc = signed_prefix_property(c)
    else:
        mode = args.mode
        b = witness_shift_super(c, pi) if mode == "max" else witness_shift_sub(c, pi)
        kind = "weak_super" if mode == "max" else "weak_sub"
        pc = prefix_property(c, mode)
    ab = ScalingShift.make(c.n, None, b)
    least = least_in(c, ab, kind)
    report = {"shift": b, "kind": kind, "least": least, "prefix_property": pc.ok}
    lines = [f"shift: {fmt_point(b)}"]
    lines.append(
        f"least {kind} element for this shift: {fmt_point(least) if least is not None else 'none'}"
    )
    _emit(args, report, lines)
    return 0 if least is not None else 1


# ---------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leastmaj", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = common(sub.add_parser("check", help="test (bi)submodularity"))
    sp.add_argument("--fn")
    sp.add_argument("--bifn")
    sp.add_argument("--mode", choices=("local", "pairs"), default="local")
    sp.add_argument("--max-n", type=int, default=8, dest="max_n")
    sp.set_defaults(run=cmd_check)

    sp = common(sub.add_parser("vertex", help="greedy or signed greedy vertex"))
    sp.add_argument("--fn")
    sp.add_argument("--bifn")
    sp.add_argument("--pi", required=True)
    sp.add_argument("--sign")
    sp.set_defaults(run=cmd_vertex)

    sp = common(sub.add_parser("enumerate", help="integral points of a polyhedron"))
    sp.add_argument("--fn")
    sp.add_argument("--bifn")
    sp.add_argument("--family", choices=("P", "B", "Psup", "Bsup"))
    sp.add_argument("--box")
    sp.set_defaults(run=cmd_enumerate)

    sp = common(sub.add_parser("compare", help="majorization comparison"))
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--a")
    sp.add_argument("--b")
    sp.add_argument("--order", required=True, choices=sorted(ORDERS))
    sp.set_defaults(run=cmd_compare)

    sp = common(sub.add_parser("least", help="least majorized element"))
    sp.add_argument("--fn")
    sp.add_argument("--bifn")
    sp.add_argument("--family", required=True, choices=("P", "Psup", "B", "Bsup", "Btilde"))
    sp.add_argument("--kind", required=True, choices=sorted(ORDERS))
    sp.add_argument("--a")
    sp.add_argument("--b")
    sp.add_argument("--integral", action="store_true")
    sp.set_defaults(run=cmd_least)

    sp = common(sub.add_parser("condition", help="exchange optimality of a base point"))
    sp.add_argument("--fn", required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--phi", default="quadratic")
    sp.add_argument("--integral", action="store_true", help="use forward/backward differences")
    sp.set_defaults(run=cmd_condition)

    sp = common(sub.add_parser("characterize", help="recognize a point set"))
    sp.add_argument("--points", required=True)
    sp.add_argument("--family", required=True, choices=FAMILIES)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--integral", action="store_true")
    mode.add_argument("--continuous", action="store_true")
    sp.set_defaults(run=cmd_characterize)

    sp = common(sub.add_parser("witness", help="shift certifying a missing least element"))
    sp.add_argument("--points", required=True)
    sp.add_argument("--pi", required=True)
    sp.add_argument("--sign")
    sp.add_argument("--mode", choices=("max", "min"), default="max")
    sp.set_defaults(run=cmd_witness)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative(argv))
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.run(args)
    except CliError as exc:
        return _fail(args, exc.code, str(exc))
    except SchemaError as exc:
        return _fail(args, "schema", str(exc))
    except ValueError as exc:
        return _fail(args, "invalid_input", str(exc))


def _fail(args, code, message) -> int:
    if getattr(args, "json", False):
        print(json.dumps({"error": code, "message": message}, sort_keys=True))
    print(f"error[{code}]: {message}", file=sys.stderr)
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
