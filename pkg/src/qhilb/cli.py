"""``qhilb`` command-line front end.

Results go to stdout as JSON (or TSV with ``--tsv``).  Exit status is 0 on
success, 1 when a check fails, and 2 on usage or input errors; errors are
reported on stderr as a JSON object with an ``"error"`` key.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import appendix, betti, castelnuovo, ktheory, moduli, quiver, series
from .errors import BudgetExceeded
from .fields import field_from_tag
from .ncalgebra import AlgebraSpec
from .series import LaurentPoly


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    def __init__(self, payload):
        super().__init__("check failed")
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# argument helpers


def _coeffs(text: str) -> list[int]:
    text = text.strip().strip("[]")
    if not text:
        return []
    try:
        return [int(c) for c in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _poly(text: str) -> LaurentPoly:
    text = text.strip()
    if text.startswith("{"):
        return LaurentPoly.from_json(json.loads(text))
    return LaurentPoly.parse(text)


def _json_arg(text: str):
    """Inline JSON, ``-`` for stdin, or a path to a JSON file."""
    if text == "-":
        return json.load(sys.stdin)
    if text.lstrip().startswith(("{", "[")):
        return json.loads(text)
    path = Path(text)
    if not path.exists():
        raise UsageError(f"no such file: {text}")
    return json.loads(path.read_text())


def _k0(text: str) -> ktheory.K0Class:
    vals = _coeffs(text)
    if len(vals) != 4:
        raise UsageError("a K_0 class is four integers r,a,b,c")
    return ktheory.K0Class(*vals)


def _rep(obj):
    if not isinstance(obj, dict):
        raise ValueError("a representation is a JSON object")
    if len(obj.get("dims", ())) == 4:
        return quiver.QuiverRep.from_json(obj)
    return quiver.QuiverRep0.from_json(obj)


# commands; each returns a JSON-serializable payload


def cmd_castelnuovo_enumerate(args):
    polys = castelnuovo.enumerate_polys(args.ne, args.no)
    return [{"coeffs": list(s.coeffs), "sigma": s.sigma, "poly": str(s)} for s in polys]


def cmd_castelnuovo_count(args):
    return {"ne": args.ne, "no": args.no, "count": castelnuovo.count(args.ne, args.no)}


def cmd_castelnuovo_validate(args):
    try:
        s = castelnuovo.validate(_coeffs(args.coeffs))
    except castelnuovo.CastelnuovoError as exc:
        raise CheckFailed({"valid": False, "index": exc.index, "reason": str(exc)}) from None
    n_e, n_o = s.weights
    return {
        "valid": True,
        "coeffs": list(s.coeffs),
        "sigma": s.sigma,
        "weights": [n_e, n_o],
        "partition": list(castelnuovo.to_partition(s)),
        "char_poly": s.char_poly().to_json(),
    }


def cmd_castelnuovo_hilbert(args):
    s = castelnuovo.validate(_coeffs(args.coeffs))
    return castelnuovo.to_hilbert(s, args.order).to_json()


def cmd_castelnuovo_diagram(args):
    s = castelnuovo.validate(_coeffs(args.coeffs))
    return {"coeffs": list(s.coeffs), "diagram": castelnuovo.diagram(s).split("\n")}


def cmd_castelnuovo_membership(args):
    m = castelnuovo.n_membership(args.ne, args.no)
    if m is None:
        return {"ne": args.ne, "no": args.no, "in_N": False}
    return {"ne": args.ne, "no": args.no, "in_N": True, "k": m.k, "l": m.l, "case": m.case, "c": m.exponent}


def cmd_hilbert_expand(args):
    return series.expand_over_hA(_poly(args.q), args.order).to_json()


def cmd_hilbert_invariants(args):
    q = _poly(args.q)
    gk, e = series.gk_dim_and_multiplicity(q)
    return {"q": q.to_json(), "gk_dim": gk, "multiplicity": str(e), "rank": series.rank(q)}


def _class_payload(x: ktheory.K0Class):
    out = {"class": list(x), "normalized": ktheory.is_normalized(x)}
    if out["normalized"]:
        out["invariants"] = list(ktheory.invariants(x))
    return out


def cmd_ktheory_class(args):
    if args.resolution is not None:
        x = ktheory.from_resolution(betti.BettiTable.from_json(_json_arg(args.resolution)))
    elif args.q is not None:
        x = ktheory.from_char_poly(_poly(args.q))
    else:
        raise UsageError("give --q or --resolution")
    return _class_payload(x)


def cmd_ktheory_normalize(args):
    d, y = ktheory.normalize(_k0(args.cls))
    return {"shift": d, **_class_payload(y)}


def cmd_ktheory_chi(args):
    return {"chi": ktheory.euler_chi(_k0(args.first), _k0(args.second))}


def cmd_ktheory_shift(args):
    return {"class": list(ktheory.shift(_k0(args.cls), args.d))}


def cmd_betti_enumerate(args):
    return [t.to_json() for t in betti.enumerate_for(_poly(args.q), args.bound)]


def cmd_betti_validate(args):
    obj = _json_arg(args.table)
    try:
        t = betti.BettiTable.from_json(obj)
    except betti.BettiError as exc:
        raise CheckFailed({"valid": False, "reason": str(exc)}) from None
    return {"valid": True, **t.to_json(), "char_poly": t.char_poly().to_json()}


def cmd_betti_extremal(args):
    return betti.extremal_resolution(args.ne, args.no).to_json()


def cmd_quiver_check(args):
    rep = quiver.QuiverRep.from_json(_json_arg(args.rep))
    ok = quiver.check_relations(rep, AlgebraSpec.parse(args.algebra))
    if not ok:
        raise CheckFailed({"relations_hold": False})
    return {"relations_hold": True}


def cmd_quiver_ind(args):
    F = _rep(_json_arg(args.rep))
    if isinstance(F, quiver.QuiverRep):
        F = F.restrict()
    return quiver.ind(F, AlgebraSpec.parse(args.algebra)).to_json()


def cmd_quiver_membership(args):
    spec = AlgebraSpec.parse(args.algebra)
    rep = _rep(_json_arg(args.rep))
    if isinstance(rep, quiver.QuiverRep):
        if spec.kind != "Hc":
            raise UsageError("membership of four-vertex representations is implemented for hc only")
        return {"set": "C", "member": quiver.membership_C_Hc(rep, spec)}
    if spec.kind == "Hc":
        return {"set": "D", "member": quiver.membership_D_Hc(rep)}
    return {"set": "rank", "member": quiver.rank_condition_typeA(rep, spec)}


def cmd_quiver_stability(args):
    rep = _rep(_json_arg(args.rep))
    if isinstance(rep, quiver.QuiverRep):
        rep = rep.restrict()
    if args.p is not None and rep.field.tag != f"fp:{args.p}":
        rep = quiver.QuiverRep0.from_json({**rep.to_json(), "field": f"fp:{args.p}"})
    return {"stability": quiver.theta_stable_bruteforce(rep).value}


def cmd_quiver_hom(args):
    F, G = _rep(_json_arg(args.first)), _rep(_json_arg(args.second))
    return {"hom": quiver.hom_dim(F, G), "chi": quiver.chi_gamma(F.dims, G.dims)}


def cmd_moduli_search(args):
    field = args.field_obj or field_from_tag("fp:101")
    pts = moduli.search(args.ne, args.no, field, budget=args.budget, seed=args.seed)
    return [p.to_json() for p in pts[: args.limit]]


def _points(obj) -> list[moduli.ModuliPoint]:
    """A single point object or a list of them, as printed by ``moduli search``."""
    objs = obj if isinstance(obj, list) else [obj]
    return [moduli.ModuliPoint.from_json(o) for o in objs]


def cmd_moduli_tangent(args):
    out = []
    for pt in _points(_json_arg(args.point)):
        out.append({
            "ne": pt.n_e,
            "no": pt.n_o,
            "tangent_dim": moduli.tangent_dim(pt),
            "expected": moduli.expected_tangent_dim(pt.n_e, pt.n_o),
        })
    return out


def cmd_moduli_count(args):
    return {"ne": args.ne, "no": args.no, "p": args.p, "count": moduli.count_exhaustive(args.ne, args.no, args.p)}


def cmd_moduli_member(args):
    results = [moduli.membership(p.X, p.Y, p.Xp, p.Yp) for p in _points(_json_arg(args.point))]
    if not all(results):
        raise CheckFailed({"member": results})
    return {"member": results}


def cmd_appendix(args):
    if args.check:
        ok, diff = appendix.check()
        if not ok:
            sys.stderr.write(diff)
            raise CheckFailed({"match": False, "rows": len(appendix.load_golden())})
        return {"match": True, "rows": len(appendix.load_golden())}
    return [r.to_json() for r in appendix.regenerate()]


# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", default=argparse.SUPPRESS)
    fmt.add_argument("--tsv", dest="fmt", action="store_const", const="tsv", default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")
    p.add_argument("--field", default=argparse.SUPPRESS, help="q or fp:<p>")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    top = _Parser(prog="qhilb", parents=[common], description=__doc__.split("\n")[0])
    groups = top.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def weights(p):
        p.add_argument("--ne", type=int, required=True)
        p.add_argument("--no", type=int, required=True)

    g = groups.add_parser("castelnuovo", help="Castelnuovo polynomials").add_subparsers(dest="cmd", required=True)
    weights(leaf(g, "enumerate", cmd_castelnuovo_enumerate, "all polynomials of a weight"))
    weights(leaf(g, "count", cmd_castelnuovo_count, "number of polynomials of a weight"))
    weights(leaf(g, "membership", cmd_castelnuovo_membership, "position relative to the admissible set"))
    leaf(g, "validate", cmd_castelnuovo_validate, "check a coefficient list").add_argument("coeffs")
    p = leaf(g, "hilbert", cmd_castelnuovo_hilbert, "Hilbert series of the ideal")
    p.add_argument("coeffs")
    p.add_argument("--order", type=int, default=6)
    leaf(g, "diagram", cmd_castelnuovo_diagram, "column diagram").add_argument("coeffs")

    g = groups.add_parser("hilbert", help="Hilbert series").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "expand", cmd_hilbert_expand, "expand q * h_A")
    p.add_argument("--q", required=True)
    p.add_argument("--order", type=int, default=6)
    leaf(g, "invariants", cmd_hilbert_invariants, "GK-dimension, multiplicity, rank").add_argument("--q", required=True)

    g = groups.add_parser("ktheory", help="Grothendieck group").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "class", cmd_ktheory_class, "class from a polynomial or resolution")
    p.add_argument("--q")
    p.add_argument("--resolution")
    leaf(g, "normalize", cmd_ktheory_normalize, "normalizing twist").add_argument("cls")
    p = leaf(g, "chi", cmd_ktheory_chi, "Euler form")
    p.add_argument("first")
    p.add_argument("second")
    p = leaf(g, "shift", cmd_ktheory_shift, "class of a twist")
    p.add_argument("cls")
    p.add_argument("--d", type=int, required=True)

    g = groups.add_parser("betti", help="Betti tables").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "enumerate", cmd_betti_enumerate, "admissible tables for q")
    p.add_argument("--q", required=True)
    p.add_argument("--bound", type=int)
    leaf(g, "validate", cmd_betti_validate, "check a table").add_argument("table")
    weights(leaf(g, "extremal", cmd_betti_extremal, "extremal resolution"))

    g = groups.add_parser("quiver", help="quiver representations").add_subparsers(dest="cmd", required=True)
    for name, func, help_ in [
        ("check", cmd_quiver_check, "relations of a four-vertex representation"),
        ("ind", cmd_quiver_ind, "induce to four vertices"),
        ("membership", cmd_quiver_membership, "moduli-space membership"),
    ]:
        p = leaf(g, name, func, help_)
        p.add_argument("rep")
        p.add_argument("--algebra", default="hc")
    p = leaf(g, "stability", cmd_quiver_stability, "theta-stability by enumeration")
    p.add_argument("rep")
    p.add_argument("--p", type=int)
    p = leaf(g, "hom", cmd_quiver_hom, "hom dimension and Euler form")
    p.add_argument("first")
    p.add_argument("second")

    g = groups.add_parser("moduli", help="matrix moduli varieties").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "search", cmd_moduli_search, "random points")
    weights(p)
    p.add_argument("--budget", type=int, default=50)
    p.add_argument("--limit", type=int, default=5)
    leaf(g, "tangent", cmd_moduli_tangent, "tangent space dimension").add_argument("point")
    leaf(g, "member", cmd_moduli_member, "check a point").add_argument("point")
    p = leaf(g, "count", cmd_moduli_count, "exhaustive point count")
    weights(p)
    p.add_argument("--p", type=int, required=True)

    p = groups.add_parser("appendix", parents=[common], help="regenerate the small-invariant table")
    p.add_argument("--check", action="store_true", help="compare with the transcribed table")
    p.set_defaults(func=cmd_appendix)
    return top


def _tsv(payload) -> str:
    def cell(v):
        return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))

    if isinstance(payload, list):
        if not payload:
            return ""
        if all(isinstance(r, dict) for r in payload):
            keys = list(payload[0])
            lines = ["\t".join(keys)] + ["\t".join(cell(r.get(k)) for k in keys) for r in payload]
            return "\n".join(lines) + "\n"
        return "\n".join(cell(r) for r in payload) + "\n"
    if isinstance(payload, dict):
        return "".join(f"{k}\t{cell(v)}\n" for k, v in payload.items())
    return cell(payload) + "\n"


def _emit(payload, fmt: str) -> None:
    if fmt == "tsv":
        sys.stdout.write(_tsv(payload))
    else:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def main(argv: list[str] | None = None) -> int:
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "fmt", "json")
        args.seed = getattr(args, "seed", 0)
        args.field_obj = field_from_tag(args.field) if hasattr(args, "field") else None
        payload = args.func(args)
    except CheckFailed as exc:
        _emit(exc.payload, fmt)
        return 1
    except (UsageError, ValueError, BudgetExceeded, json.JSONDecodeError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "kind": type(exc).__name__}) + "\n")
        return 2
    _emit(payload, fmt)
    return 0


if __name__ == "__main__":
    sys.exit(main())
