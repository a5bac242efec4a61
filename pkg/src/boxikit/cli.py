"""Command-line entry point.  Every command prints one JSON document on
stdout; errors go to stderr as JSON with exit codes 2 (input), 3 (capacity)
and 1 (verification)."""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from .bounds import bound_report, extract_witness
from .errors import BoxikitError, InputError, VerificationError
from .families import FamilySpec, divisors, exponents_of
from .graph import BoxRepresentation, LabeledGraph
from .oracle import OracleConfig, certify_representation_optimal, exact_parameter
from .posets import (
    DEFAULT_MAX_EXTENSIONS,
    build_divisibility_realizer,
    divisibility_poset,
    exact_poset_dimension,
    verify_realizer,
)
from .representation import (
    CompleteGraphWarning,
    normalize_to_unit,
    representation_for_divisor_graph,
    representation_for_power_graph_cyclic,
    representation_for_tcc,
    translate_to_origin,
    verify_representation,
)

FAMILY_CHOICES = ("tcc", "divisor", "power-cyclic", "reduced-power", "hypercube-tc", "crown", "lifted")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _family_spec(args) -> FamilySpec:
    fam = args.family
    if fam == "tcc":
        if not args.params:
            raise InputError("--family tcc needs --params")
        return FamilySpec("tcc", tuple(args.params))
    if fam in ("divisor", "power-cyclic", "reduced-power"):
        if args.n is None:
            raise InputError(f"--family {fam} needs --n")
        return FamilySpec(fam, (args.n,))
    if fam in ("hypercube-tc", "crown"):
        if args.s is None:
            raise InputError(f"--family {fam} needs --s")
        kind = "hypercube-tc-truncated" if fam == "hypercube-tc" and args.truncated else fam
        return FamilySpec(kind, (args.s,))
    if args.s is None or args.k is None:
        raise InputError("--family lifted needs --s and --k")
    return FamilySpec("lifted", (args.s, args.k))


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None


def _log(args, text: str) -> None:
    if args.verbose:
        print(text, file=sys.stderr)


def cmd_build(args):
    spec = _family_spec(args)
    g = spec.build()
    _log(args, f"{spec.kind}{list(spec.params)}: {g.n} vertices, {g.edge_count} edges")
    return 0, g.to_json()


def cmd_represent(args):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CompleteGraphWarning)
        if args.family == "tcc":
            if not args.params:
                raise InputError("--family tcc needs --params")
            spec = FamilySpec("tcc", tuple(args.params))
            rep, trace = representation_for_tcc(args.params)
        elif args.family in ("divisor", "power-cyclic"):
            if args.n is None:
                raise InputError(f"--family {args.family} needs --n")
            spec = FamilySpec(args.family, (args.n,))
            build = representation_for_divisor_graph if args.family == "divisor" else representation_for_power_graph_cyclic
            rep, trace = build(args.n)
        else:
            raise InputError("represent supports --family tcc, divisor or power-cyclic")
    if args.unit:
        rep = normalize_to_unit(rep)
    if args.translate:
        rep = translate_to_origin(rep)
    g = spec.build()
    verdict = verify_representation(g, rep)
    if not verdict:
        raise VerificationError(f"constructed representation fails: {verdict.kind}", pair=list(verdict.pair))
    _log(args, f"{spec.kind}{list(spec.params)}: verified {rep.dimension}-dimensional representation")
    out = rep.to_json()
    out["trace"] = trace.to_json()
    return 0, out


def cmd_verify(args):
    g = LabeledGraph.from_json(_read_json(args.graph))
    rep = BoxRepresentation.from_json(_read_json(args.rep))
    verdict = verify_representation(g, rep)
    _log(args, "ok" if verdict else f"{verdict.kind} at {verdict.pair}")
    return (0 if verdict else 1), verdict.to_json()


def cmd_exact(args):
    g = LabeledGraph.from_json(_read_json(args.graph))
    kwargs = {"max_k": args.cap, "mode": args.param}
    if args.max_nonedges is not None:
        kwargs["max_non_edges"] = args.max_nonedges
    result = exact_parameter(g, OracleConfig(**kwargs))
    _log(args, f"{args.param} = {result.value} ({result.status})")
    return 0, result.to_json()


def _need_params(args) -> list[int]:
    if not args.params:
        raise InputError("--params is required")
    return sorted(args.params)


def cmd_bounds(args):
    return 0, bound_report(_need_params(args)).to_json()


def cmd_witness(args):
    w = extract_witness(_need_params(args))
    _log(args, f"{len(w.components)} components, weighted sum {w.weighted_sum()}")
    return 0, w.to_json()


def cmd_realizer(args):
    n = args.n
    r = build_divisibility_realizer(n)
    out = r.to_json()
    out["n"] = n
    out["size"] = len(r)
    out["omega"] = exponents_of(n).omega
    poset = None
    if args.verify or args.exact_dim:
        poset = divisibility_poset(divisors(n))
    if args.verify:
        verdict = verify_realizer(poset, r)
        out["verified"] = verdict.to_json()
        if not verdict:
            raise VerificationError("realizer does not realize the divisibility order", **verdict.to_json())
    if args.exact_dim:
        out["exact_dimension"] = exact_poset_dimension(poset, args.max_extensions)
    return 0, out


def cmd_report(args):
    m = _need_params(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CompleteGraphWarning)
        rep, trace = representation_for_tcc(m)
    kwargs = {}
    if args.max_nonedges is not None:
        kwargs["max_non_edges"] = args.max_nonedges
    cert = certify_representation_optimal(m, OracleConfig(**kwargs))
    bounds = bound_report(m)
    out = {
        "m": m,
        "construction": {"dimension": rep.dimension, "verified": True, "trace": trace.to_json()},
        "bounds": bounds.to_json(),
        "lower": bounds.lower,
        "upper": bounds.upper,
        "exact": cert.boxicity if cert.boxicity == cert.cubicity else None,
        "exact_boxicity": cert.boxicity,
        "exact_cubicity": cert.cubicity,
        "oracle_status": cert.status,
        "exact_asserted": cert.exact_asserted,
        "witness": extract_witness(m).to_json() if len(m) >= 2 else None,
    }
    _log(args, f"m={m}: lower {bounds.lower}, exact {out['exact']}, upper {bounds.upper} ({cert.status})")
    return 0, out


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="boxikit", description="Cube representations and boxicity bounds for TCC graphs.")
    parser.add_argument("--verbose", action="store_true", help="human-readable summary on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    # --verbose is accepted after the subcommand as well
    common = _Parser(add_help=False)
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)
    add = sub.add_parser
    sub.add_parser = lambda *a, **kw: add(*a, parents=[common], **kw)

    def family_flags(p, choices):
        p.add_argument("--family", required=True, choices=choices)
        p.add_argument("--params", type=_int_list)
        p.add_argument("--n", type=int)
        p.add_argument("--s", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--truncated", action="store_true")

    p = sub.add_parser("build", help="emit a family graph as JSON")
    family_flags(p, FAMILY_CHOICES)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("represent", help="emit a verified cube representation")
    family_flags(p, ("tcc", "divisor", "power-cyclic"))
    p.add_argument("--unit", action="store_true", help="rescale every axis to unit lengths")
    p.add_argument("--translate", action="store_true", help="shift every axis to start at 0")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="check a representation against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--rep", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact boxicity or cubicity of a small graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--param", choices=("boxicity", "cubicity"), default="boxicity")
    p.add_argument("--max-nonedges", type=int)
    p.add_argument("--cap", type=int, help="give up above this many dimensions")
    p.set_defaults(func=cmd_exact)

    for name, func in (("bounds", cmd_bounds), ("witness", cmd_witness)):
        p = sub.add_parser(name)
        p.add_argument("--params", type=_int_list, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("realizer", help="divisibility realizer of D(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--exact-dim", action="store_true")
    p.add_argument("--max-extensions", type=int, default=DEFAULT_MAX_EXTENSIONS)
    p.set_defaults(func=cmd_realizer)

    p = sub.add_parser("report", help="construction, bounds, oracle and witness for TCC(m)")
    p.add_argument("--params", type=_int_list, required=True)
    p.add_argument("--max-nonedges", type=int)
    p.set_defaults(func=cmd_report)
    return parser


def _error_json(exc: BoxikitError) -> dict:
    out = {"error": type(exc).__name__, "message": str(exc.args[0]) if exc.args else ""}
    state = getattr(exc, "state", None)
    if state:
        out["state"] = state
    return out


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        code, payload = args.func(args)
    except BoxikitError as exc:
        print(json.dumps(_error_json(exc), sort_keys=True, default=str), file=sys.stderr)
        return exc.exit_code
    print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
