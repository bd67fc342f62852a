"""Command-line interface.

Every subcommand reads documented TOML files or decimal-integer flags,
computes with exact rationals, and prints a deterministic report on
stdout (JSON by default, `--format plain` for a human summary; the
ORBIKLT_FORMAT environment variable overrides the flag). Identical
inputs produce byte-identical reports.

Exit codes: 0 success, 2 parse error, 3 intersection form not negative
definite, 4 not special, 5 unsupported invariant, 6 other domain error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import dualgraph, fileio, germs, orbibase
from .errors import (NonCoprimeError, NotNegativeDefiniteError,
                     NotSpecialError, OrbikltError, ParseError,
                     UnsupportedError, WrongClassError)
from .exact import hj_evaluate, hj_expand, rational_str

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_NEGATIVE_DEFINITE = 3
EXIT_NOT_SPECIAL = 4
EXIT_UNSUPPORTED = 5
EXIT_DOMAIN = 6

_MINUS_ONE_CURVE_WARNING = (
    "the configuration contains a (-1)-curve, so it is not a minimal "
    "resolution: the shape catalogue does not apply and the klt verdict "
    "rests on the exact solve alone; for this blown-up tangential shape "
    "the verdict depends on the branch data (see README, known verdicts)")

_ORDER_WARNING = (
    "local group order is N*m1*m2 with N the cyclic-type invariant of the "
    "chain (for a chain of k curves of weight 2, N = k+1), not the chain "
    "length")

_BAD_ORBIFOLD_WARNING = (
    "genus-0 curve with one mark or two distinct marks admits no "
    "uniformizing structure (bad orbifold); the reported order is the "
    "quotient of the defining presentation")


def _ints_arg(text: str) -> tuple[int, ...]:
    if text.strip() == "":
        return ()
    try:
        return tuple(int(piece, 10) for piece in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of integers, got {text!r}")


def _file_digest(path: str) -> dict:
    data = Path(path).read_bytes()
    return {"file": str(path), "sha256": hashlib.sha256(data).hexdigest()}


def _args_digest(payload: dict) -> dict:
    canon = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return {"args": payload, "sha256": hashlib.sha256(canon.encode()).hexdigest()}


def _cmd_graph(args) -> tuple[dict, dict, list[str]]:
    doc = fileio.load_document(args.file)
    g = fileio.parse_graph(doc)
    warnings = []
    if any(e == 1 for e in g.vertices):
        warnings.append(_MINUS_ONE_CURVE_WARNING)
    cls = dualgraph.classify_graph(g)
    res = dualgraph.solve_discrepancies(g)
    result = {
        "vertices": list(g.vertices),
        "negative_definite": True,
        "adjunction_degrees": [rational_str(x) for x in res.d],
        "discrepancies": [rational_str(x) for x in res.a],
        "is_klt": res.is_klt,
        "class": cls.value,
    }
    if cls is dualgraph.GraphClass.CHAIN_TWO_BLACK_ENDS:
        n, q = dualgraph.cyclic_invariants(g)
        result["cyclic_type"] = {"N": n, "q": q}
        result["local_group_order"] = dualgraph.local_group_order(g)
        warnings.append(_ORDER_WARNING)
    elif args.order:
        dualgraph.local_group_order(g)      # raises UnsupportedError
    return result, _file_digest(args.file), warnings


def _cmd_germ(args) -> tuple[dict, dict, list[str]]:
    doc = fileio.load_document(args.file)
    g = fileio.parse_germ(doc)
    cls = germs.classify_germ(g)
    klt = cls != germs.NOT_KLT
    result = {
        "class": cls.label,
        "params": list(cls.params),
        "is_klt": klt,
        "first_blowup_coefficient": rational_str(germs.blowup_discrepancy(g)),
        "local_fundamental_group": "finite" if klt else "infinite",
    }
    return result, _file_digest(args.file), []


def _cmd_enumerate(args) -> tuple[dict, dict, list[str]]:
    families = germs.enumerate_tangent_families(
        args.branches, args.contact, args.max_mult)
    result = {
        "branches": args.branches,
        "contact": args.contact,
        "max_mult": args.max_mult,
        "families": [list(f) for f in families],
    }
    payload = {"branches": args.branches, "contact": args.contact,
               "max_mult": args.max_mult}
    return result, _args_digest(payload), []


def _cmd_cusp(args) -> tuple[dict, dict, list[str]]:
    cover = germs.etale_cover_over_cusp(args.p, args.q, args.mult)
    result = {
        "p": cover.p,
        "q": cover.q,
        "mult": cover.mult,
        "cover_equation": cover.equation,
        "klt": cover.klt,
    }
    payload = {"p": args.p, "q": args.q, "mult": args.mult}
    return result, _args_digest(payload), []


def _cmd_cyclic(args) -> tuple[dict, dict, list[str]]:
    if args.nq is not None:
        if len(args.nq) != 2:
            raise ParseError("--nq expects exactly two integers N,Q")
        n, q = args.nq
        chain = hj_expand(n, q)
        payload = {"nq": [n, q]}
    else:
        chain = list(args.chain)
        n, q = hj_evaluate(chain)
        payload = {"chain": chain}
    result = {"N": n, "q": q, "chain": chain}
    return result, _args_digest(payload), []


def _cmd_curve(args) -> tuple[dict, dict, list[str]]:
    curve = orbibase.OrbifoldCurve(args.genus, args.mults)
    info = orbibase.curve_group(curve)
    result = {
        "genus": curve.genus,
        "mults": list(curve.mults),
        "degree": rational_str(info.degree),
        "trichotomy": info.trichotomy.value,
        "order": info.order if info.order is not None else "infinite",
        "presentation": {
            "generators": list(info.presentation.generators),
            "relators": list(info.presentation.relators),
        },
        "almost_abelian": info.almost_abelian,
        "rank": info.rank if info.rank is not None else "n/a",
        "special": orbibase.is_special_curve(curve),
    }
    warnings = [_BAD_ORBIFOLD_WARNING] if info.bad_orbifold else []
    payload = {"genus": args.genus, "mults": list(args.mults)}
    return result, _args_digest(payload), warnings


def _cmd_base(args) -> tuple[dict, dict, list[str]]:
    doc = fileio.load_document(args.file)
    fibration = fileio.parse_fibration(doc)
    base = orbibase.orbifold_base(fibration)
    points = {}
    for label, fd in fibration.fibers:
        points[label] = {
            "components": [list(c) for c in fd.components],
            "multiplicity": orbibase.fiber_multiplicity(fd),
        }
    result = {
        "base_genus": fibration.base_genus,
        "points": points,
        "orbifold_base": {"genus": base.genus, "mults": list(base.mults)},
        "base_degree": rational_str(orbibase.curve_degree(base)),
        "general_type": orbibase.is_general_type_fibration(fibration),
    }
    return result, _file_digest(args.file), []


_OUTCOMES = {
    "nef": orbibase.MinimalModelOutcome.NEF,
    "mori": orbibase.MinimalModelOutcome.MORI_FIBER_OVER_CURVE,
    "delpezzo": orbibase.MinimalModelOutcome.DEL_PEZZO,
}


def _cmd_verdict(args) -> tuple[dict, dict, list[str]]:
    kappa = orbibase.KodairaDim.parse(args.kappa)
    outcome = _OUTCOMES[args.outcome]
    mori_base = None
    if args.mori_base_genus is not None:
        mori_base = orbibase.OrbifoldCurve(args.mori_base_genus,
                                           args.mori_base_mults or ())
    kappa1 = None
    if args.fibration is not None:
        if args.fiber_genus is None:
            raise ParseError("--fibration needs --fiber-genus (and --fiber-mults)")
        fibration = fileio.parse_fibration(fileio.load_document(args.fibration))
        fiber = orbibase.OrbifoldCurve(args.fiber_genus, args.fiber_mults or ())
        kappa1 = (fibration, fiber)
    summary = orbibase.SurfaceSummary(kappa, outcome, mori_base, kappa1)
    verdict = orbibase.abelianity_verdict(summary, args.special == "true")
    result = {
        "branch": verdict.branch.value,
        "conclusion": verdict.conclusion,
        "almost_abelian": verdict.almost_abelian,
        "finite": verdict.finite,
        "rank_bound": verdict.rank_bound,
        "even_rank": verdict.even_rank,
        "rationale": list(verdict.rationale),
    }
    payload = {"kappa": args.kappa, "outcome": args.outcome, "special": args.special}
    return result, _args_digest(payload), []


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbiklt",
        description="exact klt and orbifold-curve classification for surface pairs")
    parser.add_argument("--format", choices=["json", "plain"], default="json",
                        help="report format (env ORBIKLT_FORMAT overrides)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        # accepted after the subcommand too; SUPPRESS keeps the top-level
        # default from being clobbered when the flag comes first
        p.add_argument("--format", choices=["json", "plain"],
                       default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        return p

    p = add_parser("graph", help="solve discrepancies of a dual graph")
    p.add_argument("file")
    p.add_argument("--order", action="store_true",
                   help="demand the local group order (error if unsupported)")
    p.set_defaults(handler=_cmd_graph)

    p = add_parser("germ", help="classify a boundary germ")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_germ)

    p = add_parser("enumerate",
                       help="klt weight tuples of a uniform tangent family")
    p.add_argument("--branches", type=int, required=True)
    p.add_argument("--contact", type=int, required=True)
    p.add_argument("--max-mult", type=int, required=True)
    p.set_defaults(handler=_cmd_enumerate)

    p = add_parser("cusp", help="cyclic cover over a weighted cusp")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mult", type=int, required=True)
    p.set_defaults(handler=_cmd_cusp)

    p = add_parser("cyclic", help="Hirzebruch-Jung chain of a cyclic type")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--nq", type=_ints_arg, help="N,Q to expand")
    group.add_argument("--chain", type=_ints_arg, help="e1,e2,... to evaluate")
    p.set_defaults(handler=_cmd_cyclic)

    p = add_parser("curve", help="group of a marked orbifold curve")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--mults", type=_ints_arg, default=())
    p.set_defaults(handler=_cmd_curve)

    p = add_parser("base", help="orbifold base of a fibration")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_base)

    p = add_parser("verdict", help="abelianity verdict for a special pair")
    p.add_argument("--kappa", required=True, choices=["-inf", "0", "1", "2"])
    p.add_argument("--outcome", required=True, choices=sorted(_OUTCOMES))
    p.add_argument("--special", required=True, choices=["true", "false"])
    p.add_argument("--mori-base-genus", type=int)
    p.add_argument("--mori-base-mults", type=_ints_arg)
    p.add_argument("--fibration")
    p.add_argument("--fiber-genus", type=int)
    p.add_argument("--fiber-mults", type=_ints_arg)
    p.set_defaults(handler=_cmd_verdict)

    return parser


def _plain_lines(value, indent: str = "") -> list[str]:
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and any(
                    isinstance(x, (dict, list)) for x in
                    (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{indent}{k}:")
                lines.extend(_plain_lines(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_plain_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            lines.append(f"{indent}- {_plain_scalar(v)}")
    else:
        lines.append(f"{indent}{_plain_scalar(value)}")
    return lines


def _plain_scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_plain_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_plain_scalar(v)}" for k, v in value.items()) + "}"
    return str(value)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(_plain_lines(report)) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = os.environ.get("ORBIKLT_FORMAT", args.format)
    if fmt not in ("json", "plain"):
        fmt = args.format

    def fail(exc: Exception, code: int, kind: str) -> int:
        _emit({"command": args.command,
               "error": {"type": kind, "message": str(exc)}}, fmt)
        return code

    try:
        result, digest, warnings = args.handler(args)
    except ParseError as exc:
        return fail(exc, EXIT_PARSE, "ParseError")
    except NotNegativeDefiniteError as exc:
        return fail(exc, EXIT_NOT_NEGATIVE_DEFINITE, "NotNegativeDefinite")
    except NotSpecialError as exc:
        return fail(exc, EXIT_NOT_SPECIAL, "NotSpecial")
    except UnsupportedError as exc:
        return fail(exc, EXIT_UNSUPPORTED, "Unsupported")
    except (NonCoprimeError, WrongClassError) as exc:
        return fail(exc, EXIT_DOMAIN, type(exc).__name__)
    except (OrbikltError, ValueError) as exc:
        return fail(exc, EXIT_DOMAIN, "DomainError")

    _emit({"command": args.command, "input": digest,
           "result": result, "warnings": warnings}, fmt)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
