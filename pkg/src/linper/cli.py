'''
CLI for linper

This module provides the command-line interface: argument parsing, universe
loading, dispatch to the service layer and JSON serialization. Every
invocation prints exactly one JSON document on standard output; errors go
to standard error with the exit code carried by the exception.
'''

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import __version__, config
from .color import StderrStyle
from .distinction import Form1, Form2
from .enumeration import CrosscheckReport
from .errors import InvalidInputError, LinperError
from .expr import format_expr
from .models import DistinctionContext, Segment, as_rat, format_rat
from .multiseg import LadderRep, SpehDatum
from .orbits import AdmissibleDatum, OrbitDatum
from .search import SearchVerdict
from .service import CertifyResult, DistinctionResult, LinperService, ShapeReport, SpehReport
from .structure import Division, MatMatrix
from .universe import load_universe

log = logging.getLogger(__name__)


def _rep_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("rep", nargs="?", help="Representation expression")
    p.add_argument("--rep", dest="rep_flag", metavar="EXPR", help="Representation expression (alternative to the positional form)")


def _context_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, help="Size of the first block of H")
    p.add_argument("--q", type=int, help="Size of the second block of H")
    p.add_argument("--a", default="0", help="Twist exponent, an integer or p/q (default 0)")


def build_parser() -> argparse.ArgumentParser:
    '''
    Build the argument parser for the command-line interface.

    Returns:
        argparse.ArgumentParser: The argument parser for the command-line interface.
    '''
    examples = """Examples:
    linper parse "[0,1]@rho2 + [-1,0]@rho2"
    linper jacquet --k 2 "[1,2]@triv + [0,1]@triv"
    linper orbits --k 1 --p 1 --q 1
    linper distinguished --p 3 --q 3 --a 0 "Sp([0,0]@rho2,3)"
    linper distinguished "Sp([0,0]@chi,2) x Sp([0,0]@chibar,2)"
    linper certify --p 4 --q 4 "[-1/2,3/2]@rho2 x [1/2,1/2]@rho2"
    linper crosscheck --max-degree 6 --out report.json
    """

    p = argparse.ArgumentParser(
        prog="linper",
        description="linper - segment, ladder and Speh combinatorics and linear-period distinction",
        epilog=examples,
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p.add_argument("-v", "--version", action="version", version=f"linper {__version__}")
    universe_help = f"Universe JSON file (default: ${config.UNIVERSE_ENV_VAR}, else built-in)"
    p.add_argument("--universe", metavar="PATH", help=universe_help)
    p.add_argument("--log-level", choices=config.LOG_LEVELS, default=config.DEFAULT_LOG_LEVEL, help="Logging level on stderr")
    p.add_argument("--no-color", action="store_true", help="Disable colored error messages")

    # --universe is accepted after the subcommand too; SUPPRESS keeps the top-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--universe", metavar="PATH", default=argparse.SUPPRESS, help=universe_help)

    sub = p.add_subparsers(dest="cmd")

    def add(name: str, **kwargs) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kwargs)

    _rep_args(add("parse", help="Parse and print the canonical form"))
    _rep_args(add("dual", help="Contragredient of a representation or context"))
    _rep_args(add("shapes", help="Ladder and alignment predicates"))
    _rep_args(add("speh", help="Speh expansion and highest derivative"))

    jac = add("jacquet", help="Jacquet module of a ladder")
    _rep_args(jac)
    jac.add_argument("--k", type=int, required=True, help="Degree of the first tensor slot")

    _rep_args(add("divisions", help="All divisions of a ladder"))

    der = add("derivative", help="Derivative of a left aligned ladder")
    _rep_args(der)
    der.add_argument("--k", type=int, required=True, help="Order of the derivative")

    _rep_args(add("kernel", help="Standard module kernel of a ladder"))

    orb = add("orbits", help="Orbits for the parabolic of type (k, n - k)")
    orb.add_argument("--k", type=int, required=True)
    orb.add_argument("--p", type=int, required=True)
    orb.add_argument("--q", type=int, required=True)

    adm = add("admissible", help="Admissible orbit data and modulus exponents")
    adm.add_argument("--nbar", required=True, help="Block sizes, comma separated (e.g. 1,1)")
    adm.add_argument("--p", type=int, required=True)
    adm.add_argument("--q", type=int, required=True)

    mat = add("mat", help="Matrices with given row and column sums")
    mat.add_argument("--alpha", required=True, help="Row sums, comma separated")
    mat.add_argument("--beta", required=True, help="Column sums, comma separated")

    dist = add("distinguished", help="Decide distinction (unitary classification without --p/--q)")
    _rep_args(dist)
    _context_args(dist)

    cert = add("certify", help="Necessity search with its certificate trace")
    _rep_args(cert)
    _context_args(cert)

    _rep_args(add("shape", help="Shape of a ladder over a character"))

    pole = add("poleset", help="Pole-set transfer check")
    _rep_args(pole)
    pole.add_argument("--a", required=True, help="Twist exponent")

    com = add("commutes", help="Irreducibility of Sp(delta,k) x L(m)")
    com.add_argument("first", help="Speh representation")
    com.add_argument("second", help="Right aligned ladder")

    cc = add("crosscheck", help="Run the classification oracles")
    cc.add_argument("--max-degree", type=int, default=8)
    cc.add_argument("--out", help="Also write the report to this file")
    cc.add_argument("--no-complementary", action="store_true", help="Skip complementary series")

    return p


# ---------------------------------------------------------------------------
# serializers
# ---------------------------------------------------------------------------

def rat_to_json(x: Fraction) -> str:
    return format_rat(x)


def segments_to_json(segs: Sequence[Segment]) -> list[str]:
    return [str(s) for s in segs]


def ladder_to_json(L: LadderRep) -> list[str]:
    return segments_to_json(L.segments)


def datum_to_dict(d: SpehDatum) -> dict[str, Any]:
    return {"delta": str(d.delta), "k": d.k}


def context_to_dict(ctx: DistinctionContext) -> dict[str, Any]:
    return {"p": ctx.p, "q": ctx.q, "a": rat_to_json(ctx.a)}


def shape_report_to_dict(r: ShapeReport) -> dict[str, Any]:
    return {
        "degree": r.degree,
        "ladder": r.ladder,
        "left_aligned": r.left_aligned,
        "right_aligned": r.right_aligned,
        "ess_speh": r.ess_speh,
        "self_dual": r.self_dual,
        "central_exponent": rat_to_json(r.central_exponent),
    }


def speh_report_to_dict(r: SpehReport) -> dict[str, Any]:
    return {
        "datum": datum_to_dict(r.datum),
        "ladder": ladder_to_json(r.ladder),
        "degree": r.degree,
        "highest_derivative": {
            "shift": rat_to_json(r.derivative_shift),
            "datum": datum_to_dict(r.derivative) if r.derivative is not None else None,
        },
    }


def division_to_dict(div: Division) -> dict[str, Any]:
    return {
        "cuts": [rat_to_json(c) for c in div.cuts],
        "left": ladder_to_json(div.left),
        "right": ladder_to_json(div.right),
    }


def orbit_to_dict(o: OrbitDatum) -> dict[str, Any]:
    return {"r": o.r, "s": o.s, "defect": o.defect}


def admissible_to_dict(d: AdmissibleDatum, exponents: dict[str, Fraction]) -> dict[str, Any]:
    return {
        "tau": [j + 1 for j in d.tau],
        "splits": [list(sp) if sp is not None else None for sp in d.splits],
        "exponents": {label: rat_to_json(x) for label, x in exponents.items()},
    }


def matrix_to_json(m: MatMatrix) -> list[list[int]]:
    return [list(row) for row in m.entries]


def form_to_dict(form: Form1 | Form2 | None) -> dict[str, Any] | None:
    if form is None:
        return None
    if isinstance(form, Form1):
        return {"form": "Form1", "i1": form.i1, "i2": form.i2, "i3": form.i3, "l": form.l}
    return {"form": "Form2", "i1": form.i1, "i2": form.i2}


def verdict_to_dict(v: SearchVerdict) -> dict[str, Any]:
    return {
        "status": v.status.value,
        "trace": [
            {"case": st.case, "factor": st.factor, "cut": st.cut, "context": context_to_dict(st.context)}
            for st in v.trace
        ],
    }


def distinction_to_dict(r: DistinctionResult) -> dict[str, Any]:
    return {
        "distinguished": r.distinguished,
        "complete": r.complete,
        "method": r.method,
        "context": context_to_dict(r.context),
    }


def certify_to_dict(r: CertifyResult) -> dict[str, Any]:
    return {"engine": r.engine, **verdict_to_dict(r.verdict)}


def report_to_dict(r: CrosscheckReport) -> dict[str, Any]:
    return r.to_dict()


def document(command: str, payload: dict[str, Any]) -> str:
    return json.dumps({"schema": config.SCHEMA, "command": command, **payload}, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------

def _rep(args: argparse.Namespace) -> str:
    rep = args.rep_flag or args.rep
    if not rep:
        raise InvalidInputError("A representation expression is required")
    if args.rep_flag and args.rep and args.rep_flag != args.rep:
        raise InvalidInputError("Give the representation either positionally or with --rep, not both")
    return rep


def _int_list(text: str, name: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidInputError(f"--{name} must be a comma separated list of integers, got {text!r}")
    if not values:
        raise InvalidInputError(f"--{name} must not be empty")
    return values


def _context(args: argparse.Namespace) -> DistinctionContext | None:
    if args.p is None and args.q is None:
        return None
    if args.p is None or args.q is None:
        raise InvalidInputError("--p and --q must be given together")
    return DistinctionContext(args.p, args.q, as_rat(args.a))


def _write_report(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
    except OSError as ex:
        raise LinperError(f"Cannot write report to {path}: {ex}")
    log.info("report written to %s", path)


def run(args: argparse.Namespace, svc: LinperService, style: StderrStyle) -> dict[str, Any]:
    '''
    Execute one subcommand.

    Returns:
        dict[str, Any]: The JSON payload (without schema and command).
    '''
    cmd = args.cmd
    if cmd == "parse":
        expr = svc.parse(_rep(args))
        return {"input": _rep(args), "canonical": format_expr(expr)}
    elif cmd == "dual":
        return {"rep": svc.normalize(_rep(args)), "dual": format_expr(svc.dual(_rep(args)))}
    elif cmd == "shapes":
        return {"rep": svc.normalize(_rep(args)), **shape_report_to_dict(svc.shapes(_rep(args)))}
    elif cmd == "speh":
        return {"rep": svc.normalize(_rep(args)), **speh_report_to_dict(svc.speh(_rep(args)))}
    elif cmd == "jacquet":
        pairs = svc.jacquet(_rep(args), args.k)
        return {
            "rep": svc.normalize(_rep(args)),
            "k": args.k,
            "pairs": [{"first": ladder_to_json(a), "second": ladder_to_json(b)} for a, b in pairs],
        }
    elif cmd == "divisions":
        divs = svc.divisions(_rep(args))
        return {"rep": svc.normalize(_rep(args)), "count": len(divs), "divisions": [division_to_dict(d) for d in divs]}
    elif cmd == "derivative":
        der = svc.derivative(_rep(args), args.k)
        return {"rep": svc.normalize(_rep(args)), "k": args.k, "derivative": ladder_to_json(der) if der is not None else None}
    elif cmd == "kernel":
        prods = svc.kernel(_rep(args))
        return {
            "rep": svc.normalize(_rep(args)),
            "products": [segments_to_json(pr) if pr is not None else None for pr in prods],
        }
    elif cmd == "orbits":
        return {"k": args.k, "p": args.p, "q": args.q, "orbits": [orbit_to_dict(o) for o in svc.orbits(args.k, args.p, args.q)]}
    elif cmd == "admissible":
        nbar = _int_list(args.nbar, "nbar")
        data = svc.admissible(nbar, args.p, args.q)
        return {"nbar": nbar, "p": args.p, "q": args.q, "data": [admissible_to_dict(d, e) for d, e in data]}
    elif cmd == "mat":
        alpha, beta = _int_list(args.alpha, "alpha"), _int_list(args.beta, "beta")
        mats = svc.mat(alpha, beta)
        return {"alpha": alpha, "beta": beta, "count": len(mats), "matrices": [matrix_to_json(m) for m in mats]}
    elif cmd == "distinguished":
        return {"rep": svc.normalize(_rep(args)), **distinction_to_dict(svc.distinguished(_rep(args), _context(args)))}
    elif cmd == "certify":
        ctx = _context(args)
        result = svc.certify(_rep(args), ctx) if ctx is not None else svc.certify_unitary(_rep(args))
        return {"rep": svc.normalize(_rep(args)), **certify_to_dict(result)}
    elif cmd == "shape":
        return {"rep": svc.normalize(_rep(args)), "shape": form_to_dict(svc.shape(_rep(args)))}
    elif cmd == "poleset":
        ok, poles = svc.poleset(_rep(args), args.a)
        return {
            "rep": svc.normalize(_rep(args)),
            "a": rat_to_json(as_rat(args.a)),
            "pole_set": [rat_to_json(x) for x in poles],
            "transfer": ok,
        }
    elif cmd == "commutes":
        return {"first": svc.normalize(args.first), "second": svc.normalize(args.second), "commutes": svc.commutes(args.first, args.second)}
    elif cmd == "crosscheck":
        report = svc.crosscheck(args.max_degree, include_complementary=not args.no_complementary)
        payload = report_to_dict(report)
        if args.out:
            _write_report(Path(args.out), document(cmd, payload))
        if not report.ok:
            style.report(f"Warning: {len(report.discrepancies)} discrepancies found", level="warning")
        return payload
    raise InvalidInputError(f"Unknown command {cmd!r}")


def main(argv: Sequence[str] | None = None) -> None:
    '''
    Main function for the command-line interface.

    Returns:
        None
    '''
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    style = StderrStyle(not args.no_color)

    if args.cmd is None:
        parser.print_help()
        raise SystemExit(0)

    try:
        universe = load_universe(config.resolve_universe_path(args.universe))
        svc = LinperService(universe)
        payload = run(args, svc, style)
    except KeyboardInterrupt:
        style.report("\nCancelled.")
        raise SystemExit(130) from None
    except LinperError as ex:
        style.report(f"Error: {ex}")
        sys.exit(ex.exit_code)

    print(document(args.cmd, payload))
    if args.cmd == "crosscheck" and not payload["ok"]:
        sys.exit(1)
