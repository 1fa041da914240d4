"""Batch command-line front end.

Subcommands expose every computation and emit Markdown or JSON with
deterministic ordering.  Exit codes: 0 success, 1 configuration error,
2 indeterminate zero region, 3 check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .characters import (TorusCharacter, chi_line_for, iota_check,
                         parabolic_levi, standard_line)
from .dualside import lfactor_standard, order_at_2, restrict_via_r
from .eisenstein import (constant_term, entireness_report, pole_report,
                         render_markdown_table, render_table_rows,
                         sharp_invariance_check, siegel_weil_constant)
from .errors import ConfigError, DegeisError, IndeterminateZeroRegionError
from .forms import parse_affine, parse_rational
from .localint import ShellFunction, tate_integral
from .rootdata import RootSystem, build_system

SCHEMA = "degeis/1"

_GROUPS = {"D4": "split_D4", "2D4": "quasi_D4", "3D4": "tri_D4",
           "G2": "G2", "A1": "A1"}


def _system(name: str) -> RootSystem:
    if name not in _GROUPS:
        raise ConfigError(f"unknown group {name!r}; choose from {sorted(_GROUPS)}")
    return build_system(_GROUPS[name])


def _line(system: RootSystem, spec: str | None, parabolic: str) -> TorusCharacter:
    if spec is None:
        return chi_line_for(system, parabolic)
    if spec in ("chiQ", "chiP", "muP", "muQ", "kappa"):
        return standard_line(system, spec)
    coords = [parse_affine(p) for p in spec.split(",")]
    if len(coords) != system.rank:
        raise ConfigError(f"custom line needs {system.rank} coordinates, got {len(coords)}")
    return TorusCharacter(tuple(coords))


def _emit(args, payload: dict, markdown: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        print(markdown)


def cmd_table(args) -> int:
    system = _system(args.group)
    levi = parabolic_levi(system, args.parabolic)
    line = _line(system, args.line, args.parabolic)
    point = parse_rational(args.point)
    ct = constant_term(system, levi, line)
    rows = render_table_rows(ct, point, assume_no_real_zeros=args.assume_no_real_zeros)
    payload = {"command": "table", "group": args.group, "parabolic": args.parabolic,
               "point": str(point), "line": str(line),
               "rows": [{k: v for k, v in r.items() if not k.endswith("_json")} | {
                   "j_factor_json": r["j_factor_json"],
                   "exponent_json": r["exponent_json"]} for r in rows]}
    _emit(args, payload, render_markdown_table(ct, point,
                                               assume_no_real_zeros=args.assume_no_real_zeros))
    return 0


def cmd_poles(args) -> int:
    system = _system(args.group)
    levi = parabolic_levi(system, args.parabolic)
    line = _line(system, args.line, args.parabolic)
    point = parse_rational(args.point)
    ct = constant_term(system, levi, line)
    rep = pole_report(ct, point, assume_no_real_zeros=args.assume_no_real_zeros)
    groups = [{
        "exponent": "(" + ",".join(str(x) for x in g.exponent_at_point) + ")",
        "words": [str(w) for w in g.words],
        "order": g.order,
        "log_term": g.log_term,
        "leading": str(g.leading) if g.leading is not None else None,
    } for g in rep.groups]
    payload = {"command": "poles", "group": args.group, "parabolic": args.parabolic,
               "point": str(point), "order": rep.order,
               "square_integrable": rep.square_integrable, "groups": groups}
    lines = [f"pole order at {point}: {rep.order}",
             f"square integrable: {rep.square_integrable}"]
    for g in groups:
        words = ", ".join(g["words"])
        extra = " (log term survives)" if g["log_term"] else ""
        lines.append(f"  exponent {g['exponent']}: order {g['order']}{extra}  [{words}]")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_sw(args) -> int:
    system = _system(args.group)
    rep = siegel_weil_constant(system)
    payload = {"command": "sw", "group": args.group,
               "constant": str(rep.constant),
               "section_constant": str(rep.section_constant),
               "sharp_limit_P": {"order": rep.sharp_p.order, "leading": str(rep.sharp_p.leading)},
               "sharp_limit_Q": {"order": rep.sharp_q.order, "leading": str(rep.sharp_q.leading)},
               "residue_w2342": {"order": rep.residue_w2342.order,
                                 "leading": str(rep.residue_w2342.leading)}}
    md = "\n".join([
        f"Siegel-Weil constant: {rep.constant}",
        f"section-level constant: {rep.section_constant}",
        f"sharp limit along muP (order {rep.sharp_p.order}): {rep.sharp_p.leading}",
        f"sharp limit along muQ (order {rep.sharp_q.order}): {rep.sharp_q.leading}",
        f"A_w[2342] residue (order {rep.residue_w2342.order}): {rep.residue_w2342.leading}",
    ])
    _emit(args, payload, md)
    return 0


def cmd_sharp_check(args) -> int:
    system = _system(args.group)
    failures = []
    inv = {}
    for i in range(1, system.rank + 1):
        ok, _ = sharp_invariance_check(system, i)
        inv[i] = ok
        if not ok:
            failures.append(f"invariance w_{i}")
    ent = entireness_report(system)
    if not ent.entire:
        failures.append("entireness")
    iota = None
    if system.name in ("split_D4", "quasi_D4"):
        iota = iota_check(system).ok
        if not iota:
            failures.append("iota")
    payload = {"command": "sharp-check", "group": args.group,
               "invariance": {str(i): v for i, v in inv.items()},
               "entire": ent.entire, "h0_pairs_checked": ent.checked_words,
               "iota": iota, "failures": failures}
    lines = [f"invariance under w_{i}: {'ok' if v else 'FAIL'}" for i, v in inv.items()]
    lines.append(f"entireness (boundary + H^0 cancellation over {ent.checked_words} pairs): "
                 f"{'ok' if ent.entire else 'FAIL'}")
    if iota is not None:
        lines.append(f"iota change of variables: {'ok' if iota else 'FAIL'}")
    _emit(args, payload, "\n".join(lines))
    return 3 if failures else 0


def cmd_lfactor(args) -> int:
    source = {"Vtau": "V_tau", "Vchi": "V_chi"}.get(args.source)
    if source is None:
        raise ConfigError("source must be Vtau or Vchi")
    fact = lfactor_standard(source)
    payload = {"command": "lfactor", "source": args.source,
               "factorization": fact.to_json(), "degree": fact.degree(),
               "display": str(fact)}
    lines = [str(fact), f"degree: {fact.degree()}"]
    if args.order_at is not None:
        point = parse_rational(args.order_at)
        if point != 2:
            raise ConfigError("only the point s=2 is modeled")
        order = order_at_2(fact, chi_trivial=(args.chi == "trivial"))
        payload["order_at_2"] = order
        payload["chi"] = args.chi
        lines.append(f"pole order at s=2: {order}")
    if args.biweights:
        payload["biweights"] = [[str(a), str(b)] for a, b in restrict_via_r()]
        lines.append("bi-weights: " + " ".join(f"({a},{b})" for a, b in restrict_via_r()))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_tate(args) -> int:
    kind, _, k = args.function.partition(":")
    try:
        shell = ShellFunction(kind, int(k or "0"))
    except ValueError as exc:
        raise ConfigError(str(exc))
    z = parse_affine(args.z)
    value = tate_integral(shell, z)
    payload = {"command": "tate", "function": args.function, "z": str(z),
               "value": value.to_json(), "display": str(value),
               "is_local_zeta": value.is_local_zeta(),
               "convergence": value.convergence}
    md = f"{value}    [{value.convergence}]"
    if value.is_local_zeta():
        md += f"\n= zeta_v({z})"
    _emit(args, payload, md)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degeis",
        description="Exact constant-term, pole and L-factor calculator for "
                    "degenerate Eisenstein series on D4/G2-type groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, parabolic=True, point=True):
        p.add_argument("--group", required=True, help="D4, 2D4, 3D4, G2 or A1")
        if parabolic:
            p.add_argument("--parabolic", default="borel", help="borel, P or Q")
            p.add_argument("--line", default=None,
                           help="chiQ|chiP|muP|muQ|kappa or comma-separated affine forms "
                                "(default: the chi line of the parabolic)")
        if point:
            p.add_argument("--point", required=True, help="rational point p/q")
        p.add_argument("--format", choices=("md", "json"), default="md")
        p.add_argument("--assume-no-real-zeros", action="store_true",
                       help="certify orders even when zeta arguments fall inside (0,1)")

    p_table = sub.add_parser("table", help="Gindikin-Karpelevich constant-term table")
    common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_poles = sub.add_parser("poles", help="pole order report with exponent grouping")
    common(p_poles)
    p_poles.set_defaults(func=cmd_poles)

    p_sw = sub.add_parser("sw", help="Siegel-Weil proportionality constants")
    common(p_sw, parabolic=False, point=False)
    p_sw.set_defaults(func=cmd_sw)

    p_sharp = sub.add_parser("sharp-check",
                             help="W-invariance, residue cancellation and entireness")
    common(p_sharp, parabolic=False, point=False)
    p_sharp.set_defaults(func=cmd_sharp_check)

    p_lf = sub.add_parser("lfactor", help="standard L-function factorizations")
    p_lf.add_argument("--source", required=True, help="Vtau or Vchi")
    p_lf.add_argument("--chi", choices=("trivial", "nontrivial"), default="nontrivial")
    p_lf.add_argument("--order-at", default=None, help="evaluate the pole order (s=2)")
    p_lf.add_argument("--biweights", action="store_true")
    p_lf.add_argument("--format", choices=("md", "json"), default="md")
    p_lf.set_defaults(func=cmd_lfactor)

    p_tate = sub.add_parser("tate", help="formal shell/lattice Tate integral")
    p_tate.add_argument("--function", default="lattice:0", help="lattice:k or shell:k")
    p_tate.add_argument("--z", default="2s+3", help="exponent affine form")
    p_tate.add_argument("--format", choices=("md", "json"), default="md")
    p_tate.set_defaults(func=cmd_tate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except IndeterminateZeroRegionError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except DegeisError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error[config-error]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
