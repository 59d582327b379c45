"""Command-line interface.

Commands
--------
alexander KNOT     print the Alexander presentation, invariant factors, order
kernels KNOT       print disc kernels, pairwise intersections and quotients
bound d2|metabelian|d1
                   assemble a certified BoundReport for a scenario
verify             replay the pinned example computations; exit 1 on mismatch
properties         run the randomized property suites at a fixed seed

Knot references form a tiny grammar: a catalog id (9_46, 6_1, unknot), an
explicit sum "sum(9_46,9_46)", or a power "sum^3(9_46)".  Disc references
name catalog discs, broadcast over summands ("left" or "left^3"), or pick
per summand ("left+right").  2-knots are "unknot", "double(9_46.right)",
powers thereof, or "+"-joined terms.  Metabelian scenarios are "thmC(g=2)"
(4g satellite copies with the built-in twist-knot pattern) or a JSON file
via --scenario-json.

Exit codes: 0 success, 1 verification mismatch, 2 unknown reference or
malformed input, 3 failed theorem hypothesis.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .bounds import DiscPairScenario, TwoKnotPairScenario, full_report
from .catalog import CatalogEntry, builtin_catalog, load_catalog, resolve_knot
from .errors import HypothesisError, SchemaError, UnknownReferenceError
from .knots import (
    SurgeryDisc,
    TwoKnotModel,
    alexander_module_Q,
    alexander_polynomial,
    alexander_presentation,
    boundary_connect_sum,
    connected_sum,
    disc_kernel_Q,
    double_of_disc,
    two_knot_sum,
)
from .metabelian import DiscPairModel, SatelliteScenario
from .modules import quotient_of_submodules, submodule_intersection
from .rings import LAURENT
from . import propsuite


def _fmt_q(x) -> str:
    return LAURENT.fmt(x)


# ---------------------------------------------------------------- references

_SUM_POW = re.compile(r"^sum\^(\d+)\(([^()]+)\)$")
_SUM = re.compile(r"^sum\((.*)\)$")
_DOUBLE = re.compile(r"^double\((\w+)\.(\w+)\)(?:\^(\d+))?$")
_THMC = re.compile(r"^thmC\(g=(\d+)\)$")


def _split_top(text: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def resolve_knot_ref(catalog: dict, ref: str) -> list:
    """A knot reference resolves to its list of catalog-entry summands."""
    ref = ref.strip()
    m = _SUM_POW.match(ref)
    if m:
        count = int(m.group(1))
        if count < 1:
            raise UnknownReferenceError(f"sum power must be >= 1 in {ref!r}")
        return resolve_knot_ref(catalog, m.group(2)) * count
    m = _SUM.match(ref)
    if m:
        leaves = []
        for part in _split_top(m.group(1)):
            leaves.extend(resolve_knot_ref(catalog, part))
        return leaves
    return [resolve_knot(catalog, ref)]


def knot_of_leaves(leaves: list):
    return connected_sum(*(e.knot for e in leaves))


def resolve_disc_spec(leaves: list, spec: str) -> SurgeryDisc:
    """left | left^3 | left+right: one disc name per summand, then sum."""
    spec = spec.strip()
    if "+" in spec:
        names = [p.strip() for p in spec.split("+")]
    else:
        m = re.match(r"^(\w+)\^(\d+)$", spec)
        if m:
            names = [m.group(1)] * int(m.group(2))
        else:
            names = [spec] * len(leaves)
    if len(names) != len(leaves):
        raise UnknownReferenceError(
            f"disc spec {spec!r} names {len(names)} discs for {len(leaves)} summands"
        )
    return boundary_connect_sum(*(e.disc(n) for e, n in zip(leaves, names)))


def resolve_two_knot_ref(catalog: dict, ref: str) -> TwoKnotModel:
    ref = ref.strip()
    if "+" in ref:
        parts = [resolve_two_knot_ref(catalog, p) for p in ref.split("+")]
        return two_knot_sum(*parts)
    if ref == "unknot":
        return TwoKnotModel.unknotted()
    m = _DOUBLE.match(ref)
    if m:
        entry = resolve_knot(catalog, m.group(1))
        disc = entry.disc(m.group(2))
        count = int(m.group(3) or 1)
        if count < 1:
            raise UnknownReferenceError(f"double power must be >= 1 in {ref!r}")
        return two_knot_sum(*[double_of_disc(disc)] * count)
    raise UnknownReferenceError(f"unknown 2-knot reference {ref!r}")


def scenario_from_entries(
    base: CatalogEntry, base_disc: str, companion: CatalogEntry, companion_disc: str, copies: int
) -> SatelliteScenario:
    if base.eta_class is None:
        raise SchemaError(
            "base knot has no infection curve",
            f"{base.id!r} defines no eta_class for satellite scenarios",
        )
    return SatelliteScenario(
        base.knot,
        base.disc(base_disc),
        base.eta_class,
        DiscPairModel(companion.knot, companion.disc(companion_disc)),
        copies,
    )


def resolve_scenario(catalog: dict, spec: str) -> SatelliteScenario:
    m = _THMC.match(spec.strip())
    if not m:
        raise UnknownReferenceError(f"unknown scenario {spec!r}; expected thmC(g=N)")
    g = int(m.group(1))
    if g < 1:
        raise UnknownReferenceError("scenario needs g >= 1")
    entry = resolve_knot(catalog, "6_1")
    return scenario_from_entries(entry, "gamma", entry, "gamma", 4 * g)


def scenario_from_json(catalog: dict, path: str) -> SatelliteScenario:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError("scenario file is not valid JSON", str(e)) from e
    if not isinstance(data, dict):
        raise SchemaError("scenario must be an object", type(data).__name__)
    for key in ("base", "base_disc", "companion", "companion_disc", "copies"):
        if key not in data:
            raise SchemaError("scenario missing field", key)
    if not isinstance(data["copies"], int) or data["copies"] < 0:
        raise SchemaError("copies must be a nonnegative integer", repr(data["copies"]))
    return scenario_from_entries(
        resolve_knot(catalog, data["base"]),
        data["base_disc"],
        resolve_knot(catalog, data["companion"]),
        data["companion_disc"],
        data["copies"],
    )


# ------------------------------------------------------------------ commands

def _load(args) -> dict:
    return load_catalog(args.catalog) if args.catalog else builtin_catalog()


def cmd_alexander(args) -> int:
    catalog = _load(args)
    leaves = resolve_knot_ref(catalog, args.knot)
    knot = knot_of_leaves(leaves)
    pres = alexander_presentation(knot)
    module = alexander_module_Q(knot)
    rows = [[_fmt_q(e.to_laurent_q()) for e in row] for row in pres.rows]
    payload = {
        "knot": knot.name,
        "genus": knot.genus,
        "presentation": rows,
        "invariant_factors": [_fmt_q(d) for d in module.torsion_invariants],
        "free_rank": module.free_rank,
        "generating_rank": module.generating_rank,
        "order": _fmt_q(module.order()),
        "alexander_polynomial": _fmt_q(alexander_polynomial(knot)),
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"knot: {payload['knot']}")
        print(f"genus: {payload['genus']}")
        print("presentation (tV - V^T):")
        for row in rows:
            print("  [" + ", ".join(row) + "]")
        print("invariant factors: " + (", ".join(payload["invariant_factors"]) or "none"))
        print(f"generating rank: {payload['generating_rank']}")
        print(f"order: {payload['order']}")
        print(f"alexander polynomial: {payload['alexander_polynomial']}")
    return 0


def cmd_kernels(args) -> int:
    catalog = _load(args)
    leaves = resolve_knot_ref(catalog, args.knot)
    knot = knot_of_leaves(leaves)
    specs = _split_top(args.discs) if args.discs else sorted(
        name for name in (leaves[0].discs if len(leaves) == 1 else ())
    )
    if not specs:
        raise UnknownReferenceError("no discs given; use --discs")
    ambient = alexander_module_Q(knot)
    discs = [resolve_disc_spec(leaves, s) for s in specs]
    kernels = [disc_kernel_Q(d, ambient) for d in discs]
    payload = {
        "knot": knot.name,
        "module_invariant_factors": [_fmt_q(d) for d in ambient.torsion_invariants],
        "kernels": [],
        "pairs": [],
    }
    for spec, kern in zip(specs, kernels):
        pres = kern.presentation
        payload["kernels"].append(
            {
                "disc": spec,
                "invariant_factors": [_fmt_q(d) for d in pres.torsion_invariants],
                "generating_rank": pres.generating_rank,
                "order": _fmt_q(kern.order()),
            }
        )
    for i in range(len(kernels)):
        for j in range(i + 1, len(kernels)):
            inter = submodule_intersection(kernels[i], kernels[j])
            q12 = quotient_of_submodules(kernels[i], kernels[j])
            q21 = quotient_of_submodules(kernels[j], kernels[i])
            payload["pairs"].append(
                {
                    "discs": [specs[i], specs[j]],
                    "intersection_is_zero": inter.is_zero(),
                    "intersection_order": _fmt_q(inter.order()),
                    "quotient_gr": [q12.generating_rank, q21.generating_rank],
                }
            )
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"knot: {payload['knot']}")
        print(
            "module invariant factors: "
            + (", ".join(payload["module_invariant_factors"]) or "none")
        )
        for k in payload["kernels"]:
            factors = ", ".join(k["invariant_factors"]) or "none"
            print(
                f"kernel[{k['disc']}]: gr {k['generating_rank']}, order {k['order']}, "
                f"invariant factors: {factors}"
            )
        for p in payload["pairs"]:
            a, b = p["discs"]
            zero = "0" if p["intersection_is_zero"] else p["intersection_order"]
            print(
                f"{a} vs {b}: intersection {zero}, quotient gr "
                f"{p['quotient_gr'][0]} and {p['quotient_gr'][1]}"
            )
    return 0


def cmd_bound(args) -> int:
    catalog = _load(args)
    if args.kind == "d2":
        if not args.knot or not args.discs:
            raise UnknownReferenceError("bound d2 needs --knot and --discs A,B")
        leaves = resolve_knot_ref(catalog, args.knot)
        knot = knot_of_leaves(leaves)
        specs = _split_top(args.discs)
        if len(specs) != 2:
            raise UnknownReferenceError(f"--discs needs exactly two specs, got {len(specs)}")
        scenario = DiscPairScenario(
            knot, resolve_disc_spec(leaves, specs[0]), resolve_disc_spec(leaves, specs[1])
        )
    elif args.kind == "metabelian":
        if args.scenario_json:
            scenario = scenario_from_json(catalog, args.scenario_json)
        elif args.scenario:
            scenario = resolve_scenario(catalog, args.scenario)
        else:
            raise UnknownReferenceError("bound metabelian needs --scenario or --scenario-json")
    elif args.kind == "d1":
        if not args.two_knot or not args.vs:
            raise UnknownReferenceError("bound d1 needs --two-knot and --vs")
        scenario = TwoKnotPairScenario(
            resolve_two_knot_ref(catalog, args.two_knot),
            resolve_two_knot_ref(catalog, args.vs),
        )
    else:  # pragma: no cover - argparse restricts choices
        raise UnknownReferenceError(f"unknown bound kind {args.kind!r}")
    report = full_report(scenario)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.to_text())
    return 0


def cmd_verify(args) -> int:
    from .verify import run_verify

    ok = run_verify(emit=print)
    return 0 if ok else 1


def cmd_properties(args) -> int:
    seed = args.seed if args.seed is not None else propsuite.DEFAULT_SEED
    ok = propsuite.run_all(seed=seed, cases=args.cases, emit=print)
    return 0 if ok else 1


# --------------------------------------------------------------------- main

_GRAMMAR_HELP = """\
reference grammar:
  knot        catalog id (9_46, 6_1, unknot), sum(REF,...), or sum^n(ID)
  disc        catalog name, broadcast over summands (left, left^3),
              or per-summand choices joined by + (left+right+left)
  2-knot      unknot, double(ID.DISC), double(ID.DISC)^m, or +-joined terms
  scenario    thmC(g=N): 4N satellite copies of the built-in twist-knot
              pattern with companion disc pair; or --scenario-json FILE with
              {"base","base_disc","companion","companion_disc","copies"}

exit codes: 0 success, 1 verification mismatch, 2 unknown reference or
malformed input, 3 failed theorem hypothesis
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabkit",
        description="Exact Alexander-module bounds on stabilization distances "
        "between slice discs and 2-knots.",
        epilog=_GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"stabkit {__version__}")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--catalog", metavar="PATH", help="JSON file with extra knots")
    parser.add_argument(
        "--seed", type=int, default=None, help="seed for property-test replay"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alexander", help="Alexander module of a knot reference")
    p.add_argument("knot")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("kernels", help="disc kernels, intersections, quotients")
    p.add_argument("knot")
    p.add_argument("--discs", help="comma-separated disc specs (default: all catalog discs)")
    p.set_defaults(func=cmd_kernels)

    p = sub.add_parser("bound", help="certified lower/upper bounds")
    p.add_argument("kind", choices=("d2", "metabelian", "d1"))
    p.add_argument("--knot", help="knot reference for d2")
    p.add_argument("--discs", help="two disc specs A,B for d2")
    p.add_argument("--scenario", help="scenario spec, e.g. thmC(g=2)")
    p.add_argument("--scenario-json", metavar="PATH", help="scenario JSON file")
    p.add_argument("--two-knot", help="2-knot reference for d1")
    p.add_argument("--vs", help="second 2-knot reference for d1")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="replay the pinned example computations")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("properties", help="run randomized property suites")
    p.add_argument("--cases", type=int, default=propsuite.DEFAULT_CASES)
    p.set_defaults(func=cmd_properties)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except HypothesisError as e:
        print(f"error: failed hypothesis: {e}", file=sys.stderr)
        return 3
    except (UnknownReferenceError, SchemaError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
