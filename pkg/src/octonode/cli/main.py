"""Command line: ``octonode {gb,octic,curve,predict,table}``.

Exit codes: 0 all certifications pass, 1 a certification failed, 2 input
error, 3 mathematical precondition violated, 4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from ..core.field import FieldSpec, is_prime
from ..core.monomial import MonomialOrder
from ..core.parsing import format_polynomial
from ..core.seeds import derive_seed
from ..errors import ParseError, PreconditionError, ResourceLimitExceeded
from ..groebner.budget import Budget, budget

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 1, 2, 3, 4


class InputError(Exception):
    """Bad command line or configuration."""


@dataclass
class RunConfig:
    field: FieldSpec = dc_field(default_factory=FieldSpec)
    order: MonomialOrder = dc_field(default_factory=MonomialOrder.grevlex)
    seed: int = 0
    spair_budget: int = 2_000_000
    degree_budget: int = 200
    consensus_primes: list[int] = dc_field(default_factory=list)
    output_path: str | None = None
    workers: int = 1
    field_given: bool = False

    def __post_init__(self):
        if self.spair_budget <= 0 or self.degree_budget <= 0:
            raise InputError("budgets must be positive")
        if len(set(self.consensus_primes)) != len(self.consensus_primes):
            raise InputError("consensus primes must be distinct")
        for p in self.consensus_primes:
            if p < 5 or not is_prime(p):
                raise InputError(f"consensus modulus {p} is not a prime >= 5")
        if self.workers < 1:
            raise InputError("--workers must be positive")

    @property
    def budget(self) -> Budget:
        return Budget(self.spair_budget, self.degree_budget)

    def fields(self) -> list[FieldSpec]:
        """The field list a command runs over: the consensus primes, or the configured field."""
        if self.consensus_primes:
            return [FieldSpec(p) for p in self.consensus_primes]
        return [self.field]


def _common_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--field", help="fp:P or q (default fp:32003)")
    g.add_argument("--order", default="grevlex", help="grevlex, lex or elim:K (gb only)")
    g.add_argument("--seed", type=int, help="base seed (fallback: $OCTONODE_SEED, then 0)")
    g.add_argument("--spair-budget", type=int, default=2_000_000)
    g.add_argument("--degree-budget", type=int, default=200)
    g.add_argument("--consensus", help="comma-separated primes to repeat the run over")
    g.add_argument("--out", help="write the output here instead of stdout")
    g.add_argument("--workers", type=int, default=1)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="octonode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of an ideal file")
    p.add_argument("ideal_file")

    p = sub.add_parser("octic", parents=[common], help="certify a discriminant octic")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--a", type=int, help="split type; a random triple is drawn from --seed")
    src.add_argument("--triple", help="section triple file")
    p.add_argument("--retries", type=int, default=10,
                   help="random seeds tried before giving up on a smooth X (default 10)")
    p.add_argument("--chart-seed", type=int, help="seed of the generic coordinate change")

    p = sub.add_parser("curve", parents=[common], help="implicitize a curve and report on it")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset")
    src.add_argument("--spec")

    p = sub.add_parser("predict", parents=[common], help="invariants of a bundle")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gamma", type=int)
    src.add_argument("--serre-degree", type=int)

    p = sub.add_parser("table", parents=[common], help="table of predicted and certified node counts")
    p.add_argument("--a-range", default="0..4", help="split types, e.g. 0..4 or 0,2")
    p.add_argument("--d-range", default="5..8", help="elliptic curve degrees for the Serre rows")
    p.add_argument("--gammas", default="5,-3,13", help="extra gamma values to test for admissibility")
    p.add_argument("--no-certify", action="store_true", help="predictions only")
    p.add_argument("--retries", type=int, default=10)
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    return parser


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def make_config(args) -> RunConfig:
    try:
        fld = FieldSpec.parse(args.field) if args.field else FieldSpec()
        order = MonomialOrder.parse(args.order)
        seed = args.seed if args.seed is not None else int(os.environ.get("OCTONODE_SEED", "0"))
        primes = _int_list(args.consensus) if args.consensus else []
    except ValueError as e:
        raise InputError(str(e)) from None
    return RunConfig(fld, order, seed, args.spair_budget, args.degree_budget, primes, args.out,
                     args.workers, field_given=bool(args.field))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# commands ----------------------------------------------------------------------

def cmd_gb(args, cfg: RunConfig) -> tuple[str, int]:
    from ..groebner.ideal import Ideal
    from ..io import load_ideal

    blocks = []
    leads = []
    for fld in cfg.fields():
        f = load_ideal(args.ideal_file, fld if (cfg.field_given or cfg.consensus_primes) else None)
        I = Ideal(f.polynomials, f.ring)
        gb = I.groebner(cfg.order)
        lt = [format_polynomial(f.ring.monomial(m)) for m in gb.leading_monomials]
        leads.append(lt)
        lines = [f"# field {f.ring.field}, order {cfg.order}, {len(gb)} element(s)"]
        lines += gb.lines()
        lines.append("# leading terms: " + ", ".join(lt))
        blocks.append("\n".join(lines))
    code = EXIT_OK
    if len(leads) > 1:
        agree = all(l == leads[0] for l in leads)
        blocks.append(f"# consensus: leading terms {'agree' if agree else 'DIFFER'}")
        code = EXIT_OK if agree else EXIT_FAILED
    return "\n".join(blocks) + "\n", code


def _octic_one(a: int | None, triple_path: str | None, fld: FieldSpec, seed: int, retries: int,
               chart_seed: int, field_given: bool) -> dict:
    from ..io import load_triple
    from ..octic.pipeline import run_pipeline, search_smooth_instance
    from ..octic.triple import random_triple

    search = None
    if triple_path is not None:
        t = load_triple(triple_path, fld if field_given else None)
        used = None
    else:
        if fld.p is None:
            raise InputError("random instances need a prime field")
        found = search_smooth_instance(a, seed, fld, attempts=retries, chart_seed=chart_seed)
        if found is None:
            t, used = random_triple(a, seed, fld), seed
            search = {"base_seed": seed, "attempts": retries, "smooth_found": False}
        else:
            t, used, k = found
            search = {"base_seed": seed, "attempts": k, "smooth_found": True}
    rep = run_pipeline(t, seed=used, chart_seed=chart_seed)
    d = rep.to_dict()
    if search is not None:
        d["search"] = search
        if not search["smooth_found"]:
            d["status"] = "NOT_CERTIFIED"
    return d


def _octic_exit(d: dict) -> int:
    status = d["status"]
    if status == "CERTIFIED":
        return EXIT_OK
    if status == "RESOURCE_LIMIT":
        return EXIT_RESOURCE
    if status == "NOT_ZERO_DIMENSIONAL" or any(e["kind"] == "precondition" for e in d["errors"]):
        return EXIT_PRECONDITION
    return EXIT_FAILED


def cmd_octic(args, cfg: RunConfig) -> tuple[str, int]:
    if args.a is not None and not 0 <= args.a <= 4:
        raise InputError("--a must lie in 0..4")
    if cfg.order != MonomialOrder.grevlex():
        raise InputError("the octic pipeline computes in grevlex only")
    chart_seed = args.chart_seed if args.chart_seed is not None else derive_seed(cfg.seed, "chart") % 2**31
    reports = [_octic_one(args.a, args.triple, fld, cfg.seed, args.retries, chart_seed,
                          cfg.field_given or bool(cfg.consensus_primes))
               for fld in cfg.fields()]
    codes = [_octic_exit(d) for d in reports]
    if len(reports) == 1:
        return dumps(reports[0]), codes[0]
    degrees = [d["node_degree"] for d in reports]
    agree = all(x == degrees[0] for x in degrees)
    out = {"consensus": {"primes": cfg.consensus_primes, "node_degree": degrees[0] if agree else degrees,
                         "agree": agree}, "reports": reports}
    code = max(codes) if not agree or any(codes) else EXIT_OK
    if not agree and code == EXIT_OK:
        code = EXIT_FAILED
    return dumps(out), code


CURVE_CONSENSUS_KEYS = ("generator_profile", "hilbert_poly", "degree_d", "arithmetic_genus",
                        "quartic_cutout_equal", "Y_smooth", "generators_within_profile",
                        "hilbert_function_matches", "serre")


def cmd_curve(args, cfg: RunConfig) -> tuple[str, int]:
    from ..curves.report import curve_report, preset
    from ..io import load_curve_spec

    reports = []
    for fld in cfg.fields():
        if args.preset:
            try:
                spec = preset(args.preset, fld)
            except KeyError as e:
                raise InputError(str(e.args[0])) from None
        else:
            spec = load_curve_spec(args.spec, fld if (cfg.field_given or cfg.consensus_primes) else None)
        reports.append(curve_report(spec, seed=cfg.seed))
    dicts = [r.to_dict() for r in reports]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
    if len(dicts) == 1:
        return dumps(dicts[0]), code
    key = lambda d: {k: d[k] for k in CURVE_CONSENSUS_KEYS}  # noqa: E731
    agree = all(key(d) == key(dicts[0]) for d in dicts)
    out = {"consensus": {"primes": cfg.consensus_primes, "agree": agree}, "reports": dicts}
    return dumps(out), code if agree else EXIT_FAILED


def cmd_predict(args, cfg: RunConfig) -> tuple[str, int]:
    from ..curves.report import degree_nine_obstruction
    from ..octic.invariants import bundle_invariants, serre_gamma

    if args.gamma is not None:
        return dumps(bundle_invariants(args.gamma).as_dict()), EXIT_OK
    d = args.serre_degree
    if d < 1:
        raise InputError("--serre-degree must be positive")
    out = bundle_invariants(serre_gamma(d)).as_dict()
    out["serre_degree"] = d
    out["quartic_cutout_obstructed"] = degree_nine_obstruction(d).obstructed
    return dumps(out), EXIT_OK


def _split_row(a: int, fld: FieldSpec, seed: int, retries: int, certify: bool,
               b: Budget) -> dict:
    from ..octic.invariants import bundle_invariants

    inv = bundle_invariants(a * a)
    row = {"kind": "split", "a": a, "gamma": a * a, "predicted_nodes": inv.predicted_nodes,
           "c3_X": inv.c3_X, "admissible": inv.admissible}
    if not certify:
        row.update(certified_nodes=None, status="PREDICTED")
        return row
    try:
        with budget(b):
            d = _octic_one(a, None, fld, derive_seed(seed, "table", a) % 2**31, retries,
                           derive_seed(seed, "chart") % 2**31, False)
    except (PreconditionError, ResourceLimitExceeded, InputError) as e:
        row.update(certified_nodes=None, status="NOT_CERTIFIED", error=str(e))
        return row
    ok = d["status"] == "CERTIFIED"
    row.update(certified_nodes=d["node_degree"] if ok else None,
               status="CERTIFIED" if ok else "NOT_CERTIFIED", seed=d["seed"])
    return row


def cmd_table(args, cfg: RunConfig) -> tuple[str, int]:
    from ..curves.report import degree_nine_obstruction
    from ..octic.invariants import METHOD_MIN_GAMMA, bundle_invariants, serre_gamma

    try:
        a_values, d_values, gammas = _int_list(args.a_range), _int_list(args.d_range), _int_list(args.gammas)
    except ValueError as e:
        raise InputError(str(e)) from None
    if any(not 0 <= a <= 4 for a in a_values):
        raise InputError("split types must lie in 0..4")
    if any(d < 1 for d in d_values):
        raise InputError("curve degrees must be positive")
    if cfg.field.p is None and not args.no_certify:
        raise InputError("certified rows need a prime field")
    certify = not args.no_certify
    jobs = [(a, cfg.field, cfg.seed, args.retries, certify, cfg.budget) for a in a_values]
    if cfg.workers > 1 and certify and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
            split = list(ex.map(_split_row, *zip(*jobs)))
    else:
        split = [_split_row(*j) for j in jobs]
    serre = []
    for d in d_values:
        inv = bundle_invariants(serre_gamma(d))
        ob = degree_nine_obstruction(d)
        serre.append({"kind": "serre", "d": d, "gamma": inv.gamma, "predicted_nodes": inv.predicted_nodes,
                      "c3_X": inv.c3_X, "admissible": inv.admissible, "minus_K_fourth": ob.minus_K_fourth,
                      "obstructed": ob.obstructed, "status": "OBSTRUCTED" if ob.obstructed else "PREDICTED"})
    bound = bundle_invariants(METHOD_MIN_GAMMA)
    extras = [{"kind": "admissibility", "gamma": g, "admissible": bundle_invariants(g).admissible,
               "residue_mod_8": g % 8} for g in gammas]
    table = {
        "split": split,
        "serre": serre,
        "method_bound": {"gamma": bound.gamma, "predicted_nodes": bound.predicted_nodes,
                         "exceeds_miyaoka": bound.exceeds_miyaoka},
        "admissibility": extras,
        "all_predictions_divisible_by_4": all(r["predicted_nodes"] % 4 == 0 for r in split + serre),
    }
    code = EXIT_OK if all(r["status"] != "NOT_CERTIFIED" for r in split) else EXIT_FAILED
    if args.format == "markdown":
        return _markdown(table), code
    return dumps(table), code


def _markdown(t: dict) -> str:
    out = ["| case | gamma | predicted nodes | c3(X) | admissible | certified | status |",
           "|---|---|---|---|---|---|---|"]
    for r in t["split"]:
        out.append(f"| split a={r['a']} | {r['gamma']} | {r['predicted_nodes']} | {r['c3_X']} | "
                   f"{r['admissible']} | {r['certified_nodes'] if r['certified_nodes'] is not None else '-'} | "
                   f"{r['status']} |")
    for r in t["serre"]:
        out.append(f"| elliptic d={r['d']} | {r['gamma']} | {r['predicted_nodes']} | {r['c3_X']} | "
                   f"{r['admissible']} | - | {r['status']} |")
    b = t["method_bound"]
    out.append(f"| method bound | {b['gamma']} | {b['predicted_nodes']} | - | - | - | - |")
    out.append("")
    out.append("| gamma | gamma mod 8 | admissible |")
    out.append("|---|---|---|")
    for r in t["admissibility"]:
        out.append(f"| {r['gamma']} | {r['residue_mod_8']} | {r['admissible']} |")
    return "\n".join(out) + "\n"


COMMANDS = {"gb": cmd_gb, "octic": cmd_octic, "curve": cmd_curve, "predict": cmd_predict, "table": cmd_table}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        cfg = make_config(args)
        with budget(cfg.budget):
            text, code = COMMANDS[args.command](args, cfg)
    except (InputError, ParseError) as e:
        print(f"octonode: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitExceeded as e:
        print(f"octonode: resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except PreconditionError as e:
        print(f"octonode: precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
