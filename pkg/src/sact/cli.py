"""Command-line surface: classify, weakgen, factor, lift, free, obstructions, cache.

Every flag has an environment-variable override with prefix SACT_, e.g.
SACT_GENUS, SACT_CACHE_DIR.  Exit codes: 0 success, 2 bad input, 3 budget
exhausted (partial output is still printed, flagged incomplete), 4 internal
inconsistency in the exact arithmetic.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys

from . import __version__
from . import cache as result_cache
from .datasets import (ALTERNATING, SYMMETRIC, canonical_form, format_dataset,
                       parse_dataset, validate)
from .errors import (BudgetExhausted, GenusMismatch, NegativeMultiplicityError,
                     NonIntegralError, ParseError, ValidationFailure)
from .factors import cyclic_factor, obstruction_report, standard_factors
from .groups import ALT, SYM, GroupSpec, parse_group
from .lifting import (InvolutionDescent, decide_lift, free_action_analysis,
                      self_normalizing)
from .orbifold import parse_cyclic
from .perm import parse_perm
from .vectors import SearchBudget, enumerate_weak_classes
from .factors import weakly_generates

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4


def _env(name, default=None):
    return os.environ.get("SACT_" + name, default)


def _add_common(p):
    p.add_argument("--format", default=_env("FORMAT", "text"),
                   choices=["text", "json", "csv"])
    p.add_argument("--cache-dir", default=_env("CACHE_DIR"))
    p.add_argument("--budget-nodes", type=int,
                   default=int(_env("BUDGET_NODES", 5_000_000)))
    p.add_argument("--budget-seconds", type=float,
                   default=float(_env("BUDGET_SECONDS", 600)))
    p.add_argument("--jobs", type=int, default=int(_env("JOBS", 1)))


def _budget(args) -> SearchBudget:
    return SearchBudget(args.budget_nodes, args.budget_seconds)


def build_parser():
    parser = argparse.ArgumentParser(prog="sact",
                                     description="alternating and symmetric actions "
                                                 "on closed orientable surfaces")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    env_genus = _env("GENUS")
    p = sub.add_parser("classify", help="weak conjugacy classes at a genus")
    p.add_argument("--genus", type=int,
                   default=int(env_genus) if env_genus is not None else None,
                   required=env_genus is None)
    p.add_argument("--group", default=_env("GROUP"))
    p.add_argument("--all", action="store_true",
                   help="sweep A_n and S_n for every n >= 4 under the Hurwitz bound")
    _add_common(p)

    p = sub.add_parser("weakgen", help="decide weak generation from two cyclic data sets")
    p.add_argument("--group", required=True)
    p.add_argument("--df", required=True)
    p.add_argument("--dg", required=True)
    _add_common(p)

    p = sub.add_parser("factor", help="cyclic factor of an element inside a data set")
    p.add_argument("--group", required=True)
    p.add_argument("--ds", required=True)
    p.add_argument("--element")
    p.add_argument("--standard", action="store_true",
                   help="factors of the standard generating pair")
    _add_common(p)

    p = sub.add_parser("lift", help="decide extension of an alternating action")
    p.add_argument("--group", required=True)
    p.add_argument("--ds", required=True)
    p.add_argument("--d", required=True, help="degree-2 cyclic data set of the involution")
    p.add_argument("--pi", required=True, help="cone permutation, e.g. '(3 4)' or '()'")
    p.add_argument("--self-normalizing", action="store_true",
                   help="run the exhaustive self-normalizing test instead")
    _add_common(p)

    p = sub.add_parser("free", help="free alternating actions and their extensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("obstructions",
                       help="sweep for irreducible and hyperelliptic factors")
    p.add_argument("--group", required=True)
    p.add_argument("--genus", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("cache", help="inspect or clear the result cache")
    p.add_argument("action", choices=["info", "clear"])
    _add_common(p)
    return parser


# ---------------------------------------------------------------------------
# classify


def _kind_of(spec: GroupSpec) -> str:
    return ALTERNATING if spec.family == ALT else SYMMETRIC


def classify_group_rows(family: str, n: int, genus: int,
                        budget_nodes, budget_seconds) -> dict:
    """Rows for one group; module-level so worker processes can run it."""
    spec = GroupSpec(family, n)
    budget = SearchBudget(budget_nodes, budget_seconds)
    result = enumerate_weak_classes(spec, genus, budget)
    rows = []
    for item in result.items:
        if item.ds is not None:
            canon = canonical_form(item.ds)
            f_sigma, f_tau = standard_factors(canon)
            rows.append({
                "group": spec.name,
                "signature": str(item.sig),
                "data_set": format_dataset(canon),
                "factor_sigma": str(f_sigma),
                "factor_tau": str(f_tau),
            })
        else:
            rows.append({
                "group": spec.name,
                "signature": str(item.sig),
                "data_set": "vector:" + ",".join(str(s) for s in item.vector.elliptic),
                "factor_sigma": "-",
                "factor_tau": "-",
            })
    rows.sort(key=lambda r: (r["signature"], r["data_set"]))
    return {"rows": rows, "complete": result.complete}


def _classify_targets(args):
    if args.all:
        bound = 84 * (args.genus - 1)
        targets = []
        for family in (ALT, SYM):
            n = 4
            while GroupSpec(family, n).order <= bound:
                targets.append((family, n))
                n += 1
        return targets
    if not args.group:
        raise ParseError("classify needs --group or --all")
    spec = parse_group(args.group)
    return [(spec.family, spec.n)]


def cmd_classify(args) -> int:
    targets = _classify_targets(args)
    all_rows, complete = [], True

    def run(target):
        family, n = target
        key = {"command": "classify", "family": family, "n": n,
               "genus": args.genus, "version": __version__,
               "budget_nodes": args.budget_nodes,
               "budget_seconds": args.budget_seconds}
        hit = result_cache.load(args.cache_dir, key)
        if hit is not None:
            return {"rows": hit["rows"], "complete": True}
        out = classify_group_rows(family, n, args.genus,
                                  args.budget_nodes, args.budget_seconds)
        result_cache.store(args.cache_dir, key, out)
        return out

    if args.jobs > 1 and len(targets) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outs = list(pool.map(_classify_worker,
                                 [(f, n, args.genus, args.budget_nodes,
                                   args.budget_seconds, args.cache_dir) for f, n in targets]))
    else:
        outs = [run(t) for t in targets]
    for out in outs:
        all_rows.extend(out["rows"])
        complete = complete and out["complete"]

    all_rows.sort(key=lambda r: (r["group"][0], int(r["group"].lstrip("AxCS2") or 0),
                                 r["signature"], r["data_set"]))
    payload = {"command": "classify", "genus": args.genus,
               "rows": all_rows, "complete": complete}
    _emit(args, payload, columns=["group", "signature", "data_set",
                                  "factor_sigma", "factor_tau"])
    return EXIT_OK if complete else EXIT_BUDGET


def _classify_worker(packed):
    family, n, genus, nodes, seconds, cache_dir = packed
    key = {"command": "classify", "family": family, "n": n, "genus": genus,
           "version": __version__, "budget_nodes": nodes, "budget_seconds": seconds}
    hit = result_cache.load(cache_dir, key)
    if hit is not None:
        return {"rows": hit["rows"], "complete": True}
    out = classify_group_rows(family, n, genus, nodes, seconds)
    result_cache.store(cache_dir, key, out)
    return out


# ---------------------------------------------------------------------------
# other commands


def cmd_weakgen(args) -> int:
    spec = parse_group(args.group)
    d_f, d_g = parse_cyclic(args.df), parse_cyclic(args.dg)
    witness = weakly_generates(d_f, d_g, spec, budget=_budget(args))
    if witness is None:
        payload = {"command": "weakgen", "group": spec.name, "verdict": "no"}
    else:
        payload = {
            "command": "weakgen", "group": spec.name, "verdict": "yes",
            "data_set": format_dataset(witness.ds),
            "sigma": str(witness.sigma), "tau": str(witness.tau),
            "factor_sigma": str(cyclic_factor(witness.ds, witness.sigma)),
            "factor_tau": str(cyclic_factor(witness.ds, witness.tau)),
        }
    _emit(args, payload)
    return EXIT_OK


def cmd_factor(args) -> int:
    spec = parse_group(args.group)
    ds = parse_dataset(args.ds, _kind_of(spec))
    validate(ds, structure_only=True)
    payload = {"command": "factor", "group": spec.name, "data_set": format_dataset(ds)}
    if args.standard:
        f_sigma, f_tau = standard_factors(ds)
        payload["factor_sigma"] = str(f_sigma)
        payload["factor_tau"] = str(f_tau)
    elif args.element:
        element = parse_perm(args.element, spec.degree)
        payload["element"] = str(element)
        payload["factor"] = str(cyclic_factor(ds, element))
    else:
        raise ParseError("factor needs --element or --standard")
    _emit(args, payload)
    return EXIT_OK


def cmd_lift(args) -> int:
    spec = parse_group(args.group)
    if spec.family != ALT:
        raise ParseError("lift decides extensions of alternating actions; use A<n>")
    ds = parse_dataset(args.ds, ALTERNATING)
    if args.self_normalizing:
        report = self_normalizing(ds, budget=_budget(args))
        payload = {"command": "lift", "mode": "self-normalizing",
                   "data_set": format_dataset(ds),
                   "by_condition": report.by_condition,
                   "by_exhaustion": report.by_exhaustion,
                   "overall": report.overall,
                   "extensions": [v.to_json() for v in report.extensions]}
        _emit(args, payload)
        return EXIT_OK
    d = parse_cyclic(args.d)
    r = sum(e.mult for e in ds.entries)
    pi = parse_perm(args.pi, r)
    verdict = decide_lift(ds, InvolutionDescent(d, pi), budget=_budget(args))
    payload = dict(verdict.to_json())
    payload["command"] = "lift"
    _emit(args, payload)
    return EXIT_OK


def cmd_free(args) -> int:
    report = free_action_analysis(args.n, args.genus)
    payload = dict(report.to_json())
    payload["command"] = "free"
    _emit(args, payload)
    return EXIT_OK


def cmd_obstructions(args) -> int:
    spec = parse_group(args.group)
    report = obstruction_report(spec, args.genus, budget=_budget(args))
    payload = dict(report.to_json())
    payload["command"] = "obstructions"
    _emit(args, payload)
    return EXIT_OK


def cmd_cache(args) -> int:
    if args.action == "info":
        payload = {"command": "cache", "entries": result_cache.info(args.cache_dir)}
    else:
        payload = {"command": "cache", "removed": result_cache.clear(args.cache_dir)}
    _emit(args, payload)
    return EXIT_OK


# ---------------------------------------------------------------------------
# rendering


def _emit(args, payload: dict, columns=None) -> None:
    fmt = args.format
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=1))
        return
    rows = payload.get("rows")
    if rows is not None and columns:
        if fmt == "csv":
            print(",".join(columns))
            for row in rows:
                print(",".join('"%s"' % row[c] for c in columns))
        else:
            widths = [max(len(c), *(len(r[c]) for r in rows)) if rows else len(c)
                      for c in columns]
            print("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
            for row in rows:
                print("  ".join(row[c].ljust(w) for c, w in zip(columns, widths)))
            if not payload.get("complete", True):
                print("# incomplete: search budget exhausted")
        return
    if fmt == "csv":
        keys = sorted(payload)
        print(",".join(keys))
        print(",".join('"%s"' % payload[k] for k in keys))
        return
    for key in sorted(payload):
        if key == "command":
            continue
        print(f"{key}: {payload[key]}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "classify": cmd_classify, "weakgen": cmd_weakgen, "factor": cmd_factor,
        "lift": cmd_lift, "free": cmd_free, "obstructions": cmd_obstructions,
        "cache": cmd_cache,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, ValidationFailure, GenusMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        print(f"incomplete: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NonIntegralError, NegativeMultiplicityError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
