"""Batch front end: load categories and weights, run checks, emit reports.

Exit codes: 0 pass, 1 semantic failure, 2 parse failure, 3 resource bound.
All randomness flows through a seeded PRNG echoed in every report, and JSON
output uses sorted keys so runs are byte-reproducible.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import tnorm as tn
from .balls import ball_poset_dot
from .cat import EnrichedCategory, validate
from .classify import cauchy_completion, classify
from .errors import BoundExceededError, CapExceededError, RecatError
from .gen import random_category, random_functor, random_module, random_weight
from .laws import (
    conical_filter_check,
    ConicalFilter,
    category_to_module,
    find_cf4_cotensor_witness,
    kowalsky_sum,
    kz_check,
    kz_equality_consistent_with_cauchy,
    modules_isomorphic,
    module_to_category,
    negation_duality_check,
    powerset_monad_check,
)
from .presheaf import Weight
from .values import format_value, grid_validate, parse_grid_text, parse_value, unit_grid

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2
EXIT_BOUND = 3


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _ParseFailure(f"cannot parse {path}: {exc}") from exc


class _ParseFailure(Exception):
    pass


def load_category(path) -> EnrichedCategory:
    data = _load_json(path)
    try:
        return EnrichedCategory.from_json(data)
    except (RecatError, KeyError, ValueError, TypeError) as exc:
        raise _ParseFailure(f"bad category file {path}: {exc}") from exc


def load_weight(path, X: EnrichedCategory) -> Weight:
    data = _load_json(path)
    try:
        values = [parse_value(v) if isinstance(v, (str, int)) else v for v in data["values"]]
    except (RecatError, KeyError, TypeError) as exc:
        raise _ParseFailure(f"bad weight file {path}: {exc}") from exc
    if len(values) != X.n:
        raise RecatError(f"weight has {len(values)} entries for a {X.n}-point carrier")
    return Weight(X, tuple(values))


def _emit(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_check(args) -> int:
    X = load_category(args.category)
    report = validate(X)
    print(_emit({"ok": report.ok, "reason": report.reason, "witness": report.witness}))
    return EXIT_OK if report.ok else EXIT_SEMANTIC


def cmd_classify(args) -> int:
    X = load_category(args.category)
    rep = validate(X)
    if not rep.ok:
        print(_emit({"error": f"category axioms fail: {rep.reason} at {rep.witness}"}))
        return EXIT_SEMANTIC
    try:
        phi = load_weight(args.weight, X)
    except RecatError as exc:
        print(_emit({"error": str(exc)}))
        return EXIT_SEMANTIC
    out = classify(phi, bound=args.bound, rng=random.Random(args.seed)).to_json()
    out["seed"] = args.seed
    print(_emit(out))
    return EXIT_OK


def cmd_balls(args) -> int:
    X = load_category(args.category)
    rep = validate(X)
    if not rep.ok:
        print(_emit({"error": f"category axioms fail: {rep.reason} at {rep.witness}"}))
        return EXIT_SEMANTIC
    grid = X.grid
    if args.grid:
        grid = grid_validate(parse_grid_text(args.grid), X.tnorm)
    print(ball_poset_dot(X, grid))
    return EXIT_OK


def cmd_complete(args) -> int:
    X = load_category(args.category)
    rep = validate(X)
    if not rep.ok:
        print(_emit({"error": f"category axioms fail: {rep.reason} at {rep.witness}"}))
        return EXIT_SEMANTIC
    completion, embedding = cauchy_completion(X, bound=args.bound)
    out = completion.to_json()
    out["embedding"] = list(embedding)
    print(_emit(out))
    return EXIT_OK


def _suite_tnorm(t, grid, rng, bound):
    checks = []
    if grid is not None:
        pts = grid.points
        ok = all(
            tn.conj(t, x, y) == tn.conj(t, y, x)
            and tn.conj(t, tn.conj(t, x, y), z) == tn.conj(t, x, tn.conj(t, y, z))
            and tn.conj(t, x, tn.ONE) == x
            and (tn.conj(t, x, y) <= z) == (y <= tn.imp(t, x, z))
            for x in pts
            for y in pts
            for z in pts
        )
        checks.append({"name": "laws_exact_grid", "pass": ok, "witness": None})
        div = all(tn.conj(t, x, tn.imp(t, x, y)) == min(x, y) for x in pts for y in pts)
        checks.append({"name": "divisibility", "pass": div, "witness": None})
    samples = 2000
    ok = True
    witness = None
    for _ in range(samples):
        x, y, z = rng.random(), rng.random(), rng.random()
        if abs(tn.conj(t, x, y) - tn.conj(t, y, x)) > 1e-12:
            ok, witness = False, (x, y)
            break
        if abs(tn.conj(t, tn.conj(t, x, y), z) - tn.conj(t, x, tn.conj(t, y, z))) > 1e-12:
            ok, witness = False, (x, y, z)
            break
        if abs(tn.conj(t, x, tn.imp(t, x, y)) - min(x, y)) > 1e-12:
            ok, witness = False, (x, y)
            break
    checks.append({"name": "laws_float_sampled", "pass": ok, "witness": witness})
    if tn.is_archimedean(t):
        ok = True
        witness = None
        for _ in range(samples):
            x, y = rng.random(), rng.random()
            u = tn.generator_eval(t, x) + tn.generator_eval(t, y)
            if abs(tn.pseudo_inverse(t, u) - tn.conj(t, x, y)) > 1e-9:
                ok, witness = False, (x, y)
                break
        checks.append({"name": "generator_reconstruction", "pass": ok, "witness": witness})
    return checks


def _suite_kan(t, grid, rng, bound):
    from .presheaf import f_exists, f_inv, sub as psub

    checks = []
    ok = True
    witness = None
    for _ in range(25):
        X = random_category(rng, rng.randint(1, 4), grid)
        Y = random_category(rng, rng.randint(1, 4), grid)
        f = random_functor(rng, X, Y)
        for _ in range(10):
            phi = random_weight(rng, X)
            gamma = random_weight(rng, Y)
            if psub(f_exists(f, phi), gamma) != psub(phi, f_inv(f, gamma)):
                ok, witness = False, (f.mapping, phi.values, gamma.values)
                break
        if not ok:
            break
    checks.append({"name": "kan_adjunction", "pass": ok, "witness": witness})
    return checks


def _suite_kz(t, grid, rng, bound):
    checks = []
    ok = True
    witness = None
    for _ in range(20):
        X = random_category(rng, rng.randint(1, 4), grid)
        ws = [random_weight(rng, X) for _ in range(8)]
        rep = kz_check(X, ws, ws)
        if rep["violations"]:
            ok, witness = False, rep["violations"][0]
            break
    checks.append({"name": "kz_inequality", "pass": ok, "witness": witness})
    Xs = random_category(rng, 2, grid)
    checks.append(
        {
            "name": "kz_equality_vs_cauchy",
            "pass": kz_equality_consistent_with_cauchy(Xs, bound),
            "witness": None,
        }
    )
    checks.append(
        {
            "name": "powerset_monad",
            "pass": powerset_monad_check(t, grid, 2, rng, samples=20),
            "witness": None,
        }
    )
    return checks


def _suite_module(t, grid, rng, bound):
    checks = []
    ok = True
    witness = None
    for _ in range(20):
        M = random_module(rng, t)
        back = category_to_module(module_to_category(M))
        if not modules_isomorphic(M, back):
            ok, witness = False, M.action
            break
    checks.append({"name": "module_round_trip", "pass": ok, "witness": witness})
    if grid is not None:
        verdict, wit = negation_duality_check(grid, t)
        checks.append(
            {
                "name": "negation_involution",
                "pass": verdict if t.kind == tn.LUKASIEWICZ else not verdict,
                "witness": format_value(wit) if wit is not None else None,
            }
        )
    return checks


def _suite_filters(t, grid, rng, bound):
    checks = []
    ok = True
    pts = list(grid.points)
    for _ in range(10):
        g1 = tuple(rng.choice(pts) for _ in range(2))
        g2 = tuple(min(a, rng.choice(pts)) for a in g1)
        F = ConicalFilter(t, grid, 2, (g1, g2))
        if not conical_filter_check(F)["pass"]:
            ok = False
            break
    checks.append({"name": "generated_filters_cf", "pass": ok, "witness": None})
    F1 = ConicalFilter(t, grid, 2, ((pts[-1], pts[0]),))
    F2 = ConicalFilter(t, grid, 2, ((pts[0], pts[-1]),))
    ks = kowalsky_sum([(tn.ONE, tn.ONE)], [F1, F2], t, grid)
    checks.append({"name": "kowalsky_sum_cf", "pass": conical_filter_check(ks)["pass"], "witness": None})
    wit = find_cf4_cotensor_witness(t, grid)
    expected_closed = tn.continuous_off_diagonal(t)
    checks.append(
        {
            "name": "cotensor_stays_in_class" if expected_closed else "cotensor_escapes_class",
            "pass": (wit is None) == expected_closed,
            "witness": None
            if wit is None
            else {"r": format_value(wit[1]), "lam": format_value(wit[2][0]), "s": format_value(wit[3])},
        }
    )
    return checks


SUITES = {
    "tnorm": _suite_tnorm,
    "kan": _suite_kan,
    "kz": _suite_kz,
    "module": _suite_module,
    "filters": _suite_filters,
}


def cmd_laws(args) -> int:
    t = tn.parse_tnorm(args.tnorm)
    grid = None
    if t.supports_exact and args.mode == "exact":
        grid = (
            grid_validate(parse_grid_text(args.grid), t)
            if args.grid
            else unit_grid(4, t) if t.kind != tn.GODEL else unit_grid(2, t)
        )
    elif args.grid:
        raise _ParseFailure("grids only make sense in exact mode with an exact-capable t-norm")
    if grid is None and args.suite != "tnorm":
        raise RecatError(f"the {args.suite} suite needs exact mode with a grid; got {args.tnorm}/{args.mode}")
    rng = random.Random(args.seed)
    suite = SUITES[args.suite]
    try:
        checks = suite(t, grid, rng, args.bound)
    except BoundExceededError as exc:
        print(_emit({"error": str(exc), "seed": args.seed}))
        return EXIT_BOUND
    report = {
        "suite": args.suite,
        "tnorm": tn.format_tnorm(t),
        "seed": args.seed,
        "pass": all(c["pass"] for c in checks),
        "checks": checks,
    }
    print(_emit(report))
    return EXIT_OK if report["pass"] else EXIT_SEMANTIC


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="recat", description=__doc__)
    sp = p.add_subparsers(dest="command", required=True)

    c = sp.add_parser("check", help="validate a category file")
    c.add_argument("category")
    c.set_defaults(fn=cmd_check)

    c = sp.add_parser("classify", help="classify a weight over a category")
    c.add_argument("category")
    c.add_argument("weight")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--bound", type=int, default=10**6)
    c.set_defaults(fn=cmd_classify)

    c = sp.add_parser("laws", help="run a named law suite")
    c.add_argument("suite", choices=sorted(SUITES))
    c.add_argument("--tnorm", default="lukasiewicz")
    c.add_argument("--grid", default=None)
    c.add_argument("--mode", choices=("exact", "float"), default="exact")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--bound", type=int, default=10**6)
    c.set_defaults(fn=cmd_laws)

    c = sp.add_parser("balls", help="emit the grid-radius ball poset as DOT")
    c.add_argument("category")
    c.add_argument("--grid", default=None)
    c.set_defaults(fn=cmd_balls)

    c = sp.add_parser("complete", help="emit the Cauchy completion as category JSON")
    c.add_argument("category")
    c.add_argument("--bound", type=int, default=10**6)
    c.set_defaults(fn=cmd_complete)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _ParseFailure as exc:
        print(_emit({"error": str(exc)}))
        return EXIT_PARSE
    except (CapExceededError, BoundExceededError) as exc:
        print(_emit({"error": str(exc)}))
        return EXIT_BOUND
    except RecatError as exc:
        print(_emit({"error": str(exc)}))
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
