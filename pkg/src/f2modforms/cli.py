"""Command line driver: ``f2modforms <subcommand> [options]``.

Exit codes: 0 when every check passes (discrepancies and heuristics do not
count against a run), 1 when a check fails, 2 for usage errors and
exhausted budgets.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import checks, ideal, lattice_model, qseries, subspaces, weil
from .f2space import QuadraticSpace, anisotropic_count, census, isotropic_count
from .linalg import DEFAULT_PRIME

SCHEMA_VERSION = 1


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        doc = {"schema": SCHEMA_VERSION, "command": args.command, **checks._jsonable(payload)}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_census(args) -> int:
    sp = QuadraticSpace(args.m)
    iso, an = census(sp)
    ok = (iso, an) == (isotropic_count(args.m), anisotropic_count(args.m))
    _emit(args, {"m": args.m, "isotropic": iso, "anisotropic": an, "formula_agrees": ok},
          [f"m={args.m}: {iso} isotropic (incl. 0), {an} anisotropic; formula {'agrees' if ok else 'DISAGREES'}"])
    return 0 if ok else 1


def cmd_subspaces(args) -> int:
    sp = QuadraticSpace(args.m)
    k = args.m if args.k is None else args.k
    subs = list(subspaces.enumerate_ti(sp, k))
    if args.diff is None:
        if args.json:
            _emit(args, {"m": args.m, "k": k, "count": len(subs), "subspaces": [S.bits() for S in subs]}, [])
        else:
            sys.stdout.write(subspaces.format_subspaces(subs))
        return 0
    listed = subspaces.load_subspaces(sp, args.diff)
    missing = sorted(set(subs) - set(listed))
    extra = sorted(set(listed) - set(subs))
    dupes = len(listed) - len(set(listed))
    equal = not missing and not extra and not dupes
    _emit(args, {"m": args.m, "k": k, "enumerated": len(subs), "listed": len(listed), "equal": equal,
                 "missing": [S.bits() for S in missing], "extra": [S.bits() for S in extra], "duplicates": dupes},
          [f"enumerated {len(subs)}, listed {len(listed)}: {'equal as sets' if equal else 'DIFFERENT'}"]
          + [f"  missing {S.bits()}" for S in missing] + [f"  extra   {S.bits()}" for S in extra])
    return 0 if equal else 1


def cmd_stars(args) -> int:
    sp = QuadraticSpace(args.m)
    if args.m > 4:
        rng = random.Random(args.seed)
        stars = [subspaces.random_star(sp, rng) for _ in range(args.samples)]
        mode = f"{args.samples} random stars, seed {args.seed}"
    else:
        stars = list(subspaces.enumerate_stars(sp))
        mode = "all stars"
    coset_ok = all(subspaces.classify_cosets(st.base).counts()[1:3] == (2, 1) for st in stars)
    sign_ok = all(subspaces.star_sign_check(st) for st in stars)
    _emit(args, {"m": args.m, "mode": mode, "stars": len(stars), "coset_counts_ok": coset_ok, "sign_flip_ok": sign_ok},
          [f"m={args.m} ({mode}): {len(stars)} stars",
           f"  two isotropic and one anisotropic coset in every base perp: {coset_ok}",
           f"  sign flip under every star transvection: {sign_ok}"])
    return 0 if coset_ok and sign_ok else 1


def cmd_ideal(args) -> int:
    ring = ideal.DifferenceRing(args.m)
    rels = ideal.relation_set(args.m, ring)
    I = ideal.GradedIdeal(ring, rels)
    payload = {"m": args.m, "variables": ring.nvars, "linear_generators": len(rels.linear),
               "quadratic_rank_mod_linear": I.quadratic_rank_mod_linear(),
               "hilbert": [I.hilbert_slice(d) for d in range(1, args.degree + 1)]}
    lines = [f"m={args.m}: {ring.nvars} variables, {len(rels.linear)} linear generators",
             f"  quadratic relation rank modulo linear ones: {payload['quadratic_rank_mod_linear']}",
             f"  Hilbert slices d=1..{args.degree}: {payload['hilbert']}"]
    code = 0
    if args.quartic:
        if args.m != 3:
            print("error: --quartic needs --m 3", file=sys.stderr)
            return 2
        _, quartic = ideal.standard_quartic(ring)
        res = ideal.graded_membership(quartic, I)
        ok = res.member and res.certificate.expand(I.gens_y) == ring.to_y(quartic)
        payload["quartic_member"] = ok
        lines.append(f"  standard quartic in the ideal: {ok}")
        if res.certificate is not None:
            Path(args.out).write_text(res.certificate.to_json() + "\n")
            payload["certificate"] = args.out
            lines.append(f"  certificate ({len(res.certificate.entries)} terms) written to {args.out}")
        code = 0 if ok else 1
    _emit(args, payload, lines)
    return code


def cmd_weil(args) -> int:
    m = args.m
    payload: dict = {"m": m, "invariant_dimension": weil.invariant_dimension(m)}
    lines = [f"m={m}: invariant dimension {payload['invariant_dimension']}"]
    code = 0
    if args.dims:
        span = weil.ti_span_dimension(m, seed=args.seed, prime=args.prime)
        restr = weil.isotropic_restriction_rank(m, prime=args.prime, seed=args.seed)
        payload.update(ti_span=span, restriction=restr)
        lines += [f"  span of maximal-subspace indicators: {span['rank']} ({span['method']})",
                  f"  restriction of H to nonzero isotropic vectors: rank {restr['rank']} of {restr['dim_H']}"
                  f" ({restr['method']})"]
        if span["rank"] != payload["invariant_dimension"] or not restr["injective"]:
            code = 1
    _emit(args, payload, lines)
    return code


def cmd_qseries(args) -> int:
    payload = {"order": args.order, "eisenstein": {}}
    lines = []
    for k in qseries.EISENSTEIN_WEIGHTS:
        e = qseries.eisenstein_normalized(k, min(args.order, 6))
        payload["eisenstein"][k] = e.format()
        lines.append(f"E{k}: {e.format()}")
    eta = qseries.eta12(args.order)
    jac = qseries.jacobi_defect(args.order).is_zero()
    payload.update(eta12=eta.format(), jacobi_identity=jac, heegner=qseries.heegner_report())
    lines += [f"eta^12: {eta.format()}", f"Jacobi quartic identity to order {args.order}: {jac}"]
    _emit(args, payload, lines)
    return 0 if jac else 1


def cmd_lattice(args) -> int:
    L = lattice_model
    delta = L.standard_A2_delta()
    payload: dict = {"delta": {"first": len(delta.first), "second": len(delta.second), "total": len(delta)}}
    lines = [f"Delta: {len(delta.first)} + {len(delta.second)} = {len(delta)} classes"]
    if args.avoid:
        alpha = L.vec12(args.avoid)
        try:
            star = L.find_star_avoiding(delta, alpha, seed=args.seed, budget=args.budget)
        except L.SearchExhausted as exc:
            print(f"resource: {exc}", file=sys.stderr)
            return 2
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        line = subspaces.format_subspaces([star.base]).strip()
        payload["star"] = {"base": line, "rep": L.SPACE.bits(star.rep)}
        lines += ["# star avoiding Delta: base subspace, then coset representative", line,
                  f"# rep {L.SPACE.bits(star.rep)}"]
    _emit(args, payload, lines)
    return 0


def cmd_verify_all(args) -> int:
    cfg = checks.Config(order=args.order, prime=args.prime, seed=args.seed, budget=args.budget,
                        samples=args.samples, searches=args.searches)
    reports = checks.verify_all(cfg, only=args.only, jobs=args.jobs)
    if not reports:
        print(f"error: no check matches {args.only}", file=sys.stderr)
        return 2
    if args.json:
        doc = {"schema": SCHEMA_VERSION, "command": "verify-all",
               "config": checks._jsonable(vars(cfg)),
               "reports": [r.to_dict(timings=args.timings) for r in reports]}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(f"{r.status:12s} {r.check_id:34s} {r.runtime:7.2f}s")
            if r.status != "pass":
                print(f"{'':12s}   expected {json.dumps(checks._jsonable(r.expected))}")
                print(f"{'':12s}   computed {json.dumps(checks._jsonable(r.computed))}")
    return checks.exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="f2modforms", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="prime for modular ranks")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, m_default=None):
        p = sub.add_parser(name, parents=[common], help=help)
        if m_default is not None:
            p.add_argument("--m", type=int, default=m_default, choices=range(1, 7), metavar="M")
        p.set_defaults(func=fn)
        return p

    add("census", cmd_census, "vector counts of F2^{2m}", 6)
    p = add("subspaces", cmd_subspaces, "enumerate totally isotropic subspaces", 3)
    p.add_argument("--k", type=int, help="dimension (default m)")
    p.add_argument("--diff", help="subspace file to compare with, as sets")
    p = add("stars", cmd_stars, "star checks", 3)
    p.add_argument("--samples", type=int, default=100)
    p = add("ideal", cmd_ideal, "the relation ideal at small m", 3)
    p.add_argument("--degree", type=int, default=2, help="Hilbert slices up to this degree")
    p.add_argument("--quartic", action="store_true", help="certify the standard quartic (m=3)")
    p.add_argument("--out", default="quartic_certificate.json", help="certificate file")
    p = add("weil", cmd_weil, "Weil representation invariants", 3)
    p.add_argument("--dims", action="store_true", help="span and restriction ranks")
    p = add("qseries", cmd_qseries, "q-expansion identities")
    p.add_argument("--order", type=int, default=50)
    p = add("lattice", cmd_lattice, "the lattice U+U+(-E8) reduced mod 2")
    p.add_argument("--budget", type=int, default=20000)
    p.add_argument("--avoid", metavar="BITS", help="find a star through this class avoiding Delta")
    p = add("verify-all", cmd_verify_all, "run every check")
    p.add_argument("--order", type=int, default=50)
    p.add_argument("--budget", type=int, default=20000)
    p.add_argument("--samples", type=int, default=100, help="random instances at m=6")
    p.add_argument("--searches", type=int, default=50, help="seeded lattice searches")
    p.add_argument("--only", action="append", metavar="CHECK_ID", help="group name or check id prefix")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include runtimes in JSON")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
