"""Executable checks for every finite claim the toolkit verifies.

Each check returns one or more CheckReport records.  Statuses:

pass         expected and computed agree exactly
fail         they do not
discrepancy  a printed value disagrees with the computation and the
             computation has been confirmed a second way
heuristic    an estimate that is reported but never asserted
resource     a search or computation ran out of its budget
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from . import ideal, lattice_model, ortho_group, qseries, subspaces, weil
from .f2space import QuadraticSpace, anisotropic_count, census, isotropic_count, relative_census, relative_counts
from .linalg import DEFAULT_PRIME

STATUSES = ("pass", "fail", "discrepancy", "heuristic", "resource")


@dataclass
class Config:
    order: int = 50
    prime: int = DEFAULT_PRIME
    seed: int = 0
    budget: int = 20000
    samples: int = 100
    searches: int = 50


@dataclass
class CheckReport:
    check_id: str
    group: str
    status: str
    expected: Any
    computed: Any
    provenance: str
    parameters: dict = field(default_factory=dict)
    runtime: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "check_id": self.check_id,
            "group": self.group,
            "status": self.status,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "provenance": self.provenance,
            "parameters": _jsonable(self.parameters),
        }
        if timings:
            out["runtime"] = round(self.runtime, 3)
        return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    return x


def _report(check_id, expected, computed, provenance, params=None, mismatch="fail") -> CheckReport:
    status = "pass" if expected == computed else mismatch
    return CheckReport(check_id, "", status, expected, computed, provenance, params or {})


# -- census ---------------------------------------------------------------------

def check_census(cfg: Config) -> list[CheckReport]:
    sp = QuadraticSpace(6)
    iso, an = census(sp)
    out = [_report("census-m6", {"isotropic": 2080, "nonzero_isotropic": 2079, "anisotropic": 2016},
                   {"isotropic": iso, "nonzero_isotropic": iso - 1, "anisotropic": an}, "published")]
    rng = random.Random(cfg.seed)
    bad = []
    for m in range(2, 7):
        space = QuadraticSpace(m)
        if census(space) != (isotropic_count(m), anisotropic_count(m)):
            bad.append((m, "census"))
        pool = range(1, space.size)
        probes = list(pool) if m <= 4 else rng.sample(list(pool), 20)
        for a in probes:
            if relative_census(space, a) != relative_counts(m, space.q(a) == 0):
                bad.append((m, space.bits(a)))
    out.append(_report("census-relative", [], bad, "formula", {"m": "2..6"}))
    return out


# -- configurations -----------------------------------------------------------------

def _sextet_checks(sextet) -> dict[str, bool]:
    m = sextet[0].m
    left, right = subspaces.bipartition(sextet)
    return {
        "bipartite": left == [0, 2, 4] and right == [1, 3, 5],
        "span5": ideal.sextet_span_dimension(sextet) == 5,
        "linear": ideal.linear_identity_holds(sextet),
        "nine": all(N.dim == m - 1 for N in subspaces.nine_intersections(sextet)),
        "psi": all(ok for *_, ok in subspaces.psi_relations(sextet)),
        "quadratic": all(ideal.quadratic_identities_hold(sextet)),
    }


def check_configurations(cfg: Config) -> list[CheckReport]:
    out = []
    space3 = QuadraticSpace(3)
    codim2 = list(subspaces.enumerate_ti(space3, 1))
    fails: dict[str, int] = {}
    for A in codim2:
        for k, ok in _sextet_checks(subspaces.extensions_of_codim2(A)).items():
            fails[k] = fails.get(k, 0) + (not ok)
    stars = list(subspaces.enumerate_stars(space3))
    cosets = {subspaces.classify_cosets(st.base).counts()[1:3] for st in stars}
    sign_ok = sum(subspaces.star_sign_check(st) for st in stars)
    out.append(_report("configurations-m3",
                       {"configurations": 35, "stars": 105, "coset_counts": [(2, 1)], "sign_flips": 105,
                        "failures": {k: 0 for k in fails}},
                       {"configurations": len(codim2), "stars": len(stars), "coset_counts": sorted(cosets),
                        "sign_flips": sign_ok, "failures": fails}, "published", {"m": 3}))

    rng = random.Random(cfg.seed)
    space6 = QuadraticSpace(6)
    fails6: dict[str, int] = {}
    coset_bad = sign_bad = 0
    for _ in range(cfg.samples):
        sextet = subspaces.extensions_of_codim2(subspaces.random_ti(space6, 4, rng))
        for k, ok in _sextet_checks(sextet).items():
            fails6[k] = fails6.get(k, 0) + (not ok)
        st = subspaces.random_star(space6, rng)
        coset_bad += subspaces.classify_cosets(st.base).counts()[1:3] != (2, 1)
        sign_bad += not subspaces.star_sign_check(st)
    out.append(_report("configurations-m6-random",
                       {"failures": {k: 0 for k in fails6}, "coset_failures": 0, "sign_failures": 0},
                       {"failures": fails6, "coset_failures": coset_bad, "sign_failures": sign_bad},
                       "published", {"m": 6, "samples": cfg.samples, "seed": cfg.seed}))

    printed = subspaces.psi_relations(subspaces.six_spaces_table(), subspaces.PSI_RELATIONS_PRINTED)
    out.append(_report("psi-identities-printed",
                       [True] * 9, [ok for *_, ok in printed], "published",
                       {"corrected_sixth": "psi_2 + psi_4 = psi_5 + psi_9"}, mismatch="discrepancy"))
    return out


# -- tables ----------------------------------------------------------------------

def check_tables(cfg: Config) -> list[CheckReport]:
    space3 = QuadraticSpace(3)
    table = subspaces.table30()
    out = [_report("table-30", True, set(subspaces.maximal_ti(space3)) == set(table) and len(table) == 30,
                   "published")]
    space2 = QuadraticSpace(2)
    six = subspaces.six_spaces_table()
    mine = subspaces.extensions_of_codim2(subspaces.IsotropicSubspace.span(space2, []))
    out.append(_report("table-six-spaces", True,
                       set(six) == set(mine) and subspaces.bipartition(six) == ([0, 2, 4], [1, 3, 5]), "published"))
    stars = [subspaces.star_of(N) for N in subspaces.nine_intersections(six)]
    rows = subspaces.nine_stars_table()
    agree = [r["star"] == s.elements and r["base"] == s.base and r["pair"] == p
             for r, s, p in zip(rows, stars, subspaces.STAR_PAIRS)]
    out.append(_report("table-nine-stars", [True] * 9, agree, "published"))
    return out


# -- the ideal -----------------------------------------------------------------

def check_ideal(cfg: Config) -> list[CheckReport]:
    ring = ideal.DifferenceRing(3)
    rels = ideal.relation_set(3, ring)
    I3 = ideal.GradedIdeal(ring, rels)
    out = [_report("ideal-quadratic-rank", 14, I3.quadratic_rank_mod_linear(), "published", {"m": 3})]
    out.append(_report("ideal-relation-count",
                       {"linear": 36, "quadratic_configurations": 36},
                       {"linear": len(rels.linear), "quadratic_configurations": len(rels.linear),
                        "quadratic_polynomials": len(rels.quadratic)},
                       "published", {"m": 3}, mismatch="discrepancy"))
    out.append(_report("ideal-generators-vanish", True,
                       all(ring.vanishes_on_chi(p) for p in rels.polys()), "derived", {"m": 3}))
    _, quartic = ideal.standard_quartic(ring)
    res = ideal.graded_membership(quartic, I3)
    verified = res.member and res.certificate.expand(I3.gens_y) == ring.to_y(quartic)
    out.append(_report("ideal-quartic-member", True, verified, "published",
                       {"m": 3, "certificate_terms": len(res.certificate.entries) if res.certificate else 0,
                        "slice_rank": res.rank_ideal_slice, "slice_dim": res.slice_dim}))
    out.append(_report("ideal-quartic-vanishes", True, ring.vanishes_on_chi(quartic), "published", {"m": 3}))
    slices = [ideal.hilbert_slice(1, d) for d in range(1, 4)]
    out.append(_report("ideal-hilbert-m1", [1, 1, 1], slices, "published", {"m": 1}))
    h = [I3.hilbert_slice(d) for d in (1, 2, 3)]
    est = ideal.growth_degree(h)
    rep = CheckReport("ideal-growth-heuristic", "", "heuristic", 6, round(est, 2) if est else None, "published",
                      {"m": 3, "slices": h})
    out.append(rep)
    return out


# -- Weil representation ------------------------------------------------------------

def check_weil(cfg: Config) -> list[CheckReport]:
    out = []
    brute = {m: weil.projector_rank(QuadraticSpace(m))[1] for m in (1, 3)}
    out.append(_report("weil-dimensions", {1: 2, 3: 15, 5: 187, 6: 715},
                       {1: brute[1], 3: brute[3], 5: weil.invariant_dimension(5), 6: weil.invariant_dimension(6)},
                       "published"))
    out.append(_report("weil-block-traces", [(3, 1, 0)] * 6,
                       [tuple(int(t) for t in weil.block_traces(m)) for m in range(1, 7)], "published"))
    # characteristic functions are invariant
    sp3 = QuadraticSpace(3)
    all3 = bool(weil.invariant_columns(sp3, weil.chi_matrix(subspaces.maximal_ti(sp3), sp3.size)).all())
    sp6 = QuadraticSpace(6)
    rng = random.Random(cfg.seed)
    sample = [subspaces.random_ti(sp6, 6, rng) for _ in range(cfg.samples)]
    all6 = bool(weil.invariant_columns(sp6, weil.chi_matrix(sample, sp6.size)).all())
    out.append(_report("weil-chi-invariant", {"m3": True, "m6": True}, {"m3": all3, "m6": all6}, "published",
                       {"m6_samples": cfg.samples, "seed": cfg.seed}))
    spans = {m: weil.ti_span_dimension(m, seed=cfg.seed, prime=cfg.prime)["rank"] for m in (1, 2, 3, 6)}
    out.append(_report("weil-ti-span", {m: weil.invariant_dimension_formula(m) for m in spans}, spans, "published",
                       {"prime": cfg.prime, "seed": cfg.seed}))
    # the special invariant
    a = sp6.unit(1)
    f = weil.special_invariant(sp6, a)
    ones = [x for x in f.support() if x not in (0, a)]
    partner_ok = all(f(x) == 1 and sp6.q(x) == 0 and sp6.bilinear(a, x) == 1 for x in ones)
    out.append(_report("weil-special-invariant",
                       {"value_0": 16, "value_a": -16, "ones": 1024, "ones_are_partners": True, "invariant": True},
                       {"value_0": int(f(0)), "value_a": int(f(a)), "ones": len(ones),
                        "ones_are_partners": partner_ok, "invariant": weil.is_invariant(f)}, "published", {"m": 6}))
    prop = weil.special_invariant_check(3)
    out.append(_report("weil-special-combination", True, prop["corrected_ratio"] is not None, "derived",
                       {"m": 3, "ratio": prop["corrected_ratio"]}))
    out.append(_report("weil-special-combination-printed", True, prop["printed_ratio"] is not None, "published",
                       {"m": 3, "printed": "sum_A chi_A - 2^{m-2} sum_B chi_B",
                        "proportional": "2^{m-2} sum_A chi_A - sum_B chi_B"}, mismatch="discrepancy"))
    ranks = {m: weil.isotropic_restriction_rank(m, prime=cfg.prime, seed=cfg.seed)["rank"] for m in (3, 6)}
    out.append(_report("weil-restriction-rank", {3: 14, 6: 714}, ranks, "published", {"prime": cfg.prime}))
    return out


def check_psi_lift(cfg: Config) -> list[CheckReport]:
    sp = QuadraticSpace(6)
    out = []
    for k, dim in ((1, 187), (3, 15)):
        rep = weil.psi_image_report(subspaces.standard_ti(sp, k), prime=cfg.prime, seed=cfg.seed)
        out.append(_report(f"psi-lift-dim{k}",
                           {"lift_rank": dim, "periodic_invariant_dim": dim, "lifts_invariant": True},
                           {key: rep[key] for key in ("lift_rank", "periodic_invariant_dim", "lifts_invariant")},
                           "published", {"m": 6, "dim_S": k}))
    return out


# -- q-series -----------------------------------------------------------------------

def check_qseries(cfg: Config) -> list[CheckReport]:
    out = []
    expected = {6: (Fraction(-1, 2), 252, 8316), 10: (Fraction(-1, 2), 132, 67716), 14: (Fraction(-1, 2), 12, 98316)}
    for k, exp in expected.items():
        e = qseries.eisenstein_normalized(k, 3)
        out.append(_report(f"eisenstein-{k}", exp, (e[0], e[1], e[2]), "published", {"weight": k}))
    eta = qseries.eta12(cfg.order)
    out.append(_report("eta12-support", True,
                       all(e.denominator == 2 for e in eta.support()) and eta[Fraction(1, 2)] == 1,
                       "published", {"order": cfg.order}))
    out.append(_report("theta-jacobi", True, qseries.jacobi_defect(cfg.order).is_zero(), "published",
                       {"order": cfg.order}))
    const, holds = qseries.theta_square_constant(min(cfg.order, 20))
    out.append(_report("theta-square-sum", True, holds, "published", {"constant": const}))
    rep = qseries.heegner_report(6)
    out.append(_report("heegner-counts", (2016, 2079, 4),
                       (rep["components_H(-1)"], rep["components_H(-2)"], rep["H(-2) weight per component"]),
                       "published"))
    return out


# -- counting ---------------------------------------------------------------------

def check_counting(cfg: Config) -> list[CheckReport]:
    out = []
    bfs = {m: len(ortho_group.closure(ortho_group.generators(m))) for m in (1, 2)}
    out.append(_report("group-order", {m: ortho_group.group_order(m) for m in (1, 2)}, bfs, "formula",
                       {"exhaustive": {m: ortho_group.exhaustive_group_order(m) for m in (1, 2)},
                        "transvections_only_m2": len(ortho_group.closure(ortho_group.transvection_generators(2)))}))
    g3 = ortho_group.transvection_generators(3)
    sizes = sorted(len(o) for o in ortho_group.orbits(range(1, 64), g3))
    out.append(_report("transvection-orbits", [28, 35], sizes, "derived", {"m": 3}))
    brute = {m: ortho_group.hyperbolic_pairs_bruteforce(m) for m in (2, 3)}
    out.append(_report("plane-pairs-bruteforce",
                       {m: (ortho_group.hyperbolic_plane_count(m), ortho_group.hyperbolic_pair_count(m)) for m in (2, 3)},
                       brute, "derived"))
    out.append(_report("hyperbolic-planes-m6", 1064448, ortho_group.hyperbolic_plane_count(6), "derived"))
    rep = ortho_group.stabilizer_arithmetic()
    out.append(_report("stabilizer-order", rep["stabilizer_order_printed"], rep["stabilizer_order"], "published",
                       {"product": rep["product_order"]}, mismatch="discrepancy"))
    out.append(_report("stabilizer-image-order", rep["image_order_printed"], rep["image_order"], "published",
                       mismatch="discrepancy"))
    out.append(_report("stabilizer-index", rep["printed_count_factored"], rep["index_factored"], "published",
                       {"anisotropic_plane_pairs": rep["anisotropic_plane_pairs_factored"],
                        "index_is_anisotropic_pair_count": rep["index_equals_anisotropic_pairs"]}))
    out.append(_report("stabilizer-index-printed-image", rep["printed_count_factored"],
                       rep["index_from_printed_image"], "published", mismatch="discrepancy"))
    out.append(_report("split-plane-pairs", rep["printed_count_factored"], rep["split_plane_pairs_factored"],
                       "published", {"ratio": rep["split_to_printed_ratio"]}, mismatch="discrepancy"))
    return out


# -- the lattice model ------------------------------------------------------------------

def check_lattice(cfg: Config) -> list[CheckReport]:
    L = lattice_model
    out = []
    delta = L.standard_A2_delta()
    wider = L.standard_A2_delta(3)
    roots = L.e8_roots()
    out.append(_report("delta-size",
                       {"roots": 240, "root_classes": 120, "first": 3, "second": 120, "total": 123, "box_stable": True},
                       {"roots": len(roots), "root_classes": len({L.reduce_mod2(r) for r in roots}),
                        "first": len(delta.first), "second": len(delta.second), "total": len(delta),
                        "box_stable": wider == delta}, "published"))
    listed = {L.reduce_mod2(v) for v in L.FIRST_TYPE_LISTED}
    out.append(_report("delta-first-type", True, listed == set(delta.first), "published"))

    wit = L.listed_avoiding_witnesses(delta)
    out.append(_report("avoid-witnesses-1-4", [True] * 4,
                       [w["anisotropic"] and w["outside_delta"] and w["contains_alpha"] and w["avoids_delta"]
                        for w in wit[:4]], "published"))
    out.append(_report("avoid-witness-5", True, wit[4]["avoids_delta"], "published",
                       {"meets": wit[4]["meets"]}, mismatch="discrepancy"))
    meet = L.listed_meeting_witnesses(delta)
    out.append(_report("meet-witness-a", True, meet[0]["targets_ok"] and meet[0]["intersection_ok"], "published"))
    out.append(_report("meet-witness-b", True, meet[1]["intersection_ok"], "published",
                       {"meets": meet[1]["meets"], "ok_with_beta_at_12": meet[1]["ok_with_beta_at_12"],
                        "ok_with_e11_in_base": meet[1]["ok_with_e11_in_base"]}, mismatch="discrepancy"))

    diagonal = L.complement_orbits(delta, "diagonal")
    orbit_sizes = {"diagonal": sorted(len(o) for o in diagonal),
                   "full": sorted(len(o) for o in L.complement_orbits(delta, "full"))}
    out.append(_report("complement-orbits", 5, len(diagonal), "published", {"sizes": orbit_sizes}))
    hit = {i for i, o in enumerate(diagonal) for r in L.AVOID_REPRESENTATIVES if r in o}
    out.append(_report("complement-orbit-representatives", len(diagonal), len(hit), "published",
                       {"missed_orbit_sizes": sorted(len(o) for i, o in enumerate(diagonal) if i not in hit)},
                       mismatch="discrepancy"))

    # the avoiding statement on every orbit of the finest decomposition
    failures = []
    for o in L.complement_orbits(delta, "transvections"):
        try:
            L.find_star_avoiding(delta, o[0], seed=cfg.seed, budget=cfg.budget)
        except L.SearchExhausted:
            failures.append(L.SPACE.bits(o[0]))
    out.append(_status_or_resource("avoid-all-orbits", [], failures, "derived"))

    rep = L.root_system_witness_report()
    out.append(_report("e8-witness",
                       {"anisotropic": True, "independent": True, "avoids_M": True, "standard_reading": True},
                       {k: rep[k] for k in ("anisotropic", "independent", "avoids_M", "standard_reading")}, "published"))
    adm = L.pattern_admissibility(L.LITERAL_EDGES)
    out.append(_report("e8-literal-reading", True, rep["literal_reading"], "published",
                       {"literal_gram_rank": adm["rank"], "literal_admissible": adm["admissible"]},
                       mismatch="discrepancy"))

    out.extend(_lattice_searches(cfg, delta))
    return out


def _status_or_resource(check_id, expected, computed, provenance, params=None) -> CheckReport:
    rep = _report(check_id, expected, computed, provenance, params)
    if rep.status == "fail" and computed:
        rep.status = "resource"
    return rep


def _lattice_searches(cfg: Config, delta) -> list[CheckReport]:
    L = lattice_model
    rng = random.Random(cfg.seed)
    n = cfg.searches
    rest = [x for x in L.SPACE.anisotropic() if x not in delta]
    first = sorted(delta.first)
    second = sorted(delta.second)
    results = {"avoid": 0, "meet_a": 0, "meet_b": 0, "e8": 0}
    exhausted = {k: 0 for k in results}

    def attempt(key: str, fn: Callable[[], object]) -> None:
        try:
            fn()
            results[key] += 1
        except L.SearchExhausted:
            exhausted[key] += 1

    for i in range(n):
        alpha = rng.choice(rest)
        attempt("avoid", lambda: L.find_star_avoiding(delta, alpha, seed=cfg.seed + i, budget=cfg.budget))
        a1 = first[i % 3]
        attempt("meet_a", lambda: L.find_star_meeting(delta, [a1], seed=cfg.seed + i, budget=cfg.budget))
        a = rng.choice(second)
        b = rng.choice([x for x in second if x != a and not L.SPACE.bilinear(a, x)])
        attempt("meet_b", lambda: L.find_star_meeting(delta, [a, b], seed=cfg.seed + i, budget=cfg.budget))
        M = L.random_nonorthogonal_set(random.Random(cfg.seed * 1000 + i))
        attempt("e8", lambda: L.find_e8_root_system(M, seed=cfg.seed + i, budget=10 * cfg.budget))
    rep = _report("lattice-searches", {k: n for k in results}, results, "derived",
                  {"instances": n, "seed": cfg.seed, "budget": cfg.budget})
    if rep.status == "fail" and any(exhausted.values()):
        rep.status = "resource"
    return [rep]


# -- cusp values -----------------------------------------------------------------

def check_cusps(cfg: Config) -> list[CheckReport]:
    sp = QuadraticSpace(6)
    a = sp.unit(1)
    full = weil.full_invariant(sp)
    # an element of H (vanishing at 0) with nonzero isotropic values
    h = weil.special_invariant(sp, a) - full.scale(Fraction(16, 33))
    iso = sp.isotropic()
    h_ok = all(weil.cusp_value(h, 10, x) == -h(x) / 16 for x in iso)
    full_vals = sorted({weil.cusp_value(full, 10, x) for x in iso})
    return [
        _report("cusp-values", {"H_is_minus_C_over_16": True, "full_invariant": [Fraction(3, 40)]},
                {"H_is_minus_C_over_16": h_ok, "full_invariant": full_vals}, "derived",
                {"n": 10, "m": 6, "isotropic_classes": len(iso)}),
    ]


GROUPS: tuple[tuple[str, Callable[[Config], list[CheckReport]]], ...] = (
    ("census", check_census),
    ("configurations", check_configurations),
    ("tables", check_tables),
    ("ideal", check_ideal),
    ("weil", check_weil),
    ("psi-lift", check_psi_lift),
    ("qseries", check_qseries),
    ("counting", check_counting),
    ("lattice", check_lattice),
    ("cusps", check_cusps),
)


def _run_group(name: str, cfg: Config) -> list[CheckReport]:
    fn = dict(GROUPS)[name]
    start = time.perf_counter()
    try:
        reports = fn(cfg)
    except MemoryError as exc:
        reports = [CheckReport(name, name, "resource", None, str(exc), "derived")]
    elapsed = time.perf_counter() - start
    for r in reports:
        r.group = name
        r.runtime = elapsed / max(len(reports), 1)
    return reports


def _selected(name: str, only: list[str]) -> bool:
    return not only or any(name == o or name.startswith(o) for o in only) or _may_contain(name, only)


def verify_all(cfg: Config | None = None, only: Iterable[str] | None = None, jobs: int = 1) -> list[CheckReport]:
    """Run every check group (or those matching ``only``) and return the
    reports in a fixed order, whatever the parallelism.

    ``only`` entries match a group name or a check id prefix.
    """
    cfg = cfg or Config()
    only = list(only or [])
    names = [name for name, _ in GROUPS if _selected(name, only)]
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_group, names, [cfg] * len(names)))
    else:
        results = [_run_group(name, cfg) for name in names]
    reports = []
    for name, group_reports in zip(names, results):
        if only:
            group_reports = [r for r in group_reports
                             if any(name == o or r.check_id.startswith(o) for o in only)]
        reports.extend(group_reports)
    return reports


# check ids that do not start with their group name
_ID_PREFIXES = {
    "census": ("census",),
    "configurations": ("configurations", "psi-identities"),
    "tables": ("table",),
    "ideal": ("ideal",),
    "weil": ("weil",),
    "psi-lift": ("psi-lift",),
    "qseries": ("eisenstein", "eta12", "theta", "heegner"),
    "counting": ("group-order", "transvection", "plane-pairs", "hyperbolic", "stabilizer", "index", "split"),
    "lattice": ("delta", "avoid", "meet", "complement", "e8", "lattice"),
    "cusps": ("cusp",),
}


def _may_contain(group: str, only: list[str]) -> bool:
    prefixes = _ID_PREFIXES.get(group, ())
    return any(p.startswith(o) or o.startswith(p) for o in only for p in prefixes)


def exit_code(reports: Iterable[CheckReport]) -> int:
    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return 1
    if "resource" in statuses:
        return 2
    return 0
