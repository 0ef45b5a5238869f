"""Named verification suites, each returning a list of :class:`Report`."""

from __future__ import annotations

import math
from itertools import combinations, permutations
from typing import Callable

from .fixed_points import compose, equivariance_check, fixed_points, generators_vanish_check, gkm_image, sn_act_tuple
from .groebner import GREVLEX, MonomialOrder, ideal_equality
from .partitions import Partition, multinomial
from .polynomials import VariableSpace, series_coefficient
from .presentations import (
    binomial_specialization_check,
    build_presentation,
    classical_tanisaki_ideal,
    constant_specialization,
    equivariant_cohomology_ideal,
    equivariant_k_ideal,
    equivariant_k_ideal_compact,
    flag_ideal,
    index_set,
    ordinary_k_ideal,
    phi_u_list,
    specialize_ideal,
    truncation_candidate,
    vanishing_residual,
)
from .verify import DEFAULT_RETRIES, DEFAULT_SEED, Report, flag_consistency, generic_rank, localization_injectivity, timed

SUITES = ("gkm", "rank", "equivariance", "specialize", "powerseries", "identities", "flag-consistency")


def _first(violations: list) -> dict:
    return {"first_counterexample": violations[0].to_dict(), "violations": len(violations)} if violations else {}


def suite_gkm(lam: Partition, seed: int = DEFAULT_SEED, **_) -> list[Report]:
    with timed() as t:
        res = generators_vanish_check(lam)
    out = [Report("gkm_vanishing", res.passed, lam, expected=0, got=len(res.violations), elapsed_ms=t.ms,
                  detail={"comparisons": res.comparisons, "fixed_points": len(fixed_points(lam)), **_first(res.violations)})]
    with timed() as t:
        ok = localization_injectivity(lam, seed)
    m = multinomial(lam)
    out.append(Report("localization_injectivity", ok, lam, expected=m, got=m if ok else "deficient", seed=seed, elapsed_ms=t.ms))
    return out


def suite_rank(lam: Partition, seed: int = DEFAULT_SEED, flavor: str = "EqK", retries: int = DEFAULT_RETRIES,
               order: MonomialOrder = GREVLEX, **_) -> list[Report]:
    ideal = build_presentation(flavor, lam)
    expected = math.factorial(lam.n) if flavor == "Flag" else multinomial(lam)
    out = []
    for s in (seed, seed + 1):
        with timed() as t:
            got = generic_rank(ideal, s, retries, order)
        out.append(Report(f"generic_rank[{flavor}]", got == expected, lam, expected, got, seed=s, elapsed_ms=t.ms))
    return out


def suite_equivariance(lam: Partition, **_) -> list[Report]:
    with timed() as t:
        res = equivariance_check(lam)
    out = [Report("equivariance", res.passed, lam, elapsed_ms=t.ms, detail={"comparisons": res.comparisons, **_first(res.violations)})]
    if lam.parts == (1,) * lam.n:
        out.append(symmaction_report(lam))
    return out


def symmaction_report(lam: Partition) -> Report:
    """For the one-column shape the action is plain right translation: (v.f)|w = f|wv."""
    bad = []
    with timed() as t:
        space = VariableSpace.of(x=lam.n, u=lam.length)
        for i in range(1, lam.n + 1):
            f = gkm_image(space.var(f"x{i}"), lam)
            for v in permutations(range(1, lam.n + 1)):
                g = sn_act_tuple(v, f, lam)
                for w in f.points:
                    if g[w] != f[compose(w, v)]:
                        bad.append({"x": i, "v": list(v), "w": list(w)})
    return Report("symmaction", not bad, lam, elapsed_ms=t.ms, detail={"first_counterexample": bad[0]} if bad else {})


def suite_specialize(lam: Partition, order: MonomialOrder = GREVLEX, **_) -> list[Report]:
    out = []
    with timed() as t:
        eqk = equivariant_k_ideal(lam)
        at_one = specialize_ideal(eqk, constant_specialization(eqk, 1))
        ordk = ordinary_k_ideal(lam)
        ok = ideal_equality(list(at_one.generators), list(ordk.generators), order)
    out.append(Report("ordinary_specialization", ok, lam, elapsed_ms=t.ms))

    with timed() as t:
        coh = equivariant_cohomology_ideal(lam)
        at_zero = specialize_ideal(coh, constant_specialization(coh, 0))
        classical = classical_tanisaki_ideal(lam)
        same = sorted(g.to_text() for g in at_zero.generators) == sorted(g.to_text() for g in classical.generators)
    out.append(Report("classical_limit", same, lam, expected=len(classical), got=len(at_zero), elapsed_ms=t.ms))

    with timed() as t:
        bad = [c for c in binomial_cases(lam.n) if not binomial_specialization_check(*c)]
    out.append(Report("binomial_specialization", not bad, lam, expected=0, got=len(bad), elapsed_ms=t.ms,
                      detail={"first_counterexample": dict(zip("sdkq", bad[0]))} if bad else {}))
    return out


def binomial_cases(s_max: int) -> list[tuple[int, int, int, int]]:
    """All (s, d, k, q) with 0 <= k <= d <= s <= s_max and s + 1 - d <= q <= s_max + 1."""
    return [
        (s, d, k, q)
        for s in range(1, s_max + 1)
        for d in range(0, s + 1)
        for k in range(0, d + 1)
        for q in range(max(1, s + 1 - d), s_max + 2)
    ]


def powerseries_mismatches(lam: Partition) -> list[dict]:
    """Compare the t^d coefficient of prod(1 + x t) / prod(1 + u t) with each relation."""
    ideal = equivariant_k_ideal(lam)
    space = ideal.space
    xs, us = space.gens("x"), phi_u_list(lam, space)
    gens = dict(zip(ideal.indices, ideal.generators))
    bad = []
    for idx in index_set(lam):
        coeff = series_coefficient([xs[i - 1] for i in idx.subset], us[: idx.s + 1 - idx.d], idx.d, space)
        expected = gens.get(idx, space.zero())
        if coeff != expected:
            bad.append({**idx.as_dict(), "residual": (coeff - expected).to_text()})
    return bad


def suite_powerseries(lam: Partition, **_) -> list[Report]:
    with timed() as t:
        bad = powerseries_mismatches(lam)
    return [Report("lambda_operation_identity", not bad, lam, expected=0, got=len(bad), elapsed_ms=t.ms,
                   detail={"first_counterexample": bad[0]} if bad else {})]


def compact_mismatches(lam: Partition) -> list[dict]:
    plain = equivariant_k_ideal(lam)
    compact = equivariant_k_ideal_compact(lam)
    bad = []
    if plain.indices != compact.indices:
        bad.append({"reason": "index lists differ"})
    for idx, a, b in zip(plain.indices, plain.generators, compact.generators):
        if a != b:
            bad.append({**idx.as_dict(), "residual": (a - b).to_text()})
    return bad


def residual_failures(lam: Partition) -> list[dict]:
    pairs = sorted({(idx.s, idx.d) for idx in index_set(lam)})
    return [{"s": s, "d": d, "residual": r.to_text()} for s, d in pairs if not (r := vanishing_residual(lam, s, d)).is_zero()]


def truncation_failures(lam: Partition) -> list[dict]:
    bad = []
    for s in range(1, lam.n + 1):
        for subset in combinations(range(1, lam.n + 1), s):
            g = truncation_candidate(lam, subset, s + 1)
            if not g.is_zero():
                bad.append({"s": s, "subset": list(subset), "d": s + 1, "residual": g.to_text()})
    return bad


def suite_identities(lam: Partition, **_) -> list[Report]:
    out = []
    for name, fn in (("compact_equivalence", compact_mismatches), ("vanishing_residual", residual_failures),
                     ("truncation_soundness", truncation_failures)):
        with timed() as t:
            bad = fn(lam)
        out.append(Report(name, not bad, lam, expected=0, got=len(bad), elapsed_ms=t.ms,
                          detail={"first_counterexample": bad[0]} if bad else {}))
    return out


def suite_flag_consistency(lam: Partition, seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES,
                           order: MonomialOrder = GREVLEX, **_) -> list[Report]:
    n = lam.n
    with timed() as t:
        ok = flag_consistency(n, order)
    out = [Report("flag_consistency", ok, Partition((1,) * n), elapsed_ms=t.ms, detail={"n": n})]
    with timed() as t:
        got = generic_rank(flag_ideal(n), seed, retries, order)
    out.append(Report("generic_rank[Flag]", got == math.factorial(n), Partition((1,) * n), math.factorial(n), got, seed, t.ms))
    return out


RUNNERS: dict[str, Callable[..., list[Report]]] = {
    "gkm": suite_gkm,
    "rank": suite_rank,
    "equivariance": suite_equivariance,
    "specialize": suite_specialize,
    "powerseries": suite_powerseries,
    "identities": suite_identities,
    "flag-consistency": suite_flag_consistency,
}


def run_suite(name: str, lam: Partition, **options) -> list[Report]:
    names = SUITES if name == "all" else (name,)
    reports: list[Report] = []
    for suite in names:
        try:
            runner = RUNNERS[suite]
        except KeyError:
            raise ValueError(f"unknown suite {suite!r}") from None
        reports.extend(runner(lam, **options))
    return reports
