"""Rank, injectivity and ideal-comparison checks at generic parameter values.

Parameters (u or t) are specialized to distinct small primes chosen by a
seeded shuffle.  A rank is accepted only when two independent draws agree;
disagreement is treated as a degenerate draw and retried.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Any

from .fixed_points import fixed_points
from .groebner import GREVLEX, GroebnerBasis, MonomialOrder, QuotientBasis, buchberger, ideal_equality, quotient_dimension, standard_monomials
from .linalg import exact_rank
from .partitions import Partition, multinomial, phi_sequence
from .polynomials import embed
from .presentations import IdealPresentation, equivariant_k_ideal, flag_ideal, specialize_ideal

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)
DEFAULT_SEED = 17
DEFAULT_RETRIES = 3


class DegenerateSpecialization(RuntimeError):
    """Generic-point computations kept disagreeing across draws."""


def generic_values(names: list[str], seed: int) -> dict[str, int]:
    """Distinct nonzero primes for *names*, shuffled by *seed*."""
    pool = list(SMALL_PRIMES[: max(2 * len(names) + 2, 6)])
    if len(names) > len(pool):
        raise ValueError("too many parameters for the prime pool")
    rng = random.Random(seed)
    return dict(zip(names, rng.sample(pool, len(names))))


def specialize_generic(ideal: IdealPresentation, seed: int) -> tuple[IdealPresentation, dict[str, int]]:
    values = generic_values(ideal.parameter_names(), seed)
    return specialize_ideal(ideal, values), values


def basis_at(ideal: IdealPresentation, seed: int, order: MonomialOrder = GREVLEX) -> tuple[GroebnerBasis, dict[str, int]]:
    special, values = specialize_generic(ideal, seed)
    return buchberger(list(special.generators), order, special.space), values


def _second_seed(seed: int, attempt: int) -> int:
    return seed * 1_000_003 + 7919 * (attempt + 1)


def generic_rank(ideal: IdealPresentation, seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES, order: MonomialOrder = GREVLEX) -> int:
    """Quotient dimension at a generic parameter point, certified by a second draw."""
    if not ideal.parameter_names():
        return quotient_dimension(buchberger(list(ideal.generators), order, ideal.space))
    seen = []
    for attempt in range(retries):
        s1 = seed if attempt == 0 else _second_seed(seed, attempt + 100)
        s2 = _second_seed(s1, attempt)
        if generic_values(ideal.parameter_names(), s1) == generic_values(ideal.parameter_names(), s2):
            s2 += 1
        d1 = quotient_dimension(basis_at(ideal, s1, order)[0])
        d2 = quotient_dimension(basis_at(ideal, s2, order)[0])
        if d1 == d2:
            return d1
        seen.append((s1, d1, s2, d2))
    raise DegenerateSpecialization(f"dimensions disagree across draws: {seen}")


def generic_basis(ideal: IdealPresentation, seed: int = DEFAULT_SEED, order: MonomialOrder = GREVLEX) -> tuple[QuotientBasis, dict[str, int]]:
    G, values = basis_at(ideal, seed, order)
    return standard_monomials(G), values


def evaluation_matrix(lam: Partition, seed: int = DEFAULT_SEED) -> list[list[int]]:
    """Rows: standard monomials of the generic quotient; columns: fixed points."""
    ideal = equivariant_k_ideal(lam)
    basis, values = generic_basis(ideal, seed)
    phi = phi_sequence(lam)
    u_vals = [values[f"u{j}"] for j in range(1, lam.length + 1)]
    rows = []
    for m in basis.monomials:
        row = []
        for w in fixed_points(lam).points:
            x_vals = [u_vals[phi[v - 1] - 1] for v in w]
            entry = 1
            for xv, e in zip(x_vals, m[: lam.n]):
                entry *= xv ** e
            row.append(entry)
        rows.append(row)
    return rows


def localization_injectivity(lam: Partition, seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> bool:
    """Restriction to fixed points is injective on the generic quotient."""
    m = multinomial(lam)
    for attempt in range(retries):
        s = seed if attempt == 0 else _second_seed(seed, attempt)
        M = evaluation_matrix(lam, s)
        if len(M) != m:
            continue
        if exact_rank(M) == m:
            return True
    return False


def flag_consistency(n: int, order: MonomialOrder = GREVLEX) -> bool:
    """The one-column equivariant ideal equals the flag ideal once u is renamed t."""
    lam = Partition((1,) * n)
    flag = flag_ideal(n)
    eqk = [embed(g, flag.space, {"u": "t"}) for g in equivariant_k_ideal(lam).generators]
    return ideal_equality(eqk, list(flag.generators), order)


@dataclass
class Report:
    """One verification outcome in the shape written to JSON."""

    check: str
    passed: bool
    lam: Partition | None = None
    expected: Any = None
    got: Any = None
    seed: int | None = None
    elapsed_ms: float = 0.0
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "lambda": list(self.lam.parts) if self.lam is not None else None,
            "check": self.check,
            "expected": None if self.expected is None else str(self.expected),
            "got": None if self.got is None else str(self.got),
            "seed": self.seed,
            "pass": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.detail:
            out["detail"] = self.detail
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        lam = f"({self.lam})" if self.lam is not None else "-"
        status = "PASS" if self.passed else "FAIL"
        extra = ""
        if self.expected is not None or self.got is not None:
            extra = f" expected={self.expected} got={self.got}"
        if self.seed is not None:
            extra += f" seed={self.seed}"
        return f"{status} {self.check} lambda={lam}{extra}"


class timed:
    """Context manager recording elapsed milliseconds."""

    def __enter__(self) -> "timed":
        self.start = time.perf_counter()
        self.ms = 0.0
        return self

    def __exit__(self, *exc) -> None:
        self.ms = (time.perf_counter() - self.start) * 1000
