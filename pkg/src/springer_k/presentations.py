"""Generators-and-relations presentations of Springer fiber K-rings and cohomology.

Every ideal here is indexed by triples (s, subset, d): a size s, an increasing
s-subset of {1..n} choosing x-variables, and a degree d with
``max(1, s + 1 - q) <= d <= s`` where ``q = p_function(dual(lam), s)``.
Candidates with d > s vanish identically and are never generated.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .partitions import Partition, dual_partition, p_function, phi_sequence
from .polynomials import (
    Polynomial,
    Rational,
    VariableSpace,
    binomial,
    complete_symmetric,
    elementary_symmetric,
    substitute,
)

FLAVORS = ("EqK", "EqK-compact", "EqCoh", "OrdK", "Flag", "ClassicalCoh")


@dataclass(frozen=True)
class GeneratorIndex:
    s: int
    subset: tuple[int, ...]
    d: int

    def as_dict(self) -> dict:
        return {"s": self.s, "subset": list(self.subset), "d": self.d}


@dataclass(frozen=True)
class IdealPresentation:
    """An ordered generator list together with where it came from."""

    flavor: str
    n: int
    space: VariableSpace
    generators: tuple[Polynomial, ...]
    indices: tuple[GeneratorIndex | None, ...]
    lam: Partition | None = None
    invertible: tuple[str, ...] = ()
    dropped: tuple[GeneratorIndex, ...] = ()
    specialization: tuple[tuple[str, str], ...] = ()
    display: Mapping[str, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def parameter_names(self) -> list[str]:
        """Variables outside the x family (the coefficient-ring generators)."""
        return [name for fam, _ in self.space.families if fam != "x" for name in self.space.family_names(fam)]

    def to_dict(self) -> dict:
        ambient: dict = {}
        for fam, arity in self.space.families:
            ambient[self.display.get(fam, fam)] = arity
        ambient["invertible"] = list(self.invertible)
        gens = []
        for g, idx in zip(self.generators, self.indices):
            entry = idx.as_dict() if idx is not None else {}
            entry["poly"] = g.to_text(self.display)
            gens.append(entry)
        out = {
            "lambda": list(self.lam.parts) if self.lam is not None else None,
            "n": self.n,
            "flavor": self.flavor,
            "ambient": ambient,
            "generators": gens,
            "dropped_zero": [idx.as_dict() for idx in self.dropped],
        }
        if self.specialization:
            out["specialization"] = dict(self.specialization)
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        head = f"flavor {self.flavor}"
        if self.lam is not None:
            head += f"  lambda ({self.lam})"
        lines = [head + f"  n {self.n}  generators {len(self.generators)}"]
        for g, idx in zip(self.generators, self.indices):
            tag = f"s={idx.s} i={list(idx.subset)} d={idx.d}" if idx is not None else "-"
            lines.append(f"  [{tag}]  {g.to_text(self.display)}")
        return "\n".join(lines)


# -- index set ------------------------------------------------------------


def degree_range(lam: Partition, s: int) -> range:
    q = p_function(dual_partition(lam), s)
    return range(max(1, s + 1 - q), s + 1)


def index_set(lam: Partition) -> list[GeneratorIndex]:
    """All (s, subset, d), ordered lexicographically."""
    n = lam.n
    out = []
    for s in range(1, n + 1):
        degrees = degree_range(lam, s)
        if not degrees:
            continue
        for subset in itertools.combinations(range(1, n + 1), s):
            out.extend(GeneratorIndex(s, subset, d) for d in degrees)
    return out


def phi_u_list(lam: Partition, space: VariableSpace) -> list[Polynomial]:
    """(u_phi(1), ..., u_phi(n)) as polynomials of *space*."""
    us = space.gens("u")
    return [us[j - 1] for j in phi_sequence(lam)]


def equivariant_space(lam: Partition) -> VariableSpace:
    return VariableSpace.of(x=lam.n, u=lam.length)


def tanisaki_relation(xs: Sequence[Polynomial], us: Sequence[Polynomial], d: int, space: VariableSpace) -> Polynomial:
    """sum_k (-1)^(d-k) e_k(xs) h_(d-k)(us[:s+1-d]) with s = len(xs)."""
    s = len(xs)
    u_args = list(us[: max(0, s + 1 - d)])
    acc = space.zero()
    for k in range(d + 1):
        e = elementary_symmetric(k, xs, space)
        if e:
            acc = acc + e * complete_symmetric(d - k, u_args, space).scale((-1) ** (d - k))
    return acc


def _build(
    lam: Partition,
    flavor: str,
    space: VariableSpace,
    make,
    invertible: tuple[str, ...],
    display: Mapping[str, str] | None = None,
) -> IdealPresentation:
    gens, kept, dropped = [], [], []
    for idx in index_set(lam):
        g = make(idx)
        if g.is_zero():
            dropped.append(idx)
        else:
            gens.append(g)
            kept.append(idx)
    return IdealPresentation(
        flavor=flavor,
        n=lam.n,
        space=space,
        generators=tuple(gens),
        indices=tuple(kept),
        lam=lam,
        invertible=invertible,
        dropped=tuple(dropped),
        display=dict(display or {}),
    )


def equivariant_k_ideal(lam: Partition) -> IdealPresentation:
    """The T^l-equivariant K-theoretic ideal in R(T^l)[x_1..x_n]."""
    space = equivariant_space(lam)
    xs, us = space.gens("x"), phi_u_list(lam, space)

    def make(idx: GeneratorIndex) -> Polynomial:
        return tanisaki_relation([xs[i - 1] for i in idx.subset], us, idx.d, space)

    return _build(lam, "EqK", space, make, invertible=("u",))


def compact_relation(xs: Sequence[Polynomial], us: Sequence[Polynomial], d: int, space: VariableSpace) -> Polynomial:
    """The same relation with every e_k(x) replaced by e_k(x) - e_k(u_phi(1..s))."""
    s = len(xs)
    u_args = list(us[: s + 1 - d])
    u_full = list(us[:s])
    acc = space.zero()
    for k in range(d + 1):
        diff = elementary_symmetric(k, xs, space) - elementary_symmetric(k, u_full, space)
        if diff:
            acc = acc + diff * complete_symmetric(d - k, u_args, space).scale((-1) ** (d - k))
    return acc


def equivariant_k_ideal_compact(lam: Partition) -> IdealPresentation:
    space = equivariant_space(lam)
    xs, us = space.gens("x"), phi_u_list(lam, space)

    def make(idx: GeneratorIndex) -> Polynomial:
        return compact_relation([xs[i - 1] for i in idx.subset], us, idx.d, space)

    return _build(lam, "EqK-compact", space, make, invertible=("u",))


def equivariant_cohomology_ideal(lam: Partition) -> IdealPresentation:
    """Same formula over H*(BT^l)[y]; y is stored as x and renamed on output."""
    base = equivariant_k_ideal(lam)
    return IdealPresentation(
        flavor="EqCoh",
        n=base.n,
        space=base.space,
        generators=base.generators,
        indices=base.indices,
        lam=lam,
        invertible=(),
        dropped=base.dropped,
        display={"x": "y"},
    )


def ordinary_k_ideal(lam: Partition) -> IdealPresentation:
    """Non-equivariant K-ring ideal: h_(d-k)(u...) replaced by C(q+d-k-1, q-1)."""
    space = VariableSpace.of(x=lam.n)
    xs = space.gens("x")
    lam_dual = dual_partition(lam)

    def make(idx: GeneratorIndex) -> Polynomial:
        q = p_function(lam_dual, idx.s)
        sub = [xs[i - 1] for i in idx.subset]
        acc = space.zero()
        for k in range(idx.d + 1):
            c = (-1) ** (idx.d - k) * binomial(q + idx.d - k - 1, q - 1)
            if c:
                acc = acc + elementary_symmetric(k, sub, space).scale(c)
        return acc

    return _build(lam, "OrdK", space, make, invertible=())


def classical_tanisaki_ideal(lam: Partition) -> IdealPresentation:
    """Ordinary cohomology ideal: e_d(x_(i_1), ..., x_(i_s)) over the index set."""
    space = VariableSpace.of(x=lam.n)
    xs = space.gens("x")

    def make(idx: GeneratorIndex) -> Polynomial:
        return elementary_symmetric(idx.d, [xs[i - 1] for i in idx.subset], space)

    return _build(lam, "ClassicalCoh", space, make, invertible=())


def flag_ideal(n: int) -> IdealPresentation:
    """e_k(x_1..x_n) - e_k(t_1..t_n), k = 1..n, over R(T^n)."""
    if n < 1:
        raise ValueError("n must be positive")
    space = VariableSpace.of(x=n, t=n)
    xs, ts = space.gens("x"), space.gens("t")
    gens = tuple(elementary_symmetric(k, xs) - elementary_symmetric(k, ts) for k in range(1, n + 1))
    return IdealPresentation(
        flavor="Flag",
        n=n,
        space=space,
        generators=gens,
        indices=(None,) * n,
        invertible=("t",),
    )


def build_presentation(flavor: str, lam: Partition) -> IdealPresentation:
    builders = {
        "EqK": equivariant_k_ideal,
        "EqK-compact": equivariant_k_ideal_compact,
        "EqCoh": equivariant_cohomology_ideal,
        "OrdK": ordinary_k_ideal,
        "ClassicalCoh": classical_tanisaki_ideal,
    }
    if flavor == "Flag":
        return flag_ideal(lam.n)
    try:
        return builders[flavor](lam)
    except KeyError:
        raise ValueError(f"unknown flavor {flavor!r}; choose from {FLAVORS}") from None


# -- specialization -------------------------------------------------------


def specialize_ideal(ideal: IdealPresentation, sigma: Mapping[str, Polynomial | Rational]) -> IdealPresentation:
    """Substitute every parameter variable (u or t) generator by generator.

    Constant images shrink the ambient space to the x family; polynomial
    images must all live in one common target space.  Zero images of an
    invertible variable are rejected.
    """
    params = ideal.parameter_names()
    missing = [name for name in params if name not in sigma]
    if missing:
        raise ValueError(f"specialization leaves {missing} unassigned")
    for name, value in sigma.items():
        fam = name.rstrip("0123456789")
        if fam in ideal.invertible and not isinstance(value, Polynomial) and Fraction(value) == 0:
            raise ValueError(f"{name} is invertible and cannot be sent to 0")

    targets = {v.space for v in sigma.values() if isinstance(v, Polynomial)}
    if len(targets) > 1:
        raise ValueError("polynomial images live in different spaces")
    target = targets.pop() if targets else VariableSpace.of(x=ideal.space.arity("x"))

    gens, kept, dropped = [], [], list(ideal.dropped)
    for g, idx in zip(ideal.generators, ideal.indices):
        img = substitute(g, sigma, target)
        if img.is_zero():
            if idx is not None:
                dropped.append(idx)
        else:
            gens.append(img)
            kept.append(idx)
    invertible = tuple(f for f in ideal.invertible if target.arity(f))
    return IdealPresentation(
        flavor=ideal.flavor,
        n=ideal.n,
        space=target,
        generators=tuple(gens),
        indices=tuple(kept),
        lam=ideal.lam,
        invertible=invertible,
        dropped=tuple(dropped),
        specialization=tuple((k, str(v)) for k, v in sigma.items()),
        display=ideal.display,
    )


def constant_specialization(ideal: IdealPresentation, value: Rational) -> dict[str, Rational]:
    return {name: value for name in ideal.parameter_names()}


# -- identity checks ------------------------------------------------------


def vanishing_residual(lam: Partition, s: int, d: int) -> Polynomial:
    """sum_k (-1)^(d-k) e_k(u_phi(1..s)) h_(d-k)(u_phi(1..s+1-d)).

    This is the difference between the plain and compact relations; it equals
    e_d(u_phi(s+2-d), ..., u_phi(s)), which has only d - 1 arguments.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    space = VariableSpace.of(u=lam.length)
    us = phi_u_list(lam, space)
    return tanisaki_relation(us[:s], us, d, space)


def vanishing_identity_check(lam: Partition, s: int, d: int) -> bool:
    return vanishing_residual(lam, s, d).is_zero()


def binomial_specialization_check(s: int, d: int, k: int, q: int) -> bool:
    """Both binomial identities behind the u -> 1 specialization."""
    if not (0 <= k <= d <= s and q >= s + 1 - d):
        raise ValueError(f"invalid (s, d, k, q) = {(s, d, k, q)}")
    space = VariableSpace.of()
    ones = [space.one()] * (s + 1 - d)
    h_val = complete_symmetric(d - k, ones, space).constant_value()
    base = binomial(s - k, s - d)
    if h_val != base:
        return False
    factor = Fraction(1)
    for i in range(1, q - s - 1 + d + 1):
        factor *= Fraction(s - k + i, s - d + i)
    return Fraction(binomial(q + d - k - 1, q - 1)) == factor * base


def truncation_candidate(lam: Partition, subset: Sequence[int], d: int) -> Polynomial:
    """The relation formula at arbitrary d (used to certify d = s + 1 is zero)."""
    space = equivariant_space(lam)
    xs, us = space.gens("x"), phi_u_list(lam, space)
    return tanisaki_relation([xs[i - 1] for i in subset], us, d, space)
