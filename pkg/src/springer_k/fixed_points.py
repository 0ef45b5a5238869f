"""Torus-fixed points of the Springer fiber and restriction of classes to them.

A permutation word ``w`` (one-line notation, ``w[i-1] = w(i)``) is a fixed
point when, for every k, the values j with ``phi(j) = k`` appear in ``w`` in
increasing order.  These values form a block of size lam_k, and the fixed
points are exactly one representative per coset of the block-preserving
Young subgroup.  When phi is weakly increasing (hooks, one-row and one-column
shapes) the blocks are the consecutive runs 1..lam_1, lam_1+1..lam_1+lam_2, ...

Restriction to w sends x_i to u_phi(w(i)) and fixes every u_j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, multinomial, phi_sequence
from .polynomials import Polynomial, VariableSpace, substitute
from .presentations import equivariant_k_ideal, equivariant_space

Word = tuple[int, ...]


def check_word(w: Sequence[int], n: int | None = None) -> Word:
    w = tuple(int(v) for v in w)
    n = len(w) if n is None else n
    if len(w) != n or sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{n}")
    return w


def compose(w: Sequence[int], v: Sequence[int]) -> Word:
    """The word of i -> w(v(i))."""
    return tuple(w[v[i] - 1] for i in range(len(v)))


def inverse(w: Sequence[int]) -> Word:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[v - 1] = i
    return tuple(out)


def blocks(lam: Partition) -> list[tuple[int, ...]]:
    """Value blocks: block k holds the j with phi(j) = k, increasing."""
    phi = phi_sequence(lam)
    return [tuple(j for j in range(1, lam.n + 1) if phi[j - 1] == k) for k in range(1, lam.length + 1)]


def is_fixed_point(lam: Partition, w: Sequence[int]) -> bool:
    w = check_word(w, lam.n)
    phi = phi_sequence(lam)
    last = [0] * (lam.length + 1)
    for v in w:
        k = phi[v - 1]
        if v < last[k]:
            return False
        last[k] = v
    return True


@lru_cache(maxsize=None)
def _fixed_points(lam: Partition) -> tuple[Word, ...]:
    return tuple(w for w in itertools.permutations(range(1, lam.n + 1)) if is_fixed_point(lam, w))


@dataclass(frozen=True)
class FixedPointSet:
    lam: Partition
    points: tuple[Word, ...]
    block_values: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def index(self, w: Sequence[int]) -> int:
        return self.points.index(tuple(w))

    def to_dict(self) -> dict:
        return {"lambda": list(self.lam.parts), "count": len(self.points), "points": [list(w) for w in self.points]}


def fixed_points(lam: Partition) -> FixedPointSet:
    """All fixed-point words in lexicographic order; there are multinomial(lam) of them."""
    return FixedPointSet(lam, _fixed_points(lam), tuple(blocks(lam)))


@lru_cache(maxsize=None)
def _block_index(lam: Partition) -> tuple[int, ...]:
    """Entry v - 1 is the block holding value v."""
    return phi_sequence(lam)


def coset_representative(lam: Partition, w: Sequence[int]) -> Word:
    """The unique fixed point in the coset of w under block-preserving relabelling."""
    w = check_word(w, lam.n)
    block_of = _block_index(lam)
    positions: dict[int, list[int]] = {}
    for i, v in enumerate(w):
        positions.setdefault(block_of[v - 1], []).append(i)
    out = list(w)
    for pos in positions.values():
        for i, v in zip(pos, sorted(w[i] for i in pos)):
            out[i] = v
    return tuple(out)


# -- restriction ----------------------------------------------------------


def restriction_map(lam: Partition, w: Sequence[int], target: VariableSpace | None = None) -> dict[str, Polynomial]:
    target = target or VariableSpace.of(u=lam.length)
    phi = phi_sequence(lam)
    us = target.gens("u")
    return {f"x{i + 1}": us[phi[v - 1] - 1] for i, v in enumerate(w)}


def restrict(p: Polynomial, lam: Partition, w: Sequence[int]) -> Polynomial:
    """Image of p at the fixed point w, a polynomial in u alone."""
    w = check_word(w, lam.n)
    if not is_fixed_point(lam, w):
        raise ValueError(f"{w} is not a fixed point for lambda = ({lam})")
    target = VariableSpace.of(u=lam.length)
    mapping: dict[str, Polynomial] = restriction_map(lam, w, target)
    mapping = {k: v for k, v in mapping.items() if k in p.space}
    for name in p.space.family_names("u"):
        mapping[name] = target.var(name)
    return substitute(p, mapping, target, total=True)


@dataclass(frozen=True)
class GKMTuple:
    """Values of a class at each fixed point, aligned with ``points``."""

    lam: Partition
    points: tuple[Word, ...]
    values: tuple[Polynomial, ...]

    def __getitem__(self, w: Sequence[int]) -> Polynomial:
        return self.values[self.points.index(tuple(w))]

    def to_list(self) -> list[str]:
        return [v.to_text() for v in self.values]

    def to_dict(self) -> dict:
        return {"points": [list(w) for w in self.points], "values": self.to_list()}


def gkm_image(p: Polynomial, lam: Partition) -> GKMTuple:
    pts = fixed_points(lam).points
    return GKMTuple(lam, pts, tuple(restrict(p, lam, w) for w in pts))


def gkm_tuple(lam: Partition, values: Mapping[Word, Polynomial] | Sequence[Polynomial]) -> GKMTuple:
    pts = fixed_points(lam).points
    if isinstance(values, Mapping):
        vals = tuple(values[w] for w in pts)
    else:
        vals = tuple(values)
    if len(vals) != len(pts):
        raise ValueError("one value per fixed point is required")
    return GKMTuple(lam, pts, vals)


# -- symmetric group actions ----------------------------------------------


def sn_act_polynomial(v: Sequence[int], p: Polynomial) -> Polynomial:
    """x_i -> x_v(i); every other variable is fixed."""
    n = p.space.arity("x")
    v = check_word(v, n)
    mapping = {f"x{i}": p.space.var(f"x{v[i - 1]}") for i in range(1, n + 1)}
    return substitute(p, mapping, p.space)


def sn_act_tuple(v: Sequence[int], f: GKMTuple, lam: Partition) -> GKMTuple:
    """(v . f) at w is f at the representative of the coset of w v."""
    v = check_word(v, lam.n)
    lookup = dict(zip(f.points, f.values))
    vals = tuple(lookup[coset_representative(lam, compose(w, v))] for w in f.points)
    return GKMTuple(lam, f.points, vals)


# -- verification reports -------------------------------------------------


@dataclass
class Violation:
    where: dict
    residual: str

    def to_dict(self) -> dict:
        return {**self.where, "residual": self.residual}


@dataclass
class CheckResult:
    lam: Partition
    check: str
    comparisons: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "check": self.check,
            "comparisons": self.comparisons,
            "pass": self.passed,
            "violations": [v.to_dict() for v in self.violations],
        }


def equivariance_check(lam: Partition) -> CheckResult:
    """Compare v . image(x_i) with image(x_v(i)), and check v fixes image(u_j)."""
    result = CheckResult(lam, "equivariance")
    space = equivariant_space(lam)
    images = {name: gkm_image(space.var(name), lam) for name in space.names}
    for v in itertools.permutations(range(1, lam.n + 1)):
        for i in range(1, lam.n + 1):
            lhs = sn_act_tuple(v, images[f"x{i}"], lam)
            rhs = images[f"x{v[i - 1]}"]
            result.comparisons += 1
            if lhs.values != rhs.values:
                result.violations.append(
                    Violation({"v": list(v), "generator": f"x{i}"}, f"{lhs.to_list()} != {rhs.to_list()}")
                )
        for name in space.family_names("u"):
            lhs = sn_act_tuple(v, images[name], lam)
            result.comparisons += 1
            if lhs.values != images[name].values:
                result.violations.append(Violation({"v": list(v), "generator": name}, str(lhs.to_list())))
    return result


def generators_vanish_check(lam: Partition, generators: Iterable | None = None) -> CheckResult:
    """Every equivariant K-theory relation must restrict to 0 at every fixed point."""
    result = CheckResult(lam, "gkm")
    ideal = equivariant_k_ideal(lam)
    pairs = generators if generators is not None else zip(ideal.generators, ideal.indices)
    pts = fixed_points(lam).points
    target = VariableSpace.of(u=lam.length)
    maps = []
    for w in pts:
        m = restriction_map(lam, w, target)
        m.update({name: target.var(name) for name in target.names})
        maps.append(m)
    for g, idx in pairs:
        for w, m in zip(pts, maps):
            r = substitute(g, m, target, total=True)
            result.comparisons += 1
            if not r.is_zero():
                where = idx.as_dict() if idx is not None else {}
                where["w"] = list(w)
                result.violations.append(Violation(where, r.to_text()))
    return result


def check_multinomial_count(lam: Partition) -> bool:
    return len(fixed_points(lam)) == multinomial(lam)
