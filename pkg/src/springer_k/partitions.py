"""Integer partitions and the combinatorial data attached to them.

A :class:`Partition` stores only its nonzero parts.  Anything that needs the
zero-padded length-``n`` form (``p_function``, ``dual``) pads on demand.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str, canonicalize: bool = False) -> "Partition":
        """Parse ``"5,4,4,2"``.  With *canonicalize*, unsorted input is sorted."""
        try:
            parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError as exc:
            raise ValueError(f"not a comma-separated list of integers: {text!r}") from exc
        if canonicalize:
            parts.sort(reverse=True)
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts (``l`` in the usual notation)."""
        return len(self.parts)

    def __getitem__(self, j: int) -> int:
        """1-based part access; indices past the last part read as 0."""
        if j < 1:
            raise IndexError(j)
        return self.parts[j - 1] if j <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def to_json(self) -> str:
        return json.dumps(list(self.parts))

    def padded(self, length: int | None = None) -> tuple[int, ...]:
        length = self.n if length is None else length
        return self.parts + (0,) * (length - len(self.parts))


def dual_partition(lam: Partition) -> Partition:
    """Conjugate partition: the j-th part counts the parts of *lam* that are >= j."""
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def p_function(lam: Partition, s: int) -> int:
    """Sum of the last *s* entries of *lam* padded with zeros to length n."""
    n = lam.n
    if not 1 <= s <= n:
        raise ValueError(f"s must lie in [1, {n}], got {s}")
    return sum(lam.padded()[n - s:])


def phi_sequence(lam: Partition) -> tuple[int, ...]:
    """The map [n] -> [l] as a tuple; entry i-1 holds phi(i).

    Block r (for r = 1..l) is (1, 2, ..., r) repeated lam_r - lam_{r+1} times.
    """
    out: list[int] = []
    for r in range(1, lam.length + 1):
        out.extend(list(range(1, r + 1)) * (lam[r] - lam[r + 1]))
    return tuple(out)


def multinomial(lam: Partition) -> int:
    """n! / (lam_1! ... lam_l!)."""
    result = math.factorial(lam.n)
    for p in lam.parts:
        result //= math.factorial(p)
    return result


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of *n* in reverse-lexicographic order, (n) first."""
    if n < 1:
        raise ValueError("n must be positive")
    return [Partition(p) for p in _partitions(n, n)]


def partitions_up_to(n_max: int, n_min: int = 1) -> list[Partition]:
    return [lam for n in range(n_min, n_max + 1) for lam in enumerate_partitions(n)]


def as_partition(value: Partition | Sequence[int] | str) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    return Partition(tuple(value))
