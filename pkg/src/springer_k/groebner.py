"""Buchberger's algorithm over Q and the quotient-ring computations built on it.

The kernel works on plain dicts ``{exponent tuple: gmpy2.mpq}`` with a monic
basis, a lazy max-heap for leading terms, and the Gebauer-Moeller pair
criteria (which include the coprime-leading-monomial criterion).  Public
functions accept and return :class:`~springer_k.polynomials.Polynomial`.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq

from .polynomials import Monomial, Polynomial, VariableSpace

INFINITE = math.inf


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex or lex with variables ranked by the space's enumeration order."""

    kind: str = "grevlex"

    def __post_init__(self) -> None:
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def heap_key(self) -> Callable[[Monomial], tuple]:
        """Key whose *minimum* is the largest monomial."""
        if self.kind == "grevlex":
            return lambda m: (-sum(m), m[::-1])
        return lambda m: tuple(-e for e in m)

    def sort_key(self) -> Callable[[Monomial], tuple]:
        """Ascending key (smallest monomial first)."""
        if self.kind == "grevlex":
            return lambda m: (sum(m), tuple(-e for e in reversed(m)))
        return lambda m: m


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


class _Poly:
    """Kernel polynomial: monic-able dict with a cached leading monomial."""

    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms: dict, lm: Monomial, lc):
        self.terms = terms
        self.lm = lm
        self.lc = lc


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Kernel:
    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        self._hk = order.heap_key()
        self._keys: dict[Monomial, tuple] = {}

    def key(self, m: Monomial) -> tuple:
        k = self._keys.get(m)
        if k is None:
            k = self._keys[m] = self._hk(m)
        return k

    def lead(self, terms: dict) -> Monomial:
        return min(terms, key=self.key)

    def make(self, terms: dict) -> _Poly | None:
        if not terms:
            return None
        lm = self.lead(terms)
        lc = terms[lm]
        if lc != 1:
            inv = 1 / lc
            terms = {m: c * inv for m, c in terms.items()}
        return _Poly(terms, lm, mpq(1))

    def reduce(self, terms: dict, basis: Sequence[_Poly], full: bool = True) -> dict:
        """Remainder of *terms* on division by the monic *basis*.

        With ``full=False`` stop at the first irreducible leading term.
        """
        f = dict(terms)
        heap = [(self.key(m), m) for m in f]
        heapq.heapify(heap)
        rem: dict = {}
        leads = [(g.lm, g) for g in basis]
        key = self.key
        while heap:
            _, m = heapq.heappop(heap)
            c = f.get(m)
            if c is None:
                continue
            # duplicates can sit in the heap; the dict entry is the truth
            del f[m]
            for lm, g in leads:
                if _divides(lm, m):
                    q = tuple(a - b for a, b in zip(m, lm))
                    for gm, gc in g.terms.items():
                        if gm == lm:
                            continue
                        t = tuple(a + b for a, b in zip(gm, q))
                        v = f.get(t)
                        if v is None:
                            f[t] = -c * gc
                            heapq.heappush(heap, (key(t), t))
                        else:
                            v = v - c * gc
                            if v:
                                f[t] = v
                            else:
                                del f[t]
                    break
            else:
                rem[m] = c
                if not full:
                    rem.update(f)
                    return rem
        return rem

    def spoly(self, f: _Poly, g: _Poly) -> dict:
        lcm = _lcm(f.lm, g.lm)
        qf = tuple(a - b for a, b in zip(lcm, f.lm))
        qg = tuple(a - b for a, b in zip(lcm, g.lm))
        out: dict = {}
        for m, c in f.terms.items():
            out[tuple(a + b for a, b in zip(m, qf))] = c
        for m, c in g.terms.items():
            t = tuple(a + b for a, b in zip(m, qg))
            v = out.get(t, 0) - c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return out

    def buchberger(self, inputs: Iterable[dict]) -> list[_Poly]:
        G: list[_Poly] = []
        pairs: set[tuple[int, int]] = set()
        # reduce the inputs against each other as they arrive, smallest first
        polys = [p for p in (self.make(dict(t)) for t in inputs) if p is not None]
        polys.sort(key=lambda p: self.key(p.lm), reverse=True)
        queue: list[dict] = [p.terms for p in polys]
        for terms in queue:
            r = self.make(self.reduce(terms, [g for g in G if g is not None]))
            if r is not None:
                G, pairs = self._update(G, pairs, r)
        while pairs:
            i, j = min(pairs, key=lambda p: (self.key(_lcm(G[p[0]].lm, G[p[1]].lm)), p))
            pairs.discard((i, j))
            s = self.spoly(G[i], G[j])
            r = self.make(self.reduce(s, [g for g in G if g is not None]))
            if r is not None:
                G, pairs = self._update(G, pairs, r)
        return self._reduced([g for g in G if g is not None])

    def _update(self, G: list, pairs: set, f: _Poly) -> tuple[list, set]:
        """Gebauer-Moeller installation of f as basis element number len(G)."""
        lmf = f.lm
        new = len(G)
        live = [i for i, g in enumerate(G) if g is not None]
        # B_k: drop old pairs whose lcm is strictly divisible by lm(f)
        kept = set()
        for i, j in pairs:
            L = _lcm(G[i].lm, G[j].lm)
            if _divides(lmf, L) and L != _lcm(G[i].lm, lmf) and L != _lcm(G[j].lm, lmf):
                continue
            kept.add((i, j))
        # new pairs: chain criterion then product criterion per lcm class
        by_lcm: dict[Monomial, list[int]] = {}
        for i in live:
            by_lcm.setdefault(_lcm(G[i].lm, lmf), []).append(i)
        minimal: list[Monomial] = []
        for L in sorted(by_lcm, key=lambda m: (sum(m), m)):
            if any(_divides(M, L) for M in minimal):
                continue
            minimal.append(L)
        for L in minimal:
            members = by_lcm[L]
            if any(_coprime(G[i].lm, lmf) for i in members):
                continue
            kept.add((min(members), new))
        # retire old elements whose leading monomial is now redundant
        G = G + [f]
        for i in live:
            if _divides(lmf, G[i].lm):
                still = any(i in p for p in kept)
                if not still:
                    G[i] = None
        return G, kept

    def _reduced(self, G: list[_Poly]) -> list[_Poly]:
        G = sorted(G, key=lambda g: self.key(g.lm), reverse=True)
        minimal: list[_Poly] = []
        for g in G:
            if not any(_divides(h.lm, g.lm) for h in minimal):
                minimal.append(g)
        out = []
        for k, g in enumerate(minimal):
            others = minimal[:k] + minimal[k + 1:]
            tail = {m: c for m, c in g.terms.items() if m != g.lm}
            red = self.reduce(tail, others)
            red[g.lm] = mpq(1)
            out.append(_Poly(red, g.lm, mpq(1)))
        out.sort(key=lambda g: self.key(g.lm), reverse=True)
        return out


def _to_kernel(p: Polynomial) -> dict:
    return {m: mpq(c.numerator, c.denominator) for m, c in p.terms.items()}


def _from_kernel(space: VariableSpace, terms: dict) -> Polynomial:
    return Polynomial(space, {m: Fraction(int(c.numerator), int(c.denominator)) for m, c in terms.items()})


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Groebner basis."""

    space: VariableSpace
    order: MonomialOrder
    basis: tuple[Polynomial, ...]
    leading: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.leading)


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder = GREVLEX, space: VariableSpace | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by *generators*."""
    gens = list(generators)
    if space is None:
        if not gens:
            raise ValueError("an empty generator list needs an explicit space")
        space = gens[0].space
    for g in gens:
        if g.space != space:
            raise ValueError(f"generator in {g.space}, expected {space}")
    kernel = _Kernel(space.nvars, order)
    G = kernel.buchberger(_to_kernel(g) for g in gens if g)
    return GroebnerBasis(
        space=space,
        order=order,
        basis=tuple(_from_kernel(space, g.terms) for g in G),
        leading=tuple(g.lm for g in G),
    )


def _kernel_for(G: GroebnerBasis) -> tuple[_Kernel, list[_Poly]]:
    kernel = _Kernel(G.space.nvars, G.order)
    polys = [_Poly(_to_kernel(g), lm, mpq(1)) for g, lm in zip(G.basis, G.leading)]
    return kernel, polys


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """The unique remainder of p modulo the ideal of G."""
    if p.space != G.space:
        raise ValueError(f"polynomial in {p.space}, basis in {G.space}")
    kernel, polys = _kernel_for(G)
    return _from_kernel(G.space, kernel.reduce(_to_kernel(p), polys))


def in_ideal(p: Polynomial, G: GroebnerBasis) -> bool:
    return normal_form(p, G).is_zero()


def _pure_power_bounds(G: GroebnerBasis) -> list[int] | None:
    bounds = []
    for k in range(G.space.nvars):
        exps = [m[k] for m in G.leading if m[k] and sum(m) == m[k]]
        if not exps:
            return None
        bounds.append(min(exps))
    return bounds


def _standard(G: GroebnerBasis) -> list[Monomial]:
    bounds = _pure_power_bounds(G)
    if bounds is None:
        raise ValueError("quotient is infinite-dimensional")
    if G.is_unit():
        return []
    found = []
    nv = G.space.nvars
    # depth-first over exponent boxes; divisibility is monotone so prune early
    stack: list[Monomial] = [(0,) * nv]
    seen = {stack[0]}
    while stack:
        m = stack.pop()
        if any(_divides(lm, m) for lm in G.leading):
            continue
        found.append(m)
        for k in range(nv):
            if m[k] + 1 < bounds[k]:
                t = m[:k] + (m[k] + 1,) + m[k + 1:]
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    found.sort(key=G.order.sort_key())
    return found


def quotient_dimension(G: GroebnerBasis) -> int | float:
    """Number of standard monomials, or INFINITE."""
    if G.is_unit():
        return 0
    if _pure_power_bounds(G) is None:
        return INFINITE
    return len(_standard(G))


@dataclass(frozen=True)
class QuotientBasis:
    space: VariableSpace
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial(self.space, {m: 1}) for m in self.monomials]

    def to_text_list(self, rename=None) -> list[str]:
        return [p.to_text(rename) for p in self.polynomials()]


def standard_monomials(G: GroebnerBasis) -> QuotientBasis:
    """Monomials outside the leading-term ideal, ascending in the order."""
    return QuotientBasis(G.space, tuple(_standard(G)))


def ideal_equality(A: Sequence[Polynomial], B: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """Whether A and B generate the same ideal."""
    space = (list(A) + list(B))[0].space if (A or B) else None
    if space is None:
        return True
    GA = buchberger(A, order, space)
    GB = buchberger(B, order, space)
    return all(in_ideal(b, GA) for b in B) and all(in_ideal(a, GB) for a in A)
