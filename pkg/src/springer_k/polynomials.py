"""Sparse multivariate polynomials with exact rational coefficients.

Variables come in named families (``x``, ``u``, ``t``, ...) of fixed arity;
variable ``x3`` is index 3 of family ``x``.  A polynomial is a map from
exponent tuples to nonzero :class:`fractions.Fraction` coefficients, relative
to a :class:`VariableSpace`.  Terms print in graded reverse lexicographic
order over the space's variable enumeration.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]
Monomial = tuple[int, ...]


@dataclass(frozen=True)
class VariableSpace:
    """Ordered variable families, e.g. ``(("x", 3), ("u", 2))``."""

    families: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        names = [name for name, _ in self.families]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate family names: {names}")
        for name, arity in self.families:
            if not re.fullmatch(r"[A-Za-z_]+", name) or arity < 0:
                raise ValueError(f"bad family {name!r} of arity {arity}")

    @classmethod
    def of(cls, **arities: int) -> "VariableSpace":
        """``VariableSpace.of(x=3, u=2)``; keyword order is the variable order."""
        return cls(tuple(arities.items()))

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(f"{fam}{i}" for fam, arity in self.families for i in range(1, arity + 1))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: k for k, name in enumerate(self.names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def arity(self, family: str) -> int:
        return dict(self.families).get(family, 0)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in {self}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def family_names(self, family: str) -> list[str]:
        return [f"{family}{i}" for i in range(1, self.arity(family) + 1)]

    def var(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def gens(self, family: str) -> list["Polynomial"]:
        return [self.var(name) for name in self.family_names(family)]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: Rational) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def __str__(self) -> str:
        return "[" + ", ".join(f"{f}:{a}" for f, a in self.families) + "]"


def grevlex_key(m: Monomial) -> tuple:
    """Sort key for graded reverse lexicographic order; larger key is larger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


class Polynomial:
    """Immutable sparse polynomial over a :class:`VariableSpace`."""

    __slots__ = ("space", "terms", "_hash")

    def __init__(self, space: VariableSpace, terms: Mapping[Monomial, Rational] | None = None):
        self.space = space
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if len(m) != space.nvars:
                raise ValueError(f"exponent vector {m} does not fit {space}")
            if c:
                clean[tuple(m)] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, space: VariableSpace, terms: dict[Monomial, Fraction]) -> "Polynomial":
        p = object.__new__(cls)
        p.space = space
        p.terms = terms
        p._hash = None
        return p

    # -- ring structure -------------------------------------------------

    def _coerce(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.space != self.space:
                raise ValueError(f"variable spaces differ: {self.space} vs {other.space}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.space.const(other)
        return NotImplemented

    def __add__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.space, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.space, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = terms.get(m, 0) + c1 * c2
                if v:
                    terms[m] = v
                else:
                    del terms[m]
        return Polynomial._raw(self.space, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = self.space.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Rational) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.space.zero()
        return Polynomial._raw(self.space, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.space.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.space, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def variables(self) -> set[str]:
        names = self.space.names
        return {names[k] for m in self.terms for k, e in enumerate(m) if e}

    def constant_value(self) -> Fraction | None:
        """The value if the polynomial is constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if not any(m):
                return c
        return None

    def monomial_dict(self, m: Monomial) -> dict[str, int]:
        return {self.space.names[k]: e for k, e in enumerate(m) if e}

    # -- serialization --------------------------------------------------

    def to_text(self, rename: Mapping[str, str] | None = None) -> str:
        """Canonical text form such as ``x1^2*u1 - 3*u1^2``.

        *rename* maps family names for display only (``{"x": "y"}``).
        """
        if not self.terms:
            return "0"
        rename = rename or {}
        pieces = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in self.monomial_dict(m).items():
                fam = name.rstrip("0123456789")
                shown = rename.get(fam, fam) + name[len(fam):]
                factors.append(shown if e == 1 else f"{shown}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_terms(self, rename: Mapping[str, str] | None = None) -> list[dict]:
        """JSON-ready term list; coefficients are exact decimal strings."""
        rename = rename or {}
        out = []
        for m, c in self.sorted_terms():
            mono = {}
            for name, e in self.monomial_dict(m).items():
                fam = name.rstrip("0123456789")
                mono[rename.get(fam, fam) + name[len(fam):]] = e
            out.append({"coeff": str(c), "monomial": mono})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_terms())

    @classmethod
    def from_terms(cls, space: VariableSpace, terms: Iterable[Mapping]) -> "Polynomial":
        acc = space.zero()
        for t in terms:
            exps = [0] * space.nvars
            for name, e in t["monomial"].items():
                exps[space.index(name)] = int(e)
            acc = acc + Polynomial(space, {tuple(exps): Fraction(t["coeff"])})
        return acc

    @classmethod
    def parse(cls, space: VariableSpace, text: str) -> "Polynomial":
        """Inverse of :meth:`to_text` (also accepts any sum of signed products)."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty polynomial text")
        if src[0] not in "+-":
            src = "+" + src
        acc = space.zero()
        for sign, body in re.findall(r"([+-])([^+-]+)", src):
            term = space.const(-1 if sign == "-" else 1)
            for factor in body.split("*"):
                base, _, exp = factor.partition("^")
                if base in space:
                    term = term * space.var(base) ** int(exp or 1)
                else:
                    term = term.scale(Fraction(base) ** int(exp or 1))
            acc = acc + term
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    __str__ = to_text


# -- substitution ---------------------------------------------------------


def substitute(
    p: Polynomial,
    mapping: Mapping[str, Polynomial | Rational],
    target: VariableSpace | None = None,
    total: bool = False,
) -> Polynomial:
    """Simultaneous substitution of variables of *p* into *target*.

    Variables missing from *mapping* carry over by name when *target* has a
    variable of the same name; with ``total=True`` any unmapped variable that
    actually occurs in *p* is an error.
    """
    target = target or p.space
    for name in mapping:
        if name not in p.space:
            raise KeyError(f"{name!r} is not a variable of {p.space}")
    images: list[Polynomial] = []
    for name in p.space.names:
        if name in mapping:
            img = mapping[name]
            if isinstance(img, Polynomial):
                if img.space != target:
                    raise ValueError(f"image of {name} lives in {img.space}, expected {target}")
            else:
                img = target.const(img)
            images.append(img)
        elif name in target and not total:
            images.append(target.var(name))
        else:
            images.append(None)  # type: ignore[arg-type]

    powers: dict[tuple[int, int], Polynomial] = {}

    def power(k: int, e: int) -> Polynomial:
        key = (k, e)
        if key not in powers:
            img = images[k]
            if img is None:
                raise KeyError(f"variable {p.space.names[k]} is unmapped")
            powers[key] = img ** e
        return powers[key]

    acc: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        term = target.const(c)
        for k, e in enumerate(m):
            if e:
                term = term * power(k, e)
        for tm, tc in term.terms.items():
            v = acc.get(tm, 0) + tc
            if v:
                acc[tm] = v
            else:
                acc.pop(tm, None)
    return Polynomial._raw(target, acc)


def embed(p: Polynomial, target: VariableSpace, rename: Mapping[str, str] | None = None) -> Polynomial:
    """Move *p* into *target*, optionally renaming families (``{"t": "u"}``)."""
    rename = rename or {}
    mapping = {}
    for name in p.variables():
        fam = name.rstrip("0123456789")
        mapping[name] = target.var(rename.get(fam, fam) + name[len(fam):])
    return substitute(p, mapping, target, total=False) if mapping else target.const(p.constant_value())


# -- symmetric functions --------------------------------------------------


def _space_of(args: Sequence[Polynomial], space: VariableSpace | None) -> VariableSpace:
    if args:
        return args[0].space
    if space is None:
        raise ValueError("an empty argument list needs an explicit variable space")
    return space


def elementary_symmetric(k: int, args: Sequence[Polynomial], space: VariableSpace | None = None) -> Polynomial:
    """e_k(args): sum of products of k distinct arguments; e_0 = 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    sp = _space_of(args, space)
    if k > len(args):
        return sp.zero()
    # row[j] holds e_j of the prefix processed so far
    row = [sp.one()] + [sp.zero()] * k
    for a in args:
        for j in range(k, 0, -1):
            row[j] = row[j] + a * row[j - 1]
    return row[k]


def complete_symmetric(k: int, args: Sequence[Polynomial], space: VariableSpace | None = None) -> Polynomial:
    """h_k(args): sum of all degree-k monomials in the arguments; h_0 = 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    sp = _space_of(args, space)
    if k == 0:
        return sp.one()
    row = [sp.one()] + [sp.zero()] * k
    for a in args:
        for j in range(1, k + 1):
            row[j] = row[j] + a * row[j - 1]
    return row[k]


def binomial(a: int, b: int) -> int:
    """C(a, b) for a >= 0, zero outside 0 <= b <= a."""
    if a < 0:
        raise ValueError("binomial is only defined here for a >= 0")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


# -- truncated power series -----------------------------------------------


class TruncatedPowerSeries:
    """Power series in an auxiliary variable t, truncated after t^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[Polynomial], order: int):
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        space = coeffs[0].space
        padded = list(coeffs[: order + 1])
        padded += [space.zero()] * (order + 1 - len(padded))
        self.coeffs = tuple(padded)
        self.order = order

    @property
    def space(self) -> VariableSpace:
        return self.coeffs[0].space

    @classmethod
    def one(cls, space: VariableSpace, order: int) -> "TruncatedPowerSeries":
        return cls([space.one()], order)

    @classmethod
    def linear(cls, a: Polynomial, order: int) -> "TruncatedPowerSeries":
        """1 + a t."""
        return cls([a.space.one(), a], order)

    @classmethod
    def inverse_linear(cls, b: Polynomial, order: int) -> "TruncatedPowerSeries":
        """(1 + b t)^{-1} = sum_j (-b)^j t^j."""
        coeffs = [b.space.one()]
        for _ in range(order):
            coeffs.append(-(coeffs[-1] * b))
        return cls(coeffs, order)

    def __mul__(self, other: "TruncatedPowerSeries") -> "TruncatedPowerSeries":
        order = min(self.order, other.order)
        out = [self.space.zero() for _ in range(order + 1)]
        for i, a in enumerate(self.coeffs[: order + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: order + 1 - i]):
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedPowerSeries(out, order)

    def __getitem__(self, d: int) -> Polynomial:
        if not 0 <= d <= self.order:
            raise IndexError(f"coefficient {d} outside truncation order {self.order}")
        return self.coeffs[d]


def series_coefficient(
    numerator_roots: Sequence[Polynomial],
    denominator_roots: Sequence[Polynomial],
    d: int,
    space: VariableSpace | None = None,
) -> Polynomial:
    """Coefficient of t^d in prod(1 + a t) / prod(1 + b t)."""
    if d < 0:
        raise ValueError("d must be non-negative")
    sp = _space_of(list(numerator_roots) + list(denominator_roots), space)
    series = TruncatedPowerSeries.one(sp, d)
    for a in numerator_roots:
        series = series * TruncatedPowerSeries.linear(a, d)
    for b in denominator_roots:
        series = series * TruncatedPowerSeries.inverse_linear(b, d)
    return series[d]

