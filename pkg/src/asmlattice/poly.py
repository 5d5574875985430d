"""Exact multivariate polynomials over the rationals with shift and forward
difference operators."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .errors import UnknownVariable

Exponent = tuple[int, ...]


class MultiPolynomial:
    """A polynomial in the ordered variables ``variables``.

    ``terms`` maps exponent vectors to nonzero :class:`~fractions.Fraction`
    coefficients.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Fraction | int] | None = None):
        self.variables = tuple(variables)
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.variables):
                raise ValueError(f"exponent {e} does not match {len(self.variables)} variables")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = clean.get(tuple(e), Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> MultiPolynomial:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> MultiPolynomial:
        k = cls._index(tuple(variables), name)
        e = [0] * len(variables)
        e[k] = 1
        return cls(variables, {tuple(e): 1})

    @staticmethod
    def _index(variables: tuple[str, ...], name: str) -> int:
        try:
            return variables.index(name)
        except ValueError:
            raise UnknownVariable(f"{name!r} is not among {variables}") from None

    def _coerce(self, other) -> MultiPolynomial:
        if isinstance(other, MultiPolynomial):
            if other.variables != self.variables:
                raise ValueError("polynomials live in different variable sets")
            return other
        return MultiPolynomial.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPolynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPolynomial(self.variables, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, MultiPolynomial):
            return self.variables == other.variables and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __call__(self, *values) -> Fraction:
        if len(values) != len(self.variables):
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(values, e):
                term *= Fraction(x) ** k
            total += term
        return total

    def shift(self, name: str, by: int = 1) -> MultiPolynomial:
        """``E_x p``: substitute ``x + by`` for ``x``."""
        k = self._index(self.variables, name)
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            d = e[k]
            for p in range(d + 1):
                f = list(e)
                f[k] = p
                f = tuple(f)
                out[f] = out.get(f, Fraction(0)) + c * comb(d, p) * Fraction(by) ** (d - p)
        return MultiPolynomial(self.variables, out)

    def difference(self, name: str) -> MultiPolynomial:
        """``Delta_x p = E_x p - p``."""
        return self.shift(name) - self

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-x for x in e])):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
