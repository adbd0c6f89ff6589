"""Sparse univariate polynomials with nonnegative integer coefficients.

Exponents are path lengths and may be astronomically large; only nonzero
terms are stored.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping


class LengthPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coef in items:
            if exp < 0:
                raise ValueError("exponents must be nonnegative")
            acc[exp] = acc.get(exp, 0) + coef
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> LengthPolynomial:
        return cls({exp: coef})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LengthPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        inner = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items()))
        return f"LengthPolynomial({{{inner}}})"

    def __add__(self, other: LengthPolynomial) -> LengthPolynomial:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LengthPolynomial(out)

    def __mul__(self, other: LengthPolynomial) -> LengthPolynomial:
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LengthPolynomial(out)

    def coefficient(self, exp: int) -> int:
        return self.terms.get(exp, 0)

    def max_coefficient(self) -> int:
        return max(self.terms.values(), default=0)

    def total(self) -> int:
        return sum(self.terms.values())

    def degree(self) -> int:
        return max(self.terms, default=-1)

    def cardinalities(self) -> Counter:
        """Chain cardinality multiset: a path of length l is a chain of l + 1 elements."""
        return Counter({e + 1: c for e, c in self.terms.items()})


ZERO = LengthPolynomial()
ONE = LengthPolynomial.monomial(0)


def poly_matmul(a: list[list[LengthPolynomial]], b: list[list[LengthPolynomial]]) -> list[list[LengthPolynomial]]:
    """Product of two square matrices with polynomial entries."""
    n = len(a)
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if not a[i][k]:
                continue
            for j in range(n):
                if b[k][j]:
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out
