"""Multisets of maximal-chain cardinalities.

Two independent routes compute the profile of a poset: powers of the cover
adjacency matrix (:func:`profile_matrix`) and explicit enumeration of
source-to-sink paths (:func:`profile_enumerate`).
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import BudgetExceededError, EmptyPosetError, InvalidProfileError, ParseError
from .poset import ElementSet, Poset


class ChainProfile(Mapping):
    """Immutable multiset of positive integers, as ``cardinality -> multiplicity``."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[int, int] | Iterable[int] = ()):
        if isinstance(counts, Mapping):
            items = counts.items()
        else:
            items = Counter(counts).items()
        clean = {}
        for key, mult in items:
            if isinstance(key, bool) or int(key) != key or key < 1:
                raise InvalidProfileError(f"chain cardinalities must be positive integers, got {key!r}")
            if mult < 0:
                raise InvalidProfileError(f"negative multiplicity for {key}")
            if mult:
                clean[int(key)] = int(mult)
        self._counts = dict(sorted(clean.items()))

    @classmethod
    def parse(cls, text: str) -> ChainProfile:
        """Parse ``"2,3x2,5x2"`` style input (``vxk`` means k copies of v)."""
        counts: Counter = Counter()
        for token in text.replace(" ", "").split(","):
            if not token:
                raise ParseError(f"empty member in multiset {text!r}")
            value, _, mult = token.lower().partition("x")
            try:
                v = int(value)
                k = int(mult) if mult else 1
            except ValueError:
                raise ParseError(f"bad multiset member {token!r}") from None
            if v < 1 or k < 1:
                raise ParseError(f"multiset member {token!r} must be positive")
            counts[v] += k
        return cls(counts)

    def __getitem__(self, key):
        return self._counts[key]

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)

    def __eq__(self, other):
        if isinstance(other, ChainProfile):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._counts.items()))

    def __repr__(self):
        return f"ChainProfile({self._counts!r})"

    def __str__(self):
        return " ".join(f"{k}:{v}" for k, v in self._counts.items())

    @property
    def n(self) -> int:
        """Number of members counting multiplicity."""
        return sum(self._counts.values())

    @property
    def m(self) -> int:
        if not self._counts:
            raise InvalidProfileError("empty profile has no maximum")
        return max(self._counts)

    def members(self) -> list[int]:
        """Sorted members with repetition."""
        return [k for k, v in self._counts.items() for _ in range(v)]

    def distinct(self) -> list[int]:
        return list(self._counts)


def as_profile(s) -> ChainProfile:
    """Coerce ``s`` to a nonempty ChainProfile, raising InvalidProfileError otherwise."""
    if isinstance(s, str):
        try:
            s = ChainProfile.parse(s)
        except ParseError as exc:
            raise InvalidProfileError(str(exc)) from None
    if not isinstance(s, ChainProfile):
        s = ChainProfile(s)
    if s.n == 0:
        raise InvalidProfileError("profile must be nonempty")
    return s


def _require_nonempty(p: Poset):
    if p.n == 0:
        raise EmptyPosetError("operation needs a nonempty poset")


def _dtype(p: Poset):
    # Every entry of A^k is at most the number of maximal chains, which is
    # at most 2**(n-1); int64 is exact below 63 elements.
    return np.int64 if p.n <= 62 else object


def adjacency_matrix(p: Poset) -> np.ndarray:
    _require_nonempty(p)
    a = np.zeros((p.n, p.n), dtype=_dtype(p))
    for i, j in p.edges:
        a[i, j] = 1
    return a


def matrix_power(a: np.ndarray, k: int) -> np.ndarray:
    result = np.identity(a.shape[0], dtype=a.dtype)
    for _ in range(k):
        result = result @ a
    return result


def profile_matrix(p: Poset) -> ChainProfile:
    """Profile from powers of the adjacency matrix.

    Only the rows of A^k belonging to minimal elements are summed, so those
    rows are carried forward one multiplication per k.
    """
    a = adjacency_matrix(p)
    sources = list(p.minimal_elements())
    sinks = list(p.maximal_elements())
    rows = np.identity(p.n, dtype=a.dtype)[sources]
    counts = {}
    for k in range(p.n):
        total = int(rows[:, sinks].sum())
        if total:
            counts[k + 1] = total
        rows = rows @ a
        if not rows.any():
            break
    return ChainProfile(counts)


def maximal_chains(p: Poset) -> Iterator[ElementSet]:
    """Yield every maximal chain as a bottom-to-top tuple, in lexicographic order."""
    _require_nonempty(p)
    succ = p._succ
    for source in p.minimal_elements():
        stack = [(source, 0)]
        path = [source]
        while stack:
            v, i = stack[-1]
            if not succ[v]:
                yield tuple(path)
            if i < len(succ[v]):
                stack[-1] = (v, i + 1)
                w = succ[v][i]
                stack.append((w, 0))
                path.append(w)
            else:
                stack.pop()
                path.pop()


def profile_enumerate(p: Poset, path_budget: int = 10**6) -> ChainProfile:
    counts: Counter = Counter()
    for found, c in enumerate(maximal_chains(p), 1):
        if found > path_budget:
            raise BudgetExceededError(f"more than {path_budget} maximal chains; use profile_matrix")
        counts[len(c)] += 1
    return ChainProfile(counts)


def profile(p: Poset) -> ChainProfile:
    return profile_matrix(p)


def max_chain(p: Poset) -> ElementSet:
    """A maximum-cardinality chain; ties go to the lexicographically least index sequence."""
    _require_nonempty(p)
    longest = [0] * p.n
    for v in reversed(p.topological_order()):
        longest[v] = 1 + max((longest[w] for w in p._succ[v]), default=0)
    m = max(longest)
    v = min(x for x in range(p.n) if longest[x] == m)
    out = [v]
    while p._succ[v]:
        v = min(w for w in p._succ[v] if longest[w] == longest[v] - 1)
        out.append(v)
    return tuple(out)
