"""Witness posets for the upper bound and for shifted subset-sum profiles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import SizeError
from .poset import Poset, ordinal_sum
from .profile import ChainProfile, as_profile


@dataclass(frozen=True)
class SumsDecomposition:
    """``k`` blocks with chain-extension terms ``terms`` (each >= 0)."""

    k: int
    terms: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if len(self.terms) != self.k:
            raise ValueError(f"expected {self.k} terms, got {len(self.terms)}")
        if any(a < 0 for a in self.terms):
            raise ValueError("terms must be nonnegative")

    def profile(self) -> ChainProfile:
        return ChainProfile(self.k + s for s in subset_sums(self.terms))


def subset_sums(terms: Iterable[int]) -> list[int]:
    """All 2**k subset sums with multiplicity, sorted."""
    sums = [0]
    for a in terms:
        sums = sums + [s + a for s in sums]
    return sorted(sums)


def trivial_construction(s) -> Poset:
    """Spine chain of length m plus one pendant element per other member of S.

    Elements ``0 .. m-1`` form the spine; a pendant for member ``j`` covers
    spine element ``j - 2`` (0-based), or is isolated when ``j == 1``.
    Pendants follow in increasing order of ``j``.
    """
    s = as_profile(s)
    m = s.m
    rest = Counter(s)
    rest[m] -= 1
    edges = [(i, i + 1) for i in range(m - 1)]
    nxt = m
    for j in sorted(rest):
        for _ in range(rest[j]):
            if j > 1:
                edges.append((j - 2, nxt))
            nxt += 1
    return Poset(nxt, edges)


def sums_block(a: int) -> Poset:
    """A chain of ``a + 1`` elements next to one incomparable element."""
    return Poset(a + 2, [(i, i + 1) for i in range(a)])


def sums_construction(d: SumsDecomposition) -> Poset:
    result = Poset(0)
    for a in d.terms:
        result = ordinal_sum(result, sums_block(a))
    return result


def reconstruct_subset_sums(t: Iterable[int]) -> tuple[int, ...] | None:
    """Recover nonnegative ``A`` with ``subset_sums(A) == sorted(t)``, or None.

    Peels off the smallest term at each step: it is the second-smallest sum,
    and pairing each unmatched sum ``s`` with ``s + a`` in ascending order
    leaves the sums of the remaining terms. The answer is rechecked in full.
    """
    t = sorted(t)
    size = len(t)
    if size == 0 or size & (size - 1):
        raise SizeError(f"multiset size {size} is not a power of two")
    if t[0] != 0:
        return None
    terms = []
    current = t
    while len(current) > 1:
        a = current[1]
        pending = Counter(current)
        half = []
        for s in current:
            if not pending[s]:
                continue
            pending[s] -= 1
            if not pending[s + a]:
                return None
            pending[s + a] -= 1
            half.append(s)
        terms.append(a)
        current = half
    result = tuple(sorted(terms))
    if subset_sums(result) != t:
        return None
    return result


def as_shifted_sums(s) -> SumsDecomposition | None:
    s = as_profile(s)
    size = s.n
    if size & (size - 1):
        return None
    k = size.bit_length() - 1
    if k < 1 or min(s) != k:
        return None
    terms = reconstruct_subset_sums(x - k for x in s.members())
    if terms is None:
        return None
    return SumsDecomposition(k, terms)
