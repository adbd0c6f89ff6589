"""Isomorphism-free poset enumeration and exact minimum-size search."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from .bounds import lower_bound, upper_bound
from .canon import canonical_form
from .constructions import trivial_construction
from .errors import CapBelowLowerBoundError
from .poset import Poset
from .profile import as_profile, profile_matrix

log = logging.getLogger(__name__)

DEFAULT_CLASS_BUDGET = 10**7

# n -> list of representatives, filled level by level
_levels: dict[int, list[Poset]] = {0: [Poset(0)]}
# n -> per-representative (height, number of maximal chains), for pruning
_signatures: dict[int, list[tuple[int, int]]] = {}


def antichains(p: Poset) -> Iterator[tuple[int, ...]]:
    """All antichains of ``p`` including the empty one, in a fixed order."""
    comp = [u | d for u, d in zip(p.up_masks, p.down_masks)]

    def grow(start, chosen, blocked):
        yield chosen
        for v in range(start, p.n):
            if not (blocked >> v) & 1:
                yield from grow(v + 1, chosen + (v,), blocked | comp[v])

    yield from grow(0, (), 0)


def _extend(p: Poset, below: tuple[int, ...]) -> Poset:
    """Add element ``p.n`` as a new maximal element covering the antichain ``below``."""
    return Poset(p.n + 1, p.edges + tuple((a, p.n) for a in below))


def _build_level(n: int) -> list[Poset]:
    seen = set()
    out = []
    for parent in posets_of_size(n - 1):
        for below in antichains(parent):
            child = _extend(parent, below)
            key = canonical_form(child)
            if key not in seen:
                seen.add(key)
                out.append(child)
    log.debug("enumerated %d posets on %d elements", len(out), n)
    return out


def posets_of_size(n: int) -> list[Poset]:
    """One representative per isomorphism class on ``n`` elements (cached)."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    for k in range(max(_levels) + 1, n + 1):
        _levels[k] = _build_level(k)
    return _levels[n]


def enumerate_posets(n: int) -> Iterator[Poset]:
    """Yield exactly one poset per isomorphism class on ``n`` elements.

    Every poset arises from one on ``n - 1`` elements by adding a maximal
    element above some antichain; children are kept only when their
    canonical form is new, so the order is deterministic.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    yield from posets_of_size(n)


def _signature_table(n: int) -> list[tuple[int, int]]:
    if n not in _signatures:
        _signatures[n] = [(p.height(), p.count_maximal_chains()) for p in posets_of_size(n)]
    return _signatures[n]


@dataclass(frozen=True)
class SearchResult:
    status: str  # "exact" or "budget_exhausted"
    size: int | None
    witness: Poset | None
    explored: int
    ceiling_used: bool = False

    @property
    def exact(self) -> bool:
        return self.status == "exact"


def minimal_poset(s, size_cap: int | None = None, class_budget: int = DEFAULT_CLASS_BUDGET) -> SearchResult:
    """Smallest poset whose maximal-chain profile is ``s``.

    Sizes are tried upward from the lower bound. Below the upper bound every
    isomorphism class is scanned; a class is skipped unless its longest chain
    equals max(S) and its chain count equals |S|. At the upper bound the
    trivial construction is returned without scanning.
    """
    s = as_profile(s)
    lo, hi = lower_bound(s), upper_bound(s)
    cap = hi if size_cap is None else size_cap
    if cap < lo:
        raise CapBelowLowerBoundError(f"size cap {cap} is below the lower bound {lo}")
    m, count = s.m, s.n
    explored = 0
    for t in range(lo, min(cap, hi) + 1):
        if t == hi:
            witness = trivial_construction(s)
            assert profile_matrix(witness) == s
            return SearchResult("exact", t, witness, explored, ceiling_used=True)
        reps = posets_of_size(t)
        sigs = _signature_table(t)
        for p, (height, chains) in zip(reps, sigs):
            explored += 1
            if explored > class_budget:
                return SearchResult("budget_exhausted", None, None, explored - 1)
            if height != m or chains != count:
                continue
            if profile_matrix(p) == s:
                return SearchResult("exact", t, p, explored)
    return SearchResult("budget_exhausted", None, None, explored)


__all__ = [
    "SearchResult",
    "antichains",
    "enumerate_posets",
    "minimal_poset",
    "posets_of_size",
]
