"""Finite posets stored as their covering-relation DAG (Hasse diagram).

Elements are the integers ``0 .. n-1``. A :class:`Poset` is immutable and is
validated on construction: the cover edges must form an acyclic graph in which
every edge is the only directed path between its endpoints.
"""

from __future__ import annotations

import heapq
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CycleError,
    DuplicateEdgeError,
    ParseError,
    PosetIndexError,
    RedundantEdgeError,
)

ElementSet = tuple  # ordered tuple of distinct element indices

# reachability bitmasks cost O(n^2) bits; larger posets fall back to graph search
_MASK_LIMIT = 4096


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite poset given by its cover edges ``(i, j)`` meaning ``i ≺ j``."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("element count must be nonnegative")
        succ: list[list[int]] = [[] for _ in range(n)]
        pred: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for edge in edges:
            i, j = int(edge[0]), int(edge[1])
            if not (0 <= i < n and 0 <= j < n):
                raise PosetIndexError(f"edge {(i, j)} out of range for {n} elements")
            if i == j:
                raise CycleError(f"self-loop at element {i}")
            if (i, j) in seen:
                raise DuplicateEdgeError((i, j))
            seen.add((i, j))
            succ[i].append(j)
            pred[j].append(i)
        for lst in succ:
            lst.sort()
        for lst in pred:
            lst.sort()
        self.n = n
        self.edges = tuple(sorted(seen))
        self._succ = tuple(tuple(s) for s in succ)
        self._pred = tuple(tuple(p) for p in pred)
        self._topo = self._toposort()
        self._check_reduced()

    def _toposort(self):
        # Kahn's algorithm, smallest index first so the order is deterministic
        indeg = [len(p) for p in self._pred]
        ready = [v for v in range(self.n) if indeg[v] == 0]
        heapq.heapify(ready)
        topo = []
        while ready:
            v = heapq.heappop(ready)
            topo.append(v)
            for w in self._succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(ready, w)
        if len(topo) != self.n:
            raise CycleError("cover edges contain a directed cycle")
        return tuple(topo)

    def _check_reduced(self):
        succ = self._succ
        branching = [i for i in range(self.n) if len(succ[i]) > 1]
        if not branching:
            return
        if self.n <= _MASK_LIMIT:
            up = self.up_masks
            for i in branching:
                for j in succ[i]:
                    if any(w != j and (up[w] >> j) & 1 for w in succ[i]):
                        raise RedundantEdgeError((i, j))
            return
        for i in branching:
            # anything reachable in two or more steps must not be a direct successor
            direct = set(succ[i])
            stack = [w for v in succ[i] for w in succ[v]]
            visited = set(stack)
            while stack:
                v = stack.pop()
                if v in direct:
                    raise RedundantEdgeError((i, v))
                for w in succ[v]:
                    if w not in visited:
                        visited.add(w)
                        stack.append(w)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """Per element, bitmask of the elements strictly above it."""
        up = [0] * self.n
        for v in reversed(self._topo):
            mask = 0
            for w in self._succ[v]:
                mask |= (1 << w) | up[w]
            up[v] = mask
        return tuple(up)

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        down = [0] * self.n
        for v, mask in enumerate(self.up_masks):
            for w in _bits(mask):
                down[w] |= 1 << v
        return tuple(down)

    def __repr__(self):
        return f"Poset({self.n}, {list(self.edges)!r})"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __len__(self):
        return self.n

    def _check(self, x):
        if not 0 <= x < self.n:
            raise PosetIndexError(f"element {x} out of range for {self.n} elements")

    def upper_covers(self, x: int) -> tuple[int, ...]:
        self._check(x)
        return self._succ[x]

    def lower_covers(self, x: int) -> tuple[int, ...]:
        self._check(x)
        return self._pred[x]

    def up_mask(self, x: int) -> int:
        """Bitmask of elements strictly above ``x``."""
        self._check(x)
        return self.up_masks[x]

    def down_mask(self, x: int) -> int:
        """Bitmask of elements strictly below ``x``."""
        self._check(x)
        return self.down_masks[x]

    def topological_order(self) -> tuple[int, ...]:
        return self._topo

    def leq(self, x: int, y: int) -> bool:
        self._check(x)
        self._check(y)
        if x == y:
            return True
        if self.n <= _MASK_LIMIT:
            return bool((self.up_masks[x] >> y) & 1)
        stack, seen = [x], {x}
        while stack:
            for w in self._succ[stack.pop()]:
                if w == y:
                    return True
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def less(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def minimal_elements(self) -> ElementSet:
        return tuple(v for v in range(self.n) if not self._pred[v])

    def maximal_elements(self) -> ElementSet:
        return tuple(v for v in range(self.n) if not self._succ[v])

    def relabel(self, perm: Sequence[int]) -> Poset:
        """Return the isomorphic poset in which element ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling must be a permutation of the elements")
        return Poset(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def dual(self) -> Poset:
        return Poset(self.n, [(j, i) for i, j in self.edges])

    def count_maximal_chains(self) -> int:
        """Number of source-to-sink paths in the cover DAG."""
        ways = [0] * self.n
        for v in reversed(self._topo):
            ways[v] = sum(ways[w] for w in self._succ[v]) if self._succ[v] else 1
        return sum(ways[v] for v in range(self.n) if not self._pred[v])

    def height(self) -> int:
        """Cardinality of a longest chain (0 for the empty poset)."""
        longest = [0] * self.n
        for v in reversed(self._topo):
            longest[v] = 1 + max((longest[w] for w in self._succ[v]), default=0)
        return max(longest, default=0)


def from_cover_edges(n: int, edges: Iterable[tuple[int, int]]) -> Poset:
    return Poset(n, edges)


def chain(n: int) -> Poset:
    return Poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return Poset(n, ())


def _check_subset(p: Poset, subset) -> tuple[int, ...]:
    subset = tuple(int(x) for x in subset)
    for x in subset:
        p._check(x)
    if len(set(subset)) != len(subset):
        raise ValueError("element set contains duplicates")
    return subset


def _reduce(n: int, above: list[int]) -> list[tuple[int, int]]:
    """Cover edges of the strict order whose up-sets are the bitmasks ``above``."""
    edges = []
    for i in range(n):
        mask = above[i]
        for j in _bits(mask):
            # j covers i unless some k strictly between them exists
            if not any((above[k] >> j) & 1 for k in _bits(mask) if k != j):
                edges.append((i, j))
    return edges


def suborder(p: Poset, subset) -> Poset:
    """Restriction of ``p`` to ``subset``; element ``k`` of the result is ``subset[k]``.

    The covering relation is recomputed from the restricted order, so the
    result can contain covers that are not edges of ``p``.
    """
    subset = _check_subset(p, subset)
    above = []
    for x in subset:
        mask = 0
        for k, y in enumerate(subset):
            if x != y and p.leq(x, y):
                mask |= 1 << k
        above.append(mask)
    return Poset(len(subset), _reduce(len(subset), above))


def ordinal_sum(p1: Poset, p2: Poset) -> Poset:
    """Stack ``p2`` on top of ``p1``; elements of ``p2`` are shifted by ``p1.n``."""
    off = p1.n
    edges = list(p1.edges)
    edges.extend((i + off, j + off) for i, j in p2.edges)
    edges.extend((a, b + off) for a in p1.maximal_elements() for b in p2.minimal_elements())
    return Poset(p1.n + p2.n, edges)


def down_set(p: Poset, x: int) -> ElementSet:
    """Elements ``y`` with ``y <= x``, in increasing index order."""
    mask = p.down_mask(x) | (1 << x)
    return tuple(_bits(mask))


def up_set(p: Poset, x: int) -> ElementSet:
    mask = p.up_mask(x) | (1 << x)
    return tuple(_bits(mask))


def is_splitting_element(p: Poset, x: int) -> bool:
    below = suborder(p, down_set(p, x))
    if below.count_maximal_chains() < 2:
        return False
    return suborder(p, up_set(p, x)).count_maximal_chains() >= 2


def splitting_elements(p: Poset) -> ElementSet:
    return tuple(x for x in range(p.n) if is_splitting_element(p, x))


# -- text format -------------------------------------------------------------

POSET_HEADER = "poset v1"


def format_poset(p: Poset) -> str:
    lines = [POSET_HEADER, f"elements {p.n}"]
    lines.extend(f"cover {i} {j}" for i, j in p.edges)
    return "\n".join(lines) + "\n"


def _int_field(token, lineno, what):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"{what} must be nonnegative", lineno)
    return value


def parse_poset(text: str) -> Poset:
    """Parse the ``poset v1`` format. Blank lines and ``#`` comments are ignored."""
    n = None
    edges = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line != POSET_HEADER:
                raise ParseError(f"expected {POSET_HEADER!r} header", lineno)
            header_seen = True
            continue
        words = line.split()
        if n is None:
            if words[0] != "elements" or len(words) != 2:
                raise ParseError("expected 'elements <n>'", lineno)
            n = _int_field(words[1], lineno, "element count")
            continue
        if words[0] != "cover" or len(words) != 3:
            raise ParseError(f"expected 'cover <i> <j>', got {line!r}", lineno)
        i = _int_field(words[1], lineno, "index")
        j = _int_field(words[2], lineno, "index")
        if i >= n or j >= n:
            raise ParseError(f"index out of range for {n} elements", lineno)
        edges.append((i, j))
    if not header_seen:
        raise ParseError(f"missing {POSET_HEADER!r} header", 1)
    if n is None:
        raise ParseError("missing 'elements' line")
    return Poset(n, edges)


def to_dot(p: Poset, name: str = "hasse") -> str:
    """Graphviz digraph of the Hasse diagram, drawn bottom to top."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    lines.extend(f"  {v};" for v in range(p.n))
    lines.extend(f"  {i} -> {j};" for i, j in p.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
