"""Exact canonical labeling of posets.

Colour refinement on the cover DAG followed by individualization/backtracking.
The key is the lexicographically least edge list over all leaves of the search
tree, so two posets get the same key iff they are isomorphic. Branches are
pruned only through automorphisms: twin vertices (identical upper and lower
covers) and orbits of automorphisms discovered at earlier leaves.
"""

from __future__ import annotations

from .poset import Poset


def _rank(keys):
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(colors, succ, pred):
    ncells = len(set(colors))
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in succ[v])), tuple(sorted(colors[u] for u in pred[v])))
            for v in range(len(colors))
        ]
        colors = _rank(keys)
        k = len(set(colors))
        if k == ncells:
            return colors
        ncells = k


def _initial_colors(p: Poset):
    n = p.n
    succ, pred = p._succ, p._pred
    topo = p.topological_order()
    up, down = p.up_masks, p.down_masks
    depth = [0] * n
    for v in topo:
        for w in succ[v]:
            depth[w] = max(depth[w], depth[v] + 1)
    rise = [0] * n
    for v in reversed(topo):
        for w in succ[v]:
            rise[v] = max(rise[v], rise[w] + 1)
    keys = [
        (depth[v], rise[v], len(pred[v]), len(succ[v]), down[v].bit_count(), up[v].bit_count())
        for v in range(n)
    ]
    return _refine(_rank(keys), succ, pred)


class _Find:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_labeling(p: Poset) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    """Return ``(position, code)``: ``position[v]`` is v's canonical index, ``code`` the relabeled edge list."""
    n = p.n
    succ, pred = p._succ, p._pred
    if n == 0:
        return (), ()
    best_code = None
    best_pos = None
    automorphisms: list[list[int]] = []

    def leaf(colors):
        nonlocal best_code, best_pos
        code = tuple(sorted((colors[i], colors[j]) for i, j in p.edges))
        if best_code is None or code < best_code:
            best_code, best_pos = code, colors
        elif code == best_code:
            inv = [0] * n
            for v, c in enumerate(best_pos):
                inv[c] = v
            automorphisms.append([inv[colors[v]] for v in range(n)])

    def search(colors, fixed):
        if len(set(colors)) == n:
            leaf(colors)
            return
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = min(c for c, vs in cells.items() if len(vs) > 1)
        tried = []
        twins = set()
        for v in cells[target]:
            sig = (succ[v], pred[v])
            if sig in twins:
                continue
            if tried:
                orbits = _Find(n)
                for g in automorphisms:
                    if all(g[f] == f for f in fixed):
                        for x in range(n):
                            orbits.union(x, g[x])
                if any(orbits.find(v) == orbits.find(u) for u in tried):
                    continue
            twins.add(sig)
            tried.append(v)
            split = [2 * c + (1 if (c == target and u != v) else 0) for u, c in enumerate(colors)]
            search(_refine(_rank(split), succ, pred), fixed + (v,))

    search(_initial_colors(p), ())
    return tuple(best_pos), best_code


def canonical_form(p: Poset) -> bytes:
    """Byte key equal for two posets exactly when they are isomorphic."""
    n = p.n
    _, code = canonical_labeling(p)
    rows = bytearray()
    width = (n + 7) // 8
    matrix = [0] * n
    for i, j in code:
        matrix[i] |= 1 << j
    for row in matrix:
        rows += row.to_bytes(width, "little")
    return n.to_bytes(4, "little") + bytes(rows)


def canonical_poset(p: Poset) -> Poset:
    pos, _ = canonical_labeling(p)
    return p.relabel(pos) if p.n else p
