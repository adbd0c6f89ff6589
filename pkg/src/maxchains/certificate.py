"""Compressed poset certificates and their polynomial-time verifier.

A certificate keeps a longest chain ``M`` only at the positions that touch
some element outside it (plus both ends); each run of dropped chain elements
becomes one implicit edge of weight equal to the number of cover steps it
replaces. Path-length generating polynomials over this small weighted graph
give the full chain profile, so verification cost depends on |S| and on the
bit length of ``m`` but not on ``m`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotMaximumChainError, ParseError
from .poset import Poset
from .polynomial import ONE, ZERO, LengthPolynomial
from .profile import ChainProfile, as_profile

CERT_HEADER = "cert v1"


@dataclass(frozen=True)
class CompressedPoset:
    """Vertices are ``("M", position)`` with 1-based chain positions, or ``("X", index)``."""

    m: int
    mprime_positions: tuple[int, ...]
    x_count: int
    light_edges: tuple[tuple[tuple[str, int], tuple[str, int]], ...] = field(default=())

    def vertices(self) -> list[tuple[str, int]]:
        return [("M", pos) for pos in self.mprime_positions] + [("X", i) for i in range(self.x_count)]

    def heavy_edges(self) -> list[tuple[tuple[str, int], tuple[str, int], int]]:
        """Implicit ``(u, v, weight)`` edges across runs of dropped chain elements."""
        pos = self.mprime_positions
        return [(("M", i), ("M", j), j - i) for i, j in zip(pos, pos[1:]) if j > i + 1]

    @property
    def size(self) -> int:
        """Cardinality of the poset this certificate describes."""
        return self.m + self.x_count


def size_of_profile(s) -> int:
    """Total binary digits of the members of ``s``, counting multiplicity."""
    s = as_profile(s)
    return sum(x.bit_length() * mult for x, mult in s.items())


def _is_maximum_chain(p: Poset, chain) -> bool:
    if not chain or len(set(chain)) != len(chain):
        return False
    if any(not 0 <= v < p.n for v in chain):
        return False
    if p.lower_covers(chain[0]) or p.upper_covers(chain[-1]):
        return False
    if any(b not in p.upper_covers(a) for a, b in zip(chain, chain[1:])):
        return False
    return len(chain) == p.height()


def compress(p: Poset, chain) -> CompressedPoset:
    """Certificate for ``p`` built around the maximum chain ``chain`` (bottom to top)."""
    chain = tuple(chain)
    if not _is_maximum_chain(p, chain):
        raise NotMaximumChainError(f"{chain} is not a maximal chain of maximum cardinality")
    m = len(chain)
    position = {v: k + 1 for k, v in enumerate(chain)}
    others = [v for v in range(p.n) if v not in position]
    x_index = {v: k for k, v in enumerate(others)}

    kept = {1, m}
    for i, j in p.edges:
        if i in position and j in x_index:
            kept.add(position[i])
        elif j in position and i in x_index:
            kept.add(position[j])

    def token(v):
        return ("M", position[v]) if v in position else ("X", x_index[v])

    light = []
    for i, j in p.edges:
        if (i in position and position[i] not in kept) or (j in position and position[j] not in kept):
            continue
        light.append((token(i), token(j)))
    return CompressedPoset(m, tuple(sorted(kept)), len(others), tuple(sorted(light)))


def _structure_problem(cert: CompressedPoset, n_claimed: int) -> str | None:
    """First structural defect of ``cert``, or None."""
    m, pos = cert.m, cert.mprime_positions
    if not isinstance(m, int) or m < 1:
        return "chain cardinality m must be a positive integer"
    if not pos or pos[0] != 1 or pos[-1] != m:
        return "retained positions must start at 1 and end at m"
    if any(b <= a for a, b in zip(pos, pos[1:])):
        return "retained positions must be strictly increasing"
    if cert.x_count < 0:
        return "negative count of extra elements"
    vertices = set(cert.vertices())
    seen = set()
    touched = set()
    for u, v in cert.light_edges:
        if u not in vertices or v not in vertices:
            return f"edge {u}->{v} names a vertex outside the certificate"
        if u == v:
            return f"self-loop at {u}"
        if (u, v) in seen:
            return f"duplicate edge {u}->{v}"
        seen.add((u, v))
        if u[0] == "M" and v[0] == "M":
            k = pos.index(u[1])
            if k + 1 >= len(pos) or pos[k + 1] != v[1] or v[1] != u[1] + 1:
                return f"light edge {u}->{v} does not join adjacent chain positions"
        else:
            touched.update(x for x in (u, v) if x[0] == "M")
    for a, b in zip(pos, pos[1:]):
        if b == a + 1 and (("M", a), ("M", b)) not in seen:
            return f"missing chain edge M{a}->M{b}"
    for a in pos[1:-1]:
        if ("M", a) not in touched:
            return f"retained position {a} touches no extra element"
    if len(vertices) > 3 * n_claimed - 1:
        return f"{len(vertices)} vertices exceed 3n-1 = {3 * n_claimed - 1}"
    return None


def _weighted_graph(cert: CompressedPoset):
    verts = cert.vertices()
    index = {v: k for k, v in enumerate(verts)}
    out: list[list[tuple[int, int]]] = [[] for _ in verts]
    for u, v in cert.light_edges:
        out[index[u]].append((index[v], 1))
    for u, v, w in cert.heavy_edges():
        out[index[u]].append((index[v], w))
    return verts, out


def _graph_problem(cert: CompressedPoset, out) -> str | None:
    n = len(out)
    indeg = [0] * n
    for edges in out:
        for v, _ in edges:
            indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    topo = []
    while ready:
        v = ready.pop()
        topo.append(v)
        for w, _ in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(topo) != n:
        return "graph has a directed cycle"
    reach = [0] * n
    for v in reversed(topo):
        for w, _ in out[v]:
            reach[v] |= (1 << w) | reach[w]
    for u in range(n):
        for v, weight in out[u]:
            if weight != 1:
                continue
            if any(w != v and (reach[w] >> v) & 1 for w, _ in out[u]):
                return f"light edge {u}->{v} has an alternate path"
    return None


def weighted_adjacency(cert: CompressedPoset) -> list[list[LengthPolynomial]]:
    """Matrix with the monomial ``x**w`` at ``(i, j)`` for an edge of weight ``w``."""
    verts, out = _weighted_graph(cert)
    a = [[ZERO] * len(verts) for _ in verts]
    for u, edges in enumerate(out):
        for v, w in edges:
            a[u][v] = LengthPolynomial.monomial(w)
    return a


def length_polynomial(cert: CompressedPoset, cap: int | None = None) -> LengthPolynomial | None:
    """Sum of ``A**k`` entries over (source, sink) pairs for k = 0 .. V-1.

    Only the source rows of the powers are needed, so their sum is carried
    as one row vector. Returns None when a coefficient exceeds ``cap``.
    Assumes the certificate's graph is acyclic.
    """
    verts, out = _weighted_graph(cert)
    n = len(verts)
    has_in = [False] * n
    for edges in out:
        for v, _ in edges:
            has_in[v] = True
    sinks = [v for v in range(n) if not out[v]]
    row = [ONE if not has_in[v] else ZERO for v in range(n)]
    total = ZERO
    for _ in range(n):
        for v in sinks:
            if row[v]:
                total = total + row[v]
        if cap is not None and total.max_coefficient() > cap:
            return None
        nxt = [ZERO] * n
        for u in range(n):
            if not row[u]:
                continue
            for v, w in out[u]:
                nxt[v] = nxt[v] + row[u] * LengthPolynomial.monomial(w)
        if cap is not None and any(p.max_coefficient() > cap for p in nxt):
            return None
        row = nxt
        if not any(row):
            break
    return total


def check(cert: CompressedPoset, s, t: int) -> tuple[bool, str]:
    """Verify ``cert`` against profile ``s`` and size claim ``t``; returns ``(ok, reason)``."""
    try:
        s = as_profile(s)
    except ValueError as exc:
        return False, f"invalid profile: {exc}"
    problem = _structure_problem(cert, s.n)
    if problem:
        return False, problem
    if cert.size > t:
        return False, f"certificate describes {cert.size} elements, more than {t}"
    _, out = _weighted_graph(cert)
    problem = _graph_problem(cert, out)
    if problem:
        return False, problem
    poly = length_polynomial(cert, cap=s.n)
    if poly is None:
        return False, f"more than {s.n} chains of some length"
    found = ChainProfile(poly.cardinalities())
    if found != s:
        return False, f"certificate profile {found} differs from claimed {s}"
    return True, "ok"


def verify(cert: CompressedPoset, s, t: int) -> bool:
    return check(cert, s, t)[0]


# -- text format -------------------------------------------------------------


def _vertex_token(v) -> str:
    return f"{v[0]}{v[1]}"


def format_certificate(cert: CompressedPoset) -> str:
    lines = [
        CERT_HEADER,
        f"m {cert.m}",
        "mprime " + " ".join(str(p) for p in cert.mprime_positions),
        f"x {cert.x_count}",
    ]
    lines.extend(f"edge {_vertex_token(u)} {_vertex_token(v)}" for u, v in cert.light_edges)
    return "\n".join(lines) + "\n"


def _parse_int(token, lineno):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected integer, got {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"expected nonnegative integer, got {token!r}", lineno)
    return value


def _parse_vertex(token, lineno):
    kind = token[:1]
    if kind not in ("M", "X") or not token[1:].isdigit():
        raise ParseError(f"bad vertex token {token!r} (want M<pos> or X<idx>)", lineno)
    return (kind, int(token[1:]))


def parse_certificate(text: str) -> CompressedPoset:
    lines = [(k, raw.split("#", 1)[0].strip()) for k, raw in enumerate(text.splitlines(), 1)]
    lines = [(k, line) for k, line in lines if line]
    expect = ["header", "m", "mprime", "x"]
    m = positions = x_count = None
    edges = []
    for lineno, line in lines:
        words = line.split()
        if expect:
            step = expect.pop(0)
            if step == "header":
                if line != CERT_HEADER:
                    raise ParseError(f"expected {CERT_HEADER!r} header", lineno)
            elif words[0] != step:
                raise ParseError(f"expected '{step}' line, got {line!r}", lineno)
            elif step == "m":
                if len(words) != 2:
                    raise ParseError("expected 'm <m>'", lineno)
                m = _parse_int(words[1], lineno)
            elif step == "mprime":
                if len(words) < 2:
                    raise ParseError("expected at least one retained position", lineno)
                positions = tuple(_parse_int(w, lineno) for w in words[1:])
            else:
                if len(words) != 2:
                    raise ParseError("expected 'x <count>'", lineno)
                x_count = _parse_int(words[1], lineno)
            continue
        if words[0] != "edge" or len(words) != 3:
            raise ParseError(f"expected 'edge <u> <v>', got {line!r}", lineno)
        edges.append((_parse_vertex(words[1], lineno), _parse_vertex(words[2], lineno)))
    if expect:
        raise ParseError(f"certificate ended before the '{expect[0]}' line", len(text.splitlines()))
    return CompressedPoset(m, positions, x_count, tuple(edges))
