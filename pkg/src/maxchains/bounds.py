"""Lower and upper bounds on the least poset size realizing a chain profile."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .constructions import as_shifted_sums
from .profile import as_profile

RULES = ("small_n", "shifted_sums", "sparse_condition", "none")


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    upper: int
    exact: int | None = None
    rule: str = "none"

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")
        if not self.lower <= self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if (self.exact is None) != (self.rule == "none"):
            raise ValueError("rule must be 'none' exactly when no exact value is known")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError("exact value outside the bounds")

    def __str__(self):
        parts = [f"lower={self.lower}", f"upper={self.upper}"]
        if self.exact is not None:
            parts.append(f"exact={self.exact}")
        parts.append(f"rule={self.rule}")
        return " ".join(parts)


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def lower_bound(s) -> int:
    """``m + ceil(log2 n)``: a poset with n maximal chains needs log2 n elements off a longest chain."""
    s = as_profile(s)
    return s.m + ceil_log2(s.n)


def upper_bound(s) -> int:
    s = as_profile(s)
    return s.m + s.n - 1


def _triple_ok(m, n, a, b, c):
    return (m - a) >= (m - b) + (m - c) + n - 3


def sparse_condition_all_triples(s) -> bool:
    s = as_profile(s)
    if any(mult > 1 for mult in s.values()):
        return False
    m, n = s.m, s.n
    return all(_triple_ok(m, n, a, b, c) for a, b, c in combinations(s.distinct(), 3))


def sparse_condition(s) -> bool:
    """Distinct members, and ``(m-a) >= (m-b) + (m-c) + n - 3`` for all ``a < b < c``.

    For fixed ``a`` the right side is largest when ``b`` and ``c`` are the two
    members just above ``a``, so only consecutive triples need checking.
    """
    s = as_profile(s)
    if any(mult > 1 for mult in s.values()):
        return False
    xs = s.distinct()
    m, n = s.m, s.n
    fast = all(_triple_ok(m, n, xs[i], xs[i + 1], xs[i + 2]) for i in range(len(xs) - 2))
    if len(xs) <= 64:
        assert fast == sparse_condition_all_triples(s), "consecutive-triple scan disagrees with full check"
    return fast


def exact_bounds(s) -> BoundsReport:
    s = as_profile(s)
    lo, hi = lower_bound(s), upper_bound(s)
    if s.n <= 3:
        return BoundsReport(lo, hi, lo, "small_n")
    if as_shifted_sums(s) is not None:
        return BoundsReport(lo, hi, lo, "shifted_sums")
    if sparse_condition(s):
        return BoundsReport(lo, hi, hi, "sparse_condition")
    return BoundsReport(lo, hi)
