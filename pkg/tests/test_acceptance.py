"""Acceptance gate: one test per criterion, each reported as PASS/FAIL in the terminal summary."""

import time

import numpy as np
import pytest

from conftest import random_posets
from maxchains.bounds import exact_bounds, lower_bound
from maxchains.certificate import CompressedPoset, compress, verify
from maxchains.cli import run
from maxchains.constructions import SumsDecomposition, sums_construction, trivial_construction
from maxchains.poset import parse_poset
from maxchains.profile import (
    ChainProfile,
    adjacency_matrix,
    matrix_power,
    max_chain,
    maximal_chains,
    profile_enumerate,
    profile_matrix,
)
from maxchains.search import minimal_poset, posets_of_size
from oracles import isomorphism_classes, mutations, true_accept

CLASS_COUNTS = [1, 2, 5, 16, 63, 318, 2045, 16999]


@pytest.mark.criterion(1, "trivial construction for {2,3,3,5,5} via the CLI")
def test_trivial_construction_cli(capsys):
    start = time.perf_counter()
    assert run(["construct", "trivial", "2,3,3,5,5"]) == 0
    p = parse_poset(capsys.readouterr().out)
    s = ChainProfile([2, 3, 3, 5, 5])
    assert p.n == 9 == s.m + s.n - 1
    assert profile_matrix(p) == s
    assert profile_enumerate(p) == s
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(2, "ordinal-sum construction 3 + sums({1,2,4}) meets the lower bound")
def test_sums_construction_meets_lower_bound():
    start = time.perf_counter()
    p = sums_construction(SumsDecomposition(3, (1, 2, 4)))
    s = ChainProfile(range(3, 11))
    assert p.n == 13
    assert profile_matrix(p) == s
    assert lower_bound(s) == 13 == s.m + 3
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(3, "all classes on 1..8 elements respect the lower bound")
def test_lower_bound_exhaustive():
    start = time.perf_counter()
    for n in range(1, 6):
        assert len(isomorphism_classes(n)) == CLASS_COUNTS[n - 1]
    violations = []
    for n, expected in enumerate(CLASS_COUNTS, start=1):
        level = posets_of_size(n)
        assert len(level) == expected
        for p in level:
            if p.n < lower_bound(profile_matrix(p)):
                violations.append(p)
    assert violations == []
    assert time.perf_counter() - start < 600


@pytest.mark.criterion(4, "C -> C minus a maximum chain is injective on the <=7 corpus")
def test_chain_trace_injective(corpus7):
    violations = 0
    for p, _ in corpus7:
        spine = set(max_chain(p))
        traces = [frozenset(c) - spine for c in maximal_chains(p)]
        violations += len(traces) - len(set(traces))
    assert violations == 0


@pytest.mark.criterion(5, "{1,4,5,6} needs 9 elements")
def test_sparse_profile_needs_nine():
    start = time.perf_counter()
    s = ChainProfile([1, 4, 5, 6])
    for n in range(1, 9):
        for p in posets_of_size(n):
            assert profile_matrix(p) != s, p
    witness = trivial_construction(s)
    assert witness.n == 9 and profile_matrix(witness) == s
    report = exact_bounds(s)
    assert (report.exact, report.rule) == (9, "sparse_condition")
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(6, "matrix and path-enumeration profiles agree, A^|P| = 0")
def test_method_equivalence(corpus7):
    instances = [p for p, _ in corpus7] + random_posets(1000, 10, seed=2024)
    mismatches = 0
    for p in instances:
        if profile_matrix(p) != profile_enumerate(p):
            mismatches += 1
        assert not np.any(matrix_power(adjacency_matrix(p), p.n))
    assert mismatches == 0


@pytest.mark.criterion(7, "certificate roundtrip and mutation battery on the <=7 corpus")
def test_certificate_roundtrip_and_mutations(corpus7):
    false_accepts = []
    for p, s in corpus7:
        cert = compress(p, max_chain(p))
        assert verify(cert, s, p.n), p
        for label, bad, s2, t2 in mutations(cert, s, p.n):
            if verify(bad, s2, t2) and not true_accept(bad, s2, t2):
                false_accepts.append((label, p, bad))
    assert false_accepts == []


@pytest.mark.criterion(8, "bare chain with m = 10^9 verifies in under a second")
def test_certificate_scaling():
    m = 10**9
    start = time.perf_counter()
    assert verify(CompressedPoset(m, (1, m), 0, ()), [m], m)
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(9, "search returns the true minimum for every profile realized on <=7 elements")
def test_search_optimal(corpus7):
    flat = {}
    for p, s in corpus7:
        key = tuple(s.members())
        flat.setdefault(key, p.n)
    wrong = []
    for key, size in flat.items():
        result = minimal_poset(key)
        if not result.exact or result.size != size or profile_matrix(result.witness) != ChainProfile(key):
            wrong.append((key, size, result.size))
    assert wrong == []
    assert minimal_poset([2, 2]).size == 3
    for m in range(1, 9):
        assert minimal_poset([m]).size == m
