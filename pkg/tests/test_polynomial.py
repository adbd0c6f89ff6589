from maxchains.polynomial import ONE, ZERO, LengthPolynomial, poly_matmul


def test_zero_terms_dropped():
    assert LengthPolynomial({3: 0, 5: 2}).terms == {5: 2}
    assert not LengthPolynomial({1: 0})


def test_arithmetic():
    a = LengthPolynomial({0: 1, 2: 3})
    b = LengthPolynomial({1: 2})
    assert a + b == LengthPolynomial({0: 1, 1: 2, 2: 3})
    assert a * b == LengthPolynomial({1: 2, 3: 6})
    assert a * ONE == a
    assert a * ZERO == ZERO


def test_huge_exponents():
    big = LengthPolynomial.monomial(10**18)
    assert (big * big).terms == {2 * 10**18: 1}
    assert (big * big).degree() == 2 * 10**18


def test_cardinalities():
    assert LengthPolynomial({0: 1, 4: 2}).cardinalities() == {1: 1, 5: 2}


def test_matmul_counts_weighted_paths():
    x = LengthPolynomial.monomial
    # 0 -> 1 (w=2), 1 -> 2 (w=3), 0 -> 2 (w=7)
    a = [[ZERO, x(2), x(7)], [ZERO, ZERO, x(3)], [ZERO, ZERO, ZERO]]
    a2 = poly_matmul(a, a)
    assert a2[0][2] == x(5)
    assert not a2[0][1]
