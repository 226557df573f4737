import random
from fractions import Fraction

import pytest

from specmax.intpoly import (
    IntPolynomial,
    RootBracket,
    char_poly,
    compare_max_real_roots,
    count_roots,
    max_real_root,
    max_real_root_value,
    poly_dominates,
    shifted_root_bound,
)


def bareiss_det(matrix):
    """Fraction-free Gaussian elimination determinant (independent oracle)."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


class TestCharPoly:
    def test_identity_2x2(self):
        assert char_poly([[1, 0], [0, 1]]).coeffs == (1, -2, 1)

    def test_printed_cubic(self):
        # three-cell quotient at order 7 with low degree 4
        m = [[0, 4, 0], [1, 2, 2], [0, 4, 1]]
        assert char_poly(m).coeffs == (4, -10, -3, 1)

    def test_printed_quartic(self):
        m = [[0, 1, 0, 0], [1, 0, 0, 4], [0, 0, 1, 4], [0, 1, 2, 2]]
        assert char_poly(m).coeffs == (6, 7, -11, -3, 1)

    def test_against_bareiss_determinant(self):
        rng = random.Random(41)
        for _ in range(40):
            n = rng.randint(1, 6)
            m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
            p = char_poly(m)
            for lam in (0, 1, -1, 2, -2):
                shifted = [
                    [lam * (i == j) - m[i][j] for j in range(n)] for i in range(n)
                ]
                assert p(lam) == bareiss_det(shifted)

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            char_poly([[1, 2]])

    def test_fractional_entry_rejected(self):
        with pytest.raises(ValueError):
            char_poly([[Fraction(1, 2)]])


class TestCounting:
    def test_quadratic(self):
        p = IntPolynomial((-4, 0, 1))
        assert count_roots(p, None, None) == 2
        assert count_roots(p, 0, None) == 1
        assert count_roots(p, 2, None) == 0
        assert count_roots(p, 1, 2) == 1  # root exactly at hi
        assert count_roots(p, -2, 2) == 1  # root at lo excluded

    def test_repeated_roots_counted_once(self):
        p = IntPolynomial((1, -2, 1))  # (x-1)^2
        assert count_roots(p, 0, 2) == 1

    def test_no_real_roots(self):
        assert count_roots(IntPolynomial((1, 0, 1)), None, None) == 0


class TestMaxRealRoot:
    def test_simple(self):
        p = IntPolynomial((-4, 0, 1))
        assert max_real_root(p, RootBracket(1, 3)) == pytest.approx(2, abs=1e-12)

    def test_exact_rational_hit(self):
        p = IntPolynomial((-4, 0, 1))
        assert max_real_root(p, RootBracket(0, 2)) == 2.0

    def test_cubic_family_value(self):
        # order-5 family quotient: lambda^3 - lambda^2 - 6 lambda + 2
        p = IntPolynomial((2, -6, -1, 1))
        r = max_real_root(p, RootBracket(Fraction(5, 2), 3))
        assert r == pytest.approx(2.85577, abs=1e-4)

    def test_order60_quartic(self):
        p = IntPolynomial((58, 111, -115, -55, 1))
        r = max_real_root(p, RootBracket(56, 57))
        assert 56.9 < r < 57.0

    def test_invalid_bracket_rejected(self):
        p = IntPolynomial((58, 111, -115, -55, 1))
        with pytest.raises(ValueError):
            max_real_root(p, RootBracket(57, Fraction(571, 10)))

    def test_auto_isolation_matches(self):
        p = IntPolynomial((2, -6, -1, 1))
        assert max_real_root_value(p) == pytest.approx(
            max_real_root(p, RootBracket(Fraction(5, 2), 3)), abs=1e-11
        )

    def test_even_multiplicity_max_root(self):
        p = IntPolynomial((1, -2, 1))  # (x-1)^2, no sign change at the root
        assert max_real_root(p, RootBracket(0, 2)) == pytest.approx(1, abs=1e-10)


class TestPolyDominates:
    def test_constant_gap(self):
        assert poly_dominates(IntPolynomial((-2, 1)), IntPolynomial((-1, 1)), 0)

    def test_quartic_pair_order10(self):
        f1 = IntPolynomial((8, 11, -15, -5, 1))
        f2 = IntPolynomial((18, 13, -15, -5, 1))
        assert poly_dominates(f1, f2, 0)
        assert not poly_dominates(f2, f1, 0)

    def test_family_cubics_order9(self):
        # even low degrees at odd order 9: delta = 6 dominates smaller ones
        def f(d, n=9):
            return IntPolynomial((-(d * d + 2 * d - n * d), 4 - 2 * n, 4 - n, 1))

        assert poly_dominates(f(6), f(2), 0)
        assert compare_max_real_roots(f(6), f(2)) == 1

    def test_touching_counts_as_domination(self):
        zero = IntPolynomial((0,))
        square = IntPolynomial((1, -2, 1))
        assert poly_dominates(zero, square, 0)
        assert not poly_dominates(zero, IntPolynomial((-1, 2, -1)), 0)

    def test_identical(self):
        p = IntPolynomial((1, 2, 3))
        assert poly_dominates(p, p, 0)


class TestShiftedRootBound:
    def test_zero_shift_identity(self):
        p = IntPolynomial((-1, 1))
        assert shifted_root_bound(p, p, 0, 0, 5)

    def test_order59_shift(self):
        def b(d, n=59):
            return IntPolynomial((-d * d + (n - 3) * d, 9 - 3 * n, 6 - n, 1))

        n = 59
        assert shifted_root_bound(
            b(54), b(3), Fraction(1, n * n), n - 4, Fraction(n - 3) + Fraction(1, n * n)
        )

    def test_too_large_shift_fails(self):
        def b(d, n=59):
            return IntPolynomial((-d * d + (n - 3) * d, 9 - 3 * n, 6 - n, 1))

        assert not shifted_root_bound(b(54), b(3), 1, 55, 57)

    def test_negative_shift_rejected(self):
        p = IntPolynomial((-1, 1))
        with pytest.raises(ValueError):
            shifted_root_bound(p, p, -1, 0, 1)


class TestCompareMaxRealRoots:
    def test_shared_root_different_polys(self):
        pa = IntPolynomial((-10, 3, 1))  # (x-2)(x+5)
        pb = IntPolynomial((-14, 5, 1))  # (x-2)(x+7)
        assert compare_max_real_roots(pa, pb) == 0

    def test_strict_order(self):
        assert compare_max_real_roots(IntPolynomial((-4, 0, 1)), IntPolynomial((-9, 0, 1))) == -1
        assert compare_max_real_roots(IntPolynomial((-9, 0, 1)), IntPolynomial((-4, 0, 1))) == 1

    def test_close_roots_separate(self):
        # roots at 1000001/1000000 vs 1
        pa = IntPolynomial((-1000001, 1000000))
        pb = IntPolynomial((-1, 1))
        assert compare_max_real_roots(pa, pb) == 1

    def test_tied_family_pair_order8(self):
        def f(d, n=8):
            return IntPolynomial((-(d * d + 2 * d - n * d), 4 - 2 * n, 4 - n, 1))

        assert f(2) == f(4)
        assert compare_max_real_roots(f(2), f(4)) == 0
