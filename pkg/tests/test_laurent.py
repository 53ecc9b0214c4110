import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from colorsig.errors import ConfigurationError, DimensionError
from colorsig.laurent import (LaurentMatrix, LaurentPoly, augment, determinant, evaluate, is_in_U,
                              rank_over_fraction_field)
from colorsig.scalar import Angle, CyclotomicScalar, TorusPoint

from conftest import t


def polys(num_vars=2, max_terms=4, max_exp=3):
    term = st.tuples(st.tuples(*[st.integers(-max_exp, max_exp)] * num_vars),
                     st.integers(-5, 5))
    return st.lists(term, max_size=max_terms).map(lambda ts: LaurentPoly(num_vars, ts))


def test_monomial_distribution():
    t1 = t(1, 1)
    assert (t1 + 1) * t1 ** -1 == 1 + t1 ** -1


def test_annihilation():
    p = t(1) + 3 * t(2) ** 2
    assert (p * 0).is_zero()
    assert p * LaurentPoly(2) == LaurentPoly(2)


def test_term_cancellation():
    t1, t2 = t(1), t(2)
    assert (1 + t1 + t1 ** 2) - (1 + t2) == t1 + t1 ** 2 - t2


def test_mismatched_variables():
    with pytest.raises(DimensionError):
        t(1, 1) + t(1, 2)


def test_augment_examples():
    t1, t2 = t(1), t(2)
    x = t(1, 1)
    assert augment(1 + x + x ** 2) == 3
    assert augment(t1 + t1 ** 2 - t2) == 1
    assert augment(5 * x ** 2 - 6 * x + 5) == 4


def test_is_in_U_examples():
    x = t(1, 1)
    assert is_in_U(t(1) + t(1) ** 2 - t(2))
    assert not is_in_U(5 * x ** 2 - 6 * x + 5)
    assert not is_in_U(LaurentPoly(1))


def test_canonical_order_and_json_round_trip():
    p = LaurentPoly(2, [((0, 1), -1), ((2, 0), 1), ((1, 0), 1)])
    assert [e for e, _ in p.items()] == [(0, 1), (1, 0), (2, 0)]
    assert LaurentPoly.from_json(p.to_json()) == p
    assert repr(p) == "-t2 + t1 + t1^2"


@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * 1 == p
    assert p - p == LaurentPoly(2)


@given(polys(), polys())
@settings(max_examples=60, deadline=None)
def test_augment_is_ring_homomorphism(p, q):
    assert augment(p * q) == augment(p) * augment(q)
    assert augment(p + q) == augment(p) + augment(q)


def test_rank_examples():
    x = t(1, 1)
    assert rank_over_fraction_field(LaurentMatrix([[2 - x - x ** -1]])) == 1
    assert rank_over_fraction_field(LaurentMatrix([], num_vars=1)) == 0
    z = LaurentPoly(1)
    assert rank_over_fraction_field(LaurentMatrix([[x - 1, z], [x - 1, z]])) == 1


def _oracle_rank(M: LaurentMatrix, rng) -> int:
    """Rank after substituting random integers, by Fraction elimination."""
    rows = M.rows
    best = 0
    for _ in range(3):
        point = [Fraction(rng.choice([-1, 1]) * rng.randint(2, 60)) for _ in range(M.num_vars)]
        A = [[M[i, j](*point) for j in range(M.cols)] for i in range(rows)]
        rank = 0
        for c in range(M.cols):
            piv = next((i for i in range(rank, rows) if A[i][c]), None)
            if piv is None:
                continue
            A[rank], A[piv] = A[piv], A[rank]
            for i in range(rank + 1, rows):
                f = A[i][c] / A[rank][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
            rank += 1
        best = max(best, rank)
    return best


def _random_matrix(rng, n, m, mu, rank_cap=None):
    def rp():
        return LaurentPoly(mu, [(tuple(rng.randint(-2, 2) for _ in range(mu)), rng.randint(-3, 3))
                                for _ in range(rng.randint(0, 3))])
    rows = [[rp() for _ in range(m)] for _ in range(n)]
    if rank_cap is not None and n > rank_cap:
        # force dependencies: later rows are combinations of the first rank_cap rows
        for i in range(rank_cap, n):
            coeffs = [rp() for _ in range(rank_cap)]
            rows[i] = [sum((coeffs[k] * rows[k][j] for k in range(rank_cap)), LaurentPoly(mu))
                       for j in range(m)]
    return LaurentMatrix(rows, mu, cols=m)


def test_rank_against_evaluation_oracle(rng):
    for trial in range(40):
        mu = rng.randint(1, 3)
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        M = _random_matrix(rng, n, m, mu, rank_cap=rng.randint(1, 4))
        assert rank_over_fraction_field(M) == _oracle_rank(M, rng), trial


def test_rank_invariances(rng):
    for _ in range(15):
        M = _random_matrix(rng, 4, 4, 2, rank_cap=3)
        r = rank_over_fraction_field(M)
        perm_r = list(range(4))
        perm_c = list(range(4))
        rng.shuffle(perm_r)
        rng.shuffle(perm_c)
        P = LaurentMatrix([[M[i, j] for j in perm_c] for i in perm_r], 2, cols=4)
        assert rank_over_fraction_field(P) == r
        unit = LaurentPoly.monomial((rng.randint(-3, 3), rng.randint(-3, 3)), rng.choice([-1, 1]))
        rows = [[M[i, j] for j in range(4)] for i in range(4)]
        rows[0] = [unit * x for x in rows[0]]
        assert rank_over_fraction_field(LaurentMatrix(rows, 2, cols=4)) == r


def test_determinant_small():
    x = t(1, 1)
    M = LaurentMatrix([[x, 1 + 0 * x], [1 + 0 * x, x ** -1]])
    assert determinant(M) == LaurentPoly(1)
    N = LaurentMatrix([[1 - x, 2 + 0 * x], [3 + 0 * x, x]])
    assert determinant(N) == x - x ** 2 - 6


def test_evaluate_examples():
    t1, t2 = t(1), t(2)
    assert evaluate(t1 + t1 ** 2 - t2, TorusPoint.roots((1, 3), (1, 2))).is_zero()
    one = evaluate(LaurentPoly.constant(1, 2), TorusPoint.roots((2, 7), (1, 4)))
    assert one == CyclotomicScalar.from_int(1, 28)
    x = t(1, 1)
    w = TorusPoint((Angle(math.atan2(4, 3)),))
    assert abs(evaluate(5 * x ** 2 - 6 * x + 5, w)) < 1e-14


def test_evaluate_backend_mismatch():
    with pytest.raises(ConfigurationError):
        evaluate(t(1, 1), TorusPoint((Angle(1.0),)), backend="exact")
