import random
from fractions import Fraction

import pytest

from torusbv.laurent import LaurentPoly, NotInvertibleError, RankMismatchError


def L(rank, terms):
    return LaurentPoly(rank, terms)


def random_laurent(rng, rank, window=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(-window, window) for _ in range(rank))
        terms[exp] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return LaurentPoly(rank, terms)


def test_add_cancellation():
    p = L(1, {(1,): 1, (-1,): 1})
    q = L(1, {(-1,): -1})
    assert p + q == L(1, {(1,): 1})


def test_add_identity():
    p = L(1, {(2,): Fraction(3, 2)})
    assert p + LaurentPoly.zero(1) == p


def test_add_like_terms():
    assert L(1, {(2,): 2}) + L(1, {(2,): 3}) == L(1, {(2,): 5})


def test_mul_monomial_exponents():
    p = L(2, {(1, 0): 1})
    q = L(2, {(0, -2): 1})
    assert p * q == L(2, {(1, -2): 1})


def test_mul_inverse_powers():
    assert L(1, {(3,): 1}) * L(1, {(-3,): 1}) == LaurentPoly.one(1)


def test_mul_schoolbook():
    # (z + 1)(z - 1) = z^2 - 1
    p = L(1, {(1,): 1, (0,): 1})
    q = L(1, {(1,): 1, (0,): -1})
    assert p * q == L(1, {(2,): 1, (0,): -1})


def test_invert_monomial():
    p = L(2, {(1, 1): 2})
    inv = p.invert_monomial()
    assert inv == L(2, {(-1, -1): Fraction(1, 2)})
    assert p * inv == LaurentPoly.one(2)


def test_invert_unit():
    assert LaurentPoly.one(1).invert_monomial() == LaurentPoly.one(1)


def test_invert_non_monomial_rejected():
    with pytest.raises(NotInvertibleError):
        L(1, {(1,): 1, (0,): 1}).invert_monomial()


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        L(1, {(1,): 1}) + L(2, {(1, 0): 1})
    with pytest.raises(RankMismatchError):
        L(1, {(1,): 1}) * L(2, {(1, 0): 1})


def test_no_stored_zero_coefficients():
    p = L(1, {(1,): 1}) - L(1, {(1,): 1})
    assert p.terms == {}
    assert p.is_zero()


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_ring_axioms_randomized(rank):
    rng = random.Random(100 + rank)
    one = LaurentPoly.one(rank)
    for _ in range(40):
        p = random_laurent(rng, rank)
        q = random_laurent(rng, rank)
        r = random_laurent(rng, rank)
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert p * one == p


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_mul_support_additive(rank):
    rng = random.Random(200 + rank)
    for _ in range(30):
        p = random_laurent(rng, rank)
        q = random_laurent(rng, rank)
        sums = {
            tuple(a + b for a, b in zip(e1, e2))
            for e1 in p.terms
            for e2 in q.terms
        }
        assert set((p * q).terms) <= sums


def test_json_round_trip():
    p = L(2, {(1, -2): Fraction(3, 2), (0, 3): -1})
    assert LaurentPoly.from_json(2, p.to_json()) == p


def test_text_format():
    p = L(2, {(-2, 3): Fraction(3, 2)})
    assert str(p) == "3/2*z1^-2*z2^3"
    assert str(LaurentPoly.zero(1)) == "0"
    assert str(LaurentPoly.one(1)) == "1"
