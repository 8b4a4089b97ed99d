import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adehall.linalg import (
    FpMatrix,
    LinalgError,
    PrimeFieldContext,
    enumerate_subspaces,
    gaussian_binomial,
    interpolate_counts,
    nullspace,
    rational_rank,
    rref,
)


def brute_line_count(n, p):
    # independent oracle: count distinct lines through 0 in F_p^n
    seen = set()
    for vec in itertools.product(range(p), repeat=n):
        if not any(vec):
            continue
        line = frozenset(tuple(c * v % p for v in vec) for c in range(1, p))
        seen.add(line)
    return len(seen)


def test_context_rejects_bad_moduli():
    with pytest.raises(LinalgError):
        PrimeFieldContext(6)
    with pytest.raises(LinalgError):
        PrimeFieldContext(1 << 17)


def test_roots_of_order():
    ctx = PrimeFieldContext(13)
    for n in (2, 3, 4, 6, 12):
        r = ctx.root_of_order(n)
        assert pow(r, n, 13) == 1
        for d in range(1, n):
            assert pow(r, d, 13) != 1
    with pytest.raises(LinalgError):
        ctx.root_of_order(5)


def test_sqrt_is_smallest():
    ctx = PrimeFieldContext(13)
    s = ctx.sqrt_of(12)  # sqrt(-1)
    assert s * s % 13 == 12
    assert all(t * t % 13 != 12 for t in range(s))


def test_rref_identity_and_zero():
    eye = FpMatrix.identity(3, 5)
    r, rank, piv = eye.rref()
    assert r == eye and rank == 3 and piv == (0, 1, 2)
    z = FpMatrix.zeros(2, 4, 5)
    r, rank, piv = z.rref()
    assert r == z and rank == 0 and piv == ()


def test_rref_hand_example():
    # hand row-reduction over F_5: (2,4) ~ (1,2); (1,2) - (1,2) = 0
    m = FpMatrix([[2, 4], [1, 2]], 5)
    r, rank, piv = m.rref()
    assert r.array.tolist() == [[1, 2], [0, 0]]
    assert rank == 1 and piv == (0,)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(2, 4), st.data())
def test_rref_idempotent_and_rank_transpose(rows, cols, data):
    p = data.draw(st.sampled_from([2, 3, 5, 7]))
    entries = data.draw(
        st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols)
    )
    m = FpMatrix(np.array(entries).reshape(rows, cols), p)
    r1, rank, _ = m.rref()
    r2, rank2, _ = r1.rref()
    assert r1 == r2 and rank == rank2
    assert rank == m.transpose().rank()


def test_nullspace_annihilates():
    m = np.array([[1, 2, 3], [2, 4, 6]])
    ker = nullspace(m, 7)
    assert ker.shape[0] == 2
    assert not (m @ ker.T % 7).any()


def test_subspace_counts_against_brute_oracle():
    ctx = PrimeFieldContext(3)
    assert len(list(enumerate_subspaces(2, 1, ctx))) == 4 == brute_line_count(2, 3)
    assert len(list(enumerate_subspaces(2, 1, PrimeFieldContext(2)))) == 3 == brute_line_count(2, 2)
    assert len(list(enumerate_subspaces(4, 0, ctx))) == 1


@pytest.mark.parametrize("n,k,q", [(n, k, q) for n in range(1, 5) for k in range(n + 1) for q in (2, 3, 5)])
def test_subspace_stream_is_canonical(n, k, q):
    ctx = PrimeFieldContext(q)
    seen = set()
    count = 0
    for m in enumerate_subspaces(n, k, ctx):
        r, rank, _ = m.rref()
        assert r == m and rank == k  # already in RREF
        key = m.key()
        assert key not in seen
        seen.add(key)
        count += 1
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert count == num // den == gaussian_binomial(n, k, q)


def test_interpolation_examples():
    poly = interpolate_counts([(2, 3), (3, 4), (5, 6)])
    assert [int(c) for c in poly.coefficients] == [1, 1]
    assert poly.value_at_one() == 2
    const = interpolate_counts([(2, 1), (3, 1), (5, 1)])
    assert [int(c) for c in const.coefficients] == [1]
    # plane count in F_q^3: the Gaussian binomial [3 choose 2]_q = q^2 + q + 1
    assert all(gaussian_binomial(3, 2, q) == q * q + q + 1 for q in (2, 3, 5, 7))
    planes = interpolate_counts([(2, 7), (3, 13), (5, 31)])
    assert [int(c) for c in planes.coefficients] == [1, 1, 1]
    assert planes.value_at_one() == 3


def test_interpolation_errors():
    with pytest.raises(LinalgError):
        interpolate_counts([(2, 3)])
    with pytest.raises(LinalgError):
        interpolate_counts([(2, 3), (2, 5), (3, 4)])
    with pytest.raises(LinalgError):
        interpolate_counts([(2, -1), (3, 1), (5, 1)])


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_interpolation_roundtrip(coeffs):
    # sampling any integer polynomial at enough primes recovers it exactly
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    primes = [2, 3, 5, 7, 11][: max(len(coeffs), 2)]

    def ev(x):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    if any(ev(q) < 0 for q in primes):
        return  # counts must be nonnegative
    poly = interpolate_counts([(q, ev(q)) for q in primes])
    assert [int(c) for c in poly.coefficients] == coeffs
    assert poly.value_at_one() == ev(1)


def test_rational_rank():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)], [Fraction(0), Fraction(1)]]
    assert rational_rank(rows) == 2
    assert rational_rank([[Fraction(0), Fraction(0)]]) == 0
