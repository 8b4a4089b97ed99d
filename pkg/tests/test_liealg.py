from fractions import Fraction

import numpy as np
import pytest

from adehall.liealg import (
    free_dim,
    pbw_dim,
    positive_part_dim,
    positive_roots,
    serre_element,
    serre_slice_rank,
    two_sided_closure_check,
    words_of_content,
)

A2 = np.array([[2, -1], [-1, 2]])
A3 = np.array([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
D4 = np.array([[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]])


def test_serre_element_commutator():
    # a_ij = 0: e_1 e_0 - e_0 e_1 up to overall sign convention
    el = serre_element(0, 1, 0)
    assert el == {(1, 0): Fraction(1), (0, 1): Fraction(-1)}


def test_serre_element_adjacent():
    el = serre_element(0, 1, -1)
    assert el == {
        (0, 0, 1): Fraction(1, 2),
        (0, 1, 0): Fraction(-1),
        (1, 0, 0): Fraction(1, 2),
    }


def test_serre_element_degree():
    for a_ij in (0, -1, -2):
        el = serre_element(0, 1, a_ij)
        for word in el:
            assert word.count(0) == 1 - a_ij and word.count(1) == 1


def test_free_dims_are_multinomial():
    assert free_dim((2, 1)) == 3
    assert free_dim((1, 1, 1)) == 6
    assert len(words_of_content((2, 2))) == free_dim((2, 2)) == 6


def test_positive_roots_counts():
    assert len(positive_roots(A2)) == 3
    assert len(positive_roots(A3)) == 6
    assert len(positive_roots(D4)) == 12
    e6 = np.array(
        [
            [2, 0, -1, 0, 0, 0],
            [0, 2, 0, -1, 0, 0],
            [-1, 0, 2, -1, 0, 0],
            [0, -1, -1, 2, -1, 0],
            [0, 0, 0, -1, 2, -1],
            [0, 0, 0, 0, -1, 2],
        ]
    )
    assert len(positive_roots(e6)) == 36


def test_reflection_closure_rejects_affine():
    affine_a2 = np.array([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    with pytest.raises(ValueError):
        positive_roots(affine_a2)


@pytest.mark.parametrize(
    "alpha,want",
    [((1, 1), 2), ((2, 1), 2), ((2, 2), 3), ((3, 1), 2), ((4, 0), 1), ((3, 2), 3), ((2, 0), 1)],
)
def test_pbw_dims_a2(alpha, want):
    roots = positive_roots(A2)
    assert pbw_dim(roots, alpha) == want


def test_pbw_dim_3_1_has_two_multisets():
    # {a1, a1, a1+a2} and {a1, a1, a1, a2}: enumerate explicitly
    roots = positive_roots(A2)
    found = []

    def rec(idx, remaining, chosen):
        if not any(remaining):
            found.append(tuple(chosen))
            return
        if idx == len(roots):
            return
        root = roots[idx]
        k = 0
        rem = remaining
        while all(v >= 0 for v in rem):
            rec(idx + 1, rem, chosen + [root] * k)
            rem = tuple(r - x for r, x in zip(rem, root))
            k += 1

    rec(0, (3, 1), [])
    assert len(found) == 2


def test_serre_slice_ranks_a2():
    assert serre_slice_rank(A2, (1, 1)) == 0
    assert serre_slice_rank(A2, (2, 1)) == 1
    assert positive_part_dim(A2, (1, 1)) == 2
    assert positive_part_dim(A2, (2, 1)) == 2


@pytest.mark.parametrize("rank,cartan", [(2, A2), (3, A3)])
def test_positive_part_matches_pbw(rank, cartan):
    roots = positive_roots(cartan)
    for alpha in _degrees(rank, 4):
        assert positive_part_dim(cartan, alpha) == pbw_dim(roots, alpha), alpha


def test_automorphism_symmetry():
    # the A2 diagram flip: dimensions are symmetric in the two coordinates
    for alpha in _degrees(2, 4):
        flipped = alpha[::-1]
        assert positive_part_dim(A2, alpha) == positive_part_dim(A2, flipped)


def test_two_sided_closure():
    for alpha in [(2, 2), (3, 1), (2, 1)]:
        assert two_sided_closure_check(A2, alpha)


def test_generator_relabeling_invariance():
    # total dimension over a degree shell does not depend on which vertex is
    # called 0 and which is called 1
    total_a = sum(positive_part_dim(A2, a) for a in _degrees(2, 4))
    relabeled = A2[::-1, ::-1]
    total_b = sum(positive_part_dim(relabeled, a) for a in _degrees(2, 4))
    assert total_a == total_b


def _degrees(rank, cap):
    out = []

    def rec(prefix, rest):
        if len(prefix) == rank:
            if any(prefix):
                out.append(tuple(prefix))
            return
        for a in range(rest + 1):
            rec(prefix + [a], rest - a)

    rec([], cap)
    return out
