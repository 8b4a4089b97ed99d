"""Graded dimensions of the Serre-presented positive part: free-algebra
pieces modulo the two-sided ideal slice spanned by monomial multiples of the
Serre elements, plus a PBW multiset count over positive roots for finite
type.  Rational arithmetic throughout; divided powers bring denominators."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .linalg import rational_rank


def words_of_content(alpha, vertices=None):
    """All words in the vertex letters with letter counts alpha."""
    alpha = tuple(int(a) for a in alpha)
    if vertices is None:
        vertices = range(len(alpha))
    letters = []
    for v in vertices:
        letters.extend([v] * alpha[v])
    return _perms(tuple(letters))


def _perms(letters):
    if not letters:
        return [()]
    out = []
    used = set()
    for i, head in enumerate(letters):
        if head in used:
            continue
        used.add(head)
        for tail in _perms(letters[:i] + letters[i + 1 :]):
            out.append((head,) + tail)
    return out


def free_dim(alpha) -> int:
    """Multinomial count of words in the degree-alpha piece of the free algebra."""
    total = sum(alpha)
    out = math.factorial(total)
    for a in alpha:
        out //= math.factorial(a)
    return out


def serre_element(i: int, j: int, a_ij: int) -> dict:
    """sum_k (-1)^k e_i^(k) e_j e_i^(1 - a_ij - k) as a word-to-coefficient
    map, with divided powers e_i^(k) = e_i^k / k!."""
    if i == j:
        raise ValueError("Serre elements need distinct vertices")
    n = 1 - a_ij
    out = {}
    for k in range(n + 1):
        word = (i,) * k + (j,) + (i,) * (n - k)
        coeff = Fraction((-1) ** k, math.factorial(k) * math.factorial(n - k))
        out[word] = out.get(word, Fraction(0)) + coeff
    return out


def _degree_of_word(word, rank):
    alpha = [0] * rank
    for v in word:
        alpha[v] += 1
    return tuple(alpha)


def serre_ideal_slice(cartan: np.ndarray, alpha) -> list[dict]:
    """Spanning set of the degree-alpha piece of the two-sided Serre ideal:
    every u * s_ij * v with matching total content."""
    alpha = tuple(int(a) for a in alpha)
    rank = len(alpha)
    spanning = []
    for i in range(rank):
        for j in range(rank):
            if i == j:
                continue
            a_ij = int(cartan[i, j])
            n = 1 - a_ij
            s_deg = [0] * rank
            s_deg[i] += n
            s_deg[j] += 1
            rest = [a - d for a, d in zip(alpha, s_deg)]
            if any(r < 0 for r in rest):
                continue
            s = serre_element(i, j, a_ij)
            for left_part in _subdegrees(rest):
                right_part = tuple(r - l for r, l in zip(rest, left_part))
                for u in words_of_content(left_part):
                    for v in words_of_content(right_part):
                        el = {}
                        for w, c in s.items():
                            el[u + w + v] = el.get(u + w + v, Fraction(0)) + c
                        spanning.append(el)
    return spanning


def _subdegrees(alpha):
    ranges = [range(a + 1) for a in alpha]
    return [tuple(t) for t in itertools.product(*ranges)]


def serre_slice_rank(cartan, alpha) -> int:
    alpha = tuple(int(a) for a in alpha)
    words = words_of_content(alpha)
    index = {w: t for t, w in enumerate(words)}
    rows = []
    for el in serre_ideal_slice(cartan, alpha):
        row = [Fraction(0)] * len(words)
        for w, c in el.items():
            row[index[w]] = c
        rows.append(row)
    if not rows:
        return 0
    return rational_rank(rows)


def positive_part_dim(cartan, alpha) -> int:
    """dim of the degree-alpha piece of the positive part: free words minus
    the rank of the Serre ideal slice."""
    return free_dim(alpha) - serre_slice_rank(cartan, alpha)


def positive_roots(cartan: np.ndarray) -> tuple[tuple[int, ...], ...]:
    """Reflection closure of the simple roots within the positive cone;
    the full positive root list for a finite-type Cartan matrix."""
    rank = cartan.shape[0]
    simple = [tuple(1 if t == v else 0 for t in range(rank)) for v in range(rank)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(rank):
            pairing = sum(int(cartan[i, t]) * beta[t] for t in range(rank))
            new = list(beta)
            new[i] -= pairing
            new = tuple(new)
            if all(x >= 0 for x in new) and any(new) and new not in roots:
                roots.add(new)
                frontier.append(new)
        if len(roots) > 10_000:
            raise ValueError("reflection closure does not terminate; affine input?")
    return tuple(sorted(roots))


def pbw_dim(roots, alpha) -> int:
    """Number of multisets of positive roots summing to alpha."""
    alpha = tuple(int(a) for a in alpha)
    roots = tuple(roots)

    @lru_cache(maxsize=None)
    def count(idx, remaining):
        if not any(remaining):
            return 1
        if idx == len(roots):
            return 0
        total = 0
        root = roots[idx]
        k = 0
        rem = remaining
        while True:
            total += count(idx + 1, rem)
            nxt = tuple(r - x for r, x in zip(rem, root))
            if any(v < 0 for v in nxt):
                break
            rem = nxt
            k += 1
        return total

    return count(0, alpha)


def two_sided_closure_check(cartan, alpha) -> bool:
    """The slice is genuinely two-sided: multiplying the degree-(alpha - e_m)
    slice by e_m on either side lands inside the degree-alpha slice."""
    alpha = tuple(int(a) for a in alpha)
    rank = len(alpha)
    words = words_of_content(alpha)
    index = {w: t for t, w in enumerate(words)}
    target_rows = []
    for el in serre_ideal_slice(cartan, alpha):
        row = [Fraction(0)] * len(words)
        for w, c in el.items():
            row[index[w]] = c
        target_rows.append(row)
    base_rank = rational_rank(target_rows) if target_rows else 0
    for m in range(rank):
        lower = list(alpha)
        lower[m] -= 1
        if lower[m] < 0:
            continue
        for el in serre_ideal_slice(cartan, tuple(lower)):
            for side in ("left", "right"):
                row = [Fraction(0)] * len(words)
                for w, c in el.items():
                    key = ((m,) + w) if side == "left" else (w + (m,))
                    row[index[key]] = c
                stacked = target_rows + [row]
                if rational_rank(stacked) != base_rank:
                    return False
    return True
