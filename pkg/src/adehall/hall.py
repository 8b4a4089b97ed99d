"""The Hall algebra of double representations on finitely supported
functions: structure constants as Euler characteristics of subobject
varieties, obtained by counting over several primes, interpolating, and
evaluating the count polynomial at 1.

Classes are matched across fields by their stable invariant profiles; a
profile collision within one graded piece makes the matching ambiguous and
aborts.  Every counting polynomial must predict a held-out prime exactly
before its value at 1 is trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import SimplyLacedGraph
from .linalg import RationalPolynomial, interpolate_counts, rational_rank
from .quiver import ENUMERATION_BUDGET, MatchingError, PieceTable, subobject_census

DEFAULT_PRIMES = (2, 3, 5)
DEFAULT_HELD_OUT = 7
ESCALATION_PRIMES = (2, 3, 5, 7, 11)
ESCALATION_HELD_OUT = 13


@dataclass(frozen=True)
class EulerConstantRecord:
    """One structure constant: the counting polynomial of a subobject
    variety, its held-out verification, and its value at 1."""

    triple: tuple
    primes: tuple[int, ...]
    counts: tuple[int, ...]
    polynomial: RationalPolynomial
    held_out_prime: int
    held_out_count: int
    chi: int


@dataclass
class HallElement:
    """Finitely supported function on iso-classes with exact rational
    coefficients; keys are the field-stable class profiles."""

    graph: SimplyLacedGraph
    coeffs: dict

    def __post_init__(self):
        self.coeffs = {k: Fraction(v) for k, v in self.coeffs.items() if v != 0}

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def dims(self):
        ds = {k[0] for k in self.coeffs}
        if len(ds) > 1:
            raise ValueError("element is not graded")
        return next(iter(ds)) if ds else None

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return HallElement(self.graph, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) - v
        return HallElement(self.graph, out)

    def scale(self, c) -> "HallElement":
        return HallElement(self.graph, {k: v * Fraction(c) for k, v in self.coeffs.items()})


class HallContext:
    """Caches per-graph enumeration tables, subobject censuses, and Euler
    constant records across all sample primes and the held-out prime."""

    def __init__(self, graph: SimplyLacedGraph, primes=DEFAULT_PRIMES,
                 held_out=DEFAULT_HELD_OUT, budget=ENUMERATION_BUDGET,
                 escalation=(ESCALATION_PRIMES, ESCALATION_HELD_OUT)):
        if len(set(primes)) != len(primes) or len(primes) < 3:
            raise ValueError("need at least three distinct sample primes")
        if held_out in primes:
            raise ValueError("held-out prime collides with the sample primes")
        self.graph = graph
        self.primes = tuple(primes)
        self.held_out = held_out
        self.budget = budget
        self.escalation = escalation
        self._tables: dict = {}
        self._keymaps: dict = {}
        self._keys: dict = {}
        self._census: dict = {}
        self._records: dict = {}

    # -- enumeration and matching ------------------------------------------

    def table(self, dims, q) -> PieceTable:
        dims = tuple(int(d) for d in dims)
        key = (dims, q)
        if key not in self._tables:
            self._tables[key] = PieceTable(self.graph, dims, q, self.budget)
        return self._tables[key]

    def _keymap(self, dims, q) -> dict:
        dims = tuple(int(d) for d in dims)
        key = (dims, q)
        if key not in self._keymaps:
            table = self.table(dims, q)
            mapping = {}
            for idx, cls in enumerate(table.classes):
                if cls.invariants in mapping:
                    raise MatchingError(
                        f"profile collision in piece {dims} at q={q}; "
                        "cross-field matching would be ambiguous"
                    )
                mapping[cls.invariants] = idx
            self._keymaps[key] = mapping
        return self._keymaps[key]

    def keys(self, dims) -> tuple:
        """Canonical class keys of a graded piece, equal across every prime."""
        dims = tuple(int(d) for d in dims)
        if dims not in self._keys:
            key_sets = {q: set(self._keymap(dims, q)) for q in self.primes + (self.held_out,)}
            base = key_sets[self.primes[0]]
            for q, ks in key_sets.items():
                if ks != base:
                    raise MatchingError(
                        f"class profiles of piece {dims} differ between primes "
                        f"{self.primes[0]} and {q}"
                    )
            self._keys[dims] = tuple(sorted(base))
        return self._keys[dims]

    # -- counting ------------------------------------------------------------

    def _count(self, akey, bkey, ckey, q) -> int:
        dims_a, dims_c = akey[0], ckey[0]
        cache_key = (ckey, dims_a, q)
        if cache_key not in self._census:
            table_c = self.table(dims_c, q)
            dims_b = tuple(c - a for c, a in zip(dims_c, dims_a))
            try:
                c_idx = self._keymap(dims_c, q)[ckey]
            except KeyError:
                raise MatchingError(f"class profile missing at q={q} in piece {dims_c}") from None
            self._census[cache_key] = subobject_census(
                self.graph,
                table_c,
                c_idx,
                dims_a,
                self.table(dims_a, q),
                self.table(dims_b, q),
            )
        census = self._census[cache_key]
        try:
            a_idx = self._keymap(dims_a, q)[akey]
            b_idx = self._keymap(tuple(c - a for c, a in zip(ckey[0], akey[0])), q)[bkey]
        except KeyError as e:
            raise MatchingError(f"class profile missing at q={q}: {e}") from None
        return census.get((a_idx, b_idx), 0)

    def euler_constant(self, akey, bkey, ckey) -> EulerConstantRecord:
        """chi of the subobject variety of the triple, via interpolation and
        a held-out verification; the multiplicity of [C] in [A] * [B].

        When the held-out prime breaks the default fit (the variety has
        dimension >= the sample count), the sample set escalates once; a
        second failure aborts the triple.
        """
        triple = (akey, bkey, ckey)
        if triple in self._records:
            return self._records[triple]
        if tuple(a + b for a, b in zip(akey[0], bkey[0])) != ckey[0]:
            raise ValueError("dimension vectors of the triple do not add up")
        record = self._fit(triple, self.primes, self.held_out)
        if record is None and self.escalation is not None:
            record = self._fit(triple, *self.escalation)
        if record is None:
            raise MatchingError(
                f"held-out verification failed for {triple}: the count is not "
                "polynomial of the sampled degree or the class matching is wrong"
            )
        self._records[triple] = record
        return record

    def _fit(self, triple, primes, held_out) -> EulerConstantRecord | None:
        akey, bkey, ckey = triple
        counts = [self._count(akey, bkey, ckey, q) for q in primes]
        poly = interpolate_counts(list(zip(primes, counts)))
        actual = self._count(akey, bkey, ckey, held_out)
        if poly.evaluate(held_out) != actual:
            return None
        chi = poly.value_at_one()
        if chi.denominator != 1:
            raise MatchingError(f"Euler characteristic {chi} is not an integer")
        return EulerConstantRecord(
            triple, tuple(primes), tuple(counts), poly, held_out, actual, int(chi)
        )

    # -- algebra operations ---------------------------------------------------

    def zero(self) -> HallElement:
        return HallElement(self.graph, {})

    def simple(self, vertex: int) -> HallElement:
        """theta_i: the characteristic function of the simple at the vertex."""
        dims = tuple(
            1 if v == vertex else 0 for v in range(self.graph.num_vertices)
        )
        keys = self.keys(dims)
        assert len(keys) == 1
        return HallElement(self.graph, {keys[0]: Fraction(1)})

    def product(self, f: HallElement, g: HallElement) -> HallElement:
        """Bilinear extension of [A] * [B] = sum_C chi(A, B; C) [C]."""
        if f.is_zero or g.is_zero:
            return self.zero()
        dims_f, dims_g = f.dims(), g.dims()
        target = tuple(a + b for a, b in zip(dims_f, dims_g))
        out: dict = {}
        for ckey in self.keys(target):
            acc = Fraction(0)
            for akey, ca in f.coeffs.items():
                for bkey, cb in g.coeffs.items():
                    chi = self.euler_constant(akey, bkey, ckey).chi
                    if chi:
                        acc += ca * cb * chi
            if acc:
                out[ckey] = acc
        return HallElement(self.graph, out)

    def product_of_word(self, word) -> HallElement:
        acc = None
        for v in word:
            t = self.simple(v)
            acc = t if acc is None else self.product(acc, t)
        return acc if acc is not None else self.zero()

    def divided_power(self, vertex: int, k: int) -> HallElement:
        """theta_i^(k) = theta_i^k / k!."""
        if k == 0:
            raise ValueError("divided zeroth power is the unit, which is not supported")
        acc = self.simple(vertex)
        for _ in range(k - 1):
            acc = self.product(acc, self.simple(vertex))
        return acc.scale(Fraction(1, math.factorial(k)))

    def serre_check(self, i: int, j: int) -> HallElement:
        """sum_k (-1)^k theta_i^(k) theta_j theta_i^(1 - a_ij - k); exactly
        zero whenever the simples generate a copy of the positive part."""
        if i == j:
            raise ValueError("the Serre relation needs two distinct vertices")
        a_ij = -1 if self.graph.adjacent(i, j) else 0
        n = 1 - a_ij
        total = self.zero()
        for k in range(n + 1):
            term = self.simple(j) if k == 0 else self.product(self.divided_power(i, k), self.simple(j))
            if k < n:
                term = self.product(term, self.divided_power(i, n - k))
            total = total + term.scale((-1) ** k)
        return total

    def composition_dim(self, degree, generators=None) -> int:
        """Dimension of the span of all products of the chosen simple
        generators inside the given graded piece, in the iso-class basis."""
        degree = tuple(int(d) for d in degree)
        if generators is None:
            generators = tuple(range(self.graph.num_vertices))
        if any(degree[v] and v not in generators for v in range(len(degree))):
            raise ValueError("degree is not supported on the generator subset")
        keys = self.keys(degree)
        index = {k: t for t, k in enumerate(keys)}
        rows = []
        for word in _words_of_content(degree, generators):
            el = self.product_of_word(word)
            row = [Fraction(0)] * len(keys)
            for k, v in el.coeffs.items():
                row[index[k]] = v
            rows.append(row)
        if not rows:
            return 0
        return rational_rank(rows)


def _words_of_content(degree, generators):
    """All generator sequences whose letter counts match the degree vector."""
    letters = []
    for v in generators:
        letters.extend([v] * degree[v])
    if not letters:
        return
    seen = set()
    for perm in _multiset_permutations(tuple(letters)):
        if perm not in seen:
            seen.add(perm)
            yield perm


def _multiset_permutations(letters):
    if not letters:
        yield ()
        return
    used = set()
    for i, head in enumerate(letters):
        if head in used:
            continue
        used.add(head)
        rest = letters[:i] + letters[i + 1 :]
        for tail in _multiset_permutations(rest):
            yield (head,) + tail
