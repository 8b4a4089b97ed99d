"""Exact linear algebra over prime fields, canonical subspace enumeration,
and rational interpolation of finite-field point counts.

Everything here is exact: residues are machine integers in [0, p) with p
capped at 16 bits, and interpolation uses Fraction coefficients.  All values
are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

PRIME_CAP = 1 << 16


class LinalgError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class PrimeFieldContext:
    """Arithmetic context for F_p with a primitive root and a cache of
    elements of prescribed multiplicative order.

    p must be prime and below 2**16 so every product of two residues fits
    comfortably in int64.
    """

    def __init__(self, p: int):
        if not is_prime(p):
            raise LinalgError(f"modulus {p} is not prime")
        if p >= PRIME_CAP:
            raise LinalgError(f"modulus {p} exceeds the 16-bit cap")
        self.p = p
        self.primitive_root = self._find_primitive_root()
        self.root_cache: dict[int, int] = {}

    def _find_primitive_root(self) -> int:
        p = self.p
        if p == 2:
            return 1
        factors = prime_factors(p - 1)
        for g in range(2, p):
            if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
                return g
        raise LinalgError(f"no primitive root mod {p}")  # unreachable for prime p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 mod {self.p}")
        return pow(a, self.p - 2, self.p)

    def root_of_order(self, n: int) -> int:
        """A fixed element of exact multiplicative order n; requires n | p-1."""
        if n in self.root_cache:
            return self.root_cache[n]
        if n <= 0 or (self.p - 1) % n != 0:
            raise LinalgError(f"no element of order {n} in F_{self.p}")
        r = pow(self.primitive_root, (self.p - 1) // n, self.p)
        assert pow(r, n, self.p) == 1
        for q in prime_factors(n):
            assert pow(r, n // q, self.p) != 1
        self.root_cache[n] = r
        return r

    def sqrt_of(self, a: int) -> int:
        """Smallest nonnegative residue squaring to a; deterministic choice."""
        a %= self.p
        for s in range(self.p):
            if s * s % self.p == a:
                return s
        raise LinalgError(f"{a} is not a square mod {self.p}")

    def __repr__(self):
        return f"PrimeFieldContext(p={self.p})"


class FpMatrix:
    """Dense matrix over F_p; entries kept reduced in an int64 array."""

    __slots__ = ("p", "array")

    def __init__(self, array, p: int):
        a = np.array(array, dtype=np.int64)
        if a.ndim != 2:
            raise LinalgError("FpMatrix needs a 2-d array")
        self.array = a % p
        self.p = p

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        assert self.p == other.p
        return FpMatrix(self.array @ other.array, self.p)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        assert self.p == other.p
        return FpMatrix(self.array + other.array, self.p)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        assert self.p == other.p
        return FpMatrix(self.array - other.array, self.p)

    def scale(self, c: int) -> "FpMatrix":
        return FpMatrix(self.array * (c % self.p), self.p)

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.array.T, self.p)

    def trace(self) -> int:
        return int(self.array.trace() % self.p)

    def key(self) -> tuple:
        """Entry tuple in row-major order; the lexicographic canonical key."""
        return tuple(int(x) for x in self.array.flatten())

    def __eq__(self, other):
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.array.shape == other.array.shape
            and bool(np.array_equal(self.array, other.array))
        )

    def __hash__(self):
        return hash((self.p, self.array.shape, self.array.tobytes()))

    def __repr__(self):
        return f"FpMatrix(p={self.p}, {self.array.tolist()})"

    def rref(self) -> tuple["FpMatrix", int, tuple[int, ...]]:
        r, rank, pivots = rref(self.array, self.p)
        return FpMatrix(r, self.p), rank, pivots

    def rank(self) -> int:
        return rref(self.array, self.p)[1]

    def nullspace(self) -> "FpMatrix":
        return FpMatrix(nullspace(self.array, self.p), self.p)

    def inverse(self) -> "FpMatrix":
        n = self.rows
        assert n == self.cols
        aug = np.hstack([self.array, np.eye(n, dtype=np.int64)])
        r, rank, _ = rref(aug, self.p)
        if rank < n:
            raise LinalgError("matrix is singular")
        return FpMatrix(r[:, n:], self.p)


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, int, tuple[int, ...]]:
    """Reduced row echelon form over F_p.

    Returns (rref matrix, rank, pivot columns).  The row space is preserved,
    pivots are 1 and are the only nonzero entries in their columns, so the
    result is the canonical representative of the row space.
    """
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if other.size:
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, r, tuple(pivots)


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Canonical kernel basis (one row per free column of the RREF)."""
    a = np.asarray(mat, dtype=np.int64)
    rows, cols = a.shape
    r, rank, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, c in enumerate(pivots):
            basis[t, c] = (-r[i, f]) % p
    return basis


def in_rowspace(basis_rref: np.ndarray, pivots: tuple[int, ...], vec: np.ndarray, p: int) -> bool:
    v = vec % p
    for i, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * basis_rref[i]) % p
    return not v.any()


class SpanBasis:
    """Incrementally built RREF basis of a subspace of F_p^n (row vectors)."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> np.ndarray:
        v = np.array(vec, dtype=np.int64) % self.p
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, vec) -> bool:
        return not self.reduce(vec).any()

    def add(self, vec) -> bool:
        """Insert vec; returns True when the dimension grew."""
        v = self.reduce(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = v * pow(int(v[c]), self.p - 2, self.p) % self.p
        for row in self.rows:
            if row[c]:
                row -= row[c] * v
                row %= self.p
        idx = sum(1 for q in self.pivots if q < c)
        self.rows.insert(idx, v)
        self.pivots.insert(idx, c)
        return True

    def matrix(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.vstack(self.rows)

    def coords(self, vec) -> np.ndarray:
        """Coordinates of vec in this RREF basis; vec must lie in the span."""
        v = np.array(vec, dtype=np.int64) % self.p
        c = v[self.pivots] if self.pivots else np.zeros(0, dtype=np.int64)
        if not np.array_equal(c @ self.matrix() % self.p, v):
            raise LinalgError("vector outside span")
        return c


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n, as an exact integer."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def enumerate_subspaces(ambient_dim: int, sub_dim: int, ctx: PrimeFieldContext):
    """Yield every sub_dim-dimensional subspace of F_p^ambient_dim exactly
    once, as its canonical RREF basis matrix.

    Iterates over pivot-column sets, then over the free entries, so the
    stream is deterministic and the total count is the Gaussian binomial.
    """
    n, k, p = ambient_dim, sub_dim, ctx.p
    if k < 0 or k > n:
        raise LinalgError(f"sub_dim {k} out of range for ambient dim {n}")
    if k == 0:
        yield FpMatrix(np.zeros((0, n), dtype=np.int64), p)
        return
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free_pos = [
            (r, c)
            for r, pc in enumerate(pivots)
            for c in range(pc + 1, n)
            if c not in pivot_set
        ]
        for vals in itertools.product(range(p), repeat=len(free_pos)):
            m = np.zeros((k, n), dtype=np.int64)
            for r, pc in enumerate(pivots):
                m[r, pc] = 1
            for (r, c), v in zip(free_pos, vals):
                m[r, c] = v
            yield FpMatrix(m, p)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with exact rational coefficients, lowest degree first,
    remembering the (prime, count) points it interpolates."""

    coefficients: tuple[Fraction, ...]
    provenance: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.coefficients and self.coefficients[-1] == 0:
            raise LinalgError("leading coefficient must be nonzero")
        for q, count in self.provenance:
            if self.evaluate(q) != count:
                raise LinalgError(f"polynomial misses provenance point ({q}, {count})")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def value_at_one(self) -> Fraction:
        return self.evaluate(1)

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            parts.append(f"{c}" if i == 0 else (f"{c}*q^{i}" if i > 1 else f"{c}*q"))
        return " + ".join(parts)


def interpolate_counts(points: list[tuple[int, int]]) -> RationalPolynomial:
    """Unique polynomial of degree < len(points) through the given
    (prime, count) points, by Lagrange interpolation over Q."""
    if len(points) < 2:
        raise LinalgError("need at least two interpolation points")
    xs = [q for q, _ in points]
    if len(set(xs)) != len(xs):
        raise LinalgError("duplicate primes in interpolation points")
    for q, count in points:
        if count < 0:
            raise LinalgError("counts must be nonnegative")
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        # numerator polynomial prod_{j != i} (x - xj), times yi / denom
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            num = [
                (num[k - 1] if k > 0 else 0) - xj * (num[k] if k < len(num) else 0)
                for k in range(len(num) + 1)
            ]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(num):
            coeffs[k] += scale * c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return RationalPolynomial(tuple(coeffs), tuple((q, c) for q, c in points))


def rational_rank(rows: list[list[Fraction]]) -> int:
    """Rank of a matrix of Fractions by exact Gaussian elimination."""
    work = [list(map(Fraction, r)) for r in rows if any(r)]
    rank = 0
    cols = len(work[0]) if work else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][c]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
