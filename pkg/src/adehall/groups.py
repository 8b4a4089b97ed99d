"""The finite subgroups of SL2 of types A, D, E as exact 2x2 matrix groups
over a prime field, together with their conjugacy classes.

The modulus is chosen so the complex matrix models reduce faithfully: p = 1
mod the exponent of the group (all needed roots of unity exist), p does not
divide the order, and the square roots of -1, 2, 5 required by the D/E
quaternion models exist.  The element lists are verified by an exact closure
check, so a wrong constant or modulus aborts instead of corrupting results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

from .linalg import FpMatrix, PrimeFieldContext, is_prime

FAMILIES = ("A", "D", "E6", "E7", "E8")


class GroupConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """One of the five ADE families: cyclic A(n), binary dihedral D(n),
    binary tetrahedral E6, binary octahedral E7, binary icosahedral E8."""

    family: str
    n: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "A" and self.n < 2:
            raise ValueError("cyclic family needs n >= 2")
        if self.family == "D" and self.n < 2:
            raise ValueError("binary dihedral family needs n >= 2")
        if self.family in ("E6", "E7", "E8") and self.n not in (0,):
            raise ValueError(f"family {self.family} takes no parameter")

    @property
    def expected_order(self) -> int:
        return {
            "A": self.n,
            "D": 4 * self.n,
            "E6": 24,
            "E7": 48,
            "E8": 120,
        }[self.family]

    @property
    def exponent(self) -> int:
        """Exponent of the group (lcm of element orders)."""
        if self.family == "A":
            return self.n
        if self.family == "D":
            return 2 * self.n * 4 // gcd(2 * self.n, 4)
        return {"E6": 12, "E7": 24, "E8": 60}[self.family]

    @property
    def label(self) -> str:
        return f"{self.family}({self.n})" if self.family in ("A", "D") else self.family

    @property
    def affine_vertex_count(self) -> int:
        return {"A": self.n, "D": self.n + 3, "E6": 7, "E7": 8, "E8": 9}[self.family]


def choose_modulus(spec: GroupSpec) -> PrimeFieldContext:
    """Smallest admissible prime for the family, see the module docstring."""
    return _admissible_moduli(spec, 1)[0]


def next_modulus(spec: GroupSpec, after: PrimeFieldContext) -> PrimeFieldContext:
    """Next admissible prime after the given context's modulus."""
    for ctx in _admissible_moduli(spec, 64):
        if ctx.p > after.p:
            return ctx
    raise GroupConstructionError("no admissible modulus found below the cap")


def _admissible_moduli(spec: GroupSpec, count: int) -> list[PrimeFieldContext]:
    e = spec.exponent
    out = []
    p = 2
    while len(out) < count and p < (1 << 16):
        if (
            is_prime(p)
            and p % e == 1
            and spec.expected_order % p != 0
            and (spec.family == "A" or p % 4 == 1)
            and (spec.family != "E7" or p % 8 == 1)
            and (spec.family != "E8" or p % 5 == 1)
        ):
            out.append(PrimeFieldContext(p))
        p += 1
    if len(out) < count:
        raise GroupConstructionError(f"not enough admissible primes for {spec.label}")
    return out


def _quat_matrix(a, b, c, d, s, p) -> tuple:
    """Matrix of the quaternion a + bi + cj + dk, with s a square root of -1."""
    return (
        (a + b * s) % p,
        (c + d * s) % p,
        (-c + d * s) % p,
        (a - b * s) % p,
    )


def _element_tuples(spec: GroupSpec, ctx: PrimeFieldContext) -> set[tuple]:
    p = ctx.p
    fam = spec.family
    if fam == "A":
        w = ctx.root_of_order(spec.n)
        return {
            (pow(w, k, p), 0, 0, pow(w, spec.n - k, p)) for k in range(spec.n)
        }
    if fam == "D":
        w = ctx.root_of_order(2 * spec.n)
        diag = {(pow(w, k, p), 0, 0, pow(w, 2 * spec.n - k, p)) for k in range(2 * spec.n)}
        j = (0, 1, (-1) % p, 0)
        anti = set()
        for a, _, _, d in diag:
            # diag(a, d) @ j = [[0, a], [-d, 0]]
            anti.add((0, a % p, (-d) % p, 0))
        return diag | anti

    s = ctx.sqrt_of(p - 1)
    half = ctx.inv(2)
    hurwitz = set()
    for a, b, c, d in itertools.product((1, p - 1), repeat=4):
        hurwitz.add(_quat_matrix(a * half % p, b * half % p, c * half % p, d * half % p, s, p))
    for pos in range(4):
        for sign in (1, p - 1):
            coords = [0, 0, 0, 0]
            coords[pos] = sign
            hurwitz.add(_quat_matrix(*coords, s, p))
    assert len(hurwitz) == 24
    if fam == "E6":
        return hurwitz
    if fam == "E7":
        inv_sqrt2 = ctx.inv(ctx.sqrt_of(2))
        extra = set()
        for i, j in itertools.combinations(range(4), 2):
            for si, sj in itertools.product((1, p - 1), repeat=2):
                coords = [0, 0, 0, 0]
                coords[i] = si * inv_sqrt2 % p
                coords[j] = sj * inv_sqrt2 % p
                extra.add(_quat_matrix(*coords, s, p))
        assert len(extra) == 24
        return hurwitz | extra
    # E8: even permutations of (0, 1, 1/phi, phi) / 2 with free signs
    sqrt5 = ctx.sqrt_of(5)
    phi = (1 + sqrt5) * half % p
    phinv = (phi - 1) % p  # 1/phi = phi - 1
    base = (0, 1, phinv, phi)
    evens = [
        (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2),
        (1, 0, 3, 2), (1, 2, 0, 3), (1, 3, 2, 0),
        (2, 0, 1, 3), (2, 1, 3, 0), (2, 3, 0, 1),
        (3, 0, 2, 1), (3, 1, 0, 2), (3, 2, 1, 0),
    ]
    extra = set()
    for perm in evens:
        coords0 = [base[perm.index(t)] for t in range(4)]
        nz = [t for t in range(4) if coords0[t] != 0]
        for signs in itertools.product((1, p - 1), repeat=3):
            coords = list(coords0)
            for t, sg in zip(nz, signs):
                coords[t] = coords[t] * sg % p
            coords = [c * half % p for c in coords]
            extra.add(_quat_matrix(*coords, s, p))
    assert len(extra) == 96
    return hurwitz | extra


class FiniteMatrixGroup:
    """A finite subgroup of SL2(F_p), closed and order-checked, with
    precomputed multiplication and inverse tables.

    Elements are sorted by their entry tuple, so the listing does not depend
    on construction order.  Immutable after construction.
    """

    def __init__(self, spec: GroupSpec, ctx: PrimeFieldContext, tuples: set[tuple]):
        p = ctx.p
        if len(tuples) != spec.expected_order:
            raise GroupConstructionError(
                f"{spec.label}: got {len(tuples)} distinct elements, expected {spec.expected_order}"
            )
        self.spec = spec
        self.ctx = ctx
        ordered = sorted(tuples)
        self.element_tuples = ordered
        self.elements = [FpMatrix(np.array(t, dtype=np.int64).reshape(2, 2), p) for t in ordered]
        for m in self.elements:
            det = (m.array[0, 0] * m.array[1, 1] - m.array[0, 1] * m.array[1, 0]) % p
            if det != 1:
                raise GroupConstructionError(f"{spec.label}: element {m} has determinant {det}")
        index = {t: i for i, t in enumerate(ordered)}
        self.index = index
        n = len(ordered)
        mult = np.zeros((n, n), dtype=np.int32)
        additions = 0
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                t = (a @ b).key()
                k = index.get(t)
                if k is None:
                    additions += 1
                    raise GroupConstructionError(
                        f"{spec.label}: closure failure at product {i} * {j}"
                    )
                mult[i, j] = k
        self.closure_additions = additions
        self.mult = mult
        self.identity_index = index[(1, 0, 0, 1)]
        inv = [-1] * n
        for i in range(n):
            for j in range(n):
                if mult[i, j] == self.identity_index:
                    inv[i] = j
                    break
        assert all(k >= 0 for k in inv)
        self.inverse = inv

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, i: int) -> int:
        e = self.identity_index
        k, cur = 1, i
        while cur != e:
            cur = int(self.mult[cur, i])
            k += 1
        return k

    def conjugate(self, g: int, x: int) -> int:
        return int(self.mult[int(self.mult[g, x]), self.inverse[g]])


def build_group(spec: GroupSpec, ctx: PrimeFieldContext | None = None) -> FiniteMatrixGroup:
    ctx = ctx or choose_modulus(spec)
    return FiniteMatrixGroup(spec, ctx, _element_tuples(spec, ctx))


@dataclass(frozen=True)
class ConjugacyClasses:
    class_of: tuple[int, ...]
    sizes: tuple[int, ...]
    representatives: tuple[int, ...]
    inverse_class: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)


def conjugacy_classes(group: FiniteMatrixGroup) -> ConjugacyClasses:
    """Brute-force conjugation partition, classes ordered by smallest member."""
    n = group.order
    class_of = [-1] * n
    reps = []
    sizes = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        cid = len(reps)
        orbit = {group.conjugate(g, x) for g in range(n)}
        for y in orbit:
            assert class_of[y] == -1
            class_of[y] = cid
        reps.append(min(orbit))
        sizes.append(len(orbit))
    inverse_class = tuple(class_of[group.inverse[r]] for r in reps)
    cc = ConjugacyClasses(tuple(class_of), tuple(sizes), tuple(reps), inverse_class)
    assert sum(cc.sizes) == n
    assert cc.sizes[class_of[group.identity_index]] == 1
    return cc
