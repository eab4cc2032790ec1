"""Octonion arithmetic and the induced 7-dimensional cross product.

The multiplication is the Cayley-Dickson doubling of the quaternions with
the convention (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)), over the
ordered basis <1, i, j, k, l, li, lj, lk>.  The cross product on
imaginary octonions is u x v = im(conj(v) . u).

Whether this algebra's cross-product 3-form equals the frozen reference
3-form of the flat model on the nose is never assumed: a brute-force
signed-permutation search finds the exact basis change, and the witness is
stored as a constant and re-verified by the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exterior import (
    ExteriorError,
    KForm,
    Q,
    Vector,
    indices_of,
    mask_of,
)

Quat = tuple[Fraction, Fraction, Fraction, Fraction]


def _q_conj(q: Quat) -> Quat:
    return (q[0], -q[1], -q[2], -q[3])


def _q_mul(p: Quat, q: Quat) -> Quat:
    a, b, c, d = p
    w, x, y, z = q
    return (
        a * w - b * x - c * y - d * z,
        a * x + b * w + c * z - d * y,
        a * y - b * z + c * w + d * x,
        a * z + b * y - c * x + d * w,
    )


class Octonion:
    """An octonion as a pair of quaternions (Cayley-Dickson doubling)."""

    __slots__ = ("a",)

    def __init__(self, comps: Sequence):
        comps = tuple(Q(c) for c in comps)
        if len(comps) != 8:
            raise ExteriorError("octonion needs 8 components")
        self.a = comps

    @staticmethod
    def basis(i: int) -> "Octonion":
        return Octonion([1 if j == i else 0 for j in range(8)])

    @staticmethod
    def from_imaginary(v: Vector) -> "Octonion":
        if v.n != 7:
            raise ExteriorError("imaginary octonions live in R^7")
        return Octonion((Q(0),) + v.a)

    def imaginary(self) -> Vector:
        return Vector(self.a[1:])

    def real(self) -> Fraction:
        return self.a[0]

    def conj(self) -> "Octonion":
        return Octonion((self.a[0],) + tuple(-x for x in self.a[1:]))

    def norm2(self) -> Fraction:
        return sum(x * x for x in self.a)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion([x + y for x, y in zip(self.a, other.a)])

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion([x - y for x, y in zip(self.a, other.a)])

    def __neg__(self) -> "Octonion":
        return Octonion([-x for x in self.a])

    def __mul__(self, other: "Octonion") -> "Octonion":
        return oct_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Octonion) and self.a == other.a

    def __repr__(self):
        names = ["1", "i", "j", "k", "l", "li", "lj", "lk"]
        parts = [f"{c}*{s}" for c, s in zip(self.a, names) if c != 0]
        return " + ".join(parts) if parts else "0"


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    a, b = x.a[:4], x.a[4:]
    c, d = y.a[:4], y.a[4:]
    first = tuple(p - q for p, q in zip(_q_mul(a, c), _q_mul(_q_conj(d), b)))
    second = tuple(p + q for p, q in zip(_q_mul(d, a), _q_mul(b, _q_conj(c))))
    return Octonion(first + second)


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    """(xy)z - x(yz); measures the failure of associativity."""
    return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z))


def cross7(u: Vector, v: Vector) -> Vector:
    """Cross product of imaginary octonions: u x v = im(conj(v) . u)."""
    ou = Octonion.from_imaginary(u)
    ov = Octonion.from_imaginary(v)
    return oct_mul(ov.conj(), ou).imaginary()


def g2_frame_test(u1: Vector, u2: Vector, u3: Vector) -> bool:
    """True iff (u1, u2, u3) is orthonormal with u3 orthogonal to u1 x u2.

    Triples of this kind are exactly the frames moved simply transitively
    by the automorphism group of the cross product.
    """
    vs = (u1, u2, u3)
    for i, a in enumerate(vs):
        if a.norm2() != 1:
            return False
        for b in vs[i + 1 :]:
            if a.dot(b) != 0:
                return False
    return cross7(u1, u2).dot(u3) == 0


def cross_product_form() -> KForm:
    """The 3-form (u, v, w) -> <u x v, w> of the octonion cross product."""
    c = {}
    for a, b in itertools.combinations(range(1, 8), 2):
        w = cross7(Vector.basis(7, a), Vector.basis(7, b))
        for t in range(1, 8):
            val = w.a[t - 1]
            if val == 0 or t in (a, b):
                continue
            triple = (a, b, t)
            inv = sum(
                1
                for x, y in itertools.combinations(range(3), 2)
                if triple[x] > triple[y]
            )
            m = mask_of(tuple(sorted(triple)), 7)
            c[m] = val if inv % 2 == 0 else -val
    return KForm(7, 3, c)


@dataclass(frozen=True)
class SignedPermutation:
    """An orthogonal map e_i -> sign[i] * e_{perm[i]} (1-based tuples)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ExteriorError("not a permutation of 1..n")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ExteriorError("signs must be +-1 per index")

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply_vector(self, v: Vector) -> Vector:
        out = [Q(0)] * self.n
        for i in range(self.n):
            out[self.perm[i] - 1] += self.signs[i] * v.a[i]
        return Vector(out)

    def pullback(self, a: KForm) -> KForm:
        """(P^* a)(u, ...) = a(P u, ...), coefficient-exact."""
        if a.n != self.n:
            raise ExteriorError("dimension mismatch in pullback")
        out: dict = {}
        for m in _grade_masks(self.n, a.k):
            src = indices_of(m)
            img = tuple(self.perm[i - 1] for i in src)
            val = a.c.get(mask_of(tuple(sorted(img)), self.n))
            if val is None:
                continue
            sgn = 1
            for x, y in itertools.combinations(range(len(img)), 2):
                if img[x] > img[y]:
                    sgn = -sgn
            for i in src:
                sgn *= self.signs[i - 1]
            out[m] = val if sgn > 0 else -val
        return KForm(self.n, a.k, out)


def _grade_masks(n: int, k: int):
    for idx in itertools.combinations(range(n), k):
        m = 0
        for i in idx:
            m |= 1 << i
        yield m


def identity_signed_permutation(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)), (1,) * n)


# Exact basis change carrying the octonion cross-product 3-form onto the
# frozen reference 3-form of the flat model: flip the last axis.
OCT_TO_REFERENCE_WITNESS = SignedPermutation(
    (1, 2, 3, 4, 5, 6, 7), (1, 1, 1, 1, 1, 1, -1)
)


def find_signed_permutation(a: KForm, b: KForm) -> SignedPermutation | None:
    """Search all signed permutations P for P^* a == b.

    Both forms must have every coefficient in {-1, 0, +1}.  Candidates are
    scanned in lexicographic order (permutation image tuple, then sign
    vector with +1 before -1); the first solution is returned, or None.
    A support-bijection prune rejects most permutations before any sign
    arithmetic happens.
    """
    if a.n != b.n or a.k != b.k:
        raise ExteriorError("forms must share (n, k)")
    for f in (a, b):
        if any(v not in (1, -1) for v in f.c.values()):
            raise ExteriorError(
                "signed-permutation search needs coefficients in {-1, 0, +1}"
            )
    n = a.n
    supp_a = set(a.c)
    supp_b = sorted(b.c)
    if len(supp_a) != len(supp_b):
        return None
    for perm in itertools.permutations(range(1, n + 1)):
        constraints = []
        ok = True
        seen = set()
        for m in supp_b:
            src = indices_of(m)
            img = tuple(perm[i - 1] for i in src)
            key = mask_of(tuple(sorted(img)), n)
            if key not in supp_a or key in seen:
                ok = False
                break
            seen.add(key)
            sgn = 1
            for x, y in itertools.combinations(range(len(img)), 2):
                if img[x] > img[y]:
                    sgn = -sgn
            need = b.c[m] / (a.c[key] * sgn)
            constraints.append((m, need))
        if not ok:
            continue
        for bits in range(1 << n):
            if all(
                (-1 if (bits & m).bit_count() & 1 else 1) == need
                for m, need in constraints
            ):
                signs = tuple(-1 if bits & (1 << i) else 1 for i in range(n))
                cand = SignedPermutation(perm, signs)
                if cand.pullback(a) == b:
                    return cand
    return None
