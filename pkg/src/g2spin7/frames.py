"""Exact rational sampling: unit vectors, orthonormal frames, rotations.

Unit vectors come from the stereographic parametrization
v = (2q, |q|^2 - 1) / (|q|^2 + 1), which is exactly unit for every
rational tuple q.  Orthonormal frames are built from products of
Householder reflections about rational vectors; each reflection is an
exact rational orthogonal map, so no square roots ever appear.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .exterior import ExteriorError, Q, Vector

Matrix = tuple[tuple[Fraction, ...], ...]


def rand_rational(rng: random.Random, lim: int = 6) -> Fraction:
    return Fraction(rng.randint(-lim, lim), rng.randint(1, lim))


def rand_vector(rng: random.Random, n: int, lim: int = 6) -> Vector:
    return Vector([rand_rational(rng, lim) for _ in range(n)])


def rand_nonzero_vector(rng: random.Random, n: int, lim: int = 6) -> Vector:
    while True:
        v = rand_vector(rng, n, lim)
        if not v.is_zero():
            return v


def stereographic_unit(q: Sequence[Fraction]) -> Vector:
    """Exact unit vector in R^(len(q)+1) from a rational tuple."""
    q = [Q(x) for x in q]
    s = sum(x * x for x in q)
    d = s + 1
    return Vector([2 * x / d for x in q] + [(s - 1) / d])


def rand_unit(rng: random.Random, n: int, lim: int = 5) -> Vector:
    return stereographic_unit([rand_rational(rng, lim) for _ in range(n - 1)])


def rand_form(rng: random.Random, n: int, k: int, terms: int = 4, lim: int = 6):
    from .exterior import KForm, mask_of

    idx = list(range(1, n + 1))
    c: dict = {}
    for _ in range(terms):
        blade = tuple(sorted(rng.sample(idx, k)))
        c[mask_of(blade, n)] = rand_rational(rng, lim)
    return KForm(n, k, c)


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Q(1) if i == j else Q(0) for j in range(n)) for i in range(n)
    )


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return Vector([sum(row[j] * v.a[j] for j in range(v.n)) for row in m])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def transpose(a: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(a[j][i] for j in range(n)) for i in range(n))


def householder(v: Vector) -> Matrix:
    """Reflection about the hyperplane orthogonal to v (v need not be unit)."""
    n2 = v.norm2()
    if n2 == 0:
        raise ExteriorError("cannot reflect about the zero vector")
    n = v.n
    return tuple(
        tuple(
            (Q(1) if i == j else Q(0)) - 2 * v.a[i] * v.a[j] / n2
            for j in range(n)
        )
        for i in range(n)
    )


def reflection_mapping(x: Vector, e: Vector) -> Matrix:
    """An exact orthogonal map sending unit x to unit e (identity if x == e)."""
    if x == e:
        return identity_matrix(x.n)
    return householder(x - e)


def frame_completion_map(vs: Sequence[Vector]) -> Matrix:
    """Orthogonal rational R with R(vs[i]) = e_{i+1} for each i."""
    n = vs[0].n
    r = identity_matrix(n)
    for i, v in enumerate(vs):
        cur = mat_vec(r, v)
        h = reflection_mapping(cur, Vector.basis(n, i + 1))
        r = mat_mul(h, r)
    return r


def complete_frame(vs: Sequence[Vector]) -> list[Vector]:
    """Deterministic exact orthonormal completion of an orthonormal set."""
    n = vs[0].n
    for i, v in enumerate(vs):
        if v.norm2() != 1:
            raise ExteriorError("completion needs unit vectors")
        for w in vs[i + 1 :]:
            if v.dot(w) != 0:
                raise ExteriorError("completion needs an orthogonal set")
    r = frame_completion_map(vs)
    rt = transpose(r)
    return [mat_vec(rt, Vector.basis(n, i)) for i in range(len(vs) + 1, n + 1)]


def rand_orthonormal_frame(
    rng: random.Random, n: int, m: int, reflections: int = 3, lim: int = 4
) -> list[Vector]:
    """m exact orthonormal vectors: Householder-rotated standard frame."""
    r = identity_matrix(n)
    for _ in range(reflections):
        r = mat_mul(householder(rand_nonzero_vector(rng, n, lim)), r)
    return [mat_vec(r, Vector.basis(n, i)) for i in range(1, m + 1)]


def rotate_pair(u: Vector, v: Vector, t: Fraction) -> tuple[Vector, Vector]:
    """Exact rotation of an orthonormal pair inside its oriented plane.

    Uses cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2), exactly on the unit circle.
    """
    t = Q(t)
    d = 1 + t * t
    c, s = (1 - t * t) / d, 2 * t / d
    return u.scale(c) + v.scale(s), u.scale(-s) + v.scale(c)


def in_span(v: Vector, basis: Sequence[Vector]) -> bool:
    """Exact membership of v in the span of the given vectors."""
    from .exterior import gram

    if v.is_zero():
        return True
    return gram(list(basis) + [v]) == 0 and gram(list(basis)) != 0
