"""Exact exterior algebra over R^n (n = 7 or 8) with the Euclidean metric.

Coefficients are exact rationals (``fractions.Fraction``) by default; an
optional float backend exists for timing comparisons only.  Every operation
is a pure function of immutable values.

Frozen conventions (everything downstream depends on these):

* Blades are strictly increasing index subsets of {1..n}, stored as bit
  masks (index i occupies bit i-1).
* ``contract`` inserts the vector into the *first* argument slot and acts
  as an antiderivation:  i_v(a ^ b) = (i_v a) ^ b + (-1)^deg(a) a ^ (i_v b).
* ``hodge`` uses the orientation mu = e^{1...n}; on blades
  *e^I = sgn(I, I^c) e^{I^c} with sgn the permutation parity of the
  concatenation (I, I^c).
* The Hodge star of the hyperplane orthogonal to a unit vector x uses the
  induced orientation x -| mu and is computed as a signed contraction of
  the ambient star:  star_x(a) = (-1)^deg(a) * (x -| *a).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class ExteriorError(ValueError):
    """Base class for exact-algebra usage errors."""


class DimensionMismatch(ExteriorError):
    pass


class GradeError(ExteriorError):
    pass


class NonUnitVector(ExteriorError):
    pass


class NotTangent(ExteriorError):
    pass


Q = Fraction


def as_scalar(x) -> Fraction:
    """Coerce ints / strings / Fractions to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise ExteriorError(
            "float given where an exact rational is required; "
            "use the float backend explicitly via to_float()"
        )
    return Fraction(x)


def indices_of(mask: int) -> tuple[int, ...]:
    """Decode a blade mask into its increasing 1-based index tuple."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(indices: Iterable[int], n: int) -> int:
    m = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ExteriorError(f"index {i} out of range 1..{n}")
        bit = 1 << (i - 1)
        if m & bit:
            raise ExteriorError(f"repeated index {i} in blade")
        m |= bit
    return m


def _wedge_sign(a: int, b: int) -> int:
    """Parity of inversions when concatenating sorted index sets a, b."""
    inv = 0
    m = b
    while m:
        j = (m & -m).bit_length() - 1
        inv += (a >> (j + 1)).bit_count()
        m &= m - 1
    return -1 if inv & 1 else 1


def _contract_sign(mask: int, bit_pos: int) -> int:
    """(-1)^(number of indices below bit_pos present in mask)."""
    below = mask & ((1 << bit_pos) - 1)
    return -1 if below.bit_count() & 1 else 1


class Vector:
    """An exact vector in R^n."""

    __slots__ = ("n", "a", "_h")

    def __init__(self, comps: Sequence):
        self.a = tuple(
            c if isinstance(c, float) else as_scalar(c) for c in comps
        )
        self.n = len(self.a)
        self._h = None

    @staticmethod
    def basis(n: int, i: int) -> "Vector":
        if not 1 <= i <= n:
            raise ExteriorError(f"basis index {i} out of range 1..{n}")
        return Vector([Q(1) if j == i else Q(0) for j in range(1, n + 1)])

    @staticmethod
    def zero(n: int) -> "Vector":
        return Vector([Q(0)] * n)

    def __getitem__(self, i: int):
        """1-based component access."""
        return self.a[i - 1]

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector([x + y for x, y in zip(self.a, other.a)])

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector([x - y for x, y in zip(self.a, other.a)])

    def __neg__(self) -> "Vector":
        return Vector([-x for x in self.a])

    def scale(self, c) -> "Vector":
        c = c if isinstance(c, float) else as_scalar(c)
        return Vector([c * x for x in self.a])

    def dot(self, other: "Vector"):
        self._check(other)
        return sum(x * y for x, y in zip(self.a, other.a))

    def norm2(self):
        return self.dot(self)

    def is_unit(self) -> bool:
        return self.norm2() == 1

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.a)

    def to_float(self) -> "Vector":
        return Vector([float(x) for x in self.a])

    def _check(self, other: "Vector"):
        if self.n != other.n:
            raise DimensionMismatch(f"vector dims {self.n} != {other.n}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self.a == other.a

    def __hash__(self):
        if self._h is None:
            self._h = hash(self.a)
        return self._h

    def __repr__(self):
        return f"Vector({list(self.a)})"


class KForm:
    """A homogeneous k-form on R^n: sparse map from blade masks to scalars.

    Zero coefficients are pruned; equality is coefficient-wise.  A form
    whose coefficients are all zero compares equal to any zero form of the
    same dimension regardless of its nominal grade.
    """

    __slots__ = ("n", "k", "c", "_h")

    def __init__(self, n: int, k: int, coeffs: dict | None = None):
        if not 0 <= k <= n:
            raise GradeError(f"grade {k} out of range 0..{n}")
        self.n = n
        self.k = k
        c = {}
        if coeffs:
            for m, v in coeffs.items():
                if not isinstance(v, float):
                    v = as_scalar(v)
                if v == 0:
                    continue
                if m.bit_count() != k:
                    raise GradeError(
                        f"blade {indices_of(m)} has grade {m.bit_count()}, "
                        f"expected {k}"
                    )
                if m >> n:
                    raise ExteriorError(f"blade {indices_of(m)} exceeds dim {n}")
                c[m] = v
        self.c = c
        self._h = None

    @staticmethod
    def zero(n: int, k: int = 0) -> "KForm":
        return KForm(n, k)

    @staticmethod
    def blade(n: int, indices: Iterable[int], coeff=1) -> "KForm":
        idx = tuple(indices)
        return KForm(n, len(idx), {mask_of(idx, n): coeff})

    @staticmethod
    def scalar(n: int, value) -> "KForm":
        return KForm(n, 0, {0: value})

    def coeff(self, indices: Iterable[int]):
        return self.c.get(mask_of(tuple(indices), self.n), Q(0))

    def is_zero(self) -> bool:
        return not self.c

    def is_float(self) -> bool:
        return any(isinstance(v, float) for v in self.c.values())

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms sorted by increasing index tuple (canonical order)."""
        return sorted(
            ((indices_of(m), v) for m, v in self.c.items()),
            key=lambda t: t[0],
        )

    def to_float(self) -> "KForm":
        return KForm(self.n, self.k, {m: float(v) for m, v in self.c.items()})

    def _check_binop(self, other: "KForm"):
        if self.n != other.n:
            raise DimensionMismatch(f"form dims {self.n} != {other.n}")
        if self.is_float() != other.is_float():
            raise ExteriorError("mixing rational and float backends")

    def __add__(self, other: "KForm") -> "KForm":
        self._check_binop(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.k != other.k:
            raise GradeError(f"cannot add grades {self.k} and {other.k}")
        c = dict(self.c)
        for m, v in other.c.items():
            c[m] = c.get(m, 0) + v
        return KForm(self.n, self.k, c)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __neg__(self) -> "KForm":
        return KForm(self.n, self.k, {m: -v for m, v in self.c.items()})

    def scale(self, s) -> "KForm":
        if not isinstance(s, float):
            s = as_scalar(s)
        return KForm(self.n, self.k, {m: s * v for m, v in self.c.items()})

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KForm):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.k == other.k and self.c == other.c

    def __hash__(self):
        if self._h is None:
            if not self.c:
                # zero forms compare equal across nominal grades
                self._h = hash((self.n, -1))
            else:
                self._h = hash((self.n, self.k, tuple(sorted(self.c.items()))))
        return self._h

    def __repr__(self):
        from .dsl import print_form

        return f"KForm({self.n}, {self.k}, {print_form(self)!r})"


def wedge(a: KForm, b: KForm) -> KForm:
    """Exterior product.  Result grade a.k + b.k (the zero form past n)."""
    a._check_binop(b)
    n = a.n
    k = a.k + b.k
    if k > n:
        return KForm(n, 0)
    c: dict = {}
    for ma, va in a.c.items():
        for mb, vb in b.c.items():
            if ma & mb:
                continue
            m = ma | mb
            s = _wedge_sign(ma, mb)
            c[m] = c.get(m, 0) + (va * vb if s > 0 else -(va * vb))
    return KForm(n, k, c)


def wedge_all(forms: Sequence[KForm]) -> KForm:
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


def contract(v: Vector, a: KForm) -> KForm:
    """Interior product v -| a, insertion into the first slot."""
    if v.n != a.n:
        raise DimensionMismatch(f"vector dim {v.n} != form dim {a.n}")
    if a.k < 1:
        raise GradeError("cannot contract a 0-form")
    c: dict = {}
    for m, coeff in a.c.items():
        mm = m
        while mm:
            bit = mm & -mm
            pos = bit.bit_length() - 1
            comp = v.a[pos]
            if comp != 0:
                s = _contract_sign(m, pos)
                key = m ^ bit
                term = comp * coeff
                c[key] = c.get(key, 0) + (term if s > 0 else -term)
            mm ^= bit
    return KForm(a.n, a.k - 1, c)


def hodge(a: KForm) -> KForm:
    """Ambient Hodge star for the Euclidean metric, orientation e^{1..n}."""
    full = (1 << a.n) - 1
    c = {}
    for m, v in a.c.items():
        comp = full ^ m
        s = _wedge_sign(m, comp)
        c[comp] = v if s > 0 else -v
    return KForm(a.n, a.n - a.k, c)


def flat(v: Vector) -> KForm:
    """Musical isomorphism vector -> 1-form (Euclidean: copy components)."""
    return KForm(v.n, 1, {1 << i: v.a[i] for i in range(v.n) if v.a[i] != 0})


def sharp(a: KForm) -> Vector:
    """Musical isomorphism 1-form -> vector."""
    if a.k != 1 and not a.is_zero():
        raise GradeError(f"sharp needs a 1-form, got grade {a.k}")
    comps = [Q(0)] * a.n
    for m, v in a.c.items():
        comps[m.bit_length() - 1] = v
    return Vector(comps)


def inner(a: KForm, b: KForm):
    """Induced metric on k-forms; blades are orthonormal."""
    if a.n != b.n or (a.k != b.k and not (a.is_zero() or b.is_zero())):
        raise DimensionMismatch(
            f"inner needs matching (n, k); got ({a.n},{a.k}) and ({b.n},{b.k})"
        )
    return sum(v * b.c.get(m, 0) for m, v in a.c.items())


def norm2(a: KForm):
    return inner(a, a)


def eval_form(a: KForm, vs: Sequence[Vector]):
    """Antisymmetric multilinear evaluation a(v_1, ..., v_k)."""
    if len(vs) != a.k:
        raise GradeError(f"form of grade {a.k} evaluated on {len(vs)} vectors")
    cur = a
    for v in vs:
        if cur.k == 0:
            break
        cur = contract(v, cur)
    return cur.c.get(0, Q(0))


def mu(n: int) -> KForm:
    """The orientation form e^{1...n}."""
    return KForm(n, n, {(1 << n) - 1: Q(1)})


def mu_hyperplane(xi: Vector) -> KForm:
    """Induced orientation xi -| mu on the hyperplane orthogonal to xi."""
    return contract(xi, mu(xi.n))


def require_unit(v: Vector, what: str = "vector"):
    if v.norm2() != 1:
        raise NonUnitVector(f"{what} must be a unit vector, |v|^2 = {v.norm2()}")


def restrict(a: KForm, xi: Vector) -> KForm:
    """Tangential part of a on the hyperplane orthogonal to the unit xi.

    Splits a = xi^# ^ p + r with xi -| r = 0 and returns r.  For a
    coordinate xi = e_i this deletes every blade containing i.
    """
    require_unit(xi, "restriction direction")
    if a.k == 0:
        return a
    return a - wedge(flat(xi), contract(xi, a))


def restrict_frame(a: KForm, frame: Sequence[Vector]) -> KForm:
    out = a
    for v in frame:
        out = restrict(out, v)
    return out


def hodge_hyperplane(a: KForm, xi: Vector) -> KForm:
    """Hodge star of the hyperplane xi-perp, orientation xi -| mu.

    Requires a tangent to the hyperplane (xi -| a = 0).  The sign
    convention is pinned by the golden identities
    star(omega) = omega^2 / 2 and star(Re) = Im for the flat 7-dim model.
    """
    return star_complement(a, [xi])


def star_complement(a: KForm, frame: Sequence[Vector]) -> KForm:
    """Hodge star on the orthogonal complement of an orthonormal frame.

    Orientation is v_m -| ... -| v_1 -| mu.  Computed as the iterated
    signed contraction (-1)^(k*m) v_m -| ... -| v_1 -| (*a).
    """
    for i, v in enumerate(frame):
        require_unit(v, "frame vector")
        if a.k >= 1 and not contract(v, a).is_zero():
            raise NotTangent("form is not tangent to the complement")
        for w in frame[i + 1 :]:
            if v.dot(w) != 0:
                raise ExteriorError("frame vectors are not orthogonal")
    s = hodge(a)
    for v in frame:
        s = contract(v, s)
    if (a.k * len(frame)) % 2:
        s = -s
    return s


def gram(vs: Sequence[Vector]):
    """Gram determinant |v_1 ^ ... ^ v_m|^2, exact."""
    m = len(vs)
    rows = [[vs[i].dot(vs[j]) for j in range(m)] for i in range(m)]
    return _det(rows)


def _det(rows):
    """Fraction-exact determinant by fraction-free elimination."""
    n = len(rows)
    a = [list(r) for r in rows]
    det = Q(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Q(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = Q(1) / a[col][col] if not isinstance(a[col][col], float) else 1.0 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f == 0:
                continue
            for cc in range(col, n):
                a[r][cc] -= f * a[col][cc]
    return det


def linearly_independent(vs: Sequence[Vector]) -> bool:
    return gram(vs) != 0


class VectorValuedForm:
    """A tangent-vector-valued k-form: one coefficient k-form per e_i."""

    __slots__ = ("n", "k", "comps")

    def __init__(self, comps: Sequence[KForm]):
        comps = tuple(comps)
        n = comps[0].n
        k = comps[0].k
        for f in comps:
            if f.n != n or (f.k != k and not f.is_zero()):
                raise DimensionMismatch("components must share (n, k)")
        if len(comps) != n:
            raise DimensionMismatch(f"need {n} components, got {len(comps)}")
        self.n, self.k, self.comps = n, k, comps

    def component(self, i: int) -> KForm:
        """1-based component form of basis vector e_i."""
        return self.comps[i - 1]

    def pair(self, xi: Vector) -> KForm:
        """The scalar-valued form <T, xi> = sum_i xi_i T_i."""
        if xi.n != self.n:
            raise DimensionMismatch("vector/form dimension mismatch")
        out = KForm(self.n, self.k)
        for i, f in enumerate(self.comps):
            if xi.a[i] != 0:
                out = out + f.scale(xi.a[i])
        return out

    def apply(self, vs: Sequence[Vector]) -> Vector:
        """Evaluate on k vectors; returns the tangent vector value."""
        return Vector([eval_form(f, vs) for f in self.comps])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorValuedForm)
            and self.n == other.n
            and all(a == b for a, b in zip(self.comps, other.comps))
        )

    def __repr__(self):
        return f"VectorValuedForm(n={self.n}, k={self.k})"
