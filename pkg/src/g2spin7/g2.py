"""The flat G2 package on R^7 and its transplant to hyperplanes of R^8.

A ``G2Structure`` bundles the calibration 3-form phi, its 7-dimensional
Hodge dual, the orientation form, and (for structures living on a
hyperplane of R^8) the ambient normal directions.  The orientation is the
one canonically determined by phi itself: the metric-recovery formula
<u, v> = [i_u(phi) ^ i_v(phi) ^ phi] / 6 mu returns the Euclidean inner
product exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exterior import (
    ExteriorError,
    KForm,
    NotTangent,
    Q,
    Vector,
    VectorValuedForm,
    contract,
    eval_form,
    flat,
    gram,
    hodge,
    inner,
    linearly_independent,
    mu,
    sharp,
    star_complement,
    wedge,
)
from .frames import complete_frame, rand_unit, rand_vector
from .ledger import IdentitySuite, SignLedger
from .report import CheckResult

PHI0_BLADES = (
    ((1, 2, 3), 1),
    ((1, 4, 5), 1),
    ((1, 6, 7), 1),
    ((2, 4, 6), 1),
    ((2, 5, 7), -1),
    ((3, 4, 7), -1),
    ((3, 5, 6), -1),
)


@dataclass(frozen=True)
class G2Structure:
    """A calibration 3-form with cached derived data.

    ``normal`` is empty for the flat model on R^7; for a structure induced
    on a hyperplane of R^8 it holds the unit normal.  ``orient_sign`` is
    the sign of the canonical orientation relative to the contraction
    orientation (normal -| ambient mu); it is +1 for the flat model.
    """

    phi: KForm
    star_phi: KForm
    mu7: KForm
    normal: tuple[Vector, ...] = ()
    orient_sign: int = 1

    @property
    def n(self) -> int:
        return self.phi.n

    def star(self, a: KForm) -> KForm:
        """Hodge star of the 7-plane carrying phi, canonical orientation."""
        if not self.normal:
            return hodge(a)
        s = star_complement(a, self.normal)
        return s if self.orient_sign > 0 else -s

    def is_tangent(self, v: Vector) -> bool:
        return all(v.dot(g) == 0 for g in self.normal)

    def tangent_projection(self, v: Vector) -> Vector:
        for g in self.normal:
            v = v - g.scale(v.dot(g))
        return v

    def __hash__(self):
        h = getattr(self, "_h", None)
        if h is None:
            h = hash((self.phi, self.normal, self.orient_sign))
            object.__setattr__(self, "_h", h)
        return h


def phi0() -> G2Structure:
    """The flat-model calibration 3-form with cached dual and orientation."""
    phi = KForm(7, 3, {_mask(b): Q(c) for b, c in PHI0_BLADES})
    return G2Structure(phi=phi, star_phi=hodge(phi), mu7=mu(7))


def _mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


@lru_cache(maxsize=None)
def tangent_frame(g: G2Structure) -> tuple[Vector, ...]:
    """Exact orthonormal basis of the 7-plane carrying the structure."""
    if not g.normal:
        return tuple(Vector.basis(7, i) for i in range(1, 8))
    return tuple(complete_frame(list(g.normal)))


def tangent_unit(rng: random.Random, g: G2Structure, lim: int = 4) -> Vector:
    """Random exact unit vector tangent to the structure's 7-plane."""
    coeffs = rand_unit(rng, 7, lim)
    frame = tangent_frame(g)
    out = Vector.zero(g.n)
    for c, f in zip(coeffs.a, frame):
        out = out + f.scale(c)
    return out


def tangent_vector(rng: random.Random, g: G2Structure, lim: int = 5) -> Vector:
    v = rand_vector(rng, g.n, lim)
    return g.tangent_projection(v)


def tangent_form(rng: random.Random, g: G2Structure, k: int, terms: int = 3) -> KForm:
    """Random rational k-form tangent to the structure's 7-plane."""
    from .frames import rand_rational

    frame = tangent_frame(g)
    out = KForm(g.n, k)
    for _ in range(terms):
        picks = rng.sample(range(7), k)
        blade = flat(frame[picks[0]])
        for p in picks[1:]:
            blade = wedge(blade, flat(frame[p]))
        out = out + blade.scale(rand_rational(rng))
    return out


def metric_from_phi(g: G2Structure, u: Vector, v: Vector):
    """Recover the inner product from phi alone (tangential metric).

    Computes [i_u(phi) ^ i_v(phi) ^ phi] / 6 mu exactly: the 7-form on the
    left is a rational multiple of the orientation form, and the multiple
    is the metric value.
    """
    lhs = wedge(wedge(contract(u, g.phi), contract(v, g.phi)), g.phi)
    if lhs.is_zero():
        return Q(0)
    m0, v0 = next(iter(g.mu7.c.items()))
    r = lhs.c.get(m0, Q(0)) / (6 * v0)
    if lhs != g.mu7.scale(6 * r):
        raise ExteriorError("metric form is not proportional to the orientation")
    return r


def cross_of(g: G2Structure, u: Vector, v: Vector) -> Vector:
    """The cross product determined by phi: <u x v, w> = phi(u, v, w)."""
    return sharp(contract(v, contract(u, g.phi)))


@lru_cache(maxsize=None)
def psi_of(g: G2Structure) -> VectorValuedForm:
    """The cross product packaged as a tangent-valued 2-form.

    Component i is e_i -| phi, so that <psi(u, v), w> = phi(u, v, w).
    """
    n = g.n
    return VectorValuedForm(
        [contract(Vector.basis(n, i), g.phi) for i in range(1, n + 1)]
    )


@lru_cache(maxsize=None)
def chi_of(g: G2Structure) -> VectorValuedForm:
    """The tangent-valued 3-form pairing with the dual 4-form.

    <chi(u, v, w), z> = (*phi)(u, v, w, z) with z in the last slot; under
    the engine's first-slot contraction this makes component i equal to
    -(e_i -| *phi).
    """
    n = g.n
    return VectorValuedForm(
        [-contract(Vector.basis(n, i), g.star_phi) for i in range(1, n + 1)]
    )


def is_associative(g: G2Structure, p: Sequence[Vector]) -> bool:
    """True iff span(p) is an associative 3-plane.

    Primary criterion: chi vanishes on the plane.  Cross-check:
    phi(p)^2 equals the Gram determinant (phi restricts to +-volume).
    The two are equivalent and both are computed.
    """
    if len(p) != 3:
        raise ExteriorError("associative test needs 3 vectors")
    for v in p:
        if not g.is_tangent(v):
            raise NotTangent("plane is not tangent to the structure")
    if not linearly_independent(p):
        raise ExteriorError("degenerate span")
    chi_val = chi_of(g).apply(p)
    phi_val = eval_form(g.phi, p)
    chi_vanishes = chi_val.is_zero()
    vol_match = phi_val * phi_val == gram(p)
    if chi_vanishes != vol_match:
        raise AssertionError("chi-vanishing and volume criteria disagree")
    return chi_vanishes


def is_coassociative(g: G2Structure, q: Sequence[Vector]) -> bool:
    """True iff phi restricts to zero on the 4-plane span(q)."""
    if len(q) != 4:
        raise ExteriorError("coassociative test needs 4 vectors")
    for v in q:
        if not g.is_tangent(v):
            raise NotTangent("plane is not tangent to the structure")
    if not linearly_independent(q):
        raise ExteriorError("degenerate span")
    from itertools import combinations

    return all(
        eval_form(g.phi, [q[i] for i in tri]) == 0
        for tri in combinations(range(4), 3)
    )


@dataclass(frozen=True)
class SplitEV:
    """Orthogonal splitting of the 7-plane into an associative 3-plane E
    and a complementary coassociative 4-plane V, sourced from a 2-plane."""

    e: tuple[Vector, Vector, Vector]
    v: tuple[Vector, Vector, Vector, Vector]
    plane: tuple[Vector, Vector]


def split_from_2plane(g: G2Structure, u: Vector, v: Vector) -> SplitEV:
    """E = (u, v, u x v); V = deterministic exact orthonormal completion."""
    if g.normal:
        raise ExteriorError("splitting is implemented for the flat model")
    if u.norm2() != 1 or v.norm2() != 1 or u.dot(v) != 0:
        raise ExteriorError("2-plane frame must be exactly orthonormal")
    w = cross_of(g, u, v)
    e = (u, v, w)
    comp = complete_frame([u, v, w])
    if not is_associative(g, e):
        raise AssertionError("cross-completed plane failed the associative test")
    return SplitEV(e=e, v=tuple(comp), plane=(u, v))


def complex_structure_j(g: G2Structure, u: Vector, v: Vector, x: Vector) -> Vector:
    """The complex structure chi(u, v, .) on the orthogonal 4-plane.

    Requires (u, v) orthonormal and x orthogonal to span(u, v, u x v).
    The result squares to -1 and is an isometry on that 4-plane, and
    depends only on the oriented 2-plane spanned by u and v.
    """
    if u.norm2() != 1 or v.norm2() != 1 or u.dot(v) != 0:
        raise ExteriorError("need an exactly orthonormal pair")
    w = cross_of(g, u, v)
    if x.dot(u) != 0 or x.dot(v) != 0 or x.dot(w) != 0:
        raise NotTangent("vector is not orthogonal to the associative plane")
    return chi_of(g).apply([u, v, x])


def verify_g2_identities(
    g: G2Structure,
    samples: int = 200,
    seed: int = 7,
    ledger: SignLedger | None = None,
    tol: float | None = None,
) -> list[CheckResult]:
    """Exact sweep of the structural identities of a G2 calibration form.

    Every identity is checked on ``samples`` seeded rational inputs (plus
    golden coordinate cases).  Where the engine's frozen conventions flip
    a sign relative to the customary statement, the flip is recorded in
    the ledger and must be constant across samples.
    """
    if samples < 1:
        raise ExteriorError("samples must be >= 1")
    rng = random.Random(seed)
    ledger = ledger if ledger is not None else SignLedger()
    suite = IdentitySuite(tol=tol)
    results: list[CheckResult] = []
    n = g.n
    chi = chi_of(g)
    psi = psi_of(g)

    def run(name, statement, fn, count=samples, note=""):
        ok = True
        detail = ""
        for t in range(count):
            if not fn(t):
                ok = False
                detail = f"failed at sample {t}"
                break
        signs = suite.commit_prefix(ledger, name, note)
        results.append(
            CheckResult(
                name=name,
                statement=statement,
                samples=count,
                passed=ok and suite.all_ok(name),
                signs=signs,
                detail=detail,
            )
        )

    def rand_tangent_1form(rng):
        return flat(tangent_vector(rng, g))

    def f_norm3(t):
        beta = rand_tangent_1form(rng)
        return inner(wedge(g.phi, beta), wedge(g.phi, beta)) == 4 * inner(beta, beta)

    run(
        "wedge-norm-3form",
        "|phi ^ b|^2 = 4 |b|^2 for 1-forms b",
        f_norm3,
    )

    def f_norm4(t):
        beta = rand_tangent_1form(rng)
        w = wedge(g.star_phi, beta)
        return inner(w, w) == 3 * inner(beta, beta)

    run(
        "wedge-norm-4form",
        "|*phi ^ b|^2 = 3 |b|^2 for 1-forms b",
        f_norm4,
    )

    def f_selfdual(t):
        xi = tangent_vector(rng, g)
        lhs = wedge(contract(xi, g.phi), g.phi)
        return suite.check("contract-wedge-selfdual", lhs, [g.star(contract(xi, g.phi)).scale(2)])

    run(
        "contract-wedge-selfdual",
        "(x -| phi) ^ phi = 2 *(x -| phi)",
        f_selfdual,
    )

    def f_triple_star(t):
        beta = rand_tangent_1form(rng)
        lhs = g.star(wedge(g.star(wedge(beta, g.star_phi)), g.star_phi))
        return suite.check("triple-star", lhs, [beta.scale(3)])

    run(
        "triple-star",
        "*[ *(b ^ *phi) ^ *phi ] = 3 b",
        f_triple_star,
    )

    def f_double_cross(t):
        b = tangent_vector(rng, g)
        u = tangent_vector(rng, g)
        lhs = cross_of(g, b, cross_of(g, b, u))
        rhs = u.scale(-b.norm2()) + b.scale(b.dot(u))
        return lhs == rhs

    run(
        "double-cross",
        "b x (b x u) = -|b|^2 u + <b, u> b",
        f_double_cross,
    )

    def f_duality(t):
        xi = tangent_unit(rng, g)
        ok = True
        for k in range(1, 5):
            alpha = tangent_form(rng, g, k)
            lhs = g.star(contract(xi, alpha))
            rhs = wedge(flat(xi), g.star(alpha))
            if k % 2 == 0:
                rhs = -rhs
            ok = ok and suite.check(f"contract-star-duality-g{k}", lhs, [rhs])
        return ok

    run(
        "contract-star-duality",
        "*(x -| a) = (-1)^(k+1) x^# ^ *a, grades 1..4, unit x",
        f_duality,
    )

    def f_assoc(t):
        if t == 0:
            u, v, w = (Vector.basis(n, i) for i in (1, 2, 4))
            if g.normal:
                fr = tangent_frame(g)
                u, v, w = fr[0], fr[1], fr[3]
        else:
            u = tangent_vector(rng, g)
            v = tangent_vector(rng, g)
            w = tangent_vector(rng, g)
        phi_v = eval_form(g.phi, [u, v, w])
        chi_v = chi.apply([u, v, w])
        # |chi|^2 carries no 1/4 here: the quarter belongs to the doubled
        # (associator-normalized) companion field, 2 chi.
        return phi_v * phi_v + chi_v.norm2() == gram([u, v, w])

    run(
        "associator",
        "phi(u,v,w)^2 + |chi(u,v,w)|^2 = |u^v^w|^2  "
        "(equivalently phi^2 + |2 chi|^2 / 4 = |u^v^w|^2)",
        f_assoc,
        note="chi is the *phi-pairing field; the associator-normalized field is 2 chi",
    )

    def f_metric(t):
        u = tangent_vector(rng, g)
        v = tangent_vector(rng, g)
        return metric_from_phi(g, u, v) == u.dot(v)

    run(
        "metric-recovery",
        "[i_u(phi) ^ i_v(phi) ^ phi] / 6 mu = <u, v>",
        f_metric,
    )

    def f_cross_pairing(t):
        u = tangent_vector(rng, g)
        v = tangent_vector(rng, g)
        w = tangent_vector(rng, g)
        c = cross_of(g, u, v)
        return (
            eval_form(g.phi, [u, v, w]) == c.dot(w)
            and psi.apply([u, v]) == c
        )

    run(
        "cross-pairing",
        "phi(u,v,w) = <u x v, w> and psi(u,v) = u x v",
        f_cross_pairing,
    )

    def f_chi_normal(t):
        u = tangent_vector(rng, g)
        v = tangent_vector(rng, g)
        w = tangent_vector(rng, g)
        val = chi.apply([u, v, w])
        return val.dot(u) == 0 and val.dot(v) == 0 and val.dot(w) == 0

    run(
        "normal-valued-chi",
        "chi(u,v,w) is orthogonal to u, v, w",
        f_chi_normal,
    )

    def f_complex_j(t):
        if t == 0:
            u, v = Vector.basis(n, 1), Vector.basis(n, 2)
            if g.normal:
                fr = tangent_frame(g)
                u, v = fr[0], fr[1]
        else:
            from .frames import rand_orthonormal_frame

            if g.normal:
                fr = tangent_frame(g)
                from .frames import rand_rational, rotate_pair

                u, v = rotate_pair(fr[0], fr[1], rand_rational(rng))
            else:
                u, v = rand_orthonormal_frame(rng, 7, 2, reflections=2)
        w = cross_of(g, u, v)
        if not g.normal:
            basis = complete_frame([u, v, w])
        else:
            # hyperplane case: two independent directions in the 4-plane
            # orthogonal to span(u, v, w) keep the dense-fraction cost down
            fr = tangent_frame(g)
            basis = []
            for x in fr:
                y = x
                for z in (u, v, w):
                    y = y - z.scale(y.dot(z))
                if not y.is_zero() and linearly_independent([u, v, w] + basis + [y]):
                    basis.append(y)
                if len(basis) == 2:
                    break
        ok = True
        for x in basis:
            jx = complex_structure_j(g, u, v, x)
            jjx = complex_structure_j(g, u, v, jx)
            ok = ok and jjx == -x and jx.norm2() == x.norm2()
            ok = ok and jx.dot(u) == 0 and jx.dot(v) == 0 and jx.dot(w) == 0
        # plane dependence: a rational rotation of (u, v) gives the same map
        from .frames import rotate_pair

        u2, v2 = rotate_pair(u, v, Q(1, 3))
        x = basis[0]
        ok = ok and complex_structure_j(g, u2, v2, x) == complex_structure_j(g, u, v, x)
        return ok

    run(
        "normal-complex-structure",
        "j = chi(u, v, .) satisfies j^2 = -1, is an isometry on the "
        "4-plane orthogonal to span(u, v, u x v), and depends only on "
        "the oriented 2-plane",
        f_complex_j,
        count=max(2, samples // 4),
    )

    return results
