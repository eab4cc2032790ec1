"""The Spin(7) package on R^8 and its descent to G2 and Calabi-Yau data.

The self-dual calibration 4-form determines a triple cross product; every
unit direction gamma induces a G2 structure phi_gamma = gamma -| Psi on
the orthogonal 7-plane, and a second orthonormal direction then descends
to Calabi-Yau data on a 6-plane.  All of the transfer identities between
these descendants are verified exactly, with convention deltas recorded
as constant ledger signs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exterior import (
    ExteriorError,
    KForm,
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
    require_unit,
    restrict,
    restrict_frame,
    sharp,
    star_complement,
    wedge,
)
from .frames import (
    complete_frame,
    in_span,
    mat_vec,
    rand_unit,
    rand_vector,
    reflection_mapping,
)
from .g2 import G2Structure, SplitEV, metric_from_phi
from .cy import InducedCY, classify_mirror_type, induce_cy
from .ledger import IdentitySuite, SignLedger
from .report import CheckResult


@dataclass(frozen=True)
class Spin7Structure:
    """The calibration 4-form with its orientation."""

    psi4: KForm
    mu8: KForm

    @property
    def n(self) -> int:
        return 8

    def __hash__(self):
        return hash(self.psi4)


def _two_form(n, *blades) -> KForm:
    out = KForm(n, 2)
    for idx, c in blades:
        out = out + KForm.blade(n, idx, c)
    return out


@lru_cache(maxsize=None)
def psi0() -> Spin7Structure:
    """The flat-model self-dual 4-form, built from its 2-form factors."""
    e = lambda *idx: KForm.blade(8, idx)
    psi = (
        e(1, 2, 3, 4)
        + wedge(_two_form(8, ((1, 2), 1), ((3, 4), -1)), _two_form(8, ((5, 6), 1), ((7, 8), -1)))
        + wedge(_two_form(8, ((1, 3), 1), ((2, 4), 1)), _two_form(8, ((5, 7), 1), ((6, 8), 1)))
        + wedge(_two_form(8, ((1, 4), 1), ((2, 3), -1)), _two_form(8, ((5, 8), 1), ((6, 7), -1)))
        + e(5, 6, 7, 8)
    )
    if hodge(psi) != psi:
        raise AssertionError("calibration 4-form failed self-duality")
    if inner(psi, psi) != 14:
        raise AssertionError("calibration 4-form has the wrong norm")
    return Spin7Structure(psi4=psi, mu8=mu(8))


@lru_cache(maxsize=None)
def upsilon_of(s: Spin7Structure) -> VectorValuedForm:
    """The triple cross product as a tangent-valued 3-form.

    Component i is e_i -| Psi (first-slot contraction), matching the
    coordinate expansion of the flat model; relative to the pairing
    <Upsilon(u,v,w), z> = Psi(u,v,w,z) this carries a constant -1
    (recorded in the ledger by the verification sweep).
    """
    return VectorValuedForm(
        [contract(Vector.basis(8, i), s.psi4) for i in range(1, 9)]
    )


def triple_cross(s: Spin7Structure, u: Vector, v: Vector, w: Vector) -> Vector:
    """u x v x w, the vector pairing with Psi(u, v, w, .)."""
    return sharp(contract(w, contract(v, contract(u, s.psi4))))


def is_cayley(s: Spin7Structure, q: Sequence[Vector]) -> bool:
    """True iff Psi restricts to +-volume on the 4-plane span(q)."""
    if len(q) != 4:
        raise ExteriorError("Cayley test needs 4 vectors")
    if not linearly_independent(q):
        raise ExteriorError("degenerate span")
    val = eval_form(s.psi4, list(q))
    return val * val == gram(q)


@dataclass(frozen=True)
class SplitKD:
    """Orthogonal splitting of R^8 into two Cayley 4-planes."""

    k: tuple[Vector, Vector, Vector, Vector]
    d: tuple[Vector, Vector, Vector, Vector]
    frame: tuple[Vector, Vector, Vector]


def split_from_3frame(s: Spin7Structure, u: Vector, v: Vector, w: Vector) -> SplitKD:
    """K = (u, v, w, u x v x w); D = deterministic exact completion."""
    for a in (u, v, w):
        require_unit(a, "3-frame vector")
    if u.dot(v) != 0 or u.dot(w) != 0 or v.dot(w) != 0:
        raise ExteriorError("3-frame must be exactly orthonormal")
    x = triple_cross(s, u, v, w)
    if x.norm2() != 1:
        raise AssertionError("triple cross of an orthonormal frame is unit")
    k = (u, v, w, x)
    d = tuple(complete_frame(list(k)))
    if not (is_cayley(s, k) and is_cayley(s, d)):
        raise AssertionError("splitting factors failed the Cayley test")
    return SplitKD(k=k, d=d, frame=(u, v, w))


@lru_cache(maxsize=None)
def induce_g2(s: Spin7Structure, gamma: Vector) -> G2Structure:
    """The G2 structure gamma -| Psi on the 7-plane orthogonal to gamma.

    The structure's canonical orientation is the opposite of the
    contraction orientation gamma -| mu8 (a constant convention delta,
    verified by an exact metric probe at construction and recorded in the
    ledger by the verification sweep).
    """
    require_unit(gamma, "induction direction")
    phi_g = contract(gamma, s.psi4)
    star_contr = star_complement(phi_g, [gamma])
    g = G2Structure(
        phi=phi_g,
        star_phi=-star_contr,
        mu7=-contract(gamma, s.mu8),
        normal=(gamma,),
        orient_sign=-1,
    )
    if inner(phi_g, phi_g) != 7 or inner(g.star_phi, g.star_phi) != 7:
        raise AssertionError("induced 3-form has the wrong norm")
    t = _tangent_probe(gamma)
    if metric_from_phi(g, t, t) != t.norm2():
        raise AssertionError("induced structure failed the metric probe")
    return g


def _tangent_probe(gamma: Vector) -> Vector:
    for j in range(1, gamma.n + 1):
        t = Vector.basis(gamma.n, j) - gamma.scale(gamma.a[j - 1])
        if not t.is_zero():
            return t
    raise AssertionError("unreachable: gamma cannot project out every axis")


def induce_g2_checks(
    s: Spin7Structure, gamma: Vector, suite: IdentitySuite
) -> dict[str, bool]:
    """Exact checks tying the induced structure back to the 4-form."""
    g = induce_g2(s, gamma)
    gf = flat(gamma)
    out = {}
    out["g2-induction-dual"] = suite.check(
        "g2-induction-dual", g.phi, [hodge(wedge(s.psi4, gf))]
    )
    out["g2-induction-split"] = suite.check(
        "g2-induction-split",
        s.psi4,
        [wedge(g.phi, gf), star_complement(g.phi, [gamma])],
    )
    rng = random.Random(11)
    ok = True
    for _ in range(3):
        u = g.tangent_projection(rand_vector(rng, 8))
        v = g.tangent_projection(rand_vector(rng, 8))
        ok = ok and metric_from_phi(g, u, v) == u.dot(v)
    out["g2-induction-metric"] = ok
    return out


def double_induce(
    s: Spin7Structure, alpha: Vector, beta: Vector, suite: IdentitySuite
) -> tuple[InducedCY, dict[str, bool]]:
    """Descend twice: G2 on the alpha 7-plane, then CY via beta.

    The four structural identities tie every piece of the CY package to
    direct contractions/restrictions of the 4-form.
    """
    _orthonormal_pair(alpha, beta)
    g = induce_g2(s, alpha)
    c = induce_cy(g, beta)
    out = {}
    ok = True
    for j in range(1, 9):
        u = Vector.basis(8, j)
        ok = suite.check(
            "double-descent-j",
            flat(c.j(u)),
            [flat(triple_cross(s, u, beta, alpha))],
        ) and ok
    out["double-descent-j"] = ok
    out["double-descent-omega"] = suite.check(
        "double-descent-omega",
        c.omega,
        [contract(beta, contract(alpha, s.psi4))],
    )
    out["double-descent-re"] = suite.check(
        "double-descent-re",
        c.re_omega3,
        [restrict_frame(contract(alpha, s.psi4), [alpha, beta])],
    )
    out["double-descent-im"] = suite.check(
        "double-descent-im",
        c.im_omega3,
        [restrict_frame(contract(beta, s.psi4), [alpha, beta])],
    )
    return c, out


def descent_swap_check(
    s: Spin7Structure, alpha: Vector, beta: Vector, suite: IdentitySuite
) -> dict[str, bool]:
    """Swapping the two descent directions: antisymmetry of the package.

    The two CY packages live on the same 6-plane with opposite
    orientations; the symplectic forms are opposite and the real part of
    one is the (ledger-signed) imaginary part of the other.
    """
    c1, _ = double_induce(s, alpha, beta, suite)
    c2, _ = double_induce(s, beta, alpha, suite)
    out = {}
    out["descent-antisymmetry"] = suite.check(
        "descent-antisymmetry", c1.omega, [-c2.omega]
    )
    out["descent-re-im-swap"] = suite.check(
        "descent-re-im-swap", c1.re_omega3, [-c2.im_omega3]
    )
    out["descent-orientation-opposition"] = c1.mu6 == -c2.mu6
    return out


def triality_checks(
    s: Spin7Structure,
    alpha: Vector,
    beta: Vector,
    gamma: Vector,
    suite: IdentitySuite,
) -> dict[str, bool]:
    """The transfer identities between the four CY descendants.

    Everything is built globally from contractions of the 4-form; the
    6-plane stars are the frozen contraction-orientation stars, and the
    stated identities hold after restriction with constant ledger signs.
    """
    _orthonormal_pair(alpha, beta)
    _orthonormal_pair(alpha, gamma)
    _orthonormal_pair(beta, gamma)
    psi = s.psi4
    af, bf, gf = flat(alpha), flat(beta), flat(gamma)
    g_a = induce_g2(s, alpha)
    g_b = induce_g2(s, beta)
    c_ag = induce_cy(g_a, gamma)
    c_ab = induce_cy(g_a, beta)
    c_bg = induce_cy(g_b, gamma)

    s6_bg = lambda f: star_complement(f, [beta, gamma])
    s6_ab = lambda f: star_complement(f, [alpha, beta])
    rag = lambda f: restrict_frame(f, [alpha, gamma])
    i = contract

    out = {}
    out["global-expansion-star-omega"] = suite.check(
        "global-expansion-star-omega",
        i(alpha, s6_bg(c_bg.omega)),
        [
            i(alpha, psi),
            wedge(gf, i(alpha, i(gamma, psi))),
            wedge(bf, i(alpha, i(beta, psi))),
            -wedge(wedge(gf, bf), i(alpha, i(gamma, i(beta, psi)))),
        ],
    )
    out["global-expansion-im"] = suite.check(
        "global-expansion-im",
        c_bg.im_omega3,
        [-i(gamma, psi), -wedge(bf, i(gamma, i(beta, psi)))],
    )
    out["global-expansion-re"] = suite.check(
        "global-expansion-re",
        c_ag.re_omega3,
        [i(alpha, psi), -wedge(gf, i(gamma, i(alpha, psi)))],
    )
    out["triality-re"] = suite.check(
        "triality-re",
        c_ag.re_omega3,
        [rag(i(alpha, s6_bg(c_bg.omega))), rag(wedge(c_ab.omega, bf))],
    )
    out["triality-im"] = suite.check(
        "triality-im",
        c_ag.im_omega3,
        [rag(wedge(c_bg.omega, bf)), -rag(i(gamma, s6_ab(c_ab.omega)))],
    )
    out["triality-omega"] = suite.check(
        "triality-omega",
        c_ag.omega,
        [rag(i(alpha, c_bg.im_omega3)), rag(wedge(i(gamma, c_ab.omega), bf))],
    )
    out["cy-pair-transfer-re"] = suite.check(
        "cy-pair-transfer-re",
        c_ag.re_omega3,
        [
            rag(i(alpha, s6_bg(c_bg.omega))),
            -rag(wedge(i(alpha, c_bg.re_omega3), bf)),
        ],
    )
    out["cy-pair-transfer-im"] = suite.check(
        "cy-pair-transfer-im",
        c_ag.im_omega3,
        [rag(wedge(c_bg.omega, bf)), rag(c_bg.im_omega3)],
    )
    out["cy-pair-transfer-omega"] = suite.check(
        "cy-pair-transfer-omega",
        c_ag.omega,
        [rag(i(alpha, c_bg.im_omega3)), rag(wedge(i(alpha, c_bg.omega), bf))],
    )
    return out


def _orthonormal_pair(a: Vector, b: Vector):
    if a.norm2() != 1 or b.norm2() != 1 or a.dot(b) != 0:
        raise ExteriorError("needs an exactly orthonormal pair")


def g2_transfer_check(
    s: Spin7Structure, alpha: Vector, beta: Vector, suite: IdentitySuite
) -> bool:
    """One induced G2 structure rebuilt from the other.

    phi_alpha = -alpha -| (phi_beta ^ beta^# + star_beta phi_beta) on the
    alpha 7-plane, up to constant per-term ledger signs.
    """
    _orthonormal_pair(alpha, beta)
    g_a = induce_g2(s, alpha)
    g_b = induce_g2(s, beta)
    bf = flat(beta)
    t1 = restrict(-contract(alpha, wedge(g_b.phi, bf)), alpha)
    t2 = restrict(-contract(alpha, star_complement(g_b.phi, [beta])), alpha)
    return suite.check("g2-transfer", g_a.phi, [t1, t2])


SU_LABELS = {"lagrangian": "SU(3)", "complex": "SU(2)", "mixed": "mixed"}


def descendant_label(
    s: Spin7Structure, kd: SplitKD, a: Vector, b: Vector
) -> str:
    """Mirror-type label of the CY descendant on (a, b) given the splitting.

    The associative factor of the induced splitting on the a 7-plane is
    the intersection of a's Cayley factor with the 7-plane; the
    complementary factor is the other Cayley 4-plane.
    """
    in_k = in_span(a, kd.k)
    in_d = in_span(a, kd.d)
    if not (in_k or in_d):
        raise ExteriorError("first direction lies in neither Cayley factor")
    own, other = (kd.k, kd.d) if in_k else (kd.d, kd.k)
    g = induce_g2(s, a)
    h = reflection_mapping(a, own[0])
    e3 = tuple(mat_vec(h, p) for p in own[1:])
    split = SplitEV(e=e3, v=tuple(other), plane=(e3[0], e3[1]))
    return SU_LABELS[classify_mirror_type(g, split, b)]


def triality_table(
    s: Spin7Structure,
    kd: SplitKD,
    regime1: tuple[Vector, Vector, Vector] | None = None,
    regime2: tuple[Vector, Vector, Vector] | None = None,
) -> dict:
    """The 2 x 4 mirror-type table for the two frame-placement regimes.

    Row 1: alpha in K, beta and gamma in D.  Row 2: all three in K.
    Columns are the descendants on (alpha,gamma), (alpha,beta),
    (beta,gamma), (beta,alpha).
    """
    if regime1 is None:
        regime1 = (kd.k[0], kd.d[0], kd.d[1])
    if regime2 is None:
        regime2 = (kd.k[0], kd.k[1], kd.k[2])
    rows = {}
    for tag, (a, b, g) in (("row1", regime1), ("row2", regime2)):
        rows[tag] = {
            "frames": tag,
            "X_alpha_gamma": descendant_label(s, kd, a, g),
            "X_alpha_beta": descendant_label(s, kd, a, b),
            "X_beta_gamma": descendant_label(s, kd, b, g),
            "X_beta_alpha": descendant_label(s, kd, b, a),
        }
    expected = {
        "row1": ("SU(3)", "SU(3)", "SU(2)", "SU(3)"),
        "row2": ("SU(2)", "SU(2)", "SU(2)", "SU(2)"),
    }
    cols = ("X_alpha_gamma", "X_alpha_beta", "X_beta_gamma", "X_beta_alpha")
    for tag in rows:
        got = tuple(rows[tag][c] for c in cols)
        rows[tag]["matches_reference_diagram"] = got == expected[tag]
        rows[tag]["reference_diagram"] = dict(zip(cols, expected[tag]))
    return rows


# Frozen worked-example payloads (canonical DSL text) for the flat model.
WORKED_EXAMPLES_8D = (
    {"gamma": "e4",
     "phi": "-e123 - e158 + e167 - e257 - e268 + e356 - e378"},
    {"gamma": "e5",
     "phi": "e126 + e137 + e148 - e238 + e247 - e346 + e678"},
)


def worked_example_checks(s: Spin7Structure) -> list[CheckResult]:
    """Compare induced 3-forms against the frozen worked-example data."""
    from .dsl import parse_vector, print_form

    out = []
    for case in WORKED_EXAMPLES_8D:
        gamma = parse_vector(case["gamma"], 8)
        got = print_form(induce_g2(s, gamma).phi)
        out.append(
            CheckResult(
                name=f"worked-example-{case['gamma']}",
                statement="induced 3-form reproduced exactly "
                "(canonical strings)",
                samples=1,
                passed=got == case["phi"],
                expected=case["phi"],
                computed=got,
            )
        )
    return out


def verify_spin7(
    samples: int = 200,
    seed: int = 7,
    ledger: SignLedger | None = None,
    gamma_count: int = 50,
    tol: float | None = None,
    s: Spin7Structure | None = None,
) -> list[CheckResult]:
    """Full verification sweep of the 8-dimensional package."""
    if samples < 1:
        raise ExteriorError("samples must be >= 1")
    s = s if s is not None else psi0()
    rng = random.Random(seed)
    ledger = ledger if ledger is not None else SignLedger()
    suite = IdentitySuite(tol=tol)
    results: list[CheckResult] = []

    def add(name, statement, passed, count, signs=None, detail=""):
        results.append(
            CheckResult(
                name=name, statement=statement, samples=count,
                passed=passed, signs=signs or {}, detail=detail,
            )
        )

    add(
        "self-duality",
        "*Psi = Psi",
        hodge(s.psi4) == s.psi4,
        1,
    )
    add("calibration-norm", "|Psi|^2 = 14", inner(s.psi4, s.psi4) == 14, 1)

    ok = True
    detail = ""
    n_triple = max(samples, 500)
    for t in range(n_triple):
        u, v, w = (rand_vector(rng, 8) for _ in range(3))
        x = triple_cross(s, u, v, w)
        z = rand_vector(rng, 8)
        good = (
            x.dot(u) == 0
            and x.dot(v) == 0
            and x.dot(w) == 0
            and x.dot(z) == eval_form(s.psi4, [u, v, w, z])
            and triple_cross(s, u, u, v).is_zero()
        )
        if not good:
            ok, detail = False, f"failed at sample {t}"
            break
    add(
        "triple-cross",
        "u x v x w is orthogonal to u, v, w and pairs with Psi",
        ok,
        n_triple,
        detail=detail,
    )

    ups = upsilon_of(s)
    ok = True
    for t in range(samples):
        u, v, w = (rand_vector(rng, 8) for _ in range(3))
        val = ups.apply([u, v, w])
        good = suite.check(
            "triple-cross-form", flat(val), [flat(triple_cross(s, u, v, w))]
        )
        if not (good and val.dot(u) == 0 and val.dot(v) == 0 and val.dot(w) == 0):
            ok = False
            break
    add(
        "triple-cross-form",
        "the tangent-valued 3-form evaluates to the triple cross product "
        "up to a constant sign, and is orthogonal to its arguments",
        ok,
        samples,
        signs=suite.commit_prefix(
            ledger,
            "triple-cross-form",
            "components follow the coordinate display (first-slot "
            "contractions of Psi); the last-slot pairing flips the sign",
        ),
    )

    kd = split_from_3frame(
        s, Vector.basis(8, 1), Vector.basis(8, 2), Vector.basis(8, 3)
    )
    add(
        "cayley-splitting",
        "K = (u, v, w, u x v x w) and its complement are both Cayley",
        is_cayley(s, kd.k) and is_cayley(s, kd.d),
        1,
    )

    ok = True
    detail = ""
    gammas = [Vector.basis(8, 4), Vector.basis(8, 5), Vector.basis(8, 8)]
    gammas += [rand_unit(rng, 8) for _ in range(max(0, gamma_count - len(gammas)))]
    for idx, gamma in enumerate(gammas):
        try:
            checks = induce_g2_checks(s, gamma, suite)
        except AssertionError as exc:
            ok, detail = False, f"gamma {idx}: {exc}"
            break
        ledger.record(
            "g2-induction-orientation",
            -1,
            "canonical orientation of the induced 7-plane structure is "
            "minus the contraction orientation gamma -| mu8",
        )
        if not all(checks.values()):
            bad = [k for k, v in checks.items() if not v]
            ok, detail = False, f"gamma {idx}: {bad}"
            break
    signs = suite.commit_prefix(
        ledger,
        "g2-induction",
        "splitting stated as Psi = phi ^ gamma^# + star7 phi; the wedge "
        "term holds with the opposite sign under first-slot conventions",
    )
    add(
        "g2-induction",
        "phi_gamma = gamma -| Psi = *(Psi ^ gamma^#);  "
        "Psi = phi_gamma ^ gamma^# + star7 phi_gamma;  metric recovery",
        ok,
        len(gammas),
        signs=signs,
        detail=detail,
    )

    ok = True
    detail = ""
    for idx, gamma in enumerate(gammas):
        g = induce_g2(s, gamma)
        dec = star_complement(g.phi, [gamma])
        if s.psi4 != wedge(flat(gamma), g.phi) + dec:
            ok, detail = False, f"gamma {idx}"
            break
    add(
        "g2-induction-exact-split",
        "Psi = gamma^# ^ phi_gamma + star7(phi_gamma), exact in engine "
        "conventions",
        ok,
        len(gammas),
    )

    from .g2 import verify_g2_identities

    ok = True
    detail = ""
    total = 0
    per_gamma = max(2, samples // 100)
    for idx, gamma in enumerate(gammas):
        transplant = verify_g2_identities(
            induce_g2(s, gamma), samples=per_gamma,
            seed=seed + 1 + idx, ledger=ledger, tol=tol,
        )
        total += sum(r.samples for r in transplant)
        bad = [r.name for r in transplant if not r.passed]
        if bad:
            ok, detail = False, f"gamma {idx}: {bad}"
            break
    add(
        "g2-transplant",
        "the full 7-plane identity suite holds on every sampled induced "
        "structure",
        ok,
        total,
        detail=detail,
    )

    golden_pairs = [
        (Vector.basis(8, 4), Vector.basis(8, 5)),
        (Vector.basis(8, 1), Vector.basis(8, 2)),
    ]
    from .frames import rand_orthonormal_frame

    pair_count = max(4, min(20, samples // 10))
    pairs = golden_pairs + [
        tuple(rand_orthonormal_frame(rng, 8, 2)) for _ in range(pair_count)
    ]
    ok_t, ok_d, ok_s = True, True, True
    detail = ""
    for idx, (a, b) in enumerate(pairs):
        if not g2_transfer_check(s, a, b, suite):
            ok_t, detail = False, f"pair {idx}"
            break
        _, dd = double_induce(s, a, b, suite)
        if not all(dd.values()):
            ok_d, detail = False, f"pair {idx}"
            break
        sw = descent_swap_check(s, a, b, suite)
        if not all(sw.values()):
            ok_s, detail = False, f"pair {idx}"
            break
    add(
        "g2-transfer",
        "phi_alpha = -alpha -| (phi_beta ^ beta^# + star_beta phi_beta) "
        "on the alpha 7-plane",
        ok_t,
        len(pairs),
        signs=suite.commit_prefix(ledger, "g2-transfer"),
        detail=detail if not ok_t else "",
    )
    add(
        "double-descent",
        "J(u) = u x beta x alpha; omega = beta -| alpha -| Psi; "
        "Re = (alpha -| Psi)|;  Im = (beta -| Psi)|",
        ok_d,
        len(pairs),
        signs=suite.commit_prefix(ledger, "double-descent"),
        detail=detail if not ok_d else "",
    )
    add(
        "descent-swap",
        "omega_ab = -omega_ba and Re_ab = -Im_ba on the common 6-plane "
        "(oppositely oriented)",
        ok_s,
        len(pairs),
        signs=suite.commit_prefix(ledger, "descent"),
        detail=detail if not ok_s else "",
    )

    golden_triples = [
        (Vector.basis(8, 4), Vector.basis(8, 5), Vector.basis(8, 6)),
        (Vector.basis(8, 1), Vector.basis(8, 2), Vector.basis(8, 3)),
    ]
    triple_count = max(4, min(20, samples // 10))
    triples = golden_triples + [
        tuple(rand_orthonormal_frame(rng, 8, 3)) for _ in range(triple_count)
    ]
    ok = True
    detail = ""
    for idx, (a, b, c) in enumerate(triples):
        checks = triality_checks(s, a, b, c, suite)
        if not all(checks.values()):
            bad = [k for k, v in checks.items() if not v]
            ok, detail = False, f"triple {idx}: {bad}"
            break
    add(
        "triality",
        "the nine transfer identities between the four CY descendants of "
        "an orthonormal 3-frame",
        ok,
        len(triples),
        signs={
            **suite.commit_prefix(ledger, "global-expansion"),
            **suite.commit_prefix(ledger, "triality"),
            **suite.commit_prefix(ledger, "cy-pair-transfer"),
        },
        detail=detail,
    )

    table = triality_table(s, kd)
    add(
        "triality-table",
        "2 x 4 mirror-type labels for the two frame-placement regimes",
        all(r["matches_reference_diagram"] for r in table.values()),
        2,
        detail="; ".join(
            f"{tag}: " + ", ".join(r[c] for c in (
                "X_alpha_gamma", "X_alpha_beta", "X_beta_gamma", "X_beta_alpha"))
            for tag, r in table.items()
        ),
    )

    return results
