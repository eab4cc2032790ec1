"""Acceptance suite: every criterion at its stated sample count, exact.

Each test prints one PASS line on success (visible with ``pytest -s``);
any failure is a hard assertion.  Everything runs on the rational
backend with zero tolerance.
"""

import json
import pathlib
import random
from fractions import Fraction


from g2spin7.cli import main as cli_main
from g2spin7.cy import (
    cy_axioms_sweep,
    global_witness_forms,
    structure_transfer_check,
)
from g2spin7.dsl import parse_form, print_form
from g2spin7.exterior import (
    Vector,
    flat,
    hodge,
    star_complement,
    wedge,
)
from g2spin7.frames import rand_orthonormal_frame, rand_unit, rand_vector
from g2spin7.g2 import chi_of, phi0, psi_of, verify_g2_identities
from g2spin7.ledger import IdentitySuite, SignLedger
from g2spin7.octonion import (
    OCT_TO_REFERENCE_WITNESS,
    Octonion,
    cross_product_form,
    find_signed_permutation,
)
from g2spin7.spin7 import (
    descent_swap_check,
    double_induce,
    g2_transfer_check,
    induce_g2,
    induce_g2_checks,
    is_cayley,
    psi0,
    split_from_3frame,
    triality_checks,
    triality_table,
    triple_cross,
    upsilon_of,
)

from oracles import parse_blocks, parse_display

Q = Fraction
E = Vector.basis
GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "golden"


def canon(text: str, n: int) -> str:
    return print_form(parse_form(text, n))


def announce(num: int, desc: str):
    print(f"ACCEPTANCE {num:2d}: PASS  {desc}")


def cli_json(capsys, *argv) -> dict:
    rc = cli_main(list(argv) + ["--format", "json"])
    out = capsys.readouterr().out
    assert rc == 0, f"cli exit {rc}"
    return json.loads(out)


def test_criterion_01_worked_example_7d(capsys):
    blocks = parse_blocks(GOLDEN / "flat_torus_g2.txt")
    for block in blocks:
        payload = cli_json(capsys, "induce", "cy", "--xi", block["xi"])
        assert payload["omega"] == canon(block["omega"], 7)
        assert payload["im_omega"] == canon(block["im_omega"], 7)
        for row in block["j"]:
            src, _, img = row.partition("->")
            assert f"{src.strip()} -> {img.strip()}" in payload["j_table"]
    with capsys.disabled():
        announce(1, "worked 7d example: omega, J table, Im reproduced exactly "
                    "for both directions (exact canonical strings)")


def test_criterion_02_worked_example_8d(capsys):
    for block in parse_blocks(GOLDEN / "flat_torus_spin7.txt"):
        payload = cli_json(capsys, "induce", "g2", "--gamma", block["gamma"])
        assert payload["phi"] == canon(block["phi"], 8)
    with capsys.disabled():
        announce(2, "worked 8d example: both induced 3-form expansions "
                    "reproduced exactly")


def test_criterion_03_coordinate_displays(capsys):
    g = phi0()
    psi = psi_of(g)
    chi = chi_of(g)
    ups = upsilon_of(psi0())
    for i, text in parse_display(GOLDEN / "psi_display.txt").items():
        assert psi.component(i) == parse_form(text, 7), f"psi comp {i}"
    for i, text in parse_display(GOLDEN / "chi_display.txt").items():
        assert chi.component(i) == parse_form(text, 7), f"chi comp {i}"
    for i, text in parse_display(GOLDEN / "upsilon_display.txt").items():
        assert ups.component(i) == parse_form(text, 8), f"upsilon comp {i}"
    with capsys.disabled():
        announce(3, "chi, psi, upsilon coordinate displays match "
                    "component-by-component, exactly")


def test_criterion_04_identity_suite(capsys):
    ledger = SignLedger()
    results = verify_g2_identities(phi0(), samples=200, seed=7, ledger=ledger)
    failed = [r.name for r in results if not r.passed]
    assert not failed, failed
    assert all(r.samples >= 200 for r in results
               if r.name != "normal-complex-structure")
    # constancy of every ledger sign is enforced by the ledger itself;
    # re-assert the frozen values so drift in conventions is loud
    signs = ledger.as_dict()
    assert signs["contract-wedge-selfdual"] == 1
    assert signs["triple-star"] == 1
    assert all(signs[f"contract-star-duality-g{k}"] == 1 for k in (1, 2, 3, 4))
    with capsys.disabled():
        announce(4, "norm/contraction/double-cross/duality/associator/"
                    "metric/cross-pairing identities: 200 exact samples each, "
                    "all ledger signs constant")


def test_criterion_05_induced_cy_axioms(capsys):
    ledger = SignLedger()
    results = cy_axioms_sweep(phi0(), count=200, seed=8, ledger=ledger)
    failed = [r.name for r in results if not r.passed]
    assert not failed, failed
    assert all(r.samples == 200 for r in results)
    signs = ledger.as_dict()
    assert signs["cy-holomorphic-volume"] == -1  # Im^Re = -4 mu, constant
    assert signs["cy-star-re-im"] == 1
    with capsys.disabled():
        announce(5, "200 stereographic directions: J^2 = -1, compatibility, "
                    "splitting, omega^3 = 6 mu, star Re = Im, dual splitting, "
                    "|Im ^ Re| = 4 mu (sign ledgered) -- all exact")


def test_criterion_06_transfer_identities(capsys):
    g = phi0()
    s = psi0()
    rng = random.Random(66)
    suite7 = IdentitySuite()
    pairs7 = [(E(7, 7), E(7, 3)), (E(7, 1), E(7, 2))]
    pairs7 += [tuple(rand_orthonormal_frame(rng, 7, 2)) for _ in range(20)]
    for a, b in pairs7:
        assert structure_transfer_check(g, a, b, suite7)
        _, _, ok = global_witness_forms(g, a, b, suite7)
        assert ok
    suite8 = IdentitySuite()
    pairs8 = [(E(8, 4), E(8, 5)), (E(8, 1), E(8, 2))]
    pairs8 += [tuple(rand_orthonormal_frame(rng, 8, 2)) for _ in range(20)]
    for a, b in pairs8:
        assert g2_transfer_check(s, a, b, suite8)
        _, dd = double_induce(s, a, b, suite8)
        assert all(dd.values())
        sw = descent_swap_check(s, a, b, suite8)
        assert all(sw.values())
    triples = [(E(8, 4), E(8, 5), E(8, 6)), (E(8, 1), E(8, 2), E(8, 3))]
    triples += [tuple(rand_orthonormal_frame(rng, 8, 3)) for _ in range(20)]
    for a, b, c in triples:
        out = triality_checks(s, a, b, c, suite8)
        assert all(out.values()), [k for k, v in out.items() if not v]
    ledger = SignLedger()
    suite7.commit_all(ledger)
    suite8.commit_all(ledger)
    with capsys.disabled():
        announce(6, "pair/witness/descent/swap/triality transfer identities: "
                    "coordinate frames + 20 rotated orthonormal frames, exact, "
                    "signs constant")


def test_criterion_07_octonion_reconciliation(capsys):
    form = cross_product_form()
    phi = phi0().phi
    found = find_signed_permutation(form, phi)
    assert found is not None and found.pullback(form) == phi
    assert OCT_TO_REFERENCE_WITNESS.pullback(form) == phi
    rng = random.Random(77)
    for _ in range(200):
        x = Octonion([Q(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(8)])
        y = Octonion([Q(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(8)])
        assert (x * y).norm2() == x.norm2() * y.norm2()
    with capsys.disabled():
        announce(7, "octonion cross-product form reconciled with the "
                    "reference 3-form (stored witness re-verified); norm "
                    "multiplicativity on 200 samples")


def test_criterion_08_spin7_structure(capsys):
    s = psi0()
    assert hodge(s.psi4) == s.psi4
    rng = random.Random(88)
    for _ in range(500):
        u, v, w = (rand_vector(rng, 8) for _ in range(3))
        x = triple_cross(s, u, v, w)
        assert x.dot(u) == 0 and x.dot(v) == 0 and x.dot(w) == 0
    kd = split_from_3frame(s, E(8, 1), E(8, 2), E(8, 3))
    assert is_cayley(s, kd.k) and is_cayley(s, kd.d)
    suite = IdentitySuite()
    gammas = [E(8, 4), E(8, 5), E(8, 8)]
    gammas += [rand_unit(rng, 8) for _ in range(47)]
    for gamma in gammas:
        checks = induce_g2_checks(s, gamma, suite)
        assert all(checks.values()), (gamma, checks)
        # the exact engine-convention splitting of the 4-form
        gg = induce_g2(s, gamma)
        assert s.psi4 == wedge(flat(gamma), gg.phi) + star_complement(
            gg.phi, [gamma]
        )
    ledger = SignLedger()
    signs = suite.commit_all(ledger)
    assert signs["g2-induction-split/term1"] == -1
    assert signs["g2-induction-split/term2"] == 1
    with capsys.disabled():
        announce(8, "self-duality, 500 triple-cross orthogonality samples, "
                    "Cayley splitting, and the 4-form splitting for 50 unit "
                    "directions -- all exact")


def test_criterion_09_triality_table(capsys):
    s = psi0()
    kd = split_from_3frame(s, E(8, 1), E(8, 2), E(8, 3))
    table = triality_table(s, kd)
    cols = ("X_alpha_gamma", "X_alpha_beta", "X_beta_gamma", "X_beta_alpha")
    lines = []
    for tag, row in table.items():
        got = tuple(row[c] for c in cols)
        verdict = ("agrees with" if row["matches_reference_diagram"]
                   else "DEVIATES from")
        lines.append(f"{tag}: {got} ({verdict} the reference diagram)")
        assert row["matches_reference_diagram"], lines[-1]
    with capsys.disabled():
        announce(9, "2x4 mirror-type table emitted; " + "; ".join(lines))


def test_criterion_10_parser_roundtrip(capsys):
    from g2spin7.frames import rand_form

    rng = random.Random(99)
    for _ in range(500):
        n = rng.choice((7, 8))
        f = rand_form(rng, n, rng.randint(0, n), terms=rng.randint(0, 5))
        assert parse_form(print_form(f), n) == f
    phi_text = (GOLDEN / "phi0.txt").read_text().strip()
    assert parse_form(phi_text, 7) == phi0().phi
    psi_text = (GOLDEN / "psi0_spin7.txt").read_text().strip()
    assert parse_form(psi_text, 8) == psi0().psi4
    with capsys.disabled():
        announce(10, "500-form parser round trip; golden literals parse to "
                     "the constructed structures bit-exactly")
