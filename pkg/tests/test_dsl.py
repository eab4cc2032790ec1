"""Forms DSL: parser totality, canonical printing, round trips."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from g2spin7.dsl import ParseError, parse_form, parse_vector, print_form
from g2spin7.exterior import KForm, Vector
from g2spin7.frames import rand_form
from g2spin7.g2 import phi0
from g2spin7.spin7 import psi0

Q = Fraction


class TestParse:
    def test_reference_3form(self):
        text = "e123 + e145 + e167 + e246 - e257 - e347 - e356"
        assert parse_form(text, 7) == phi0().phi

    def test_rational_coefficients(self):
        got = parse_form("3/2 e16 - e25", 7)
        want = KForm.blade(7, (1, 6), Q(3, 2)) - KForm.blade(7, (2, 5))
        assert got == want

    def test_grade_mismatch(self):
        with pytest.raises(ParseError):
            parse_form("e12 + e345", 7)

    def test_repeated_index(self):
        with pytest.raises(ParseError) as err:
            parse_form("e121", 7)
        assert err.value.pos == 3

    def test_index_out_of_range(self):
        with pytest.raises(ParseError):
            parse_form("e8", 7)
        parse_form("e8", 8)

    def test_positions_reported(self):
        with pytest.raises(ParseError) as err:
            parse_form("e12 + ", 7)
        assert err.value.pos == 6

    def test_caret_and_juxtaposition(self):
        assert parse_form("e1 ^ e2 ^ e3", 7) == KForm.blade(7, (1, 2, 3))
        assert parse_form("e1 e2 e3", 7) == KForm.blade(7, (1, 2, 3))
        assert parse_form("e13", 7) == parse_form("e1^e3", 7)

    def test_parentheses_product(self):
        got = parse_form("(e12 - e34)(e56 - e78)", 8)
        want = (
            KForm.blade(8, (1, 2, 5, 6)) - KForm.blade(8, (1, 2, 7, 8))
            - KForm.blade(8, (3, 4, 5, 6)) + KForm.blade(8, (3, 4, 7, 8))
        )
        assert got == want

    def test_unary_minus(self):
        assert parse_form("-e124 + e135", 7) == (
            -KForm.blade(7, (1, 2, 4)) + KForm.blade(7, (1, 3, 5))
        )

    def test_zero(self):
        assert parse_form("0", 7).is_zero()

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_form("e12 )", 7)

    def test_bad_dimension(self):
        with pytest.raises(Exception):
            parse_form("e12", 9)


class TestParseVector:
    def test_basis(self):
        assert parse_vector("e7", 7) == Vector.basis(7, 7)

    def test_combination(self):
        v = parse_vector("3/5 e3 + 4/5 e5", 7)
        assert v == Vector([0, 0, Q(3, 5), 0, Q(4, 5), 0, 0])
        assert v.norm2() == 1

    def test_wrong_grade(self):
        with pytest.raises(ParseError):
            parse_vector("e12", 7)


class TestPrint:
    def test_reference_ordering(self):
        assert print_form(phi0().phi) == (
            "e123 + e145 + e167 + e246 - e257 - e347 - e356"
        )

    def test_zero(self):
        assert print_form(KForm(7, 2)) == "0"

    def test_coefficients(self):
        f = KForm.blade(7, (1, 6), Q(3, 2)) - KForm.blade(7, (2, 5))
        assert print_form(f) == "3/2 e16 - e25"
        assert parse_form(print_form(f), 7) == f

    def test_leading_negative(self):
        f = -KForm.blade(7, (1, 2, 4)) + KForm.blade(7, (1, 3, 5))
        assert print_form(f) == "-e124 + e135"


def test_roundtrip_500_random_forms():
    rng = random.Random(20)
    for _ in range(500):
        n = rng.choice((7, 8))
        k = rng.randint(0, n)
        f = rand_form(rng, n, k, terms=rng.randint(0, 5))
        assert parse_form(print_form(f), n) == f


def test_golden_literals_parse_to_constructed_structures():
    import pathlib

    golden = pathlib.Path(__file__).resolve().parent.parent / "golden"
    phi_text = (golden / "phi0.txt").read_text().strip()
    assert parse_form(phi_text, 7) == phi0().phi
    psi_text = (golden / "psi0_spin7.txt").read_text().strip()
    assert parse_form(psi_text, 8) == psi0().psi4


@st.composite
def small_forms(draw):
    n = draw(st.sampled_from((7, 8)))
    k = draw(st.integers(1, 4))
    nterms = draw(st.integers(0, 4))
    f = KForm(n, k)
    for _ in range(nterms):
        idx = tuple(sorted(draw(
            st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True)
        )))
        coeff = draw(st.fractions(min_value=-50, max_value=50, max_denominator=9))
        f = f + KForm.blade(n, idx, coeff)
    return n, f


@settings(max_examples=120, deadline=None, derandomize=True)
@given(small_forms())
def test_roundtrip_property(nf):
    n, f = nf
    assert parse_form(print_form(f), n) == f
