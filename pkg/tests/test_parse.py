"""Grammar acceptance, precedence, canonical round-trips, positioned errors."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from krullkit.field import FieldSpec
from krullkit.parse import (
    FieldLiteralError,
    ParseError,
    UnknownVariableError,
    format_polynomial,
    parse_polynomial,
)
from krullkit.poly import RingSpec, random_polynomial

from test_poly import polys

Q = FieldSpec.rationals()
QR2 = RingSpec.default(Q, 2)
QR3 = RingSpec.default(Q, 3)
F5R2 = RingSpec.default(FieldSpec.prime(5), 2)


def P(text, ring=QR2):
    return parse_polynomial(text, ring)


class TestAcceptedForms:
    def test_atoms(self):
        assert P("0").is_zero
        assert P("7") == QR2.constant(7)
        assert P("-7") == QR2.constant(-7)
        assert P("3/4") == QR2.constant(Fraction(3, 4))
        assert P("t2") == QR2.gen(2)
        assert P("(t1)") == QR2.gen(1)

    def test_rationals_reduced_at_parse(self):
        assert P("2/4") == QR2.constant(Fraction(1, 2))
        assert P("6/3") == QR2.constant(2)
        assert P("-10/4") == QR2.constant(Fraction(-5, 2))

    def test_precedence(self):
        assert P("2*t1^2") == 2 * QR2.gen(1) ** 2
        assert P("t1 + 2*t2^3") == QR2.gen(1) + 2 * QR2.gen(2) ** 3
        assert P("-t1^2") == -(QR2.gen(1) ** 2)
        assert P("(t1 + t2)^2") == (QR2.gen(1) + QR2.gen(2)) ** 2
        assert P("2*(t1 + t2)") == 2 * QR2.gen(1) + 2 * QR2.gen(2)

    def test_leading_minus_binds_whole_term(self):
        assert P("-2*t1 + t2") == QR2.gen(2) - 2 * QR2.gen(1)
        assert P("-t1*t2") == -(QR2.gen(1) * QR2.gen(2))

    def test_signed_literal_after_star(self):
        assert P("2*-3") == QR2.constant(-6)
        assert P("2 * -3/2") == QR2.constant(-3)

    def test_whitespace(self):
        assert P("  t1   +\t2*t2\n") == P("t1 + 2*t2")

    def test_like_terms_collapse(self):
        assert P("t1 + t1") == P("2*t1")
        assert P("t1 - t1").is_zero
        assert P("1/2 + 1/3") == QR2.constant(Fraction(5, 6))

    def test_nested_parens(self):
        assert P("((t1))") == QR2.gen(1)
        assert P("((t1 + t2)^2 - t1^2)") == P("2*t1*t2 + t2^2")

    def test_custom_names(self):
        ring = RingSpec(Q, ("x", "y"))
        f = parse_polynomial("x^2*y - y", ring)
        assert f.degree_in(1) == 2
        with pytest.raises(UnknownVariableError):
            parse_polynomial("t1", ring)

    def test_prime_field_literals(self):
        assert parse_polynomial("1/2", F5R2) == F5R2.constant(3)
        assert parse_polynomial("7*t1", F5R2) == 2 * F5R2.gen(1)
        assert parse_polynomial("5*t1", F5R2).is_zero

    def test_exponent_cap_boundary(self):
        f = P("t1^2147483647")
        assert f.degree_in(1) == 2**31 - 1


class TestErrors:
    @pytest.mark.parametrize(
        "text,offset",
        [
            ("", 0),
            ("t1 +", 4),
            ("t1 + + t2", 5),
            ("2t1", 1),
            ("t1 t2", 3),
            ("t1 ^ t2", 5),
            ("t1^", 3),
            ("(t1", 3),
            ("t1)", 2),
            ("@", 0),
            ("t1 / 2", 3),
            ("1/0", 2),
            ("2 * -t1", 5),
            ("t1^-2", 3),
            ("t1**t2", 3),
        ],
    )
    def test_positions(self, text, offset):
        with pytest.raises(ParseError) as exc_info:
            P(text)
        assert exc_info.value.offset == offset

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError) as exc_info:
            P("t1 + t9")
        err = exc_info.value
        assert err.offset == 5
        assert err.name == "t9"
        assert err.identifier == "UnknownVariable"

    def test_field_literal_error(self):
        ring = RingSpec.default(FieldSpec.prime(2), 1)
        with pytest.raises(FieldLiteralError) as exc_info:
            parse_polynomial("1/2*t1", ring)
        assert exc_info.value.offset == 2
        with pytest.raises(FieldLiteralError):
            parse_polynomial("3/10", F5R2)

    def test_exponent_cap(self):
        with pytest.raises(ParseError) as exc_info:
            P("t1^2147483648")
        assert exc_info.value.offset == 3

    def test_byte_offsets_with_non_ascii(self):
        with pytest.raises(ParseError) as exc_info:
            P("t1 + é")
        assert exc_info.value.offset == 5
        with pytest.raises(ParseError) as exc_info:
            P("é + t1")
        assert exc_info.value.offset == 0

    def test_error_text_mentions_position(self):
        with pytest.raises(ParseError) as exc_info:
            P("t1 +")
        assert "byte 4" in str(exc_info.value)

    def test_double_minus_parses_as_nested_negation(self):
        # term-level minus then a signed literal
        assert P("--3") == QR2.constant(3)


class TestRoundTrip:
    CORPUS = [
        "0",
        "7",
        "-7/3",
        "t1",
        "t1^3 + 2*t1^2*t2 + 4*t2^3",
        "-t1 - 1/2*t2 + 3",
        "t1^2*t2^3 - t1*t2 + 1",
        "1/7*t1^3 + 5/7*t1^2*t2 + t1*t2^2 + t2^3",
    ]

    @pytest.mark.parametrize("text", CORPUS)
    def test_fixed_corpus_is_canonical(self, text):
        f = P(text)
        assert format_polynomial(f) == text
        assert P(format_polynomial(f)) == f

    @given(f=polys(QR2))
    @settings(max_examples=100)
    def test_rational_round_trip(self, f):
        assert parse_polynomial(format_polynomial(f), QR2) == f

    @given(f=polys(F5R2))
    @settings(max_examples=100)
    def test_prime_round_trip(self, f):
        assert parse_polynomial(format_polynomial(f), F5R2) == f

    def test_three_variable_round_trip(self):
        rng = random.Random(23)
        for _ in range(100):
            f = random_polynomial(rng, QR3, max_degree=6, max_terms=6)
            assert parse_polynomial(format_polynomial(f), QR3) == f
