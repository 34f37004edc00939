"""Tests for free-group words, the presentation format and Fox calculus."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repvar.errors import InvalidAbelianization, MissingAbelianization, ParseError
from repvar.linalg import Matrix
from repvar.presentation_parser import format_presentation, parse_presentation, parse_word, parse_word_list
from repvar.words import GroupRingElement, Word, commutator, fox_derivative, fox_images


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

TREFOIL_TEXT = "gens x, y; rel x^2 = y^3; ab x=3, y=2;"

X = Word.generator(0)
Y = Word.generator(1)

words = st.lists(
    st.tuples(st.integers(min_value=0, max_value=1), st.sampled_from([1, -1])), max_size=8
).map(lambda letters: Word(tuple(letters)))


def _make_letter_images():
    order = 12
    images = [Matrix.from_rows([[1, 1], [0, 1]], order), Matrix.from_rows([[1, 0], [2, 1]], order)]
    inverses = [m.inverse() for m in images]
    return images, inverses


def _evaluate(word: Word, images, inverses) -> Matrix:
    result = Matrix.identity(2, 12)
    for gen, sign in word.letters:
        result = result @ (images[gen] if sign > 0 else inverses[gen])
    return result


# ===========================================================================
# Words
# ===========================================================================

class TestWord:
    def test_free_reduction(self):
        assert Word(((0, 1), (1, 1), (1, -1), (0, -1))).is_identity()

    def test_inverse(self):
        w = X * Y ** 2
        assert (w * w.inverse()).is_identity()
        assert w.inverse() == Y ** -2 * X.inverse()

    def test_commutator(self):
        assert commutator(X, Y) == X * Y * X.inverse() * Y.inverse()

    def test_exponent_sum(self):
        w = X ** 3 * Y * X ** -1
        assert w.exponent_sum(0) == 2
        assert w.exponent_sum(1) == 1

    def test_substitute(self):
        assert (X * Y.inverse()).substitute([Y, X]) == Y * X.inverse()

    def test_bad_letter(self):
        with pytest.raises(ValueError):
            Word(((0, 2),))


# ===========================================================================
# Presentation format
# ===========================================================================

class TestParsePresentation:
    def test_trefoil(self):
        p = parse_presentation(TREFOIL_TEXT)
        assert p.generator_names == ("x", "y")
        assert p.relator_count == 1
        assert p.deficiency == 1
        assert p.relators[0] == X ** 2 * Y ** -3
        assert p.phi(X) == 3

    def test_relation_with_equals(self):
        p = parse_presentation("gens a, b; rel a b = b a;")
        assert p.relators[0] == commutator(Word.generator(0), Word.generator(1))

    def test_concatenated_generators(self):
        p = parse_presentation("gens t, a, b; rel tat^-1 = ab; ab t=1, a=0, b=0;")
        t, a, b = p.generator_words()
        assert p.relators[0] == t * a * t.inverse() * (a * b).inverse()

    def test_commutator_and_powers(self):
        p = parse_presentation("gens k, l; rel (k l)^4, [k, l];")
        k, l = p.generator_words()
        assert p.relators == ((k * l) ** 4, commutator(k, l))

    def test_free_group(self):
        p = parse_presentation("gens x; rel ;")
        assert p.relator_count == 0
        assert p.abelianization is None

    def test_invalid_abelianization(self):
        with pytest.raises(InvalidAbelianization) as excinfo:
            parse_presentation("gens x, y; rel x^2 = y^3; ab x=1, y=1;")
        assert excinfo.value.relator_index == 0
        assert excinfo.value.value == -1

    def test_missing_abelianization(self):
        p = parse_presentation("gens a, b; rel a^3, b^3;")
        with pytest.raises(MissingAbelianization):
            p.phi(Word.generator(0))

    def test_incomplete_abelianization(self):
        with pytest.raises(ParseError):
            parse_presentation("gens x, y; rel x^2 = y^3; ab x=3;")

    def test_duplicate_generator(self):
        with pytest.raises(ParseError):
            parse_presentation("gens x, x; rel ;")

    def test_reserved_name(self):
        with pytest.raises(ParseError):
            parse_presentation("gens ab; rel ;")

    def test_unknown_generator(self):
        with pytest.raises(ParseError):
            parse_presentation("gens x; rel z;")

    def test_round_trip(self):
        for text in (TREFOIL_TEXT, "gens k, l; rel l^3, k^3, (k l)^4;", "gens x; rel ;"):
            p = parse_presentation(text)
            assert parse_presentation(format_presentation(p)) == p


class TestParseWords:
    def test_word_list(self):
        p = parse_presentation(TREFOIL_TEXT)
        assert parse_word_list("x, y^-1, x y", p) == [X, Y.inverse(), X * Y]

    def test_identity_word(self):
        p = parse_presentation(TREFOIL_TEXT)
        assert parse_word("1", p).is_identity()

    def test_format_word(self):
        p = parse_presentation(TREFOIL_TEXT)
        assert p.format_word(X ** 2 * Y ** -3) == "x^2 y^-3"
        assert p.format_word(Word()) == "1"


# ===========================================================================
# Fox calculus
# ===========================================================================

class TestFoxDerivative:
    def test_conjugate(self):
        w = X * Y * X.inverse()
        expected = GroupRingElement({Word(): 1, w: -1})
        assert fox_derivative(w, 0) == expected

    def test_power(self):
        assert fox_derivative(X ** 3, 0) == GroupRingElement({Word(): 1, X: 1, X ** 2: 1})

    def test_absent_generator(self):
        assert fox_derivative(X ** 2, 1).is_zero()

    @given(words)
    @settings(max_examples=200, deadline=None)
    def test_augmentation_is_exponent_sum(self, w):
        for gen in (0, 1):
            assert fox_derivative(w, gen).augmentation() == w.exponent_sum(gen)

    @given(words)
    @settings(max_examples=200, deadline=None)
    def test_fundamental_formula(self, w):
        one = GroupRingElement.one()
        total = GroupRingElement()
        for gen in (0, 1):
            total = total + fox_derivative(w, gen) * (GroupRingElement.from_word(Word.generator(gen)) - one)
        assert total == GroupRingElement.from_word(w) - one

    @given(words, words)
    @settings(max_examples=200, deadline=None)
    def test_product_rule(self, u, v):
        for gen in (0, 1):
            expected = fox_derivative(u, gen) + GroupRingElement.from_word(u) * fox_derivative(v, gen)
            assert fox_derivative(u * v, gen) == expected

    @given(words)
    @settings(max_examples=200, deadline=None)
    def test_single_pass_matches_term_by_term(self, w):
        images, inverses = _make_letter_images()
        zero = Matrix.zeros(2, 2, 12)
        blocks = fox_images(
            w, 2, lambda gen, sign: images[gen] if sign > 0 else inverses[gen], Matrix.identity(2, 12)
        )
        for gen in (0, 1):
            expected = fox_derivative(w, gen).evaluate(lambda u: _evaluate(u, images, inverses), zero)
            assert (zero if blocks[gen] is None else blocks[gen]) == expected
