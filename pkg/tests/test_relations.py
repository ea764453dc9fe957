"""Unit tests for semiauto.automata.relations."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiauto.automata import core
from semiauto.automata import relations as rel
from semiauto.automata.core import FiniteAutomaton
from semiauto.automata.relations import PAD, SynchronousAutomaton
from semiauto.errors import AlphabetMismatch, InvalidPadding, MalformedAutomaton

AB = ("a", "b")


def words_upto(alphabet, length):
    for n in range(length + 1):
        yield from product(alphabet, repeat=n)


def pairs(base, relation_pairs):
    return rel.relation_from_pairs(base, relation_pairs)


@st.composite
def relations(draw, base=AB, max_states=6):
    alphabet = rel.pair_alphabet(base)
    count = draw(st.integers(1, max_states))
    states = st.integers(0, count - 1)
    transitions = draw(st.sets(st.tuples(states, st.sampled_from(alphabet), states), max_size=3 * count))
    initial = draw(st.sets(states, min_size=1, max_size=2))
    accepting = draw(st.sets(states, max_size=count))
    machine = FiniteAutomaton(alphabet, range(count), initial, accepting, transitions)
    return SynchronousAutomaton.normalized(base, machine)


@pytest.mark.unit
class TestConvolution:
    def test_convolve_pads_shorter_word(self):
        assert rel.convolve(("a", "b"), ("b",)) == (("a", "b"), ("b", PAD))
        assert rel.convolve(("a",), ("a", "b", "c")) == (("a", "a"), (PAD, "b"), (PAD, "c"))

    def test_convolve_empty(self):
        assert rel.convolve((), ()) == ()

    def test_deconvolve(self):
        assert rel.deconvolve((("a", "b"), ("b", PAD))) == (("a", "b"), ("b",))
        assert rel.deconvolve(()) == ((), ())

    def test_deconvolve_rejects_letter_after_padding(self):
        with pytest.raises(InvalidPadding) as exc_info:
            rel.deconvolve((("a", PAD), ("b", "b")))
        assert exc_info.value.position == 1

    def test_deconvolve_rejects_double_padding(self):
        with pytest.raises(InvalidPadding):
            rel.deconvolve(((PAD, PAD),))

    def test_round_trip_to_length_six(self):
        words = list(words_upto(AB, 6))
        for u in words:
            for v in words:
                assert rel.deconvolve(rel.convolve(u, v)) == (u, v)

    def test_pair_alphabet_rejects_pad_symbol(self):
        with pytest.raises(MalformedAutomaton):
            rel.pair_alphabet(("a", PAD))


@pytest.mark.unit
class TestConstruction:
    def test_relation_from_pairs_is_oriented(self):
        relation = pairs(("q", "p"), [(("q",), ("q", "p"))])
        assert (("q",), ("q", "p")) in relation
        assert (("q", "p"), ("q",)) not in relation

    def test_finite_diagonal(self):
        xy = ("x", "y")
        language = core.from_words(xy, [("x",), ("y",)])
        expected = pairs(xy, [(("x",), ("x",)), (("y",), ("y",))])
        assert rel.relations_equal(rel.diagonal(language), expected)
        assert rel.relations_equal(rel.diagonal(core.empty_language(xy)), rel.empty_relation(xy))

    def test_product_relation(self):
        result = rel.product_relation(core.from_word(AB, ("a",)), core.from_words(AB, [("b",), ("b", "b")]))
        expected = pairs(AB, [(("a",), ("b",)), (("a",), ("b", "b"))])
        assert rel.relations_equal(result, expected)

    def test_right_append(self):
        relation = rel.right_append(core.nonempty_words(AB), "a")
        assert (("b", "b"), ("b", "b", "a")) in relation
        assert ((), ("a",)) not in relation

    def test_synchronous_automaton_checks_alphabet(self):
        with pytest.raises(AlphabetMismatch):
            SynchronousAutomaton(AB, core.universal(AB))


@pytest.mark.unit
class TestAlgebra:
    def test_compose(self):
        first = pairs(AB, [(("a",), ("a", "b"))])
        second = pairs(AB, [(("a", "b"), ("b",))])
        assert rel.relations_equal(rel.compose(first, second), pairs(AB, [(("a",), ("b",))]))

    def test_compose_with_diagonal_of_image(self):
        relation = rel.right_append(core.nonempty_words(AB), "b")
        identity = rel.diagonal(rel.project(relation, 2))
        assert rel.relations_equal(rel.compose(relation, identity), relation)

    def test_invert(self):
        relation = pairs(AB, [(("a",), ("a", "b"))])
        assert rel.relations_equal(rel.invert(relation), pairs(AB, [(("a", "b"), ("a",))]))
        language = core.nonempty_words(AB)
        assert rel.relations_equal(rel.invert(rel.diagonal(language)), rel.diagonal(language))

    def test_complement_is_disjoint_and_padded(self):
        relation = rel.right_append(core.nonempty_words(AB), "a")
        other = rel.complement(relation)
        assert core.is_empty(rel.intersect(relation, other).machine)
        assert core.is_subset(other.machine, rel.valid_padding(AB))

    def test_union_with_empty(self):
        relation = rel.right_append(core.nonempty_words(AB), "a")
        assert rel.relations_equal(rel.union(relation, rel.empty_relation(AB)), relation)

    def test_project(self):
        relation = pairs(AB, [(("a",), ("a", "b")), (("b",), ("b", "b"))])
        assert core.enumerate_words(rel.project(relation, 2)) == [("a", "b"), ("b", "b")]
        language = core.nonempty_words(AB)
        assert core.are_equivalent(rel.project(rel.diagonal(language), 1), language)

    def test_project_of_free_multiplier(self):
        language = core.nonempty_words(AB)
        times_a = core.concatenate(language, core.from_word(AB, ("a",)))
        projected = rel.project(rel.right_append(language, "a"), 2)
        assert core.are_equivalent(projected, times_a)
        assert not core.contains(projected, ("a",))
        assert core.enumerate_words(projected, max_length=2) == [("a", "a"), ("b", "a")]

    def test_project_rejects_bad_coordinate(self):
        with pytest.raises(ValueError):
            rel.project(rel.empty_relation(AB), 3)

    def test_image_and_preimage(self):
        relation = pairs(AB, [(("a",), ("a", "b"))])
        assert core.enumerate_words(rel.image(relation, ("a",))) == [("a", "b")]
        assert core.enumerate_words(rel.preimage(relation, ("a", "b"))) == [("a",)]
        assert core.is_empty(rel.image(relation, core.empty_language(AB)))

    def test_comparisons(self):
        relation = rel.right_append(core.nonempty_words(AB), "b")
        assert rel.relations_equal(relation, rel.invert(rel.invert(relation)))
        assert rel.is_subrelation(rel.empty_relation(AB), relation)

    def test_comparisons_ignore_invalid_paddings(self):
        diagonal = rel.diagonal(core.nonempty_words(AB))
        junk = core.from_word(rel.pair_alphabet(AB), ((PAD, "a"), ("a", PAD)))
        with_junk = SynchronousAutomaton(AB, core.union(diagonal.machine, junk))
        assert rel.relations_equal(diagonal, with_junk)
        assert rel.is_subrelation(with_junk, diagonal)
        assert rel.is_diagonal_on(with_junk, core.nonempty_words(AB))

    def test_free_right_multiplication_is_injective(self):
        language = core.nonempty_words(AB)
        relation = rel.right_append(language, "b")
        assert rel.is_diagonal_on(rel.compose(relation, rel.invert(relation)), language)

    def test_base_mismatch(self):
        with pytest.raises(AlphabetMismatch):
            rel.union(rel.empty_relation(AB), rel.empty_relation(("a",)))


@pytest.mark.unit
class TestSplice:
    def test_growing_replacement(self):
        prefixes = core.from_words(AB, [(), ("b",)])
        suffixes = core.from_words(AB, [(), ("a",), ("a", "b")])
        relation = rel.splice(prefixes, ("a",), ("b", "b", "b"), suffixes)
        expected = [
            (x + ("a",) + z, x + ("b", "b", "b") + z)
            for x in [(), ("b",)]
            for z in [(), ("a",), ("a", "b")]
        ]
        assert rel.relations_equal(relation, pairs(AB, expected))

    def test_shrinking_replacement(self):
        suffixes = core.universal(AB)
        relation = rel.splice(core.from_word(AB, ("a",)), ("b", "b", "b", "a"), (), suffixes)
        assert (("a", "b", "b", "b", "a", "a", "b"), ("a", "a", "b")) in relation
        assert (("a", "b", "b", "b", "a"), ("a",)) in relation
        assert (("a", "b", "b", "b", "a"), ("a", "a")) not in relation

    def test_equal_lengths_against_brute_force(self):
        language = core.nonempty_words(AB)
        relation = rel.splice(language, ("a", "b"), ("b", "a"), core.universal(AB))
        for u in words_upto(AB, 5):
            for v in words_upto(AB, 5):
                expected = any(
                    len(x) > 0 and u == x + ("a", "b") + u[len(x) + 2:] and v == x + ("b", "a") + u[len(x) + 2:]
                    for x in (u[:k] for k in range(1, len(u) - 1))
                )
                assert ((u, v) in relation) == expected


@pytest.mark.unit
class TestShortlexLess:
    def test_examples(self):
        less = rel.shortlex_less(AB)
        assert (("a",), ("b",)) in less
        assert (("b",), ("a", "a")) in less
        assert (("a",), ("a",)) not in less

    def test_strict_total_order(self):
        less = rel.shortlex_less(AB)
        words = list(words_upto(AB, 4))
        holds = {(u, v): (u, v) in less for u in words for v in words}
        for u in words:
            assert not holds[(u, u)]
            for v in words:
                if u != v:
                    assert holds[(u, v)] != holds[(v, u)]
        for u in words[:10]:
            for v in words:
                for w in words:
                    if holds[(u, v)] and holds[(v, w)]:
                        assert holds[(u, w)]


@pytest.mark.unit
class TestLaws:
    @settings(max_examples=100, deadline=None)
    @given(relations(), relations())
    def test_de_morgan(self, first, second):
        left = rel.complement(rel.union(first, second))
        right = rel.intersect(rel.complement(first), rel.complement(second))
        assert rel.relations_equal(left, right)

    @settings(max_examples=100, deadline=None)
    @given(relations())
    def test_invert_is_an_involution(self, relation):
        assert rel.relations_equal(rel.invert(rel.invert(relation)), relation)
        assert core.are_equivalent(rel.project(relation, 2), rel.project(rel.invert(relation), 1))

    @settings(max_examples=100, deadline=None)
    @given(relations(max_states=4), relations(max_states=4), relations(max_states=4))
    def test_compose_is_associative(self, first, second, third):
        left = rel.compose(rel.compose(first, second), third)
        right = rel.compose(first, rel.compose(second, third))
        assert rel.relations_equal(left, right)

    @settings(max_examples=50, deadline=None)
    @given(relations(max_states=4), relations(max_states=4))
    def test_invert_reverses_composition(self, first, second):
        left = rel.invert(rel.compose(first, second))
        right = rel.compose(rel.invert(second), rel.invert(first))
        assert rel.relations_equal(left, right)

    @settings(max_examples=50, deadline=None)
    @given(relations())
    def test_diagonal_is_identity_for_compose(self, relation):
        identity = rel.diagonal(core.universal(AB))
        assert rel.relations_equal(rel.compose(identity, relation), relation)
        assert rel.relations_equal(rel.compose(relation, identity), relation)

    @settings(max_examples=30, deadline=None)
    @given(relations(max_states=4), relations(max_states=4))
    def test_compose_matches_brute_force(self, first, second):
        words = list(words_upto(AB, 3))
        composed = rel.compose(first, second)
        for x in words:
            for z in words:
                expected = any((x, y) in first and (y, z) in second for y in words_upto(AB, 5))
                if expected:
                    assert (x, z) in composed
