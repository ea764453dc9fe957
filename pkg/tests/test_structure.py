"""Unit tests for semiauto.structure."""

import pytest

from semiauto.automata import core
from semiauto.automata import relations as rel
from semiauto.decisions import find_representative, is_completely_zero_simple, left_zeros, word_problem, zero
from semiauto.errors import (
    BoundExhausted,
    GeneratorNotInL,
    GeneratorsNotInjective,
    ImproperRepresentative,
    InfiniteDifference,
    MalformedStructure,
    NotOnto,
)
from semiauto.oracle import from_cayley, trivial_semigroup
from semiauto.structure import (
    GeneratorAssignment,
    InterpretedAutomaticStructure,
    PreAutomaticStructure,
    adjoin_zero,
    embedded_assignment,
    find_assignment,
    fresh_symbol,
    interpret,
    multiplier,
    right_trans_equiv,
    sanity_report,
    sanity_validate,
    to_cross_section,
    with_representatives,
)
from semiauto.utils import STATUS_ERROR, STATUS_WARN

AB = ("a", "b")


def one_element_with_two_words():
    """{a} with both a and aa as representatives."""
    language = core.from_words(("a",), [("a",), ("a", "a")])
    everything = rel.product_relation(language, language)
    structure = PreAutomaticStructure(("a",), language, everything, {"a": everything})
    return interpret(structure)


@pytest.mark.unit
class TestSanity:
    def test_free_semigroup_is_clean(self, free_ab):
        assert sanity_validate(free_ab) == []

    def test_report_lists_every_check(self, free_ab):
        report = sanity_report(free_ab)
        keys = [result.key for result in report]
        assert "containment:=" in keys
        assert "totality:a" in keys and "compatibility-right:b" in keys
        assert len(keys) == len(set(keys))

    def test_searched_assignment_is_a_warning(self, left_zero_xy):
        searched = interpret(left_zero_xy.structure, find_assignment(left_zero_xy))
        warnings = [result for result in sanity_report(searched) if result.status == STATUS_WARN]
        assert [result.key for result in warnings] == ["assignment"]
        assert "left reductive" in warnings[0].detail
        assert sanity_validate(searched) == []
        assert all(result.key != "assignment" for result in sanity_report(left_zero_xy))

    def test_containment_failure_is_named(self):
        language = core.nonempty_words(AB)
        loose = rel.right_append(core.universal(AB), "a")
        structure = PreAutomaticStructure(
            AB, language, rel.diagonal(language), {"a": loose, "b": rel.right_append(language, "b")}
        )
        failed = sanity_validate(structure)
        keys = [result.key for result in failed]
        assert "containment:a" in keys
        # ε has a product with a but is not a representative
        assert "totality:a" in keys
        assert all(key.endswith(":a") for key in keys)
        assert all(result.status == STATUS_ERROR for result in failed)

    def test_cayley_structures_are_clean(self, c2, semilattice_ez, left_zero_xy, band_2x2, brandt):
        for structure in (c2, semilattice_ez, left_zero_xy, band_2x2, brandt):
            assert sanity_validate(structure) == []

    def test_bicyclic_is_clean(self, bicyclic):
        assert sanity_validate(bicyclic) == []


@pytest.mark.unit
class TestStructureInvariants:
    def test_multiplier_lists_must_match_generators(self):
        language = core.nonempty_words(AB)
        with pytest.raises(MalformedStructure) as exc_info:
            PreAutomaticStructure(AB, language, rel.diagonal(language), {"a": rel.right_append(language, "a")})
        assert exc_info.value.invariant == "multipliers"

    def test_assignment_must_land_in_language(self, free_ab):
        with pytest.raises(MalformedStructure):
            InterpretedAutomaticStructure(free_ab.structure, GeneratorAssignment({"a": (), "b": ("b",)}))

    def test_uniqueness_flag_is_checked(self):
        structure = one_element_with_two_words().structure
        with pytest.raises(MalformedStructure):
            InterpretedAutomaticStructure(structure, GeneratorAssignment({"a": ("a",)}), has_uniqueness=True)


@pytest.mark.unit
class TestMultipliers:
    def test_empty_word_gives_equality(self, free_ab):
        assert multiplier(free_ab, ()) is free_ab.equality

    def test_free_word_multiplier(self, free_ab):
        relation = multiplier(free_ab, ("a", "b"))
        assert (("b",), ("b", "a", "b")) in relation
        assert (("b",), ("b", "a")) not in relation

    def test_bicyclic_pq_is_identity(self, bicyclic):
        assert rel.relations_equal(multiplier(bicyclic, ("p", "q")), bicyclic.equality)

    def test_unknown_generator(self, free_ab):
        with pytest.raises(MalformedStructure):
            multiplier(free_ab, ("c",))

    def test_multiplier_is_a_composition(self, c2, band_2x2):
        for structure in (c2, band_2x2):
            names = structure.generators
            words = [(x,) for x in names] + [(x, y) for x in names for y in names[:2]]
            for u in words[:4]:
                for v in words[:4]:
                    composed = rel.compose(multiplier(structure, u), multiplier(structure, v))
                    assert rel.relations_equal(multiplier(structure, u + v), composed)

    def test_right_translational_equivalence(self, left_zero_xy, free_ab):
        assert right_trans_equiv(left_zero_xy, ("x",), ("y",)) is True
        assert right_trans_equiv(free_ab, ("a",), ("b",)) is False
        assert right_trans_equiv(free_ab, ("a", "b"), ("a", "b")) is True


@pytest.mark.unit
class TestAssignments:
    def test_free_semigroup(self, free_ab):
        assert find_assignment(free_ab).as_dict() == {"a": ("a",), "b": ("b",)}

    def test_bicyclic(self, bicyclic):
        assert find_assignment(bicyclic).as_dict() == {"q": ("q",), "p": ("p",)}

    def test_left_zero_semigroup_gets_a_wrong_assignment(self, left_zero_xy):
        assignment = find_assignment(left_zero_xy)
        assert assignment["x"] == ("x",)
        assert assignment["y"] == ("x",)

    def test_search_bound_runs_out(self, free_ab):
        with pytest.raises(BoundExhausted) as exc_info:
            find_assignment(free_ab, bound=1)
        assert exc_info.value.bound == 1
        assert "'b'" in exc_info.value.target

    def test_embedded(self, free_ab, c2):
        assert embedded_assignment(free_ab).as_dict() == {"a": ("a",), "b": ("b",)}
        assert embedded_assignment(c2)["g"] == ("g",)

    def test_embedded_needs_letters_in_language(self):
        language = core.from_words(AB, [("a", "a"), ("b",)])
        empty = rel.empty_relation(AB)
        structure = PreAutomaticStructure(AB, language, empty, {"a": empty, "b": empty})
        with pytest.raises(GeneratorNotInL) as exc_info:
            embedded_assignment(structure)
        assert exc_info.value.generator == "a"


@pytest.mark.unit
class TestWithRepresentatives:
    def test_same_language_is_unchanged(self, bicyclic):
        result = with_representatives(bicyclic, bicyclic.rep_lang)
        assert rel.relations_equal(result.equality, bicyclic.equality)
        for name in bicyclic.generators:
            assert rel.relations_equal(result.multipliers[name], bicyclic.multipliers[name])

    def test_empty_word_is_not_a_semigroup_representative(self, free_ab):
        language = core.union(free_ab.rep_lang, core.from_word(AB, ()))
        with pytest.raises(ImproperRepresentative):
            with_representatives(free_ab, language)

    def test_infinite_difference(self, semilattice_ez):
        names = semilattice_ez.generators
        with pytest.raises(InfiniteDifference):
            with_representatives(semilattice_ez, core.nonempty_words(names))

    def test_every_element_needs_a_representative(self, semilattice_ez):
        names = semilattice_ez.generators
        with pytest.raises(NotOnto) as exc_info:
            with_representatives(semilattice_ez, core.from_words(names, [("e",)]))
        assert exc_info.value.word == ("z",)

    def test_extra_word_joins_its_class(self, semilattice_ez):
        names = semilattice_ez.generators
        language = core.from_words(names, [("e",), ("z",), ("e", "e")])
        result = with_representatives(semilattice_ez, language)
        assert core.contains(result.rep_lang, ("e", "e"))
        assert (("e", "e"), ("e",)) in result.equality
        assert word_problem(result, ("e", "e"), ("e",))
        assert not word_problem(result, ("e", "e"), ("z",))
        assert result.has_uniqueness is False

    def test_verdicts_survive_surgery(self, semilattice_ez):
        names = semilattice_ez.generators
        language = core.from_words(names, [("e",), ("z",), ("z", "e")])
        result = with_representatives(semilattice_ez, language)
        assert zero(result) == ("z",)
        assert core.enumerate_words(left_zeros(to_cross_section(result))) == [("z",)]


@pytest.mark.unit
class TestCrossSection:
    def test_cross_section_is_returned_as_is(self, bicyclic):
        assert to_cross_section(bicyclic) is bicyclic

    def test_keeps_shortlex_least_word(self):
        result = to_cross_section(one_element_with_two_words())
        assert core.enumerate_words(result.rep_lang) == [("a",)]
        assert rel.is_diagonal_on(result.equality, result.rep_lang)

    def test_redundant_words_are_removed(self, c2):
        names = c2.generators
        padded = with_representatives(c2, core.from_words(names, [("1",), ("g",), ("g", "g"), ("1", "g")]))
        result = to_cross_section(padded)
        assert result.has_uniqueness and result.generators_embedded
        assert rel.is_diagonal_on(result.equality, result.rep_lang)
        assert core.enumerate_words(result.rep_lang) == [("1",), ("g",)]
        assert not core.contains(result.rep_lang, ())
        assert word_problem(result, ("g", "g"), ("1",))

    def test_result_is_cached(self):
        interpreted = one_element_with_two_words()
        assert to_cross_section(interpreted) is to_cross_section(interpreted)

    def test_generators_of_one_element(self):
        language = core.from_words(AB, [("a",), ("b",)])
        everything = rel.product_relation(language, language)
        structure = PreAutomaticStructure(AB, language, everything, {"a": everything, "b": everything})
        with pytest.raises(GeneratorsNotInjective) as exc_info:
            to_cross_section(interpret(structure))
        assert (exc_info.value.first, exc_info.value.second) == ("a", "b")


@pytest.mark.unit
class TestAdjoinZero:
    def test_fresh_symbol(self):
        assert fresh_symbol(AB) == "z"
        assert fresh_symbol(("z", "z1")) == "z2"

    def test_zero_is_found(self, free_ab):
        result = adjoin_zero(free_ab)
        assert result.generators == ("a", "b", "z")
        assert sanity_validate(result) == []
        assert zero(result) == ("z",)
        assert core.enumerate_words(left_zeros(result)) == [("z",)]
        assert word_problem(result, ("a", "b"), ("a", "b"))
        assert not word_problem(result, ("a", "b"), ("b", "a"))

    def test_adjoining_twice(self):
        once = adjoin_zero(from_cayley(trivial_semigroup()))
        twice = adjoin_zero(once)
        assert twice.generators == ("e", "z", "z1")
        assert zero(twice) == ("z1",)
        assert word_problem(twice, ("z", "z1"), ("z1",))
        assert find_representative(twice, ("z", "e")) == ("z",)

    def test_rectangular_band_with_zero_is_completely_zero_simple(self, band_2x2):
        assert is_completely_zero_simple(adjoin_zero(band_2x2))


def padded_copy(interpreted):
    """Same semigroup with every two-letter product of the first two generators as extra representatives."""
    names = interpreted.generators
    extra = [(x, y) for x in names[:2] for y in names[:2]]
    language = core.union(interpreted.rep_lang, core.from_words(names, extra))
    return with_representatives(interpreted, language), extra


def check_cross_section_contract(interpreted):
    padded, extra = padded_copy(interpreted)
    result = to_cross_section(padded)
    assert rel.is_diagonal_on(result.equality, result.rep_lang)
    assert result.generators_embedded
    assert not core.contains(result.rep_lang, ())
    words = [(name,) for name in interpreted.generators] + extra
    for u in words:
        for v in words:
            assert word_problem(result, u, v) == word_problem(interpreted, u, v)


@pytest.mark.integration
def test_cross_section_contract_on_small_tables():
    from semiauto.oracle import named_tables, random_suite

    tables = list(named_tables().values()) + random_suite(seed=5, count=6, max_order=4)
    for table in tables:
        check_cross_section_contract(from_cayley(table))


@pytest.mark.slow
def test_cross_section_contract_on_suite():
    from semiauto.oracle import random_suite

    for table in random_suite(seed=11, count=50):
        check_cross_section_contract(from_cayley(table))
