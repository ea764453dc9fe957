"""Tests for semiauto.document."""

import json

import pytest

from semiauto.automata import core
from semiauto.automata import relations as rel
from semiauto.decisions import word_problem
from semiauto.document import (
    FORMAT_VERSION,
    automaton_from_dict,
    automaton_to_dict,
    dumps_structure,
    format_cayley,
    load_cayley,
    load_machine,
    load_structure,
    parse_cayley,
    parse_word,
    save_structure,
    structure_from_dict,
    structure_to_dict,
)
from semiauto.errors import DocumentError, NotAssociative
from semiauto.oracle import brandt_semigroup


@pytest.mark.unit
class TestParseWord:
    def test_empty(self):
        assert parse_word("", ("a",)) == ()
        assert parse_word("ε", ("a",)) == ()

    def test_characters(self):
        assert parse_word("pqp", ("q", "p")) == ("p", "q", "p")

    def test_dotted(self):
        assert parse_word("e11.e12", ("e11", "e12")) == ("e11", "e12")

    def test_whole_symbol(self):
        assert parse_word("e11", ("e11", "e12")) == ("e11",)

    def test_unknown_symbol(self):
        with pytest.raises(DocumentError) as exc_info:
            parse_word("ax", ("a",))
        assert exc_info.value.invariant == "word"


@pytest.mark.unit
class TestAutomata:
    def test_dict_is_compact_and_numbered(self):
        data = automaton_to_dict(core.from_word(("a", "b"), ("a",)))
        assert data["states"] == 2
        assert data["transitions"] == [[0, "a", 1]] or data["transitions"] == [[1, "a", 0]]

    def test_pair_symbols_come_back_as_tuples(self):
        relation = rel.right_append(core.nonempty_words(("a",)), "a")
        data = json.loads(json.dumps(automaton_to_dict(relation.machine)))
        machine = automaton_from_dict(data, rel.pair_alphabet(("a",)), "multipliers.a")
        assert rel.relations_equal(rel.SynchronousAutomaton(("a",), machine), relation)

    def test_unreadable_automaton(self):
        with pytest.raises(DocumentError) as exc_info:
            automaton_from_dict({"initial": [0]}, ("a",), "rep_lang")
        assert exc_info.value.invariant == "rep_lang"

    def test_bad_transition(self):
        with pytest.raises(DocumentError):
            automaton_from_dict({"states": 1, "transitions": [[0, "z", 0]]}, ("a",), "rep_lang")


@pytest.mark.unit
class TestStructures:
    def test_save_and_load(self, bicyclic, tmp_path):
        path = tmp_path / "bicyclic.json"
        save_structure(bicyclic, path)
        loaded = load_structure(path)
        assert loaded.generators == ("q", "p")
        assert loaded.monoid_with_epsilon and loaded.is_cross_section
        assert core.are_equivalent(loaded.rep_lang, bicyclic.rep_lang)
        assert word_problem(loaded, ("p", "q", "p"), ("p",))
        assert not list(tmp_path.glob("*.tmp"))

    def test_dumps_is_json(self, free_ab):
        data = json.loads(dumps_structure(free_ab))
        assert data["format_version"] == FORMAT_VERSION
        assert data["assignment"] == {"a": ["a"], "b": ["b"]}

    def test_flags_are_optional(self, free_ab):
        data = structure_to_dict(free_ab)
        del data["flags"]
        del data["assignment"]
        loaded = structure_from_dict(data)
        assert loaded.is_cross_section
        assert not loaded.monoid_with_epsilon

    def test_invalid_paddings_are_dropped_on_load(self, free_ab):
        data = structure_to_dict(free_ab)
        equality = data["equality"]
        start = equality["states"]
        equality["states"] = start + 3
        equality["initial"].append(start)
        equality["accepting"].append(start + 2)
        equality["transitions"] += [[start, ["$", "a"], start + 1], [start + 1, ["a", "$"], start + 2]]
        loaded = structure_from_dict(data)
        assert loaded.has_uniqueness
        assert not core.contains(loaded.equality.machine, (("$", "a"), ("a", "$")))
        assert rel.relations_equal(loaded.equality, free_ab.equality)
        assert word_problem(loaded, ("a", "b"), ("a", "b"))

    def test_wrong_version(self, free_ab):
        data = structure_to_dict(free_ab)
        data["format_version"] = 99
        with pytest.raises(DocumentError) as exc_info:
            structure_from_dict(data)
        assert exc_info.value.invariant == "format_version"

    def test_missing_multiplier(self, free_ab):
        data = structure_to_dict(free_ab)
        del data["multipliers"]["b"]
        with pytest.raises(DocumentError) as exc_info:
            structure_from_dict(data)
        assert exc_info.value.invariant == "multipliers"

    def test_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(DocumentError) as exc_info:
            load_structure(path)
        assert exc_info.value.invariant == "json"

    def test_generators_must_be_names(self):
        with pytest.raises(DocumentError) as exc_info:
            structure_from_dict({"format_version": FORMAT_VERSION, "generators": [1, 2]})
        assert exc_info.value.invariant == "generators"


@pytest.mark.unit
class TestCayleyText:
    def test_parse_with_names_and_comments(self):
        text = "# two-element semilattice\n2\n0 1\n1 1  # z absorbs\nnames: e z\n"
        t = parse_cayley(text)
        assert t.names == ("e", "z")
        assert t.product(0, 1) == 1

    def test_default_names(self):
        assert parse_cayley("1\n0\n").names == ("s0",)

    def test_format_then_parse(self):
        original = brandt_semigroup()
        again = parse_cayley(format_cayley(original))
        assert again.names == original.names
        assert (again.table == original.table).all()

    @pytest.mark.parametrize("text", ["", "2\n0 1\n", "2\n0 1\n1\n", "x\n", "1\n0\ncolour: red\n", "1\n0\nnames: a.b\n"])
    def test_malformed(self, text):
        with pytest.raises(DocumentError):
            parse_cayley(text)

    def test_non_associative_propagates(self):
        with pytest.raises(NotAssociative):
            parse_cayley("2\n1 0\n0 0\n")

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "c2.txt"
        path.write_text("2\n0 1\n1 0\nnames: 1 g\n")
        assert load_cayley(path).names == ("1", "g")


@pytest.mark.unit
class TestMachineFiles:
    def test_load(self, tmp_path):
        path = tmp_path / "one.tm"
        path.write_text("states: q0 qa\nalphabet: a\ninitial: q0\naccept: qa\nq0 a qa a R\n")
        assert load_machine(path).accepting == "qa"

    def test_errors_become_document_errors(self, tmp_path):
        path = tmp_path / "bad.tm"
        path.write_text("states: q0\n")
        with pytest.raises(DocumentError) as exc_info:
            load_machine(path)
        assert exc_info.value.invariant == "machine"
