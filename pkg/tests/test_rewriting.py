"""Unit tests for semiauto.rewriting.system."""

from itertools import product

import pytest

from semiauto.automata import core
from semiauto.errors import MalformedStructure, StepBoundExceeded
from semiauto.rewriting import (
    Rule,
    ShortlexOrder,
    StringRewritingSystem,
    TerminationOrder,
    check_convergence,
    irr_automaton,
    normal_form,
    rewrite_steps,
)

QP = ("q", "p")


@pytest.fixture
def bicyclic_system():
    return StringRewritingSystem.from_pairs(QP, [(("p", "q"), ())])


@pytest.mark.unit
class TestRules:
    def test_empty_lhs_rejected(self):
        with pytest.raises(MalformedStructure):
            Rule((), ("a",))

    def test_symbols_must_be_in_alphabet(self):
        with pytest.raises(MalformedStructure):
            StringRewritingSystem.from_pairs(("a",), [(("a", "b"), ())])

    def test_str_shows_tag(self):
        assert str(Rule(("a", "b"), ("a",), "8")) == "(8) ab -> a"

    def test_rules_tagged(self):
        system = StringRewritingSystem(("a",), (Rule(("a", "a"), ("a",), "x"), Rule(("a", "a", "a"), (), "y")))
        assert [rule.tag for rule in system.rules_tagged("y")] == ["y"]
        assert system.max_lhs == 3


@pytest.mark.unit
class TestNormalForms:
    def test_bicyclic(self, bicyclic_system):
        assert normal_form(bicyclic_system, ("p", "q", "p")) == ("p",)
        assert normal_form(bicyclic_system, ("q", "p", "p", "q", "q")) == ("q",)

    def test_steps_are_leftmost(self, bicyclic_system):
        steps = list(rewrite_steps(bicyclic_system, ("p", "p", "q", "q")))
        assert [(word, position) for word, _, position in steps] == [(("p", "q"), 1), ((), 0)]

    def test_longest_lhs_wins_at_a_position(self):
        system = StringRewritingSystem.from_pairs(("a", "b", "c"), [(("a",), ("b",)), (("a", "b"), ("c",))])
        position, rule = system.find_redex(("a", "b"))
        assert position == 0 and rule.lhs == ("a", "b")
        assert normal_form(system, ("a", "b")) == ("c",)

    def test_step_bound(self):
        system = StringRewritingSystem.from_pairs(("a",), [(("a",), ("a", "a"))])
        with pytest.raises(StepBoundExceeded):
            normal_form(system, ("a",), step_bound=10)

    def test_unknown_symbol(self, bicyclic_system):
        with pytest.raises(MalformedStructure):
            normal_form(bicyclic_system, ("x",))

    def test_normal_forms_are_irreducible(self, bicyclic_system):
        irr = irr_automaton(bicyclic_system)
        for n in range(6):
            for word in product(QP, repeat=n):
                assert core.contains(irr, normal_form(bicyclic_system, word))


@pytest.mark.unit
class TestIrreducibleWords:
    def test_bicyclic_is_q_star_p_star(self, bicyclic_system):
        q_star = core.star(core.from_word(QP, ("q",)))
        p_star = core.star(core.from_word(QP, ("p",)))
        assert core.are_equivalent(irr_automaton(bicyclic_system), core.concatenate(q_star, p_star))

    def test_no_rules_gives_everything(self):
        system = StringRewritingSystem(("a", "b"), ())
        assert core.are_equivalent(irr_automaton(system), core.universal(("a", "b")))

    def test_agrees_with_is_irreducible(self):
        system = StringRewritingSystem.from_pairs(("a", "b"), [(("a", "b"), ("a",)), (("b", "b", "a"), ())])
        irr = irr_automaton(system)
        for n in range(6):
            for word in product(("a", "b"), repeat=n):
                assert core.contains(irr, word) == system.is_irreducible(word)


@pytest.mark.unit
class TestOrders:
    def test_termination_order(self):
        order = TerminationOrder()
        assert order.greater(("a", "b", "d"), ("a", "d", "b"))
        assert order.greater(("q", "a", "d"), ("bar:a", "q"))
        assert order.greater(("a", "d"), ("a", "a", "a"))
        assert not order.greater(("a", "d", "b"), ("a", "b", "d"))

    def test_termination_order_key(self):
        assert TerminationOrder().key(("a", "d", "b", "b", "d")) == (2, (1, 2, 0))

    def test_shortlex_order(self):
        order = ShortlexOrder(QP)
        assert order.greater(("p",), ("q",))
        assert order.greater(("q", "q"), ("p",))
        assert not order.greater((), ("q",))


@pytest.mark.unit
class TestConvergence:
    def test_bicyclic_system_is_convergent(self, bicyclic_system):
        report = check_convergence(bicyclic_system, ShortlexOrder(QP))
        assert report.convergent
        assert report.critical_pairs == ()

    def test_empty_system(self):
        report = check_convergence(StringRewritingSystem(("a",), ()), ShortlexOrder(("a",)))
        assert report.convergent

    def test_unresolved_critical_pairs(self):
        system = StringRewritingSystem.from_pairs(("a", "b"), [(("a", "b"), ("a",)), (("b", "a"), ("b",))])
        report = check_convergence(system, ShortlexOrder(("a", "b")))
        assert report.terminating
        assert not report.convergent
        assert {pair.word for pair in report.unresolved} == {("a", "b", "a"), ("b", "a", "b")}

    def test_increasing_rule_is_reported(self):
        system = StringRewritingSystem.from_pairs(("a", "b"), [(("a",), ("b", "b"))])
        report = check_convergence(system, ShortlexOrder(("a", "b")))
        assert not report.terminating
        assert report.increasing_rules == system.rules
