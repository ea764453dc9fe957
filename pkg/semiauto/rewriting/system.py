"""Finite string-rewriting systems: normal forms, irreducible words, convergence.

Rewriting is leftmost-outermost: the redex starting furthest left is
replaced, and among redexes starting at the same position the longest
left-hand side wins. For a convergent system the strategy does not affect
the normal form.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Protocol, Sequence, Tuple

from ..automata import core
from ..automata.core import FiniteAutomaton, Word
from ..config_types import typed_config
from ..errors import MalformedStructure, StepBoundExceeded
from ..utils import debug, format_word


@dataclass(frozen=True)
class Rule:
    """lhs -> rhs; `tag` names the schema a generated rule came from."""

    lhs: Word
    rhs: Word
    tag: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        if not self.lhs:
            raise MalformedStructure("rule", "left-hand sides must be nonempty")

    def __str__(self) -> str:
        label = f"({self.tag}) " if self.tag else ""
        return f"{label}{format_word(self.lhs)} -> {format_word(self.rhs)}"


@dataclass(frozen=True, eq=False)
class StringRewritingSystem:
    alphabet: Tuple[str, ...]
    rules: Tuple[Rule, ...]
    _by_first: Dict[str, List[Rule]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "rules", tuple(self.rules))
        symbols = set(self.alphabet)
        if len(symbols) != len(self.alphabet):
            raise MalformedStructure("alphabet", "a symbol is listed twice")
        index = defaultdict(list)
        for rule in self.rules:
            stray = [symbol for symbol in rule.lhs + rule.rhs if symbol not in symbols]
            if stray:
                raise MalformedStructure("rule", f"{rule} uses {stray[0]!r} outside the alphabet")
            index[rule.lhs[0]].append(rule)
        for candidates in index.values():
            candidates.sort(key=lambda rule: -len(rule.lhs))
        object.__setattr__(self, "_by_first", dict(index))

    @classmethod
    def from_pairs(
        cls, alphabet: Sequence[str], pairs: Sequence[Tuple[Sequence[str], Sequence[str]]]
    ) -> "StringRewritingSystem":
        return cls(tuple(alphabet), tuple(Rule(lhs, rhs) for lhs, rhs in pairs))

    @property
    def max_lhs(self) -> int:
        return max((len(rule.lhs) for rule in self.rules), default=0)

    def rules_tagged(self, tag: str) -> Tuple[Rule, ...]:
        return tuple(rule for rule in self.rules if rule.tag == tag)

    def find_redex(self, word: Sequence[str], start: int = 0) -> Optional[Tuple[int, Rule]]:
        """Leftmost redex at or after `start`, longest lhs first."""
        word = tuple(word)
        for position in range(start, len(word)):
            for rule in self._by_first.get(word[position], ()):
                end = position + len(rule.lhs)
                if word[position:end] == rule.lhs:
                    return position, rule
        return None

    def is_irreducible(self, word: Sequence[str]) -> bool:
        return self.find_redex(word) is None


def _check_word(system: StringRewritingSystem, word: Sequence[str]) -> Word:
    word = tuple(word)
    symbols = set(system.alphabet)
    for symbol in word:
        if symbol not in symbols:
            raise MalformedStructure("word", f"{symbol!r} is not in the alphabet")
    return word


def rewrite_steps(
    system: StringRewritingSystem, word: Sequence[str], step_bound: Optional[int] = None
) -> Iterator[Tuple[Word, Rule, int]]:
    """Yield (word after the step, rule, position) until the word is irreducible."""
    bound = typed_config().search.rewrite_step_bound if step_bound is None else step_bound
    current = _check_word(system, word)
    reach = system.max_lhs
    start = 0
    steps = 0
    while True:
        found = system.find_redex(current, start)
        if found is None:
            return
        if steps >= bound:
            raise StepBoundExceeded(bound, word)
        position, rule = found
        current = current[:position] + rule.rhs + current[position + len(rule.lhs):]
        steps += 1
        yield current, rule, position
        # no redex can start before this point: the prefix was already irreducible
        start = max(0, position - reach + 1)


def normal_form(system: StringRewritingSystem, word: Sequence[str], step_bound: Optional[int] = None) -> Word:
    """The irreducible descendant of `word` under leftmost-outermost rewriting."""
    current = _check_word(system, word)
    for current, _, _ in rewrite_steps(system, current, step_bound):
        pass
    return current


def irr_automaton(system: StringRewritingSystem) -> FiniteAutomaton:
    """Minimal DFA for the words with no left-hand side as a factor."""
    everything = core.universal(system.alphabet)
    sides = core.from_words(system.alphabet, [rule.lhs for rule in system.rules])
    reducible = core.concatenate(core.concatenate(everything, sides), everything)
    return core.minimize(core.complement(reducible))


# --- orders ---------------------------------------------------------------


class ReductionOrder(Protocol):
    def greater(self, u: Sequence[str], v: Sequence[str]) -> bool: ...


@dataclass(frozen=True)
class TerminationOrder:
    """u > v iff u has more markers, or as many and a longer marker block first.

    Writing u = u0 d u1 d ... d un, blocks are compared by their lengths from
    the left; the first block that differs decides.
    """

    marker: str = "d"

    def key(self, word: Sequence[str]) -> Tuple[int, Tuple[int, ...]]:
        blocks = [0]
        for symbol in word:
            if symbol == self.marker:
                blocks.append(0)
            else:
                blocks[-1] += 1
        return len(blocks) - 1, tuple(blocks)

    def greater(self, u: Sequence[str], v: Sequence[str]) -> bool:
        return self.key(u) > self.key(v)


@dataclass(frozen=True)
class ShortlexOrder:
    alphabet: Tuple[str, ...]

    def greater(self, u: Sequence[str], v: Sequence[str]) -> bool:
        key = core.shortlex_key(self.alphabet)
        return key(tuple(u)) > key(tuple(v))


# --- convergence ----------------------------------------------------------


@dataclass(frozen=True)
class CriticalPair:
    """The two one-step descendants of an overlap word and whether they join."""

    word: Word
    first: Rule
    second: Rule
    left: Word
    right: Word
    resolved: bool


@dataclass(frozen=True)
class ConvergenceReport:
    increasing_rules: Tuple[Rule, ...]
    critical_pairs: Tuple[CriticalPair, ...]

    @property
    def unresolved(self) -> Tuple[CriticalPair, ...]:
        return tuple(pair for pair in self.critical_pairs if not pair.resolved)

    @property
    def terminating(self) -> bool:
        return not self.increasing_rules

    @property
    def convergent(self) -> bool:
        return self.terminating and not self.unresolved


def _overlaps(first: Rule, second: Rule) -> Iterator[Tuple[Word, Word, Word]]:
    """(word, first-step result, second-step result) for every overlap of the two lhs."""
    u, v = first.lhs, second.lhs
    # a proper suffix of u is a proper prefix of v
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k:] == v[:k]:
            yield u + v[k:], first.rhs + v[k:], u[: len(u) - k] + second.rhs
    # v sits inside u
    for i in range(len(u) - len(v) + 1):
        if first is second and i == 0:
            continue
        if u[i: i + len(v)] == v:
            yield u, first.rhs, u[:i] + second.rhs + u[i + len(v):]


def check_convergence(
    system: StringRewritingSystem, order: ReductionOrder, step_bound: Optional[int] = None
) -> ConvergenceReport:
    """Check that every rule decreases under `order` and every critical pair joins.

    Normal forms of the two sides are computed with the system itself, so a
    system that does not terminate surfaces as StepBoundExceeded.
    """
    increasing = tuple(rule for rule in system.rules if not order.greater(rule.lhs, rule.rhs))
    pairs = []
    for first in system.rules:
        for second in system.rules:
            for word, left, right in _overlaps(first, second):
                joined = normal_form(system, left, step_bound) == normal_form(system, right, step_bound)
                pairs.append(CriticalPair(word, first, second, left, right, joined))
    report = ConvergenceReport(increasing, tuple(pairs))
    debug(
        f"convergence: {len(system.rules)} rules, {len(increasing)} not decreasing, "
        f"{len(pairs)} critical pairs, {len(report.unresolved)} unresolved"
    )
    return report
