"""Word problem, cancellation, zeros, identity, inverses and units."""

from typing import Optional, Sequence, Tuple

from ..automata import core
from ..automata import relations as rel
from ..automata.core import FiniteAutomaton, Word
from ..errors import ImproperRepresentative, Inconsistent, MalformedStructure, NotAMonoid
from ..structure import (
    InterpretedAutomaticStructure,
    multiplier,
    pre_structure,
    to_cross_section,
)
from ..utils import debug, format_word


def _check_word(structure, word: Sequence[str]) -> Word:
    word = tuple(word)
    generators = set(pre_structure(structure).generators)
    for symbol in word:
        if symbol not in generators:
            raise MalformedStructure("word", f"{symbol!r} is not a generator")
    return word


def find_representative(interpreted: InterpretedAutomaticStructure, word: Sequence[str]) -> Word:
    """The shortlex-least representative in L of the element `word` stands for.

    Built letter by letter: the representative of ua is the least word of
    image(L_a, representative of u).
    """
    word = _check_word(interpreted, word)
    language = interpreted.rep_lang
    if not word:
        if core.contains(language, ()):
            return ()
        if not interpreted.monoid_with_epsilon:
            raise ImproperRepresentative(())
        unit = identity(interpreted)
        if unit is None:
            raise NotAMonoid()
        return find_representative(interpreted, unit) if unit else ()

    key = ("representative", word)
    cached = interpreted._memo.get(key)
    if cached is not None:
        return cached
    current = interpreted.assignment[word[0]]
    for position in range(1, len(word)):
        generator = word[position]
        products = core.intersect(rel.image(interpreted.multipliers[generator], current), language)
        following = core.shortlex_first(products)
        if following is None:
            raise Inconsistent(word[:position], generator)
        current = following
    interpreted._memo[key] = current
    return current


def word_problem(interpreted: InterpretedAutomaticStructure, u: Sequence[str], v: Sequence[str]) -> bool:
    """True iff u and v represent the same element."""
    return rel.contains_pair(
        interpreted.equality, find_representative(interpreted, u), find_representative(interpreted, v)
    )


# --- cancellation ---------------------------------------------------------


def _collisions(structure, word: Sequence[str]) -> rel.SynchronousAutomaton:
    """Pairs (u, v) with uw = vw."""
    relation = multiplier(structure, _check_word(structure, word))
    return rel.compose(relation, rel.invert(relation))


def is_right_cancellable(structure, word: Sequence[str]) -> bool:
    """True iff x·w = y·w forces x = y."""
    return rel.is_subrelation(_collisions(structure, word), pre_structure(structure).equality)


def right_cancellation_witness(structure, word: Sequence[str]) -> Optional[Tuple[Word, Word]]:
    """Shortlex-first pair of distinct elements (u, v) with uw = vw, or None."""
    offending = rel.difference(_collisions(structure, word), pre_structure(structure).equality)
    padded = core.shortlex_first(offending.machine)
    if padded is None:
        return None
    return rel.deconvolve(padded)


def is_right_cancellative(structure) -> bool:
    """Every generator, hence every element, is right cancellable."""
    return all(is_right_cancellable(structure, (name,)) for name in pre_structure(structure).generators)


# --- zeros and identity ---------------------------------------------------


def left_zeros(structure) -> FiniteAutomaton:
    """Representatives z with z·a = z for every generator a."""
    pre = pre_structure(structure)
    fixed = rel.diagonal(pre.rep_lang)
    for name in pre.generators:
        fixed = rel.intersect(fixed, pre.multipliers[name])
    return core.compact(rel.project(fixed, 1))


def zero(interpreted: InterpretedAutomaticStructure, bound: Optional[int] = None) -> Optional[Word]:
    """The representative of the zero element in the cross-section, or None.

    A zero is the unique left zero that is also a right zero.
    """
    cross_section = to_cross_section(interpreted, bound)
    candidates = core.enumerate_words(left_zeros(cross_section), max_count=2)
    if len(candidates) != 1:
        debug(f"zero: {len(candidates)} left zero candidates")
        return None
    (candidate,) = candidates
    language = cross_section.rep_lang
    absorbing = rel.product_relation(language, core.from_word(cross_section.generators, candidate))
    if not rel.relations_equal(multiplier(cross_section, candidate), absorbing):
        debug(f"zero: left zero {format_word(candidate)} is not a right zero")
        return None
    return candidate


def identity(interpreted: InterpretedAutomaticStructure, bound: Optional[int] = None) -> Optional[Word]:
    """The representative of the identity in the cross-section, or None."""
    cross_section = to_cross_section(interpreted, bound)
    stabilisers = cross_section.rep_lang
    for name in cross_section.generators:
        stabilisers = core.intersect(
            stabilisers, rel.preimage(cross_section.multipliers[name], (name,))
        )
    candidates = core.enumerate_words(stabilisers, max_count=2)
    if len(candidates) != 1:
        return None
    (candidate,) = candidates
    if not rel.relations_equal(multiplier(cross_section, candidate), cross_section.equality):
        return None
    return candidate


def _identity_or_raise(cross_section: InterpretedAutomaticStructure) -> Word:
    unit = identity(cross_section)
    if unit is None:
        raise NotAMonoid()
    return unit


def left_inverses(interpreted: InterpretedAutomaticStructure, word: Sequence[str]) -> FiniteAutomaton:
    """Representatives (in the cross-section) of every t with t·w = 1."""
    cross_section = to_cross_section(interpreted)
    unit = _identity_or_raise(cross_section)
    word = _check_word(cross_section, word)
    return core.compact(rel.preimage(multiplier(cross_section, word), unit))


def is_unit(interpreted: InterpretedAutomaticStructure, word: Sequence[str]) -> bool:
    """True iff w has a two-sided inverse."""
    cross_section = to_cross_section(interpreted)
    unit = _identity_or_raise(cross_section)
    word = _check_word(cross_section, word)
    inverses = core.enumerate_words(left_inverses(cross_section, word), max_count=2)
    if len(inverses) != 1:
        return False
    return word_problem(cross_section, word + inverses[0], unit)
