"""Hand-built reference structures."""

from typing import Sequence

from .automata import core
from .automata import relations as rel
from .automata.core import FiniteAutomaton
from .automata.relations import PAD, SynchronousAutomaton
from .structure import (
    GeneratorAssignment,
    InterpretedAutomaticStructure,
    PreAutomaticStructure,
)


def free_semigroup(alphabet: Sequence[str] = ("a", "b")) -> InterpretedAutomaticStructure:
    """The free semigroup A+ with every word its own representative."""
    generators = tuple(alphabet)
    language = core.nonempty_words(generators)
    multipliers = {name: rel.right_append(language, name) for name in generators}
    structure = PreAutomaticStructure(generators, language, rel.diagonal(language), multipliers)
    return InterpretedAutomaticStructure(
        structure,
        GeneratorAssignment({name: (name,) for name in generators}),
        has_uniqueness=True,
        generators_embedded=True,
    )


def bicyclic_monoid() -> InterpretedAutomaticStructure:
    """The monoid ⟨q, p | pq = 1⟩ on the normal forms q^i p^j."""
    generators = ("q", "p")
    language = FiniteAutomaton(
        generators,
        {0, 1},
        {0},
        {0, 1},
        {(0, "q", 0), (0, "p", 1), (1, "p", 1)},
    )
    final = 2
    # q^i p^j · q is q^i p^(j-1) when j > 0, and q^(i+1) when j = 0
    by_q = FiniteAutomaton(
        rel.pair_alphabet(generators),
        {0, 1, final},
        {0},
        {final},
        {
            (0, ("q", "q"), 0),
            (0, (PAD, "q"), final),
            (0, ("p", "p"), 1),
            (0, ("p", PAD), final),
            (1, ("p", "p"), 1),
            (1, ("p", PAD), final),
        },
    )
    multipliers = {
        "q": SynchronousAutomaton.normalized(generators, by_q),
        "p": rel.right_append(language, "p"),
    }
    structure = PreAutomaticStructure(generators, language, rel.diagonal(language), multipliers)
    return InterpretedAutomaticStructure(
        structure,
        GeneratorAssignment({"q": ("q",), "p": ("p",)}),
        has_uniqueness=True,
        generators_embedded=True,
        monoid_with_epsilon=True,
    )
