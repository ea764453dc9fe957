"""Finite automata and synchronous relations."""

from .core import (
    FiniteAutomaton,
    are_equivalent,
    compact,
    complement,
    contains,
    determinize,
    difference,
    enumerate_words,
    from_word,
    from_words,
    intersect,
    is_empty,
    is_finite,
    is_subset,
    minimize,
    shortlex_first,
    union,
    universal,
)
from .relations import (
    PAD,
    SynchronousAutomaton,
    compose,
    convolve,
    deconvolve,
    diagonal,
    image,
    invert,
    preimage,
    product_relation,
    project,
    relation_from_pairs,
    relations_equal,
    shortlex_less,
    splice,
)

__all__ = [
    "FiniteAutomaton",
    "PAD",
    "SynchronousAutomaton",
    "are_equivalent",
    "compact",
    "complement",
    "compose",
    "contains",
    "convolve",
    "deconvolve",
    "determinize",
    "diagonal",
    "difference",
    "enumerate_words",
    "from_word",
    "from_words",
    "image",
    "intersect",
    "invert",
    "is_empty",
    "is_finite",
    "is_subset",
    "minimize",
    "preimage",
    "product_relation",
    "project",
    "relation_from_pairs",
    "relations_equal",
    "shortlex_first",
    "shortlex_less",
    "splice",
    "union",
    "universal",
]
