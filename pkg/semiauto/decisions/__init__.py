"""Uniform decision procedures for interpreted automatic structures."""

from .basic import (
    find_representative,
    identity,
    is_right_cancellable,
    is_right_cancellative,
    is_unit,
    left_inverses,
    left_zeros,
    right_cancellation_witness,
    word_problem,
    zero,
)
from .models import InverseCase, ReesRepresentation, Trichotomy, ZeroSimplicityVerdict
from .rees import (
    generator_coordinates,
    rees_decomposition,
    rees_decomposition_simple,
    rees_multiply,
    triple_word,
)
from .simplicity import (
    analyse_zero_simplicity,
    find_related_idempotents,
    inverse_trichotomy,
    is_completely_simple,
    is_completely_zero_simple,
)

__all__ = [
    "InverseCase",
    "ReesRepresentation",
    "Trichotomy",
    "ZeroSimplicityVerdict",
    "analyse_zero_simplicity",
    "find_related_idempotents",
    "find_representative",
    "generator_coordinates",
    "identity",
    "inverse_trichotomy",
    "is_completely_simple",
    "is_completely_zero_simple",
    "is_right_cancellable",
    "is_right_cancellative",
    "is_unit",
    "left_inverses",
    "left_zeros",
    "rees_decomposition",
    "rees_decomposition_simple",
    "rees_multiply",
    "right_cancellation_witness",
    "triple_word",
    "word_problem",
    "zero",
]
