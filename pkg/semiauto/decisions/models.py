"""Result types for the decision procedures."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Tuple

from ..automata.core import Word
from ..structure import InterpretedAutomaticStructure


class InverseCase(Enum):
    """How a word relates to its left inverses with respect to an idempotent."""

    INFINITE = "A"
    RIGHT_INVERSE = "B"
    NO_RIGHT_INVERSE = "C"


@dataclass(frozen=True)
class Trichotomy:
    """Outcome of classifying the left inverses of w with respect to e.

    `witnesses` lists every left inverse when there are finitely many;
    `right_inverses` is the subset that are right inverses as well.
    """

    case: InverseCase
    witnesses: Tuple[Word, ...] = ()
    right_inverses: Tuple[Word, ...] = ()


@dataclass(frozen=True)
class ZeroSimplicityVerdict:
    """Answer of the complete zero-simplicity pipeline plus its intermediate data.

    Falsy when the semigroup is not completely zero-simple; `step` and
    `reason` then name the first failed check.
    """

    holds: bool
    step: int = 0
    reason: str = ""
    structure: Optional[InterpretedAutomaticStructure] = field(default=None, compare=False)
    zero: Optional[Word] = None
    nonzero_generators: Tuple[str, ...] = ()
    left_stabilisers: Mapping[str, Tuple[Word, ...]] = field(default_factory=dict)
    right_stabilisers: Mapping[str, Tuple[Word, ...]] = field(default_factory=dict)
    idempotents: Tuple[Word, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True, eq=False)
class ReesRepresentation:
    """Rees matrix description M⁰(G; I, Λ; P) of a completely zero-simple semigroup.

    Rows (I) and columns (Λ) are numbered from 0 and listed by the idempotent
    representatives they contain. `matrix[λ][i]` is the sandwich entry as a
    word of the group structure, or None for zero; `sandwich[λ][i]` is the
    same entry as a word of the original structure.
    """

    group: InterpretedAutomaticStructure
    rows: Tuple[Tuple[Word, ...], ...]
    cols: Tuple[Tuple[Word, ...], ...]
    matrix: Tuple[Tuple[Optional[Word], ...], ...]
    sandwich: Tuple[Tuple[Optional[Word], ...], ...]
    idempotent_table: Mapping[Tuple[int, int], Word]
    basepoint: Tuple[int, int]
    row_words: Tuple[Word, ...]
    col_words: Tuple[Word, ...]
    generator_data: Mapping[str, Tuple[int, Word, int]]
    structure: InterpretedAutomaticStructure
    zero: Optional[Word]
    generator_symbols: Mapping[str, str]
    sandwich_symbols: Mapping[Tuple[int, int], str]

    @property
    def group_order(self) -> Optional[int]:
        """Number of group elements when the group's language is finite."""
        from ..automata import core

        if not core.is_finite(self.group.rep_lang):
            return None
        return len(core.enumerate_words(self.group.rep_lang))
