"""Exception hierarchy for semiauto.

Every exception keeps its payload as attributes so callers (and the CLI)
can report precisely what went wrong without parsing messages.
"""

from typing import Any, Sequence


def _show(word: Sequence[Any]) -> str:
    if not word:
        return "ε"
    return ".".join(str(symbol) for symbol in word)


class SemiautoError(Exception):
    """Base class for all library errors."""


# --- automata -------------------------------------------------------------


class AlphabetMismatch(SemiautoError, ValueError):
    """Raised when two automata (or an automaton and a word) disagree on alphabet."""

    def __init__(self, expected: Sequence[Any], got: Sequence[Any]):
        self.expected = tuple(expected)
        self.got = tuple(got)
        super().__init__(f"Alphabet mismatch: expected {list(self.expected)}, got {list(self.got)}")


class MalformedAutomaton(SemiautoError, ValueError):
    """Raised when an automaton violates its structural invariants."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Malformed automaton: {reason}")


class InvalidPadding(SemiautoError, ValueError):
    """Raised when a padded word is not the convolution of any word pair."""

    def __init__(self, word: Sequence[Any], position: int):
        self.word = tuple(word)
        self.position = position
        super().__init__(f"Invalid padding at position {position}")


# --- automatic structures -------------------------------------------------


class MalformedStructure(SemiautoError):
    """Raised when a structure violates one of its checkable invariants."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        message = f"Structure invariant violated: {invariant}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class GeneratorNotInL(SemiautoError):
    """Raised when a generator letter is not a representative."""

    def __init__(self, generator: str):
        self.generator = generator
        super().__init__(f"Generator {generator!r} is not in the language of representatives")


class InfiniteDifference(SemiautoError):
    """Raised when a new representative language adds infinitely many words."""

    def __init__(self) -> None:
        super().__init__("New representative language differs from L by infinitely many words")


class NotOnto(SemiautoError):
    """Raised when a representative language misses some element."""

    def __init__(self, word: Sequence[str]):
        self.word = tuple(word)
        super().__init__(f"Element of {_show(self.word)} has no representative in the new language")


class ImproperRepresentative(SemiautoError):
    """Raised when a word cannot serve as a representative (the empty word outside monoids)."""

    def __init__(self, word: Sequence[str]):
        self.word = tuple(word)
        super().__init__(f"{_show(self.word)} cannot be used as a representative")


class GeneratorsNotInjective(SemiautoError):
    """Raised when two generators represent the same element."""

    def __init__(self, first: str, second: str):
        self.first = first
        self.second = second
        super().__init__(f"Generators {first!r} and {second!r} represent the same element")


class BoundExhausted(SemiautoError):
    """Raised when a bounded search runs out before finding a witness."""

    def __init__(self, target: str, bound: int):
        self.target = target
        self.bound = bound
        super().__init__(f"No witness for {target} within the first {bound} candidates")


class Inconsistent(SemiautoError):
    """Raised when a multiplier has no image for a representative (totality broken)."""

    def __init__(self, prefix: Sequence[str], generator: str):
        self.prefix = tuple(prefix)
        self.generator = generator
        super().__init__(
            f"Multiplier for {generator!r} has no image for the representative of {_show(self.prefix)}"
        )


# --- decision procedures --------------------------------------------------


class NotAMonoid(SemiautoError):
    """Raised when an operation needs an identity and none exists."""

    def __init__(self) -> None:
        super().__init__("The semigroup has no identity")


class NotIdempotent(SemiautoError):
    """Raised when a word expected to be idempotent is not."""

    def __init__(self, word: Sequence[str]):
        self.word = tuple(word)
        super().__init__(f"{_show(self.word)} is not idempotent")


class NotCompletelyZeroSimple(SemiautoError):
    """Raised by constructions that need a completely zero-simple semigroup."""

    def __init__(self, step: int, reason: str):
        self.step = step
        self.reason = reason
        super().__init__(f"Not completely zero-simple (step {step}): {reason}")


class NotCompletelySimple(SemiautoError):
    """Raised by constructions that need a completely simple semigroup."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Not completely simple: {reason}")


# --- rewriting and machines -----------------------------------------------


class StepBoundExceeded(SemiautoError):
    """Raised when rewriting does not reach a normal form within the step bound."""

    def __init__(self, bound: int, word: Sequence[str]):
        self.bound = bound
        self.word = tuple(word)
        super().__init__(f"No normal form for {_show(self.word)} within {bound} rewrite steps")


class MachineError(SemiautoError, ValueError):
    """Raised for invalid Turing machine definitions."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Invalid Turing machine: {reason}")


# --- finite oracle --------------------------------------------------------


class NotAssociative(SemiautoError, ValueError):
    """Raised when a Cayley table is not associative."""

    def __init__(self, x: int, y: int, z: int):
        self.x = x
        self.y = y
        self.z = z
        super().__init__(f"Table is not associative: ({x}{y}){z} != {x}({y}{z})")


class NotSimple(SemiautoError):
    """Raised when a Cayley table is neither completely simple nor completely zero-simple."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"No Rees decomposition: {reason}")


# --- documents ------------------------------------------------------------


class DocumentError(SemiautoError):
    """Raised when a serialized document is malformed."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        message = f"Malformed document: {invariant}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
