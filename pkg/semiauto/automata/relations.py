"""Synchronous (padded two-track) automata recognising relations on A* x A*.

A pair of words (u, v) is read as its convolution: the two words written
on parallel tracks, the shorter one padded at the end with PAD. Every
relation produced here is normalised to valid paddings, so padding never
precedes a letter on the same track and never fills both tracks at once.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple, Union

from ..errors import AlphabetMismatch, InvalidPadding, MalformedAutomaton
from . import core
from .core import FiniteAutomaton, Symbol, Word

PAD = "$"

Pair = Tuple[Symbol, Symbol]
Source = Union[FiniteAutomaton, Sequence[Symbol]]


class _Marker:
    """Sentinel state; identity-compared."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return f"<{self.name}>"


_DONE = _Marker("done")


def pair_alphabet(base: Sequence[Symbol]) -> Tuple[Pair, ...]:
    """All (x, y) over base ∪ {PAD} except (PAD, PAD), in base order."""
    base = tuple(base)
    if PAD in base:
        raise MalformedAutomaton(f"{PAD!r} is reserved for padding")
    padded = base + (PAD,)
    return tuple((x, y) for x in padded for y in padded if not (x == PAD and y == PAD))


@lru_cache(maxsize=64)
def valid_padding(base: Tuple[Symbol, ...]) -> FiniteAutomaton:
    """The language of all convolutions over `base`."""
    transitions = []
    for x in base:
        for y in base:
            transitions.append((0, (x, y), 0))
    for y in base:
        transitions += [(0, (PAD, y), 1), (1, (PAD, y), 1)]
    for x in base:
        transitions += [(0, (x, PAD), 2), (2, (x, PAD), 2)]
    return FiniteAutomaton(pair_alphabet(base), {0, 1, 2}, {0}, {0, 1, 2}, transitions)


@dataclass(frozen=True)
class SynchronousAutomaton:
    """A relation on base* x base*, held as an automaton over padded pairs."""

    base: Tuple[Symbol, ...]
    machine: FiniteAutomaton

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        expected = pair_alphabet(self.base)
        if set(self.machine.alphabet) != set(expected):
            raise AlphabetMismatch(expected, self.machine.alphabet)

    @classmethod
    def normalized(cls, base: Sequence[Symbol], machine: FiniteAutomaton) -> "SynchronousAutomaton":
        """Wrap `machine`, discarding every word that is not a valid padding."""
        base = tuple(base)
        machine = core.with_alphabet(machine, pair_alphabet(base))
        return cls(base, core.trim(core.intersect(machine, valid_padding(base))))

    def minimized(self) -> "SynchronousAutomaton":
        return SynchronousAutomaton(self.base, core.compact(self.machine))

    def __contains__(self, pair: Tuple[Sequence[Symbol], Sequence[Symbol]]) -> bool:
        return contains_pair(self, pair[0], pair[1])


# --- convolution ----------------------------------------------------------


def convolve(u: Sequence[Symbol], v: Sequence[Symbol]) -> Tuple[Pair, ...]:
    u, v = tuple(u), tuple(v)
    length = max(len(u), len(v))
    return tuple(
        (u[i] if i < len(u) else PAD, v[i] if i < len(v) else PAD)
        for i in range(length)
    )


def deconvolve(padded: Sequence[Pair]) -> Tuple[Word, Word]:
    """Inverse of `convolve`; rejects words that are not valid paddings."""
    tracks: Tuple[list, list] = ([], [])
    ended = [False, False]
    for position, pair in enumerate(padded):
        if len(pair) != 2 or (pair[0] == PAD and pair[1] == PAD):
            raise InvalidPadding(padded, position)
        for track in (0, 1):
            symbol = pair[track]
            if symbol == PAD:
                ended[track] = True
            elif ended[track]:
                raise InvalidPadding(padded, position)
            else:
                tracks[track].append(symbol)
    return tuple(tracks[0]), tuple(tracks[1])


# --- construction ---------------------------------------------------------


def relation_from_pairs(
    base: Sequence[Symbol], pairs: Iterable[Tuple[Sequence[Symbol], Sequence[Symbol]]]
) -> SynchronousAutomaton:
    base = tuple(base)
    machine = core.from_words(pair_alphabet(base), [convolve(u, v) for u, v in pairs])
    return SynchronousAutomaton(base, machine)


def empty_relation(base: Sequence[Symbol]) -> SynchronousAutomaton:
    base = tuple(base)
    return SynchronousAutomaton(base, core.empty_language(pair_alphabet(base)))


def diagonal(language: FiniteAutomaton) -> SynchronousAutomaton:
    """{(w, w) : w ∈ language}."""
    base = language.alphabet
    return SynchronousAutomaton(base, core.relabel(language, lambda symbol: (symbol, symbol), pair_alphabet(base)))


def product_relation(first: FiniteAutomaton, second: FiniteAutomaton) -> SynchronousAutomaton:
    """{(u, v) : u ∈ first, v ∈ second}."""
    core._check_alphabets(first, second)
    base = first.alphabet
    left, right = core.epsilon_free(first), core.epsilon_free(second)

    def track_moves(m, state):
        if state is _DONE:
            yield PAD, _DONE
            return
        for symbol, targets in m.delta.get(state, {}).items():
            for target in targets:
                yield symbol, target
        if state in m.accepting:
            yield PAD, _DONE

    def follow(pair):
        p, q = pair
        right_moves = list(track_moves(right, q))
        for x, p_next in track_moves(left, p):
            for y, q_next in right_moves:
                if x == PAD and y == PAD:
                    continue
                yield (x, y), (p_next, q_next)

    def is_final(pair):
        p, q = pair
        return (p is _DONE or p in left.accepting) and (q is _DONE or q in right.accepting)

    machine = core.crawl(
        pair_alphabet(base), [(p, q) for p in left.initial for q in right.initial], is_final, follow
    )
    return SynchronousAutomaton(base, core.trim(machine))


def right_append(language: FiniteAutomaton, letter: Symbol) -> SynchronousAutomaton:
    """{(u, u·letter) : u ∈ language}."""
    base = language.alphabet
    if letter not in base:
        raise AlphabetMismatch(base, (letter,))
    source = core.epsilon_free(language)

    def follow(state):
        if state is _DONE:
            return
        for symbol, targets in source.delta.get(state, {}).items():
            for target in targets:
                yield (symbol, symbol), target
        if state in source.accepting:
            yield (PAD, letter), _DONE

    machine = core.crawl(pair_alphabet(base), list(source.initial), lambda state: state is _DONE, follow)
    return SynchronousAutomaton(base, core.trim(machine))


def splice(
    prefixes: FiniteAutomaton,
    old: Sequence[Symbol],
    new: Sequence[Symbol],
    suffixes: FiniteAutomaton,
) -> SynchronousAutomaton:
    """{(x·old·z, x·new·z) : x ∈ prefixes, z ∈ suffixes}.

    Past the common prefix the track carrying the shorter fixed word runs
    ahead. Letters of z it has read but the other track has not yet
    written wait in a queue of at most ||new| - |old|| symbols.
    """
    core._check_alphabets(prefixes, suffixes)
    base = prefixes.alphabet
    fixed = (core._check_word(prefixes, old), core._check_word(prefixes, new))
    lead = 0 if len(fixed[0]) <= len(fixed[1]) else 1
    ahead, behind = len(fixed[lead]), len(fixed[1 - lead])
    head, tail = core.epsilon_free(prefixes), core.epsilon_free(suffixes)

    def leading_moves(i, q, queue, done):
        if i < ahead:
            yield fixed[lead][i], q, queue, False
            return
        if done:
            yield PAD, q, queue, True
            return
        for symbol, targets in tail.delta.get(q, {}).items():
            for target in targets:
                yield symbol, target, queue + (symbol,), False
        if q in tail.accepting:
            yield PAD, q, queue, True

    # ("x", p) copies the prefix; ("z", i, q, queue, done) writes old/new and z
    def follow(state):
        if state[0] == "x":
            p = state[1]
            for symbol, targets in head.delta.get(p, {}).items():
                for target in targets:
                    yield (symbol, symbol), ("x", target)
            if p in head.accepting:
                for q in tail.initial:
                    yield None, ("z", 0, q, (), False)
            return
        _, i, q, queue, done = state
        for x, q_next, pending, ended in leading_moves(i, q, queue, done):
            if i < behind:
                y = fixed[1 - lead][i]
            elif pending:
                y, pending = pending[0], pending[1:]
            else:
                y = PAD
            if x == PAD and y == PAD:
                continue
            pair = (x, y) if lead == 0 else (y, x)
            yield pair, ("z", min(i + 1, behind), q_next, pending, ended)

    def is_final(state):
        if state[0] != "z":
            return False
        _, i, q, queue, done = state
        return i >= behind and not queue and (done or q in tail.accepting)

    machine = core.crawl(pair_alphabet(base), [("x", p) for p in head.initial], is_final, follow)
    return SynchronousAutomaton.normalized(base, machine)


def extend_base(relation: SynchronousAutomaton, base: Sequence[Symbol]) -> SynchronousAutomaton:
    """The same relation viewed over a larger generator alphabet."""
    base = tuple(base)
    return SynchronousAutomaton(base, core.with_alphabet(relation.machine, pair_alphabet(base)))


# --- algebra --------------------------------------------------------------


def _check_bases(first: SynchronousAutomaton, second: SynchronousAutomaton) -> None:
    if set(first.base) != set(second.base):
        raise AlphabetMismatch(first.base, second.base)


def contains_pair(relation: SynchronousAutomaton, u: Sequence[Symbol], v: Sequence[Symbol]) -> bool:
    return core.contains(relation.machine, convolve(u, v))


def union(first: SynchronousAutomaton, second: SynchronousAutomaton) -> SynchronousAutomaton:
    _check_bases(first, second)
    return SynchronousAutomaton(first.base, core.union(first.machine, second.machine))


def intersect(first: SynchronousAutomaton, second: SynchronousAutomaton) -> SynchronousAutomaton:
    _check_bases(first, second)
    return SynchronousAutomaton(first.base, core.trim(core.intersect(first.machine, second.machine)))


def difference(first: SynchronousAutomaton, second: SynchronousAutomaton) -> SynchronousAutomaton:
    _check_bases(first, second)
    return SynchronousAutomaton(first.base, core.trim(core.difference(first.machine, second.machine)))


def complement(relation: SynchronousAutomaton) -> SynchronousAutomaton:
    """All pairs of base* x base* outside the relation."""
    return SynchronousAutomaton(
        relation.base, core.trim(core.difference(valid_padding(relation.base), relation.machine))
    )


def restrict(
    relation: SynchronousAutomaton, first: FiniteAutomaton, second: FiniteAutomaton
) -> SynchronousAutomaton:
    """relation ∩ (first x second)."""
    return intersect(relation, product_relation(first, second))


def invert(relation: SynchronousAutomaton) -> SynchronousAutomaton:
    swapped = core.relabel(relation.machine, lambda pair: (pair[1], pair[0]), pair_alphabet(relation.base))
    return SynchronousAutomaton(relation.base, swapped)


def compose(first: SynchronousAutomaton, second: SynchronousAutomaton) -> SynchronousAutomaton:
    """{(x, z) : (x, y) ∈ first and (y, z) ∈ second for some y}.

    Runs both machines over triples (x, y, z); a machine whose track has
    ended keeps reading padding in a tail state. Positions where x and z are
    both padding emit nothing.
    """
    _check_bases(first, second)
    base = first.base
    left, right = core.epsilon_free(first.machine), core.epsilon_free(second.machine)
    tail = _Marker("tail")

    def track_moves(m, state):
        if state is tail:
            yield (PAD, PAD), tail
            return
        for pair, targets in m.delta.get(state, {}).items():
            for target in targets:
                yield pair, target
        if state in m.accepting:
            yield (PAD, PAD), tail

    def follow(states):
        p, q = states
        by_middle = defaultdict(list)
        for (y, z), q_next in track_moves(right, q):
            by_middle[y].append((z, q_next))
        for (x, y), p_next in track_moves(left, p):
            for z, q_next in by_middle.get(y, ()):
                if x == PAD and z == PAD:
                    if y == PAD:
                        continue
                    yield None, (p_next, q_next)
                else:
                    yield (x, z), (p_next, q_next)

    def is_final(states):
        p, q = states
        return (p is tail or p in left.accepting) and (q is tail or q in right.accepting)

    machine = core.crawl(
        pair_alphabet(base), [(p, q) for p in left.initial for q in right.initial], is_final, follow
    )
    return SynchronousAutomaton.normalized(base, machine).minimized()


def project(relation: SynchronousAutomaton, coordinate: int) -> FiniteAutomaton:
    """Words on track 1 or 2 of the relation."""
    if coordinate not in (1, 2):
        raise ValueError("coordinate must be 1 or 2")
    index = coordinate - 1
    return core.relabel(
        relation.machine,
        lambda pair: None if pair[index] == PAD else pair[index],
        relation.base,
    )


def _as_language(base: Tuple[Symbol, ...], source: Source) -> FiniteAutomaton:
    if isinstance(source, FiniteAutomaton):
        if set(source.alphabet) != set(base):
            raise AlphabetMismatch(base, source.alphabet)
        return core.epsilon_free(source)
    return core.from_word(base, source)


def _section(relation: SynchronousAutomaton, source: Source, read: int) -> FiniteAutomaton:
    """Words on the other track paired with some word of `source` on track `read`."""
    out = 1 - read
    machine = core.epsilon_free(relation.machine)
    language = _as_language(relation.base, source)

    def follow(states):
        r, s = states
        for pair, targets in machine.delta.get(r, {}).items():
            x, y = pair[read], pair[out]
            if x == PAD:
                if s is not _DONE and s not in language.accepting:
                    continue
                following = (_DONE,)
            else:
                if s is _DONE:
                    continue
                following = language.successors(s, x)
            label = None if y == PAD else y
            for target in targets:
                for s_next in following:
                    yield label, (target, s_next)

    def is_final(states):
        r, s = states
        return r in machine.accepting and (s is _DONE or s in language.accepting)

    result = core.crawl(
        relation.base, [(r, s) for r in machine.initial for s in language.initial], is_final, follow
    )
    return core.trim(result)


def image(relation: SynchronousAutomaton, source: Source) -> FiniteAutomaton:
    """{y : (x, y) ∈ relation for some x in source}; source is a word or a language."""
    return _section(relation, source, 0)


def preimage(relation: SynchronousAutomaton, source: Source) -> FiniteAutomaton:
    """{x : (x, y) ∈ relation for some y in source}."""
    return _section(relation, source, 1)


# --- comparisons ----------------------------------------------------------


def _valid_words(relation: SynchronousAutomaton) -> FiniteAutomaton:
    return SynchronousAutomaton.normalized(relation.base, relation.machine).machine


def relations_equal(first: SynchronousAutomaton, second: SynchronousAutomaton) -> bool:
    """Equality as relations; words that are not valid paddings are ignored."""
    _check_bases(first, second)
    return core.are_equivalent(_valid_words(first), _valid_words(second))


def is_subrelation(first: SynchronousAutomaton, second: SynchronousAutomaton) -> bool:
    _check_bases(first, second)
    return core.is_subset(_valid_words(first), _valid_words(second))


def is_diagonal_on(relation: SynchronousAutomaton, language: FiniteAutomaton) -> bool:
    return relations_equal(relation, diagonal(language))


def shortlex_less(base: Sequence[Symbol]) -> SynchronousAutomaton:
    """{(u, v) : u comes strictly before v in shortlex order over `base`}."""
    base = tuple(base)
    rank = {symbol: index for index, symbol in enumerate(base)}
    equal, less, greater, shorter = 0, 1, 2, 3
    transitions = []
    for x in base:
        for y in base:
            if x == y:
                transitions.append((equal, (x, y), equal))
            else:
                transitions.append((equal, (x, y), less if rank[x] < rank[y] else greater))
            transitions.append((less, (x, y), less))
            transitions.append((greater, (x, y), greater))
    for y in base:
        for state in (equal, less, greater, shorter):
            transitions.append((state, (PAD, y), shorter))
    machine = FiniteAutomaton(
        pair_alphabet(base), {equal, less, greater, shorter}, {equal}, {less, shorter}, transitions
    )
    return SynchronousAutomaton(base, machine)
