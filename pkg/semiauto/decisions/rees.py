"""Rees matrix decomposition of completely (zero-)simple semigroups.

Every non-zero element lies in exactly one H-class H_{iλ}. Fixing a group
H = H_{i0 λ0}, words r_i ∈ H_{i λ0} and q_λ ∈ H_{i0 λ}, an element of
H_{iλ} is written r_i·g·q_λ with g ∈ H, and products follow the sandwich
matrix P_{λi} = q_λ·r_i. The group gets its own automatic structure whose
generators are c[a] (the group part of a generator a) and d[λ,i] (the
non-zero sandwich entries).
"""

from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple

from ..automata import core
from ..automata import relations as rel
from ..automata.core import FiniteAutomaton, Word
from ..automata.relations import PAD, SynchronousAutomaton
from ..config_types import typed_config
from ..errors import BoundExhausted, NotCompletelySimple, NotCompletelyZeroSimple
from ..structure import (
    GeneratorAssignment,
    InterpretedAutomaticStructure,
    PreAutomaticStructure,
    adjoin_zero,
    multiplier,
)
from ..utils import debug, format_word
from .basic import find_representative, word_problem
from .models import ReesRepresentation, ZeroSimplicityVerdict
from .simplicity import analyse_zero_simplicity

Triple = Optional[Tuple[int, Word, int]]


def _classes(idempotents: Sequence[Word], same) -> Tuple[Tuple[Word, ...], ...]:
    """Partition idempotents by an equivalence, keeping first-appearance order."""
    classes: List[List[Word]] = []
    for e in idempotents:
        for members in classes:
            if same(members[0], e):
                members.append(e)
                break
        else:
            classes.append([e])
    return tuple(tuple(members) for members in classes)


def _index_of(classes: Sequence[Sequence[Word]], word: Word) -> int:
    for index, members in enumerate(classes):
        if word in members:
            return index
    raise KeyError(word)


class _Phi:
    """The map a1 a2 ... an ↦ c[a1] d[λ(a1), i(a2)] c[a2] ... c[an] on words and relations."""

    def __init__(
        self,
        rows: Dict[str, int],
        cols: Dict[str, int],
        c_symbols: Dict[str, str],
        d_symbols: Dict[Tuple[int, int], str],
        alphabet: Tuple[str, ...],
    ):
        self.rows = rows
        self.cols = cols
        self.c_symbols = c_symbols
        self.d_symbols = d_symbols
        self.alphabet = alphabet

    def joint(self, previous: str, following: str) -> Optional[str]:
        return self.d_symbols.get((self.cols[previous], self.rows[following]))

    def word(self, word: Sequence[str]) -> Word:
        image: List[str] = []
        for position, letter in enumerate(word):
            if position:
                joint = self.joint(word[position - 1], letter)
                if joint is None:
                    raise ValueError(f"{format_word(word)} represents zero")
                image.append(joint)
            image.append(self.c_symbols[letter])
        return tuple(image)

    def language(self, language: FiniteAutomaton) -> FiniteAutomaton:
        source = core.epsilon_free(language)

        def follow(state):
            kind, inner, previous = state
            if kind == "mid":
                yield self.c_symbols[previous], ("at", inner, previous)
                return
            for letter, targets in source.delta.get(inner, {}).items():
                if letter not in self.c_symbols:
                    continue
                if previous is None:
                    for target in targets:
                        yield self.c_symbols[letter], ("at", target, letter)
                    continue
                joint = self.joint(previous, letter)
                if joint is None:
                    continue
                for target in targets:
                    yield joint, ("mid", target, letter)

        starts = [("at", state, None) for state in source.initial]
        machine = core.crawl(
            self.alphabet, starts, lambda s: s[0] == "at" and s[1] in source.accepting, follow
        )
        return core.compact(machine)

    def _track(self, previous, letter, joint: bool) -> Optional[str]:
        if letter == PAD:
            return PAD
        if not joint:
            return self.c_symbols.get(letter)
        return self.joint(previous, letter)

    def relation(self, relation: SynchronousAutomaton) -> SynchronousAutomaton:
        source = core.epsilon_free(relation.machine)

        def follow(state):
            kind, inner, first, second = state
            if kind == "mid":
                pair = (self._track(None, first, False), self._track(None, second, False))
                yield pair, ("at", inner, first, second)
                return
            for (x, y), targets in source.delta.get(inner, {}).items():
                if (x != PAD and x not in self.c_symbols) or (y != PAD and y not in self.c_symbols):
                    continue
                if first is None:
                    pair = (self._track(None, x, False), self._track(None, y, False))
                    for target in targets:
                        yield pair, ("at", target, x, y)
                    continue
                pair = (self._track(first, x, True), self._track(second, y, True))
                if None in pair:
                    continue
                for target in targets:
                    yield pair, ("mid", target, x, y)

        starts = [("at", state, None, None) for state in source.initial]
        machine = core.crawl(
            rel.pair_alphabet(self.alphabet),
            starts,
            lambda s: s[0] == "at" and s[1] in source.accepting,
            follow,
        )
        return SynchronousAutomaton.normalized(self.alphabet, machine).minimized()


def _h_class_words(
    cross_section: InterpretedAutomaticStructure,
    row_generators: Sequence[str],
    col_generators: Sequence[str],
    zero_word: Optional[Word],
) -> FiniteAutomaton:
    """Non-zero words of L that start in the given row and end in the given column."""
    generators = cross_section.generators
    universal = core.universal(generators)
    prefix = core.concatenate(core.from_words(generators, [(a,) for a in row_generators]), universal)
    suffix = core.concatenate(universal, core.from_words(generators, [(b,) for b in col_generators]))
    words = core.intersect(core.intersect(cross_section.rep_lang, prefix), suffix)
    if zero_word is not None:
        words = core.difference(words, core.from_word(generators, zero_word))
    return core.compact(words)


def build_rees(verdict: ZeroSimplicityVerdict, bound: Optional[int] = None) -> ReesRepresentation:
    """Assemble the Rees representation from a successful zero-simplicity analysis."""
    if not verdict:
        raise NotCompletelyZeroSimple(verdict.step, verdict.reason)
    bound = typed_config().search.enumeration_bound if bound is None else bound
    cross_section = verdict.structure
    generators = cross_section.generators
    z = verdict.zero
    idempotents = verdict.idempotents
    nonzero = verdict.nonzero_generators

    rows = _classes(
        idempotents,
        lambda e, f: word_problem(cross_section, e + f, f) and word_problem(cross_section, f + e, e),
    )
    cols = _classes(
        idempotents,
        lambda e, f: word_problem(cross_section, e + f, e) and word_problem(cross_section, f + e, f),
    )
    table: Dict[Tuple[int, int], Word] = {
        (_index_of(rows, e), _index_of(cols, e)): e for e in idempotents
    }
    i0, lambda0 = _index_of(rows, idempotents[0]), _index_of(cols, idempotents[0])

    row_of = {a: _index_of(rows, verdict.left_stabilisers[a][0]) for a in nonzero}
    col_of = {a: _index_of(cols, verdict.right_stabilisers[a][0]) for a in nonzero}

    def generators_in_row(i: int) -> List[str]:
        return [a for a in nonzero if row_of[a] == i]

    def generators_in_col(lam: int) -> List[str]:
        return [a for a in nonzero if col_of[a] == lam]

    def pick(i: int, lam: int) -> Word:
        if (i, lam) in table:
            return table[(i, lam)]
        candidates = _h_class_words(cross_section, generators_in_row(i), generators_in_col(lam), z)
        word = core.shortlex_first(candidates)
        if word is None:
            raise NotCompletelyZeroSimple(8, f"H-class ({i}, {lam}) has no representative")
        return word

    row_words = tuple(pick(i, lambda0) for i in range(len(rows)))
    col_words = tuple(pick(i0, lam) for lam in range(len(cols)))

    sandwich: List[List[Optional[Word]]] = []
    for lam in range(len(cols)):
        line: List[Optional[Word]] = []
        for i in range(len(rows)):
            product = find_representative(cross_section, col_words[lam] + row_words[i])
            line.append(None if z is not None and product == z else product)
        sandwich.append(line)

    group_words = _h_class_words(cross_section, generators_in_row(i0), generators_in_col(lambda0), z)
    base_idempotent = table[(i0, lambda0)]
    if base_idempotent == ():
        group_words = core.union(group_words, core.from_word(generators, ()))

    candidates = core.enumerate_words(group_words, max_count=bound)
    group_parts: Dict[str, Word] = {}
    for a in nonzero:
        left, right = row_words[row_of[a]], col_words[col_of[a]]
        for w in candidates:
            if word_problem(cross_section, left + w + right, (a,)):
                group_parts[a] = w
                break
        else:
            raise BoundExhausted(f"group part of generator {a!r}", bound)

    c_symbols = {a: f"c[{a}]" for a in nonzero}
    d_symbols = {
        (lam, i): f"d[{lam},{i}]"
        for lam in range(len(cols))
        for i in range(len(rows))
        if sandwich[lam][i] is not None
    }
    alphabet = tuple(c_symbols.values()) + tuple(d_symbols.values())
    phi = _Phi(row_of, col_of, c_symbols, d_symbols, alphabet)

    def conjugate(relation: SynchronousAutomaton) -> SynchronousAutomaton:
        return phi.relation(rel.restrict(relation, group_words, group_words))

    group_language = phi.language(group_words)
    group_equality = conjugate(cross_section.equality)
    group_multipliers = {c_symbols[a]: conjugate(multiplier(cross_section, group_parts[a])) for a in nonzero}
    for (lam, i), symbol in d_symbols.items():
        group_multipliers[symbol] = conjugate(multiplier(cross_section, sandwich[lam][i]))
    assignment = {c_symbols[a]: phi.word(group_parts[a]) for a in nonzero}
    assignment.update({symbol: phi.word(sandwich[lam][i]) for (lam, i), symbol in d_symbols.items()})
    group = InterpretedAutomaticStructure(
        PreAutomaticStructure(alphabet, group_language, group_equality, group_multipliers),
        GeneratorAssignment(assignment),
        has_uniqueness=True,
        monoid_with_epsilon=core.contains(group_language, ()),
    )

    matrix = tuple(
        tuple(None if entry is None else phi.word(entry) for entry in line) for line in sandwich
    )
    debug(f"rees: {len(rows)} rows, {len(cols)} columns, group alphabet {format_word(alphabet)}")
    return ReesRepresentation(
        group=group,
        rows=rows,
        cols=cols,
        matrix=matrix,
        sandwich=tuple(tuple(line) for line in sandwich),
        idempotent_table=table,
        basepoint=(i0, lambda0),
        row_words=row_words,
        col_words=col_words,
        generator_data={a: (row_of[a], group_parts[a], col_of[a]) for a in nonzero},
        structure=cross_section,
        zero=z,
        generator_symbols=c_symbols,
        sandwich_symbols=d_symbols,
    )


def rees_decomposition(
    interpreted: InterpretedAutomaticStructure, bound: Optional[int] = None
) -> ReesRepresentation:
    """Rees matrix representation of a completely zero-simple semigroup."""
    verdict = analyse_zero_simplicity(interpreted, bound)
    if not verdict:
        raise NotCompletelyZeroSimple(verdict.step, verdict.reason)
    return build_rees(verdict, bound)


def rees_decomposition_simple(
    interpreted: InterpretedAutomaticStructure, bound: Optional[int] = None
) -> ReesRepresentation:
    """Rees matrix representation (without zero) of a completely simple semigroup."""
    verdict = analyse_zero_simplicity(adjoin_zero(interpreted), bound)
    if not verdict:
        raise NotCompletelySimple(f"step {verdict.step}: {verdict.reason}")
    representation = build_rees(verdict, bound)
    if any(entry is None for line in representation.matrix for entry in line):
        raise NotCompletelySimple("the sandwich matrix has a zero entry")
    return replace(representation, zero=None)


# --- working with the representation ---------------------------------------


def group_word(representation: ReesRepresentation, word: Sequence[str]) -> Word:
    """φ of a representative lying in the base group."""
    rows = {a: data[0] for a, data in representation.generator_data.items()}
    cols = {a: data[2] for a, data in representation.generator_data.items()}
    phi = _Phi(
        rows, cols,
        dict(representation.generator_symbols), dict(representation.sandwich_symbols),
        representation.group.generators,
    )
    return phi.word(tuple(word))


def generator_coordinates(representation: ReesRepresentation, generator: str) -> Triple:
    """(i_a, group word of a, λ_a), or None for a generator that represents zero."""
    data = representation.generator_data.get(generator)
    if data is None:
        return None
    row, part, col = data
    return row, group_word(representation, part), col


def rees_multiply(representation: ReesRepresentation, first: Triple, second: Triple) -> Triple:
    """(i, g, λ)(j, h, μ) = (i, g·P_{λj}·h, μ), or zero when P_{λj} is zero."""
    if first is None or second is None:
        return None
    i, g, lam = first
    j, h, mu = second
    symbol = representation.sandwich_symbols.get((lam, j))
    if symbol is None:
        return None
    product = find_representative(representation.group, tuple(g) + (symbol,) + tuple(h))
    return i, product, mu


def triple_word(representation: ReesRepresentation, triple: Triple) -> Word:
    """A word of the original structure for an element of the Rees matrix semigroup."""
    if triple is None:
        if representation.zero is None:
            raise ValueError("the representation has no zero")
        return representation.zero
    i, g, lam = triple
    by_symbol: Dict[str, Word] = {
        representation.generator_symbols[a]: data[1] for a, data in representation.generator_data.items()
    }
    for (col, row), symbol in representation.sandwich_symbols.items():
        by_symbol[symbol] = representation.sandwich[col][row]
    middle: Tuple[str, ...] = ()
    for symbol in g:
        middle += by_symbol[symbol]
    return representation.row_words[i] + middle + representation.col_words[lam]
