"""Automatic structures: generators, representatives and multiplier relations.

A PreAutomaticStructure is the tuple (A, L, L_=, {L_a}). Attaching an
assignment of generators (a representative word for every generator) turns
it into an InterpretedAutomaticStructure, which pins down the semigroup
element each representative stands for.
"""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .automata import core
from .automata import relations as rel
from .automata.core import FiniteAutomaton, Word
from .automata.relations import SynchronousAutomaton
from .config_types import typed_config
from .errors import (
    BoundExhausted,
    GeneratorNotInL,
    GeneratorsNotInjective,
    ImproperRepresentative,
    InfiniteDifference,
    MalformedStructure,
    NotOnto,
)
from .utils import STATUS_ERROR, STATUS_OK, STATUS_WARN, DiagnosticResult, debug, format_word


@dataclass(frozen=True, eq=False)
class PreAutomaticStructure:
    """Generators, representatives, equality and right multipliers.

    Attributes:
        generators: Ordered generator symbols; the order is the shortlex order.
        rep_lang: Language L of representatives.
        equality: L_=, pairs of representatives of the same element.
        multipliers: L_a for every generator a.
    """

    generators: Tuple[str, ...]
    rep_lang: FiniteAutomaton
    equality: SynchronousAutomaton
    multipliers: Mapping[str, SynchronousAutomaton]
    _memo: Dict = field(default_factory=dict, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        generators = tuple(self.generators)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "multipliers", MappingProxyType(dict(self.multipliers)))
        if len(set(generators)) != len(generators):
            raise MalformedStructure("generators", "a generator is listed twice")
        if set(self.multipliers) != set(generators):
            raise MalformedStructure(
                "multipliers", f"expected one relation per generator, got {sorted(self.multipliers)}"
            )
        if set(self.rep_lang.alphabet) != set(generators):
            raise MalformedStructure("alphabet", "language of representatives uses another alphabet")
        for name, relation in [("=", self.equality)] + sorted(self.multipliers.items()):
            if set(relation.base) != set(generators):
                raise MalformedStructure("alphabet", f"relation L_{name} uses another alphabet")

    def multiplier(self, generator: str) -> SynchronousAutomaton:
        return self.multipliers[generator]


@dataclass(frozen=True)
class GeneratorAssignment:
    """Representative word ι(a) for every generator a."""

    mapping: Mapping[str, Word]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "mapping", MappingProxyType({name: tuple(word) for name, word in self.mapping.items()})
        )

    def __getitem__(self, generator: str) -> Word:
        return self.mapping[generator]

    def as_dict(self) -> Dict[str, Word]:
        return dict(self.mapping)


@dataclass(frozen=True, eq=False)
class InterpretedAutomaticStructure:
    """A structure together with an assignment of generators.

    Flags:
        has_uniqueness: L_= is the diagonal on L (every element has one representative).
        generators_embedded: every generator letter is its own representative.
        monoid_with_epsilon: the empty word is a legitimate representative (of the identity).
    """

    structure: PreAutomaticStructure
    assignment: GeneratorAssignment
    has_uniqueness: bool = False
    generators_embedded: bool = False
    monoid_with_epsilon: bool = False
    _memo: Dict = field(default_factory=dict, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        generators = self.structure.generators
        if set(self.assignment.mapping) != set(generators):
            raise MalformedStructure("assignment", "every generator needs exactly one representative")
        for name in generators:
            word = self.assignment[name]
            if not core.contains(self.rep_lang, word):
                raise MalformedStructure("assignment", f"ι({name}) = {format_word(word)} is not in L")
        if self.generators_embedded:
            for name in generators:
                if not core.contains(self.rep_lang, (name,)):
                    raise MalformedStructure("generators-embedded", f"{name} is not in L")
        if self.has_uniqueness and not rel.is_diagonal_on(self.equality, self.rep_lang):
            raise MalformedStructure("uniqueness", "L_= is not the diagonal on L")

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.structure.generators

    @property
    def rep_lang(self) -> FiniteAutomaton:
        return self.structure.rep_lang

    @property
    def equality(self) -> SynchronousAutomaton:
        return self.structure.equality

    @property
    def multipliers(self) -> Mapping[str, SynchronousAutomaton]:
        return self.structure.multipliers

    @property
    def is_cross_section(self) -> bool:
        return self.has_uniqueness and self.generators_embedded


def pre_structure(structure) -> PreAutomaticStructure:
    if isinstance(structure, InterpretedAutomaticStructure):
        return structure.structure
    return structure


def _bound(bound: Optional[int]) -> int:
    return typed_config().search.enumeration_bound if bound is None else bound


# --- validation -----------------------------------------------------------


def sanity_report(structure) -> List[DiagnosticResult]:
    """Run every checkable axiom; one diagnostic per check, passing or not."""
    pre = pre_structure(structure)
    language = pre.rep_lang
    square = rel.product_relation(language, language)
    equality = pre.equality
    results: List[DiagnosticResult] = []

    def check(key: str, label: str, holds: bool, detail: str, remedy: Optional[str] = None) -> None:
        if holds:
            results.append(DiagnosticResult(key, label, STATUS_OK, "holds"))
        else:
            results.append(DiagnosticResult(key, label, STATUS_ERROR, detail, remedy))

    check(
        "containment:=", "Containment (=)", rel.is_subrelation(equality, square),
        "L_= relates words outside L", "restrict L_= to L x L",
    )
    for name in pre.generators:
        check(
            f"containment:{name}", f"Containment ({name})",
            rel.is_subrelation(pre.multipliers[name], square),
            f"L_{name} relates words outside L", "restrict the multiplier to L x L",
        )
    check(
        "equality-reflexive", "Equality reflexive",
        rel.is_subrelation(rel.diagonal(language), equality),
        "some representative is not L_=-related to itself",
    )
    check(
        "equality-symmetric", "Equality symmetric",
        rel.relations_equal(equality, rel.invert(equality)),
        "L_= is not symmetric",
    )
    check(
        "equality-transitive", "Equality transitive",
        rel.is_subrelation(rel.compose(equality, equality), equality),
        "L_= is not transitive",
    )
    for name in pre.generators:
        multiplier = pre.multipliers[name]
        check(
            f"compatibility-left:{name}", f"Compatibility L_= then L_{name}",
            rel.is_subrelation(rel.compose(equality, multiplier), multiplier),
            f"L_{name} does not respect equal left factors",
        )
        check(
            f"compatibility-right:{name}", f"Compatibility L_{name} then L_=",
            rel.is_subrelation(rel.compose(multiplier, equality), multiplier),
            f"L_{name} is not closed under equal results",
        )
        check(
            f"totality:{name}", f"Totality ({name})",
            core.are_equivalent(rel.project(multiplier, 1), language),
            f"some representative has no product with {name}",
        )
    if isinstance(structure, InterpretedAutomaticStructure) and not structure.generators_embedded:
        results.append(DiagnosticResult(
            "assignment", "Generator assignment", STATUS_WARN,
            "some generator is represented by another word; a searched assignment is exact only for "
            "left reductive semigroups",
            "store the assignment in the document",
        ))
    return results


def sanity_validate(structure) -> List[DiagnosticResult]:
    """Failed necessary conditions; an empty list means every check passed.

    A clean result does not prove that some semigroup is described.
    """
    return [result for result in sanity_report(structure) if result.status == STATUS_ERROR]


# --- multipliers ----------------------------------------------------------


def multiplier(structure, word: Sequence[str]) -> SynchronousAutomaton:
    """L_w = L_{a1} ∘ ... ∘ L_{an}; L_ε is L_=."""
    pre = pre_structure(structure)
    word = tuple(word)
    unknown = [symbol for symbol in word if symbol not in pre.multipliers]
    if unknown:
        raise MalformedStructure("word", f"{unknown[0]!r} is not a generator")
    key = ("multiplier", word)
    cached = pre._memo.get(key)
    if cached is not None:
        return cached
    if not word:
        result = pre.equality
    elif len(word) == 1:
        result = pre.multipliers[word[0]]
    else:
        result = rel.compose(multiplier(pre, word[:-1]), pre.multipliers[word[-1]])
    pre._memo[key] = result
    return result


def right_trans_equiv(structure, u: Sequence[str], v: Sequence[str]) -> bool:
    """True iff x·u = x·v for every element x, i.e. L_u = L_v."""
    return rel.relations_equal(multiplier(structure, u), multiplier(structure, v))


# --- assignments ----------------------------------------------------------


def find_assignment(structure, bound: Optional[int] = None) -> GeneratorAssignment:
    """First representative (shortlex) right translationally equivalent to each generator.

    Only trustworthy for left reductive semigroups: otherwise two generators
    may receive a word of the wrong element.
    """
    pre = pre_structure(structure)
    bound = _bound(bound)
    debug(f"find_assignment: searching {bound} representatives (exact only for left reductive semigroups)")
    candidates = core.enumerate_words(pre.rep_lang, max_count=bound)
    mapping: Dict[str, Word] = {}
    for name in pre.generators:
        target = pre.multipliers[name]
        for word in candidates:
            if rel.relations_equal(multiplier(pre, word), target):
                mapping[name] = word
                break
        else:
            raise BoundExhausted(f"assignment of {name!r}", bound)
    return GeneratorAssignment(mapping)


def embedded_assignment(structure) -> GeneratorAssignment:
    pre = pre_structure(structure)
    for name in pre.generators:
        if not core.contains(pre.rep_lang, (name,)):
            raise GeneratorNotInL(name)
    return GeneratorAssignment({name: (name,) for name in pre.generators})


def interpret(
    structure: PreAutomaticStructure,
    assignment: Optional[GeneratorAssignment] = None,
    *,
    monoid_with_epsilon: bool = False,
) -> InterpretedAutomaticStructure:
    """Attach an assignment (the embedded one by default) and detect the cheap flags."""
    if assignment is None:
        assignment = embedded_assignment(structure)
    embedded = all(assignment[name] == (name,) for name in structure.generators)
    unique = rel.is_diagonal_on(structure.equality, structure.rep_lang)
    return InterpretedAutomaticStructure(
        structure,
        assignment,
        has_uniqueness=unique,
        generators_embedded=embedded,
        monoid_with_epsilon=monoid_with_epsilon,
    )


# --- representative surgery -----------------------------------------------


def _transplant(
    relation: SynchronousAutomaton,
    kept: FiniteAutomaton,
    stand_ins: Mapping[Word, Word],
) -> SynchronousAutomaton:
    base = relation.base
    result = rel.restrict(relation, kept, kept)
    for extra, stand_in in stand_ins.items():
        single = core.from_word(base, extra)
        sources = core.intersect(rel.preimage(relation, stand_in), kept)
        targets = core.intersect(rel.image(relation, stand_in), kept)
        result = rel.union(result, rel.product_relation(sources, single))
        result = rel.union(result, rel.product_relation(single, targets))
    finite_pairs = [
        (x, y)
        for x, x_stand_in in stand_ins.items()
        for y, y_stand_in in stand_ins.items()
        if rel.contains_pair(relation, x_stand_in, y_stand_in)
    ]
    if finite_pairs:
        result = rel.union(result, rel.relation_from_pairs(base, finite_pairs))
    return result.minimized()


def with_representatives(
    interpreted: InterpretedAutomaticStructure, language: FiniteAutomaton
) -> InterpretedAutomaticStructure:
    """The same semigroup, re-expressed over the representatives `language`.

    `language` may drop words of L and may add finitely many new ones; every
    element must keep at least one representative.
    """
    from .decisions.basic import find_representative

    generators = interpreted.generators
    if set(language.alphabet) != set(generators):
        raise MalformedStructure("alphabet", "new representatives use another alphabet")
    language = core.compact(core.with_alphabet(language, generators))
    current = interpreted.rep_lang
    if core.contains(language, ()) and not interpreted.monoid_with_epsilon and not core.contains(current, ()):
        raise ImproperRepresentative(())
    extra = core.difference(language, current)
    if not core.is_finite(extra):
        raise InfiniteDifference()
    extra_words = core.enumerate_words(extra)
    stand_ins = {word: find_representative(interpreted, word) for word in extra_words}
    kept = core.compact(core.intersect(language, current))

    covered = core.union(kept, core.from_words(generators, stand_ins.values()))
    reachable = rel.preimage(interpreted.equality, covered)
    missing = core.difference(current, reachable)
    if not core.is_empty(missing):
        raise NotOnto(core.shortlex_first(missing))

    equality = _transplant(interpreted.equality, kept, stand_ins)
    multipliers = {
        name: _transplant(interpreted.multipliers[name], kept, stand_ins) for name in generators
    }
    structure = PreAutomaticStructure(generators, language, equality, multipliers)

    key = core.shortlex_key(generators)
    mapping: Dict[str, Word] = {}
    for name in generators:
        word = interpreted.assignment[name]
        if core.contains(language, word):
            mapping[name] = word
            continue
        options = core.enumerate_words(
            core.intersect(rel.image(interpreted.equality, word), kept), max_count=1
        )
        options += [x for x, stand_in in stand_ins.items()
                    if rel.contains_pair(interpreted.equality, word, stand_in)]
        mapping[name] = min(options, key=key)

    debug(f"with_representatives: kept {len(generators)} generators, {len(extra_words)} new words")
    return InterpretedAutomaticStructure(
        structure,
        GeneratorAssignment(mapping),
        has_uniqueness=interpreted.has_uniqueness and not extra_words,
        generators_embedded=interpreted.generators_embedded
        and all(core.contains(language, (name,)) for name in generators),
        monoid_with_epsilon=interpreted.monoid_with_epsilon,
    )


def _nonempty_identity_word(
    interpreted: InterpretedAutomaticStructure, bound: int
) -> Word:
    """A nonempty word equal to the element the empty representative stands for."""
    from .decisions.basic import find_representative

    equal = rel.image(interpreted.equality, ())
    nonempty = core.intersect(equal, core.nonempty_words(interpreted.generators))
    word = core.shortlex_first(nonempty)
    if word is not None:
        return word
    for candidate in core.enumerate_words(core.nonempty_words(interpreted.generators), max_count=bound):
        if rel.contains_pair(interpreted.equality, find_representative(interpreted, candidate), ()):
            return candidate
    raise BoundExhausted("a nonempty word for the empty representative", bound)


def to_cross_section(
    interpreted: InterpretedAutomaticStructure, bound: Optional[int] = None
) -> InterpretedAutomaticStructure:
    """Equivalent structure with one representative per element and generators embedded.

    Keeps the shortlex-least word of every L_=-class. Under the monoid flag
    the empty word stays as the identity's representative unless a
    generator letter represents the identity.
    """
    if interpreted.is_cross_section:
        return interpreted
    cached = interpreted._memo.get("cross_section")
    if cached is not None:
        return cached
    bound = _bound(bound)
    generators = interpreted.generators
    for position, first in enumerate(generators):
        for second in generators[position + 1:]:
            if rel.contains_pair(
                interpreted.equality, interpreted.assignment[first], interpreted.assignment[second]
            ):
                raise GeneratorsNotInjective(first, second)

    current = interpreted
    if core.contains(current.rep_lang, ()) and not current.monoid_with_epsilon:
        stand_in = _nonempty_identity_word(current, bound)
        without_empty = core.difference(current.rep_lang, core.from_word(generators, ()))
        current = with_representatives(
            current, core.union(without_empty, core.from_word(generators, stand_in))
        )

    letters = core.from_words(generators, [(name,) for name in generators])
    current = with_representatives(current, core.union(current.rep_lang, letters))

    smaller = rel.intersect(current.equality, rel.shortlex_less(generators))
    survivors = core.difference(current.rep_lang, rel.project(smaller, 2))
    if current.monoid_with_epsilon and not all(core.contains(survivors, (name,)) for name in generators):
        survivors = core.difference(core.union(survivors, letters), core.from_word(generators, ()))
    current = with_representatives(current, survivors)

    result = InterpretedAutomaticStructure(
        current.structure,
        GeneratorAssignment({name: (name,) for name in generators}),
        has_uniqueness=True,
        generators_embedded=True,
        monoid_with_epsilon=interpreted.monoid_with_epsilon,
    )
    debug(f"to_cross_section: converted structure over {format_word(generators)}")
    interpreted._memo["cross_section"] = result
    return result


# --- zero -----------------------------------------------------------------


def fresh_symbol(generators: Iterable[str], stem: str = "z") -> str:
    taken = set(generators)
    if stem not in taken:
        return stem
    index = 1
    while f"{stem}{index}" in taken:
        index += 1
    return f"{stem}{index}"


def adjoin_zero(interpreted: InterpretedAutomaticStructure) -> InterpretedAutomaticStructure:
    """Structure for S with a new zero element z adjoined."""
    zero = fresh_symbol(interpreted.generators)
    generators = interpreted.generators + (zero,)
    zero_word = core.from_word(generators, (zero,))
    language = core.compact(core.union(core.with_alphabet(interpreted.rep_lang, generators), zero_word))
    zero_pair = rel.relation_from_pairs(generators, [((zero,), (zero,))])

    def lifted(relation: SynchronousAutomaton) -> SynchronousAutomaton:
        return rel.union(rel.extend_base(relation, generators), zero_pair).minimized()

    multipliers = {name: lifted(interpreted.multipliers[name]) for name in interpreted.generators}
    multipliers[zero] = rel.product_relation(language, zero_word).minimized()
    structure = PreAutomaticStructure(generators, language, lifted(interpreted.equality), multipliers)
    mapping = interpreted.assignment.as_dict()
    mapping[zero] = (zero,)
    return InterpretedAutomaticStructure(
        structure,
        GeneratorAssignment(mapping),
        has_uniqueness=interpreted.has_uniqueness,
        generators_embedded=interpreted.generators_embedded,
        monoid_with_epsilon=interpreted.monoid_with_epsilon,
    )
