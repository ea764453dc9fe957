"""Left inverse trichotomy and the complete (zero-)simplicity pipeline."""

from itertools import combinations
from typing import Dict, Optional, Sequence, Tuple

from ..automata import core
from ..automata import relations as rel
from ..automata.core import Word
from ..config_types import typed_config
from ..errors import NotIdempotent
from ..structure import InterpretedAutomaticStructure, adjoin_zero, multiplier, to_cross_section
from ..utils import debug, format_word
from .basic import find_representative, word_problem, zero
from .models import InverseCase, Trichotomy, ZeroSimplicityVerdict


def inverse_trichotomy(
    interpreted: InterpretedAutomaticStructure, word: Sequence[str], idempotent: Sequence[str]
) -> Trichotomy:
    """Classify the left inverses of `word` with respect to `idempotent`.

    A left inverse is any t with t·w = e. An empty set of left inverses is
    reported as NO_RIGHT_INVERSE with no witnesses.
    """
    cross_section = to_cross_section(interpreted)
    word, idempotent = tuple(word), tuple(idempotent)
    if not word_problem(cross_section, idempotent + idempotent, idempotent):
        raise NotIdempotent(idempotent)
    target = find_representative(cross_section, idempotent)
    inverses = rel.preimage(multiplier(cross_section, word), target)
    if not core.is_finite(inverses):
        return Trichotomy(InverseCase.INFINITE)
    witnesses = tuple(core.enumerate_words(inverses))
    right = tuple(t for t in witnesses if word_problem(cross_section, word + t, idempotent))
    case = InverseCase.RIGHT_INVERSE if right else InverseCase.NO_RIGHT_INVERSE
    return Trichotomy(case, witnesses, right)


def find_related_idempotents(
    cross_section: InterpretedAutomaticStructure,
    word: Sequence[str],
    idempotents: Sequence[Word],
    bound: Optional[int] = None,
) -> Optional[Tuple[Word, Word]]:
    """Idempotents (f, e) with f ℛ w and e 𝓛 w, or None when none can exist.

    e is taken from `idempotents` with w·e = w and q·w = e for some q; then
    f is the representative of w·q and must satisfy f·w = w.
    """
    bound = typed_config().search.enumeration_bound if bound is None else bound
    word = tuple(word)
    known = set(idempotents)
    relation = multiplier(cross_section, word)
    for candidate in idempotents:
        if not word_problem(cross_section, word + candidate, word):
            continue
        for q in core.enumerate_words(rel.preimage(relation, candidate), max_count=bound):
            f = find_representative(cross_section, word + q)
            if f in known and word_problem(cross_section, f + word, word):
                return f, candidate
    return None


def _fail(step: int, reason: str, **data) -> ZeroSimplicityVerdict:
    debug(f"complete zero-simplicity fails at step {step}: {reason}")
    return ZeroSimplicityVerdict(False, step, reason, **data)


def analyse_zero_simplicity(
    interpreted: InterpretedAutomaticStructure, bound: Optional[int] = None
) -> ZeroSimplicityVerdict:
    """Decide complete zero-simplicity, keeping the data the Rees construction reuses.

    Steps:
        1. a zero z exists
        2. every non-zero generator has finitely many left stabilisers, all idempotent
        3. every stabilising idempotent stabilises some generator on the right
        4. stabiliser sets pair up like the rows and columns of a Rees matrix
        5. idempotents sharing a stabiliser set are ℛ- (resp. 𝓛-) related
        6. every generator is related to idempotents of its own stabiliser sets
        7. the same for every non-zero product of two generators
        8. every row of generators connects to every column through a non-zero word
    """
    z = zero(interpreted, bound)
    if z is None:
        return _fail(1, "no zero element")
    cross_section = to_cross_section(interpreted, bound)
    generators = cross_section.generators
    language = cross_section.rep_lang

    def is_zero(word: Sequence[str]) -> bool:
        return word_problem(cross_section, tuple(word), z)

    nonzero = tuple(name for name in generators if not is_zero((name,)))
    if not nonzero:
        return _fail(1, "every generator represents zero", structure=cross_section, zero=z)
    data = dict(structure=cross_section, zero=z, nonzero_generators=nonzero)

    left: Dict[str, Tuple[Word, ...]] = {}
    for name in nonzero:
        single = core.from_word(generators, (name,))
        fixing = rel.intersect(cross_section.multipliers[name], rel.product_relation(language, single))
        stabilisers = rel.project(fixing, 1)
        if core.is_empty(stabilisers):
            return _fail(2, f"nothing stabilises {name} on the left", **data)
        if not core.is_finite(stabilisers):
            return _fail(2, f"infinitely many left stabilisers of {name}", **data)
        words = tuple(core.enumerate_words(stabilisers))
        for e in words:
            if not word_problem(cross_section, e + e, e):
                return _fail(2, f"left stabiliser {format_word(e)} of {name} is not idempotent", **data)
        left[name] = words
    data["left_stabilisers"] = left

    key = core.shortlex_key(generators)
    idempotents = tuple(sorted({e for words in left.values() for e in words}, key=key))
    data["idempotents"] = idempotents
    right: Dict[str, Tuple[Word, ...]] = {
        name: tuple(e for e in idempotents if word_problem(cross_section, (name,) + e, (name,)))
        for name in nonzero
    }
    data["right_stabilisers"] = right
    for e in idempotents:
        if not any(e in right[name] for name in nonzero):
            return _fail(3, f"{format_word(e)} stabilises no generator on the right", **data)

    for a in nonzero:
        for b in nonzero:
            common = set(left[a]) & set(right[b])
            if len(common) > 1:
                return _fail(4, f"SL_{a} and SR_{b} share {len(common)} idempotents", **data)
            if (len(common) == 1) == is_zero((b, a)):
                return _fail(4, f"SL_{a} ∩ SR_{b} disagrees with whether {b}{a} is zero", **data)
    for a, b in combinations(nonzero, 2):
        if set(left[a]) != set(left[b]) and set(left[a]) & set(left[b]):
            return _fail(4, f"SL_{a} and SL_{b} overlap without being equal", **data)
        if set(right[a]) != set(right[b]) and set(right[a]) & set(right[b]):
            return _fail(4, f"SR_{a} and SR_{b} overlap without being equal", **data)

    for name in nonzero:
        for e, f in combinations(left[name], 2):
            for first, second in ((e, f), (f, e)):
                outcome = inverse_trichotomy(cross_section, first + second, second)
                if outcome.case is not InverseCase.RIGHT_INVERSE:
                    return _fail(5, f"{format_word(first)}{format_word(second)} is not in the group of "
                                    f"{format_word(second)}", **data)
        for e, f in combinations(right[name], 2):
            for first, second in ((e, f), (f, e)):
                outcome = inverse_trichotomy(cross_section, first + second, first)
                if outcome.case is not InverseCase.RIGHT_INVERSE:
                    return _fail(5, f"{format_word(first)}{format_word(second)} is not in the group of "
                                    f"{format_word(first)}", **data)

    for name in nonzero:
        related = find_related_idempotents(cross_section, (name,), idempotents, bound)
        if related is None or related[0] not in left[name] or related[1] not in right[name]:
            return _fail(6, f"{name} is not related to idempotents of SL_{name} and SR_{name}", **data)

    for b in nonzero:
        for a in nonzero:
            if is_zero((b, a)):
                continue
            product = find_representative(cross_section, (b, a))
            related = find_related_idempotents(cross_section, product, idempotents, bound)
            if related is None or related[0] not in left[b] or related[1] not in right[a]:
                return _fail(7, f"{b}{a} is not related to idempotents of SL_{b} and SR_{a}", **data)

    universal = core.universal(generators)
    without_zero = core.difference(language, core.from_word(generators, z))
    for a in nonzero:
        starts = [(c,) for c in nonzero if set(left[c]) == set(left[a])]
        prefix = core.concatenate(core.from_words(generators, starts), universal)
        for b in nonzero:
            ends = [(c,) for c in nonzero if set(right[c]) == set(right[b])]
            suffix = core.concatenate(universal, core.from_words(generators, ends))
            if core.is_empty(core.intersect(core.intersect(without_zero, prefix), suffix)):
                return _fail(8, f"no non-zero word joins the row of {a} to the column of {b}", **data)

    return ZeroSimplicityVerdict(True, **data)


def is_completely_zero_simple(
    interpreted: InterpretedAutomaticStructure, bound: Optional[int] = None
) -> ZeroSimplicityVerdict:
    """Verdict object; truthy iff the semigroup is completely zero-simple."""
    return analyse_zero_simplicity(interpreted, bound)


def is_completely_simple(
    interpreted: InterpretedAutomaticStructure, bound: Optional[int] = None
) -> ZeroSimplicityVerdict:
    """S is completely simple iff S with a zero adjoined is completely zero-simple."""
    return analyse_zero_simplicity(adjoin_zero(interpreted), bound)

