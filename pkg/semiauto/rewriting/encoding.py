"""The rewriting system R_M of a Turing machine and its automatic monoid.

Configurations are written h̄ x̄ q y h: marked copies of the cells left of
the head, the state, the cells from the head on, and an end marker. Each
appended d is carried leftwards to the state and pays for one machine step;
once the accepting state is reached further d's erase the tape and the
final one erases h̄ q_a h. So h̄ q0 w h has a right inverse exactly when
the machine accepts w.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from ..automata import core
from ..automata import relations as rel
from ..automata.core import FiniteAutomaton, Word
from ..automata.relations import SynchronousAutomaton
from ..config_types import typed_config
from ..errors import MachineError
from ..structure import InterpretedAutomaticStructure, PreAutomaticStructure, interpret
from ..utils import debug, format_word
from .machine import MARK_PREFIX, MachineRun, Move, TuringMachine
from .system import Rule, StringRewritingSystem, irr_automaton, normal_form

D = "d"
H = "h"
H_BAR = MARK_PREFIX + H

# schemas that simulate or clean up the machine, as opposed to moving d
MACHINE_TAGS = ("1", "2", "3", "4", "5", "6", "7")


def marked(symbol: str) -> str:
    return MARK_PREFIX + symbol


def rm_alphabet(machine: TuringMachine) -> Tuple[str, ...]:
    """Γ = Q ∪ Σ ∪ Σ̄ ∪ {d, h, h̄}, in that order."""
    return machine.states + machine.alphabet + tuple(marked(a) for a in machine.alphabet) + (D, H, H_BAR)


def build_rm(machine: TuringMachine) -> StringRewritingSystem:
    """Instantiate the nine rule schemas; rules are grouped by schema."""
    letters = machine.alphabet
    accept = machine.accepting
    groups: Dict[str, List[Rule]] = {str(tag): [] for tag in range(1, 10)}
    for state in machine.states:
        for symbol in letters + (machine.blank,):
            action = machine.action(state, symbol)
            if action is None:
                continue
            target, written, move = action
            on_blank = symbol == machine.blank
            read = H if on_blank else symbol
            if move is Move.RIGHT:
                rhs = (marked(written), target) + ((H,) if on_blank else ())
                tag = "2" if on_blank else "1"
                groups[tag].append(Rule((state, read, D), rhs, tag))
            else:
                tag = "4" if on_blank else "3"
                for c in letters:
                    rhs = (target, c, written) + ((H,) if on_blank else ())
                    groups[tag].append(Rule((marked(c), state, read, D), rhs, tag))
    for a in letters:
        groups["5"].append(Rule((accept, a, D), (accept,), "5"))
        groups["6"].append(Rule((marked(a), accept, H, D), (accept, H), "6"))
    groups["7"].append(Rule((H_BAR, accept, H, D), (), "7"))
    for a in letters:
        for b in letters:
            groups["8"].append(Rule((a, b, D), (a, D, b), "8"))
        groups["9"].append(Rule((a, H, D), (a, D, H), "9"))
    rules = tuple(rule for tag in sorted(groups, key=int) for rule in groups[tag])
    return StringRewritingSystem(rm_alphabet(machine), rules)


def initial_word(machine: TuringMachine, word: Sequence[str]) -> Word:
    """h̄ q0 w h."""
    word = tuple(word)
    for symbol in word:
        if symbol not in machine.alphabet:
            raise MachineError(f"input symbol {symbol!r} is not in the alphabet")
    return (H_BAR, machine.initial) + word + (H,)


def configuration_word(run: MachineRun) -> Word:
    """h̄ x̄ q y h for the configuration a run stopped in."""
    left = tuple(marked(symbol) for symbol in run.tape[: run.head])
    return (H_BAR,) + left + (run.state,) + run.tape[run.head:] + (H,)


def expected_clock_length(run: MachineRun) -> int:
    """Number of d's an accepting run consumes: one per step, one per cell, one to finish."""
    return run.steps + len(run.tape) + 1


# --- the automatic structure on IRR(R_M) ----------------------------------


def _letters(alphabet: Sequence[str], symbols: Sequence[str]) -> FiniteAutomaton:
    return core.from_words(alphabet, [(symbol,) for symbol in symbols])


def _ld_cases(
    system: StringRewritingSystem, language: FiniteAutomaton, letters: Sequence[str]
) -> Tuple[SynchronousAutomaton, SynchronousAutomaton, SynchronousAutomaton]:
    gamma = system.alphabet
    everything = core.universal(gamma)
    sigma_star = core.star(_letters(gamma, letters))
    # d walks left over Σ*(Σ ∪ {h}); an h with letters after it stops the walk
    walked = core.concatenate(sigma_star, _letters(gamma, tuple(letters) + (H,)))
    walked_or_empty = core.concatenate(sigma_star, core.from_words(gamma, [(), (H,)]))

    stays = rel.restrict(rel.right_append(language, D), language, language)

    halts_after = core.intersect(
        rel.preimage(rel.right_append(everything, D), language),
        core.concatenate(everything, _letters(gamma, letters)),
    )
    walks = rel.restrict(rel.splice(halts_after, (), (D,), walked), language, language)

    fires = rel.empty_relation(gamma)
    for rule in system.rules:
        if rule.tag not in MACHINE_TAGS:
            continue
        suffixes = core.from_word(gamma, ()) if rule.lhs[-2] == H else walked_or_empty
        fires = rel.union(fires, rel.splice(everything, rule.lhs[:-1], rule.rhs, suffixes))
    fires = rel.restrict(fires, language, language)
    return stays, walks, fires


def ld_case_relations(
    machine: TuringMachine,
) -> Tuple[SynchronousAutomaton, SynchronousAutomaton, SynchronousAutomaton]:
    """The three parts of L_d on irreducible u.

    1. ud is irreducible: (u, ud).
    2. d walks left to rest after a letter and nothing fires: (xaz, xadz).
    3. d walks left and completes the lhs yad of a machine rule: (xyaz, xrz).
    """
    system = build_rm(machine)
    return _ld_cases(system, irr_automaton(system), machine.alphabet)


def tm_structure(machine: TuringMachine) -> InterpretedAutomaticStructure:
    """IRR(R_M) with its multipliers, every letter its own representative."""
    system = build_rm(machine)
    language = irr_automaton(system)
    multipliers = {}
    for name in system.alphabet:
        if name != D:
            # every lhs ends in d, so appending another letter stays irreducible
            multipliers[name] = rel.right_append(language, name)
    stays, walks, fires = _ld_cases(system, language, machine.alphabet)
    multipliers[D] = rel.union(rel.union(stays, walks), fires).minimized()
    structure = PreAutomaticStructure(system.alphabet, language, rel.diagonal(language), multipliers)
    debug(f"tm_structure: {len(system.rules)} rules over {len(system.alphabet)} symbols")
    return interpret(structure, monoid_with_epsilon=True)


# --- right invertibility --------------------------------------------------


def right_invert_search(
    machine: TuringMachine,
    word: Sequence[str],
    n_max: Optional[int] = None,
    step_bound: Optional[int] = None,
) -> Optional[int]:
    """Smallest n <= n_max with h̄ q0 w h · d^n →* ε, or None.

    None is inconclusive: right invertibility is undecidable in general, and
    a longer search may still succeed.
    """
    n_max = typed_config().search.right_invert_max_n if n_max is None else n_max
    system = build_rm(machine)
    current = initial_word(machine, word)
    for n in range(1, n_max + 1):
        current = normal_form(system, current + (D,), step_bound)
        if not current:
            debug(f"right_invert_search: {format_word(word)} inverted by d^{n}")
            return n
    debug(f"right_invert_search: no inverse d^n for {format_word(word)} with n <= {n_max}")
    return None
