"""String rewriting and the Turing machine monoid with undecidable right invertibility."""

from .encoding import (
    D,
    H,
    H_BAR,
    build_rm,
    configuration_word,
    expected_clock_length,
    initial_word,
    ld_case_relations,
    marked,
    right_invert_search,
    rm_alphabet,
    tm_structure,
)
from .machine import (
    MachineRun,
    Move,
    RunStatus,
    TuringMachine,
    format_machine,
    parse_machine,
    simulate,
)
from .system import (
    ConvergenceReport,
    CriticalPair,
    Rule,
    ShortlexOrder,
    StringRewritingSystem,
    TerminationOrder,
    check_convergence,
    irr_automaton,
    normal_form,
    rewrite_steps,
)

__all__ = [
    "ConvergenceReport",
    "CriticalPair",
    "D",
    "H",
    "H_BAR",
    "MachineRun",
    "Move",
    "Rule",
    "RunStatus",
    "ShortlexOrder",
    "StringRewritingSystem",
    "TerminationOrder",
    "TuringMachine",
    "build_rm",
    "check_convergence",
    "configuration_word",
    "expected_clock_length",
    "format_machine",
    "initial_word",
    "irr_automaton",
    "ld_case_relations",
    "marked",
    "normal_form",
    "parse_machine",
    "rewrite_steps",
    "right_invert_search",
    "rm_alphabet",
    "simulate",
    "tm_structure",
]
