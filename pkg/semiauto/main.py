"""Command-line interface for semiauto.

Exit codes: 0 = yes / success, 1 = no, 2 = error or inconclusive.
"""

import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional

from . import __version__
from .automata import core
from .config import DEFAULT_CFG, cfg, load_config, reset_config, save_config, validate_config
from .config_types import typed_config
from .decisions import (
    InverseCase,
    find_representative,
    identity,
    inverse_trichotomy,
    is_completely_simple,
    is_completely_zero_simple,
    is_right_cancellative,
    is_unit,
    left_inverses,
    left_zeros,
    rees_decomposition,
    rees_decomposition_simple,
    word_problem,
    zero,
)
from .document import (
    dumps_structure,
    load_cayley,
    load_machine,
    load_structure,
    parse_word,
    save_structure,
)
from .errors import NotCompletelySimple, NotCompletelyZeroSimple, SemiautoError
from .oracle import check_table, from_cayley, named_tables, random_suite
from .rewriting import build_rm, right_invert_search, tm_structure
from .structure import InterpretedAutomaticStructure, adjoin_zero, sanity_report, to_cross_section
from .utils import APP_NAME, STATUS_ERROR, error, format_diagnostic, format_word

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2

# How many words a listing prints before "..."
LIST_LIMIT = 20


# =============================================================================
# Output helpers
# =============================================================================

def _emit(args: argparse.Namespace, payload: Dict[str, Any], text: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _words(language, limit: int = LIST_LIMIT) -> List[str]:
    return [format_word(word) for word in core.enumerate_words(language, max_count=limit)]


def _listing(language) -> Dict[str, Any]:
    finite = core.is_finite(language)
    words = _words(language)
    return {"finite": finite, "words": words, "truncated": not finite or len(words) >= LIST_LIMIT}


def _write_structure(args: argparse.Namespace, interpreted: InterpretedAutomaticStructure) -> int:
    if args.output:
        save_structure(interpreted, args.output)
        print(f"Wrote {args.output}")
    else:
        sys.stdout.write(dumps_structure(interpreted))
    return EXIT_YES


def _load(args: argparse.Namespace) -> InterpretedAutomaticStructure:
    return load_structure(args.structure)


def _word(interpreted: InterpretedAutomaticStructure, text: str):
    return parse_word(text, interpreted.generators)


# =============================================================================
# Commands
# =============================================================================

def _cmd_validate(args: argparse.Namespace) -> int:
    results = sanity_report(_load(args))
    failed = [result for result in results if result.status == STATUS_ERROR]
    if args.json:
        _emit(args, {"valid": not failed, "checks": [vars(result) for result in results]}, "")
    else:
        for result in results:
            print(format_diagnostic(result))
    return EXIT_NO if failed else EXIT_YES


def _cmd_repr(args: argparse.Namespace) -> int:
    interpreted = _load(args)
    word = find_representative(interpreted, _word(interpreted, args.word))
    _emit(args, {"representative": list(word)}, format_word(word))
    return EXIT_YES


def _cmd_word_eq(args: argparse.Namespace) -> int:
    interpreted = _load(args)
    equal = word_problem(interpreted, _word(interpreted, args.u), _word(interpreted, args.v))
    _emit(args, {"equal": equal}, "equal" if equal else "not equal")
    return EXIT_YES if equal else EXIT_NO


def _cmd_property(args: argparse.Namespace) -> int:
    interpreted = _load(args)
    name = args.name
    if name == "left-zeros":
        found = left_zeros(interpreted)
        listing = _listing(found)
        text = ", ".join(listing["words"]) if listing["words"] else "no left zero"
        _emit(args, {"left_zeros": listing}, text)
        return EXIT_YES if listing["words"] else EXIT_NO
    if name in ("zero", "identity"):
        if name == "zero":
            found = zero(interpreted, args.bound)
            missing = "no zero" if _words(left_zeros(interpreted), 1) else "no left zero"
        else:
            found = identity(interpreted, args.bound)
            missing = "no identity"
        payload = {name: None if found is None else list(found)}
        _emit(args, payload, missing if found is None else format_word(found))
        return EXIT_NO if found is None else EXIT_YES
    if name == "right-cancellative":
        holds = is_right_cancellative(interpreted)
        _emit(args, {"right_cancellative": holds}, "right cancellative" if holds else "not right cancellative")
        return EXIT_YES if holds else EXIT_NO
    check = is_completely_zero_simple if name == "czs" else is_completely_simple
    verdict = check(interpreted, args.bound)
    payload = {"holds": bool(verdict), "step": verdict.step, "reason": verdict.reason}
    text = "holds" if verdict else f"fails at step {verdict.step}: {verdict.reason}"
    _emit(args, payload, text)
    return EXIT_YES if verdict else EXIT_NO


def _cmd_left_inverses(args: argparse.Namespace) -> int:
    interpreted = _load(args)
    listing = _listing(left_inverses(interpreted, _word(interpreted, args.word)))
    if not listing["words"]:
        text = "no left inverse"
    elif not listing["finite"]:
        text = "infinitely many, starting " + ", ".join(listing["words"])
    else:
        text = ", ".join(listing["words"])
    _emit(args, {"left_inverses": listing}, text)
    return EXIT_YES if listing["words"] else EXIT_NO


def _cmd_unit(args: argparse.Namespace) -> int:
    interpreted = _load(args)
    holds = is_unit(interpreted, _word(interpreted, args.word))
    _emit(args, {"unit": holds}, "unit" if holds else "not a unit")
    return EXIT_YES if holds else EXIT_NO


def _cmd_trichotomy(args: argparse.Namespace) -> int:
    interpreted = _load(args)
    outcome = inverse_trichotomy(interpreted, _word(interpreted, args.word), _word(interpreted, args.idempotent))
    payload = {
        "case": outcome.case.value,
        "left_inverses": [list(word) for word in outcome.witnesses],
        "right_inverses": [list(word) for word in outcome.right_inverses],
    }
    if outcome.case is InverseCase.INFINITE:
        text = "A: infinitely many left inverses"
    elif outcome.case is InverseCase.RIGHT_INVERSE:
        text = "B: right inverse " + ", ".join(format_word(word) for word in outcome.right_inverses)
    else:
        text = "C: no right inverse; left inverses " + (
            ", ".join(format_word(word) for word in outcome.witnesses) or "none"
        )
    _emit(args, payload, text)
    return EXIT_YES if outcome.case is InverseCase.RIGHT_INVERSE else EXIT_NO


def _cmd_cross_section(args: argparse.Namespace) -> int:
    return _write_structure(args, to_cross_section(_load(args), args.bound))


def _cmd_adjoin_zero(args: argparse.Namespace) -> int:
    return _write_structure(args, adjoin_zero(_load(args)))


def _cmd_rees(args: argparse.Namespace) -> int:
    interpreted = _load(args)
    try:
        if args.simple:
            representation = rees_decomposition_simple(interpreted, args.bound)
        else:
            representation = rees_decomposition(interpreted, args.bound)
    except (NotCompletelyZeroSimple, NotCompletelySimple) as exc:
        _emit(args, {"holds": False, "reason": str(exc)}, str(exc))
        return EXIT_NO

    def entry(word) -> Optional[str]:
        return None if word is None else format_word(word)

    payload = {
        "holds": True,
        "group_order": representation.group_order,
        "rows": [[format_word(word) for word in row] for row in representation.rows],
        "cols": [[format_word(word) for word in col] for col in representation.cols],
        "matrix": [[entry(word) for word in line] for line in representation.matrix],
        "sandwich": [[entry(word) for word in line] for line in representation.sandwich],
        "zero": entry(representation.zero),
    }
    order = representation.group_order
    lines = [
        f"group order: {'infinite' if order is None else order}",
        f"rows: {len(representation.rows)}, columns: {len(representation.cols)}",
        "sandwich matrix:",
    ]
    for line in payload["matrix"]:
        lines.append("  " + " ".join("0" if cell is None else cell for cell in line))
    _emit(args, payload, "\n".join(lines))
    return EXIT_YES


def _cmd_from_cayley(args: argparse.Namespace) -> int:
    return _write_structure(args, from_cayley(load_cayley(args.file)))


def _cmd_from_tm(args: argparse.Namespace) -> int:
    return _write_structure(args, tm_structure(load_machine(args.file)))


def _cmd_rm_rules(args: argparse.Namespace) -> int:
    system = build_rm(load_machine(args.file))
    payload = {
        "alphabet": list(system.alphabet),
        "rules": [{"tag": rule.tag, "lhs": list(rule.lhs), "rhs": list(rule.rhs)} for rule in system.rules],
    }
    _emit(args, payload, "\n".join(str(rule) for rule in system.rules))
    return EXIT_YES


def _cmd_right_invert(args: argparse.Namespace) -> int:
    machine = load_machine(args.file)
    word = parse_word(args.word, machine.alphabet)
    limit = typed_config().search.right_invert_max_n if args.max_n is None else args.max_n
    n = right_invert_search(machine, word, limit)
    if n is None:
        _emit(args, {"n": None, "inconclusive": True}, f"no right inverse d^n with n <= {limit}; inconclusive")
        return EXIT_ERROR
    _emit(args, {"n": n, "inconclusive": False}, f"right inverse d^{n}")
    return EXIT_YES


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    tables = list(named_tables().values()) + random_suite(seed=args.seed, count=args.count)
    failures = []
    for position, table in enumerate(tables):
        for mismatch in check_table(table, args.bound):
            failures.append({"table": position, "check": mismatch.key, "detail": f"{mismatch.label}: {mismatch.detail}"})
    text = f"{len(tables)} tables checked, {len(failures)} mismatches"
    if failures and not args.json:
        text += "\n" + "\n".join(f"  table {item['table']}: {item['detail']}" for item in failures)
    _emit(args, {"tables": len(tables), "mismatches": failures}, text)
    return EXIT_NO if failures else EXIT_YES


def _cmd_config(args: argparse.Namespace) -> int:
    if args.action == "reset":
        reset_config()
        save_config()
        _emit(args, {"config": dict(cfg)}, "Configuration reset to defaults")
        return EXIT_YES
    if args.action == "set":
        if args.key not in DEFAULT_CFG or args.value is None:
            raise ValueError(f"usage: config set KEY VALUE with KEY one of {', '.join(DEFAULT_CFG)}")
        cfg[args.key] = int(args.value)
        validate_config()
        save_config()
    lines = [f"{key} = {cfg[key]}" for key in DEFAULT_CFG]
    _emit(args, {"config": dict(cfg)}, "\n".join(lines))
    return EXIT_YES


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "validate": _cmd_validate,
    "repr": _cmd_repr,
    "word-eq": _cmd_word_eq,
    "property": _cmd_property,
    "left-inverses": _cmd_left_inverses,
    "unit": _cmd_unit,
    "trichotomy": _cmd_trichotomy,
    "cross-section": _cmd_cross_section,
    "adjoin-zero": _cmd_adjoin_zero,
    "rees": _cmd_rees,
    "from-cayley": _cmd_from_cayley,
    "from-tm": _cmd_from_tm,
    "rm-rules": _cmd_rm_rules,
    "right-invert": _cmd_right_invert,
    "oracle-check": _cmd_oracle_check,
    "config": _cmd_config,
}

PROPERTIES = ("left-zeros", "zero", "identity", "right-cancellative", "czs", "cs")


# =============================================================================
# CLI Argument Parsing
# =============================================================================

def parse_args(argv: List[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description=f"{APP_NAME} - decision procedures for automatic semigroups",
        prog="semiauto",
    )
    parser.add_argument("--json", action="store_true", help="Machine-readable output")
    parser.add_argument("--bound", type=int, default=None, help="Bound for shortlex searches")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def structure_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("structure", help="Structure document (JSON)")
        return sub

    def with_output(sub: argparse.ArgumentParser) -> argparse.ArgumentParser:
        sub.add_argument("-o", "--output", default=None, help="Write the document here instead of stdout")
        return sub

    structure_command("validate", "Check the automatic structure axioms")
    structure_command("repr", "Shortlex representative of a word").add_argument("word")
    sub = structure_command("word-eq", "Do two words represent the same element?")
    sub.add_argument("u")
    sub.add_argument("v")
    structure_command("property", "Decide a property of the semigroup").add_argument("name", choices=PROPERTIES)
    structure_command("left-inverses", "Left inverses of an element").add_argument("word")
    structure_command("unit", "Is the element a unit?").add_argument("word")
    sub = structure_command("trichotomy", "Classify the left inverses of w relative to an idempotent e")
    sub.add_argument("word")
    sub.add_argument("idempotent")
    with_output(structure_command("cross-section", "Equivalent structure with uniqueness"))
    with_output(structure_command("adjoin-zero", "Structure for the semigroup with a zero adjoined"))
    structure_command("rees", "Rees matrix decomposition").add_argument(
        "--simple", action="store_true", help="Completely simple (no zero) variant"
    )
    with_output(commands.add_parser("from-cayley", help="Structure from a Cayley table")).add_argument("file")
    with_output(commands.add_parser("from-tm", help="Structure of a Turing machine's monoid")).add_argument("file")
    commands.add_parser("rm-rules", help="Rewriting rules of a Turing machine").add_argument("file")
    sub = commands.add_parser("right-invert", help="Search for a right inverse of h̄ q0 w h")
    sub.add_argument("file")
    sub.add_argument("word")
    sub.add_argument("--max-n", type=int, default=None, help="Largest power of d to try")
    sub = commands.add_parser("oracle-check", help="Compare decision procedures with brute force")
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--count", type=int, default=None)
    sub = commands.add_parser("config", help="Show, set or reset the user configuration")
    sub.add_argument("action", choices=("show", "set", "reset"))
    sub.add_argument("key", nargs="?", default=None)
    sub.add_argument("value", nargs="?", default=None)
    return parser.parse_args(argv)


# =============================================================================
# Script Entry Point
# =============================================================================

def run(argv: List[str]) -> int:
    """Parse and execute one command; returns the exit code."""
    args = parse_args(argv)
    load_config()
    try:
        return COMMANDS[args.command](args)
    except (SemiautoError, OSError, json.JSONDecodeError, ValueError) as exc:
        error(str(exc))
        return EXIT_ERROR


def cli_main(argv: Optional[List[str]] = None) -> None:
    """Console script entry point."""
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    cli_main()
