"""Serialization: structure documents (JSON), Cayley tables, Turing machines and words.

Structure document, format version 1::

    {
      "format_version": 1,
      "generators": ["q", "p"],
      "rep_lang": {"states": 2, "initial": [0], "accepting": [0, 1],
                   "transitions": [[0, "q", 0], [0, "p", 1], [1, "p", 1]]},
      "equality": {... pair symbols as ["q", "$"] ...},
      "multipliers": {"q": {...}, "p": {...}},
      "assignment": {"q": ["q"], "p": ["p"]},
      "flags": {"uniqueness": true, "generators_embedded": true, "monoid_with_epsilon": true}
    }

Automata are stored minimal and trimmed with states numbered 0..n-1.
Relations are cut down to valid paddings when loaded.
`assignment` and `flags` are optional; without them the embedded assignment
is tried first, then a shortlex search.

Cayley table text: the order n, then n rows of n element indices, then
optionally ``names: a b ...``. ``#`` starts a comment.
"""

import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from .automata import core
from .automata import relations as rel
from .automata.core import FiniteAutomaton, Word
from .automata.relations import SynchronousAutomaton
from .errors import DocumentError, GeneratorNotInL, MachineError, SemiautoError
from .oracle import CayleyTable
from .rewriting.machine import TuringMachine, parse_machine
from .structure import (
    GeneratorAssignment,
    InterpretedAutomaticStructure,
    PreAutomaticStructure,
    find_assignment,
    interpret,
)
from .utils import EMPTY_WORD_DISPLAY, debug

FORMAT_VERSION = 1

PathLike = Union[str, Path]


# --- automata -------------------------------------------------------------


def automaton_to_dict(m: FiniteAutomaton) -> Dict[str, Any]:
    small = core.compact(m)
    number = {state: position for position, state in enumerate(sorted(small.states))}

    def symbol_out(symbol):
        return list(symbol) if isinstance(symbol, tuple) else symbol

    transitions = sorted(
        ([number[s], symbol_out(symbol), number[t]] for s, symbol, t in small.transitions),
        key=lambda item: (item[0], json.dumps(item[1]), item[2]),
    )
    return {
        "states": len(number),
        "initial": sorted(number[s] for s in small.initial),
        "accepting": sorted(number[s] for s in small.accepting),
        "transitions": transitions,
    }


def automaton_from_dict(data: Any, alphabet: Sequence, where: str) -> FiniteAutomaton:
    if not isinstance(data, dict):
        raise DocumentError(where, "an automaton must be an object")
    try:
        count = int(data["states"])
        initial = [int(s) for s in data.get("initial", [])]
        accepting = [int(s) for s in data.get("accepting", [])]
        transitions = []
        for s, symbol, t in data.get("transitions", []):
            if isinstance(symbol, list):
                symbol = tuple(symbol)
            transitions.append((int(s), symbol, int(t)))
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(where, f"unreadable automaton: {exc}") from exc
    try:
        return FiniteAutomaton(tuple(alphabet), range(count), initial, accepting, transitions)
    except SemiautoError as exc:
        raise DocumentError(where, str(exc)) from exc


# --- structures -----------------------------------------------------------


def structure_to_dict(interpreted: InterpretedAutomaticStructure) -> Dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "generators": list(interpreted.generators),
        "rep_lang": automaton_to_dict(interpreted.rep_lang),
        "equality": automaton_to_dict(interpreted.equality.machine),
        "multipliers": {
            name: automaton_to_dict(interpreted.multipliers[name].machine) for name in interpreted.generators
        },
        "assignment": {name: list(interpreted.assignment[name]) for name in interpreted.generators},
        "flags": {
            "uniqueness": interpreted.has_uniqueness,
            "generators_embedded": interpreted.generators_embedded,
            "monoid_with_epsilon": interpreted.monoid_with_epsilon,
        },
    }


def structure_from_dict(data: Any) -> InterpretedAutomaticStructure:
    if not isinstance(data, dict):
        raise DocumentError("document", "top level must be an object")
    if data.get("format_version") != FORMAT_VERSION:
        raise DocumentError("format_version", f"expected {FORMAT_VERSION}, got {data.get('format_version')!r}")
    generators = data.get("generators")
    if not isinstance(generators, list) or not all(isinstance(name, str) for name in generators):
        raise DocumentError("generators", "must be a list of symbol names")
    generators = tuple(generators)
    pairs = rel.pair_alphabet(generators)
    language = automaton_from_dict(data.get("rep_lang"), generators, "rep_lang")
    equality = SynchronousAutomaton.normalized(
        generators, automaton_from_dict(data.get("equality"), pairs, "equality")
    )
    raw_multipliers = data.get("multipliers")
    if not isinstance(raw_multipliers, dict):
        raise DocumentError("multipliers", "must map every generator to an automaton")
    multipliers = {
        name: SynchronousAutomaton.normalized(
            generators, automaton_from_dict(machine, pairs, f"multipliers.{name}")
        )
        for name, machine in raw_multipliers.items()
    }
    flags = data.get("flags", {})
    try:
        structure = PreAutomaticStructure(generators, language, equality, multipliers)
        assignment = _assignment(structure, data.get("assignment"))
        if "flags" not in data:
            return interpret(structure, assignment)
        return InterpretedAutomaticStructure(
            structure,
            assignment,
            has_uniqueness=bool(flags.get("uniqueness", False)),
            generators_embedded=bool(flags.get("generators_embedded", False)),
            monoid_with_epsilon=bool(flags.get("monoid_with_epsilon", False)),
        )
    except DocumentError:
        raise
    except SemiautoError as exc:
        invariant = getattr(exc, "invariant", type(exc).__name__)
        raise DocumentError(invariant, str(exc)) from exc


def _assignment(structure: PreAutomaticStructure, raw: Any) -> GeneratorAssignment:
    if raw is None:
        try:
            return interpret(structure).assignment
        except GeneratorNotInL:
            debug("document: no assignment stored and letters are not representatives; searching")
            return find_assignment(structure)
    if not isinstance(raw, dict):
        raise DocumentError("assignment", "must map generators to words")
    return GeneratorAssignment({name: tuple(word) for name, word in raw.items()})


def _write_atomic(path: PathLike, text: str) -> None:
    path = Path(path)
    tmp_path = path.with_name(f"{path.name}.tmp")
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        with tmp_path.open("w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    finally:
        if tmp_path.exists():
            tmp_path.unlink()


def dumps_structure(interpreted: InterpretedAutomaticStructure) -> str:
    return json.dumps(structure_to_dict(interpreted), ensure_ascii=False, indent=2) + "\n"


def save_structure(interpreted: InterpretedAutomaticStructure, path: PathLike) -> None:
    _write_atomic(path, dumps_structure(interpreted))


def load_structure(path: PathLike) -> InterpretedAutomaticStructure:
    with Path(path).open("r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DocumentError("json", str(exc)) from exc
    return structure_from_dict(data)


# --- Cayley tables --------------------------------------------------------


def parse_cayley(text: str) -> CayleyTable:
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise DocumentError("cayley", "empty table")
    try:
        n = int(lines[0])
        rows = [[int(entry) for entry in line.split()] for line in lines[1: n + 1]]
    except ValueError as exc:
        raise DocumentError("cayley", f"expected integers: {exc}") from exc
    if n < 1 or len(rows) != n or any(len(row) != n for row in rows):
        raise DocumentError("cayley", f"expected {n} rows of {n} entries")
    names: Optional[List[str]] = None
    for line in lines[n + 1:]:
        key, _, value = line.partition(":")
        if key.strip().lower() != "names":
            raise DocumentError("cayley", f"unexpected line {line!r}")
        names = value.split()
    try:
        return CayleyTable.from_rows(rows, names)
    except SemiautoError:
        raise
    except ValueError as exc:
        raise DocumentError("cayley", str(exc)) from exc


def format_cayley(t: CayleyTable) -> str:
    lines = [str(t.order)]
    lines += [" ".join(str(int(entry)) for entry in row) for row in np.asarray(t.table)]
    lines.append("names: " + " ".join(t.names))
    return "\n".join(lines) + "\n"


def load_cayley(path: PathLike) -> CayleyTable:
    return parse_cayley(Path(path).read_text(encoding="utf-8"))


def load_machine(path: PathLike) -> TuringMachine:
    try:
        return parse_machine(Path(path).read_text(encoding="utf-8"))
    except MachineError as exc:
        raise DocumentError("machine", exc.reason) from exc


# --- words ----------------------------------------------------------------


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    """Dot-separated symbol names, or one character per symbol; "" and "ε" are empty."""
    text = text.strip()
    if text in ("", EMPTY_WORD_DISPLAY):
        return ()
    symbols = set(alphabet)
    if "." in text:
        word = tuple(text.split("."))
    elif text in symbols:
        word = (text,)
    else:
        word = tuple(text)
    for symbol in word:
        if symbol not in symbols:
            raise DocumentError("word", f"{symbol!r} is not a generator")
    return word
