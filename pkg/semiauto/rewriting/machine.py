"""Deterministic single-tape Turing machines with a left-bounded tape.

Text format, one declaration or transition per line, ``#`` starts a comment::

    states: q0 q1 qa
    alphabet: a b
    blank: B
    initial: q0
    accept: qa
    q0 a q1 b R
    q1 B qa a L

A transition line ``q s p b M`` reads symbol s (a letter or the blank) in
state q, writes the letter b, enters p and moves the head L or R.
"""

from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence, Tuple

from ..automata.relations import PAD
from ..config_types import typed_config
from ..errors import MachineError

MARK_PREFIX = "bar:"
RESERVED = ("d", "h", MARK_PREFIX + "h", PAD)


class Move(Enum):
    LEFT = "L"
    RIGHT = "R"


class RunStatus(Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    UNDECIDED = "undecided"


Action = Tuple[str, str, Move]


@dataclass(frozen=True, eq=False)
class TuringMachine:
    """M = (Q, Σ, B, q0, qa, δ) with δ partial on (Q \\ {qa}) x (Σ ∪ {B}).

    The machine halts as soon as it enters the accepting state, so that
    state has no transitions. A move to the left of the first cell has no
    successor configuration.
    """

    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    initial: str
    accepting: str
    transitions: Mapping[Tuple[str, str], Action]
    blank: str = "B"

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        table = {}
        for (state, symbol), (target, written, move) in dict(self.transitions).items():
            table[(state, symbol)] = (target, written, Move(move))
        object.__setattr__(self, "transitions", MappingProxyType(table))
        self._validate()

    def _validate(self) -> None:
        states, letters = self.states, self.alphabet
        if not states:
            raise MachineError("no states")
        if len(set(states)) != len(states) or len(set(letters)) != len(letters):
            raise MachineError("a state or letter is listed twice")
        names = states + letters + (self.blank,)
        if len(set(names)) != len(names):
            raise MachineError("states, letters and the blank must have distinct names")
        for name in names:
            if not name or name in RESERVED or name.startswith(MARK_PREFIX) or any(c.isspace() for c in name):
                raise MachineError(f"{name!r} is not a usable symbol name")
        for name in (self.initial, self.accepting):
            if name not in states:
                raise MachineError(f"{name!r} is not a state")
        readable = set(letters) | {self.blank}
        for (state, symbol), (target, written, _) in self.transitions.items():
            if state not in states or target not in states:
                raise MachineError(f"transition {state} {symbol} uses an unknown state")
            if state == self.accepting:
                raise MachineError("the accepting state has no transitions")
            if symbol not in readable:
                raise MachineError(f"transition {state} {symbol} reads an unknown symbol")
            if written not in letters:
                raise MachineError(f"transition {state} {symbol} must write a letter, not {written!r}")

    def action(self, state: str, symbol: str) -> Optional[Action]:
        return self.transitions.get((state, symbol))


@dataclass(frozen=True)
class MachineRun:
    """Outcome of a direct simulation; `tape` holds the written cells only."""

    status: RunStatus
    steps: int
    state: str
    tape: Tuple[str, ...]
    head: int

    @property
    def accepted(self) -> bool:
        return self.status is RunStatus.ACCEPTED


def simulate(machine: TuringMachine, word: Sequence[str], step_bound: Optional[int] = None) -> MachineRun:
    """Run the machine on `word` starting on its first cell."""
    bound = typed_config().search.machine_step_bound if step_bound is None else step_bound
    tape = list(word)
    for symbol in tape:
        if symbol not in machine.alphabet:
            raise MachineError(f"input symbol {symbol!r} is not in the alphabet")
    state, head, steps = machine.initial, 0, 0

    def run(status: RunStatus) -> MachineRun:
        return MachineRun(status, steps, state, tuple(tape), head)

    while True:
        if state == machine.accepting:
            return run(RunStatus.ACCEPTED)
        if steps >= bound:
            return run(RunStatus.UNDECIDED)
        symbol = tape[head] if head < len(tape) else machine.blank
        action = machine.action(state, symbol)
        if action is None:
            return run(RunStatus.REJECTED)
        target, written, move = action
        if move is Move.LEFT and head == 0:
            return run(RunStatus.REJECTED)
        if head == len(tape):
            tape.append(written)
        else:
            tape[head] = written
        state = target
        head += 1 if move is Move.RIGHT else -1
        steps += 1


# --- text format ----------------------------------------------------------

_HEADERS = ("states", "alphabet", "blank", "initial", "accept")


def parse_machine(text: str) -> TuringMachine:
    headers: Dict[str, Tuple[str, ...]] = {}
    transitions: Dict[Tuple[str, str], Action] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            key = key.strip().lower()
            if key not in _HEADERS:
                raise MachineError(f"line {number}: unknown header {key!r}")
            headers[key] = tuple(value.split())
            continue
        fields = line.split()
        if len(fields) != 5:
            raise MachineError(f"line {number}: expected 'state symbol state letter L|R'")
        state, symbol, target, written, move = fields
        if move.upper() not in ("L", "R"):
            raise MachineError(f"line {number}: move must be L or R, got {move!r}")
        if (state, symbol) in transitions:
            raise MachineError(f"line {number}: second transition for {state} {symbol}")
        transitions[(state, symbol)] = (target, written, Move(move.upper()))

    for key in ("states", "alphabet", "initial", "accept"):
        if key not in headers:
            raise MachineError(f"missing '{key}:' line")
    single = {}
    for key in ("blank", "initial", "accept"):
        values = headers.get(key, ("B",) if key == "blank" else ())
        if len(values) != 1:
            raise MachineError(f"'{key}:' takes exactly one name")
        single[key] = values[0]
    return TuringMachine(
        states=headers["states"],
        alphabet=headers["alphabet"],
        initial=single["initial"],
        accepting=single["accept"],
        transitions=transitions,
        blank=single["blank"],
    )


def format_machine(machine: TuringMachine) -> str:
    lines = [
        f"states: {' '.join(machine.states)}",
        f"alphabet: {' '.join(machine.alphabet)}",
        f"blank: {machine.blank}",
        f"initial: {machine.initial}",
        f"accept: {machine.accepting}",
    ]
    order = {name: index for index, name in enumerate(machine.alphabet + (machine.blank,))}
    position = {name: index for index, name in enumerate(machine.states)}
    for (state, symbol) in sorted(machine.transitions, key=lambda key: (position[key[0]], order[key[1]])):
        target, written, move = machine.transitions[(state, symbol)]
        lines.append(f"{state} {symbol} {target} {written} {move.value}")
    return "\n".join(lines) + "\n"
