"""Finite automata over arbitrary hashable symbols.

Automata are immutable values. Constructions explore only reachable states
(see `crawl`) and number them 0, 1, 2, ... in discovery order. `minimize`
additionally explores in alphabet order from a single initial state, so
equal languages yield equal automata.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Hashable,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from ..errors import AlphabetMismatch, MalformedAutomaton

Symbol = Hashable
State = Hashable
Word = Tuple[Symbol, ...]
Move = Tuple[Optional[Symbol], State]


@dataclass(frozen=True)
class FiniteAutomaton:
    """Nondeterministic finite automaton with optional ε-moves.

    Attributes:
        alphabet: Ordered symbols; the order is the shortlex order used by
            `enumerate_words`.
        states: All states.
        initial: Initial states (possibly empty).
        accepting: Accepting states.
        transitions: (source, symbol, target) triples.
        epsilon_moves: (source, target) pairs.
    """

    alphabet: Tuple[Symbol, ...]
    states: FrozenSet[State]
    initial: FrozenSet[State]
    accepting: FrozenSet[State]
    transitions: FrozenSet[Tuple[State, Symbol, State]] = frozenset()
    epsilon_moves: FrozenSet[Tuple[State, State]] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "epsilon_moves", frozenset(self.epsilon_moves))

        if len(set(self.alphabet)) != len(self.alphabet):
            raise MalformedAutomaton("alphabet lists a symbol twice")
        if not self.initial <= self.states:
            raise MalformedAutomaton("initial states must be declared states")
        if not self.accepting <= self.states:
            raise MalformedAutomaton("accepting states must be declared states")
        symbols = set(self.alphabet)
        for source, symbol, target in self.transitions:
            if source not in self.states or target not in self.states:
                raise MalformedAutomaton(f"transition {source!r} -{symbol!r}-> {target!r} leaves the state set")
            if symbol not in symbols:
                raise MalformedAutomaton(f"transition symbol {symbol!r} is not in the alphabet")
        for source, target in self.epsilon_moves:
            if source not in self.states or target not in self.states:
                raise MalformedAutomaton(f"ε-move {source!r} -> {target!r} leaves the state set")

    @cached_property
    def delta(self) -> Dict[State, Dict[Symbol, Tuple[State, ...]]]:
        """Transition index: state -> symbol -> targets."""
        table: Dict[State, Dict[Symbol, List[State]]] = {}
        for source, symbol, target in self.transitions:
            table.setdefault(source, {}).setdefault(symbol, []).append(target)
        return {state: {symbol: tuple(targets) for symbol, targets in row.items()}
                for state, row in table.items()}

    @cached_property
    def _epsilon_index(self) -> Dict[State, Tuple[State, ...]]:
        table: Dict[State, List[State]] = {}
        for source, target in self.epsilon_moves:
            table.setdefault(source, []).append(target)
        return {state: tuple(targets) for state, targets in table.items()}

    @property
    def is_deterministic(self) -> bool:
        return (
            len(self.initial) <= 1
            and not self.epsilon_moves
            and all(len(targets) == 1 for row in self.delta.values() for targets in row.values())
        )

    def successors(self, state: State, symbol: Symbol) -> Tuple[State, ...]:
        return self.delta.get(state, {}).get(symbol, ())

    def moves(self, state: State) -> Iterator[Move]:
        """All moves out of `state`; ε-moves carry the symbol None."""
        for symbol, targets in self.delta.get(state, {}).items():
            for target in targets:
                yield symbol, target
        for target in self._epsilon_index.get(state, ()):
            yield None, target

    def closure(self, states: Iterable[State]) -> FrozenSet[State]:
        """ε-closure of a set of states."""
        seen = set(states)
        if not self.epsilon_moves:
            return frozenset(seen)
        stack = list(seen)
        while stack:
            state = stack.pop()
            for target in self._epsilon_index.get(state, ()):
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
        return frozenset(seen)

    def step(self, states: Iterable[State], symbol: Symbol) -> FrozenSet[State]:
        """ε-closed successor set of `states` on `symbol`."""
        targets = set()
        for state in states:
            targets.update(self.successors(state, symbol))
        return self.closure(targets)


def crawl(
    alphabet: Sequence[Symbol],
    starts: Iterable[State],
    is_final: Callable[[State], bool],
    follow: Callable[[State], Iterable[Move]],
) -> FiniteAutomaton:
    """Build an automaton by exploring states breadth-first.

    `follow(state)` yields (symbol, next_state) pairs, symbol None meaning an
    ε-move. Only states reachable from `starts` are materialised; they are
    renumbered 0, 1, ... in discovery order.
    """
    index: Dict[State, int] = {}
    queue: deque = deque()
    for state in starts:
        if state not in index:
            index[state] = len(index)
            queue.append(state)
    initial = frozenset(index.values())
    transitions = set()
    epsilon_moves = set()
    accepting = set()
    while queue:
        state = queue.popleft()
        number = index[state]
        if is_final(state):
            accepting.add(number)
        for symbol, target in follow(state):
            if target not in index:
                index[target] = len(index)
                queue.append(target)
            if symbol is None:
                epsilon_moves.add((number, index[target]))
            else:
                transitions.add((number, symbol, index[target]))
    return FiniteAutomaton(
        tuple(alphabet),
        frozenset(range(len(index))),
        initial,
        frozenset(accepting),
        frozenset(transitions),
        frozenset(epsilon_moves),
    )


def _check_alphabets(first: FiniteAutomaton, second: FiniteAutomaton) -> None:
    if set(first.alphabet) != set(second.alphabet):
        raise AlphabetMismatch(first.alphabet, second.alphabet)


def _check_word(m: FiniteAutomaton, word: Sequence[Symbol]) -> Word:
    word = tuple(word)
    symbols = set(m.alphabet)
    if any(symbol not in symbols for symbol in word):
        raise AlphabetMismatch(m.alphabet, word)
    return word


# --- constructors ---------------------------------------------------------


def empty_language(alphabet: Sequence[Symbol]) -> FiniteAutomaton:
    return FiniteAutomaton(tuple(alphabet), frozenset({0}), frozenset({0}), frozenset())


def universal(alphabet: Sequence[Symbol]) -> FiniteAutomaton:
    """Automaton for alphabet*."""
    alphabet = tuple(alphabet)
    return FiniteAutomaton(
        alphabet,
        frozenset({0}),
        frozenset({0}),
        frozenset({0}),
        frozenset((0, symbol, 0) for symbol in alphabet),
    )


def nonempty_words(alphabet: Sequence[Symbol]) -> FiniteAutomaton:
    """Automaton for alphabet+."""
    alphabet = tuple(alphabet)
    transitions = {(0, symbol, 1) for symbol in alphabet} | {(1, symbol, 1) for symbol in alphabet}
    return FiniteAutomaton(alphabet, frozenset({0, 1}), frozenset({0}), frozenset({1}), frozenset(transitions))


def from_words(alphabet: Sequence[Symbol], words: Iterable[Sequence[Symbol]]) -> FiniteAutomaton:
    """Trie automaton for a finite set of words."""
    alphabet = tuple(alphabet)
    symbols = set(alphabet)
    nodes: Dict[Word, int] = {(): 0}
    transitions = set()
    accepting = set()
    for word in words:
        word = tuple(word)
        if any(symbol not in symbols for symbol in word):
            raise AlphabetMismatch(alphabet, word)
        for position, symbol in enumerate(word):
            prefix = word[: position + 1]
            if prefix not in nodes:
                nodes[prefix] = len(nodes)
                transitions.add((nodes[word[:position]], symbol, nodes[prefix]))
        accepting.add(nodes[word])
    return FiniteAutomaton(
        alphabet, frozenset(nodes.values()), frozenset({0}), frozenset(accepting), frozenset(transitions)
    )


def from_word(alphabet: Sequence[Symbol], word: Sequence[Symbol]) -> FiniteAutomaton:
    return from_words(alphabet, [word])


def with_alphabet(m: FiniteAutomaton, alphabet: Sequence[Symbol]) -> FiniteAutomaton:
    """Same automaton over a larger (or reordered) alphabet."""
    alphabet = tuple(alphabet)
    if not set(m.alphabet) <= set(alphabet):
        raise AlphabetMismatch(alphabet, m.alphabet)
    return FiniteAutomaton(alphabet, m.states, m.initial, m.accepting, m.transitions, m.epsilon_moves)


def relabel(
    m: FiniteAutomaton,
    mapping: Callable[[Symbol], Optional[Symbol]],
    alphabet: Sequence[Symbol],
) -> FiniteAutomaton:
    """Substitute every transition symbol; a None image turns the move into ε."""
    transitions = set()
    epsilon_moves = set(m.epsilon_moves)
    for source, symbol, target in m.transitions:
        image = mapping(symbol)
        if image is None:
            epsilon_moves.add((source, target))
        else:
            transitions.add((source, image, target))
    return FiniteAutomaton(
        tuple(alphabet), m.states, m.initial, m.accepting, frozenset(transitions), frozenset(epsilon_moves)
    )


def concatenate(first: FiniteAutomaton, second: FiniteAutomaton) -> FiniteAutomaton:
    _check_alphabets(first, second)
    parts = (first, second)

    def follow(state):
        side, inner = state
        for symbol, target in parts[side].moves(inner):
            yield symbol, (side, target)
        if side == 0 and inner in first.accepting:
            for target in second.initial:
                yield None, (1, target)

    return crawl(
        first.alphabet,
        [(0, state) for state in first.initial],
        lambda state: state[0] == 1 and state[1] in second.accepting,
        follow,
    )


def star(m: FiniteAutomaton) -> FiniteAutomaton:
    hub = (0, None)

    def follow(state):
        if state == hub:
            for target in m.initial:
                yield None, (1, target)
            return
        for symbol, target in m.moves(state[1]):
            yield symbol, (1, target)
        if state[1] in m.accepting:
            yield None, hub

    return crawl(m.alphabet, [hub], lambda state: state == hub or state[1] in m.accepting, follow)


# --- normal forms ---------------------------------------------------------


def epsilon_free(m: FiniteAutomaton) -> FiniteAutomaton:
    """Equivalent automaton on the same states without ε-moves."""
    if not m.epsilon_moves:
        return m
    transitions = set()
    accepting = set()
    for state in m.states:
        reach = m.closure([state])
        if reach & m.accepting:
            accepting.add(state)
        for inner in reach:
            for symbol, targets in m.delta.get(inner, {}).items():
                for target in targets:
                    transitions.add((state, symbol, target))
    return FiniteAutomaton(m.alphabet, m.states, m.initial, frozenset(accepting), frozenset(transitions))


def _reachable(m: FiniteAutomaton) -> set:
    seen = set(m.initial)
    stack = list(seen)
    while stack:
        state = stack.pop()
        for _, target in m.moves(state):
            if target not in seen:
                seen.add(target)
                stack.append(target)
    return seen


def trim(m: FiniteAutomaton) -> FiniteAutomaton:
    """Drop states that are unreachable or cannot reach acceptance."""
    forward = _reachable(m)
    reverse: Dict[State, List[State]] = {}
    for source, _, target in m.transitions:
        reverse.setdefault(target, []).append(source)
    for source, target in m.epsilon_moves:
        reverse.setdefault(target, []).append(source)
    backward = set(m.accepting)
    stack = list(backward)
    while stack:
        state = stack.pop()
        for source in reverse.get(state, ()):
            if source not in backward:
                backward.add(source)
                stack.append(source)
    useful = frozenset(forward & backward)
    return FiniteAutomaton(
        m.alphabet,
        useful,
        m.initial & useful,
        m.accepting & useful,
        frozenset(t for t in m.transitions if t[0] in useful and t[2] in useful),
        frozenset(e for e in m.epsilon_moves if e[0] in useful and e[1] in useful),
    )


def determinize(m: FiniteAutomaton) -> FiniteAutomaton:
    """Subset construction; the result is complete over m's alphabet."""
    start = m.closure(m.initial)

    def follow(subset):
        for symbol in m.alphabet:
            yield symbol, m.step(subset, symbol)

    return crawl(m.alphabet, [start], lambda subset: bool(subset & m.accepting), follow)


def _dfa_table(d: FiniteAutomaton) -> Dict[State, Tuple[State, ...]]:
    return {
        state: tuple(d.delta[state][symbol][0] for symbol in d.alphabet) if d.alphabet else ()
        for state in d.states
    }


def minimize(m: FiniteAutomaton) -> FiniteAutomaton:
    """Minimal complete DFA, canonically numbered (Moore refinement)."""
    d = determinize(m)
    table = _dfa_table(d)
    states = sorted(d.states)
    block = {state: int(state in d.accepting) for state in states}
    count = len(set(block.values()))
    while True:
        signatures: Dict[Tuple[int, ...], int] = {}
        refined = {}
        for state in states:
            key = (block[state],) + tuple(block[target] for target in table[state])
            refined[state] = signatures.setdefault(key, len(signatures))
        if len(signatures) == count:
            break
        block, count = refined, len(signatures)

    representative: Dict[int, State] = {}
    for state in states:
        representative.setdefault(block[state], state)
    start = block[next(iter(d.initial))]

    def follow(number):
        row = table[representative[number]]
        for position, symbol in enumerate(d.alphabet):
            yield symbol, block[row[position]]

    return crawl(d.alphabet, [start], lambda number: representative[number] in d.accepting, follow)


def compact(m: FiniteAutomaton) -> FiniteAutomaton:
    """Minimal DFA without its dead state."""
    return trim(minimize(m))


# --- boolean algebra ------------------------------------------------------


def complement(m: FiniteAutomaton) -> FiniteAutomaton:
    """Complement relative to m's own alphabet."""
    d = determinize(m)
    return FiniteAutomaton(d.alphabet, d.states, d.initial, d.states - d.accepting, d.transitions)


def intersect(first: FiniteAutomaton, second: FiniteAutomaton) -> FiniteAutomaton:
    _check_alphabets(first, second)
    left, right = epsilon_free(first), epsilon_free(second)

    def follow(pair):
        p, q = pair
        row = right.delta.get(q, {})
        for symbol, targets in left.delta.get(p, {}).items():
            others = row.get(symbol)
            if not others:
                continue
            for target in targets:
                for other in others:
                    yield symbol, (target, other)

    return crawl(
        first.alphabet,
        [(p, q) for p in left.initial for q in right.initial],
        lambda pair: pair[0] in left.accepting and pair[1] in right.accepting,
        follow,
    )


def union(first: FiniteAutomaton, second: FiniteAutomaton) -> FiniteAutomaton:
    _check_alphabets(first, second)
    parts = (first, second)

    def follow(state):
        side, inner = state
        for symbol, target in parts[side].moves(inner):
            yield symbol, (side, target)

    return crawl(
        first.alphabet,
        [(0, s) for s in first.initial] + [(1, s) for s in second.initial],
        lambda state: state[1] in parts[state[0]].accepting,
        follow,
    )


def difference(first: FiniteAutomaton, second: FiniteAutomaton) -> FiniteAutomaton:
    _check_alphabets(first, second)
    return intersect(first, complement(with_alphabet(second, first.alphabet)))


# --- decisions ------------------------------------------------------------


def is_empty(m: FiniteAutomaton) -> bool:
    return not (_reachable(m) & m.accepting)


def _targets(m: FiniteAutomaton, state: State) -> Iterator[State]:
    for targets in m.delta.get(state, {}).values():
        yield from targets


def is_finite(m: FiniteAutomaton) -> bool:
    """True iff the language is finite (no cycle on a useful path)."""
    core = trim(epsilon_free(m))
    colour: Dict[State, int] = {}
    for root in core.states:
        if root in colour:
            continue
        colour[root] = 1
        stack = [(root, _targets(core, root))]
        while stack:
            state, pending = stack[-1]
            advanced = False
            for target in pending:
                mark = colour.get(target, 0)
                if mark == 1:
                    return False
                if mark == 0:
                    colour[target] = 1
                    stack.append((target, _targets(core, target)))
                    advanced = True
                    break
            if not advanced:
                colour[state] = 2
                stack.pop()
    return True


def is_subset(first: FiniteAutomaton, second: FiniteAutomaton) -> bool:
    """True iff L(first) ⊆ L(second), by an on-the-fly product with subsets of `second`."""
    _check_alphabets(first, second)
    left = epsilon_free(first)
    start_subset = second.closure(second.initial)
    seen = {(p, start_subset) for p in left.initial}
    queue = deque(seen)
    while queue:
        p, subset = queue.popleft()
        if p in left.accepting and not (subset & second.accepting):
            return False
        for symbol, targets in left.delta.get(p, {}).items():
            following = second.step(subset, symbol)
            for target in targets:
                pair = (target, following)
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
    return True


def are_equivalent(first: FiniteAutomaton, second: FiniteAutomaton) -> bool:
    return is_subset(first, second) and is_subset(second, first)


def contains(m: FiniteAutomaton, word: Sequence[Symbol]) -> bool:
    word = _check_word(m, word)
    current = m.closure(m.initial)
    for symbol in word:
        current = m.step(current, symbol)
        if not current:
            return False
    return bool(current & m.accepting)


def enumerate_words(
    m: FiniteAutomaton,
    max_count: Optional[int] = None,
    max_length: Optional[int] = None,
) -> List[Word]:
    """Accepted words in shortlex order (alphabet declaration order).

    Stops after `max_count` words or once lengths exceed `max_length`. A
    finite language needs neither bound; an infinite one needs at least one.
    """
    if max_count is not None and max_count <= 0:
        return []
    d = determinize(m)
    table = _dfa_table(d)
    if max_length is None:
        if is_finite(d):
            max_length = len(d.states)
        elif max_count is None:
            raise ValueError("enumerating an infinite language needs max_count or max_length")

    start = next(iter(d.initial))
    alphabet = d.alphabet
    live: List[FrozenSet[State]] = [frozenset(d.accepting)]
    found: List[Word] = []
    length = 0
    while max_length is None or length <= max_length:
        while len(live) <= length:
            previous = live[-1]
            live.append(frozenset(s for s in d.states if any(t in previous for t in table[s])))
        if start in live[length]:
            stack = [(start, (), length)]
            while stack:
                state, prefix, remaining = stack.pop()
                if remaining == 0:
                    found.append(prefix)
                    if max_count is not None and len(found) >= max_count:
                        return found
                    continue
                row = table[state]
                wanted = live[remaining - 1]
                for position in range(len(alphabet) - 1, -1, -1):
                    target = row[position]
                    if target in wanted:
                        stack.append((target, prefix + (alphabet[position],), remaining - 1))
        length += 1
    return found


def shortlex_first(m: FiniteAutomaton) -> Optional[Word]:
    """Shortlex-least accepted word, or None for the empty language."""
    words = enumerate_words(m, max_count=1)
    return words[0] if words else None


def shortlex_key(alphabet: Sequence[Symbol]) -> Callable[[Sequence[Symbol]], Tuple[int, Tuple[int, ...]]]:
    """Sort key realising shortlex order for words over `alphabet`."""
    position = {symbol: index for index, symbol in enumerate(alphabet)}

    def key(word: Sequence[Symbol]) -> Tuple[int, Tuple[int, ...]]:
        return len(word), tuple(position[symbol] for symbol in word)

    return key
