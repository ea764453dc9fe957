"""Finite semigroups as Cayley tables: brute-force ground truth for the decision procedures.

Elements are numbered 0..n-1 and `table[x, y]` is the index of x·y. Every
table is checked for associativity when it is built.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .automata import core
from .automata import relations as rel
from .automata.relations import PAD
from .config_types import typed_config
from .decisions import (
    generator_coordinates,
    identity,
    is_completely_simple,
    is_completely_zero_simple,
    is_right_cancellative,
    is_unit,
    left_zeros,
    rees_decomposition,
    rees_decomposition_simple,
    rees_multiply,
    triple_word,
    word_problem,
    zero,
)
from .errors import NotAssociative, NotSimple, SemiautoError
from .structure import GeneratorAssignment, InterpretedAutomaticStructure, PreAutomaticStructure
from .utils import STATUS_ERROR, DiagnosticResult, debug


@dataclass(frozen=True, eq=False)
class CayleyTable:
    names: Tuple[str, ...]
    table: np.ndarray

    def __post_init__(self) -> None:
        names = tuple(str(name) for name in self.names)
        table = np.array(self.table, dtype=np.int64)
        n = len(names)
        if n == 0:
            raise ValueError("a semigroup needs at least one element")
        if table.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} table, got shape {table.shape}")
        if len(set(names)) != n:
            raise ValueError("element names must be distinct")
        for name in names:
            if not name or name == PAD or "." in name or any(c.isspace() for c in name):
                raise ValueError(f"{name!r} is not a usable element name")
        if table.min() < 0 or table.max() >= n:
            raise ValueError("table entries must be element indices")
        # (xy)z and x(yz) for every triple at once
        left = table[table]
        right = table[:, table]
        bad = np.argwhere(left != right)
        if len(bad):
            x, y, z = (int(i) for i in bad[0])
            raise NotAssociative(x, y, z)
        table.setflags(write=False)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None) -> "CayleyTable":
        if names is None:
            names = [f"s{i}" for i in range(len(rows))]
        return cls(tuple(names), np.array(rows, dtype=np.int64))

    @property
    def order(self) -> int:
        return len(self.names)

    def product(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def index(self, name: str) -> int:
        return self.names.index(name)


def from_cayley(t: CayleyTable) -> InterpretedAutomaticStructure:
    """Every element is a generator and its own one-letter representative."""
    generators = t.names
    language = core.from_words(generators, [(name,) for name in generators])
    multipliers = {
        a: rel.relation_from_pairs(
            generators, [((b,), (generators[t.product(j, i)],)) for j, b in enumerate(generators)]
        )
        for i, a in enumerate(generators)
    }
    structure = PreAutomaticStructure(generators, language, rel.diagonal(language), multipliers)
    return InterpretedAutomaticStructure(
        structure,
        GeneratorAssignment({name: (name,) for name in generators}),
        has_uniqueness=True,
        generators_embedded=True,
    )


# --- brute force ----------------------------------------------------------


@dataclass(frozen=True)
class BruteProperties:
    """Textbook properties of a finite semigroup, computed from the table.

    Green's relations are boolean n x n matrices.
    """

    idempotents: Tuple[int, ...]
    left_zeros: Tuple[int, ...]
    right_zeros: Tuple[int, ...]
    zero: Optional[int]
    identity: Optional[int]
    units: Tuple[int, ...]
    right_cancellative: bool
    left_cancellative: bool
    left_reductive: bool
    green_r: np.ndarray
    green_l: np.ndarray
    green_h: np.ndarray
    green_d: np.ndarray
    completely_simple: bool
    completely_zero_simple: bool


def _one_sided_ideals(table: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Membership matrices of xS¹ and S¹x."""
    n = len(table)
    eye = np.eye(n, dtype=bool)
    right = eye.copy()
    left = eye.copy()
    for x in range(n):
        right[x, table[x, :]] = True
        left[x, table[:, x]] = True
    return right, left


def _two_sided_ideals(table: np.ndarray) -> np.ndarray:
    """Membership matrix of S¹xS¹."""
    right, _ = _one_sided_ideals(table)
    n = len(table)
    ideals = right.copy()
    for x in range(n):
        members = np.flatnonzero(right[x])
        ideals[x, table[:, members].ravel()] = True
    return ideals


def brute_properties(t: CayleyTable) -> BruteProperties:
    table = t.table
    n = t.order
    indices = np.arange(n)
    idempotents = tuple(int(x) for x in indices[table[indices, indices] == indices])
    left_zeros = tuple(x for x in range(n) if np.all(table[x, :] == x))
    right_zeros = tuple(x for x in range(n) if np.all(table[:, x] == x))
    zeros = set(left_zeros) & set(right_zeros)
    zero = zeros.pop() if zeros else None
    identity = next(
        (e for e in range(n) if np.array_equal(table[e, :], indices) and np.array_equal(table[:, e], indices)),
        None,
    )
    units: Tuple[int, ...] = ()
    if identity is not None:
        units = tuple(
            x for x in range(n) if np.any((table[x, :] == identity) & (table[:, x] == identity))
        )
    right_cancellative = all(len(np.unique(table[:, s])) == n for s in range(n))
    left_cancellative = all(len(np.unique(table[s, :])) == n for s in range(n))
    left_reductive = len(np.unique(table.T, axis=0)) == n

    right, left = _one_sided_ideals(table)
    same_right = np.array([[np.array_equal(right[x], right[y]) for y in range(n)] for x in range(n)])
    same_left = np.array([[np.array_equal(left[x], left[y]) for y in range(n)] for x in range(n)])
    green_h = same_right & same_left
    green_d = (same_right.astype(np.int64) @ same_left.astype(np.int64)) > 0

    # finite: completely simple iff there is a single principal two-sided ideal
    ideals = _two_sided_ideals(table)
    completely_simple = bool(ideals.all())
    completely_zero_simple = False
    if zero is not None and n > 1:
        nonzero = [x for x in range(n) if x != zero]
        squares_to_zero = bool(np.all(table == zero))
        completely_zero_simple = not squares_to_zero and all(ideals[x].all() for x in nonzero)

    return BruteProperties(
        idempotents=idempotents,
        left_zeros=left_zeros,
        right_zeros=right_zeros,
        zero=zero,
        identity=identity,
        units=units,
        right_cancellative=right_cancellative,
        left_cancellative=left_cancellative,
        left_reductive=left_reductive,
        green_r=same_right,
        green_l=same_left,
        green_h=green_h,
        green_d=green_d,
        completely_simple=completely_simple,
        completely_zero_simple=completely_zero_simple,
    )


Coordinates = Optional[Tuple[int, int, int]]


@dataclass(frozen=True, eq=False)
class ReesData:
    """M⁰(G; I, Λ; P) read off a finite completely (zero-)simple table.

    `group` lists the elements of a maximal subgroup H_e, `group_table` its
    multiplication in local indices. An element in row i and column λ is
    r_i·g·q_λ; `sandwich[λ][i]` is q_λ·r_i as a local group index, or None
    when that product is zero.
    """

    table: CayleyTable
    zero: Optional[int]
    rows: Tuple[Tuple[int, ...], ...]
    cols: Tuple[Tuple[int, ...], ...]
    group: Tuple[int, ...]
    group_table: np.ndarray
    row_reps: Tuple[int, ...]
    col_reps: Tuple[int, ...]
    sandwich: Tuple[Tuple[Optional[int], ...], ...]
    coordinates: Dict[int, Tuple[int, int, int]]

    def multiply(self, first: Coordinates, second: Coordinates) -> Coordinates:
        if first is None or second is None:
            return None
        i, g, lam = first
        j, h, mu = second
        entry = self.sandwich[lam][j]
        if entry is None:
            return None
        return i, int(self.group_table[self.group_table[g, entry], h]), mu

    def element(self, coordinates: Coordinates) -> int:
        if coordinates is None:
            if self.zero is None:
                raise ValueError("no zero element")
            return self.zero
        i, g, lam = coordinates
        t = self.table
        return t.product(t.product(self.row_reps[i], self.group[g]), self.col_reps[lam])

    def verify(self) -> bool:
        """Re-multiply every pair through the Rees formula and compare with the table."""
        t = self.table
        for x in range(t.order):
            for y in range(t.order):
                product = self.multiply(self.coordinates.get(x), self.coordinates.get(y))
                if self.element(product) != t.product(x, y):
                    return False
        return True


def _classes(relation: np.ndarray, members: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    classes: List[Tuple[int, ...]] = []
    seen = set()
    for x in members:
        if x in seen:
            continue
        block = tuple(y for y in members if relation[x, y])
        seen.update(block)
        classes.append(block)
    return tuple(classes)


def brute_rees(t: CayleyTable) -> ReesData:
    properties = brute_properties(t)
    if not (properties.completely_simple or properties.completely_zero_simple):
        raise NotSimple("the table has a proper nonzero ideal")
    zero = properties.zero if properties.completely_zero_simple else None
    members = [x for x in range(t.order) if x != zero]
    rows = _classes(properties.green_r, members)
    cols = _classes(properties.green_l, members)
    e = next(x for x in properties.idempotents if x != zero)
    group = tuple(x for x in members if properties.green_h[e, x])
    local = {x: position for position, x in enumerate(group)}
    group_table = np.array([[local[t.product(g, h)] for h in group] for g in group], dtype=np.int64)
    row_reps = tuple(next(x for x in row if properties.green_l[e, x]) for row in rows)
    col_reps = tuple(next(x for x in col if properties.green_r[e, x]) for col in cols)
    sandwich = tuple(
        tuple(local.get(t.product(q, r)) for r in row_reps)
        for q in col_reps
    )
    coordinates: Dict[int, Tuple[int, int, int]] = {}
    for i, r in enumerate(row_reps):
        for lam, q in enumerate(col_reps):
            for position, g in enumerate(group):
                coordinates[t.product(t.product(r, g), q)] = (i, position, lam)
    data = ReesData(t, zero, rows, cols, group, group_table, row_reps, col_reps, sandwich, coordinates)
    if len(coordinates) != len(members) or not data.verify():
        raise NotSimple("the Rees coordinates do not reproduce the table")
    return data


# --- named and random tables ----------------------------------------------


def trivial_semigroup() -> CayleyTable:
    return CayleyTable(("e",), np.zeros((1, 1), dtype=np.int64))


def cyclic_group(n: int = 2) -> CayleyTable:
    names = ["1", "g"] + [f"g{k}" for k in range(2, n)]
    indices = np.arange(n)
    return CayleyTable(tuple(names[:n]), (indices[:, None] + indices[None, :]) % n)


def semilattice() -> CayleyTable:
    """{e, z} with e·e = e and every other product z."""
    return CayleyTable.from_rows([[0, 1], [1, 1]], ["e", "z"])


def left_zero_semigroup(k: int = 2) -> CayleyTable:
    names = ["x", "y"] + [f"x{i}" for i in range(2, k)]
    return CayleyTable(tuple(names[:k]), np.repeat(np.arange(k)[:, None], k, axis=1))


def rectangular_band(m: int = 2, n: int = 2) -> CayleyTable:
    """I x Λ with (i, λ)(j, μ) = (i, μ)."""
    cells = [(i, lam) for i in range(m) for lam in range(n)]
    rows = [[cells.index((i, mu)) for (_, mu) in cells] for (i, _) in cells]
    return CayleyTable.from_rows(rows, [f"r{i + 1}{lam + 1}" for i, lam in cells])


def brandt_semigroup() -> CayleyTable:
    """B₂: matrix units e_ij of 2x2 matrices with e_ij·e_kl = e_il when j = k, else 0."""
    units = [(1, 1), (1, 2), (2, 1), (2, 2)]
    zero = len(units)
    rows = []
    for (i, j) in units:
        row = [units.index((i, l)) if j == k else zero for (k, l) in units]
        rows.append(row + [zero])
    rows.append([zero] * (zero + 1))
    return CayleyTable.from_rows(rows, [f"e{i}{j}" for i, j in units] + ["0"])


def named_tables() -> Dict[str, CayleyTable]:
    return {
        "trivial": trivial_semigroup(),
        "c2": cyclic_group(2),
        "semilattice": semilattice(),
        "left-zero": left_zero_semigroup(2),
        "rectangular-band": rectangular_band(2, 2),
        "brandt": brandt_semigroup(),
    }


def _closure(maps: np.ndarray) -> List[Tuple[int, ...]]:
    """Subsemigroup of the full transformation monoid generated by the rows of `maps`."""
    generators = [tuple(int(v) for v in m) for m in maps]
    elements: List[Tuple[int, ...]] = []
    seen = set()
    frontier = list(dict.fromkeys(generators))
    while frontier:
        following = []
        for f in frontier:
            if f in seen:
                continue
            seen.add(f)
            elements.append(f)
            for g in generators:
                # f then g
                composed = tuple(g[x] for x in f)
                if composed not in seen:
                    following.append(composed)
        frontier = following
    return elements


def random_semigroup(seed: int, points: int = 3, generator_count: int = 2) -> CayleyTable:
    """Closure of random self-maps of {0, ..., points-1}; the same seed gives the same table."""
    rng = np.random.default_rng(seed)
    maps = rng.integers(0, points, size=(generator_count, points))
    elements = _closure(maps)
    index = {f: position for position, f in enumerate(elements)}
    rows = [[index[tuple(g[x] for x in f)] for g in elements] for f in elements]
    return CayleyTable.from_rows(rows)


def random_suite(
    seed: Optional[int] = None,
    count: Optional[int] = None,
    max_order: Optional[int] = None,
    points: Optional[int] = None,
    max_generators: Optional[int] = None,
) -> List[CayleyTable]:
    """`count` random tables of order at most `max_order`, deterministic per seed."""
    settings = typed_config().oracle
    seed = settings.seed if seed is None else seed
    count = settings.count if count is None else count
    max_order = settings.max_order if max_order is None else max_order
    points = settings.points if points is None else points
    max_generators = settings.max_generators if max_generators is None else max_generators

    rng = np.random.default_rng(seed)
    tables: List[CayleyTable] = []
    attempts = 0
    while len(tables) < count and attempts < 50 * max(count, 1):
        attempts += 1
        sub_seed = int(rng.integers(0, 2**32 - 1))
        generators = int(rng.integers(1, max_generators + 1))
        table = random_semigroup(sub_seed, points, generators)
        if table.order <= max_order:
            tables.append(table)
    debug(f"random_suite: {len(tables)} tables after {attempts} draws (seed {seed})")
    return tables


# --- oracle equivalence ---------------------------------------------------


def check_table(t: CayleyTable, bound: Optional[int] = None) -> List[DiagnosticResult]:
    """Compare every decision procedure with brute force; returns the mismatches."""
    structure = from_cayley(t)
    expected = brute_properties(t)
    names = t.names
    mismatches: List[DiagnosticResult] = []

    def compare(key: str, label: str, got, want) -> None:
        if got != want:
            mismatches.append(DiagnosticResult(key, label, STATUS_ERROR, f"decided {got!r}, brute force {want!r}"))

    def name_of(word) -> Optional[str]:
        return None if word is None else ".".join(word)

    found_left_zeros = {name_of(w) for w in core.enumerate_words(left_zeros(structure))}
    compare("left-zeros", "Left zeros", found_left_zeros, {names[x] for x in expected.left_zeros})
    compare("zero", "Zero", name_of(zero(structure, bound)),
            None if expected.zero is None else names[expected.zero])
    compare("identity", "Identity", name_of(identity(structure, bound)),
            None if expected.identity is None else names[expected.identity])
    if expected.identity is not None:
        units = {name for name in names if is_unit(structure, (name,))}
        compare("units", "Units", units, {names[x] for x in expected.units})
    compare("right-cancellative", "Right cancellative", is_right_cancellative(structure),
            expected.right_cancellative)
    czs = is_completely_zero_simple(structure, bound)
    cs = is_completely_simple(structure, bound)
    compare("czs", "Completely zero-simple", bool(czs), expected.completely_zero_simple)
    compare("cs", "Completely simple", bool(cs), expected.completely_simple)

    if bool(czs) or bool(cs):
        try:
            representation = (
                rees_decomposition(structure, bound) if czs else rees_decomposition_simple(structure, bound)
            )
            target = representation.structure
            for a in names:
                for b in names:
                    triple = rees_multiply(
                        representation,
                        generator_coordinates(representation, a),
                        generator_coordinates(representation, b),
                    )
                    product = names[t.product(t.index(a), t.index(b))]
                    if not word_problem(target, triple_word(representation, triple), (product,)):
                        mismatches.append(DiagnosticResult(
                            "rees", f"Rees product {a}·{b}", STATUS_ERROR, f"does not represent {product}"
                        ))
        except SemiautoError as exc:
            mismatches.append(DiagnosticResult("rees", "Rees decomposition", STATUS_ERROR, str(exc)))
    if mismatches:
        debug(f"oracle: {len(mismatches)} mismatches on a table of order {t.order}")
    return mismatches
