"""Tests for the Cayley table oracle and its agreement with the decision procedures."""

import numpy as np
import pytest

from semiauto.errors import NotAssociative, NotSimple
from semiauto.oracle import (
    CayleyTable,
    brandt_semigroup,
    brute_properties,
    brute_rees,
    check_table,
    cyclic_group,
    left_zero_semigroup,
    named_tables,
    random_semigroup,
    random_suite,
    rectangular_band,
    semilattice,
    trivial_semigroup,
)


@pytest.mark.unit
class TestCayleyTable:
    def test_names_default(self):
        t = CayleyTable.from_rows([[0, 1], [1, 0]])
        assert t.names == ("s0", "s1")
        assert t.order == 2
        assert t.product(1, 1) == 0
        assert t.index("s1") == 1

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            CayleyTable.from_rows([[0, 1]])

    def test_rejects_out_of_range_entries(self):
        with pytest.raises(ValueError):
            CayleyTable.from_rows([[0, 2], [1, 0]])

    def test_rejects_unusable_names(self):
        for names in (["a", "a"], ["a.b", "c"], ["a b", "c"], ["$", "c"]):
            with pytest.raises(ValueError):
                CayleyTable.from_rows([[0, 1], [1, 0]], names)

    def test_rejects_non_associative(self):
        with pytest.raises(NotAssociative):
            CayleyTable.from_rows([[1, 0], [0, 0]])

    def test_table_is_read_only(self):
        t = cyclic_group(3)
        with pytest.raises(ValueError):
            t.table[0, 0] = 1

    def test_named_tables(self):
        assert cyclic_group(3).names == ("1", "g", "g2")
        assert rectangular_band(2, 2).names == ("r11", "r12", "r21", "r22")
        assert brandt_semigroup().names == ("e11", "e12", "e21", "e22", "0")
        assert set(named_tables()) == {"trivial", "c2", "semilattice", "left-zero", "rectangular-band", "brandt"}


@pytest.mark.unit
class TestBruteProperties:
    def test_semilattice(self):
        properties = brute_properties(semilattice())
        assert properties.zero == 1
        assert properties.identity == 0
        assert properties.idempotents == (0, 1)
        assert properties.completely_zero_simple
        assert not properties.completely_simple

    def test_cyclic_group(self):
        properties = brute_properties(cyclic_group(2))
        assert properties.identity == 0
        assert properties.units == (0, 1)
        assert properties.right_cancellative and properties.left_cancellative
        assert properties.completely_simple
        assert properties.green_h.all()

    def test_left_zero(self):
        properties = brute_properties(left_zero_semigroup(2))
        assert properties.left_zeros == (0, 1)
        assert properties.zero is None
        assert properties.right_cancellative
        assert not properties.left_reductive

    def test_brandt(self):
        properties = brute_properties(brandt_semigroup())
        assert properties.completely_zero_simple
        assert not properties.completely_simple
        assert properties.idempotents == (0, 3, 4)
        assert properties.green_r[0, 1] and not properties.green_r[0, 2]
        assert properties.green_l[0, 2] and not properties.green_l[0, 1]

    def test_trivial(self):
        properties = brute_properties(trivial_semigroup())
        assert properties.completely_simple
        assert not properties.completely_zero_simple


@pytest.mark.unit
class TestBruteRees:
    def test_brandt(self):
        data = brute_rees(brandt_semigroup())
        assert data.zero == 4
        assert (len(data.rows), len(data.cols), len(data.group)) == (2, 2, 1)
        assert data.verify()
        assert [[entry is not None for entry in line] for line in data.sandwich] == [[True, False], [False, True]]

    def test_rectangular_band_and_group(self):
        band = brute_rees(rectangular_band(2, 3))
        assert (len(band.rows), len(band.cols), len(band.group)) == (2, 3, 1)
        group = brute_rees(cyclic_group(3))
        assert len(group.group) == 3 and group.zero is None

    def test_null_semigroup_is_not_simple(self):
        with pytest.raises(NotSimple):
            brute_rees(CayleyTable.from_rows([[0, 0], [0, 0]]))


@pytest.mark.unit
class TestRandomTables:
    def test_same_seed_same_table(self):
        first = random_semigroup(7)
        second = random_semigroup(7)
        assert first.order == second.order
        assert np.array_equal(first.table, second.table)

    def test_order_is_bounded_by_transformations(self):
        assert random_semigroup(3, points=3, generator_count=2).order <= 27

    def test_suite(self):
        tables = random_suite(seed=1, count=5, max_order=6)
        assert len(tables) == 5
        assert all(t.order <= 6 for t in tables)
        again = random_suite(seed=1, count=5, max_order=6)
        assert [np.array_equal(a.table, b.table) for a, b in zip(tables, again)] == [True] * 5

    def test_suite_uses_config(self):
        from semiauto import config

        config.cfg["oracle_count"] = 3
        config.cfg["oracle_max_order"] = 4
        tables = random_suite()
        assert len(tables) == 3
        assert all(t.order <= 4 for t in tables)


@pytest.mark.integration
class TestOracleAgreement:
    @pytest.mark.parametrize("name", sorted(named_tables()))
    def test_named_table(self, name):
        assert check_table(named_tables()[name]) == []

    def test_small_random_suite(self):
        for table in random_suite(seed=0, count=25, max_order=5):
            assert check_table(table) == []


SUITE_CHUNK = 20


@pytest.fixture(scope="module")
def full_suite():
    return random_suite()


@pytest.mark.slow
@pytest.mark.parametrize("chunk", range(10))
def test_full_random_suite(full_suite, chunk):
    """The configured 200-table suite, in chunks so a partial run still reports."""
    assert len(full_suite) == 200
    start = chunk * SUITE_CHUNK
    for position, table in enumerate(full_suite[start:start + SUITE_CHUNK], start=start):
        assert check_table(table) == [], f"table {position} of order {table.order}"
