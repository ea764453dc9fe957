"""Pytest configuration and shared fixtures for semiauto tests."""

import copy

import pytest

from semiauto.catalog import bicyclic_monoid, free_semigroup
from semiauto.oracle import brandt_semigroup, cyclic_group, from_cayley, left_zero_semigroup, rectangular_band, semilattice
from semiauto.rewriting import TuringMachine, parse_machine


@pytest.fixture
def temp_config_dir(tmp_path):
    """Create a temporary configuration directory."""
    config_dir = tmp_path / "config"
    config_dir.mkdir()
    return config_dir


@pytest.fixture
def mock_config_file(temp_config_dir):
    """Config file with a few overridden bounds, one of them out of range."""
    path = temp_config_dir / "semiauto.json"
    path.write_text('{"enumeration_bound": 50, "right_invert_max_n": 0, "extra_key": true}\n')
    return path


# --- structures -----------------------------------------------------------


@pytest.fixture
def free_ab():
    return free_semigroup(("a", "b"))


@pytest.fixture
def bicyclic():
    return bicyclic_monoid()


@pytest.fixture
def c2():
    return from_cayley(cyclic_group(2))


@pytest.fixture
def semilattice_ez():
    return from_cayley(semilattice())


@pytest.fixture
def left_zero_xy():
    return from_cayley(left_zero_semigroup(2))


@pytest.fixture
def band_2x2():
    return from_cayley(rectangular_band(2, 2))


@pytest.fixture
def brandt():
    return from_cayley(brandt_semigroup())


# --- machines -------------------------------------------------------------

ONE_RULE_TEXT = """\
# accepts every word starting with a, in one step
states: q0 qa
alphabet: a
initial: q0
accept: qa
q0 a qa a R
"""

# flips every letter, writes a past the end, steps back and accepts
WALKER_TEXT = """\
states: q0 q1 qa
alphabet: a b
initial: q0
accept: qa
q0 a q0 b R
q0 b q0 a R
q0 B q1 a L
q1 a qa a R
q1 b qa b R
"""

# accepts words of even length by writing a on the first blank
PARITY_TEXT = """\
states: e o qa
alphabet: a
initial: e
accept: qa
e a o a R
o a e a R
e B qa a R
"""

# right, back left, then accept
BOUNCER_TEXT = """\
states: q0 q1 q2 qa
alphabet: a
initial: q0
accept: qa
q0 a q1 a R
q1 a q2 a L
q2 a qa a R
"""


@pytest.fixture(scope="session")
def one_rule_machine() -> TuringMachine:
    return parse_machine(ONE_RULE_TEXT)


@pytest.fixture(scope="session")
def walker_machine() -> TuringMachine:
    return parse_machine(WALKER_TEXT)


@pytest.fixture(scope="session")
def parity_machine() -> TuringMachine:
    return parse_machine(PARITY_TEXT)


@pytest.fixture(scope="session")
def bouncer_machine() -> TuringMachine:
    return parse_machine(BOUNCER_TEXT)


@pytest.fixture(scope="session")
def stuck_machine() -> TuringMachine:
    """No transitions at all: nothing but the empty run."""
    return TuringMachine(("q0", "qa"), ("a",), "q0", "qa", {})


@pytest.fixture(scope="session")
def looping_machine() -> TuringMachine:
    """Runs right forever, filling the tape with a."""
    return TuringMachine(
        ("q0", "qa"),
        ("a",),
        "q0",
        "qa",
        {("q0", "a"): ("q0", "a", "R"), ("q0", "B"): ("q0", "a", "R")},
    )


@pytest.fixture(autouse=True)
def isolate_config(monkeypatch, tmp_path):
    """Automatically isolate config module state for each test.

    Points CONFIG_PATH at a file that does not exist, so commands that load
    the configuration see the defaults, and restores the global dicts.
    """
    from semiauto import config

    monkeypatch.setattr(config, "CONFIG_PATH", tmp_path / "isolated" / "semiauto.json")
    cfg_ref = config.cfg
    default_ref = config.DEFAULT_CFG
    original_cfg = copy.deepcopy(cfg_ref)
    original_default = copy.deepcopy(default_ref)

    yield

    cfg_ref.clear()
    cfg_ref.update(original_cfg)
    config.cfg = cfg_ref

    default_ref.clear()
    default_ref.update(original_default)
    config.DEFAULT_CFG = default_ref
