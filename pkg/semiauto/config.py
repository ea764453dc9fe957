"""Configuration management for semiauto.

Handles loading, saving, and validating configuration from ~/.config/semiauto.json.
All values are search bounds and oracle settings; library functions accept
explicit overrides and fall back to these defaults.
"""

import json
import os
import sys
from copy import deepcopy
from pathlib import Path

# Configuration paths
CONFIG_PATH = Path(os.environ.get("SEMIAUTO_CONFIG", Path.home() / ".config" / "semiauto.json"))
DATA_DIR = Path.home() / ".local" / "share" / "semiauto"

# Default configuration values
DEFAULT_CFG = {
    # Shortlex searches: assignments of generators, ε replacement, Rees w_a
    "enumeration_bound": 2000,
    "rewrite_step_bound": 100000,
    "right_invert_max_n": 64,
    "machine_step_bound": 10000,
    # Oracle-equivalence suite
    "oracle_seed": 0,
    "oracle_count": 200,
    "oracle_max_order": 6,
    "oracle_points": 3,
    "oracle_max_generators": 3,
}

# (key, low, high) for integer settings
_INT_BOUNDS = (
    ("enumeration_bound", 1, 1_000_000),
    ("rewrite_step_bound", 1, 100_000_000),
    ("right_invert_max_n", 1, 100_000),
    ("machine_step_bound", 1, 100_000_000),
    ("oracle_seed", 0, 2**32 - 1),
    ("oracle_count", 0, 100_000),
    ("oracle_max_order", 1, 64),
    ("oracle_points", 1, 5),
    ("oracle_max_generators", 1, 8),
)

# Global config instance (loaded from disk + defaults)
cfg = deepcopy(DEFAULT_CFG)


def _default_config_copy() -> dict:
    """Return an isolated copy of the default configuration."""
    return deepcopy(DEFAULT_CFG)


def reset_config() -> None:
    """Reset config to defaults without breaking module references.

    Clears cfg and repopulates it with DEFAULT_CFG values, preserving the
    dict object identity so all imported references remain valid.
    """
    cfg.clear()
    cfg.update(_default_config_copy())
    if os.getenv("SEMIAUTO_DEBUG"):
        print(f"[DEBUG] Config reset to defaults ({len(cfg)} keys)", file=sys.stderr)


def validate_config() -> None:
    """Validate and clamp config values to safe ranges.

    Modifies the global `cfg` dict in-place. Invalid values are reset to defaults.
    """
    for key, low, high in _INT_BOUNDS:
        if key not in cfg:
            continue
        try:
            value = int(cfg[key])
            cfg[key] = max(low, min(high, value))
        except (ValueError, TypeError):
            cfg[key] = DEFAULT_CFG[key]


def load_config() -> dict:
    """Load configuration from disk.

    Reads CONFIG_PATH and merges it over DEFAULT_CFG. Missing keys use
    defaults, extra keys are preserved.

    IMPORTANT: This function modifies cfg in-place to preserve references
    across all modules that import cfg. Never reassign config.cfg directly.

    Returns:
        The global cfg dict
    """
    cfg.clear()
    cfg.update(_default_config_copy())
    try:
        if CONFIG_PATH.exists():
            with CONFIG_PATH.open("r", encoding="utf-8") as handle:
                file_cfg = json.load(handle)
            if not isinstance(file_cfg, dict):
                raise json.JSONDecodeError("top level must be an object", "", 0)
            cfg.update(file_cfg)
            validate_config()
            if os.getenv("SEMIAUTO_DEBUG"):
                print(f"[DEBUG] Config loaded: {len(cfg)} keys", file=sys.stderr)
    except (IOError, json.JSONDecodeError) as exc:
        print(f"[WARN] Failed to load config: {exc}", file=sys.stderr)

    return cfg


def save_config() -> None:
    """Save current configuration to disk (atomic replace)."""
    tmp_path = CONFIG_PATH.with_name(f"{CONFIG_PATH.name}.tmp")
    try:
        CONFIG_PATH.parent.mkdir(parents=True, exist_ok=True)
        with tmp_path.open("w", encoding="utf-8") as handle:
            json.dump(cfg, handle, ensure_ascii=False, indent=2)
            handle.write("\n")
        os.replace(tmp_path, CONFIG_PATH)
    except (IOError, TypeError) as exc:
        if tmp_path.exists():
            try:
                tmp_path.unlink()
            except OSError:
                pass
        print(f"[WARN] Failed to write config: {exc}", file=sys.stderr)
