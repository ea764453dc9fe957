"""Typed configuration dataclasses for semiauto.

Frozen views over the flat `cfg` dict with from_dict()/to_dict() for JSON
round trips.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional


def _clamp(value: float, lo: float, hi: float) -> float:
    """Clamp a numeric value to [lo, hi]."""
    return max(lo, min(hi, value))


@dataclass(frozen=True)
class SearchConfig:
    """Bounds for the semi-decision searches."""

    enumeration_bound: int = 2000
    rewrite_step_bound: int = 100000
    right_invert_max_n: int = 64
    machine_step_bound: int = 10000

    def validated(self) -> "SearchConfig":
        """Return a new SearchConfig with values clamped to safe ranges."""
        return SearchConfig(
            enumeration_bound=int(_clamp(self.enumeration_bound, 1, 1_000_000)),
            rewrite_step_bound=int(_clamp(self.rewrite_step_bound, 1, 100_000_000)),
            right_invert_max_n=int(_clamp(self.right_invert_max_n, 1, 100_000)),
            machine_step_bound=int(_clamp(self.machine_step_bound, 1, 100_000_000)),
        )


@dataclass(frozen=True)
class OracleConfig:
    """Settings for the random oracle-equivalence suite."""

    seed: int = 0
    count: int = 200
    max_order: int = 6
    points: int = 3
    max_generators: int = 3

    def validated(self) -> "OracleConfig":
        """Return a new OracleConfig with values clamped to safe ranges."""
        return OracleConfig(
            seed=int(_clamp(self.seed, 0, 2**32 - 1)),
            count=int(_clamp(self.count, 0, 100_000)),
            max_order=int(_clamp(self.max_order, 1, 64)),
            points=int(_clamp(self.points, 1, 5)),
            max_generators=int(_clamp(self.max_generators, 1, 8)),
        )


@dataclass(frozen=True)
class AppConfig:
    """Complete typed configuration."""

    search: SearchConfig = field(default_factory=SearchConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)

    def validated(self) -> "AppConfig":
        return AppConfig(search=self.search.validated(), oracle=self.oracle.validated())

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "AppConfig":
        """Create AppConfig from a flat config dictionary (like cfg).

        Unknown keys are silently ignored for forward compatibility.
        """
        def _get(key: str, default: Any = None) -> Any:
            return d.get(key, default)

        search = SearchConfig(
            enumeration_bound=_get("enumeration_bound", 2000),
            rewrite_step_bound=_get("rewrite_step_bound", 100000),
            right_invert_max_n=_get("right_invert_max_n", 64),
            machine_step_bound=_get("machine_step_bound", 10000),
        )
        oracle = OracleConfig(
            seed=_get("oracle_seed", 0),
            count=_get("oracle_count", 200),
            max_order=_get("oracle_max_order", 6),
            points=_get("oracle_points", 3),
            max_generators=_get("oracle_max_generators", 3),
        )
        return cls(search=search, oracle=oracle).validated()

    def to_dict(self) -> Dict[str, Any]:
        """Flatten back into the cfg key layout."""
        search = asdict(self.search)
        oracle = {f"oracle_{key}": value for key, value in asdict(self.oracle).items()}
        return {**search, **oracle}


def typed_config(cfg_dict: Optional[Dict[str, Any]] = None) -> AppConfig:
    """Create a validated AppConfig from a cfg dict (the global one by default).

    Usage:
        from semiauto.config_types import typed_config
        bound = typed_config().search.enumeration_bound
    """
    if cfg_dict is None:
        from .config import cfg as cfg_dict
    return AppConfig.from_dict(cfg_dict)
