"""Caps and tuning knobs.

Precedence: explicit arguments > environment variables (ORDER_CAP,
DEGREE_CAP, SUBGROUP_CAP) > defaults.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

DEFAULT_ORDER_CAP = 200_000
DEFAULT_DEGREE_CAP = 4096
DEFAULT_SUBGROUP_CAP = 200_000

# Orders up to this bound get a dense multiplication table (int32, order^2
# entries); everything above runs on vectorized permutation rows.
TABLE_CAP = 4000


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"environment variable {name} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class Caps:
    """Resource limits for exact enumeration."""

    order_cap: int = DEFAULT_ORDER_CAP
    degree_cap: int = DEFAULT_DEGREE_CAP
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP
    table_cap: int = TABLE_CAP

    def with_overrides(self, order_cap=None, degree_cap=None, subgroup_cap=None) -> "Caps":
        out = self
        if order_cap is not None:
            out = replace(out, order_cap=order_cap)
        if degree_cap is not None:
            out = replace(out, degree_cap=degree_cap)
        if subgroup_cap is not None:
            out = replace(out, subgroup_cap=subgroup_cap)
        return out


def caps_from_env() -> Caps:
    return Caps(
        order_cap=_env_int("ORDER_CAP", DEFAULT_ORDER_CAP),
        degree_cap=_env_int("DEGREE_CAP", DEFAULT_DEGREE_CAP),
        subgroup_cap=_env_int("SUBGROUP_CAP", DEFAULT_SUBGROUP_CAP),
    )


DEFAULT_CAPS = caps_from_env()
