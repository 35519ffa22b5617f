"""Size limits for enumeration and linear-system assembly."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_ENUM = "FUNCEQ_MAX_ENUM"


@dataclass(frozen=True)
class Limits:
    max_enum: int = 2**20
    max_unknowns: int = 10**4
    max_instances: int = 10**6


def limits() -> Limits:
    """Current limits; ``FUNCEQ_MAX_ENUM`` overrides the enumeration bound."""
    raw = os.environ.get(ENV_MAX_ENUM)
    if raw is None:
        return Limits()
    return Limits(max_enum=int(raw))
