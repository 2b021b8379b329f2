"""Run configuration: size caps, search budgets, seeds, and parameters.

One flat record holds every cap for the exponential searches.  Values come
from defaults, then an optional key=value config file (path in the
TWCERT_CONFIG environment variable or --config), then CLI flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from fractions import Fraction

from .weights import check_balance_parameter, parse_fraction

ENV_CONFIG = "TWCERT_CONFIG"


@dataclass(frozen=True)
class RunConfig:
    max_clique_n: int = 64
    max_tw_n: int = 14
    max_sep_n: int = 10
    max_pattern_nodes: int = 24
    search_budget: int = 5_000_000  # search-node budget per stage, deterministic
    seed: int = 7
    c: Fraction = Fraction(1, 2)
    d: int = 2

    def __post_init__(self) -> None:
        for f in fields(self):
            if f.type == "int" and getattr(self, f.name) <= 0:
                raise ValueError(f"{f.name} must be positive")
        check_balance_parameter(self.c)


_INT_KEYS = {
    "max_clique_n",
    "max_tw_n",
    "max_sep_n",
    "max_pattern_nodes",
    "search_budget",
    "seed",
    "d",
}


def parse_config_file(path: str) -> dict[str, object]:
    out: dict[str, object] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key in _INT_KEYS:
                out[key] = int(value)
            elif key == "c":
                out[key] = parse_fraction(value)
            else:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    return out


def load_config(path: str | None = None, **overrides: object) -> RunConfig:
    cfg = RunConfig()
    path = path or os.environ.get(ENV_CONFIG)
    if path:
        cfg = replace(cfg, **parse_config_file(path))  # type: ignore[arg-type]
    clean = {k: v for k, v in overrides.items() if v is not None}
    return replace(cfg, **clean) if clean else cfg


class Budget:
    """Deterministic search-node budget shared by one search invocation."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            from .graphs import BudgetExhausted

            raise BudgetExhausted(f"search budget of {self.limit} nodes exhausted")
