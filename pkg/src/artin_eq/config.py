"""Search limits shared by the deciders, the root search and the finite-model evaluator."""

from __future__ import annotations

import dataclasses
import os

ENV_VAR = "ARTIN_EQ_CAPS"


class CapExceeded(RuntimeError):
    """A bounded computation would exceed its configured limit."""


@dataclasses.dataclass(frozen=True)
class Caps:
    bfs: int = 14              # max word length for the rewriting-closure decider
    search: int = 10           # max candidate root length λ(c_G)/k
    assign: int = 10_000_000   # max quantifier assignments in finite evaluation

    @classmethod
    def from_env(cls, environ=None) -> "Caps":
        """Read overrides like ``bfs=14,search=10,assign=10000000``."""
        text = (environ if environ is not None else os.environ).get(ENV_VAR, "")
        values = {}
        for item in filter(None, (part.strip() for part in text.split(","))):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in ("bfs", "search", "assign"):
                raise ValueError(f"bad {ENV_VAR} entry {item!r}")
            values[key] = int(value)
        return cls(**values)


def default_caps() -> Caps:
    return Caps.from_env()
