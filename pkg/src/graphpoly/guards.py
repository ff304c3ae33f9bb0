"""Named brute-force limits.

Every exhaustive enumeration in the package checks one of these constants
before it starts.  Values can be raised for a single process through the
``GPL_GUARD_OVERRIDE`` environment variable (``key=value[,key=value]``) or
the CLI ``--guard`` flag.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, field

ENV_VAR = "GPL_GUARD_OVERRIDE"


class GuardExceeded(RuntimeError):
    """A computation was refused because an input exceeds a named guard."""

    def __init__(self, name: str, value: int, limit: int, what: str = ""):
        self.name = name
        self.value = value
        self.limit = limit
        msg = f"guard {name} exceeded: {value} > {limit}"
        if what:
            msg += f" ({what})"
        super().__init__(msg)


DEFAULTS: dict[str, int] = {
    "CATALOG_MAX_N": 8,
    "ISO_MAX_N": 10,
    "POTTS_MAX_M": 24,
    "TUTTE_MAX_M": 20,
    "MATCHING_MAX_M": 40,
    "SUBSET_MAX_N": 20,
    "DET_MAX_N": 30,
    "SPANNING_MAX_M": 20,
    "REL_MAX_BITS": 24,
    "HARARY_MAX_N": 12,
    "MCP_MAX_M": 8,
    "STABLE_MAX_M": 64,
    "SOKAL_MAX_EDGES": 5,
    "SOL_REL_MAX_BITS": 24,
    "ORDER_CHECK_MAX_N": 7,
}


@dataclass
class GuardTable:
    values: dict[str, int] = field(default_factory=lambda: dict(DEFAULTS))

    def __getitem__(self, name: str) -> int:
        return self.values[name]

    def set(self, name: str, value: int) -> None:
        if name not in self.values:
            raise KeyError(f"unknown guard {name!r}; known: {sorted(self.values)}")
        self.values[name] = int(value)

    def apply_spec(self, spec: str) -> None:
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                raise ValueError(f"bad guard override {item!r}, expected key=value")
            key, val = item.split("=", 1)
            self.set(key.strip(), int(val))

    @contextmanager
    def raised(self, **limits: int):
        """Temporarily lift guards to at least the given values."""
        saved = dict(self.values)
        try:
            for k, v in limits.items():
                self.set(k, max(v, self.values.get(k, v)))
            yield self
        finally:
            self.values = saved

    def check(self, name: str, value: int, what: str = "") -> None:
        limit = self.values[name]
        if value > limit:
            raise GuardExceeded(name, value, limit, what)


GUARDS = GuardTable()
# a malformed override is reported by the CLI rather than failing the import
ENV_ERROR: str | None = None
if os.environ.get(ENV_VAR):
    try:
        GUARDS.apply_spec(os.environ[ENV_VAR])
    except (KeyError, ValueError) as e:
        ENV_ERROR = f"{ENV_VAR}: {e.args[0] if e.args else e}"


def check(name: str, value: int, what: str = "") -> None:
    GUARDS.check(name, value, what)
