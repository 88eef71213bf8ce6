from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    """Size limits for enumeration-based algorithms."""

    enumeration_cap: int = 200_000
    coset_cap: int = 20_000
    lattice_cap: int = 100

    def as_dict(self) -> dict:
        return {
            "enumeration_cap": self.enumeration_cap,
            "coset_cap": self.coset_cap,
            "lattice_cap": self.lattice_cap,
        }


DEFAULT_CAPS = Caps()


class CapExceeded(RuntimeError):
    """An operation would exceed a configured cap."""

    def __init__(self, cap_name: str, needed: int, limit: int):
        super().__init__(f"{cap_name} exceeded: need {needed}, limit {limit}")
        self.cap_name = cap_name
        self.needed = needed
        self.limit = limit
