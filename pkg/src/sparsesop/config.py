"""Run-wide knobs shared by the modules."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    prime: int = 32003
    retries: int = 32
    # d*m bound for full Chow-form expansion
    expand_limit: int = 64
    # ambient dimension bound for exhaustive minimal-support search (per block)
    sparsity_limit: int = 16
    # permutation enumeration of term orders only up to this many variables
    enumeration_limit: int = 8
    stable_set_limit: int = 20


DEFAULTS = Settings()
