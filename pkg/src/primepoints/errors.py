"""Error taxonomy shared by every module.

Each error carries a stable `kind` string; the CLI maps kinds to JSON error
objects and exit code 1.
"""
from __future__ import annotations

import os


class DomainError(Exception):
    kind = "domain-error"


class InvalidArgumentError(DomainError):
    kind = "invalid-argument"


class UnsupportedInputError(DomainError):
    kind = "unsupported-input"


class ResourceLimitError(DomainError):
    kind = "resource-limit"


class IncompatibleSystemError(DomainError):
    kind = "incompatible-system"


class NoPrimesGuaranteedError(DomainError):
    kind = "no-primes-guaranteed"


class BudgetError(DomainError):
    kind = "budget"


class HypothesisViolationError(DomainError):
    kind = "hypothesis-violation"


class UndefinedEpsilonError(DomainError):
    kind = "undefined-epsilon"


BUDGET_ENV = "PRIMEPOINTS_BUDGET"


def budget_limit(default: int) -> int:
    """Default candidate budget, overridable through the environment."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidArgumentError(f"{BUDGET_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise InvalidArgumentError(f"{BUDGET_ENV} must be positive, got {value}")
    return value
