"""Shared error types and enumeration budgets.

Budgets guard against enumerations that are structurally legal but
infeasible at desk scale.  Exceeding one raises :class:`BudgetExceeded`,
which callers (and the CLI) treat as a distinct, recoverable condition
rather than invalid input.
"""

DEFAULT_MAX_ENUM = 1 << 20
DEFAULT_MAX_GENERATORS = 8


class InputError(ValueError):
    """User-supplied data violates a structural invariant."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured budget."""


def check_enum_budget(size: int, max_enum: int, what: str) -> None:
    if size > max_enum:
        raise BudgetExceeded(
            f"{what} would enumerate {size} items (budget {max_enum})"
        )
