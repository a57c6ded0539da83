"""Enumeration budget handling.

The budget caps the number of leaves any single enumeration may visit.
It defaults to ``10**8`` and can be overridden process-wide through the
``LECTUREHALL_BUDGET`` environment variable or per call via ``budget=``.
"""
import os

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "LECTUREHALL_BUDGET"


def default_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be >= 1, got {value}")
    return value


def resolve_budget(budget=None):
    if budget is None:
        return default_budget()
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    return budget


def check_budget(needed, budget=None, what="enumeration"):
    cap = resolve_budget(budget)
    if needed > cap:
        raise BudgetExceeded(needed, cap, what)
    return cap
