"""Exact-rational solvers for budget-pooled participatory project funding."""

from ._pbrp import *  # noqa: F401,F403
from ._pbrp import __doc__  # noqa: F401
