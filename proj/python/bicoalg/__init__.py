"""Exact verification of bicoalgebroids, Yetter-Drinfel'd modules and scalar extensions."""

from ._bicoalg import *  # noqa: F401,F403
from ._bicoalg import Error, SchemaError, BCCViolation  # noqa: F401
