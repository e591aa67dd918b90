"""Conflict-free graph coloring: verifiers, exact oracle, and solvers."""

from ._cfc import *  # noqa: F401,F403
from ._cfc import __doc__  # noqa: F401

__version__ = "0.1.0"
