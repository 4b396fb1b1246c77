"""Precoloring extension under distance constraints.

Thin re-export of the compiled core: graph primitives, exact oracles,
the two extension pipelines, color-graph machinery and the instance
generators.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
