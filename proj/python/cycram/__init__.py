"""Python bindings for the cycram C++ core.

Graphs are ``cycram.Graph`` objects; every analysis returns a plain dict with
the same fields as the CLI's JSON output.
"""

from ._core import *  # noqa: F401,F403
from ._core import Error, Graph

__all__ = [name for name in dir() if not name.startswith("_")]
