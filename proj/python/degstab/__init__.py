"""Python bindings for the degstab deciders."""

from ._degstab import *  # noqa: F401,F403
from ._degstab import DegstabError, Decision, Hypergraph, Pattern

__version__ = "0.1.0"
