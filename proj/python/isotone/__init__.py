"""Sensory dissonance curves, isotonic tunings and interval statistics."""

from ._isotone import *  # noqa: F401,F403
from ._isotone import InvalidInputError, DataInconsistencyError  # noqa: F401

__version__ = "0.1.0"
