"""Reflecting n-queens: exact search, weighting checks and a rainbow-matching construction."""

from .board import InvalidInput, LineId, Square, attacks, lines_through, squares_of
from .config import Configuration, SlaterPairing, conflicts, is_valid, mirror, to_slater, from_slater, slater_is_valid

__version__ = "0.1.0"
