"""Staircases, Hilbert series, contracted and lex-segment ideals in k[x, y]."""

from .staircase import ColumnSequence, parse_ideal
from .hilbert import HilbertSeries, hilbert_series

__all__ = ["ColumnSequence", "HilbertSeries", "hilbert_series", "parse_ideal"]
__version__ = "0.1.0"
