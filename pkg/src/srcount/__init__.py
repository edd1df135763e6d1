"""Linear-space substring range counting over small alphabets."""

from ._accel import BACKEND
from .applications import (
    AlignedIndex, GapSpec, GappedIndex, IntervalSet, aligned_build, aligned_count,
    gaps_build, gaps_count, intervals_build, intervals_count, prsc_build, prsc_count,
)
from .errors import InvalidInputError, NotFoundError
from .index import (
    IndexConfig, LabeledText, QueryStats, SrcIndex, SrcQuery, build_index, count,
    is_empty, report_one,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "AlignedIndex", "GapSpec", "GappedIndex", "IndexConfig", "IntervalSet",
    "InvalidInputError", "LabeledText", "NotFoundError", "QueryStats", "SrcIndex",
    "SrcQuery", "aligned_build", "aligned_count", "build_index", "count", "gaps_build",
    "gaps_count", "intervals_build", "intervals_count", "is_empty", "prsc_build",
    "prsc_count", "report_one",
]
