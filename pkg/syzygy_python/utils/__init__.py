"""Utility functions and helpers for the syzygy engine."""

from .formatting import FormatUtils
from .golden import get_target, target_ids
from .ideal_io import read_ideal_file, write_ideal_file
from .validation import ValidationError, ValidationUtils

__all__ = [
    "FormatUtils",
    "get_target",
    "target_ids",
    "read_ideal_file",
    "write_ideal_file",
    "ValidationError",
    "ValidationUtils",
]
