"""Configuration management for the syzygy engine."""

from .settings import SyzygySettings
from .builder import CommandBuilder

__all__ = ["SyzygySettings", "CommandBuilder"]
