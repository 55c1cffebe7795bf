"""
Command builder for the syzygy CLI and library callers.

This module provides a fluent API for building validated Command objects.
"""

from typing import Any, Optional

from pydantic import ValidationError as PydanticValidationError

from ..core.models import Command, VERBS
from .settings import SyzygySettings


class CommandBuilder:
    """
    Fluent builder for creating Command objects.

    Every run is determined by verb, target, field and seed; the builder
    starts from settings defaults and validates on build().
    """

    def __init__(self) -> None:
        """Initialize the builder with default values."""
        self._verb = "betti"
        self._target = ""
        self._field = "fp:32003"
        self._seed = 0
        self._format = "grid"
        self._timeout = 600.0
        self._degree_bound: Optional[int] = None
        self._options: dict = {}

    def from_settings(self, settings: SyzygySettings) -> 'CommandBuilder':
        """Take field, seed, format, timeout and degree bound from settings."""
        self._field = settings.default_field
        self._seed = settings.default_seed
        self._format = settings.default_format
        self._timeout = settings.timeout_seconds
        self._degree_bound = settings.degree_bound
        return self

    def verb(self, verb: str) -> 'CommandBuilder':
        """
        Set the verb.

        Args:
            verb: One of construct, resolve, betti, verify, bounds, reproduce

        Returns:
            Self for method chaining
        """
        if verb not in VERBS:
            raise ValueError(f"Verb must be one of {', '.join(VERBS)}")
        self._verb = verb
        return self

    def target(self, target: str) -> 'CommandBuilder':
        """Construction spec, ideal file path, table file or target id."""
        self._target = target
        return self

    def field(self, field: str) -> 'CommandBuilder':
        self._field = field
        return self

    def seed(self, seed: int) -> 'CommandBuilder':
        if seed < 0:
            raise ValueError("Seed must be nonnegative")
        self._seed = seed
        return self

    def output_format(self, fmt: str) -> 'CommandBuilder':
        self._format = fmt
        return self

    def timeout(self, seconds: float) -> 'CommandBuilder':
        self._timeout = seconds
        return self

    def degree_bound(self, bound: Optional[int]) -> 'CommandBuilder':
        self._degree_bound = bound
        return self

    def option(self, key: str, value: Any) -> 'CommandBuilder':
        """Verb-specific option, e.g. ``e`` and ``m`` for verify."""
        self._options[key] = value
        return self

    def build(self) -> Command:
        """
        Build the Command.

        Returns:
            Validated Command

        Raises:
            ValueError: If the configuration is invalid
        """
        try:
            return Command(
                verb=self._verb,
                target=self._target,
                field=self._field,
                seed=self._seed,
                output_format=self._format,
                timeout=self._timeout,
                degree_bound=self._degree_bound,
                options=dict(self._options),
            )
        except PydanticValidationError as e:
            raise ValueError(f"Invalid command: {e}")
