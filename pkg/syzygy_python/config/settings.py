"""
Configuration settings and environment management for the syzygy engine.

This module provides configuration management with support for environment variables,
configuration files, and programmatic setup.
"""

import os
import json
import logging
from typing import Optional, Dict, Any, Union
from dataclasses import dataclass, fields
from pathlib import Path

from ..algebra.fields import FieldSpec

logger = logging.getLogger(__name__)

_FORMATS = ("grid", "csv", "kv")


def _env_bool(name: str, default: bool) -> bool:
    return os.getenv(name, str(default)).lower() in ("1", "true", "yes")


@dataclass
class SyzygySettings:
    """
    Main settings class for the syzygy engine.

    Supports loading from environment variables, configuration files,
    and programmatic configuration.
    """

    # Computation defaults
    default_field: str = "fp:32003"
    default_seed: int = 0
    degree_bound: Optional[int] = None
    random_height: int = 100

    # Self-checks
    verify_resolutions: bool = True
    exactness_samples: int = 2

    # Output and reproduction
    default_format: str = "grid"
    timeout_seconds: float = 600.0
    parallel_jobs: int = 1
    golden_dir: Optional[str] = None

    # Logging
    log_level: str = "INFO"

    @classmethod
    def from_env(cls) -> 'SyzygySettings':
        """Create settings from environment variables."""
        settings = cls()

        settings.default_field = os.getenv("SYZYGY_DEFAULT_FIELD", settings.default_field)
        settings.default_seed = int(os.getenv("SYZYGY_DEFAULT_SEED", str(settings.default_seed)))
        settings.default_format = os.getenv("SYZYGY_DEFAULT_FORMAT", settings.default_format)
        settings.timeout_seconds = float(os.getenv("SYZYGY_TIMEOUT", str(settings.timeout_seconds)))

        degree_bound = os.getenv("SYZYGY_DEGREE_BOUND")
        if degree_bound:
            settings.degree_bound = int(degree_bound)

        settings.random_height = int(os.getenv("SYZYGY_RANDOM_HEIGHT", str(settings.random_height)))
        settings.verify_resolutions = _env_bool("SYZYGY_VERIFY_RESOLUTIONS", settings.verify_resolutions)
        settings.parallel_jobs = int(os.getenv("SYZYGY_PARALLEL_JOBS", str(settings.parallel_jobs)))
        settings.golden_dir = os.getenv("SYZYGY_GOLDEN_DIR", settings.golden_dir)
        settings.log_level = os.getenv("SYZYGY_LOG_LEVEL", settings.log_level)

        return settings

    @classmethod
    def from_file(cls, file_path: Union[str, Path]) -> 'SyzygySettings':
        """Load settings from a JSON or YAML configuration file."""
        file_path = Path(file_path)

        if not file_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {file_path}")

        with open(file_path, 'r') as f:
            if file_path.suffix.lower() in ['.yml', '.yaml']:
                try:
                    import yaml
                    config_data = yaml.safe_load(f)
                except ImportError:
                    raise ImportError("PyYAML is required to load YAML configuration files. Install with: pip install PyYAML")
            else:
                config_data = json.load(f)

        return cls.from_dict(config_data or {})

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> 'SyzygySettings':
        """Create settings from a dictionary; unknown keys are ignored with a warning."""
        settings = cls()
        for key, value in config_dict.items():
            if hasattr(settings, key):
                setattr(settings, key, value)
            else:
                logger.warning(f"Ignoring unknown setting '{key}'")
        return settings

    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.default_field)

    def validate(self) -> bool:
        """Validate the settings configuration."""
        try:
            self.field_spec()
        except ValueError as e:
            logger.error(f"Invalid default field: {e}")
            return False

        if self.default_seed < 0:
            logger.error(f"Seed must be nonnegative, got {self.default_seed}")
            return False

        if self.default_format not in _FORMATS:
            logger.error(f"Unknown output format '{self.default_format}'")
            return False

        if self.timeout_seconds <= 0:
            logger.error("Timeout must be positive")
            return False

        if self.degree_bound is not None and self.degree_bound < 1:
            logger.error(f"Degree bound must be at least 1, got {self.degree_bound}")
            return False

        if self.parallel_jobs < 1:
            logger.error("At least one parallel job is required")
            return False

        if self.golden_dir and not Path(self.golden_dir).is_dir():
            logger.warning(f"Golden directory '{self.golden_dir}' does not exist")

        return True

    def to_dict(self) -> Dict[str, Any]:
        """Convert settings to dictionary format."""
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def save_to_file(self, file_path: Union[str, Path]) -> None:
        """Save settings to a JSON file."""
        file_path = Path(file_path)
        file_path.parent.mkdir(parents=True, exist_ok=True)

        with open(file_path, 'w') as f:
            json.dump(self.to_dict(), f, indent=2)

        logger.info(f"Settings saved to {file_path}")

    def setup_logging(self) -> None:
        """Setup logging based on the settings."""
        logging.basicConfig(
            level=getattr(logging, self.log_level.upper(), logging.INFO),
            format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
