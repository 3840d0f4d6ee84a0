"""Configuration management for waringbound."""

from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .exceptions import ConfigurationError

MAX_SEED = 2**64


class WaringSettings(BaseSettings):
    """Process-wide settings, read from ``WARING_*`` environment variables and ``.env``."""

    # Worker cap for trial loops, sweeps and diagonal sweeps (WARING_THREADS)
    threads: int = Field(default=1, ge=1, le=256)

    # Logging
    log_level: str = Field(default="WARNING")
    log_file: Optional[str] = None

    # Method limits for the certifier
    exact_search_max_m: int = Field(default=7, ge=1, le=7)
    rank_sweep_max_m: int = Field(default=20, ge=1, le=24)

    # The diagonal space of a rank sweep is cut into chunks of 2^sweep_chunk_bits diagonals
    sweep_chunk_bits: int = Field(default=14, ge=4, le=24)

    model_config = SettingsConfigDict(env_prefix="WARING_", env_file=".env", extra="ignore")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        allowed = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in allowed:
            raise ValueError(f"log_level must be one of {allowed}")
        return v_upper


class RunConfig(BaseModel):
    """
    Parameters of a randomized verification run.

    Two runs with equal RunConfig produce byte-identical output.
    """

    seed: int = Field(default=0, ge=0, lt=MAX_SEED)
    trials: int = Field(default=1000, ge=1)
    n_list: List[int] = Field(default_factory=lambda: [2, 3])
    max_vars: int = Field(default=4, ge=2, le=64)
    max_degree: int = Field(default=3, ge=1)
    coeff_bound: int = Field(default=5, ge=1)
    output_format: str = Field(default="text")

    model_config = ConfigDict(frozen=True)

    @field_validator("n_list")
    @classmethod
    def validate_n_list(cls, v: List[int]) -> List[int]:
        """Every exponent must satisfy n >= 2."""
        if not v:
            raise ValueError("n_list must not be empty")
        bad = [n for n in v if n < 2]
        if bad:
            raise ValueError(f"exponents n must be >= 2, got {bad}")
        return list(v)

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v: str) -> str:
        """Validate output format."""
        allowed = ["text", "json", "jsonl", "csv"]
        v_lower = v.lower()
        if v_lower not in allowed:
            raise ValueError(f"output_format must be one of {allowed}")
        return v_lower

    def trial_seed(self, trial: int) -> str:
        """Seed for a single trial; depends only on the run seed and the trial index."""
        return f"{self.seed}:{trial}"

    @classmethod
    def from_yaml(cls, config_path: str) -> "RunConfig":
        """
        Load a run configuration from a YAML file.

        Args:
            config_path: Path to YAML configuration file

        Returns:
            RunConfig instance
        """
        path = Path(config_path)
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")

        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}

        if not isinstance(data, dict):
            raise ConfigurationError(f"Config file {config_path} must hold a mapping")

        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> "RunConfig":
        """Load a run configuration from a dictionary."""
        return cls(**config_dict)

    def to_yaml(self, output_path: str) -> None:
        """
        Save the run configuration to a YAML file.

        Args:
            output_path: Path to output YAML file
        """
        with open(output_path, "w", encoding="utf-8") as f:
            yaml.dump(self.model_dump(), f, default_flow_style=False, sort_keys=False)


def load_settings() -> WaringSettings:
    """Read settings from the environment (and ``.env``)."""
    return WaringSettings()


def load_config(
    config_file: Optional[str] = None,
    config_dict: Optional[Dict[str, Any]] = None,
) -> RunConfig:
    """
    Load a run configuration from multiple sources with priority.

    Priority order (highest to lowest):
    1. config_dict (direct parameters, e.g. command-line flags)
    2. config_file (YAML file)
    3. RunConfig defaults

    Values that are None never override a lower-priority source.

    Args:
        config_file: Path to YAML configuration file
        config_dict: Configuration dictionary

    Returns:
        RunConfig instance
    """
    configs = []

    if config_file:
        configs.append(RunConfig.from_yaml(config_file).model_dump())

    if config_dict:
        configs.append(config_dict)

    merged: Dict[str, Any] = {}
    for cfg in configs:
        for key, value in cfg.items():
            if value is not None:
                merged[key] = value

    return RunConfig(**merged)
