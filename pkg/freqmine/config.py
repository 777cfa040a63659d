"""Configuration loader for freqmine.

Priority: command-line flags > config file (--config) > defaults.
Environment variables are not consulted.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from loguru import logger

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")
OUTPUT_FORMATS = ("text", "csv", "jsonl")


def _parse_config_file(path: Path) -> dict[str, str]:
    """Parse a ``key = value`` file; blank lines and '#' comments are skipped."""
    values: dict[str, str] = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            continue
        key, _, value = line.partition("=")
        values[key.strip().lower().replace("-", "_")] = value.strip().strip("'\"")
    logger.debug("Loaded config from {}", path)
    return values


@dataclass
class Config:
    # Logging
    log_level: str = "WARNING"

    # Mining
    threads: int = 1
    output: str = "text"
    top: int = 20
    present_value: str | None = None

    # Generation
    seed: int = 0

    def __post_init__(self) -> None:
        self.log_level = self.log_level.upper()
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}, got {self.log_level}")
        if self.output not in OUTPUT_FORMATS:
            raise ValueError(f"output must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.top < 1:
            raise ValueError(f"top must be >= 1, got {self.top}")


def load_config(path: Path | None = None) -> Config:
    """Build a Config from an optional file. Unknown keys are ignored with a warning."""
    if path is None:
        return Config()

    raw = _parse_config_file(path)
    known = {f.name: f for f in fields(Config)}
    kwargs: dict[str, object] = {}
    for key, value in raw.items():
        if key not in known:
            logger.warning("Ignoring unknown config key '{}' in {}", key, path)
            continue
        if key in ("threads", "top", "seed"):
            kwargs[key] = int(value)
        elif key == "present_value":
            kwargs[key] = value or None
        else:
            kwargs[key] = value
    return Config(**kwargs)
