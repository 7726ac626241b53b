"""Configuration loader – reads .env and GFKIT_* environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

from gfkit.domain.errors import ConfigError
from gfkit.domain.numeric import DEFAULT_DPS
from gfkit.domain.reports import Scale

OUTPUT_FORMATS = ("text", "json", "series")
MIN_DPS = 20


@dataclass(frozen=True)
class GfkitConfig:
    scale: Scale | None = None
    output_format: str = "text"
    verbose: bool = False
    report_dir: str | None = None
    dps: int = DEFAULT_DPS

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"GFKIT_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}")
        if self.dps < MIN_DPS:
            raise ConfigError(f"GFKIT_DPS must be at least {MIN_DPS}, got {self.dps}")


def _flag(name: str) -> bool:
    raw = os.environ.get(name, "0").strip().lower()
    if raw in ("1", "true", "yes", "on"):
        return True
    if raw in ("", "0", "false", "no", "off"):
        return False
    raise ConfigError(f"{name} must be 0 or 1, got {raw!r}")


def _scale() -> Scale | None:
    raw = os.environ.get("GFKIT_SCALE")
    if not raw:
        return None
    try:
        return Scale(raw.strip().lower())
    except ValueError:
        raise ConfigError(f"GFKIT_SCALE must be 'small' or 'default', got {raw!r}") from None


def _dps() -> int:
    raw = os.environ.get("GFKIT_DPS")
    if not raw:
        return DEFAULT_DPS
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"GFKIT_DPS must be an integer, got {raw!r}") from None


def load_config(env_path: str | None = None) -> GfkitConfig:
    """Load configuration from a .env file and the environment.

    Without *env_path* the first ``.env`` found walking up from the CWD is used.
    Variables already set in the environment are not overridden.
    """
    if env_path:
        load_dotenv(env_path)
    else:
        cwd = Path.cwd()
        for d in [cwd, *cwd.parents]:
            candidate = d / ".env"
            if candidate.exists():
                load_dotenv(candidate)
                break

    return GfkitConfig(
        scale=_scale(),
        output_format=os.environ.get("GFKIT_FORMAT", "text").strip().lower() or "text",
        verbose=_flag("GFKIT_VERBOSE"),
        report_dir=os.environ.get("GFKIT_REPORT_DIR") or None,
        dps=_dps(),
    )
