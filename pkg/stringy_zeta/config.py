"""
Run settings, resolved per key from an explicit override, a STRINGY_*
environment variable, the "context" block of stringy.json, then a default.
"""
import json
import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from .errors import ConfigError, InputError
from .io.rationals import parse_d

logger = logging.getLogger(__name__)

CONFIG_FILE = "stringy.json"
ENV_PREFIX = "STRINGY_"

LEVELS = ("motivic", "hodge", "euler")
FORMATS = ("text", "latex", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

DEFAULTS: Dict[str, Any] = {
    "level": "motivic",
    "format": "text",
    "d": "1",
    "trials": 20,
    "seed": None,
    "log_level": "WARNING",
}


@dataclass(frozen=True)
class Settings:
    level: str
    format: str
    d: Fraction
    trials: int
    seed: Optional[int]
    log_level: str


def _read_context(path: Path) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
    except OSError as error:
        raise ConfigError(f"cannot read {path}: {error.strerror}") from error
    except json.JSONDecodeError as error:
        raise ConfigError(f"{path}: malformed JSON ({error.msg})") from error
    context = document.get("context", {}) if isinstance(document, dict) else None
    if not isinstance(context, dict):
        raise ConfigError(f"{path}: \"context\" must be an object")
    unknown = sorted(set(context) - set(DEFAULTS))
    if unknown:
        raise ConfigError(f"{path}: unknown settings {unknown}")
    return context


def _choice(key: str, value: Any, allowed: tuple) -> str:
    text = str(value)
    if key == "log_level":
        text = text.upper()
    if text not in allowed:
        raise ConfigError(f"{key} must be one of {', '.join(allowed)}, got {value!r}")
    return text


def _integer(key: str, value: Any, *, minimum: int) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError) as error:
        raise ConfigError(f"{key} must be an integer, got {value!r}") from error
    if isinstance(value, bool) or number < minimum:
        raise ConfigError(f"{key} must be an integer >= {minimum}, got {value!r}")
    return number


def load_config(
    path: Optional[Union[str, Path]] = None, overrides: Optional[Mapping[str, Any]] = None
) -> Settings:
    """
    Resolve the settings.

    Args:
        path: Config file; defaults to stringy.json in the working directory,
            which may be absent
        overrides: Values that win over everything else; None entries are ignored

    Returns:
        The validated Settings

    Raises:
        ConfigError: if the file is unreadable or a value is invalid
    """
    if path is not None:
        context = _read_context(Path(path))
    elif Path(CONFIG_FILE).is_file():
        context = _read_context(Path(CONFIG_FILE))
    else:
        context = {}

    raw: Dict[str, Any] = {}
    for key, default in DEFAULTS.items():
        override = (overrides or {}).get(key)
        if override is not None:
            raw[key] = override
        elif os.getenv(ENV_PREFIX + key.upper()):
            raw[key] = os.getenv(ENV_PREFIX + key.upper())
        elif key in context:
            raw[key] = context[key]
        else:
            raw[key] = default

    try:
        d = parse_d(raw["d"])
    except InputError as error:
        raise ConfigError(str(error)) from error

    settings = Settings(
        level=_choice("level", raw["level"], LEVELS),
        format=_choice("format", raw["format"], FORMATS),
        d=d,
        trials=_integer("trials", raw["trials"], minimum=1),
        seed=None if raw["seed"] is None else _integer("seed", raw["seed"], minimum=0),
        log_level=_choice("log_level", raw["log_level"], LOG_LEVELS),
    )
    logger.debug("settings: %s", settings)
    return settings
