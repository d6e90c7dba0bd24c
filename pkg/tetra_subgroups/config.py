import dataclasses
import functools
import logging
import pathlib
from typing import Any

import yaml
from yaml.loader import SafeLoader

CONFIG_FILE = pathlib.Path(__file__).parent.parent / "config.yaml"

DEFAULT_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
OUTPUT_FORMATS = ("table", "json")


@dataclasses.dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    log_format: str = DEFAULT_LOG_FORMAT
    jobs: int = 1
    cosets_per_index_and_generator: int = 10
    output_format: str = "table"

    def __post_init__(self) -> None:
        if logging.getLevelName(self.log_level.upper()) == f"Level {self.log_level.upper()}":
            raise ValueError(f"logging.level: unknown level {self.log_level!r}")
        if self.jobs < 1:
            raise ValueError(f"enumeration.jobs must be >= 1, got {self.jobs}")
        if self.cosets_per_index_and_generator < 1:
            raise ValueError(
                f"todd_coxeter.cosets_per_index_and_generator must be >= 1, got {self.cosets_per_index_and_generator}"
            )
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output.format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")


# (section, key) in config.yaml -> (Settings field, expected type)
_KEYS: dict[tuple[str, str], tuple[str, type]] = {
    ("logging", "level"): ("log_level", str),
    ("logging", "format"): ("log_format", str),
    ("enumeration", "jobs"): ("jobs", int),
    ("todd_coxeter", "cosets_per_index_and_generator"): ("cosets_per_index_and_generator", int),
    ("output", "format"): ("output_format", str),
}


def settings_from_dict(config: dict[str, Any] | None) -> Settings:
    if config is not None and not isinstance(config, dict):
        raise ValueError(f"config must be a mapping of sections, got {config!r}")
    values = {}
    for (section, key), (field, expected) in _KEYS.items():
        block = (config or {}).get(section) or {}
        if not isinstance(block, dict):
            raise ValueError(f"{section} must be a mapping, got {block!r}")
        if key not in block:
            continue
        value = block[key]
        if not isinstance(value, expected) or isinstance(value, bool):
            raise ValueError(f"{section}.{key} must be of type {expected.__name__}, got {value!r}")
        values[field] = value
    return Settings(**values)


def _read(path: pathlib.Path) -> Settings:
    if not path.exists():
        return Settings()
    with open(path) as file:
        config = yaml.load(file, Loader=SafeLoader)
    return settings_from_dict(config)


@functools.cache
def _default_settings() -> Settings:
    return _read(CONFIG_FILE)


def load_settings(path: pathlib.Path | str | None = None) -> Settings:
    if path is None:
        return _default_settings()
    return _read(pathlib.Path(path))
