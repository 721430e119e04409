"""Detector configuration and the plain-text config file format.

The config file is a flat ``key = value`` file.  Keys that accept several
values (``exclusion_pattern``, ``include``, ``exclude``) may be repeated,
one value per line.  Lines starting with ``#`` are comments.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

LANGUAGES = ("c-family", "generic-words", "generic-lines")
BOUNDARY_MODES = ("none", "method")

# Defaults used for the main study setup: minimal clone length 10,
# maximum edit distance 5, inconsistency ratio cap 0.2, first 2 units equal.
DEFAULT_MIN_CLONE_LENGTH = 10
DEFAULT_MAX_EDIT_DISTANCE = 5
DEFAULT_MAX_INCONSISTENCY_RATIO = 0.2
DEFAULT_HEAD_EQUALITY = 2
DEFAULT_MAX_WORD_CHUNK = 1000


class ConfigError(ValueError):
    """Raised for unknown keys or invalid values in a configuration."""


@dataclass
class PipelineConfig:
    language: str = "c-family"
    exclusion_patterns: list[str] = field(default_factory=list)
    normalize_identifiers: bool = True
    normalize_literals: bool = True
    boundary_mode: str = "none"
    include_globs: list[str] = field(default_factory=list)
    exclude_globs: list[str] = field(default_factory=list)

    def validate(self) -> None:
        if self.language not in LANGUAGES:
            raise ConfigError(f"unknown language {self.language!r}, expected one of {LANGUAGES}")
        if self.boundary_mode not in BOUNDARY_MODES:
            raise ConfigError(
                f"unknown boundary_mode {self.boundary_mode!r}, expected one of {BOUNDARY_MODES}"
            )


@dataclass
class SearchParams:
    min_clone_length: int = DEFAULT_MIN_CLONE_LENGTH
    max_edit_distance: int = DEFAULT_MAX_EDIT_DISTANCE
    max_inconsistency_ratio: float = DEFAULT_MAX_INCONSISTENCY_RATIO
    head_equality: int = DEFAULT_HEAD_EQUALITY
    max_word_chunk: int = DEFAULT_MAX_WORD_CHUNK

    def validate(self) -> None:
        if self.min_clone_length < 1:
            raise ConfigError("min_clone_length must be >= 1")
        if self.max_edit_distance < 0:
            raise ConfigError("max_edit_distance must be >= 0")
        if not 0.0 <= self.max_inconsistency_ratio <= 1.0:
            raise ConfigError("max_inconsistency_ratio must be in [0, 1]")
        if self.head_equality < 0:
            raise ConfigError("head_equality must be >= 0")
        if self.head_equality > self.min_clone_length:
            raise ConfigError("head_equality must not exceed min_clone_length")
        if self.max_word_chunk < 1:
            raise ConfigError("max_word_chunk must be >= 1")


@dataclass
class DetectorConfig:
    pipeline: PipelineConfig = field(default_factory=PipelineConfig)
    search: SearchParams = field(default_factory=SearchParams)

    def validate(self) -> None:
        self.pipeline.validate()
        self.search.validate()


_BOOL_VALUES = {"true": True, "1": True, "yes": True, "false": False, "0": False, "no": False}

_SCALAR_KEYS = {
    "language": str,
    "min_clone_length": int,
    "max_edit_distance": int,
    "max_inconsistency_ratio": float,
    "head_equality": int,
    "max_word_chunk": int,
    "boundary_mode": str,
    "normalize_identifiers": bool,
    "normalize_literals": bool,
}
_LIST_KEYS = {"exclusion_pattern", "include", "exclude"}


def _parse_bool(key: str, raw: str) -> bool:
    try:
        return _BOOL_VALUES[raw.lower()]
    except KeyError:
        raise ConfigError(f"invalid boolean for {key}: {raw!r}") from None


def parse_config_text(text: str) -> DetectorConfig:
    scalars: dict[str, object] = {}
    lists: dict[str, list[str]] = {k: [] for k in _LIST_KEYS}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {stripped!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        raw = raw.strip()
        if key in _LIST_KEYS:
            if raw:
                lists[key].append(raw)
        elif key in _SCALAR_KEYS:
            kind = _SCALAR_KEYS[key]
            try:
                if kind is bool:
                    scalars[key] = _parse_bool(key, raw)
                else:
                    scalars[key] = kind(raw)
            except ValueError:
                raise ConfigError(f"line {lineno}: invalid value for {key}: {raw!r}") from None
        else:
            raise ConfigError(f"line {lineno}: unknown configuration key {key!r}")

    pipeline = PipelineConfig(
        language=str(scalars.get("language", "c-family")),
        exclusion_patterns=lists["exclusion_pattern"],
        normalize_identifiers=bool(scalars.get("normalize_identifiers", True)),
        normalize_literals=bool(scalars.get("normalize_literals", True)),
        boundary_mode=str(scalars.get("boundary_mode", "none")),
        include_globs=lists["include"],
        exclude_globs=lists["exclude"],
    )
    search = SearchParams(
        min_clone_length=int(scalars.get("min_clone_length", DEFAULT_MIN_CLONE_LENGTH)),
        max_edit_distance=int(scalars.get("max_edit_distance", DEFAULT_MAX_EDIT_DISTANCE)),
        max_inconsistency_ratio=float(
            scalars.get("max_inconsistency_ratio", DEFAULT_MAX_INCONSISTENCY_RATIO)
        ),
        head_equality=int(scalars.get("head_equality", DEFAULT_HEAD_EQUALITY)),
        max_word_chunk=int(scalars.get("max_word_chunk", DEFAULT_MAX_WORD_CHUNK)),
    )
    config = DetectorConfig(pipeline=pipeline, search=search)
    config.validate()
    return config


def load_config(path: str | Path) -> DetectorConfig:
    return parse_config_text(Path(path).read_text(encoding="utf-8"))


def apply_overrides(config: DetectorConfig, **overrides) -> DetectorConfig:
    """Return a copy of *config* with non-None keyword overrides applied."""
    pipeline_fields = {f for f in PipelineConfig.__dataclass_fields__}
    search_fields = {f for f in SearchParams.__dataclass_fields__}
    pl = {k: v for k, v in overrides.items() if k in pipeline_fields and v is not None}
    se = {k: v for k, v in overrides.items() if k in search_fields and v is not None}
    unknown = set(overrides) - pipeline_fields - search_fields
    if unknown:
        raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
    out = DetectorConfig(
        pipeline=replace(config.pipeline, **pl),
        search=replace(config.search, **se),
    )
    out.validate()
    return out
