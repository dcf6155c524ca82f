#!/usr/bin/env python3
"""
run_config.py

Run configuration for the baxterq command line.

- RunConfig: every knob of gen / verify / tfun / char in one dataclass
- load_config: the `run:` mapping of a YAML config file
- resolve_config: built-in defaults < config file < explicit flags

Config files look like config/default.yaml:

  version: 1
  description: ...
  run:
    M: 2
    N: 1
    z: auto        # z_a = a-th prime
    degrees: [1]

Usage:
  from baxterq.run_config import resolve_config
  cfg = resolve_config("config/default.yaml", {"M": 2, "seed": 3})
"""

import logging
from dataclasses import asdict, dataclass, field, fields, replace
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

import yaml

from .errors import BaxterQError
from .qhierarchy import (
    CONVENTIONS,
    DEFAULT_COEFF_BOUND,
    DEFAULT_K_MAX,
    DEFAULT_T,
    UNBARRED,
    GenConfig,
    TwistData,
    parse_scalar_list,
)
from .verify.options import SuiteOptions
from .verify.runner import EXACT, MODES

logger = logging.getLogger(__name__)

# ----------------------------- config -----------------------------
PROJECT_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG = PROJECT_ROOT / "config" / "default.yaml"
AUTO = "auto"


class ConfigError(BaxterQError):
    """Unreadable or inconsistent run configuration."""


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs; z=None and t=None mean auto-fill."""

    command: str = "verify"
    M: int = 2
    N: int = 1
    t: Optional[Fraction] = None
    z: Optional[Tuple[Fraction, ...]] = None
    seed: int = 0
    degrees: Tuple[int, ...] = (1,)
    coeff_bound: int = DEFAULT_COEFF_BOUND
    k_max: int = DEFAULT_K_MAX
    convention: str = UNBARRED
    mode: str = EXACT
    samples: Optional[int] = None
    jobs: int = 1
    suites: str = "all"
    mutate: int = 0
    mu: str = ""
    B: Optional[Tuple[int, ...]] = None
    F: Optional[Tuple[int, ...]] = None
    routes: str = "wronskian"
    check: bool = False
    at: Optional[Fraction] = None
    input: Optional[str] = None
    output: Optional[str] = None
    report_tsv: Optional[str] = None
    timing: bool = True
    options: SuiteOptions = field(default_factory=SuiteOptions)

    def twist(self) -> TwistData:
        if self.z is None:
            return TwistData.default(self.M, self.N, self.t if self.t is not None else DEFAULT_T)
        return TwistData(self.M, self.N, self.t if self.t is not None else DEFAULT_T, self.z)

    def gen_config(self) -> GenConfig:
        return GenConfig(seed=self.seed, degrees=self.degrees, coeff_bound=self.coeff_bound, k_max=self.k_max)

    def describe(self) -> Dict:
        """Plain-data view for METADATA files and debug logs."""
        out = asdict(self)
        out["t"] = str(self.t) if self.t is not None else AUTO
        out["z"] = [str(v) for v in self.z] if self.z is not None else AUTO
        out["at"] = str(self.at) if self.at is not None else None
        return out


# ----------------------------- coercion -----------------------------


def _ints(value) -> Tuple[int, ...]:
    if isinstance(value, int):
        return (value,)
    if isinstance(value, str):
        return tuple(int(v) for v in value.replace(" ", "").split(",") if v != "")
    return tuple(int(v) for v in value)


def _scalars(value) -> Optional[Tuple[Fraction, ...]]:
    if value is None or value == AUTO:
        return None
    if isinstance(value, str):
        return parse_scalar_list(value)
    if isinstance(value, (int, Fraction)):
        return (Fraction(value),)
    return tuple(Fraction(str(v)) for v in value)


def _scalar(value) -> Optional[Fraction]:
    if value is None or value == AUTO:
        return None
    return Fraction(str(value))


def _mu_text(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    return str(value)


COERCE = {
    "M": int,
    "N": int,
    "t": _scalar,
    "z": _scalars,
    "seed": int,
    "degrees": _ints,
    "coeff_bound": int,
    "k_max": int,
    "samples": int,
    "jobs": int,
    "mutate": int,
    "mu": _mu_text,
    "B": _ints,
    "F": _ints,
    "at": _scalar,
}


def coerce(values: Dict) -> Dict:
    """Normalize YAML or flag values to RunConfig field types."""
    out = {}
    for key, value in values.items():
        fn = COERCE.get(key)
        try:
            out[key] = fn(value) if fn is not None and value is not None else value
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise ConfigError(f"bad value for {key}: {value!r} ({e})") from None
    return out


# ----------------------------- loading -----------------------------


def load_config(path: Optional[Union[str, Path]] = None) -> Dict:
    """The `run:` mapping of a config file; {} when path is None."""
    if path is None:
        return {}
    path = Path(path)
    if not path.is_absolute() and not path.exists():
        path = PROJECT_ROOT / path
    try:
        with open(path) as f:
            doc = yaml.safe_load(f) or {}
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot parse {path}: {e}") from None
    run = doc.get("run", {}) if isinstance(doc, dict) else None
    if not isinstance(run, dict):
        raise ConfigError(f"{path}: 'run' must be a mapping")
    logger.debug(f"loaded {len(run)} settings from {path} (version {doc.get('version')})")
    return run


def resolve_config(path: Optional[Union[str, Path]] = None, flags: Optional[Dict] = None) -> RunConfig:
    """Defaults, then the config file, then every flag that was given (not None)."""
    merged = dict(load_config(path))
    merged.update({k: v for k, v in (flags or {}).items() if v is not None})
    merged = coerce(merged)

    option_names = {f.name for f in fields(SuiteOptions)}
    top_names = {f.name for f in fields(RunConfig)} - {"options"}
    unknown = sorted(set(merged) - option_names - top_names)
    if unknown:
        raise ConfigError(f"unknown setting(s) {unknown}")

    options = SuiteOptions.from_dict({k: v for k, v in merged.items() if k in option_names})
    cfg = replace(RunConfig(), **{k: v for k, v in merged.items() if k in top_names}, options=options)
    validate(cfg)
    return cfg


def validate(cfg: RunConfig) -> None:
    if cfg.M < 0 or cfg.N < 0 or cfg.M + cfg.N == 0:
        raise ConfigError(f"need M, N >= 0 with M + N >= 1, got ({cfg.M},{cfg.N})")
    if cfg.convention not in CONVENTIONS:
        raise ConfigError(f"convention must be one of {CONVENTIONS}, got {cfg.convention!r}")
    if cfg.mode not in MODES:
        raise ConfigError(f"mode must be one of {MODES}, got {cfg.mode!r}")
    if cfg.z is not None and len(cfg.z) != cfg.M + cfg.N:
        raise ConfigError(f"expected {cfg.M + cfg.N} twist parameters, got {len(cfg.z)}")
    if any(d < 0 for d in cfg.degrees):
        raise ConfigError(f"degrees must be nonnegative, got {list(cfg.degrees)}")
    if cfg.jobs < 1:
        raise ConfigError(f"jobs must be at least 1, got {cfg.jobs}")
    if cfg.mutate < 0:
        raise ConfigError(f"mutate must be nonnegative, got {cfg.mutate}")
    if cfg.samples is not None and cfg.samples < 1:
        raise ConfigError(f"samples must be at least 1, got {cfg.samples}")
