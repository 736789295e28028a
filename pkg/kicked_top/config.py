import itertools
import json
import math
from dataclasses import asdict, dataclass, field, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .exceptions import ConfigError
from .propagator import ClassicalKickVariant, DEFAULT_KC_VARIANT, DEFAULT_KQ_VARIANT, KickVariant
from .quantum import QUARTER_TURN


class Mode(Enum):
    QUANTUM_MATRIX = 'quantum_matrix'
    QUANTUM_MOMENTS = 'quantum_moments'
    CLASSICAL_POINT = 'classical_point'
    CLASSICAL_ENSEMBLE = 'classical_ensemble'
    COMPARE = 'compare'


MOMENT_MODES = (Mode.QUANTUM_MOMENTS, Mode.COMPARE)
QUANTUM_MODES = (Mode.QUANTUM_MATRIX, Mode.QUANTUM_MOMENTS, Mode.COMPARE)


@dataclass
class Tolerances:
    """Absolute tolerances used by run checks and the validation suites"""
    algebra: float = 1e-11
    coherent: float = 1e-9
    actions: float = 1e-6
    identity: float = 1e-8
    heisenberg: float = 1e-10
    rotation: float = 1e-10
    exact: float = 1e-13
    oracle: float = 1e-7
    charts: float = 1e-9
    factorization: float = 1e-10

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or not value > 0:
                raise ConfigError(f"tolerance must be a positive number, got {value!r}",
                                  field=f"tolerances.{f.name}")


@dataclass
class ExperimentConfig:
    """Configuration for one run (one grid point)"""
    two_j: int = 10
    k: float = 3.0
    p: float = QUARTER_TURN
    steps: int = 20
    theta: float = 1.0
    phi: float = 0.5
    mode: Mode = Mode.COMPARE
    ensemble_size: int = 1000
    seed: int = 0
    kq_variant: KickVariant = DEFAULT_KQ_VARIANT
    kc_variant: ClassicalKickVariant = DEFAULT_KC_VARIANT
    tolerances: Tolerances = field(default_factory=Tolerances)
    output_dir: str = 'results'
    workers: int = 1

    def __post_init__(self):
        """Coerce JSON values and validate every field"""
        self.mode = _enum(Mode, self.mode, 'mode')
        self.kq_variant = _enum(KickVariant, self.kq_variant, 'kq_variant')
        self.kc_variant = _enum(ClassicalKickVariant, self.kc_variant, 'kc_variant')
        if isinstance(self.tolerances, dict):
            unknown = set(self.tolerances) - {f.name for f in fields(Tolerances)}
            if unknown:
                raise ConfigError(f"unknown tolerance(s) {sorted(unknown)}", field='tolerances')
            self.tolerances = Tolerances(**self.tolerances)
        for name in ('two_j', 'steps', 'ensemble_size', 'seed', 'workers'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"expected an integer, got {value!r}", field=name)
        for name in ('k', 'p', 'theta', 'phi'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigError(f"expected a finite number, got {value!r}", field=name)
            setattr(self, name, float(value))
        if self.two_j < 0:
            raise ConfigError("must be non-negative", field='two_j')
        if self.mode in QUANTUM_MODES and self.two_j < 1:
            raise ConfigError(f"must be at least 1 in mode {self.mode.value}", field='two_j')
        if self.steps < 0:
            raise ConfigError("must be non-negative", field='steps')
        if self.mode is Mode.CLASSICAL_ENSEMBLE and self.ensemble_size < 1:
            raise ConfigError("must be at least 1 in ensemble mode", field='ensemble_size')
        if self.seed < 0:
            raise ConfigError("must be non-negative", field='seed')
        if self.workers < 1:
            raise ConfigError("must be at least 1", field='workers')
        if self.mode is not Mode.QUANTUM_MATRIX and not math.isclose(self.p, QUARTER_TURN, abs_tol=1e-12):
            raise ConfigError(f"mode {self.mode.value} is defined only for p=π/2", field='p')

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        for name in ('mode', 'kq_variant', 'kc_variant'):
            data[name] = getattr(self, name).value
        return data


def _enum(kind, value, name: str):
    if isinstance(value, kind):
        return value
    try:
        return kind(value)
    except ValueError:
        choices = ', '.join(member.value for member in kind)
        raise ConfigError(f"invalid value {value!r}; choose one of {choices}", field=name)


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a single JSON document, reporting the line and column of parse errors"""
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}", field='config')
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
                          field='config')
    if not isinstance(document, dict):
        raise ConfigError(f"{path}: top level must be a JSON object", field='config')
    return document


def load_config(path: Optional[Union[str, Path]] = None,
                overrides: Optional[Dict[str, Any]] = None) -> List[ExperimentConfig]:
    """
    Resolve the file fields and flag overrides into one config per grid point.

    ``two_j`` and ``k`` may be scalars or lists; lists expand to their product.
    Flags set to None are treated as not given.
    """
    document = read_config_file(path) if path else {}
    document.update({key: value for key, value in (overrides or {}).items() if value is not None})
    known = {f.name for f in fields(ExperimentConfig)}
    unknown = set(document) - known
    if unknown:
        name = sorted(unknown)[0]
        raise ConfigError("unknown field", field=name)
    two_js = _axis(document.pop('two_j', ExperimentConfig.two_j), 'two_j')
    ks = _axis(document.pop('k', ExperimentConfig.k), 'k')
    base = ExperimentConfig(two_j=two_js[0], k=ks[0], **document)
    return expand_grid(base, two_js, ks)


def _axis(value, name: str) -> list:
    values = list(value) if isinstance(value, (list, tuple)) else [value]
    if not values:
        raise ConfigError("sweep list is empty", field=name)
    return values


def expand_grid(base: ExperimentConfig, two_js: List[int], ks: List[float]) -> List[ExperimentConfig]:
    """One validated config per (two_j, k) pair, two_j varying slowest."""
    return [replace(base, two_j=two_j, k=k) for two_j, k in itertools.product(two_js, ks)]
