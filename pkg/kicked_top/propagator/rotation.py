"""
Moment mixing under the quarter turn about y.

Averages transform as <f_nm>' = <f_nm(M(gamma))> with the Moebius map
M(gamma) = (1 + gamma) / (1 - gamma). Expanding f_nm at the image point gives

    f_nm(M(gamma)) = 2^-2j (1+gamma)^n (1-gamma)^(2j-n) (1+gamma*)^m (1-gamma*)^(2j-m) / (1+|gamma|^2)^2j
                   = sum_rs R[n, m, r, s] f_rs(gamma)

with R[n, m, r, s] = 2^-2j A(n, r) A(m, s) and A(n, r) the coefficient of
gamma^r in (1+gamma)^n (1-gamma)^(2j-n),

    A(n, r) = sum_a C(n, a) C(2j-n, r-a) (-1)^(r-a).

The commonly quoted double sum with C(m, r) C(n, s) C(2j-m, k-r) C(2j-n, l-s)
(-1)^(k+l-r-s) leaves k, l unbound. It matches this product once k, l are read
as the target indices r, s, its r, s as the summation indices, and n, m swapped.
"""
import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Union

import numpy as np
import sympy
from scipy.special import comb

from ..algebra import SpinJ
from ..coherent import MomentVector
from ..exceptions import ExportError, InputError
from ..utils.logging_utils import get_logger

logger = get_logger(__name__)

EXPORT_CAP = 40
EXACT_CAP = 12
EXPORT_FORMAT = 'kicked_top.rotation_matrix'
EXPORT_VERSION = 1


@lru_cache(maxsize=64)
def rotation_factor(two_j: int) -> tuple:
    """A(n, r) as exact Python integers, row n, column r."""
    rows = []
    for n in range(two_j + 1):
        row = []
        for r in range(two_j + 1):
            row.append(sum(comb(n, a, exact=True) * comb(two_j - n, r - a, exact=True) * (-1) ** (r - a)
                           for a in range(max(0, r - (two_j - n)), min(n, r) + 1)))
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True, eq=False)
class RotationMomentMatrix:
    j: SpinJ
    entries: np.ndarray

    def __post_init__(self):
        dim = self.j.dim
        if self.entries.shape != (dim, dim, dim, dim):
            raise InputError(f"Rotation matrix of shape {self.entries.shape} does not match 2j+1 = {dim}")

    @property
    def two_j(self) -> int:
        return self.j.two_j


def rotation_matrix(j) -> RotationMomentMatrix:
    """R[n, m, r, s] = 2^-2j A(n, r) A(m, s) for the quarter turn."""
    spin = j if isinstance(j, SpinJ) else SpinJ(j)
    factor = np.array(rotation_factor(spin.two_j), dtype=float)
    entries = np.einsum('nr,ms->nmrs', factor, factor) / 2.0 ** spin.two_j
    entries = entries.astype(complex)
    entries.setflags(write=False)
    logger.debug(f"Built rotation matrix for 2j={spin.two_j}")
    return RotationMomentMatrix(spin, entries)


def rotate_moments(rotation: RotationMomentMatrix, moments: MomentVector) -> MomentVector:
    """value'(n, m) = sum_rs R[n, m, r, s] value(r, s)."""
    if rotation.two_j != moments.two_j:
        raise InputError(f"Rotation matrix for 2j={rotation.two_j} applied to moments for 2j={moments.two_j}")
    return moments.with_values(np.tensordot(rotation.entries, moments.values, axes=([2, 3], [0, 1])))


def exact_rotation_entries(two_j: int) -> np.ndarray:
    """
    R from a term-by-term expansion with exact rationals.

    Multiplies out (1+g)^n (1-g)^(2j-n) (1+h)^m (1-h)^(2j-m) as a polynomial in
    independent g, h and reads off the coefficient of g^r h^s. Returns an object
    array of sympy Rationals.
    """
    if two_j > EXACT_CAP:
        raise ExportError(f"Exact expansion is limited to 2j <= {EXACT_CAP}")
    g, h = sympy.symbols('g h')
    dim = two_j + 1
    scale = sympy.Rational(1, 2 ** two_j)
    entries = np.empty((dim, dim, dim, dim), dtype=object)
    for n in range(dim):
        left = sympy.Poly((1 + g) ** n * (1 - g) ** (two_j - n), g, h)
        for m in range(dim):
            terms = (left * sympy.Poly((1 + h) ** m * (1 - h) ** (two_j - m), g, h)).as_dict()
            for r in range(dim):
                for s in range(dim):
                    entries[n, m, r, s] = scale * terms.get((r, s), 0)
    return entries


def exact_oracle_residual(two_j: int) -> float:
    """Largest gap between the floating R and the exact expansion."""
    exact = exact_rotation_entries(two_j).astype(float)
    return float(np.max(np.abs(rotation_matrix(two_j).entries - exact)))


def export_rotation_matrix(two_j: int, path: Union[str, Path], cap: int = EXPORT_CAP) -> Path:
    """
    Write R as JSON, row-major nested lists of decimal floats.

    For 2j <= 12 the document also carries every entry as an exact
    [numerator, denominator] pair.

    Raises:
        ExportError: when 2j exceeds ``cap``
    """
    if two_j > cap:
        raise ExportError(
            f"2j={two_j} exceeds the export cap of {cap}; R holds (2j+1)^4 = {(two_j + 1) ** 4} "
            f"entries and memory grows as O((2j+1)^4)")
    rotation = rotation_matrix(two_j)
    document = {
        'format': EXPORT_FORMAT,
        'version': EXPORT_VERSION,
        'two_j': two_j,
        'entries': rotation.entries.real.tolist(),
    }
    if two_j <= EXACT_CAP:
        factor = rotation_factor(two_j)
        dim = two_j + 1
        document['exact'] = [[[[_rational_pair(factor[n][r] * factor[m][s], two_j)
                                for s in range(dim)] for r in range(dim)]
                              for m in range(dim)] for n in range(dim)]
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w') as f:
        json.dump(document, f)
    logger.info(f"Rotation matrix for 2j={two_j} exported to {path}")
    return path


def _rational_pair(numerator: int, two_j: int) -> list:
    value = sympy.Rational(numerator, 2 ** two_j)
    return [int(value.p), int(value.q)]


def import_rotation_matrix(path: Union[str, Path], exact: bool = False):
    """
    Read a matrix written by ``export_rotation_matrix``.

    Returns a RotationMomentMatrix, or with ``exact=True`` an object array of
    sympy Rationals.
    """
    try:
        with open(path) as f:
            document = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ExportError(f"Cannot read rotation matrix from {path}: {e}")
    if document.get('format') != EXPORT_FORMAT:
        raise ExportError(f"{path} is not an exported rotation matrix")
    two_j = int(document['two_j'])
    if exact:
        if 'exact' not in document:
            raise ExportError(f"{path} carries no exact entries (2j={two_j})")
        pairs = np.array(document['exact'], dtype=object)
        entries = np.empty(pairs.shape[:4], dtype=object)
        for index in np.ndindex(entries.shape):
            numerator, denominator = pairs[index]
            entries[index] = sympy.Rational(numerator, denominator)
        return entries
    entries = np.array(document['entries'], dtype=float).astype(complex)
    entries.setflags(write=False)
    return RotationMomentMatrix(SpinJ(two_j), entries)
