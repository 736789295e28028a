from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from ..exceptions import InputError


@dataclass(frozen=True)
class SpinJ:
    """Spin quantum number stored as the integer 2j so half-integers stay exact."""
    two_j: int

    def __post_init__(self):
        if isinstance(self.two_j, bool) or int(self.two_j) != self.two_j:
            raise InputError(f"two_j must be an integer, got {self.two_j!r}")
        if self.two_j < 0:
            raise InputError(f"two_j must be non-negative, got {self.two_j}")
        object.__setattr__(self, 'two_j', int(self.two_j))

    @property
    def dim(self) -> int:
        return self.two_j + 1

    @property
    def j(self) -> float:
        return self.two_j / 2

    def magnetic_numbers(self) -> np.ndarray:
        """m = j, j-1, ..., -j in basis order (index r labels m = j - r)."""
        return (self.two_j - 2 * np.arange(self.dim)) / 2

    def __str__(self) -> str:
        return f"{self.two_j}/2" if self.two_j % 2 else str(self.two_j // 2)


@dataclass(frozen=True, eq=False)
class SpinRep:
    """Matrices of the spin-j irreducible representation (hbar = 1)."""
    j: SpinJ
    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray
    jplus: np.ndarray
    jminus: np.ndarray

    @property
    def dim(self) -> int:
        return self.j.dim

    @property
    def identity(self) -> np.ndarray:
        return np.eye(self.dim, dtype=complex)

    def casimir(self) -> np.ndarray:
        return self.jx @ self.jx + self.jy @ self.jy + self.jz @ self.jz

    def by_name(self, name: str) -> np.ndarray:
        try:
            return {'x': self.jx, 'y': self.jy, 'z': self.jz,
                    'plus': self.jplus, 'minus': self.jminus}[name]
        except KeyError:
            raise InputError(f"Unknown angular momentum component: {name}")


def _as_spin(j) -> SpinJ:
    return j if isinstance(j, SpinJ) else SpinJ(j)


@lru_cache(maxsize=64)
def _ladder(two_j: int) -> np.ndarray:
    # <j, m+1| J_+ |j, m> = sqrt((r+1)(2j-r)) with m = j - r - 1
    r = np.arange(two_j)
    jplus = np.zeros((two_j + 1, two_j + 1))
    jplus[r, r + 1] = np.sqrt((r + 1) * (two_j - r))
    jplus.setflags(write=False)
    return jplus


def make_spin_rep(j) -> SpinRep:
    """
    Build J_x, J_y, J_z, J_+ and J_- for spin j.

    Args:
        j: SpinJ, or the integer 2j

    Returns:
        SpinRep in the basis |j, j-r>, r = 0..2j (highest weight first)
    """
    spin = _as_spin(j)
    jplus = _ladder(spin.two_j).astype(complex)
    jminus = jplus.conj().T.copy()
    jx = (jplus + jminus) / 2
    jy = (jplus - jminus) / 2j
    jz = np.diag(spin.magnetic_numbers()).astype(complex)
    for matrix in (jx, jy, jz, jplus, jminus):
        matrix.setflags(write=False)
    return SpinRep(j=spin, jx=jx, jy=jy, jz=jz, jplus=jplus, jminus=jminus)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def algebra_residual(rep: SpinRep) -> float:
    """Largest entrywise violation of the su(2) relations and the Casimir identity."""
    j = rep.j.j
    checks = [
        commutator(rep.jz, rep.jplus) - rep.jplus,
        commutator(rep.jz, rep.jminus) + rep.jminus,
        commutator(rep.jplus, rep.jminus) - 2 * rep.jz,
        commutator(rep.jx, rep.jy) - 1j * rep.jz,
        rep.casimir() - j * (j + 1) * rep.identity,
    ]
    return max(float(np.max(np.abs(c))) if c.size else 0.0 for c in checks)


def algebra_residuals(two_js: Iterable[int]) -> dict:
    return {two_j: algebra_residual(make_spin_rep(two_j)) for two_j in two_js}
