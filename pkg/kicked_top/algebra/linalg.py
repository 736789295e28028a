import numpy as np
from scipy.linalg import eigh

from ..exceptions import InputError, NotHermitianError

HERMITIAN_ATOL = 1e-12


def is_hermitian(h: np.ndarray, atol: float = HERMITIAN_ATOL) -> bool:
    h = np.asarray(h)
    return h.ndim == 2 and h.shape[0] == h.shape[1] and bool(
        np.allclose(h, h.conj().T, rtol=0.0, atol=atol))


def unitary_exp(h: np.ndarray, t: float, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """
    Return exp(-i t h) through the spectral decomposition of the Hermitian h.

    Raises:
        NotHermitianError: if h is not Hermitian to ``atol``
    """
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h, atol):
        raise NotHermitianError("Generator is not Hermitian")
    # symmetrize so eigh sees an exactly Hermitian matrix
    w, v = eigh((h + h.conj().T) / 2)
    return (v * np.exp(-1j * t * w)) @ v.conj().T


def conjugate(u: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Return u^dagger a u."""
    u = np.asarray(u)
    a = np.asarray(a)
    if u.ndim != 2 or a.ndim != 2 or u.shape[0] != u.shape[1] or u.shape != a.shape:
        raise InputError(f"Shape mismatch in conjugation: {u.shape} vs {a.shape}")
    return u.conj().T @ a @ u


def unitarity_residual(u: np.ndarray) -> float:
    u = np.asarray(u)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
