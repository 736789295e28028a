"""Spin-j angular momentum matrices and dense Hermitian linear algebra."""

from .spin_matrices import (
    SpinJ,
    SpinRep,
    make_spin_rep,
    commutator,
    algebra_residual,
    algebra_residuals
)
from .linalg import (
    is_hermitian,
    unitary_exp,
    conjugate,
    unitarity_residual
)

__all__ = [
    'SpinJ',
    'SpinRep',
    'make_spin_rep',
    'commutator',
    'algebra_residual',
    'algebra_residuals',
    'is_hermitian',
    'unitary_exp',
    'conjugate',
    'unitarity_residual'
]
