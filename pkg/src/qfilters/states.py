"""Computational basis, standard gates, and measurement contexts.

Bit order is big-endian throughout: the leftmost bit of a label is the
most significant index bit, so ``|110>`` sits at index 6 in dimension 8.
All index arithmetic is routed through :func:`bits_to_index` and
:func:`index_to_bits` so no other module hardcodes the convention.

A context is a nondegenerate maximal self-adjoint operator, carried here
as the orthonormal basis that diagonalizes it; the attached eigenvalues
are the consecutive integers 1..d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import DEFAULT_TOL, as_operator, as_state, dagger, is_unitary

SQRT2_INV = 1.0 / np.sqrt(2.0)

H = np.array([[1, 1], [1, -1]], dtype=complex) * SQRT2_INV
X = np.array([[0, 1], [1, 0]], dtype=complex)


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def sigma(theta: float, phi: float) -> np.ndarray:
    """Spin observable along polar angle theta and azimuthal angle phi."""
    return np.array(
        [
            [np.cos(theta), np.exp(-1j * phi) * np.sin(theta)],
            [np.exp(1j * phi) * np.sin(theta), -np.cos(theta)],
        ],
        dtype=complex,
    )


def bits_to_index(bits: Sequence[int]) -> int:
    """Big-endian index of a bit label."""
    idx = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got {b!r}")
        idx = (idx << 1) | b
    return idx


def index_to_bits(index: int, k: int) -> tuple[int, ...]:
    """Big-endian k-bit label of an index."""
    if not 0 <= index < (1 << k):
        raise ValueError(f"index {index} out of range for {k} bits")
    return tuple((index >> (k - 1 - i)) & 1 for i in range(k))


def basis_state(k: int, bits: Sequence[int]) -> np.ndarray:
    """Computational basis vector |bits> on k qubits."""
    if k < 1:
        raise ValueError("need at least one qubit")
    if len(bits) != k:
        raise ValueError(f"expected {k} bits, got {len(bits)}")
    v = np.zeros(1 << k, dtype=complex)
    v[bits_to_index(bits)] = 1.0
    return v


@dataclass(frozen=True)
class Context:
    """Orthonormal basis with eigenvalues 1..d attached; column i of
    ``basis`` is the eigenvector for eigenvalue i+1."""

    basis: np.ndarray

    def __post_init__(self):
        b = as_operator(self.basis)
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def vector(self, i: int) -> np.ndarray:
        return self.basis[:, i].copy()

    @property
    def operator(self) -> np.ndarray:
        eigs = np.arange(1, self.dim + 1, dtype=complex)
        return self.basis @ np.diag(eigs) @ dagger(self.basis)

    def same_basis(self, other: "Context", tol: float = DEFAULT_TOL) -> bool:
        return self.dim == other.dim and np.allclose(self.basis, other.basis, atol=tol, rtol=0)


def standard_context(dim: int) -> Context:
    return Context(identity(dim))


def context_from_basis(vectors: Sequence[np.ndarray], tol: float = DEFAULT_TOL) -> Context:
    """Build a context from pairwise-orthonormal vectors.

    Rejects non-orthonormal input, naming the offending pair and its
    inner product.
    """
    cols = [as_state(v) for v in vectors]
    dim = cols[0].shape[0]
    if len(cols) != dim:
        raise ValueError(f"need {dim} vectors for dimension {dim}, got {len(cols)}")
    b = np.column_stack(cols)
    gram = dagger(b) @ b
    delta = gram - np.eye(dim)
    worst = np.unravel_index(np.argmax(np.abs(delta)), delta.shape)
    if abs(delta[worst]) > tol:
        i, j = int(worst[0]), int(worst[1])
        raise ValueError(
            f"vectors {i} and {j} are not orthonormal: <v{i}|v{j}> = {gram[worst]:.6g}"
        )
    return Context(b)


def transform_context(c: Context, u: np.ndarray, tol: float = DEFAULT_TOL) -> Context:
    """Transport a context through a unitary: basis vectors become u @ v."""
    u = as_operator(u)
    if not is_unitary(u, tol):
        raise ValueError("transform_context requires a unitary matrix")
    if u.shape[0] != c.dim:
        raise ValueError(f"dimension mismatch: unitary {u.shape[0]}, context {c.dim}")
    return Context(u @ c.basis)
