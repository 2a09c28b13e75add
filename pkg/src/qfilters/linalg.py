"""Dense complex vector and matrix primitives shared by every other module.

States are numpy vectors of shape ``(d,)``, operators are ``(d, d)``
matrices, both ``complex128``. All predicates compare with the max-norm
(largest absolute entry) so a failure always points at a concrete entry,
and every comparison takes an absolute tolerance defaulting to
``DEFAULT_TOL``. Functions are pure; nothing here mutates its arguments.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-10


def as_state(values) -> np.ndarray:
    """Coerce to a finite complex vector."""
    v = np.asarray(values, dtype=complex).reshape(-1)
    if v.size == 0:
        raise ValueError("state must be non-empty")
    if not np.all(np.isfinite(v)):
        raise ValueError("state contains non-finite amplitudes")
    return v


def as_operator(values) -> np.ndarray:
    """Coerce to a finite square complex matrix."""
    m = np.asarray(values, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"operator must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("operator contains non-finite entries")
    return m


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def max_abs(m: np.ndarray) -> float:
    """Largest absolute entry (max-norm)."""
    return float(np.max(np.abs(m))) if np.asarray(m).size else 0.0


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two operators."""
    return np.kron(as_operator(a), as_operator(b))


def apply(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix-vector product m @ v with a dimension check."""
    m = as_operator(m)
    v = as_state(v)
    if m.shape[0] != v.shape[0]:
        raise ValueError(f"dimension mismatch: operator {m.shape[0]}, state {v.shape[0]}")
    return m @ v


def is_hermitian(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    m = as_operator(m)
    return max_abs(m - dagger(m)) <= tol


def is_unitary(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    m = as_operator(m)
    return max_abs(m @ dagger(m) - np.eye(m.shape[0])) <= tol


def is_projector(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Hermitian and idempotent within tol."""
    m = as_operator(m)
    return is_hermitian(m, tol) and max_abs(m @ m - m) <= tol


def is_normalized(v: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    v = as_state(v)
    return abs(np.linalg.norm(v) - 1.0) <= tol


def eigenvalue_of(m: np.ndarray, v: np.ndarray, tol: float = DEFAULT_TOL) -> complex | None:
    """Eigenvalue of m on v, or None when v is not an eigenvector.

    Returns the Rayleigh quotient <v|m|v> if the residual m@v - lambda*v
    stays below tol in max-norm. Requires v normalized.
    """
    v = as_state(v)
    if not is_normalized(v, tol):
        raise ValueError("eigenvalue_of requires a normalized state")
    mv = apply(m, v)
    lam = complex(np.vdot(v, mv))
    if max_abs(mv - lam * v) <= tol:
        return lam
    return None


def equal_up_to_global_phase(u: np.ndarray, v: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """True when |<u|v>| >= 1 - tol; both states must be normalized."""
    u = as_state(u)
    v = as_state(v)
    if u.shape[0] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {u.shape[0]} vs {v.shape[0]}")
    if not (is_normalized(u, tol) and is_normalized(v, tol)):
        raise ValueError("equal_up_to_global_phase requires normalized states")
    return bool(abs(np.vdot(u, v)) >= 1.0 - tol)


# JSON interchange: states as {"dim": d, "amplitudes": [[re, im], ...]},
# operators as {"dim": d, "entries": [[re, im], ...]} row-major.

def state_to_json(v: np.ndarray) -> dict:
    v = as_state(v)
    return {"dim": int(v.shape[0]), "amplitudes": [[float(z.real), float(z.imag)] for z in v]}


def state_from_json(obj: dict) -> np.ndarray:
    dim = int(obj["dim"])
    amps = obj["amplitudes"]
    if len(amps) != dim:
        raise ValueError(f"expected {dim} amplitudes, got {len(amps)}")
    return as_state([complex(re, im) for re, im in amps])


def operator_to_json(m: np.ndarray) -> dict:
    m = as_operator(m)
    flat = m.reshape(-1)
    return {"dim": int(m.shape[0]), "entries": [[float(z.real), float(z.imag)] for z in flat]}


def operator_from_json(obj: dict) -> np.ndarray:
    dim = int(obj["dim"])
    entries = obj["entries"]
    if len(entries) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries, got {len(entries)}")
    flat = np.array([complex(re, im) for re, im in entries], dtype=complex)
    return as_operator(flat.reshape(dim, dim))
