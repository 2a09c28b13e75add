import numpy as np
import pytest

from qfilters.linalg import eigenvalue_of, is_hermitian, is_projector, is_unitary, max_abs
from qfilters.states import (
    H,
    X,
    basis_state,
    bits_to_index,
    context_from_basis,
    identity,
    index_to_bits,
    sigma,
    standard_context,
    transform_context,
)


def test_basis_state_single_qubit():
    assert np.array_equal(basis_state(1, [0]), [1, 0])
    assert np.array_equal(basis_state(1, [1]), [0, 1])


def test_basis_state_11():
    assert np.array_equal(basis_state(2, [1, 1]), [0, 0, 0, 1])


def test_basis_state_dim8():
    assert np.array_equal(basis_state(3, [0, 0, 0]), np.eye(8)[0])
    assert np.array_equal(basis_state(3, [1, 1, 0]), np.eye(8)[6])


def test_basis_state_bad_bits():
    with pytest.raises(ValueError):
        basis_state(2, [0])
    with pytest.raises(ValueError):
        basis_state(2, [0, 2])


@pytest.mark.parametrize("k", range(1, 11))
def test_index_bits_round_trip(k):
    for idx in range(1 << k):
        assert bits_to_index(index_to_bits(idx, k)) == idx


def test_sigma_at_equator_is_flip():
    assert max_abs(sigma(np.pi / 2, 0) - X) < 1e-15


def test_sigma_at_pole():
    assert np.allclose(sigma(0, 0), np.diag([1, -1]))


def test_hadamard_self_inverse():
    assert max_abs(H @ H - identity(2)) < 1e-15


def test_gates_unitary_hermitian():
    rng = np.random.default_rng(3)
    mats = [H, X] + [sigma(t, p) for t, p in rng.uniform(0, 2 * np.pi, size=(25, 2))]
    for m in mats:
        assert is_unitary(m)
        assert is_hermitian(m)


def test_projector_identity_with_flip():
    # (1/2)(I +- sigma(pi/2, 0)) are projectors summing to I and match (1/2)(I +- X)
    plus = 0.5 * (identity(2) + sigma(np.pi / 2, 0))
    minus = 0.5 * (identity(2) - sigma(np.pi / 2, 0))
    assert is_projector(plus) and is_projector(minus)
    assert max_abs(plus + minus - identity(2)) < 1e-15
    assert max_abs(plus - 0.5 * (identity(2) + X)) < 1e-15
    assert max_abs(minus - 0.5 * (identity(2) - X)) < 1e-15


def test_standard_context_operator():
    ctx = standard_context(4)
    assert np.allclose(ctx.operator, np.diag([1, 2, 3, 4]))


def test_context_eigenvalue_attachment():
    rng = np.random.default_rng(5)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    q, _ = np.linalg.qr(m)
    ctx = context_from_basis([q[:, i] for i in range(4)])
    for i in range(4):
        lam = eigenvalue_of(ctx.operator, ctx.vector(i))
        assert lam is not None and abs(lam - (i + 1)) < 1e-9


def test_context_hermitian():
    hh = np.kron(H, H)
    ctx = context_from_basis([hh[:, i] for i in range(4)])
    assert is_hermitian(ctx.operator)
    eigs = sorted(np.linalg.eigvalsh(ctx.operator))
    assert np.allclose(eigs, [1, 2, 3, 4])


def test_context_rejects_repeated_vector():
    v = basis_state(2, [0, 0])
    with pytest.raises(ValueError, match="not orthonormal"):
        context_from_basis([v, v, basis_state(2, [1, 0]), basis_state(2, [1, 1])])


def test_context_error_names_pair():
    vecs = [basis_state(2, [0, 0]), basis_state(2, [0, 1]), basis_state(2, [1, 0])]
    near = (basis_state(2, [1, 0]) + basis_state(2, [1, 1])) / np.sqrt(2)
    with pytest.raises(ValueError, match="vectors 2 and 3"):
        context_from_basis(vecs + [near])


def test_transform_context_identity():
    ctx = standard_context(4)
    moved = transform_context(ctx, identity(4))
    assert moved.same_basis(ctx)


def test_transform_context_rejects_nonunitary():
    with pytest.raises(ValueError, match="unitary"):
        transform_context(standard_context(2), np.array([[1, 1], [0, 1]]))


def test_transform_context_preserves_spectrum():
    u = np.kron(H, H)
    moved = transform_context(standard_context(4), u)
    assert np.allclose(moved.basis, u)
    for i in range(4):
        lam = eigenvalue_of(moved.operator, moved.vector(i))
        assert lam is not None and abs(lam - (i + 1)) < 1e-9
