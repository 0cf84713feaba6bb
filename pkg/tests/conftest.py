"""Shared test helpers."""

import numpy as np

from ggqd import StateFamilySpec, generate_state


def haar_unitary(rng, dim=2):
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases.conj()


def random_rotation(rng):
    """Uniform rotation in SO(3) via QR with determinant fix."""
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diagonal(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def random_unit(rng):
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_state(seed):
    return generate_state(StateFamilySpec("random", seed=seed))


def rotation_from_unitary(u):
    """SO(3) action induced on Bloch vectors: R_ij = Tr(sigma_i U sigma_j U+) / 2."""
    from ggqd import PAULIS

    r = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            r[i, j] = np.trace(PAULIS[i + 1] @ u @ PAULIS[j + 1] @ u.conj().T).real / 2.0
    return r
