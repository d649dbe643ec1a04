"""Shared fixtures: ground-state solves are cached across the suite."""

from functools import lru_cache

import numpy as np
import pytest

from spinweb import (
    CouplingConfig,
    SpinSystem,
    build_combined,
    eigendecompose,
    ground_subspace,
)


@lru_cache(maxsize=None)
def _ground(n_outer: int, c: float, J: float = 1.0):
    system = SpinSystem(n_outer, has_central=True)
    h = build_combined(system, CouplingConfig(J=J, c=c),
                       allow_double_bond=(n_outer == 2))
    return ground_subspace(eigendecompose(h))


@pytest.fixture
def ground():
    """ground(n_outer, c, J=1.0) -> GroundSubspace, memoized."""
    return _ground


@pytest.fixture
def rng():
    return np.random.default_rng(20260825)


def random_sz_block_rdm(rng):
    """Random two-qubit density matrix with the Sz-conserving block form."""
    v, w, x, y = rng.dirichlet(np.ones(4))
    z = (rng.normal() + 1j * rng.normal()) * 0.5
    lim = np.sqrt(w * x)
    if abs(z) > lim:
        z *= lim / abs(z) * rng.uniform(0.0, 1.0)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0], rho[3, 3] = v, y
    rho[1, 1], rho[2, 2] = w, x
    rho[1, 2], rho[2, 1] = z, np.conj(z)
    return rho
