"""Quantum states, partial trace, mixing and Uhlmann fidelity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .system import SpinSystem

NORM_TOL = 1e-12
TRACE_TOL = 1e-12
HERM_TOL = 1e-12
PSD_TOL = -1e-10


class QuantumState:
    """A pure state (unit vector) or mixed state (density matrix).

    Construct with :meth:`pure` or :meth:`mixed`; both validate their
    invariants (norm / trace, Hermiticity, positivity) at the documented
    tolerances.
    """

    __slots__ = ("kind", "_vector", "_density")

    def __init__(self, kind, vector=None, density=None):
        self.kind = kind
        self._vector = vector
        self._density = density

    @classmethod
    def pure(cls, amplitudes) -> "QuantumState":
        v = np.asarray(amplitudes, dtype=complex).ravel()
        norm = np.linalg.norm(v)
        if abs(norm - 1.0) > 1e-10:
            raise DomainError(f"pure state norm {norm} differs from 1")
        # renormalize away <=1e-10 float noise so downstream tolerances hold
        return cls("pure", vector=v / norm)

    @classmethod
    def mixed(cls, density) -> "QuantumState":
        rho = np.asarray(density, dtype=complex)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise DomainError(f"density matrix must be square, got {rho.shape}")
        if abs(np.trace(rho).real - 1.0) > 1e-10 or abs(np.trace(rho).imag) > 1e-10:
            raise DomainError(f"density trace {np.trace(rho)} differs from 1")
        if np.abs(rho - rho.conj().T).max() > 1e-10:
            raise DomainError("density matrix is not Hermitian")
        evals = np.linalg.eigvalsh(rho)
        if evals.min() < PSD_TOL:
            raise DomainError(f"density matrix has negative eigenvalue {evals.min()}")
        return cls("mixed", density=rho)

    @property
    def dimension(self) -> int:
        if self.kind == "pure":
            return self._vector.shape[0]
        return self._density.shape[0]

    @property
    def vector(self) -> np.ndarray:
        if self.kind != "pure":
            raise DomainError("mixed state has no amplitude vector")
        return self._vector

    def density(self) -> np.ndarray:
        """Density matrix; pure states are promoted to projectors."""
        if self.kind == "pure":
            return np.outer(self._vector, self._vector.conj())
        return self._density


def mix(states: Sequence[QuantumState], weights: Sequence[float]) -> QuantumState:
    """Convex mixture sum_i w_i rho_i of states with given weights."""
    weights = np.asarray(weights, dtype=float)
    if len(states) != len(weights):
        raise DomainError("states and weights must have equal length")
    if np.any(weights < 0):
        raise DomainError("weights must be nonnegative")
    if abs(weights.sum() - 1.0) > NORM_TOL:
        raise DomainError(f"weights sum to {weights.sum()}, not 1")
    rho = sum(w * s.density() for w, s in zip(weights, states))
    return QuantumState.mixed(rho)


def partial_trace(state: QuantumState, system: SpinSystem, keep: Sequence[int]) -> QuantumState:
    """Reduced density matrix over the given sites.

    The tensor factors of the output follow the order of ``keep``, which may
    differ from the sites' order in the full system.
    """
    keep = list(keep)
    if not keep:
        raise DomainError("keep must be nonempty")
    if len(set(keep)) != len(keep):
        raise DomainError(f"duplicate site labels in keep: {keep}")
    for s in keep:
        system.validate_site(s)

    q = system.n_qubits
    rho = state.density().reshape((2,) * (2 * q))
    keep_pos = [system.tensor_position(s) for s in keep]
    traced = [p for p in range(q) if p not in keep_pos]

    # contract each traced axis against its primed partner
    for p in sorted(traced, reverse=True):
        rho = np.trace(rho, axis1=p, axis2=p + rho.ndim // 2)
    # remaining axes are the kept positions in ascending order; permute to keep order
    remaining = sorted(keep_pos)
    perm = [remaining.index(p) for p in keep_pos]
    k = len(keep)
    rho = rho.transpose(perm + [k + i for i in perm]).reshape((2 ** k, 2 ** k))
    if np.abs(rho.imag).max() < 1e-14:
        rho = rho.real.astype(complex)
    return QuantumState.mixed(rho)


@dataclass(frozen=True)
class TwoQubitRDM:
    """A 4x4 two-qubit reduced density matrix.

    When the matrix is block diagonal in the ordering {|00>, |01>, |10>, |11>}
    (a consequence of total-Sz conservation), ``sz_blocks`` exposes the five
    independent entries (v, w, x, y, z) of that block form.
    """

    matrix: np.ndarray
    block_tol: float = 1e-10

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.shape != (4, 4):
            raise DomainError(f"two-qubit RDM must be 4x4, got {m.shape}")

    @classmethod
    def from_state(cls, state: QuantumState) -> "TwoQubitRDM":
        if state.dimension != 4:
            raise DomainError("state dimension must be 4")
        return cls(state.density())

    @property
    def sz_blocks(self):
        """(v, w, x, y, z) when Sz-block-diagonal, else None."""
        m = self.matrix
        off = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]
        if any(abs(m[i, j]) >= self.block_tol or abs(m[j, i]) >= self.block_tol
               for i, j in off):
            return None
        return (m[0, 0].real, m[1, 1].real, m[2, 2].real, m[3, 3].real, m[1, 2])


def _sqrt_psd_factor(rho: np.ndarray):
    """Support eigenpairs (p, U) of a PSD matrix with tiny negatives clamped."""
    evals, vecs = np.linalg.eigh(rho)
    if evals.min() < PSD_TOL:
        raise DomainError(f"matrix not PSD: eigenvalue {evals.min()}")
    evals = np.clip(evals, 0.0, None)
    mask = evals > 1e-15
    return evals[mask], vecs[:, mask]


def fidelity(rho1: QuantumState, rho2: QuantumState) -> float:
    """Uhlmann fidelity F = [tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2.

    Pure inputs are promoted to projectors; for two pure states this reduces
    to |<psi1|psi2>|^2.  Computed on the support of rho1, which makes
    low-rank ground mixtures cheap.
    """
    if rho1.dimension != rho2.dimension:
        raise DomainError(
            f"dimension mismatch: {rho1.dimension} vs {rho2.dimension}"
        )
    if rho1.kind == "pure":
        v = rho1.vector
        return float(np.real(v.conj() @ rho2.density() @ v))
    if rho2.kind == "pure":
        v = rho2.vector
        return float(np.real(v.conj() @ rho1.density() @ v))
    p, u = _sqrt_psd_factor(rho1.density())
    sp = np.sqrt(p)
    core = (sp[:, None] * (u.conj().T @ rho2.density() @ u)) * sp[None, :]
    evals = np.linalg.eigvalsh(core)
    evals = np.clip(evals, 0.0, None)
    f = float(np.sqrt(evals).sum() ** 2)
    return min(f, 1.0)
