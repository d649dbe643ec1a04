"""spinweb: ground-state entanglement of XX spin networks between ring and star.

Exact diagonalization of the Hamiltonian J * [c * H_star + (1 - c) * H_ring]
for N outer spins plus a central spin, with concurrence sweeps, level-crossing
detection, reference-state fidelities, the N=4 analytic layer, and the
GHZ-state extraction protocol.
"""

from .entanglement import (
    ConcurrenceResult,
    concurrence_symmetric,
    concurrence_wootters,
    correlation,
    entanglement_of_formation,
    star_concurrence_closed_form,
)
from .errors import DomainError, ResourceLimitError, SpinwebError
from .hamiltonian import CouplingConfig, build_combined, build_ring, build_star
from .operators import (
    HermitianOperator,
    SzSectorDecomposition,
    pauli_pair,
    pauli_site,
    total_sz,
    total_sz_sectors,
    xx_coupling,
)
from .spectral import (
    Crossing,
    GroundSubspace,
    LevelTrack,
    Spectrum,
    eigendecompose,
    ground_subspace,
    track_levels,
)
from .states import QuantumState, TwoQubitRDM, fidelity, mix, partial_trace
from .sweep import (
    ReferenceSet,
    SweepConfig,
    SweepRecord,
    build_singlet_ansatz,
    make_references,
    optimize_ansatz_phases,
    reference_overlaps,
    run_sweep,
    singlet_coverings,
)
from .system import SpinSystem
from . import n4

__version__ = "0.1.0"

__all__ = [
    "ConcurrenceResult", "concurrence_symmetric", "concurrence_wootters",
    "correlation", "entanglement_of_formation", "star_concurrence_closed_form",
    "DomainError", "ResourceLimitError", "SpinwebError",
    "CouplingConfig", "build_combined", "build_ring", "build_star",
    "HermitianOperator", "SzSectorDecomposition", "pauli_pair", "pauli_site",
    "total_sz", "total_sz_sectors", "xx_coupling",
    "Crossing", "GroundSubspace", "LevelTrack", "Spectrum",
    "eigendecompose", "ground_subspace", "track_levels",
    "QuantumState", "TwoQubitRDM", "fidelity", "mix", "partial_trace",
    "ReferenceSet", "SweepConfig", "SweepRecord", "build_singlet_ansatz",
    "make_references", "optimize_ansatz_phases", "reference_overlaps",
    "run_sweep", "singlet_coverings",
    "SpinSystem", "n4",
]
