"""Ring, star and combined XX Hamiltonians."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .operators import HermitianOperator, xx_coupling
from .system import SpinSystem


@dataclass(frozen=True)
class CouplingConfig:
    """Overall coupling J (J>0 antiferromagnetic) and star weight c in [0,1]."""

    J: float = 1.0
    c: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.c <= 1.0:
            raise DomainError(f"c must lie in [0,1], got {self.c}")


def build_ring(system: SpinSystem, J: float = 1.0, *,
               allow_double_bond: bool = False) -> HermitianOperator:
    """Nearest-neighbour XX ring on the outer sites, periodic boundary.

    H = J * sum_{i=1..N} (sx_i sx_{i+1} + sy_i sy_{i+1}) with N+1 = 1; the
    central qubit (if present) is untouched.  For N=2 the periodic sum counts
    the single bond twice; that is rejected unless ``allow_double_bond`` is
    set, since the double counting is almost always unintended.
    """
    n = system.n_outer
    if n < 3 and not allow_double_bond:
        raise DomainError(
            f"n_outer={n} < 3 double-counts ring bonds; "
            "pass allow_double_bond=True to build it anyway"
        )
    h = None
    for i in range(1, n + 1):
        j = i % n + 1
        bond = xx_coupling(system, i, j)
        h = bond if h is None else h + bond
    return J * h


def build_star(system: SpinSystem, J: float = 1.0) -> HermitianOperator:
    """Star XX coupling of every outer site to the central qubit.

    H = J * sum_{i=1..N} (sx_0 sx_i + sy_0 sy_i).
    """
    if not system.has_central:
        raise DomainError("build_star requires a system with a central qubit")
    h = None
    for i in range(1, system.n_outer + 1):
        bond = xx_coupling(system, 0, i)
        h = bond if h is None else h + bond
    return J * h


def build_combined(system: SpinSystem, config: CouplingConfig, *,
                   allow_double_bond: bool = False) -> HermitianOperator:
    """Weighted interpolation H = J * [c * H_star + (1-c) * H_ring]."""
    ring = build_ring(system, 1.0, allow_double_bond=allow_double_bond)
    star = build_star(system, 1.0)
    return HermitianOperator(
        config.J * (config.c * star.matrix + (1.0 - config.c) * ring.matrix)
    )
