"""Spin-network topology and computational-basis indexing.

Basis convention
----------------
A basis index ``b`` encodes the qubits as bits, with the central qubit
(site label 0, when present) as the most significant bit, followed by the
outer qubits 1..N in order of decreasing significance.  Bit value 0 means
spin-up |0> (sigma_z eigenvalue +1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, ResourceLimitError

#: Largest dense dimension accepted without an explicit override (N=12 outer
#: spins plus the central one).
MAX_DENSE_DIMENSION = 8192


@dataclass(frozen=True)
class SpinSystem:
    """Topology descriptor: N outer qubits, optionally one central qubit.

    Parameters
    ----------
    n_outer : int
        Number of outer (ring) qubits, labelled 1..N.
    has_central : bool
        Whether the central qubit (label 0) is present.
    """

    n_outer: int
    has_central: bool = True
    allow_large: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.n_outer < 1:
            raise DomainError(f"n_outer must be positive, got {self.n_outer}")
        if self.dimension > MAX_DENSE_DIMENSION and not self.allow_large:
            raise ResourceLimitError(
                f"dimension {self.dimension} exceeds the dense cap "
                f"{MAX_DENSE_DIMENSION}; pass allow_large=True to override"
            )

    @property
    def n_qubits(self) -> int:
        return self.n_outer + (1 if self.has_central else 0)

    @property
    def dimension(self) -> int:
        return 1 << (self.n_outer + (1 if self.has_central else 0))

    @property
    def sites(self) -> tuple[int, ...]:
        """All valid site labels, central first when present."""
        first = 0 if self.has_central else 1
        return tuple(range(first, self.n_outer + 1))

    def validate_site(self, site: int) -> None:
        if site not in self.sites:
            raise DomainError(
                f"site {site} not valid for system with n_outer={self.n_outer}, "
                f"has_central={self.has_central}"
            )

    def tensor_position(self, site: int) -> int:
        """Position of a site in the tensor-product factor order (0 = MSB)."""
        self.validate_site(site)
        if self.has_central:
            return site
        return site - 1

    def bit_of(self, basis_index: int, site: int) -> int:
        """Bit value of a site in a computational-basis index."""
        pos = self.tensor_position(site)
        return (basis_index >> (self.n_qubits - 1 - pos)) & 1

    def magnetization(self, basis_index: int) -> int:
        """Total sigma_z eigenvalue of a basis state (n_qubits - 2*popcount)."""
        return self.n_qubits - 2 * int(basis_index).bit_count()
