"""Tristance, quadristance and optimal lattice anticodes."""

from ._tristance import (
    DomainError,
    canonicalize,
    centered_anticode,
    dispersion,
    distance,
    go_locus,
    interleaving_bound,
    max_anticode,
    optimal_anticode,
    phi,
    phi_inverse,
    quadristance,
    steiner_oracle,
    tristance,
)

__all__ = [
    "DomainError",
    "canonicalize",
    "centered_anticode",
    "dispersion",
    "distance",
    "go_locus",
    "interleaving_bound",
    "max_anticode",
    "optimal_anticode",
    "phi",
    "phi_inverse",
    "quadristance",
    "steiner_oracle",
    "tristance",
]
