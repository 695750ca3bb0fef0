"""Open Toda chains of types A-D and their dual rational Goldfish models."""

from ._core import (
    ChamberError,
    NonGenericPointError,
    build_lax,
    closed_form_minor,
    goldfish_hamiltonians,
    goldfish_to_toda,
    integrate_flow,
    lax_spectrum,
    minor_oracle_mk,
    rs_hamiltonian_a,
    toda_hamiltonians,
    toda_to_goldfish,
    verify_duality_identities,
)

__all__ = [
    "ChamberError",
    "NonGenericPointError",
    "build_lax",
    "closed_form_minor",
    "goldfish_hamiltonians",
    "goldfish_to_toda",
    "integrate_flow",
    "lax_spectrum",
    "minor_oracle_mk",
    "rs_hamiltonian_a",
    "toda_hamiltonians",
    "toda_to_goldfish",
    "verify_duality_identities",
]
