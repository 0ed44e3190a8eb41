"""Sedeon algebra, space-time transformations and field-equation checks."""
from .algebra import (
    STRUCTURE,
    Sedeon,
    SedeonContractError,
    SedeonDomainError,
    StructureTable,
    basis_element,
    conj_complex,
    decompose,
    linear_combine,
    mul,
    scalar_product,
    vector_product,
)

__all__ = [
    "STRUCTURE",
    "Sedeon",
    "SedeonContractError",
    "SedeonDomainError",
    "StructureTable",
    "basis_element",
    "conj_complex",
    "decompose",
    "linear_combine",
    "mul",
    "scalar_product",
    "vector_product",
]
