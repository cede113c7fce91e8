"""Frame shapes, Poincare series and monodromy symbols."""

from ._fshape import (
    CatalogRecord,
    FrameShape,
    classification,
    coxeter_charpoly,
    eta_expansion,
    eta_offset,
    find_record,
    gorenstein_check,
    milnor_number,
    monodromy_shape,
    moonshine_entries,
    niemeier_combinations,
    orbit_data,
    phi_polynomial,
    poincare_signature,
    poincare_weights,
    records,
    verify_table5,
)

__all__ = [
    "CatalogRecord",
    "FrameShape",
    "classification",
    "coxeter_charpoly",
    "eta_expansion",
    "eta_offset",
    "find_record",
    "gorenstein_check",
    "milnor_number",
    "monodromy_shape",
    "moonshine_entries",
    "niemeier_combinations",
    "orbit_data",
    "phi_polynomial",
    "poincare_signature",
    "poincare_weights",
    "records",
    "verify_table5",
]
