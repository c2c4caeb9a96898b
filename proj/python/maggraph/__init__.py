"""Magnetic graphs with cyclic signatures: spectra, curvature, lifts and bounds."""

from ._core import (
    DimensionError,
    EmptySubsetError,
    Error,
    Graph,
    NumericalError,
    ParseError,
    PreconditionError,
    SizeError,
    ValidationError,
    cd_check,
    cheeger_number,
    diameter,
    eigenvalue_lower_bound,
    energy,
    frustration_index,
    harnack_check,
    kappa_max,
    laplacian_matrix,
    lift,
    lift_diameter_check,
    lift_function,
    magnetic_girth,
    random_graph,
    signature_status,
    spectrum,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
