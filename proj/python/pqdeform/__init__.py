"""Two-parameter deformed oscillator algebra."""

from ._core import (
    ClassificationError,
    DeformationParams,
    DomainError,
    InvalidParameterError,
    OperatorQuadruple,
    OutOfRangeError,
    PositivityError,
    admissible_gamma,
    bracket,
    build_fock,
    check_positivity,
    classify,
    energy,
    energy_parametrized,
    f,
    f_log,
    f_recurrence,
    genfunc_coeffs,
    preset,
    regime,
    reparametrize,
    spacing,
    verify_bracket_identity,
    verify_relations,
)

__version__ = "0.1.0"
