"""Operator-space entanglement entropy of the transverse Ising chain.

Thin wrapper over the compiled ``_osee`` extension. Operator strings use the
command-line grammar: ``X1,Y1``, ``I``, ``F``, ``F;Y1`` and ``pauli:z@1 x@2``.
"""

from ._osee import (
    ChainConfig,
    ConfigError,
    IoError,
    NumericalError,
    TruncationPolicy,
    bessel_row,
    binary_entropy,
    correlation_matrix,
    ed_entropy,
    entropy_from_correlation,
    evolve,
    fit_log_growth,
    parse_operator,
    psi_overlap,
    run_cli,
    saturation,
    tl_evolve,
    toeplitz,
)

__all__ = [
    "ChainConfig",
    "ConfigError",
    "IoError",
    "NumericalError",
    "TruncationPolicy",
    "bessel_row",
    "binary_entropy",
    "correlation_matrix",
    "ed_entropy",
    "entropy_from_correlation",
    "evolve",
    "fit_log_growth",
    "parse_operator",
    "psi_overlap",
    "run_cli",
    "saturation",
    "tl_evolve",
    "toeplitz",
]

__version__ = "0.1.0"
