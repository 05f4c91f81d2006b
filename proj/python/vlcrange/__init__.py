"""Ranging accuracy limits for RSS-based visible light positioning."""

from ._core import (
    DegenerateModelError,
    DomainError,
    Error,
    Geometry,
    ParseError,
    SystemParameters,
    ValidationError,
    bound,
    crlb_sqrt,
    crlb_sqrt_legacy,
    find_m_opt,
    fisher_information,
    m_opt_approximation,
    monte_carlo,
    noise,
    received_power,
    run_cli,
    sweep_json,
)

__all__ = [
    "DegenerateModelError",
    "DomainError",
    "Error",
    "Geometry",
    "ParseError",
    "SystemParameters",
    "ValidationError",
    "bound",
    "crlb_sqrt",
    "crlb_sqrt_legacy",
    "find_m_opt",
    "fisher_information",
    "m_opt_approximation",
    "monte_carlo",
    "noise",
    "received_power",
    "run_cli",
    "sweep_json",
]
