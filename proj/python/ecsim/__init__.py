"""Spectral simulator for a surface charge density coupled to 2D Navier-Stokes.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._core import (
    PI,
    Grid,
    check_cordoba,
    dealias,
    forward,
    fractional_laplacian,
    heat_evolve,
    inverse,
    leray_project,
    norm_hs,
    norm_l2,
    norm_linf,
    parse_config,
    poisson_evolve,
    random_field,
    riesz,
    run_config,
    run_scenario,
    scenario_config,
)

__all__ = [
    "PI",
    "Grid",
    "check_cordoba",
    "dealias",
    "forward",
    "fractional_laplacian",
    "heat_evolve",
    "inverse",
    "leray_project",
    "norm_hs",
    "norm_l2",
    "norm_linf",
    "parse_config",
    "poisson_evolve",
    "random_field",
    "riesz",
    "run_config",
    "run_scenario",
    "scenario_config",
]
