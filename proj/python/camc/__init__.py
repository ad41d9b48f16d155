"""Anisotropic mean curvature toolkit."""

from ._camc import (
    Anisotropy,
    ConfigError,
    DomainError,
    EllipticityError,
    acceptance,
    chart_curvature,
    curvature_range,
    cylinder,
    functional,
    graph_coefficients,
    hemisphere,
    meeks_constant,
    mesh_curvature,
    solve_config,
    solve_disk,
    wulff_diameter,
    wulff_mesh,
)

__all__ = [
    "Anisotropy",
    "ConfigError",
    "DomainError",
    "EllipticityError",
    "acceptance",
    "chart_curvature",
    "curvature_range",
    "cylinder",
    "functional",
    "graph_coefficients",
    "hemisphere",
    "meeks_constant",
    "mesh_curvature",
    "solve_config",
    "solve_disk",
    "wulff_diameter",
    "wulff_mesh",
]
