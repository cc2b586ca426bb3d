"""Two-point functions in the constrained two-oscillator model."""

from ._twopoint import (
    CoherentLabel,
    Method,
    SectorLabel,
    TrajectoryPair,
    TrajectoryParams,
    __version__,
    correlator_sweep,
    gauge_transform,
    gauss_hermite_rule,
    hermite_function,
    kernel,
    normalized_coherent,
    overlap,
    projector,
    projector_group_average,
    quadrature_order_threshold,
    run_validation,
    sho_two_point,
    suppression_exponent,
    two_point_bruteforce,
    two_point_closed_form,
    two_point_quadrature,
    two_point_semiclassical,
    two_point_trajectory,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
