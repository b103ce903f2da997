"""Power-ratio (generalized Apollonius) loci of circles."""

from ._core import (
    Circle,
    GeometryError,
    Line,
    Locus,
    Point,
    PowerRatio,
    SceneError,
    apollonius_of_point,
    bisector_feet,
    circle_intersection,
    circumcenter_power,
    circumcircle,
    classic_apollonius,
    classify,
    collinearity_balance,
    collinearity_predicate,
    fit_circle,
    generalized_centers,
    generalized_locus,
    grid_scan,
    k_radical_axes,
    k_thresholds,
    lemoine_data,
    menelaus_product,
    power,
    radical_axis,
    run_scene,
    selftest,
)

__all__ = [name for name in dir() if not name.startswith("_")]
