"""Rees algebra presentations of monomial ideals and their binomial Gröbner bases."""

from .groebner import Binomial, GroebnerBasis, buchberger, normal_form
from .orders import ReesVariableSet, TermOrder, YOrder
from .toric import (
    DepthBounds,
    SpreadBoundCheck,
    analytic_spread,
    depth_lower_bounds,
    edge_ideal_y_order,
    initial_ideal,
    rees_groebner,
    rees_kernel,
    rees_order,
    rees_projection_is_zero,
    rho,
    spread_bound_check,
    standard_expression,
    standard_expression_order,
    standard_order_certificate,
    x_condition,
)
