# Eigenvalue bound package
# Cauchy radii, enhancement ladders, lower bounds and the cost model

from .cauchy import (Side, ScalarBoundPoly, BoundStep, scalar_bound_poly, solve_cauchy_scalar,
                     cauchy_radius)
from .cost import cost_estimate, cost_baseline
from .enhancement import (BoundReport, MONOTONE_SLACK, enhance, enhancement_chain, lower_bound,
                          bound_report, parse_sides, compare_norms, companion_square_radius)

__all__ = ['Side', 'ScalarBoundPoly', 'BoundStep', 'scalar_bound_poly', 'solve_cauchy_scalar',
           'cauchy_radius', 'cost_estimate', 'cost_baseline', 'BoundReport', 'MONOTONE_SLACK',
           'enhance', 'enhancement_chain', 'lower_bound', 'bound_report', 'parse_sides',
           'compare_norms', 'companion_square_radius']
