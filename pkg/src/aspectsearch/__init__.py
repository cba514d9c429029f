"""Optimal multi-aspect search against rectangularly symmetric targets.

The central quantity is the probability that ``n`` independent looks at
relative angles ``mu_0..mu_{n-1}`` all miss a target whose orientation is
uniform on the half circle. Looks spaced evenly by ``m pi / n`` are
stationary points of that probability, and the ``(1, n)`` spacing gives
the smallest value among them.
"""

from .errors import (
    AspectSearchError,
    EmptyCoefficients,
    FixedPointQuery,
    IndexOutOfRange,
    InsufficientNodes,
    NonPositive,
    NonPositiveModulus,
    NotCoprime,
    NumericalContractError,
    ProblemTooLarge,
    RangeViolation,
    ValidationError,
)
from .ntheory import double_factorial, floor_mod, pair_index, sigma_coprime, sigma_reflect, unpair
from .optimize import OptimizationResult, grid_search, lattice_values, local_minimize, stationarity_check
from .profile import (
    DetectionProfile,
    constant_profile,
    eval_g,
    eval_g_prime,
    load_profile,
    make_cosine_profile,
    make_sin2_profile,
    profile_from_descriptor,
    random_cosine_profile,
)
from .quadrature import (
    AngleVector,
    QuadratureRule,
    default_rule,
    gradient,
    gradient_symmetric,
    integrate_periodic,
    no_detection_probability,
    required_nodes,
)
from .simulate import SimulationConfig, SimulationResult, simulate
from .strategy import (
    LowerBoundReport,
    StrategySpec,
    g_tilde,
    g_tilde_closed_form_sin2,
    g_tilde_closed_form_sin2_exact,
    h_eval,
    lambda_chain,
    lambda_eval,
    make_strategy,
    strategy_angles,
    verify_identities,
    verify_lower_bound,
)

__version__ = "0.1.0"
