"""Shannon capacity of discrete memoryless channels.

Closed forms for binary channels, the explicit solution for square
invertible transition matrices, and independent iterative oracles
(alternating maximization and grid search) for everything else.
"""

from .binary import (
    DEGENERATE_TOL,
    DegenerateChannelError,
    binary_aux,
    binary_capacity,
    binary_optimal_input,
    binary_optimal_output,
)
from .channel import (
    binary_channel,
    channel_mutual_information,
    check_channel,
    joint_distribution,
    mi_gradient,
    output_distribution,
    relabel_inputs,
    relabel_outputs,
)
from .entropy import (
    LogConfig,
    SUM_TOL,
    check_distribution,
    check_joint,
    conditional_entropy,
    entropy,
    joint_entropy,
    log_star,
    mutual_information,
    normalize,
    xlogx_star,
)
from .linalg import SingularMatrixError, determinant, inverse, solve
from .muroga import (
    INPUT_FEASIBILITY_TOL,
    MurogaSolution,
    SingularChannelError,
    capacity_from_aux,
    feasible_input,
    muroga_capacity,
    optimal_input,
    optimal_output,
    solve_auxiliary,
)
from .oracle import (
    BAResult,
    GridResult,
    OracleConfig,
    blahut_arimoto,
    capacity_bounds,
    grid_search_binary,
)

__version__ = "0.1.0"

__all__ = [
    "BAResult",
    "DEGENERATE_TOL",
    "DegenerateChannelError",
    "GridResult",
    "INPUT_FEASIBILITY_TOL",
    "LogConfig",
    "MurogaSolution",
    "OracleConfig",
    "SUM_TOL",
    "SingularChannelError",
    "SingularMatrixError",
    "binary_aux",
    "binary_capacity",
    "binary_channel",
    "binary_optimal_input",
    "binary_optimal_output",
    "blahut_arimoto",
    "capacity_bounds",
    "capacity_from_aux",
    "channel_mutual_information",
    "check_channel",
    "check_distribution",
    "check_joint",
    "conditional_entropy",
    "determinant",
    "entropy",
    "feasible_input",
    "grid_search_binary",
    "inverse",
    "joint_distribution",
    "joint_entropy",
    "log_star",
    "mi_gradient",
    "muroga_capacity",
    "mutual_information",
    "normalize",
    "optimal_input",
    "optimal_output",
    "output_distribution",
    "relabel_inputs",
    "relabel_outputs",
    "solve",
    "solve_auxiliary",
    "xlogx_star",
]
