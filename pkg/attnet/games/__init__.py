"""FAN, AN and difference games on complete bipartite networks."""

from attnet.games.fan import (
    closed_form_entry,
    difference_table,
    difference_value,
    fan_series,
    fan_table,
    fan_value,
    fan_value_oracle,
    individual_productivity,
    productivity_matrix_closed,
    productivity_matrix_oracle,
    walk_counts,
)
from attnet.games.limit import (
    an_table,
    an_value,
    convergence_check,
    limit_gap_bound,
    limit_gap_horizon,
    limit_productivity,
    marginal_contribution,
)
from attnet.games.models import AttenuationParams, ConvergenceVerdict, GameKind, GameTable, ProductivityMatrix

__all__ = [
    "AttenuationParams",
    "ConvergenceVerdict",
    "GameKind",
    "GameTable",
    "ProductivityMatrix",
    "an_table",
    "an_value",
    "closed_form_entry",
    "convergence_check",
    "difference_table",
    "difference_value",
    "fan_series",
    "fan_table",
    "fan_value",
    "fan_value_oracle",
    "individual_productivity",
    "limit_gap_bound",
    "limit_gap_horizon",
    "limit_productivity",
    "marginal_contribution",
    "productivity_matrix_closed",
    "productivity_matrix_oracle",
    "walk_counts",
]
