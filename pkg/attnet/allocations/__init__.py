"""Allocation rules: productivity, Shapley value and LRP distribution."""

from attnet.allocations.models import Allocation, RuleTag
from attnet.allocations.rules import (
    difference_distribution,
    difference_distribution_explicit,
    lrp,
    lrp_series_oracle,
    lrp_tail_bound,
    productivity_allocation,
    shapley_closed,
)
from attnet.allocations.shapley import (
    ShapleyCoefficients,
    gamma,
    pi_coefficient,
    shapley_coefficients,
    shapley_oracle,
    shapley_subset_oracle,
)

__all__ = [
    "Allocation",
    "RuleTag",
    "ShapleyCoefficients",
    "difference_distribution",
    "difference_distribution_explicit",
    "gamma",
    "lrp",
    "lrp_series_oracle",
    "lrp_tail_bound",
    "pi_coefficient",
    "productivity_allocation",
    "shapley_closed",
    "shapley_coefficients",
    "shapley_oracle",
    "shapley_subset_oracle",
]
