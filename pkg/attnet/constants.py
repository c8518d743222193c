"""attnet constants.

Centralized limits and defaults shared by the engines, the verifiers and
the command-line front end.
"""

from fractions import Fraction

# ===========================
# Enumeration Limits
# ===========================

# Shapley oracle over signatures (|N| players)
MAX_SHAPLEY_PLAYERS = 20
# Raw 2^n Shapley sum used to validate the signature counting
MAX_SUBSET_SHAPLEY_PLAYERS = 12

# Signature-level core / convexity checks
MAX_CORE_PLAYERS = 24
# Raw 2^n core enumeration (mandatory for non side-symmetric allocations)
MAX_SUBSET_CORE_PLAYERS = 16

# ===========================
# Oracles
# ===========================

POWER_ITERATION_TOLERANCE = 1e-12
MAX_POWER_ITERATIONS = 10_000

# FAN -> AN gap accepted as "converged" by the converge report
LIMIT_GAP_TOLERANCE = 1e-6

# ===========================
# Rendering
# ===========================

DEFAULT_SIGNIFICANT_DIGITS = 6

# Tolerance against the rounded decimals printed in the reference tables
PRINTED_DECIMAL_TOLERANCE = Fraction(1, 100)

# Intrinsic productivity of every node (fixed, not configurable)
INTRINSIC_PRODUCTIVITY = 1

# ===========================
# Exit Codes
# ===========================

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2
EXIT_DOMAIN_ERROR = 3
EXIT_CAPACITY_ERROR = 4
