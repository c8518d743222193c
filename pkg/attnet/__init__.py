"""attnet: attenuation network games on complete bipartite networks.

Computes truncated (FAN) and limit (AN) productivity games, the individual
productivity allocation, the Shapley value and the link ratio productivity
(LRP) distribution, all in exact rational arithmetic, together with
brute-force oracles that check every closed form.
"""

__version__ = "0.3.0"
