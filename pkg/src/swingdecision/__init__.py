"""Bayesian swing/take decision engine for pitch-level baseball data.

Three independently fitted models (called-strike probability, contact
probability, run expectancy) are composed per pitch into a posterior over
the expected-runs gap between swinging and taking, from which the optimal
decision and season-level discipline metrics follow with full uncertainty.
"""

__version__ = "0.1.0"
