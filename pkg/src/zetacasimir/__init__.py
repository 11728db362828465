"""Casimir vacuum energies via zeta-function regularization.

Subpackages
-----------
specfun
    From-scratch special-function kernel (Gamma, Riemann/Hurwitz zeta,
    polygamma, generalized harmonic numbers, Dirichlet beta).
afe
    Approximate functional equations (Hardy-Littlewood, Potter) with
    calibrated error envelopes.
epstein
    Binary quadratic forms, Epstein zeta continuation, box mode sums.
casimir
    Slab and rectangular-box vacuum energies, ideal and finite-conductivity.
spectral
    Continuation-free brute-force oracle (modes, counting function, heat
    trace, direct regularized sums).
"""

from .specfun import EvalResult, ToleranceConfig

__version__ = "0.1.0"

__all__ = ["EvalResult", "ToleranceConfig", "__version__"]
