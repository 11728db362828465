"""Binary quadratic forms and the two-dimensional Epstein zeta-function.

The lattice sum  A(a,b,c;s) = sum' phi(a,b,c;n1,n2)^{-s}  over the integer
lattice minus the origin converges for Re s > 1 (``direct_sum``) and is
continued to the whole plane minus the simple pole at s = 1 through the
theta-split / incomplete-gamma representation (``epstein_zeta``), which is
symmetric under s -> 1-s and exponentially convergent.  The functional
equation is kept as an independent cross-check (``reflect``), never as the
evaluation path.

On top of the continuation sit the rectangular-box helpers ``box_Z`` and
``box_energy_E`` (regularized sum over Dirichlet eigenfrequencies).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AccuracyError, DomainError, PoleError, UnsupportedFormError
from .specfun import (
    DEFAULT_TOL,
    EvalResult,
    ToleranceConfig,
    gamma,
    log_gamma,
    riemann_zeta,
)

__all__ = [
    "QuadraticForm",
    "phi_eval",
    "enumerate_below",
    "direct_sum",
    "epstein_zeta",
    "reflect",
    "box_Z",
    "box_energy_E",
    "EPSTEIN_MAX_IMAG",
]

_LOG_PI = math.log(math.pi)

# Beyond this |Im s| the theta-split loses more than ~8 digits to the
# e^{pi |t| / 2} conditioning of the completed function; see epstein_zeta.
EPSTEIN_MAX_IMAG = 12.0

# Q-cutoff (on the determinant-normalized form) of the theta sums; the
# neglected terms are below e^{-pi R} ~ 1e-22 relative.
_THETA_RADIUS = 16.0


@dataclass(frozen=True)
class QuadraticForm:
    """Positive definite binary form  phi(x, y) = a x^2 + c x y + b y^2."""

    a: float
    b: float
    c: float = 0.0
    eta: float = field(init=False)

    def __post_init__(self) -> None:
        if not (self.a > 0.0 and math.isfinite(self.a)):
            raise DomainError("quadratic form requires a > 0")
        eta = 4.0 * self.a * self.b - self.c * self.c
        if not (eta > 0.0 and math.isfinite(eta)):
            raise DomainError("quadratic form requires eta = 4ab - c^2 > 0")
        object.__setattr__(self, "eta", eta)

    def scaled(self, lam: float) -> "QuadraticForm":
        return QuadraticForm(lam * self.a, lam * self.b, lam * self.c)


def phi_eval(form: QuadraticForm, p: tuple[int, int]) -> float:
    """Value of the form at a lattice point (n1, n2)."""
    n1, n2 = p
    return form.a * n1 * n1 + form.c * n1 * n2 + form.b * n2 * n2


def enumerate_below(form: QuadraticForm, x: float) -> np.ndarray:
    """All nonzero lattice points with phi <= x, as an (N, 2) int array.

    Scans the bounding box of the ellipse: |n1| <= sqrt(4 b x / eta),
    |n2| <= sqrt(4 a x / eta).  Row-major order, deterministic.
    """
    if not x > 0.0:
        raise DomainError("enumerate_below requires x > 0")
    n1_max = int(math.ceil(math.sqrt(4.0 * form.b * x / form.eta)))
    n2_max = int(math.ceil(math.sqrt(4.0 * form.a * x / form.eta)))
    n1 = np.arange(-n1_max, n1_max + 1, dtype=np.int64)
    n2 = np.arange(-n2_max, n2_max + 1, dtype=np.int64)
    g1, g2 = np.meshgrid(n1, n2, indexing="ij")
    g1 = g1.ravel()
    g2 = g2.ravel()
    phi = (form.a * g1 * g1 + form.c * g1 * g2 + form.b * g2 * g2).astype(float)
    keep = (phi <= x) & ~((g1 == 0) & (g2 == 0))
    return np.column_stack((g1[keep], g2[keep]))


def _phi_values(form: QuadraticForm, pts: np.ndarray) -> np.ndarray:
    n1 = pts[:, 0].astype(float)
    n2 = pts[:, 1].astype(float)
    return form.a * n1 * n1 + form.c * n1 * n2 + form.b * n2 * n2


def _csum(vals: np.ndarray) -> complex:
    # exactly rounded, ordering-independent reduction
    return complex(math.fsum(vals.real), math.fsum(vals.imag))


def direct_sum(form: QuadraticForm, s: complex, tol: ToleranceConfig | None = None) -> EvalResult:
    """Truncated lattice sum  sum' phi^{-s}  for Re s > 1.

    The truncation radius comes from the integral-comparison tail bound
    (2 pi / sqrt(eta)) R^{1-sigma} / (sigma - 1), which is also reported as
    the result's abs_err.  Raises AccuracyError when meeting the tolerance
    would need more lattice points than tol.max_terms.
    """
    tol = tol or DEFAULT_TOL
    s = complex(s)
    sigma = s.real
    if sigma <= 1.0:
        raise DomainError("direct_sum requires Re s > 1")
    density = 2.0 * math.pi / math.sqrt(form.eta)
    # 1.5 safety on the area term plus a boundary-layer allowance
    radius = (1.5 * density / ((sigma - 1.0) * tol.target_abs_tol)) ** (1.0 / (sigma - 1.0))
    radius = max(radius, 4.0 * max(form.a, form.b, abs(form.c)))
    est_points = density * radius
    if est_points > tol.max_terms:
        raise AccuracyError(
            f"tolerance {tol.target_abs_tol:g} needs ~{est_points:.3g} lattice points"
            f" (cap {tol.max_terms})"
        )
    pts = enumerate_below(form, radius)
    phi = _phi_values(form, pts)
    value = _csum(np.exp(-s * np.log(phi)))
    tail = 1.5 * density * radius ** (1.0 - sigma) / (sigma - 1.0)
    boundary = 4.0 * (math.sqrt(radius / form.a) + math.sqrt(radius / form.b)) * radius**-sigma
    return EvalResult(value, tail + boundary + 4e-16 * phi.size ** 0.5 * abs(value))


# ----------------------------------------------------------------------
# Upper incomplete gamma (complex order, real positive argument)
# ----------------------------------------------------------------------

_EULER_GAMMA = 0.5772156649015328606


def _ug_continued_fraction(s: complex, x: float) -> complex:
    # modified Lentz on the classical continued fraction; good for x
    # moderately large compared with |s|
    tiny = 1e-300
    b = x + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b if b != 0.0 else 1.0 / tiny
    h = d
    for i in range(1, 500):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return cmath.exp(-x + s * math.log(x)) * h


def _ug_series(s: complex, x: float) -> complex:
    # Gamma(s) - lower-gamma series; requires Re s >= 0.4 to keep the
    # Pochhammer denominators away from zero
    ap = s
    total = 1.0 / s
    delta = total
    for _ in range(500):
        ap += 1.0
        delta *= x / ap
        total += delta
        if abs(delta) < 1e-17 * abs(total):
            break
    lower = cmath.exp(-x + s * math.log(x)) * total
    return gamma(s) - lower


def _ug_exp1(x: float) -> float:
    # E_1(x) = -euler_gamma - log x - sum_k (-x)^k / (k k!) for small x
    total = -_EULER_GAMMA - math.log(x)
    term = 1.0
    for k in range(1, 80):
        term *= -x / k
        total -= term / k
        if abs(term) < 1e-18 * (1.0 + abs(total)):
            break
    return total


def upper_gamma(s: complex, x: float) -> complex:
    """Upper incomplete gamma Gamma(s, x) for complex s and real x > 0.

    Entire in s; continued fraction for large x, series or integer-shift
    recurrences otherwise.
    """
    if not x > 0.0:
        raise DomainError("upper_gamma requires x > 0")
    s = complex(s)
    if x >= max(1.2, 0.35 * abs(s) + 1.0):
        return _ug_continued_fraction(s, x)
    if s.imag == 0.0 and s.real == math.floor(s.real) and s.real <= 0.0:
        # descend from Gamma(0, x) = E_1(x)
        g: complex = complex(_ug_exp1(x))
        w = 0.0
        while w > s.real:
            w -= 1.0
            g = (g - math.exp(-x + w * math.log(x))) / w
        return g
    lift = max(0, int(math.ceil(0.4 - s.real)))
    g = _ug_series(s + lift, x)
    for j in range(lift - 1, -1, -1):
        w = s + j
        g = (g - cmath.exp(-x + w * math.log(x))) / w
    return g


# ----------------------------------------------------------------------
# Continuation
# ----------------------------------------------------------------------

def _pi_pow_over_gamma(s: complex, w: complex) -> complex:
    # pi^s / Gamma(w); zero when w sits on a Gamma pole
    if w.imag == 0.0 and w.real <= 0.0 and w.real == math.floor(w.real):
        return 0j
    return cmath.exp(s * _LOG_PI - log_gamma(w))


def epstein_zeta(form: QuadraticForm, s: complex) -> EvalResult:
    """A(a,b,c;s) on all of C minus the simple pole at s = 1.

    Theta-split representation on the determinant-normalized form Q' and
    its adjoint Q* (both determinant one):

        pi^{-s} Gamma(s) A'(s) = -1/s + 1/(s-1)
            + sum' (pi Q'(v))^{-s}  Gamma(s,   pi Q'(v))
            + sum' (pi Q*(w))^{s-1} Gamma(1-s, pi Q*(w))

    and A(s) = Delta^{-s/2} A'(s) with Delta = eta/4.  Exponentially
    convergent; reduces to ``direct_sum`` values for Re s > 1.

    The completed function is exponentially small in |Im s|, so double
    precision loses a factor e^{pi |t| / 2}; evaluation is refused for
    |Im s| > EPSTEIN_MAX_IMAG rather than returning digits that are noise.
    """
    s = complex(s)
    if s == 1.0:
        raise PoleError("Epstein zeta has its simple pole at s = 1")
    value, err = _from_completed(form, s, dual_side=False)
    return EvalResult(value, err)


def _theta_sum(f: QuadraticForm, expo: complex, order: complex) -> tuple[complex, float]:
    pts = enumerate_below(f, _THETA_RADIUS)
    q = math.pi * _phi_values(f, pts)
    vals = np.array([cmath.exp(expo * math.log(qi)) * upper_gamma(order, qi) for qi in q])
    return _csum(vals), float(np.abs(vals).sum())


def _from_completed(form: QuadraticForm, s: complex, dual_side: bool) -> tuple[complex, float]:
    # A(form; s) = Delta^{-s/2} (pi^s / Gamma(s)) G(s) with the completed
    # G(s) = -1/s + 1/(s-1) + theta sums on the determinant-normalized form.
    # With dual_side=True the sums run over the adjoint form at argument
    # 1-s, which regroups Gamma(1-s) A(reciprocal; 1-s) without ever
    # touching a Gamma pole: that grouping is what `reflect` returns.
    if abs(s.imag) > EPSTEIN_MAX_IMAG:
        raise AccuracyError(
            f"|Im s| = {abs(s.imag):g} exceeds {EPSTEIN_MAX_IMAG:g}: the theta-split"
            " representation cannot deliver meaningful digits there in double precision"
        )
    delta = form.eta / 4.0
    rdelta = math.sqrt(delta)
    prim = QuadraticForm(form.a / rdelta, form.b / rdelta, form.c / rdelta)
    # adjoint of the normalized form is its inverse (determinant one)
    dual = QuadraticForm(prim.b, prim.a, -prim.c)
    w = 1.0 - s if dual_side else s
    f1, f2 = (dual, prim) if dual_side else (prim, dual)

    sum1, mag1 = _theta_sum(f1, -w, w)
    sum2, mag2 = _theta_sum(f2, w - 1.0, 1.0 - w)
    pref = _pi_pow_over_gamma(s, s)
    # pi^s/Gamma(s) * (-1/w): regroup through Gamma(w+1) when w = s to keep
    # the w = 0 limit finite
    if dual_side:
        pole_w = -pref / w
    else:
        pole_w = -_pi_pow_over_gamma(s, s + 1.0)
    value = pole_w + pref * (1.0 / (w - 1.0) + sum1 + sum2)
    scale = cmath.exp(-0.5 * s * math.log(delta))
    value *= scale

    trunc = 8.0 * math.exp(-math.pi * _THETA_RADIUS) * (
        (math.pi * _THETA_RADIUS) ** (abs(w.real) + 1.0)
    )
    guard = abs(w) if w != 0 else 1.0
    noise = 4e-16 * (mag1 + mag2 + 2.0 + 1.0 / guard + 1.0 / abs(w - 1.0)) * abs(pref)
    err = (trunc * max(abs(pref), 1.0) + noise) * abs(scale)
    return value, err


def reflect(form: QuadraticForm, s: complex) -> EvalResult:
    """Functional-equation image: the reciprocal-form side evaluated at 1-s.

    For c = 0 the reciprocal (inverse) form of (a, b) is (1/a, 1/b) and

        A(a,b;s) = Delta^{-1/2} pi^{2s-1} (Gamma(1-s)/Gamma(s)) A(1/a,1/b;1-s)

    with Delta = a b.  Equivalently, in terms of eta = 4ab: the prefactor is
    (2 pi / sqrt(eta))^{2s-1} (Gamma(1-s)/Gamma(s)) (eta/4)^{s-1}; the
    (eta/4)^{s-1} factor converts the adjoint form that naturally appears in
    the functional equation into the reciprocal-argument form used here.
    """
    if form.c != 0.0:
        raise UnsupportedFormError("reflect is defined for c = 0 forms only")
    s = complex(s)
    if s == 1.0 or s == 0.0:
        raise PoleError("reflect is undefined at s in {0, 1}")
    if s.imag == 0.0 and s.real == math.floor(s.real) and s.real >= 2.0:
        # Gamma(1-s) pole against the zero of A(reciprocal; 1-s): evaluate
        # the product through the completed function instead
        value, err = _from_completed(form, s, dual_side=True)
        return EvalResult(value, err)
    delta = form.a * form.b
    mirror = epstein_zeta(QuadraticForm(1.0 / form.a, 1.0 / form.b), 1.0 - s)
    pref = cmath.exp(
        -0.5 * math.log(delta)
        + (2.0 * s - 1.0) * _LOG_PI
        + log_gamma(1.0 - s)
        - log_gamma(s)
    )
    return EvalResult(pref * mirror.value, abs(pref) * mirror.abs_err * 1.5)


# ----------------------------------------------------------------------
# Rectangular box
# ----------------------------------------------------------------------

def box_Z(L1: float, L2: float, s: complex) -> EvalResult:
    """Lattice function Z(pi^2/L1^2, pi^2/L2^2; s) of the box mode sum."""
    if not (L1 > 0.0 and L2 > 0.0):
        raise DomainError("box sides must be positive")
    form = QuadraticForm((math.pi / L1) ** 2, (math.pi / L2) ** 2)
    return epstein_zeta(form, s)


def box_energy_E(L1: float, L2: float, s: complex) -> EvalResult:
    """Regularized vacuum energy E(L1, L2; s) of the Dirichlet box.

        E = Z(pi^2/L1^2, pi^2/L2^2; s)/8
            - [ (pi/L1)^{-2s} + (pi/L2)^{-2s} ] zeta(2s) / 4

    analytic in s away from {1/2, 1}; for Re s > 1 it equals the absolutely
    convergent sum (1/2) sum omega^{-2s} over the eigenfrequencies.
    """
    s = complex(s)
    if s == 0.5 or s == 1.0:
        raise PoleError("box energy has poles at s = 1/2 and s = 1")
    z = box_Z(L1, L2, s)
    zr = riemann_zeta(2.0 * s)
    axis = (math.pi / L1) ** (-2.0 * s) + (math.pi / L2) ** (-2.0 * s)
    value = z.value / 8.0 - 0.25 * axis * zr.value
    err = z.abs_err / 8.0 + 0.25 * abs(axis) * zr.abs_err + 1e-16 * abs(value)
    return EvalResult(value, err)
