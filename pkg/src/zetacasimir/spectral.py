"""Brute-force spectral oracle for the Dirichlet box.

Ground truth for the continuation modules, built only from convergent
objects: explicit eigenfrequencies, the counting function, the heat-kernel
trace, and direct regularized sums.  No analytic continuation happens here;
tails of convergent sums are handled with classical Euler-Maclaurin
numerics and every estimate is reported.

This module deliberately avoids the special-function kernel (stdlib
``math.gamma`` only) so its numbers are independent of the code they
validate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InsufficientCutoffError
from .specfun import EvalResult

__all__ = [
    "ModeList",
    "box_modes",
    "counting_function",
    "heat_trace",
    "spectral_zeta_direct",
    "E_direct",
    "write_modes",
]


@dataclass(frozen=True)
class ModeList:
    """Sorted Dirichlet eigenfrequencies of a box, complete below cutoff."""

    frequencies: np.ndarray
    cutoff: float

    def __post_init__(self) -> None:
        freqs = np.asarray(self.frequencies, dtype=float)
        if freqs.ndim != 1:
            raise DomainError("frequencies must be one-dimensional")
        if freqs.size and (freqs[0] <= 0.0 or np.any(np.diff(freqs) < 0.0)):
            raise DomainError("frequencies must be positive and sorted ascending")
        object.__setattr__(self, "frequencies", freqs)

    def __len__(self) -> int:
        return int(self.frequencies.size)

    @property
    def weyl_area(self) -> float:
        # area estimate 4 pi N / cutoff^2 from the leading Weyl term
        if len(self) == 0:
            raise DomainError("empty mode list")
        return 4.0 * math.pi * len(self) / self.cutoff**2


def box_modes(cfg, omega_max: float) -> ModeList:
    """All omega_{n1 n2} = pi sqrt(n1^2/L1^2 + n2^2/L2^2) <= omega_max.

    Degenerate frequencies appear as repeated entries so downstream sums
    stay trivially correct.
    """
    if not omega_max > 0.0:
        raise DomainError("omega_max must be positive")
    n1_max = int(math.floor(omega_max * cfg.L1 / math.pi))
    n2_max = int(math.floor(omega_max * cfg.L2 / math.pi))
    if n1_max < 1 or n2_max < 1:
        return ModeList(np.empty(0), omega_max)
    n1 = np.arange(1, n1_max + 1, dtype=float)
    n2 = np.arange(1, n2_max + 1, dtype=float)
    g1, g2 = np.meshgrid(n1, n2, indexing="ij")
    om = math.pi * np.sqrt((g1 / cfg.L1) ** 2 + (g2 / cfg.L2) ** 2)
    om = om[om <= omega_max]
    return ModeList(np.sort(om.ravel()), omega_max)


def counting_function(modes: ModeList, lam: float) -> int:
    """N(lambda) = #{ k : lambda_k < lambda } with lambda_k = omega_k^2."""
    if lam > modes.cutoff**2:
        raise InsufficientCutoffError(
            f"lambda = {lam:g} beyond the enumerated range (cutoff^2 = {modes.cutoff**2:g})"
        )
    return int(np.searchsorted(modes.frequencies**2, lam, side="left"))


def heat_trace(modes: ModeList, t: float) -> float:
    """Theta(t) = sum_k exp(-omega_k^2 t) over the enumerated modes.

    Requires t large enough that the neglected tail (estimated by the Weyl
    density above the cutoff) stays below 1e-12 of the value.
    """
    if not t > 0.0:
        raise DomainError("t must be positive")
    if len(modes) == 0:
        raise DomainError("empty mode list")
    lam_cut = modes.cutoff**2
    value = float(math.fsum(np.exp(-modes.frequencies**2 * t)))
    tail = modes.weyl_area / (4.0 * math.pi * t) * math.exp(-lam_cut * t)
    if tail > 1e-12 * value:
        raise InsufficientCutoffError(
            f"truncation tail ~{tail:.3g} exceeds 1e-12 of Theta(t) ~{value:.3g};"
            " raise omega_max or t"
        )
    return value


def spectral_zeta_direct(modes: ModeList, s: float) -> EvalResult:
    """Truncated sum  sum_k omega_k^{-s}  for s > 2 (2-D box convergence).

    abs_err is the integral-comparison estimate of the neglected tail from
    the Weyl density, padded with a boundary-layer cushion.
    """
    if s <= 2.0:
        raise DomainError("spectral zeta of the 2-D box diverges for s <= 2")
    if len(modes) == 0:
        raise DomainError("empty mode list")
    value = float(math.fsum(modes.frequencies ** (-s)))
    area = modes.weyl_area
    cut = modes.cutoff
    tail = area / (2.0 * math.pi) * cut ** (2.0 - s) / (s - 2.0)
    cushion = 2.0 * math.sqrt(area) / math.pi * cut ** (1.0 - s) / (s - 1.0)
    return EvalResult(complex(value), tail + cushion)


# ----------------------------------------------------------------------
# Direct regularized energy
# ----------------------------------------------------------------------

def _binom_series_tail(s: float, u0: float) -> float:
    # J(u0) = int_{u0}^inf (1+u^2)^{-s} du as a binomial series in u0^{-2}
    total = 0.0
    coeff = 1.0  # (-1)^k poch(s, k) / k!
    for k in range(0, 40):
        term = coeff * u0 ** (1.0 - 2.0 * s - 2.0 * k) / (2.0 * s + 2.0 * k - 1.0)
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
        coeff *= -(s + k) / (k + 1.0)
    return total


def _row_sum(s: float, c: float, b: float, n_direct: int) -> tuple[float, float]:
    # sum_{n>=1} (c + b n^2)^{-s}: n_direct explicit terms, Euler-Maclaurin
    # beyond, returning (value, error estimate)
    n = np.arange(1.0, n_direct + 1.0)
    head = float(math.fsum((c + b * n * n) ** (-s)))
    capn = float(n_direct)
    u0 = capn * math.sqrt(b / c)
    integral = c ** (0.5 - s) / math.sqrt(b) * _binom_series_tail(s, u0)
    w = c + b * capn * capn
    g = w**-s
    gp = -2.0 * b * s * capn * w ** (-s - 1.0)
    gppp = 12.0 * b**2 * s * (s + 1.0) * capn * w ** (-s - 2.0) - 8.0 * b**3 * s * (
        s + 1.0
    ) * (s + 2.0) * capn**3 * w ** (-s - 3.0)
    tail = integral - 0.5 * g - gp / 12.0 + gppp / 720.0
    rem = abs(gppp) * (2.0 * s + 3.0) * (2.0 * s + 4.0) / (30240.0 * capn**2)
    return head + tail, rem + 4e-16 * (abs(head) + abs(integral))


def _power_tail(w: float, m: float) -> float:
    # sum_{k>m} k^{-w} by Euler-Maclaurin, m large enough that the
    # truncated series is far below double rounding
    return (
        m ** (1.0 - w) / (w - 1.0)
        - 0.5 * m**-w
        + w * m ** (-w - 1.0) / 12.0
        - w * (w + 1.0) * (w + 2.0) * m ** (-w - 3.0) / 720.0
        + w * (w + 1.0) * (w + 2.0) * (w + 3.0) * (w + 4.0) * m ** (-w - 5.0) / 30240.0
    )


def E_direct(cfg, s: float, omega_max: float | None = None) -> EvalResult:
    """Direct regularized energy  E(L1, L2; s) = (1/2) sum omega^{-2s},  s > 1.

    Rows n1 <= M are summed explicitly with Euler-Maclaurin closure of each
    inner n2 sum; the outer tail over n1 > M uses the exact row continuum
    limit f(m) = C1 m^{1-2s} - a^{-s} m^{-2s}/2 plus an exponentially small
    Poisson remainder, all still plain convergent numerics.  ``omega_max``
    (when given) sets how many rows are taken explicitly; accuracy is
    reported in abs_err either way.
    """
    if s <= 1.0:
        raise DomainError("direct energy sum diverges for s <= 1")
    a = 1.0 / cfg.L1**2
    b = 1.0 / cfg.L2**2
    rows = 48 if omega_max is None else max(48, int(math.ceil(omega_max * cfg.L1 / math.pi)))
    aspect = math.sqrt(a / b)
    total = 0.0
    err = 0.0
    for m in range(1, rows + 1):
        c = a * m * m
        n_direct = max(64, int(math.ceil(10.0 * math.sqrt(c / b))))
        val, e = _row_sum(s, c, b, n_direct)
        total += val
        err += e
    # analytic outer tail: f(m) ~ C1 m^{1-2s} - (a^{-s}/2) m^{-2s} + poisson
    c1 = 0.5 * math.sqrt(math.pi / b) * math.gamma(s - 0.5) / math.gamma(s) * a ** (0.5 - s)
    tail = c1 * _power_tail(2.0 * s - 1.0, float(rows)) - 0.5 * a**-s * _power_tail(
        2.0 * s, float(rows)
    )
    decay = 2.0 * math.pi * aspect
    poisson = 4.0 * c1 * float(rows) ** (1.0 - 2.0 * s) * math.exp(-decay * rows) / max(
        1.0 - math.exp(-decay), 1e-6
    )
    total += tail
    err += poisson + 4e-16 * abs(tail)
    scale = 0.5 * math.pi ** (-2.0 * s)
    return EvalResult(complex(scale * total), scale * err)


def write_modes(modes: ModeList, path: str) -> None:
    """Export one frequency per line, decimal, ascending."""
    with open(path, "w", encoding="utf-8") as fh:
        for om in modes.frequencies:
            fh.write(f"{om!r}\n")
