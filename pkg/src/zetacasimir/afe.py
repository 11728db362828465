"""Approximate functional equations for Riemann and Epstein zeta-functions.

The Riemann representation is the Hardy-Littlewood two-sum form

    zeta(s) ~ sum_{n<=x} n^{-s} + vartheta(s) sum_{n<=y} n^{-(1-s)},
    2 pi x y = t,  0 <= Re s < 1,  t >> 1,

with error envelope C (x^{-sigma} + t^{1/2-sigma} y^{sigma-1}).  The Epstein
analogue (Potter) pairs truncated lattice sums of phi^{-s} and phi^{s-1}
under 4 pi^2 x y = eta t^2 with the reflection factor X(s).

The envelope constants C and C_P turn the big-O statements into testable
bounds; they are calibrated once against the full continuations and frozen
in ``calibration.cfg`` (a flat key = value text file shipped with the
package and overridable per run).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .epstein import QuadraticForm, enumerate_below, _phi_values, _csum
from .errors import DegenerateSplitError, DomainError, PoleError
from .specfun import EvalResult, harmonic_number, log_gamma, vartheta

__all__ = [
    "HLSplit",
    "PotterSplit",
    "hl_default_split",
    "potter_symmetric_split",
    "afe_riemann",
    "afe_error_bound",
    "potter_afe",
    "potter_error_bound",
    "x_factor",
    "load_calibration",
    "get_calibration",
]

_REL_SPLIT_TOL = 1e-12


@dataclass(frozen=True)
class HLSplit:
    """Hardy-Littlewood split lengths, constrained by 2 pi x y = t."""

    x: float
    y: float
    t: float

    def __post_init__(self) -> None:
        if not (self.x > 0.0 and self.y > 0.0 and self.t > 0.0):
            raise DomainError("split parameters must be positive")
        if abs(2.0 * math.pi * self.x * self.y - self.t) > _REL_SPLIT_TOL * self.t:
            raise DomainError("split violates 2 pi x y = t")


@dataclass(frozen=True)
class PotterSplit:
    """Potter split lengths, constrained by 4 pi^2 x y = eta t^2."""

    x: float
    y: float
    t: float
    eta: float

    def __post_init__(self) -> None:
        if not (self.x > 0.0 and self.y > 0.0 and self.t > 0.0 and self.eta > 0.0):
            raise DomainError("split parameters must be positive")
        rhs = self.eta * self.t * self.t
        if abs(4.0 * math.pi**2 * self.x * self.y - rhs) > _REL_SPLIT_TOL * rhs:
            raise DomainError("split violates 4 pi^2 x y = eta t^2")


def hl_default_split(t: float) -> HLSplit:
    """Symmetric split x = y = sqrt(t / 2 pi)."""
    if not t > 0.0:
        raise DomainError("t must be positive")
    x = math.sqrt(t / (2.0 * math.pi))
    return HLSplit(x, x, t)


def potter_symmetric_split(form: QuadraticForm, t: float) -> PotterSplit:
    """Symmetric Potter split x = y = sqrt(eta) t / (2 pi)."""
    if not t > 0.0:
        raise DomainError("t must be positive")
    x = math.sqrt(form.eta) * t / (2.0 * math.pi)
    return PotterSplit(x, x, t, form.eta)


# ----------------------------------------------------------------------
# Calibration constants
# ----------------------------------------------------------------------

_calibration: dict[str, float] | None = None


def load_calibration(path: str | None = None) -> dict[str, float]:
    """Parse a flat key = value calibration file (defaults to the one
    shipped with the package)."""
    if path is None:
        text = resources.files("zetacasimir").joinpath("calibration.cfg").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    out: dict[str, float] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, val = line.partition("=")
        if not _:
            raise DomainError(f"malformed calibration line: {raw!r}")
        out[key.strip()] = float(val.strip())
    return out


def get_calibration() -> dict[str, float]:
    global _calibration
    if _calibration is None:
        _calibration = load_calibration()
    return _calibration


# ----------------------------------------------------------------------
# Hardy-Littlewood
# ----------------------------------------------------------------------

def _literal_sum(s: complex, limit: float) -> complex:
    n = np.arange(1, int(math.floor(limit)) + 1, dtype=float)
    return _csum(np.exp(-s * np.log(n)))


def afe_riemann(s: complex, split: HLSplit, mode: str = "auto") -> EvalResult:
    """Two-sum approximation of zeta(s) at the given split.

    Modes: ``literal`` sums run over n <= floor(x) and n <= floor(y);
    ``continuation`` uses the generalized-harmonic-number continuation with
    the real limits (required reading outside 0 <= Re s < 1); ``auto``
    keeps the direct sum literal and switches the reflected sum to
    continuation semantics when s leaves the strip.  abs_err carries the
    calibrated error envelope.
    """
    s = complex(s)
    if split.x < 1.0 or split.y < 1.0:
        raise DegenerateSplitError("split leaves an empty main sum (x or y < 1)")
    in_strip = 0.0 <= s.real < 1.0
    if mode not in ("auto", "literal", "continuation"):
        raise DomainError(f"unknown afe mode {mode!r}")
    literal_first = mode == "literal" or (mode == "auto")
    literal_second = mode == "literal" or (mode == "auto" and in_strip)
    term1 = _literal_sum(s, split.x) if literal_first else harmonic_number(split.x, s)
    if literal_second:
        term2 = _literal_sum(1.0 - s, split.y)
    else:
        term2 = harmonic_number(split.y, 1.0 - s)
    value = term1 + vartheta(s) * term2
    return EvalResult(value, afe_error_bound(s, split))


def afe_error_bound(s: complex, split: HLSplit, constant: float | None = None) -> float:
    """Calibrated envelope C (x^{-sigma} + t^{1/2 - sigma} y^{sigma - 1})."""
    sigma = complex(s).real
    if constant is None:
        constant = get_calibration()["hl_envelope_constant"]
    return constant * (
        split.x**-sigma + split.t ** (0.5 - sigma) * split.y ** (sigma - 1.0)
    )


# ----------------------------------------------------------------------
# Potter
# ----------------------------------------------------------------------

def x_factor(form: QuadraticForm, s: complex) -> complex:
    """Reflection factor X(s) = (2 pi / sqrt(eta))^{2s-1} Gamma(1-s)/Gamma(s)."""
    s = complex(s)
    for w in (s, 1.0 - s):
        if w.imag == 0.0 and w.real <= 0.0 and w.real == math.floor(w.real):
            raise PoleError(f"X(s) has a Gamma singularity: argument {w}")
    ln_ratio = math.log(2.0 * math.pi / math.sqrt(form.eta))
    return cmath.exp((2.0 * s - 1.0) * ln_ratio + log_gamma(1.0 - s) - log_gamma(s))


def _lattice_power_sum(form: QuadraticForm, expo: complex, limit: float) -> tuple[complex, int]:
    pts = enumerate_below(form, limit)
    if pts.shape[0] == 0:
        return 0j, 0
    phi = _phi_values(form, pts)
    return _csum(np.exp(expo * np.log(phi))), pts.shape[0]


def potter_afe(form: QuadraticForm, s: complex, split: PotterSplit) -> EvalResult:
    """Two-sum approximation of the Epstein zeta-function.

        A(s) ~ sum'_{phi<=x} phi^{-s} + X(s) sum'_{phi<=y} phi^{s-1}

    The sums run over nonzero lattice points inside the respective
    ellipses; an empty direct sum raises DegenerateSplitError.
    """
    s = complex(s)
    if abs(split.eta - form.eta) > 1e-9 * form.eta:
        raise DomainError("split was built for a different form (eta mismatch)")
    term1, n1 = _lattice_power_sum(form, -s, split.x)
    if n1 == 0:
        raise DegenerateSplitError("no lattice point satisfies phi <= x")
    term2, _ = _lattice_power_sum(form, s - 1.0, split.y)
    value = term1 + x_factor(form, s) * term2
    return EvalResult(value, potter_error_bound(form, s, split))


def potter_error_bound(
    form: QuadraticForm, s: complex, split: PotterSplit, constant: float | None = None
) -> float:
    """Mirrored Hardy-Littlewood-shaped envelope for the Potter equation.

    C_P (x^{-sigma} + |X(s)| y^{sigma-1}); calibrated, not proven -- the
    underlying theorem states no explicit remainder.
    """
    s = complex(s)
    sigma = s.real
    if constant is None:
        constant = get_calibration()["potter_envelope_constant"]
    return constant * (
        split.x**-sigma + abs(x_factor(form, s)) * split.y ** (sigma - 1.0)
    )
