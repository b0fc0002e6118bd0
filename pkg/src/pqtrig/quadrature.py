"""Tanh-sinh quadrature for integrands supplied as plain callables.

``integrate_singular`` handles a finite interval whose integrand may carry
an integrable algebraic singularity (divergence exponent strictly between
-1 and 0) at either endpoint.  ``integrate_improper`` maps [0, inf) onto
[0, 1) with t = u/(1-u) and reuses the same engine.

Abscissae are generated as exact offsets from the endpoints, so an
integrand that is singular at ``a = 0`` can be sampled at distances far
below one ulp of the interval and integrates to near machine precision.
At a nonzero endpoint the offset must be folded into the endpoint value
first, which floors the sampling distance at about one ulp of the
endpoint; the residual error for a singularity of exponent ``-c`` there
is of order ``ulp**(1-c)``.  When full accuracy matters for an integrand
singular at ``b``, rewrite it so the singular point sits at zero (for
example, integrate f(b - s) for s in [0, b - a]).

A node that rounds onto an endpoint is nudged inward by one ulp of the
interval width before the integrand is called.
"""

import math
from dataclasses import dataclass
from typing import Callable

from ._nodes import level_nodes
from .errors import ComputationError, DomainError

_PI_HALF = math.pi / 2.0
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class QuadratureConfig:
    """Accuracy and budget knobs for the integrators."""

    target_abs_tol: float = 1e-12
    max_levels: int = 12
    max_evals: int = 1_000_000

    def __post_init__(self):
        if not (self.target_abs_tol > 0.0):
            raise DomainError("target_abs_tol must be positive")
        if self.max_levels < 1:
            raise DomainError("max_levels must be at least 1")
        if self.max_evals < 100:
            raise DomainError("max_evals must be at least 100")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class QuadratureResult:
    """Integral estimate with its level-difference error estimate.

    ``converged`` is True only when ``error_estimate`` met the configured
    absolute tolerance; refinement may also stop at the double-precision
    floor or on budget exhaustion, in which case the caller decides what
    to do with the unconverged value.
    """

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


def integrate_singular(
    f: Callable[[float], float],
    a: float,
    b: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> QuadratureResult:
    """Integrate ``f`` over [a, b] by level-doubling tanh-sinh quadrature.

    ``f`` must be finite on the open interval; an integrable algebraic
    endpoint singularity is permitted and needs no special treatment by
    the caller.  A non-finite value returned by ``f`` raises
    :class:`ComputationError`; running out of refinement levels or of
    evaluation budget returns a result with ``converged=False``.
    """
    if not (a < b):
        raise DomainError(f"need a < b, got a={a!r}, b={b!r}")
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("interval endpoints must be finite")
    half = 0.5 * (b - a)
    nudge = math.ulp(b - a)
    raw_tol = cfg.target_abs_tol / half

    def feval(x: float) -> float:
        if x <= a:
            x = a + nudge
            if x <= a:  # interval-width ulp too small to move off this endpoint
                x = math.nextafter(a, b)
        elif x >= b:
            x = b - nudge
            if x >= b:
                x = math.nextafter(b, a)
        fx = f(x)
        if not math.isfinite(fx):
            raise ComputationError(f"integrand returned non-finite value {fx!r} at x={x!r}")
        return fx

    raw = _PI_HALF * feval(a + half)
    evals = 1
    for omu, w, _ln_lo, _ln_hi, tau in level_nodes(0):
        r = half * omu
        c = w * (feval(b - r) + feval(a + r))
        raw += c
        evals += 2
        if abs(c) <= 1e-17 * abs(raw) and tau >= 1.0:
            break
    h = 1.0
    value = raw * h
    err = math.inf
    converged = False
    for level in range(1, cfg.max_levels + 1):
        h *= 0.5
        small = 0
        for omu, w, _ln_lo, _ln_hi, tau in level_nodes(level):
            r = half * omu
            c = w * (feval(b - r) + feval(a + r))
            raw += c
            evals += 2
            if abs(c) <= 1e-17 * abs(raw) and tau >= 1.0:
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
        new = raw * h
        err = abs(new - value)
        value = new
        if err <= raw_tol:
            converged = True
            break
        if err <= 8.0 * _EPS * abs(value) or evals >= cfg.max_evals:
            break
    return QuadratureResult(value * half, err * half, evals, converged)


def integrate_improper(
    f: Callable[[float], float],
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> QuadratureResult:
    """Integrate ``f`` over [0, inf); the caller guarantees convergence.

    Uses the rational map t = u/(1-u) (Jacobian (1-u)**-2) rather than a
    truncation cutoff, then defers to :func:`integrate_singular` on [0, 1].
    """

    def g(u: float) -> float:
        r = 1.0 - u
        return f(u / r) / (r * r)

    return integrate_singular(g, 0.0, 1.0, cfg)
