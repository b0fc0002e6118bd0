"""Inverse functions sin_pq, cos_pq and sinh_pq by safeguarded root finding.

Each inverse solves its monotone defining equation with Newton steps (the
derivative of the defining integral is the integrand itself, so it comes
for free) inside a maintained bracket; any step leaving the bracket, and
any region where the derivative blows up, falls back to bisection.  The
convergence criterion is the residual in function space, |F(s) - y| <=
tol, which is what the quadrature can actually certify.

Near the singular top of the trigonometric branch the derivative of
arcsin_pq is unbounded, so in double precision neighbouring representable
arguments can straddle residuals larger than any reasonable tolerance.
When the bracket collapses to a few ulps the nearest representable root
is returned; ComputationError is raised only on genuine iteration budget
exhaustion.
"""

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import ComputationError, DomainError
from .functions import PQParams, half_pi_pq, m_star_pq
from .quadrature import DEFAULT_CONFIG, QuadratureConfig

_TOP_PAD = 1e-12


@dataclass(frozen=True)
class InversionConfig:
    """Residual tolerance and iteration budget for the root finders."""

    tol: float = 1e-12
    max_iters: int = 100

    def __post_init__(self):
        if not (self.tol > 0.0):
            raise DomainError("tol must be positive")
        if self.max_iters < 10:
            raise DomainError("max_iters must be at least 10")


DEFAULT_INVERSION = InversionConfig()


def _quad_cfg(inv: InversionConfig) -> QuadratureConfig:
    # the forward evaluations must out-resolve the requested residual, but
    # below ~1e-13 the level-difference estimate cannot certify anything
    # more anyway (a sub-floor residual tolerance just makes the solver
    # polish to the representable root)
    tol = max(min(inv.tol, DEFAULT_CONFIG.target_abs_tol), 1e-13)
    if tol == DEFAULT_CONFIG.target_abs_tol:
        return DEFAULT_CONFIG
    return QuadratureConfig(target_abs_tol=tol)


def sin_pq(pq: PQParams, y: float, cfg: InversionConfig = DEFAULT_INVERSION) -> float:
    """Solve arcsin_pq(s) = y for s in [0, 1].

    ``y`` must lie in [0, half_pi_pq] (the top end is tolerance-padded by
    1e-12); sin_pq(0) = 0 and sin_pq(half_pi_pq) = 1 exactly.
    """
    qcfg = _quad_cfg(cfg)
    hp = half_pi_pq(pq, qcfg)
    if not (0.0 <= y <= hp + _TOP_PAD):
        raise DomainError(
            f"sin_pq needs y in [0, {hp:.12g}] (half_pi for p={pq.p}, q={pq.q}), got {y!r}"
        )
    if y == 0.0:
        return 0.0
    if y >= hp - _TOP_PAD:
        return 1.0
    p, q = pq.p, pq.q
    qt = qcfg.target_abs_tol
    lo, hi = 0.0, 1.0
    s = min(1.0, y / hp)
    for _ in range(cfg.max_iters):
        fval = kernels.arcsin_quad(p, q, s, qt, qcfg.max_levels, qcfg.max_evals)[0]
        resid = fval - y
        if abs(resid) <= cfg.tol:
            return s
        if resid < 0.0:
            lo = s
        else:
            hi = s
        if hi - lo <= 2.0 * math.ulp(hi):
            return 0.5 * (lo + hi)
        sq = math.pow(s, q)
        if 1.0 - sq < 1e-8:
            # derivative (1 - s**q)**(-1/p) blows up; bisect instead
            s = 0.5 * (lo + hi)
            continue
        step = resid * math.pow(1.0 - sq, 1.0 / p)
        s_new = s - step
        if not (lo < s_new < hi):
            s_new = 0.5 * (lo + hi)
        s = s_new
    raise ComputationError(
        f"sin_pq did not converge within {cfg.max_iters} iterations "
        f"(bracket [{lo!r}, {hi!r}])",
        partial=0.5 * (lo + hi),
    )


def cos_pq(pq: PQParams, y: float, cfg: InversionConfig = DEFAULT_INVERSION) -> float:
    """Solve arccos_pq(v) = y for v in [0, 1].

    Computed directly as the inverse of the decreasing composition
    arccos_pq, not through any algebraic relation with sin_pq.

    For p > 2 the composition flattens near v = 0, so the v-resolution
    implied by the residual tolerance degrades like tol / |arccos_pq'|.
    A tolerance below the quadrature noise floor (about 1e-15) makes the
    solver polish down to the nearest representable root instead.
    """
    qcfg = _quad_cfg(cfg)
    hp = half_pi_pq(pq, qcfg)
    if not (0.0 <= y <= hp + _TOP_PAD):
        raise DomainError(
            f"cos_pq needs y in [0, {hp:.12g}] (half_pi for p={pq.p}, q={pq.q}), got {y!r}"
        )
    if y == 0.0:
        return 1.0
    if y >= hp - _TOP_PAD:
        return 0.0
    p, q = pq.p, pq.q
    qt = qcfg.target_abs_tol

    def arccos_at(v: float) -> float:
        w = math.pow(-math.expm1(p * math.log(v)), 1.0 / q)
        return kernels.arcsin_quad(p, q, w, qt, qcfg.max_levels, qcfg.max_evals)[0]

    lo, hi = 0.0, 1.0  # arccos decreases from half_pi at 0 to 0 at 1
    v = 0.5
    for _ in range(cfg.max_iters):
        resid = arccos_at(v) - y
        if abs(resid) <= cfg.tol:
            return v
        if resid > 0.0:
            lo = v
        else:
            hi = v
        if hi - lo <= 2.0 * math.ulp(hi):
            return 0.5 * (lo + hi)
        vp = math.pow(v, p)
        if vp < 1e-8 or 1.0 - vp < 1e-8:
            v = 0.5 * (lo + hi)
            continue
        # d/dv arccos_pq(v) = -(p/q) v**(p-2) (1 - v**p)**(1/q - 1)
        deriv = -(p / q) * math.pow(v, p - 2.0) * math.pow(1.0 - vp, 1.0 / q - 1.0)
        v_new = v - resid / deriv
        if not (lo < v_new < hi):
            v_new = 0.5 * (lo + hi)
        v = v_new
    raise ComputationError(
        f"cos_pq did not converge within {cfg.max_iters} iterations "
        f"(bracket [{lo!r}, {hi!r}])",
        partial=0.5 * (lo + hi),
    )


def sinh_pq(pq: PQParams, y: float, cfg: InversionConfig = DEFAULT_INVERSION) -> float:
    """Solve arcsinh_pq(s) = y for s >= 0.

    ``y`` must be nonnegative and, when m_star_pq is finite, strictly
    below it.  The initial bracket doubles upward from 1 until it
    encloses the root; arcsinh_pq is unbounded in s even when its limit
    bounds y, so the doubling always terminates for in-domain y.
    """
    qcfg = _quad_cfg(cfg)
    if y < 0.0:
        raise DomainError(f"sinh_pq needs y >= 0, got {y!r}")
    ms = m_star_pq(pq, qcfg)
    if ms.is_finite and y >= ms.value:
        raise DomainError(
            f"sinh_pq needs y below m_star = {ms.value:.12g} for p={pq.p}, q={pq.q}, got {y!r}"
        )
    if y == 0.0:
        return 0.0
    p, q = pq.p, pq.q
    qt = qcfg.target_abs_tol

    def forward(s: float) -> float:
        return kernels.arcsinh_quad(p, q, s, qt, qcfg.max_levels, qcfg.max_evals)[0]

    hi = 1.0
    while forward(hi) <= y:
        hi *= 2.0
        if math.isinf(hi):
            raise ComputationError(f"sinh_pq bracket overflow for y={y!r}", partial=hi)
    lo = 0.0
    s = min(hi, y)
    for _ in range(cfg.max_iters):
        resid = forward(s) - y
        if abs(resid) <= cfg.tol:
            return s
        if resid < 0.0:
            lo = s
        else:
            hi = s
        if hi - lo <= 2.0 * math.ulp(hi):
            return 0.5 * (lo + hi)
        # d/ds arcsinh_pq(s) = (1 + s**q)**(-1/p), in log space to dodge overflow
        lns = math.log(s) if s > 0.0 else -745.0
        A = q * lns
        softplus = A + math.log1p(math.exp(-A)) if A > 0.0 else math.log1p(math.exp(A))
        step = resid * math.exp(softplus / p)
        s_new = s - step
        if not (lo < s_new < hi):
            s_new = 0.5 * (lo + hi)
        s = s_new
    raise ComputationError(
        f"sinh_pq did not converge within {cfg.max_iters} iterations "
        f"(bracket [{lo!r}, {hi!r}])",
        partial=0.5 * (lo + hi),
    )
