"""Mechanical verification of the inequality and monotonicity claims.

Every check produces an :class:`InequalityVerdict` whose ``margin`` is
oriented so that a nonnegative value means the claim holds at that point;
``lhs`` and ``rhs`` carry the literal sides of the stated inequality.
Identity checks (the double-angle relation) use ``margin = -|lhs - rhs|``
so the same satisfaction rule applies.

An instance is satisfied when ``margin >= -tolerance``; the default
tolerance is ``1e-9 + 1e-9 * |rhs|``, covering the quadrature and
inversion error carried by both sides plus the equality case on the
diagonal of the mean inequalities.

The checks, by registry name:

    lemma21         arcsin_pq(x) > p x (1-x**q)**(1-1/p) / ((q-p) x**q + p)
    lemma22         x / arcsinh_pq(x) > ((p-q) x**q + p) / (p (1+x**q)**(1-1/p))
    lemma23         m_star_pq > 1 (infinite exactly when p >= q)
    thm11-sin       sin_pq(sqrt(r s)) >= sqrt(sin_pq(r) sin_pq(s))
    thm11-sinh      sinh_pq(sqrt(r* s*)) <= sqrt(sinh_pq(r*) sinh_pq(s*))
    gm-sin          sin_pq(sqrt(r s)) >= H_ord(sin_pq(r), sin_pq(s))
    gm-sinh         sinh_pq(sqrt(r* s*)) <= H_ord(sinh_pq(r*), sinh_pq(s*))
    double-angle    the (4/3, 4) double-angle identity
    f-monotone      F(x) = x**(1-ord) / (arcsin_pq(x) (1-x**q)**(1/p)) increasing
    fstar-monotone  F*(x) = x**(1-ord) / (arcsinh_pq(x) (1+x**q)**(1/p)) decreasing

The geometric-mean inequalities are sharp at order 0: gm-sin holds for
every argument pair exactly when ord <= 0, gm-sinh exactly when
ord >= 0.  ``counterexample_search`` exhibits the failure (and a
satisfying instance) for gm-sin at a positive order.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Optional, Sequence, Union

from .errors import DomainError, PQTrigError
from .functions import PQParams, arcsin_pq, arcsinh_pq, half_pi_pq, m_star_pq
from .inverse import cos_pq, sin_pq, sinh_pq
from .means import HolderOrder, holder_mean

DEFAULT_TOL_ABS = 1e-9
DEFAULT_TOL_REL = 1e-9

# hyperbolic argument grids are capped here when m_star is infinite (or larger)
SINH_ARG_CAP = 5.0


def default_tolerance(rhs: float) -> float:
    """Satisfaction tolerance for one inequality instance."""
    if math.isinf(rhs):
        return DEFAULT_TOL_ABS
    return DEFAULT_TOL_ABS + DEFAULT_TOL_REL * abs(rhs)


@dataclass(frozen=True)
class InequalityVerdict:
    """One verified inequality instance.

    ``at`` records the parameter point (p, q and the check's arguments);
    ``satisfied`` is exactly ``margin >= -tolerance``.
    """

    lhs: float
    rhs: float
    margin: float
    tolerance: float
    satisfied: bool
    at: Mapping[str, object]

    @classmethod
    def make(cls, lhs, rhs, margin, at, tolerance=None) -> "InequalityVerdict":
        tol = default_tolerance(rhs) if tolerance is None else tolerance
        return cls(lhs, rhs, margin, tol, margin >= -tol, dict(at))


@dataclass(frozen=True)
class GridAxis:
    """One axis of a sweep grid: ``n`` evenly spaced values on [lo, hi].

    Axes named p and q are absolute parameter values; the remaining axes
    are fractions of the check's per-(p, q) domain (so 0.01..0.99 spans
    the domain shrunk 1 percent away from each open endpoint).
    """

    name: str
    lo: float
    hi: float
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"axis {self.name!r} needs n >= 1")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo <= self.hi):
            raise DomainError(f"axis {self.name!r} needs finite lo <= hi")
        if self.n > 1 and self.lo == self.hi:
            raise DomainError(f"axis {self.name!r} has n > 1 but zero width")

    def values(self) -> list[float]:
        if self.n == 1:
            return [self.lo]
        span = self.hi - self.lo
        return [self.lo + span * i / (self.n - 1) for i in range(self.n)]


@dataclass(frozen=True)
class SweepError:
    """A per-point evaluation failure recorded by the sweep runner."""

    index: int
    at: Mapping[str, object]
    message: str


@dataclass
class SweepReport:
    """Aggregated verdicts for one check over a grid, in row-major order."""

    check: str
    order: Optional[float]
    grid: tuple[GridAxis, ...]
    verdicts: list[InequalityVerdict] = field(default_factory=list)
    errors: list[SweepError] = field(default_factory=list)

    @property
    def worst_margin(self) -> float:
        return min((v.margin for v in self.verdicts), default=math.inf)

    @property
    def counterexamples(self) -> list[Mapping[str, object]]:
        return [v.at for v in self.verdicts if not v.satisfied]

    @property
    def all_satisfied(self) -> bool:
        return all(v.satisfied for v in self.verdicts)


# ---------------------------------------------------------------------------
# cached forward/inverse evaluations (performance only; all functions pure)

@lru_cache(maxsize=65536)
def _sin(p: float, q: float, y: float) -> float:
    return sin_pq(PQParams(p, q), y)


@lru_cache(maxsize=65536)
def _sinh(p: float, q: float, y: float) -> float:
    return sinh_pq(PQParams(p, q), y)


@lru_cache(maxsize=65536)
def _arcsin(p: float, q: float, x: float) -> float:
    return arcsin_pq(PQParams(p, q), x)


# ---------------------------------------------------------------------------
# scalar checks

def lemma21_margin(pq: PQParams, x: float, tolerance: Optional[float] = None) -> InequalityVerdict:
    """Lower rational bound for arcsin_pq on (0, 1); margin expected > 0."""
    if not (0.0 < x < 1.0):
        raise DomainError(f"lemma21 needs x in (0, 1), got {x!r}")
    lhs = arcsin_pq(pq, x)
    xq = math.pow(x, pq.q)
    rhs = pq.p * x * math.pow(1.0 - xq, 1.0 - 1.0 / pq.p) / ((pq.q - pq.p) * xq + pq.p)
    return InequalityVerdict.make(lhs, rhs, lhs - rhs, {"p": pq.p, "q": pq.q, "x": x}, tolerance)


def lemma22_margin(pq: PQParams, x: float, tolerance: Optional[float] = None) -> InequalityVerdict:
    """Lower bound for x / arcsinh_pq(x) on (0, inf); margin expected > 0.

    For p < q the bound's numerator changes sign at
    x0 = (p/(q-p))**(1/q); the verdict records which side x falls on.
    """
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"lemma22 needs finite x > 0, got {x!r}")
    lhs = x / arcsinh_pq(pq, x)
    xq = math.pow(x, pq.q)
    rhs = ((pq.p - pq.q) * xq + pq.p) / (pq.p * math.pow(1.0 + xq, 1.0 - 1.0 / pq.p))
    at = {"p": pq.p, "q": pq.q, "x": x}
    if pq.p < pq.q:
        x0 = math.pow(pq.p / (pq.q - pq.p), 1.0 / pq.q)
        at["x0"] = x0
        at["region"] = "below_x0" if x < x0 else ("above_x0" if x > x0 else "at_x0")
    return InequalityVerdict.make(lhs, rhs, lhs - rhs, at, tolerance)


def lemma23_check(pq: PQParams, tolerance: Optional[float] = None) -> InequalityVerdict:
    """m_star_pq > 1, with the p >= q cells infinite and trivially satisfied."""
    ms = m_star_pq(pq)
    at = {"p": pq.p, "q": pq.q, "m_star": ms.as_float()}
    if not ms.is_finite:
        return InequalityVerdict.make(math.inf, 1.0, math.inf, at, tolerance)
    return InequalityVerdict.make(ms.value, 1.0, ms.value - 1.0, at, tolerance)


def thm11_sin_margin(
    pq: PQParams, r: float, s: float, tolerance: Optional[float] = None
) -> InequalityVerdict:
    """sin_pq at the geometric mean dominates the geometric mean of sines.

    Arguments must lie in the open interval (0, half_pi_pq); equality
    holds exactly on the diagonal r = s.
    """
    hp = half_pi_pq(pq)
    if not (0.0 < r < hp and 0.0 < s < hp):
        raise DomainError(f"thm11-sin needs r, s in (0, {hp:.12g}), got {r!r}, {s!r}")
    lhs = _sin(pq.p, pq.q, math.sqrt(r * s))
    rhs = math.sqrt(_sin(pq.p, pq.q, r) * _sin(pq.p, pq.q, s))
    return InequalityVerdict.make(
        lhs, rhs, lhs - rhs, {"p": pq.p, "q": pq.q, "r": r, "s": s}, tolerance
    )


def thm11_sinh_margin(
    pq: PQParams, r: float, s: float, tolerance: Optional[float] = None
) -> InequalityVerdict:
    """sinh_pq at the geometric mean is dominated; margin is rhs - lhs."""
    ms = m_star_pq(pq)
    if not (r > 0.0 and s > 0.0) or (ms.is_finite and not (r < ms.value and s < ms.value)):
        top = f"{ms.value:.12g}" if ms.is_finite else "inf"
        raise DomainError(f"thm11-sinh needs r, s in (0, {top}), got {r!r}, {s!r}")
    lhs = _sinh(pq.p, pq.q, math.sqrt(r * s))
    rhs = math.sqrt(_sinh(pq.p, pq.q, r) * _sinh(pq.p, pq.q, s))
    return InequalityVerdict.make(
        lhs, rhs, rhs - lhs, {"p": pq.p, "q": pq.q, "r": r, "s": s}, tolerance
    )


def gm_general_sin_margin(
    pq: PQParams,
    order: Union[HolderOrder, float],
    r: float,
    s: float,
    tolerance: Optional[float] = None,
) -> InequalityVerdict:
    """sin_pq(sqrt(r s)) >= H_order(sin_pq(r), sin_pq(s)).

    Holds for every (r, s) exactly when order <= 0; at order 0 this is
    thm11-sin.  For order > 0 some argument pairs violate it.
    """
    hp = half_pi_pq(pq)
    if not (0.0 < r < hp and 0.0 < s < hp):
        raise DomainError(f"gm-sin needs r, s in (0, {hp:.12g}), got {r!r}, {s!r}")
    ordv = order.order if isinstance(order, HolderOrder) else float(order)
    lhs = _sin(pq.p, pq.q, math.sqrt(r * s))
    rhs = holder_mean(ordv, _sin(pq.p, pq.q, r), _sin(pq.p, pq.q, s))
    return InequalityVerdict.make(
        lhs, rhs, lhs - rhs,
        {"p": pq.p, "q": pq.q, "order": ordv, "r": r, "s": s}, tolerance,
    )


def gm_general_sinh_margin(
    pq: PQParams,
    order: Union[HolderOrder, float],
    r: float,
    s: float,
    tolerance: Optional[float] = None,
) -> InequalityVerdict:
    """sinh_pq(sqrt(r s)) <= H_order(sinh_pq(r), sinh_pq(s)); holds for order >= 0."""
    ms = m_star_pq(pq)
    if not (r > 0.0 and s > 0.0) or (ms.is_finite and not (r < ms.value and s < ms.value)):
        top = f"{ms.value:.12g}" if ms.is_finite else "inf"
        raise DomainError(f"gm-sinh needs r, s in (0, {top}), got {r!r}, {s!r}")
    ordv = order.order if isinstance(order, HolderOrder) else float(order)
    lhs = _sinh(pq.p, pq.q, math.sqrt(r * s))
    rhs = holder_mean(ordv, _sinh(pq.p, pq.q, r), _sinh(pq.p, pq.q, s))
    return InequalityVerdict.make(
        lhs, rhs, rhs - lhs,
        {"p": pq.p, "q": pq.q, "order": ordv, "r": r, "s": s}, tolerance,
    )


def double_angle_margin(
    pq: PQParams, x: float, tolerance: Optional[float] = None
) -> InequalityVerdict:
    """The double-angle identity satisfied by the (4/3, 4) sine.

        sin(2x) = 2 sin(x) cos(x)**(1/3) / (1 + 4 sin(x)**4 cos(x)**(4/3))**(1/2)

    with every function taken at (p, q) = (4/3, 4) and x in
    (0, half_pi/2).  As an identity check its margin is -|lhs - rhs| and
    the default tolerance is 1e-8.
    """
    hp = half_pi_pq(pq)
    if not (0.0 < x < 0.5 * hp):
        raise DomainError(f"double-angle needs x in (0, {0.5 * hp:.12g}), got {x!r}")
    lhs = _sin(pq.p, pq.q, 2.0 * x)
    sx = _sin(pq.p, pq.q, x)
    cx = cos_pq(pq, x)
    rhs = 2.0 * sx * math.pow(cx, 1.0 / 3.0) / math.sqrt(
        1.0 + 4.0 * sx**4 * math.pow(cx, 4.0 / 3.0)
    )
    tol = 1e-8 if tolerance is None else tolerance
    return InequalityVerdict.make(
        lhs, rhs, -abs(lhs - rhs), {"p": pq.p, "q": pq.q, "x": x}, tol
    )


# ---------------------------------------------------------------------------
# proof-machinery scalar functions and monotonicity probes

def G_fn(pq: PQParams, x: float) -> float:
    """G(x) = q x**q / (p (1-x**q)) - x / (arcsin_pq(x) (1-x**q)**(1/p)).

    Defined on (0, 1) with range (-1, inf): G tends to -1 at 0 and to
    +inf at 1.
    """
    if not (0.0 < x < 1.0):
        raise DomainError(f"G_fn needs x in (0, 1), got {x!r}")
    xq = math.pow(x, pq.q)
    omxq = -math.expm1(pq.q * math.log(x))
    return pq.q * xq / (pq.p * omxq) - x / (arcsin_pq(pq, x) * math.pow(omxq, 1.0 / pq.p))


def Gstar_fn(pq: PQParams, x: float) -> float:
    """G*(x) = x / (arcsinh_pq(x) (1+x**q)**(1/p)) + q x**q / (p (1+x**q)).

    Exceeds 1 for every x > 0 and tends to 1 at 0.
    """
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"Gstar_fn needs finite x > 0, got {x!r}")
    xq = math.pow(x, pq.q)
    opxq = 1.0 + xq
    return x / (arcsinh_pq(pq, x) * math.pow(opxq, 1.0 / pq.p)) + pq.q * xq / (pq.p * opxq)


def F_fn(pq: PQParams, order: Union[HolderOrder, float], x: float) -> float:
    """F(x) = x**(1-order) / (arcsin_pq(x) (1-x**q)**(1/p)) on (0, 1)."""
    if not (0.0 < x < 1.0):
        raise DomainError(f"F_fn needs x in (0, 1), got {x!r}")
    ordv = order.order if isinstance(order, HolderOrder) else float(order)
    omxq = -math.expm1(pq.q * math.log(x))
    return math.pow(x, 1.0 - ordv) / (arcsin_pq(pq, x) * math.pow(omxq, 1.0 / pq.p))


def Fstar_fn(pq: PQParams, order: Union[HolderOrder, float], x: float) -> float:
    """F*(x) = x**(1-order) / (arcsinh_pq(x) (1+x**q)**(1/p)) on (0, inf)."""
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"Fstar_fn needs finite x > 0, got {x!r}")
    ordv = order.order if isinstance(order, HolderOrder) else float(order)
    opxq = 1.0 + math.pow(x, pq.q)
    return math.pow(x, 1.0 - ordv) / (arcsinh_pq(pq, x) * math.pow(opxq, 1.0 / pq.p))


def _probe_report(check, pq, ordv, xs, fvals, increasing) -> SweepReport:
    axis = GridAxis("x", xs[0], xs[-1], len(xs))
    report = SweepReport(check=check, order=ordv, grid=(axis,))
    for i in range(len(xs) - 1):
        if increasing:
            lhs, rhs = fvals[i + 1], fvals[i]
        else:
            lhs, rhs = fvals[i], fvals[i + 1]
        at = {"p": pq.p, "q": pq.q, "x_lo": xs[i], "x_hi": xs[i + 1], "order": ordv}
        report.verdicts.append(InequalityVerdict.make(lhs, rhs, lhs - rhs, at))
    return report


def F_monotonicity_probe(
    pq: PQParams, order: Union[HolderOrder, float], grid_n: int
) -> SweepReport:
    """Scan F on (0, 1): strictly increasing exactly when order <= 0.

    Each verdict compares consecutive grid values; ``all_satisfied``
    means every difference was positive.  For order > 0 the scan is
    expected to record a violation.
    """
    if grid_n < 10:
        raise DomainError("grid_n must be at least 10")
    ordv = order.order if isinstance(order, HolderOrder) else float(order)
    xs = GridAxis("x", 0.01, 0.99, grid_n).values()
    fvals = [F_fn(pq, ordv, x) for x in xs]
    return _probe_report("f-monotone", pq, ordv, xs, fvals, increasing=True)


def Fstar_monotonicity_probe(
    pq: PQParams, order: Union[HolderOrder, float], grid_n: int, x_max: float = 50.0
) -> SweepReport:
    """Scan F* on (0, x_max]: strictly decreasing exactly when order >= 0."""
    if grid_n < 10:
        raise DomainError("grid_n must be at least 10")
    if not (x_max > 0.0):
        raise DomainError("x_max must be positive")
    ordv = order.order if isinstance(order, HolderOrder) else float(order)
    xs = [f * x_max for f in GridAxis("x", 0.01, 0.99, grid_n).values()]
    fvals = [Fstar_fn(pq, ordv, x) for x in xs]
    return _probe_report("fstar-monotone", pq, ordv, xs, fvals, increasing=False)


# ---------------------------------------------------------------------------
# counterexample search for the sharpness threshold

@dataclass(frozen=True)
class Witness:
    """One argument pair with the margin of the mean inequality there."""

    x: float
    y: float
    lhs: float
    rhs: float
    margin: float


@dataclass(frozen=True)
class CounterexampleResult:
    """Outcome of a sharpness search at a positive Hölder order.

    The underlying claim is
    sqrt(arcsin_pq(x) arcsin_pq(y)) >= arcsin_pq(H_ord(x, y)); a
    violating witness has ``margin < 0`` there, a satisfying one
    ``margin > 0``.  Either field is None when no witness of that sign
    emerged within budget.
    """

    violating: Optional[Witness]
    satisfying: Optional[Witness]
    evaluations: int


_WITNESS_FLOOR = 1e-11


def counterexample_search(
    pq: PQParams, order: Union[HolderOrder, float], budget: int = 40000
) -> CounterexampleResult:
    """Grid scan plus local refinement for both margin signs on (0, 1)**2.

    The coarse grid has floor(sqrt(budget)) points per side; the most
    negative and most positive cells are then refined by three rounds of
    10x zoom.  Margins within 1e-11 of zero (the diagonal's equality
    case) never qualify as witnesses.
    """
    ordv = order.order if isinstance(order, HolderOrder) else float(order)
    if not (ordv > 0.0):
        raise DomainError("counterexample_search needs a positive order")
    if budget < 100:
        raise DomainError("budget must be at least 100")
    p, q = pq.p, pq.q
    evals = 0

    def margin_at(x: float, y: float) -> tuple[float, float, float]:
        # claim: arcsin_pq(H_ord(x, y)) <= sqrt(arcsin_pq(x) arcsin_pq(y))
        nonlocal evals
        evals += 1
        lhs = _arcsin(p, q, holder_mean(ordv, x, y))
        rhs = math.sqrt(_arcsin(p, q, x) * _arcsin(p, q, y))
        return lhs, rhs, rhs - lhs

    n = max(10, math.isqrt(budget))
    xs = GridAxis("x", 0.005, 0.995, n).values()
    best = {"neg": (0.0, None), "pos": (0.0, None)}
    for i, x in enumerate(xs):
        for y in xs[i + 1:]:
            _, _, m = margin_at(x, y)
            if m < best["neg"][0]:
                best["neg"] = (m, (x, y))
            if m > best["pos"][0]:
                best["pos"] = (m, (x, y))

    def refine(seed, want_negative: bool) -> Optional[Witness]:
        m0, pt = seed
        if pt is None:
            return None
        span = (xs[-1] - xs[0]) / (n - 1)
        cx, cy = pt
        best_m, best_pt = m0, pt
        for _ in range(3):
            for i in range(11):
                for j in range(11):
                    x = min(0.9995, max(5e-4, cx + span * (i - 5) / 5.0))
                    y = min(0.9995, max(5e-4, cy + span * (j - 5) / 5.0))
                    if abs(x - y) < 1e-12:
                        continue
                    _, _, m = margin_at(x, y)
                    if (want_negative and m < best_m) or (not want_negative and m > best_m):
                        best_m, best_pt = m, (x, y)
            cx, cy = best_pt
            span /= 10.0
        if abs(best_m) <= _WITNESS_FLOOR:
            return None
        lhs, rhs, m = margin_at(*best_pt)
        return Witness(best_pt[0], best_pt[1], lhs, rhs, m)

    return CounterexampleResult(
        violating=refine(best["neg"], want_negative=True),
        satisfying=refine(best["pos"], want_negative=False),
        evaluations=evals,
    )


# ---------------------------------------------------------------------------
# sweep runner

def _cap_sinh_args(pq: PQParams) -> float:
    ms = m_star_pq(pq)
    if ms.is_finite:
        return min(ms.value, SINH_ARG_CAP)
    return SINH_ARG_CAP


# name -> (inner argument names, scale resolver, point evaluator)
_POINT_CHECKS: dict[str, tuple[tuple[str, ...], Callable, Callable]] = {
    "lemma21": (
        ("x",),
        lambda pq: 1.0,
        lambda pq, args, order, tol: lemma21_margin(pq, args[0], tol),
    ),
    "lemma22": (
        ("x",),
        lambda pq: 10.0,
        lambda pq, args, order, tol: lemma22_margin(pq, args[0], tol),
    ),
    "lemma23": (
        (),
        lambda pq: 1.0,
        lambda pq, args, order, tol: lemma23_check(pq, tol),
    ),
    "thm11-sin": (
        ("r", "s"),
        half_pi_pq,
        lambda pq, args, order, tol: thm11_sin_margin(pq, args[0], args[1], tol),
    ),
    "thm11-sinh": (
        ("r", "s"),
        _cap_sinh_args,
        lambda pq, args, order, tol: thm11_sinh_margin(pq, args[0], args[1], tol),
    ),
    "gm-sin": (
        ("r", "s"),
        half_pi_pq,
        lambda pq, args, order, tol: gm_general_sin_margin(pq, order, args[0], args[1], tol),
    ),
    "gm-sinh": (
        ("r", "s"),
        _cap_sinh_args,
        lambda pq, args, order, tol: gm_general_sinh_margin(pq, order, args[0], args[1], tol),
    ),
    "double-angle": (
        ("x",),
        lambda pq: 0.5 * half_pi_pq(pq),
        lambda pq, args, order, tol: double_angle_margin(pq, args[0], tol),
    ),
}

_PROBE_CHECKS = {"f-monotone", "fstar-monotone"}

CHECK_NAMES = tuple(sorted(_POINT_CHECKS)) + tuple(sorted(_PROBE_CHECKS))


def run_sweep(
    check: str,
    axes: Sequence[GridAxis],
    *,
    order: Union[HolderOrder, float, None] = None,
    tolerance: Optional[float] = None,
    threads: int = 0,
    x_max: float = 50.0,
) -> SweepReport:
    """Evaluate a named check over the grid spanned by ``axes``.

    ``axes`` starts with the p and q axes followed by the check's inner
    argument axes expressed as domain fractions (see :class:`GridAxis`).
    Points are evaluated in row-major grid order; with ``threads > 1``
    they are computed concurrently but merged back deterministically by
    index.  Per-point failures are recorded in the report rather than
    raised.
    """
    axes = tuple(axes)
    if not axes:
        raise DomainError("axes must be nonempty")
    ordv: Optional[float]
    if order is None:
        ordv = None
    else:
        ordv = order.order if isinstance(order, HolderOrder) else float(order)

    if check in _PROBE_CHECKS:
        return _run_probe_sweep(check, axes, ordv, threads, x_max)
    if check not in _POINT_CHECKS:
        raise DomainError(f"unknown check {check!r}; expected one of {', '.join(CHECK_NAMES)}")
    arg_names, scale_of, evaluate = _POINT_CHECKS[check]
    if len(axes) != 2 + len(arg_names):
        raise DomainError(
            f"{check} expects axes (p, q{''.join(', ' + a for a in arg_names)}), "
            f"got {len(axes)}"
        )
    if axes[0].name != "p" or axes[1].name != "q":
        raise DomainError("the first two axes must be named p and q")
    for ax in axes[2:]:
        if not (0.0 < ax.lo and ax.hi <= 1.0):
            raise DomainError(f"inner axis {ax.name!r} must use fractions in (0, 1]")
    if check in ("gm-sin", "gm-sinh") and ordv is None:
        raise DomainError(f"{check} requires a Hölder order")

    frac_grids = [ax.values() for ax in axes[2:]]
    points: list[dict[str, float]] = []
    for p in axes[0].values():
        for q in axes[1].values():
            pq = PQParams(p, q)
            scale = scale_of(pq)
            combos: list[tuple[float, ...]] = [()]
            for fg in frac_grids:
                combos = [c + (f * scale,) for c in combos for f in fg]
            for combo in combos:
                pt = {"p": p, "q": q}
                pt.update(zip(arg_names, combo))
                points.append(pt)

    report = SweepReport(check=check, order=ordv, grid=axes)

    def eval_point(pt: dict[str, float]):
        pq = PQParams(pt["p"], pt["q"])
        args = tuple(pt[a] for a in arg_names)
        return evaluate(pq, args, ordv, tolerance)

    _run_points(report, points, eval_point, threads)
    return report


def _run_probe_sweep(check, axes, ordv, threads, x_max) -> SweepReport:
    if ordv is None:
        raise DomainError(f"{check} requires a Hölder order")
    if axes[0].name != "p" or axes[1].name != "q":
        raise DomainError("the first two axes must be named p and q")
    if len(axes) != 3:
        raise DomainError(f"{check} expects axes (p, q, x)")
    grid_n = axes[2].n
    report = SweepReport(check=check, order=ordv, grid=axes)
    for p in axes[0].values():
        for q in axes[1].values():
            pq = PQParams(p, q)
            try:
                if check == "f-monotone":
                    sub = F_monotonicity_probe(pq, ordv, grid_n)
                else:
                    sub = Fstar_monotonicity_probe(pq, ordv, grid_n, x_max)
            except PQTrigError as exc:
                report.errors.append(
                    SweepError(len(report.verdicts), {"p": p, "q": q}, str(exc))
                )
                continue
            report.verdicts.extend(sub.verdicts)
    return report


def _run_points(report, points, eval_point, threads):
    def safe(indexed):
        idx, pt = indexed
        try:
            return idx, eval_point(pt), None
        except Exception as exc:  # recorded, not fatal
            return idx, None, f"{type(exc).__name__}: {exc}"

    indexed = list(enumerate(points))
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(safe, indexed))
    else:
        results = [safe(ip) for ip in indexed]
    for idx, verdict, err in results:
        if err is not None:
            report.errors.append(SweepError(idx, points[idx], err))
        else:
            report.verdicts.append(verdict)
