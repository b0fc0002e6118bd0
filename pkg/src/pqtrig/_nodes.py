"""Lazy tanh-sinh node tables shared by the pure-Python integrators.

The substitution u = tanh((pi/2) sinh(tau)) maps (-1, 1) to the real line.
Node quantities depend only on tau, so they are tabulated once per
refinement level and reused by every integral.

Each node record is a tuple

    (omu, w, ln_half_omu, ln_one_minus_half_omu, tau)

where ``omu = 1 - u`` is computed without cancellation (this is what makes
abscissae meaningful exponentially close to an endpoint), ``w`` is the
du/dtau weight, and the two logarithms are ln(omu/2) and ln(1 - omu/2),
both evaluated stably.  Level 0 holds tau = 1, 2, 3, ...; level m >= 1
holds the new points tau = k * 2**-m for odd k.  The tau = 0 centre node
is handled explicitly by the integrators (omu = 1, w = pi/2).
"""

import math
import threading

_PI_HALF = math.pi / 2.0

# Past this point the weight underflows to zero in double precision.
TAU_MAX = 6.9

_tables: dict[int, list[tuple[float, float, float, float, float]]] = {}
_lock = threading.Lock()


def _node(tau: float):
    s = _PI_HALF * math.sinh(tau)
    if 2.0 * s > 1400.0:
        return None
    e2 = math.exp(-2.0 * s)
    omu = 2.0 * e2 / (1.0 + e2)
    w = _PI_HALF * math.cosh(tau) * (4.0 * e2 / ((1.0 + e2) * (1.0 + e2)))
    if w == 0.0 or omu == 0.0:
        return None
    ln_half_omu = -2.0 * s - math.log1p(e2)
    ln_1m_half_omu = math.log1p(-0.5 * omu)
    return (omu, w, ln_half_omu, ln_1m_half_omu, tau)


def _build(level: int):
    nodes = []
    if level == 0:
        h, k, step = 1.0, 1, 1
    else:
        h, k, step = 2.0 ** (-level), 1, 2
    while k * h <= TAU_MAX:
        rec = _node(k * h)
        if rec is None:
            break
        nodes.append(rec)
        k += step
    return nodes


def level_nodes(level: int):
    """Node records for one refinement level (built on first use)."""
    table = _tables.get(level)
    if table is None:
        with _lock:
            table = _tables.get(level)
            if table is None:
                table = _build(level)
                _tables[level] = table
    return table
