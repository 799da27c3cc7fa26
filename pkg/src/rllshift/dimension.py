"""Dimension formulas for frequency sets of the constrained shift space.

f_m carries digit-0 frequency of the invariant measure as a function of
the branching parameter; q_m inverts it at a target frequency p; the
lower bound approaches the binary entropy h(p) as m grows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .words import count_words

LOG2 = math.log(2.0)


@dataclass(frozen=True)
class DimensionProfile:
    m: int
    p: float
    q: float | None
    lower_bound: float | None
    entropy: float
    topo_dim: float


def _check_open_unit(x: float, name: str) -> None:
    if not 0.0 < x < 1.0:
        raise ValueError(f"{name} must lie in (0,1), got {x}")


def _denominator(m: int, x: float) -> float:
    # 1 - x^m - (1-x)^m, with (1-x)^m via expm1/log1p to survive tiny x
    return -math.expm1(m * math.log1p(-x)) - x**m


def f_m(m: int, x: float) -> float:
    """(x - x^m) / (1 - x^m - (1-x)^m); limits 1/m and 1-1/m at the ends."""
    if m < 3:
        raise ValueError(f"order must be >= 3, got {m}")
    _check_open_unit(x, "x")
    return (x - x**m) / _denominator(m, x)


def g_m(m: int, x: float) -> float:
    """(x^m(1-x) - x(1-x)^m) / (1 - x^m - (1-x)^m); equals x - f_m(x)."""
    if m < 3:
        raise ValueError(f"order must be >= 3, got {m}")
    _check_open_unit(x, "x")
    y = 1.0 - x
    return (x**m * y - x * math.exp(m * math.log(y))) / _denominator(m, x)


def solve_qm(m: int, p: float, tol: float = 1e-12) -> float:
    """Root of f_m(q) = p by bisection on [1e-9, 1-1e-9].

    Requires the standing assumption 1/m < p < 1 - 1/m; the bracket ends
    evaluate below/above p since f_m tends to 1/m and 1-1/m there.
    """
    if tol <= 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    if not 1.0 / m < p < 1.0 - 1.0 / m:
        raise ValueError(f"p must lie in (1/{m}, 1-1/{m}), got {p}")
    lo, hi = 1e-9, 1.0 - 1e-9
    flo, fhi = f_m(m, lo) - p, f_m(m, hi) - p
    if flo > 0 or fhi < 0:
        raise ArithmeticError(f"no sign change on bracket for m={m}, p={p}")
    mid = 0.5 * (lo + hi)
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:  # bracket down to one ulp
            break
        fmid = f_m(m, mid) - p
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (fhi > 0):
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    if abs(f_m(m, mid) - p) > tol:
        raise ArithmeticError(f"bisection stalled outside tol for m={m}, p={p}")
    return mid


def lower_bound(m: int, p: float, q: float) -> float:
    """(-(mp-1) log q - (m-mp-1) log(1-q)) / ((m-1) log 2)."""
    _check_open_unit(q, "q")
    if not 1.0 / m < p < 1.0 - 1.0 / m:
        raise ValueError(f"p must lie in (1/{m}, 1-1/{m}), got {p}")
    num = -(m * p - 1.0) * math.log(q) - (m - m * p - 1.0) * math.log1p(-q)
    return num / ((m - 1) * LOG2)


def entropy_binary(p: float) -> float:
    """Binary entropy h(p) in bits, with the 0 log 0 := 0 convention."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0,1], got {p}")
    if p in (0.0, 1.0):
        return 0.0
    return (-p * math.log(p) - (1.0 - p) * math.log1p(-p)) / LOG2


def growth_root(m: int, tol: float = 1e-14) -> float:
    """Positive root of x^{m-1} = x^{m-2} + ... + x + 1, in (1, 2)."""
    if m < 3:
        raise ValueError(f"order must be >= 3, got {m}")

    def h(x: float) -> float:
        return x ** (m - 1) - sum(x**i for i in range(m - 1))

    lo, hi = 1.0, 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if h(mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def topo_dim(m: int) -> float:
    """Dimension of the full constrained set: log(growth rate) / log 2."""
    return math.log(growth_root(m)) / LOG2


def empirical_growth(m: int, n: int = 30) -> float:
    """count ratio |words of n+1| / |words of n|; cross-check for growth_root."""
    return count_words(m, n + 1) / count_words(m, n)


def profile(m: int, p: float) -> DimensionProfile:
    """Assembled profile; q and the bound exist only for 1/m < p < 1-1/m."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0,1], got {p}")
    q = bound = None
    if 1.0 / m < p < 1.0 - 1.0 / m:
        q = solve_qm(m, p)
        bound = lower_bound(m, p, q)
    return DimensionProfile(m, p, q, bound, entropy_binary(p), topo_dim(m))
