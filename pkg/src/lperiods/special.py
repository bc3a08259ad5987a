"""Gamma-family special functions and quadrature primitives.

All powers use the principal branch (-pi < arg z <= pi).  Values are double
precision; tolerances assume ~15 significant digits.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional

from . import kernels
from .errors import AccuracyError, DomainError


@dataclass(frozen=True)
class Precision:
    """Accuracy budget shared by the numeric routines."""

    target_abs_tol: float = 1.0e-11
    target_rel_tol: float = 1.0e-13
    max_terms: int = 256
    max_quad_depth: int = 48

    def __post_init__(self):
        if self.target_abs_tol <= 0 or self.target_rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")


DEFAULT_PRECISION = Precision()


def gamma_real(x: float) -> float:
    """Gamma(x) for real x > 0."""
    if x <= 0:
        raise DomainError(f"gamma_real requires x > 0, got {x}")
    return math.gamma(x)


def binom_general(z: float, w: float) -> float:
    """Generalized binomial Gamma(z+1) / (Gamma(w+1) Gamma(z-w+1)).

    Restricted to the positive-parameter region where it occurs here.
    """
    a, b, c = z + 1.0, w + 1.0, z - w + 1.0
    if a <= 0 or b <= 0 or c <= 0:
        raise DomainError(f"binom_general pole/branch at z={z}, w={w}")
    return math.exp(math.lgamma(a) - math.lgamma(b) - math.lgamma(c))


def incomplete_gamma_upper(s: float, x: float) -> float:
    """Upper incomplete gamma Gamma(s, x) for real s, x >= 0."""
    if x < 0:
        raise DomainError(f"incomplete_gamma_upper requires x >= 0, got {x}")
    if x == 0 and s <= 0:
        raise DomainError("Gamma(s, 0) diverges for s <= 0")
    return kernels.upper_gamma_real(float(s), float(x))


def incomplete_gamma_half_complex(w: complex) -> complex:
    """Gamma(1/2, w) for complex w with Re(w) > 0, principal branch."""
    w = complex(w)
    if w.real <= 0:
        raise DomainError(f"incomplete_gamma_half_complex requires Re(w) > 0, got {w}")
    return cmath.exp(-w) * kernels.exp_scaled_upper_half(w)


def ipow(t) -> complex:
    """i^t = e^{i pi t / 2}, exact at integers; t may be int, Fraction or float."""
    if isinstance(t, (int, Fraction)) and (t == int(t)):
        return (1.0, 1.0j, -1.0, -1.0j)[int(t) % 4]
    if isinstance(t, float) and t == int(t):
        return (1.0, 1.0j, -1.0, -1.0j)[int(t) % 4]
    return cmath.exp(0.5j * math.pi * float(t))


class QuadResult(NamedTuple):
    """Value of an integral together with an estimated absolute error."""

    value: complex
    abs_err: float


def _simpson(fn, a, fa, b, fb, m, fm, whole, tol, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = fn(lm)
    frm = fn(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    err = (left + right - whole) / 15.0
    if abs(err) <= tol or depth <= 0:
        return left + right + err, abs(err), depth > 0
    lv, le, lok = _simpson(fn, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
    rv, re, rok = _simpson(fn, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1)
    return lv + rv, le + re, lok and rok


def integrate_interval(fn: Callable[[float], complex], a: float, b: float,
                       precision: Precision = DEFAULT_PRECISION) -> QuadResult:
    """Adaptive Simpson integral of a complex-valued fn over [a, b]."""
    if b <= a:
        return QuadResult(0j, 0.0)
    npanel = 8
    h = (b - a) / npanel
    total = 0j
    total_err = 0.0
    converged = True
    tol = precision.target_abs_tol / npanel
    for i in range(npanel):
        x0 = a + i * h
        x1 = x0 + h
        xm = 0.5 * (x0 + x1)
        f0, f1, fm = fn(x0), fn(x1), fn(xm)
        whole = h / 6.0 * (f0 + 4.0 * fm + f1)
        v, e, ok = _simpson(fn, x0, f0, x1, f1, xm, fm, whole, tol, precision.max_quad_depth)
        total += v
        total_err += e
        converged = converged and ok
    if not converged:
        raise AccuracyError("adaptive quadrature did not converge within max_quad_depth",
                            best_estimate=total, abs_err=total_err)
    return QuadResult(total, total_err)


def integrate_vertical(fn: Callable[[float], complex], t0: float,
                       precision: Precision = DEFAULT_PRECISION,
                       upper: Optional[float] = None) -> QuadResult:
    """Integral of fn over [t0, upper) where fn decays at least exponentially.

    With upper=None the truncation height is found by scanning the decay of
    fn and the discarded tail is folded into the reported error bound.
    """
    if upper is not None:
        return integrate_interval(fn, t0, upper, precision)
    cut = 0.05 * precision.target_abs_tol
    height = 1.0
    tail = math.inf
    for _ in range(64):
        t_top = t0 + height
        m0 = abs(fn(t_top))
        m1 = abs(fn(t_top - 0.5))
        if m0 == 0.0:
            tail = 0.0
            break
        rate = 2.0 * math.log(m1 / m0) if (m1 > m0 > 0.0) else 0.0
        tail = m0 / rate if rate > 0 else math.inf
        if tail < cut:
            break
        height *= 1.6
    else:
        raise AccuracyError("integrand does not decay fast enough to truncate",
                            best_estimate=None, abs_err=tail)
    if tail is math.inf:
        raise AccuracyError("integrand does not decay fast enough to truncate",
                            best_estimate=None, abs_err=tail)
    res = integrate_interval(fn, t0, t0 + height, precision)
    return QuadResult(res.value, res.abs_err + tail)
