"""Scalar numeric kernels: incomplete gamma family and q-expansion sums.

Everything here is written as plain scalar loops so the same source runs
either JIT-compiled (numba backend) or as ordinary Python (numpy backend);
see :mod:`lperiods.backend`.  Vectorized numpy variants of the array-shaped
kernels are provided for the fallback path.
"""

import cmath
import math

import numpy as np

from .backend import maybe_njit

_EPS = 1.0e-16
_FPMIN = 1.0e-300
_ITMAX = 600

# Lanczos coefficients, g = 7, n = 9 (double precision standard set).
_LANCZOS_G = 7.0
_LANCZOS = np.array(
    [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ]
)


@maybe_njit
def gamma_complex(s):
    """Gamma function for complex argument (Lanczos + reflection)."""
    if s.real < 0.5:
        # reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
        z = 1.0 - s
        refl = True
    else:
        z = s
        refl = False
    z = z - 1.0
    x = _LANCZOS[0] + 0j
    for i in range(1, 9):
        x = x + _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    y = math.sqrt(2.0 * math.pi) * cmath.exp((z + 0.5) * cmath.log(t) - t) * x
    if refl:
        y = math.pi / (cmath.sin(math.pi * s) * y)
    return y


@maybe_njit
def _upper_gamma_cf_real(s, x):
    """Continued fraction for Gamma(s, x), valid for x >= s + 1, x > 0."""
    b = x + 1.0 - s
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _ITMAX):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delt = d * c
        h *= delt
        if abs(delt - 1.0) < _EPS:
            break
    return math.exp(-x + s * math.log(x)) * h


@maybe_njit
def _lower_gamma_series_real(s, x):
    """Series for the lower incomplete gamma(s, x); s > 0, 0 <= x < s + 1."""
    if x <= 0.0:
        return 0.0
    ap = s
    ssum = 1.0 / s
    delt = ssum
    for _ in range(_ITMAX):
        ap += 1.0
        delt *= x / ap
        ssum += delt
        if abs(delt) < abs(ssum) * _EPS:
            break
    return ssum * math.exp(-x + s * math.log(x))


@maybe_njit
def _upper_gamma_pos_real(s, x):
    """Gamma(s, x) for s > 0, x >= 0: series / continued fraction switch."""
    if x == 0.0:
        return math.gamma(s)
    if x < s + 1.0:
        return math.gamma(s) - _lower_gamma_series_real(s, x)
    return _upper_gamma_cf_real(s, x)


@maybe_njit
def upper_gamma_real(s, x):
    """Gamma(s, x) for real s (any sign) and x >= 0 (x > 0 when s <= 0).

    Series below the switch point x = s + 1, Lentz continued fraction above,
    downward recurrence Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x})/s for s <= 0.
    """
    if s > 0.0:
        return _upper_gamma_pos_real(s, x)
    # s <= 0: x > 0 required by callers.
    if x >= s + 1.0 and x >= 1.0:
        return _upper_gamma_cf_real(s, x)
    m = int(math.ceil(-s)) + 1
    g = _upper_gamma_pos_real(s + m, x)
    j = m - 1
    while j >= 0:
        sj = s + j
        g = (g - math.exp(-x + sj * math.log(x))) / sj
        j -= 1
    return g


@maybe_njit
def _upper_gamma_cf_complex(s, x):
    """Lentz continued fraction for Gamma(s, x), complex order, x > 0."""
    b = x + 1.0 - s
    c = 1.0 / _FPMIN + 0j
    d = 1.0 / b
    h = d
    for i in range(1, _ITMAX):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN + 0j
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN + 0j
        d = 1.0 / d
        delt = d * c
        h *= delt
        if abs(delt - 1.0) < _EPS:
            break
    return cmath.exp(-x + s * math.log(x)) * h


@maybe_njit
def _upper_gamma_series_complex(s, x):
    """Gamma(s) - lower gamma series; complex order with Re(s) > 0."""
    ap = s
    ssum = 1.0 / s
    delt = ssum
    for _ in range(_ITMAX):
        ap += 1.0
        delt *= x / ap
        ssum += delt
        if abs(delt) < abs(ssum) * _EPS:
            break
    return gamma_complex(s) - ssum * cmath.exp(-x + s * math.log(x))


@maybe_njit
def upper_gamma_complex_order(s, x):
    """Gamma(s, x) for complex order s and real x > 0."""
    if x >= s.real + 1.0 and x >= 0.5:
        return _upper_gamma_cf_complex(s, x)
    if s.real <= 0.0:
        m = int(math.ceil(-s.real)) + 1
        sm = s + m
        if x >= sm.real + 1.0 and x >= 0.5:
            g = _upper_gamma_cf_complex(sm, x)
        else:
            g = _upper_gamma_series_complex(sm, x)
        j = m - 1
        while j >= 0:
            sj = s + j
            g = (g - cmath.exp(-x + sj * math.log(x))) / sj
            j -= 1
        return g
    return _upper_gamma_series_complex(s, x)


@maybe_njit
def exp_scaled_upper_half(w):
    """e^w Gamma(1/2, w) for complex w with Re(w) > 0, principal branch.

    The scaled form stays finite for large |w| (the raw value underflows).
    """
    if abs(w) < 2.5:
        # e^w Gamma(1/2) - w^{1/2} * sum_n w^n / ((1/2)(3/2)...(1/2+n))
        ssum = 2.0 + 0j  # n = 0 term: 1/(1/2)
        term = 2.0 + 0j
        ap = 0.5
        for _ in range(_ITMAX):
            ap += 1.0
            term *= w / ap
            ssum += term
            if abs(term) < abs(ssum) * _EPS:
                break
        return cmath.exp(w) * math.sqrt(math.pi) - cmath.sqrt(w) * ssum
    # continued fraction for e^w Gamma(1/2, w) = w^{1/2} * h(w)
    s = 0.5
    b = w + 1.0 - s
    c = 1.0 / _FPMIN + 0j
    d = 1.0 / b
    h = d
    for i in range(1, _ITMAX):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN + 0j
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN + 0j
        d = 1.0 / d
        delt = d * c
        h *= delt
        if abs(delt - 1.0) < _EPS:
            break
    return cmath.sqrt(w) * h


@maybe_njit
def qexp_eval(coeffs, z, omega):
    """sum_{n>=1} a_n e^{i omega n z} by Horner in q = e^{i omega z}."""
    q = cmath.exp(1j * omega * z)
    acc = 0j
    for n in range(len(coeffs) - 1, -1, -1):
        acc = acc * q + coeffs[n]
    return acc * q


def qexp_eval_numpy(coeffs, z, omega):
    """Vectorized fallback for :func:`qexp_eval`."""
    n = np.arange(1, len(coeffs) + 1)
    return complex(np.dot(coeffs, np.exp(1j * omega * z * n)))


@maybe_njit
def lambda_partial_real(coeffs, w, lam, t0):
    """sum_n a_n (lam/(2 pi n))^w Gamma(w, 2 pi n t0 / lam) for real w."""
    tot = 0j
    for idx in range(len(coeffs)):
        n = idx + 1
        base = lam / (2.0 * math.pi * n)
        x = 2.0 * math.pi * n * t0 / lam
        tot += coeffs[idx] * math.exp(w * math.log(base)) * upper_gamma_real(w, x)
    return tot


@maybe_njit
def lambda_partial_complex(coeffs, w, lam, t0):
    """Complex-order variant of :func:`lambda_partial_real`."""
    tot = 0j
    for idx in range(len(coeffs)):
        n = idx + 1
        base = lam / (2.0 * math.pi * n)
        x = 2.0 * math.pi * n * t0 / lam
        tot += coeffs[idx] * cmath.exp(w * math.log(base)) * upper_gamma_complex_order(w, x)
    return tot


@maybe_njit
def kr_partial_sum(coeffs, z, km1):
    """sum_n a_n n^{1-k} (e^{w_n} Gamma(1/2, w_n) - w_n^{-1/2}), w_n = -2 pi i n z.

    km1 is k - 1.  Requires Im(z) > 0 so that Re(w_n) > 0.
    """
    tot = 0j
    for idx in range(len(coeffs)):
        n = idx + 1
        w = -2j * math.pi * n * z
        term = exp_scaled_upper_half(w) - 1.0 / cmath.sqrt(w)
        tot += coeffs[idx] * math.exp(-km1 * math.log(n)) * term
    return tot / math.sqrt(math.pi)
