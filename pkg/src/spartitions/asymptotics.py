"""The log-count asymptotics: sawtooth remainder, analytic constants,
Fourier oscillation, and the assembled estimate.

For part sequences whose counting function is logarithmic,
N(u) = a ln u + b + R(u), the number P_h(u) of solutions of
r1*l1 + r2*l2 + ... < u satisfies

    ln P_h(u) = a/2 (ln u - lnln u - ln a)^2 + (a - 1/2) ln u
                + (b - 1/2)(ln u - lnln u - ln a)
                + W(ln u - lnln u - ln a) - ln(2 pi)/2 + H + o(1),

with H = c - b ln l1 - a ln^2(l1)/2 + a * I, where c is the mean of the
integrated remainder, I is a fixed tail integral, and W is a small
periodic oscillation built from Gamma and zeta on the imaginary axis.

Two parameter families are built in: Mersenne parts 2^k - 1 (a = 1/ln2,
b = -1/2, c = (pi^2 + ln^2 2)/(12 ln2) + alpha) and power-of-two parts
(a = 1/ln2, b = +1/2, c = ln2/12).  Both share the period ln 2 and the
Fourier coefficients -ln2 / (4 pi^2 nu^2).
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import AccuracyError, DomainError
from .quadrature import integrate_adaptive
from .specfun import GAMMA_IM_BAND, gamma_complex, zeta_complex

__all__ = [
    "AsymptoticParams",
    "AsymptoticBreakdown",
    "sawtooth_f",
    "remainder_R",
    "sawtooth_log_integral",
    "alpha_constant",
    "c_constant",
    "tail_integral_I",
    "H_constant",
    "sawtooth_log_integral_series",
    "dyadic_fourier_coefficient",
    "w_oscillation",
    "w_oscillation_complex",
    "mersenne_params",
    "binary_partition_params",
    "ln_Ph_estimate",
    "ln_ps_estimate",
]

LN2 = math.log(2.0)
_MIN_TOL = 1e-10


def sawtooth_f(x) -> float:
    """floor(log2 x) - log2 x + 1/2, exact at dyadic points.

    The floor is taken from the binary exponent (frexp), never from a
    rounded logarithm, so f(2^k) = +1/2 exactly.
    """
    if x < 1:
        raise DomainError(f"sawtooth_f needs x >= 1, got {x}")
    _, exponent = math.frexp(x)
    return (exponent - 1) - math.log2(x) + 0.5


def remainder_R(u) -> float:
    """Remainder of the part-counting function after a ln u + b.

    R(u) = ln(1 + 1/u)/ln 2 + f(u + 1); it reconstructs
    floor(log2(u+1)) = ln u/ln2 - 1/2 + R(u) exactly.
    """
    if u < 1:
        raise DomainError(f"remainder_R needs u >= 1, got {u}")
    return math.log1p(1.0 / u) / LN2 + sawtooth_f(u + 1)


def _dyadic_breakpoints(lo: float, hi: float) -> list:
    pts = []
    k = math.ceil(math.log2(lo))
    while 2.0 ** k < hi:
        if 2.0 ** k > lo:
            pts.append(2.0 ** k)
        k += 1
    return pts


def sawtooth_log_integral(u: float, tol: float = 1e-10) -> float:
    """Integral of f(v)/v over [1, u] by quadrature split at powers of 2."""
    if u < 1:
        raise DomainError(f"needs u >= 1, got {u}")
    if u == 1:
        return 0.0
    res = integrate_adaptive(lambda v: sawtooth_f(v) / v, 1.0, float(u),
                             tol=tol, breakpoints=_dyadic_breakpoints(1.0, u))
    return res.value


@lru_cache(maxsize=None)
def alpha_constant(tol: float = 1e-8) -> float:
    """The dyadic sawtooth integral of f(v)/(v(v-1)) from 2 to infinity.

    Integrates slice by slice over [2^k, 2^(k+1)], where floor(log2 v)
    is the constant k and the integrand is smooth, for k = 1..K with the
    analytic tail bound |f| <= 1/2, integral of 1/(v(v-1)) beyond 2^K
    <= 1/(2^K - 1); K is chosen so the bound is under tol/2.
    """
    if tol < _MIN_TOL:
        raise DomainError(f"alpha tolerance floor is {_MIN_TOL:g}, got {tol}")
    K = 2
    while 0.5 / (2.0 ** K - 1.0) >= 0.5 * tol:
        K += 1
    slice_tol = 0.5 * tol / K
    total = 0.0
    for k in range(1, K + 1):
        total += _alpha_slice(k, slice_tol)
    return total


def _alpha_slice(k: int, tol: float) -> float:
    lo, hi = 2.0 ** k, 2.0 ** (k + 1)
    smooth = k + 0.5  # floor(log2 v) + 1/2 on the open slice

    def integrand(v):
        return (smooth - math.log2(v)) / (v * (v - 1.0))

    try:
        return integrate_adaptive(integrand, lo, hi, tol=tol).value
    except AccuracyError as exc:
        raise AccuracyError(f"alpha (dyadic slice k={k}): {exc}",
                            best=exc.best) from exc


def c_constant(tol: float = 1e-8) -> float:
    """(pi^2 + ln^2 2)/(12 ln 2) plus the sawtooth integral constant."""
    closed = (math.pi ** 2 + LN2 ** 2) / (12.0 * LN2)
    return closed + alpha_constant(tol)


def _tail_kernel(v: float) -> float:
    # (ln v - ln(1 - e^-v)) / (e^v - 1); series below 1e-3 avoids the
    # 0/0 at the origin (the limit is 1/2)
    if v < 1e-3:
        return 0.5 - 7.0 * v / 24.0 + v * v / 16.0 - v ** 3 / 320.0
    return -math.log(-math.expm1(-v) / v) / math.expm1(v)


@lru_cache(maxsize=None)
def tail_integral_I(tol: float = 1e-8) -> float:
    """Integral of (ln v - ln(1-e^-v))/(e^v - 1) over (0, infinity).

    The range [T, infinity) is dropped under the analytic bound
    (ln T + 1) e^-T (1 + 2 e^-T) < tol/2; [0, T] goes to quadrature.
    """
    if tol < _MIN_TOL:
        raise DomainError(f"tail tolerance floor is {_MIN_TOL:g}, got {tol}")
    T = 2.0
    while (math.log(T) + 1.0) * math.exp(-T) * (1.0 + 2.0 * math.exp(-T)) >= 0.5 * tol:
        T += 1.0
    pts = [p for p in (1.0, 5.0, 20.0) if p < T]
    try:
        res = integrate_adaptive(_tail_kernel, 0.0, T, tol=0.5 * tol,
                                 breakpoints=pts)
    except AccuracyError as exc:
        raise AccuracyError(f"tail integral: {exc}", best=exc.best) from exc
    return res.value


def H_constant(tol: float = 1e-8) -> float:
    """Additive constant for the Mersenne family: c + I/ln 2.

    Asserts agreement with the general form c - b ln l1 - a ln^2(l1)/2
    + a I, which collapses to the same value because the smallest part
    is 1.
    """
    c = c_constant(tol)
    tail = tail_integral_I(tol)
    direct = c + tail / LN2
    general = _h_from(a=1.0 / LN2, b=-0.5, c=c, lambda1=1.0, tail=tail)
    assert abs(direct - general) <= 1e-12 * max(1.0, abs(direct))
    return direct


def _h_from(a: float, b: float, c: float, lambda1: float, tail: float) -> float:
    lnl1 = math.log(lambda1)
    return c - b * lnl1 - 0.5 * a * lnl1 * lnl1 + a * tail


def dyadic_fourier_coefficient(nu: int) -> float:
    """Fourier coefficient -ln2/(4 pi^2 nu^2) of the dyadic sawtooth mean."""
    if nu == 0:
        return 0.0
    return -LN2 / (4.0 * math.pi ** 2 * nu * nu)


def sawtooth_log_integral_series(u: float, nu_max: int = 10_000) -> float:
    """Fourier form of the integral of f(v)/v over [1, u].

    ln2/12 - sum over nu != 0 of (ln2/(4 pi^2 nu^2)) e^{2 pi i nu log2 u},
    with the +-nu terms paired into cosines.  Truncation error is below
    (ln2 / (2 pi^2)) / nu_max.
    """
    if u < 1:
        raise DomainError(f"needs u >= 1, got {u}")
    if nu_max < 1:
        raise DomainError(f"needs nu_max >= 1, got {nu_max}")
    x = math.log2(u)
    nu = np.arange(1, nu_max + 1, dtype=float)
    cosines = np.cos((2.0 * math.pi * x) * nu) / (nu * nu)
    return LN2 / 12.0 - (LN2 / (2.0 * math.pi ** 2)) * float(np.sum(cosines[::-1]))


@dataclass(frozen=True)
class AsymptoticParams:
    """Inputs of the generic estimate for one part family.

    fourier_c maps nu (nonzero int) to the real Fourier coefficient of
    the periodic remainder mean; nu = 0 is implicitly zero.  The family
    must satisfy sum |c_nu / nu| < infinity, automatic for the built-in
    1/nu^2 coefficients.
    """

    a: float
    b: float
    c: float
    rho: float       # period of the remainder mean in ln u
    lambda1: float   # smallest part
    h: float         # difference step of P_h
    fourier_c: Callable[[int], float]

    def __post_init__(self):
        if not (self.a > 0 and self.rho > 0 and self.lambda1 > 0 and self.h > 0):
            raise DomainError(
                f"need a, rho, lambda1, h > 0, got a={self.a}, rho={self.rho}, "
                f"lambda1={self.lambda1}, h={self.h}"
            )


def mersenne_params(tol: float = 1e-8) -> AsymptoticParams:
    """Parameters of the Mersenne-part family 1, 3, 7, 15, ..."""
    return AsymptoticParams(a=1.0 / LN2, b=-0.5, c=c_constant(tol), rho=LN2,
                            lambda1=1.0, h=1.0, fourier_c=dyadic_fourier_coefficient)


def binary_partition_params(tol: float = 1e-8) -> AsymptoticParams:
    """Parameters of the power-of-two family 1, 2, 4, 8, ...

    Here N(u) = ln u/ln2 + 1/2 + f(u), so b = +1/2 and the integrated
    remainder mean is exactly ln2/12 with the same dyadic Fourier
    coefficients.
    """
    return AsymptoticParams(a=1.0 / LN2, b=0.5, c=LN2 / 12.0, rho=LN2,
                            lambda1=1.0, h=1.0, fourier_c=dyadic_fourier_coefficient)


def w_oscillation_complex(z: float, nu_max: int = 16,
                          rho: float = LN2,
                          fourier_c: Callable[[int], float] = dyadic_fourier_coefficient) -> complex:
    """Paired complex sum of the oscillation before taking the real part.

    - sum over 0 < |nu| <= nu_max of (2 pi nu / rho)^2 Gamma(2 pi i nu/rho)
    zeta(1 + 2 pi i nu/rho) c_nu e^{2 pi i nu z / rho}.  The imaginary
    residue is roundoff only.  Frequencies beyond the Gamma band are
    dropped: |Gamma(it)| < 1e-130 there, far below double noise.
    """
    if nu_max < 1:
        raise DomainError(f"needs nu_max >= 1, got {nu_max}")
    total = 0.0 + 0.0j
    for nu in range(1, nu_max + 1):
        t = 2.0 * math.pi * nu / rho
        if t > GAMMA_IM_BAND:
            break
        factor = -(t * t) * gamma_complex(1j * t) * zeta_complex(1.0 + 1j * t)
        term = factor * fourier_c(nu) * complex(math.cos(t * z), math.sin(t * z))
        conj_term = factor.conjugate() * fourier_c(-nu) * complex(math.cos(t * z), -math.sin(t * z))
        total += term + conj_term
    return total


def w_oscillation(z: float, nu_max: int = 16) -> float:
    """The ln2-periodic oscillation W(z) of the built-in dyadic family."""
    return w_oscillation_complex(z, nu_max).real


@dataclass(frozen=True)
class AsymptoticBreakdown:
    """Term-by-term decomposition of one ln P_h(u) estimate.

    total is the plain left-to-right sum of the six terms ordered by
    decreasing |value| (stable on ties), so totals are reproducible for
    a given platform rounding mode.
    """

    quad_term: float    # a/2 (ln u - lnln u - ln a)^2
    lin_term: float     # (a - 1/2) ln u
    bline_term: float   # (b - 1/2)(ln u - lnln u - ln a)
    w_value: float
    gauss_const: float  # -ln(2 pi)/2
    h_const: float
    total: float


def _assemble(terms: tuple) -> float:
    total = 0.0
    for t in sorted(terms, key=abs, reverse=True):
        total += t
    return total


def ln_Ph_estimate(u: float, params: AsymptoticParams, tol: float = 1e-8,
                   nu_max: int = 16) -> AsymptoticBreakdown:
    """Assemble the generic ln P_h(u) estimate for u > e."""
    u = float(u)
    if not u > math.e:
        raise DomainError(f"estimate needs u > e, got {u}")
    a, b = params.a, params.b
    arg = math.log(u) - math.log(math.log(u)) - math.log(a)
    quad_term = 0.5 * a * arg * arg
    lin_term = (a - 0.5) * math.log(u)
    bline_term = (b - 0.5) * arg
    w_value = w_oscillation_complex(arg, nu_max, params.rho, params.fourier_c).real
    gauss_const = -0.5 * math.log(2.0 * math.pi)
    h_const = _h_from(a, b, params.c, params.lambda1, tail_integral_I(tol))
    terms = (quad_term, lin_term, bline_term, w_value, gauss_const, h_const)
    return AsymptoticBreakdown(*terms, total=_assemble(terms))


def ln_ps_estimate(n: int, tol: float = 1e-8, nu_max: int = 16) -> AsymptoticBreakdown:
    """Estimate of ln p_s(n) (Mersenne parts), n >= 2: the generic form
    at u = n + 1.

    The oscillation argument is ln u - lnln u - ln a = ln(n+1)
    - lnln(n+1) + lnln2, the same combination that is squared in the
    leading term.
    """
    if n < 2:
        raise DomainError(f"estimate needs n >= 2, got {n}")
    return ln_Ph_estimate(float(n + 1), mersenne_params(tol), tol, nu_max)
