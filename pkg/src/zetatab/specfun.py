"""Complex special functions and classical constants.

Every closed form in the identity registry is built from the routines in
this module: the Hurwitz and Riemann zeta functions (with analytic
continuation), the zeta derivative, log-gamma, gamma, digamma, a handful of
constants, and the two branch-sensitive elementary pieces ``log_pow`` and
``log_log`` used by the integrands.

All functions are pure.  Complex values are plain Python ``complex``; the
two elementary pieces also accept numpy arrays so that quadrature can
evaluate integrands on whole node vectors at once.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from .errors import ConvergenceError, DomainError, NumericalOverflow, PoleError

CNum = complex
Number = Union[int, float, complex]

TWO_PI = 2.0 * math.pi
_LOG_TWO_PI = math.log(TWO_PI)
_HALF_LOG_TWO_PI = 0.5 * _LOG_TWO_PI
_EPS = 2.0**-52
_FOURIER_MAX_IMAG = 0.5
# from this order on the Fourier series is summed directly for real q
_DIRECT_FOURIER_MIN_ORDER = 12.0


def _bernoulli_fractions(nmax: int) -> list[Fraction]:
    # Akiyama-Tanigawa; yields B_1 = +1/2, irrelevant since only even indices are used.
    row = [Fraction(0)] * (nmax + 1)
    out = []
    for m in range(nmax + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out


_B = _bernoulli_fractions(60)
#: B_{2j} for j = 0..30, as doubles rounded from the exact rationals.
BERNOULLI_EVEN = tuple(float(_B[2 * j]) for j in range(31))
# B_{2j} / (2j)!, the Euler-Maclaurin tail coefficients.
_EM_COEF = tuple(float(_B[2 * j] / math.factorial(2 * j)) for j in range(31))
# B_{2j} / (2j (2j-1)), Stirling series coefficients.
_STIRLING_COEF = tuple(
    float(_B[2 * j] / (2 * j * (2 * j - 1))) if j else 0.0 for j in range(31)
)
del _B


@dataclass(frozen=True)
class SpecFunConfig:
    """Tuning knobs for the Euler-Maclaurin zeta evaluations.

    Parameters
    ----------
    em_shift_terms : int
        Length N of the direct sum before the asymptotic tail (>= 8).
    em_bernoulli_terms : int
        Number M of Bernoulli correction terms, in [4, 30].
    target_abs_tol : float
        Largest acceptable magnitude of the last retained tail term, relative
        to ``max(1, |result|)``; larger tails raise ConvergenceError.
    """

    em_shift_terms: int = 32
    em_bernoulli_terms: int = 12
    target_abs_tol: float = 1e-13

    def __post_init__(self):
        if int(self.em_shift_terms) != self.em_shift_terms or self.em_shift_terms < 8:
            raise ValueError("em_shift_terms must be an integer >= 8")
        if not 4 <= self.em_bernoulli_terms <= 30:
            raise ValueError("em_bernoulli_terms must lie in [4, 30]")
        if not self.target_abs_tol > 0:
            raise ValueError("target_abs_tol must be positive")


DEFAULT_CONFIG = SpecFunConfig()


# ---------------------------------------------------------------------------
# small helpers


def _finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NumericalOverflow(f"{what} is not finite: {z!r}")
    return z


def _csum(values) -> complex:
    values = list(values)
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def _sinpi(z: complex) -> complex:
    """sin(pi z) with exact zeros at integers and reduced real part."""
    x = math.fmod(z.real, 2.0)
    if z.imag == 0 and x == math.floor(x):
        return 0j
    return cmath.sin(math.pi * complex(x, z.imag))


def _cospi(z: complex) -> complex:
    x = math.fmod(z.real, 2.0)
    if z.imag == 0 and (x - 0.5) == math.floor(x - 0.5):
        return 0j
    return cmath.cos(math.pi * complex(x, z.imag))


def _cotpi(z: complex) -> complex:
    w = complex(z.real - math.floor(z.real), z.imag)
    # exponential form with |e| <= 1 stays accurate for any Im(z)
    if z.imag >= 0:
        e = cmath.exp(2j * math.pi * w)
        return 1j * (e + 1) / (e - 1)
    e = cmath.exp(-2j * math.pi * w)
    return 1j * (1 + e) / (1 - e)


# ---------------------------------------------------------------------------
# gamma family


def log_gamma(z: Number) -> CNum:
    """Principal-branch log-gamma.

    Uses the Stirling series after shifting the argument to Re > 10 with the
    recurrence; the shift subtracts a sum of principal logarithms, which gives
    the standard continuous branch (cut along the negative real axis).
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"log_gamma has a pole at {z.real:g}")
    n = 0 if z.real >= 10 else int(math.ceil(10 - z.real))
    w = z + n
    inv = 1.0 / w
    inv2 = inv * inv
    terms = [(w - 0.5) * cmath.log(w), -w, complex(_HALF_LOG_TWO_PI)]
    p = inv
    for j in range(1, 13):
        terms.append(_STIRLING_COEF[j] * p)
        p *= inv2
    terms.extend(-cmath.log(z + i) for i in range(n))
    return _finite(_csum(terms), "log_gamma")


def gamma(z: Number) -> CNum:
    """Gamma function; reflection for Re(z) < 1/2, exp(log_gamma) otherwise."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        lg1 = log_gamma(1 - z)
        s = _sinpi(z)
        if lg1.real < 700.0:
            return _finite(math.pi / (s * cmath.exp(lg1)), "gamma")
        # Gamma(1 - z) alone would overflow; the quotient may still be fine
        return _finite(cmath.exp(math.log(math.pi) - cmath.log(s) - lg1), "gamma")
    lg = log_gamma(z)
    if lg.real > 709.0:
        raise NumericalOverflow(f"gamma({z!r}) overflows")
    return _finite(cmath.exp(lg), "gamma")


def digamma(z: Number) -> CNum:
    """psi(z): recurrence up to Re > 10, then the asymptotic series.

    Arguments with Re(z) < 1/2 go through the reflection formula first.
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"digamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return _finite(digamma(1 - z) - math.pi * _cotpi(z), "digamma")
    n = 0 if z.real > 10 else int(math.floor(10 - z.real)) + 1
    w = z + n
    inv2 = 1.0 / (w * w)
    terms = [cmath.log(w), -0.5 / w]
    p = inv2
    for j in range(1, 13):
        terms.append(-BERNOULLI_EVEN[j] / (2 * j) * p)
        p *= inv2
    terms.extend(-1.0 / (z + i) for i in range(n))
    return _finite(_csum(terms), "digamma")


# ---------------------------------------------------------------------------
# zeta family


def _em_shift(s: complex, q: complex, cfg: SpecFunConfig) -> int:
    """Direct-sum length for the Euler-Maclaurin evaluation.

    For Re(s) >= 0 this is the configured N.  For Re(s) < 0 the summands grow
    like (q+n)^(-s) and cancel against the tail, so the shift is reduced to the
    smallest value that still keeps the Bernoulli tail convergent.
    """
    if s.real >= 0:
        return cfg.em_shift_terms
    need = (abs(s) + 2 * cfg.em_bernoulli_terms) / math.pi - q.real
    return max(0, min(cfg.em_shift_terms, int(math.ceil(need))))


def _em_hurwitz(s: complex, q: complex, n_shift: int, n_bern: int, tol: float,
                derivative: bool = False, exact: bool = False) -> complex:
    head = []
    for n in range(n_shift):
        lq = cmath.log(q + n)
        t = cmath.exp(-s * lq)
        head.append(-lq * t if derivative else t)
    w = q + n_shift
    lw = cmath.log(w)
    w_s = cmath.exp(-s * lw)  # w^(-s)
    if derivative:
        head.append(-lw * w * w_s / (s - 1) - w * w_s / (s - 1) ** 2)
        head.append(-0.5 * lw * w_s)
    else:
        head.append(w * w_s / (s - 1))
        head.append(0.5 * w_s)
    scale = max(1.0, abs(_csum(head)))

    tail = []
    poch, dpoch = s, complex(1.0)  # (s)_{2j-1} and its s-derivative
    wp = w_s / w  # w^(-s-2j+1)
    inv_w2 = 1.0 / (w * w)
    prev = math.inf
    for j in range(1, n_bern + 1):
        if derivative:
            t = _EM_COEF[j] * (dpoch - lw * poch) * wp
        else:
            t = _EM_COEF[j] * poch * wp
        tail.append(t)
        mag = abs(t)
        if mag == 0.0 and poch == 0 and (not derivative or dpoch == 0):
            break
        # a terminating tail (exact) may shrink, then grow, before it stops
        if not exact:
            if mag <= _EPS * 1e-2 * scale:
                break
            if mag > prev and prev > tol * scale:
                raise ConvergenceError(
                    f"Euler-Maclaurin tail stopped decreasing at term {j} for s={s!r}, q={q!r}"
                )
        prev = mag
        for i in (2 * j - 1, 2 * j):
            dpoch = dpoch * (s + i) + poch
            poch = poch * (s + i)
        wp *= inv_w2
    else:
        if not exact and prev > tol * scale:
            raise ConvergenceError(
                f"Euler-Maclaurin tail not converged after {n_bern} terms for s={s!r}, q={q!r}"
            )
    return _csum(head + tail)


def _zeta_reflected(z: complex, cfg: SpecFunConfig) -> complex:
    """Riemann zeta for Re(z) < 1/2 via the functional equation."""
    if z == 0:
        return complex(-0.5)
    if _is_nonpositive_integer(z) and int(z.real) % 2 == 0:
        return 0j
    one_minus = 1 - z
    mag = cmath.exp((z - 1) * _LOG_TWO_PI + log_gamma(one_minus))
    return 2.0 * mag * _sinpi(z / 2) * _em_hurwitz(
        one_minus, 1 + 0j, cfg.em_shift_terms, cfg.em_bernoulli_terms, cfg.target_abs_tol
    )


def _zeta_any(z: complex, cfg: SpecFunConfig) -> complex:
    if z == 1:
        raise PoleError("zeta has a pole at s = 1")
    if z.real >= 0.5:
        return _em_hurwitz(z, 1 + 0j, cfg.em_shift_terms, cfg.em_bernoulli_terms,
                           cfg.target_abs_tol)
    return _zeta_reflected(z, cfg)


def _periodic_zeta_pair(sigma: complex, t: complex, cfg: SpecFunConfig) -> tuple[complex, complex]:
    """Return (Li_sigma(e^{2 pi i t}), Li_sigma(e^{-2 pi i t})) for |t| <= 1/2.

    Expansion of the polylogarithm around mu = log z = 0; valid for
    |mu| < 2 pi and Re(sigma) > 1.  At integer sigma = N the Gamma term and
    the k = N - 1 term share a pole; their sum is replaced by its limit
    mu^(N-1) / (N-1)! * (H_(N-1) - log(-mu)).
    """
    if t == 0:
        v = _zeta_any(sigma, cfg)
        return v, v
    out = []
    mus = (2j * math.pi * t, -2j * math.pi * t)
    n_int = int(sigma.real) if sigma.imag == 0 and sigma.real == int(sigma.real) else None
    g = None if n_int is not None else gamma(1 - sigma)
    zetas = []
    for mu in mus:
        if n_int is None:
            acc = [g * cmath.exp((sigma - 1) * cmath.log(-mu))]
        else:
            harmonic = math.fsum(1.0 / j for j in range(1, n_int))
            acc = [mu ** (n_int - 1) / math.factorial(n_int - 1) * (harmonic - cmath.log(-mu))]
        mu_pow = complex(1.0)
        small = 0
        k = 0
        while True:
            if k == len(zetas):
                at_pole = n_int is not None and k == n_int - 1
                zetas.append(0j if at_pole else _zeta_any(sigma - k, cfg))
            term = zetas[k] * mu_pow
            acc.append(term)
            total = abs(acc[0]) + abs(term)
            if k > sigma.real + 2 and abs(term) <= _EPS * 1e-2 * max(1.0, total):
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
            k += 1
            if k > 400:
                raise ConvergenceError("polylog expansion did not converge")
            mu_pow *= mu / k
        out.append(_csum(acc))
    return out[0], out[1]


def _fourier_series(sigma: complex, q0: float) -> complex:
    """2 * sum_k cos(pi (sigma/2 - 2 k q0)) / k^sigma for 0 < q0 <= 1.

    Summed directly: for Re(sigma) >= 12 a few dozen terms reach full
    precision, and unlike the polylog expansion no O(1) parts cancel.
    """
    terms = []
    lead = 0.0  # largest term so far; cosine factors may vanish exactly
    # reduce both parts of the cosine argument separately so a small
    # 2 k q0 is not swamped by a large sigma / 2
    half = complex(math.fmod(sigma.real / 2, 2.0), sigma.imag / 2)
    for k in range(1, 200):
        if lead and k ** -sigma.real * math.cosh(0.5 * math.pi * sigma.imag) <= _EPS * 1e-2 * lead:
            break
        t = _cospi(half - math.fmod(2 * k * q0, 2.0)) * cmath.exp(-sigma * math.log(k))
        terms.append(t)
        lead = max(lead, abs(t))
    return 2.0 * _csum(terms)


def _hurwitz_fourier(s: complex, q: complex, cfg: SpecFunConfig) -> complex:
    """Hurwitz zeta for Re(s) < 0 and real q via Hurwitz's formula.

    The argument is first reduced to q0 in (0, 1] with the recurrence, which
    is well conditioned in this half-plane (the summands and the result have
    the same growth).
    """
    shift = math.ceil(q.real) - 1
    q0 = q - shift
    sigma = 1 - s
    pref = cmath.exp(log_gamma(sigma) - sigma * _LOG_TWO_PI)
    if q0.imag == 0 and sigma.real >= _DIRECT_FOURIER_MIN_ORDER:
        base = pref * _fourier_series(sigma, q0.real)
    else:
        t = q0 if q0.real <= 0.5 else q0 - 1.0
        if q0 == 1.0:
            t = 0j
        li_plus, li_minus = _periodic_zeta_pair(sigma, t, cfg)
        rot = cmath.exp(-0.5j * math.pi * sigma)
        base = pref * (rot * li_plus + li_minus / rot)
    if shift == 0:
        return base
    corr = [-cmath.exp(-s * cmath.log(q0 + j)) for j in range(shift)]
    return _csum([base] + corr)


def hurwitz_zeta(s: Number, q: Number, cfg: SpecFunConfig = DEFAULT_CONFIG) -> CNum:
    """Hurwitz zeta function zeta(s, q) for complex s != 1 and Re(q) > 0.

    The workhorse is Euler-Maclaurin summation: a direct sum over n < N,
    then the integral and half-term corrections and a Bernoulli tail.  This
    continues analytically to every s != 1.  At s = 0, -1, ..., -10 the
    tail terminates and the evaluation is exact with no direct sum.  For
    other Re(s) < -1/2 with |Im q| <= 1/2 the direct sum and the tail would
    cancel catastrophically, so Hurwitz's Fourier representation is used
    instead: summed directly for real q once Re(1 - s) >= 12, otherwise via
    the polylogarithm expansion about the unit circle.

    Raises
    ------
    PoleError
        If s == 1.
    DomainError
        If Re(q) <= 0.
    ConvergenceError
        If the Bernoulli tail fails to decrease.
    """
    s = complex(s)
    q = complex(q)
    _finite(s, "s")
    _finite(q, "q")
    if s == 1:
        raise PoleError("hurwitz_zeta has a pole at s = 1")
    if q.real <= 0:
        raise DomainError(f"hurwitz_zeta requires Re(q) > 0, got q={q!r}")

    integer = _is_nonpositive_integer(s)
    if integer and -s.real <= 10:
        # (s)_{2j-1} vanishes from j = 1 - s/2 on, so the tail is a finite sum
        n_bern = int(-s.real) // 2 + 2
        value = _em_hurwitz(s, q, 0, n_bern, cfg.target_abs_tol, exact=True)
    elif s.real < -0.5 and abs(q.imag) <= _FOURIER_MAX_IMAG and (integer or abs(s - round(s.real)) > 1e-8):
        value = _hurwitz_fourier(s, q, cfg)
    elif integer and -s.real <= 56:
        # far from the real axis only the finite tail is available
        n_bern = min(30, int(-s.real) // 2 + 2)
        value = _em_hurwitz(s, q, 0, n_bern, cfg.target_abs_tol, exact=True)
    else:
        value = _em_hurwitz(s, q, _em_shift(s, q, cfg), cfg.em_bernoulli_terms,
                            cfg.target_abs_tol)
    return _finite(value, "hurwitz_zeta")


def riemann_zeta(s: Number, cfg: SpecFunConfig = DEFAULT_CONFIG) -> CNum:
    """Riemann zeta, i.e. ``hurwitz_zeta(s, 1)``."""
    return hurwitz_zeta(s, 1, cfg)


def zeta_derivative(s: Number, cfg: SpecFunConfig = DEFAULT_CONFIG) -> CNum:
    """Derivative of the Riemann zeta function.

    For Re(s) >= -1/2 the Euler-Maclaurin formula is differentiated term by
    term in s.  Further left the derivative of the functional equation is
    used, which only needs zeta and zeta' at 1 - s.
    """
    s = complex(s)
    _finite(s, "s")
    if s == 1:
        raise PoleError("zeta_derivative has a pole at s = 1")
    one = 1 + 0j
    if s.real >= -0.5:
        value = _em_hurwitz(s, one, _em_shift(s, one, cfg), cfg.em_bernoulli_terms,
                            cfg.target_abs_tol, derivative=True)
        return _finite(value, "zeta_derivative")
    r = 1 - s
    args = (r, one, cfg.em_shift_terms, cfg.em_bernoulli_terms, cfg.target_abs_tol)
    z_r = _em_hurwitz(*args)
    dz_r = _em_hurwitz(*args, derivative=True)
    # chi(s) = 2 (2 pi)^(s-1) sin(pi s/2) Gamma(1-s)
    base = 2.0 * cmath.exp((s - 1) * _LOG_TWO_PI + log_gamma(r))
    sin_h, cos_h = _sinpi(s / 2), _cospi(s / 2)
    chi = base * sin_h
    dchi = base * (sin_h * (_LOG_TWO_PI - digamma(r)) + 0.5 * math.pi * cos_h)
    return _finite(dchi * z_r - chi * dz_r, "zeta_derivative")


# ---------------------------------------------------------------------------
# constants


def _euler_gamma() -> float:
    n = 40
    terms = [1.0 / k for k in range(1, n + 1)]
    terms += [-math.log(n), -0.5 / n]
    for j in range(1, 12):
        terms.append(BERNOULLI_EVEN[j] / (2 * j * n ** (2 * j)))
    return math.fsum(terms)


def _catalan() -> float:
    # Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k a_k.
    n = 30
    d = (3 + math.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b, c, acc = -1.0, -d, []
    for k in range(n):
        c = b - c
        acc.append(c / (2 * k + 1) ** 2)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1))
    return math.fsum(acc) / d


@lru_cache(maxsize=None)
def constant(name: str) -> float:
    """Classical constants: ``euler_gamma``, ``catalan``, ``glaisher_log``, ``pi``.

    ``glaisher_log`` is ln A = 1/12 - zeta'(-1).
    """
    if name == "pi":
        return math.pi
    if name == "euler_gamma":
        return _euler_gamma()
    if name == "catalan":
        return _catalan()
    if name == "glaisher_log":
        return 1.0 / 12.0 - zeta_derivative(-1).real
    raise ValueError(f"unknown constant {name!r}")


CONSTANT_NAMES = ("euler_gamma", "catalan", "glaisher_log", "pi")


# ---------------------------------------------------------------------------
# branch-sensitive elementary pieces (vectorised)


def _unit_interval(x, xc):
    x = np.asarray(x, dtype=float)
    if xc is None:
        ok = (x > 0) & (x < 1)
    else:
        xc = np.asarray(xc, dtype=float)
        ok = (x > 0) & (xc > 0) & (x <= 1)
    if not np.all(ok):
        raise DomainError("argument must lie in the open interval (0, 1)")
    return x, xc


def neg_log(x, xc=None):
    """-ln(x) for x in (0,1); ``xc = 1 - x`` keeps accuracy next to x = 1."""
    x, xc = _unit_interval(x, xc)
    if xc is None:
        out = -np.log(x)
    else:
        out = np.where(x > 0.5, -np.log1p(-np.minimum(xc, 0.5)), -np.log(x))
    return out


def _scalar_or_array(values, like):
    if np.ndim(like) == 0:
        return complex(values)
    return values


def log_pow(x, k: Number, xc=None):
    """log(x)**k on the principal branch, for x in (0, 1).

    Since ln x < 0 its principal argument is +pi, so the result is
    |ln x|**k * exp(i pi k).
    """
    ell = neg_log(x, xc)
    k = complex(k)
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.exp(k * (np.log(ell) + 1j * math.pi))
    if not np.all(np.isfinite(out)):
        raise NumericalOverflow("log_pow result is not finite")
    return _scalar_or_array(out, x)


def log_log(x, xc=None):
    """Principal log(log x) = ln|ln x| + i pi for x in (0, 1)."""
    ell = neg_log(x, xc)
    out = np.log(ell) + 1j * math.pi
    return _scalar_or_array(out, x)
