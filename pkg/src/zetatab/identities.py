"""Registry of the closed-form integral identities under audit.

Each :class:`Identity` pairs an integrand on (0, 1) with a closed form built
only from :mod:`zetatab.specfun`, plus a conservative validity domain and any
removable-singularity data the quadrature needs.

Integrands take ``(x, xc)`` with ``xc = 1 - x`` supplied exactly by the
quadrature, and every ``1 - x**m`` or ``log(1 - x)`` is formed through
``expm1``/``log1p`` on ``ln x`` so that the right endpoint keeps full
relative accuracy.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, fields, replace
from types import MappingProxyType
from typing import Callable, Mapping

import numpy as np

from . import specfun as sf
from .errors import DomainViolation, PoleError, UnknownIdentity
from .quad import QuadConfig, QuadResult, integrate_with_limit_fill

__all__ = [
    "PARAM_NAMES",
    "ParamPoint",
    "Identity",
    "TableRow",
    "registry",
    "get",
    "ids",
    "table_rows",
    "check_domain",
    "eval_rhs",
    "eval_reading",
    "eval_lhs",
    "integrand",
]

PARAM_NAMES = ("a", "k", "m", "n", "p")

EXPECTED_CONFIRMED = "expected_confirmed"
SUSPECTED_TYPO = "suspected_typo"

_PI = math.pi
_LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class ParamPoint:
    """One assignment of the parameters ``a, k, m, n, p``.

    Values are stored as ``complex``; parameters an identity does not use may
    stay ``None`` and are ignored.
    """

    a: complex = 1 + 0j
    k: complex | None = None
    m: complex | None = None
    n: complex | None = None
    p: complex | None = None

    def __post_init__(self):
        for name in PARAM_NAMES:
            v = getattr(self, name)
            if v is None:
                continue
            v = complex(v)
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise DomainViolation(f"parameter {name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)

    def as_dict(self) -> dict[str, complex | None]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def restricted(self, names) -> "ParamPoint":
        """Copy with every parameter outside ``names`` reset to its default."""
        keep = set(names)
        return ParamPoint(**{n: v for n, v in self.as_dict().items() if n in keep and v is not None})


Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Identity:
    """A registry entry: integrand, closed form, domain and metadata.

    Attributes
    ----------
    id : str
        Unique key such as ``"I_6A"`` or ``"E13"``.
    uses : frozenset of str
        Parameters the identity reads; the others are ignored.
    domain : callable
        ``domain(pp)`` returns ``None`` when ``pp`` is admissible, else a
        human-readable violation message.  Presence of every used parameter
        is checked separately.
    lhs : callable
        ``lhs(pp)`` returns the vectorized integrand ``f(x, xc)``.
    fills : callable
        ``fills(pp)`` lists removable singularities as ``(x0, limit)``.
    rhs : callable
        ``rhs(pp)`` evaluates the closed form as printed.
    readings : mapping
        Alternative closed-form readings for ambiguous printings, keyed by
        name.  The printed form is always the reading named ``"printed"``.
    bindings : mapping
        Fixed parameter values baked into fixed-parameter entries
        (informational only; those entries take no parameters).
    """

    id: str
    description: str
    uses: frozenset
    domain: Callable[[ParamPoint], str | None]
    lhs: Callable[[ParamPoint], Integrand]
    rhs: Callable[[ParamPoint], complex]
    fills: Callable[[ParamPoint], list] = lambda pp: []
    readings: Mapping[str, Callable[[ParamPoint], complex]] = field(default_factory=dict)
    status_hint: str = EXPECTED_CONFIRMED
    paper_anchor: str = ""
    default_tol: float = 1e-8
    default_grid: Mapping[str, tuple] = field(default_factory=dict)
    bindings: Mapping[str, complex] = field(default_factory=dict)
    integrand_text: str = ""
    closed_form_text: str = ""

    def grid(self) -> list[ParamPoint]:
        """Cartesian product of the default grid, in ``a, k, m, n, p`` order."""
        axes = [(name, self.default_grid.get(name, (None,))) for name in PARAM_NAMES]
        points = [{}]
        for name, values in axes:
            points = [dict(pt, **({name: v} if v is not None else {})) for pt in points for v in values]
        return [ParamPoint(**pt) for pt in points]


@dataclass(frozen=True)
class TableRow:
    row: int
    identity_id: str
    label: str


# ---------------------------------------------------------------------------
# vectorised elementary pieces for integrands


def _ln(x, xc):
    """ln x (negative), accurate at both ends."""
    return -sf.neg_log(x, xc)


def _clean(z):
    """Complex array with any -0.0 imaginary part turned into +0.0."""
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    out.real = z.real
    out.imag = z.imag + 0.0
    return out


def _clog1p(z):
    """log(1 + z) for complex arrays without cancellation at small |z|."""
    z = np.asarray(z, dtype=complex)
    u = 1.0 + z
    d = u - 1.0
    safe = np.where(d == 0, 1.0, d)
    return np.where(d == 0, z, np.log(u) * (z / safe))


def _xpow(c: complex, lnx):
    return np.exp(c * lnx)


def _log1p_xpow(c: complex, lnx):
    """log(1 + x**c)."""
    return _clog1p(_xpow(c, lnx))


def _log_1m_xpow(c: complex, lnx):
    """log(1 - x**c): log1p(-x**c) while x**c is small, else via expm1."""
    xc_pow = _xpow(c, lnx)
    small = np.abs(xc_pow) < 0.5
    near_one = np.log(_clean(-np.expm1(c * lnx)))
    return np.where(small, _clog1p(-xc_pow), near_one)


def _atanh_xpow(c: complex, lnx):
    """atanh(x**c) = (log(1 + x**c) - log(1 - x**c)) / 2."""
    return 0.5 * (_log1p_xpow(c, lnx) - _log_1m_xpow(c, lnx))


def _log_xc(x, xc):
    """log(1 - x) with full relative accuracy at both ends."""
    return np.where(x < 0.5, np.log1p(-x), np.log(xc))


def _atanh(x, xc):
    return np.where(x < 0.5, np.arctanh(x), 0.5 * (np.log1p(x) - np.log(xc)))


def _cpow_arr(z, w: complex):
    """Principal z**w for complex arrays."""
    return np.exp(w * np.log(_clean(z)))


def _log_k_pair(pp: ParamPoint, lnx):
    """log(a/x)**k + log(a x)**k on the principal branch."""
    la = cmath.log(pp.a)
    return _cpow_arr(la - lnx, pp.k) + _cpow_arr(la + lnx, pp.k)


# ---------------------------------------------------------------------------
# scalar helpers for closed forms


def _cpow(z: complex, w: complex) -> complex:
    """Principal z**w; 0**w is 0 for Re w > 0."""
    z, w = complex(z), complex(w)
    if z == 0:
        if w.real > 0:
            return 0j
        raise PoleError("0 raised to a power with nonpositive real part")
    return cmath.exp(w * cmath.log(z))


def _two_pi_pow(w: complex) -> complex:
    return cmath.exp(w * _LOG_2PI)


def _is_real(z: complex) -> bool:
    return z.imag == 0


def _hz(s, q):
    return sf.hurwitz_zeta(s, q)


# ---------------------------------------------------------------------------
# domain predicates


def _need(pp: ParamPoint, names) -> str | None:
    for name in names:
        if getattr(pp, name) is None:
            return f"parameter {name} is required"
    return None


def _positive_real_part(pp: ParamPoint, names, strict=True) -> str | None:
    for name in names:
        v = getattr(pp, name)
        if strict and not v.real > 0:
            return f"{name} must have positive real part"
        if not strict and not v.real >= 0:
            return f"{name} must have nonnegative real part"
    return None


def _k_above(pp: ParamPoint, bound: float, gamma_arg_offset: int) -> str | None:
    k = pp.k
    if k == -gamma_arg_offset:
        return f"Gamma pole at k+{gamma_arg_offset}=0"
    if not k.real > bound:
        return f"k must have real part greater than {bound:g}"
    return None


def _a_hurwitz_branch(pp: ParamPoint) -> str | None:
    """Branch-safe values of a for the log(a/x)**k + log(a x)**k families.

    a = 1, or 0 < arg a < pi, keeps both logarithms off the negative real
    axis on (0, 1).  Positive real a != 1 is only accepted for nonnegative
    integer k, where the power has no branch cut.
    """
    a, k = pp.a, pp.k
    if a == 0:
        return "a must be nonzero"
    if a == 1:
        return None
    arg = cmath.phase(a)
    if 0 < arg < _PI:
        return None
    if a.imag == 0 and a.real > 0 and k.imag == 0 and k.real >= 0 and k.real == int(k.real):
        return None
    return "a must be 1, satisfy 0 < arg(a) < pi, or be positive real with k a nonnegative integer"


def _q_ok(q: complex, what: str) -> str | None:
    if not q.real > 0:
        return f"Hurwitz argument {what} = {q!r} must have positive real part"
    return None


def _q4a(pp: ParamPoint, c: complex) -> complex:
    return (_PI - 1j * c * cmath.log(pp.a)) / (2 * _PI)


def _q4b(pp: ParamPoint, c: complex) -> complex:
    return 1 - 1j * c * cmath.log(pp.a) / (2 * _PI)


def _dom_4(pp: ParamPoint, which: str, with_m: bool, with_n: bool) -> str | None:
    names = ("m",) * with_m + ("n",) * with_n
    msg = _k_above(pp, -1.0, 1) or _positive_real_part(pp, names) or _a_hurwitz_branch(pp)
    if msg:
        return msg
    if with_m and which in ("A", "AB"):
        msg = _q_ok(_q4a(pp, pp.m), "(pi - i m log a)/(2 pi)")
    if not msg and with_m and which == "AB":
        msg = _q_ok(_q4b(pp, pp.m), "1 - i m log(a)/(2 pi)")
    if not msg and with_n:
        msg = _q_ok(_q4b(pp, pp.n), "1 - i n log(a)/(2 pi)")
    return msg


def _real_positive_a(pp: ParamPoint) -> str | None:
    if not (_is_real(pp.a) and pp.a.real > 0):
        return "a must be real and positive"
    return None


# ---------------------------------------------------------------------------
# the Hurwitz families and their a = 1 reductions


def _lhs_4a(pp):
    def f(x, xc):
        lnx = _ln(x, xc)
        return _log1p_xpow(pp.m, lnx) * _log_k_pair(pp, lnx) / x
    return f


def _rhs_4a(pp):
    a, k, m = pp.a, pp.k, pp.m
    la = cmath.log(a)
    return (-m * _cpow(la, k + 2) / ((k + 1) * (k + 2))
            - 1j * _two_pi_pow(k + 2) * _cpow(1j / m, k + 1) * _hz(-k - 1, _q4a(pp, m)) / (k + 1))


def _lhs_4b(pp):
    def f(x, xc):
        lnx = _ln(x, xc)
        return _log_1m_xpow(pp.n, lnx) * _log_k_pair(pp, lnx) / x
    return f


def _rhs_4b(pp):
    a, k, n = pp.a, pp.k, pp.n
    la = cmath.log(a)
    return (-1j * _two_pi_pow(k + 2) * _cpow(1j / n, k + 1) * _hz(-k - 1, _q4b(pp, n)) / (k + 1)
            - n * _cpow(la, k + 2) / ((k + 1) * (k + 2))
            - 1j * _PI * _cpow(la, k + 1) / (k + 1))


def _lhs_5a(pp):
    def f(x, xc):
        lnx = _ln(x, xc)
        return _atanh_xpow(pp.m, lnx) * _log_k_pair(pp, lnx) / x
    return f


def _parts_5a(pp):
    k, m = pp.k, pp.m
    la = cmath.log(pp.a)
    pre = _two_pi_pow(k + 2) * _cpow(1j / m, k) / (2 * (k + 1) * m)
    diff = _hz(-k - 1, _q4a(pp, m)) - _hz(-k - 1, _q4b(pp, m))
    extra = 1j * _PI * m * _cpow(la, k + 1)
    return pre, diff, extra


def _rhs_5a(pp):
    # extra term outside the bracket, as printed
    pre, diff, extra = _parts_5a(pp)
    return pre * diff + extra


def _rhs_5a_inside(pp):
    pre, diff, extra = _parts_5a(pp)
    return pre * (diff + extra)


def _lhs_5b(pp):
    def f(x, xc):
        lnx = _ln(x, xc)
        logs = _log1p_xpow(pp.m, lnx) + _log_1m_xpow(pp.n, lnx)
        return _log_k_pair(pp, lnx) * logs / x
    return f


def _rhs_5b(pp):
    k, m, n = pp.k, pp.m, pp.n
    la = cmath.log(pp.a)
    factor = _two_pi_pow(k) * k + _cpow(2, k + 1) * _cpow(_PI, k)
    zetas = (n * _cpow(1j / m, k) * _hz(-k - 1, _q4a(pp, m))
             + m * _cpow(1j / n, k) * _hz(-k - 1, _q4b(pp, n)))
    return (4 * _PI**2 / ((k + 1) * (k + 2) * m * n) * factor * zetas
            - m * n * _cpow(la, k + 1) * (la * (m + n) + 1j * _PI * (k + 2)))


def _zeta_gamma(k):
    """zeta(k+2) * Gamma(k+1)."""
    return sf.riemann_zeta(k + 2) * sf.gamma(k + 1)


def _lhs_6a(pp):
    def f(x, xc):
        return _atanh(x, xc) * sf.log_pow(x, pp.k, xc) / x
    return f


def _rhs_6a(pp):
    k = pp.k
    return _cpow(2, -k - 2) * (_cpow(2, k + 2) - 1) * cmath.exp(1j * _PI * k) * _zeta_gamma(k)


def _lhs_6b(pp):
    def f(x, xc):
        lnx = _ln(x, xc)
        logs = _log1p_xpow(pp.m, lnx) + _log_1m_xpow(pp.n, lnx)
        return sf.log_pow(x, pp.k, xc) * logs / x
    return f


def _rhs_6b(pp):
    k, m, n = pp.k, pp.m, pp.n
    return (0.5 * cmath.exp(1j * _PI * k) * _zeta_gamma(k)
            * ((2 - _cpow(2, -k)) * _cpow(m, -k - 1) - 2 * _cpow(n, -k - 1)))


# ---------------------------------------------------------------------------
# k -> -1 (log-gamma) and k -> -2 (digamma) limits, real a > 0


def _lhs_lg_atanh(pp):
    a2 = pp.a * pp.a

    def f(x, xc):
        lnx = _ln(x, xc)
        return _atanh_xpow(pp.m, lnx) / (x * (a2 + lnx * lnx))
    return f


def _rhs_lg_atanh(pp):
    a, m = pp.a, pp.m
    u = a * m / (2 * _PI)
    # log of the quotient taken as the matching sum of logs
    inner = cmath.log(u) + 2 * sf.log_gamma(u) - 2 * sf.log_gamma(u + 0.5)
    return _PI / (4 * a) * inner


def _lhs_lg_log(pp):
    a2 = pp.a * pp.a

    def f(x, xc):
        lnx = _ln(x, xc)
        logs = _log1p_xpow(pp.m, lnx) + _log_1m_xpow(pp.n, lnx)
        return logs / (x * (a2 + lnx * lnx))
    return f


def _rhs_lg_log(pp):
    a, m, n = pp.a, pp.m, pp.n
    L = cmath.log
    lg = sf.log_gamma((a * m + _PI) / (2 * _PI)) + sf.log_gamma(a * n / (2 * _PI) + 1)
    total = (-2 * _PI * lg
             - a * m + a * m * L(1j * a) - a * m * L(2j * _PI / m)
             - a * n + a * n * L(1j * a) - a * n * L(2j * _PI / n)
             + _PI * L(1j * _PI * a) - _PI * L(1j / (2 * n)))
    return total / (2 * a)


def _lhs_dg_atanh(pp):
    a2 = pp.a * pp.a

    def f(x, xc):
        lnx = _ln(x, xc)
        l2 = lnx * lnx
        return (a2 - l2) * _atanh_xpow(pp.m, lnx) / (x * (a2 + l2) ** 2)
    return f


def _rhs_dg_atanh(pp):
    a, m = pp.a, pp.m
    return 0.25 * (-m * sf.digamma(a * m / (2 * _PI) + 1)
                   + m * sf.digamma((a * m + _PI) / (2 * _PI)) + _PI / a)


def _lhs_dg_log(pp):
    a2 = pp.a * pp.a

    def f(x, xc):
        lnx = _ln(x, xc)
        l2 = lnx * lnx
        # (-x^m - 1)(x^n - 1) = (1 + x^m)(1 - x^n) > 0
        logs = _log1p_xpow(pp.m, lnx) + _log_1m_xpow(pp.n, lnx)
        return (a2 - l2) * logs / (x * (a2 + l2) ** 2)
    return f


def _rhs_dg_log(pp):
    a, m, n = pp.a, pp.m, pp.n
    L = cmath.log
    total = (-a * m * L(1j * a) + a * m * L(1j / m) + a * m * _LOG_2PI
             + a * m * sf.digamma((a * m + _PI) / (2 * _PI))
             - a * n * L(1j * a) + a * n * L(1j / n) + a * n * _LOG_2PI
             + a * n * sf.digamma(a * n / (2 * _PI) + 1) - _PI)
    return total / (2 * a)


# ---------------------------------------------------------------------------
# fixed-parameter entries built from classical constants


def _c(name):
    return sf.constant(name)


def _sqrt_log(x, xc):
    return sf.log_pow(x, 0.5, xc)


def _log_1m_x2(x, xc):
    # log(1 - x^2) = log(1 - x) + log(1 + x)
    return _log_xc(x, xc) + np.log1p(x)


def _e1_lhs(pp):
    def f(x, xc):
        l2 = _ln(x, xc) ** 2
        return (_PI**3 - 12 * _PI * l2) * _atanh(x, xc) / (x * (4 * l2 + _PI**2) ** 3)
    return f


def _e1_rhs(pp):
    return complex((2 * _c("catalan") - 1) / (16 * _PI))


def _e2_lhs(pp):
    return lambda x, xc: sf.log_log(x, xc) * _atanh(x, xc) / x


def _e2_rhs(pp):
    # log(16 pi^3 / A^36) expanded so A never needs exponentiating
    inner = 4 * math.log(2) + 3 * math.log(_PI) - 36 * _c("glaisher_log")
    return _PI**2 / 24 * complex(inner, 3 * _PI)


def _e3_lhs(pp):
    return lambda x, xc: _sqrt_log(x, xc) * _atanh(x, xc) / x


def _e3_rhs(pp):
    return -1j / 16 * (math.sqrt(2) - 8) * math.sqrt(_PI) * sf.riemann_zeta(2.5)


def _e4_lhs(pp):
    return lambda x, xc: _atanh(x, xc) / (x * _sqrt_log(x, xc))


def _e4_rhs(pp):
    return 0.25j * (math.sqrt(2) - 4) * math.sqrt(_PI) * sf.riemann_zeta(1.5)


def _e5_lhs(pp):
    return lambda x, xc: _ln(x, xc) * sf.log_log(x, xc) * _atanh(x, xc) / x


def _e5_rhs(pp):
    g = _c("euler_gamma")
    z3 = sf.riemann_zeta(3)
    return (-7 * sf.zeta_derivative(3) + z3 * complex(-7 + 7 * g - math.log(2), -7 * _PI)) / 8


def _e6_lhs(pp):
    return lambda x, xc: _ln(x, xc) ** 2 * sf.log_log(x, xc) * _atanh(x, xc) / x


def _e6_rhs(pp):
    g = _c("euler_gamma")
    return 15 * sf.zeta_derivative(4) / 8 + _PI**4 * complex(45 - 30 * g + math.log(4), 30 * _PI) / 1440


def _e7_lhs(pp):
    def f(x, xc):
        # log((1 - x)(1 + x^2)) split into two real logs
        return (_log_xc(x, xc) + np.log1p(x * x)) * sf.log_log(x, xc) / x
    return f


def _e7_rhs(pp):
    g = _c("euler_gamma")
    return (-6 * sf.zeta_derivative(2) + complex(g, -_PI) * _PI**2) / 8


def _e8_lhs(pp):
    return lambda x, xc: _log_1m_x2(x, xc) * sf.log_log(x, xc) / x


def _e8_rhs(pp):
    # log(A^12 / pi) = 12 ln A - ln pi
    return _PI**2 / 12 * complex(12 * _c("glaisher_log") - math.log(_PI), -_PI)


def _e9_lhs(pp):
    return lambda x, xc: _sqrt_log(x, xc) * _log_1m_x2(x, xc) / x


def _e9_rhs(pp):
    return -0.25j * math.sqrt(_PI / 2) * sf.riemann_zeta(2.5)


def _e10_lhs(pp):
    return lambda x, xc: _log_1m_x2(x, xc) / (x * _sqrt_log(x, xc))


def _e10_rhs(pp):
    return 1j * math.sqrt(_PI / 2) * sf.riemann_zeta(1.5)


def _e11_lhs(pp):
    return lambda x, xc: _ln(x, xc) * _log_1m_x2(x, xc) * sf.log_log(x, xc) / x


def _e11_rhs(pp):
    g = _c("euler_gamma")
    return (sf.zeta_derivative(3) + sf.riemann_zeta(3) * complex(1 - g - math.log(2), _PI)) / 4


def _e12_lhs(pp):
    return lambda x, xc: _log_1m_x2(x, xc) * sf.log_log(x, xc) / (x * _sqrt_log(x, xc))


def _e12_rhs(pp):
    g = _c("euler_gamma")
    z = sf.riemann_zeta(1.5)
    return math.sqrt(_PI / 2) * (1j * sf.zeta_derivative(1.5) - 1j * z * complex(g + math.log(8), -_PI))


# ---------------------------------------------------------------------------
# m-derivative families and their special cases


def _x_diff(c1: complex, c2: complex, lnx):
    """x**c1 - x**c2, factored through the smaller power so nothing overflows."""
    if c1.real >= c2.real:
        return _xpow(c2, lnx) * np.expm1((c1 - c2) * lnx)
    return -_xpow(c1, lnx) * np.expm1((c2 - c1) * lnx)


def _xpow_m1(c: complex, lnx):
    """x**c - 1."""
    return np.expm1(c * lnx)


def _lhs_dd1(pp):
    m, p = pp.m, pp.p

    def f(x, xc):
        lnx = _ln(x, xc)
        den = (1 + _xpow(m + 1, lnx)) * (1 + _xpow(p + 1, lnx))
        return sf.log_pow(x, pp.k + 1, xc) * _x_diff(m, p, lnx) / den
    return f


def _dd_term(k, c):
    return _cpow(1j / (c + 1), k) / (c + 1) ** 2


def _dd_zg(k):
    """e^{i pi k/2} zeta(k+2) Gamma(k+2)."""
    return cmath.exp(0.5j * _PI * k) * sf.riemann_zeta(k + 2) * sf.gamma(k + 2)


def _rhs_dd1(pp):
    k = pp.k
    return (-_cpow(2, -k - 1) * (_cpow(2, k + 1) - 1) * _dd_zg(k)
            * (_dd_term(k, pp.m) - _dd_term(k, pp.p)))


def _lhs_e13(pp):
    m, p = pp.m, pp.p

    def f(x, xc):
        lnx = _ln(x, xc)
        den = (1 + _xpow(m + 1, lnx)) * (1 + _xpow(p + 1, lnx)) * lnx
        return _x_diff(m, p, lnx) / den
    return f


def _fills_e13(pp):
    # (x^m - x^p)/ln x -> m - p and each (x^c + 1) -> 2 as x -> 1
    return [(1.0, (pp.m - pp.p) / 4)]


def _rhs_e13(pp):
    return 0.5 * cmath.log((pp.m + 1) / (pp.p + 1))


def _lhs_dd2(pp):
    n, p = pp.n, pp.p

    def f(x, xc):
        lnx = _ln(x, xc)
        # grouped so no factor under- or overflows as x -> 1
        ratio = _x_diff(n, p, lnx) / _xpow_m1(n + 1, lnx)
        return sf.log_pow(x, pp.k + 1, xc) / _xpow_m1(p + 1, lnx) * ratio
    return f


def _rhs_dd2(pp):
    k = pp.k
    return _dd_zg(k) * (_dd_term(k, pp.p) - _dd_term(k, pp.n))


def _lhs_e14(pp):
    n, p = pp.n, pp.p

    def f(x, xc):
        lnx = _ln(x, xc)
        ratio = _x_diff(n, p, lnx) / _xpow_m1(n + 1, lnx)
        return lnx / _xpow_m1(p + 1, lnx) * lnx * ratio
    return f


def _rhs_e14(pp):
    return 2 * sf.riemann_zeta(3) * (1 / (pp.n + 1) ** 3 - 1 / (pp.p + 1) ** 3)


# ---------------------------------------------------------------------------
# domains


def _dom_6a(pp):
    return _k_above(pp, -1.0, 1)


def _dom_6b(pp):
    return _k_above(pp, -1.0, 1) or _positive_real_part(pp, ("m", "n"))


def _dom_lg(names):
    def dom(pp):
        return _real_positive_a(pp) or _positive_real_part(pp, names)
    return dom


def _dom_dd1(pp):
    if pp.k == -1:
        return "closed form has a removable singularity at k=-1"
    return (_k_above(pp, -2.0, 2) or _positive_real_part(pp, ("m",))
            or _positive_real_part(pp, ("p",), strict=False))


def _dom_dd2(pp):
    return (_k_above(pp, -1.0, 1) or _positive_real_part(pp, ("n",))
            or _positive_real_part(pp, ("p",), strict=False))


def _dom_e13(pp):
    return _positive_real_part(pp, ("m",)) or _positive_real_part(pp, ("p",), strict=False)


def _dom_e14(pp):
    return _positive_real_part(pp, ("n",)) or _positive_real_part(pp, ("p",), strict=False)


def _always(pp):
    return None


# ---------------------------------------------------------------------------
# registry


_K = (0.5, 1.0, 2.0)
_MN = (1.0, 2.0)
_P = (0.0, 1.0)
_A_HURWITZ = (1 + 0j, 1 + 0.5j)
# a = 1 is the I_6A / I_6B case; the 5A/5B audit targets the log(a) terms
_A_OFF_ONE = (1 + 0.5j, 2j)
_A_REAL = (0.5, 2.0)
_LOOSE = 1e-6


def _fixed(id_, desc, anchor, lhs, rhs, bindings, integrand_text, closed_text, tol=1e-8):
    return Identity(
        id=id_, description=desc, uses=frozenset(), domain=_always, lhs=lhs, rhs=rhs,
        paper_anchor=anchor, default_tol=tol, bindings=MappingProxyType(dict(bindings)),
        integrand_text=integrand_text, closed_form_text=closed_text,
    )


def _build() -> tuple[Identity, ...]:
    fs = frozenset
    grid = MappingProxyType
    items = [
        Identity(
            "I_4A", "log(1 + x^m) against log^k(a/x) + log^k(a x), Hurwitz zeta closed form",
            fs("akm"), lambda pp: _dom_4(pp, "A", True, False), _lhs_4a, _rhs_4a,
            paper_anchor="4a", default_grid=grid({"a": _A_HURWITZ, "k": _K, "m": _MN}),
            integrand_text="log(x^m+1) (log^k(a/x) + log^k(a x)) / x",
            closed_form_text="-m log^(k+2)(a)/((k+1)(k+2)) - i (2pi)^(k+2) (i/m)^(k+1) zeta(-k-1, (pi - i m log a)/(2pi))/(k+1)",
        ),
        Identity(
            "I_4B", "log(1 - x^n) against log^k(a/x) + log^k(a x), Hurwitz zeta closed form",
            fs("akn"), lambda pp: _dom_4(pp, "B", False, True), _lhs_4b, _rhs_4b,
            paper_anchor="4b", default_grid=grid({"a": _A_HURWITZ, "k": _K, "n": _MN}),
            integrand_text="log(1-x^n) (log^k(a/x) + log^k(a x)) / x",
            closed_form_text="-i (2pi)^(k+2) (i/n)^(k+1) zeta(-k-1, 1 - i n log(a)/(2pi))/(k+1) - n log^(k+2)(a)/((k+1)(k+2)) - i pi log^(k+1)(a)/(k+1)",
        ),
        Identity(
            "I_5A", "atanh(x^m) against log^k(a/x) + log^k(a x), difference of the two Hurwitz forms",
            fs("akm"), lambda pp: _dom_4(pp, "AB", True, False), _lhs_5a, _rhs_5a,
            readings=MappingProxyType({"printed": _rhs_5a, "inside": _rhs_5a_inside}),
            status_hint=SUSPECTED_TYPO, paper_anchor="5a",
            default_grid=grid({"a": _A_OFF_ONE, "k": _K, "m": _MN}),
            integrand_text="atanh(x^m) (log^k(a/x) + log^k(a x)) / x",
            closed_form_text="(2pi)^(k+2) (i/m)^k/(2(k+1)m) [zeta(-k-1, (pi - i m log a)/(2pi)) - zeta(-k-1, 1 - i m log(a)/(2pi))] + i pi m log^(k+1)(a)",
        ),
        Identity(
            "I_5B", "log((1 + x^m)(1 - x^n)) against log^k(a/x) + log^k(a x), sum of the two Hurwitz forms",
            fs("akmn"), lambda pp: _dom_4(pp, "A", True, True), _lhs_5b, _rhs_5b,
            status_hint=SUSPECTED_TYPO, paper_anchor="5b",
            default_grid=grid({"a": _A_OFF_ONE, "k": _K, "m": _MN, "n": _MN}),
            integrand_text="(log^k(a/x) + log^k(a x)) log((x^m+1)(1-x^n)) / x",
            closed_form_text="4pi^2/((k+1)(k+2)mn) ((2pi)^k k + 2^(k+1) pi^k) (n (i/m)^k zeta(-k-1, (pi - i m log a)/(2pi)) + m (i/n)^k zeta(-k-1, 1 - i n log(a)/(2pi))) - m n log^(k+1)(a) (log(a)(m+n) + i pi (k+2))",
        ),
        Identity(
            "I_6A", "atanh(x) log^k(x) / x in terms of zeta(k+2) Gamma(k+1)",
            fs("k"), _dom_6a, _lhs_6a, _rhs_6a, paper_anchor="6a",
            default_grid=grid({"k": _K}),
            integrand_text="atanh(x) log^k(x) / x",
            closed_form_text="2^(-k-2) (2^(k+2)-1) e^(i pi k) zeta(k+2) Gamma(k+1)",
        ),
        Identity(
            "I_6B", "log^k(x) log((1 + x^m)(1 - x^n)) / x in terms of zeta(k+2) Gamma(k+1)",
            fs("kmn"), _dom_6b, _lhs_6b, _rhs_6b, paper_anchor="6b",
            default_grid=grid({"k": _K, "m": _MN, "n": _MN}),
            integrand_text="log^k(x) log((x^m+1)(1-x^n)) / x",
            closed_form_text="(1/2) e^(i pi k) zeta(k+2) Gamma(k+1) ((2 - 2^(-k)) m^(-k-1) - 2 n^(-k-1))",
        ),
        Identity(
            "I_LG_ATANH", "atanh(x^m) / (x (a^2 + log^2 x)) via log-gamma",
            fs("am"), _dom_lg(("m",)), _lhs_lg_atanh, _rhs_lg_atanh, paper_anchor="lg-atanh",
            default_grid=grid({"a": _A_REAL, "m": _MN}),
            integrand_text="atanh(x^m) / (x (a^2 + log^2 x))",
            closed_form_text="pi/(4a) log(a m Gamma(a m/(2pi))^2 / (2pi Gamma((a m + pi)/(2pi))^2))",
        ),
        Identity(
            "I_LG_LOG", "log((1 + x^m)(1 - x^n)) / (x (a^2 + log^2 x)) via log-gamma",
            fs("amn"), _dom_lg(("m", "n")), _lhs_lg_log, _rhs_lg_log,
            status_hint=SUSPECTED_TYPO, paper_anchor="lg-log",
            default_grid=grid({"a": _A_REAL, "m": _MN, "n": _MN}),
            integrand_text="log((x^m+1)(1-x^n)) / (x (a^2 + log^2 x))",
            closed_form_text="(1/(2a)) (-2pi log(Gamma((a m + pi)/(2pi)) Gamma(a n/(2pi) + 1)) - a m + a m log(i a) - a m log(2 i pi/m) - a n + a n log(i a) - a n log(2 i pi/n) + pi log(i pi a) - pi log(i/(2n)))",
        ),
        Identity(
            "I_DG_ATANH", "(a^2 - log^2 x) atanh(x^m) / (x (a^2 + log^2 x)^2) via digamma",
            fs("am"), _dom_lg(("m",)), _lhs_dg_atanh, _rhs_dg_atanh, paper_anchor="dg-atanh",
            default_grid=grid({"a": _A_REAL, "m": _MN}),
            integrand_text="(a^2 - log^2 x) atanh(x^m) / (x (a^2 + log^2 x)^2)",
            closed_form_text="(1/4) (-m psi(a m/(2pi) + 1) + m psi((a m + pi)/(2pi)) + pi/a)",
        ),
        Identity(
            "I_DG_LOG", "(a^2 - log^2 x) log((-x^m - 1)(x^n - 1)) / (x (a^2 + log^2 x)^2) via digamma",
            fs("amn"), _dom_lg(("m", "n")), _lhs_dg_log, _rhs_dg_log,
            status_hint=SUSPECTED_TYPO, paper_anchor="dg-log",
            default_grid=grid({"a": _A_REAL, "m": _MN, "n": _MN}),
            integrand_text="(a^2 - log^2 x) log((-x^m-1)(x^n-1)) / (x (a^2 + log^2 x)^2)",
            closed_form_text="(1/(2a)) (-a m log(i a) + a m log(i/m) + a m log(2pi) + a m psi((a m + pi)/(2pi)) - a n log(i a) + a n log(i/n) + a n log(2pi) + a n psi(a n/(2pi) + 1) - pi)",
        ),
        _fixed("E1", "Catalan's constant from atanh(x) against a rational function of log x",
               "ex1", _e1_lhs, _e1_rhs, {"k": -3, "m": 1},
               "(pi^3 - 12 pi log^2 x) atanh(x) / (x (4 log^2 x + pi^2)^3)", "(2C - 1)/(16 pi)"),
        _fixed("E2", "log(log x) atanh(x) / x via the Glaisher constant",
               "ex2", _e2_lhs, _e2_rhs, {"k": 0},
               "log(log x) atanh(x) / x", "(pi^2/24) (log(16 pi^3 / A^36) + 3 i pi)", _LOOSE),
        _fixed("E3", "sqrt(log x) atanh(x) / x via zeta(5/2)",
               "ex3", _e3_lhs, _e3_rhs, {"k": 0.5},
               "sqrt(log x) atanh(x) / x", "-(i/16) (sqrt(2) - 8) sqrt(pi) zeta(5/2)"),
        _fixed("E4", "atanh(x) / (x sqrt(log x)) via zeta(3/2)",
               "ex4", _e4_lhs, _e4_rhs, {"k": -0.5},
               "atanh(x) / (x sqrt(log x))", "(i/4) (sqrt(2) - 4) sqrt(pi) zeta(3/2)", _LOOSE),
        _fixed("E5", "log(x) log(log x) atanh(x) / x via zeta'(3)",
               "ex5", _e5_lhs, _e5_rhs, {"k": 1},
               "log(x) log(log x) atanh(x) / x",
               "(1/8) (-7 zeta'(3) + zeta(3) (-7 + 7 gamma - 7 i pi - log 2))", _LOOSE),
        _fixed("E6", "log^2(x) log(log x) atanh(x) / x via zeta'(4)",
               "ex6", _e6_lhs, _e6_rhs, {"k": 2},
               "log^2(x) log(log x) atanh(x) / x",
               "15 zeta'(4)/8 + pi^4 (45 - 30 gamma + 30 i pi + log 4)/1440", _LOOSE),
        _fixed("E7", "log((1 - x)(1 + x^2)) log(log x) / x via zeta'(2)",
               "ex7", _e7_lhs, _e7_rhs, {"k": 0, "a": -1, "m": 2, "n": 1},
               "log((1-x)(x^2+1)) log(log x) / x", "(1/8) (-6 zeta'(2) + (gamma - i pi) pi^2)", _LOOSE),
        _fixed("E8", "log(1 - x^2) log(log x) / x via the Glaisher constant",
               "ex8", _e8_lhs, _e8_rhs, {"k": 0, "m": 1, "n": 1},
               "log(1-x^2) log(log x) / x", "(pi^2/12) (log(A^12/pi) - i pi)", _LOOSE),
        _fixed("E9", "sqrt(log x) log(1 - x^2) / x via zeta(5/2)",
               "ex9", _e9_lhs, _e9_rhs, {"k": 0.5, "m": 1, "n": 1},
               "sqrt(log x) log(1-x^2) / x", "-(i/4) sqrt(pi/2) zeta(5/2)"),
        _fixed("E10", "log(1 - x^2) / (x sqrt(log x)) via zeta(3/2)",
               "ex10", _e10_lhs, _e10_rhs, {"k": -0.5, "m": 1, "n": 1},
               "log(1-x^2) / (x sqrt(log x))", "i sqrt(pi/2) zeta(3/2)", _LOOSE),
        _fixed("E11", "log(x) log(1 - x^2) log(log x) / x via zeta'(3)",
               "ex11", _e11_lhs, _e11_rhs, {"k": 1, "m": 1, "n": 1},
               "log(x) log(1-x^2) log(log x) / x",
               "(1/4) (zeta'(3) + zeta(3) (1 - gamma + i pi - log 2))", _LOOSE),
        _fixed("E12", "log(1 - x^2) log(log x) / (x sqrt(log x)) via zeta'(3/2)",
               "ex12", _e12_lhs, _e12_rhs, {"k": -0.5, "m": 1, "n": 1},
               "log(1-x^2) log(log x) / (x sqrt(log x))",
               "sqrt(pi/2) (i zeta'(3/2) - i zeta(3/2) (gamma - i pi + log 8))", _LOOSE),
        Identity(
            "I_DD1", "log^(k+1)(x) (x^m - x^p) / ((x^(m+1) + 1)(x^(p+1) + 1)) via zeta(k+2) Gamma(k+2)",
            fs("kmp"), _dom_dd1, _lhs_dd1, _rhs_dd1, paper_anchor="dd1",
            default_grid=grid({"k": _K, "m": _MN, "p": _P}),
            integrand_text="log^(k+1)(x) (x^m - x^p) / ((x^(m+1)+1)(x^(p+1)+1))",
            closed_form_text="-2^(-k-1) (2^(k+1)-1) e^(i pi k/2) zeta(k+2) Gamma(k+2) ((i/(m+1))^k/(m+1)^2 - (i/(p+1))^k/(p+1)^2)",
        ),
        Identity(
            "I_DD2", "log^(k+1)(x) (x^n - x^p) / ((x^(n+1) - 1)(x^(p+1) - 1)) via zeta(k+2) Gamma(k+2)",
            fs("knp"), _dom_dd2, _lhs_dd2, _rhs_dd2, paper_anchor="dd2",
            default_grid=grid({"k": _K, "n": _MN, "p": _P}),
            integrand_text="log^(k+1)(x) (x^n - x^p) / ((x^(n+1)-1)(x^(p+1)-1))",
            closed_form_text="e^(i pi k/2) zeta(k+2) Gamma(k+2) ((i/(p+1))^k/(p+1)^2 - (i/(n+1))^k/(n+1)^2)",
        ),
        Identity(
            "E13", "(x^m - x^p) / ((x^(m+1) + 1)(x^(p+1) + 1) log x), the k -> -2 limit of I_DD1",
            fs("mp"), _dom_e13, _lhs_e13, _rhs_e13, fills=_fills_e13, paper_anchor="ex13",
            default_grid=grid({"m": _MN, "p": _P}),
            integrand_text="(x^m - x^p) / ((x^(m+1)+1)(x^(p+1)+1) log x)",
            closed_form_text="(1/2) log((m+1)/(p+1))",
        ),
        Identity(
            "E14", "log^2(x) (x^n - x^p) / ((x^(n+1) - 1)(x^(p+1) - 1)), the k = 1 case of I_DD2",
            fs("np"), _dom_e14, _lhs_e14, _rhs_e14, fills=lambda pp: [(1.0, 0j)], paper_anchor="ex14",
            default_grid=grid({"n": _MN, "p": _P}),
            integrand_text="log^2(x) (x^n - x^p) / ((x^(n+1)-1)(x^(p+1)-1))",
            closed_form_text="2 zeta(3) (1/(n+1)^3 - 1/(p+1)^3)",
        ),
    ]
    out = []
    for ident in items:
        if not ident.readings:
            ident = replace(ident, readings=MappingProxyType({"printed": ident.rhs}))
        out.append(ident)
    return tuple(out)


_REGISTRY = _build()
_BY_ID = MappingProxyType({ident.id: ident for ident in _REGISTRY})
if len(_BY_ID) != len(_REGISTRY):  # pragma: no cover - construction invariant
    raise RuntimeError("duplicate identity id in registry")

_TABLE = tuple(
    TableRow(i + 1, ident_id, _BY_ID[ident_id].integrand_text)
    for i, ident_id in enumerate((
        "I_6A", "I_6B", "E1", "I_LG_ATANH", "E2", "E3", "E4", "E5", "E6",
        "E7", "E8", "E9", "E10", "E11", "E12", "I_DD1", "E13", "I_DD2",
    ))
)


def registry() -> list[Identity]:
    """All identities, in a fixed order."""
    return list(_REGISTRY)


def ids() -> list[str]:
    return [ident.id for ident in _REGISTRY]


def table_rows() -> list[TableRow]:
    """The 18 rows of the integral table in their published order."""
    return list(_TABLE)


def get(identity_id: str) -> Identity:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {identity_id!r}") from None


def check_domain(identity_id: str, pp: ParamPoint) -> str | None:
    """``None`` if ``pp`` is admissible for the identity, else the reason."""
    ident = get(identity_id)
    return _need(pp, sorted(ident.uses)) or ident.domain(pp)


def _checked(identity_id: str, pp: ParamPoint) -> tuple[Identity, ParamPoint]:
    ident = get(identity_id)
    msg = check_domain(identity_id, pp)
    if msg:
        raise DomainViolation(f"{identity_id}: {msg}")
    return ident, pp.restricted(ident.uses)


def eval_rhs(identity_id: str, pp: ParamPoint) -> complex:
    """Closed form as printed, evaluated with the special-function kernel."""
    ident, pp = _checked(identity_id, pp)
    return complex(ident.rhs(pp))


def eval_reading(identity_id: str, reading: str, pp: ParamPoint) -> complex:
    """Closed form under a named alternative reading."""
    ident, pp = _checked(identity_id, pp)
    try:
        fn = ident.readings[reading]
    except KeyError:
        raise KeyError(f"{identity_id} has no reading {reading!r}") from None
    return complex(fn(pp))


def integrand(identity_id: str, pp: ParamPoint) -> Integrand:
    """The vectorized integrand ``f(x, xc)`` at ``pp``."""
    ident, pp = _checked(identity_id, pp)
    return ident.lhs(pp)


def eval_lhs(identity_id: str, pp: ParamPoint, qcfg: QuadConfig | None = None) -> QuadResult:
    """Integral of the identity's integrand over (0, 1) by quadrature."""
    ident, pp = _checked(identity_id, pp)
    return integrate_with_limit_fill(ident.lhs(pp), ident.fills(pp), qcfg, complement=True)
