import cmath
import math
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetatab import specfun as sf
from zetatab.errors import ConvergenceError, DomainError, NumericalOverflow, PoleError

ZETA3 = 1.2020569031595942853997  # Apery's constant


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def bernoulli_poly(n: int, q: Fraction) -> Fraction:
    """B_n(q) from exact Bernoulli numbers (independent of the package)."""
    bern = [Fraction(1)]
    for m in range(1, n + 1):
        bern.append(-sum(math.comb(m + 1, j) * bern[j] for j in range(m)) / (m + 1))
    return sum(math.comb(n, j) * bern[j] * q ** (n - j) for j in range(n + 1))


# ---------------------------------------------------------------------------
# hurwitz_zeta


@pytest.mark.parametrize(
    "s, q, expected",
    [
        (2, 1, math.pi**2 / 6),
        (-1, 0.3, -(0.09 - 0.3 + 1 / 6) / 2),
        (3, 0.5, 7 * ZETA3),
    ],
)
def test_hurwitz_examples(s, q, expected):
    assert rel(sf.hurwitz_zeta(s, q), expected) < 1e-13


@pytest.mark.parametrize(
    "s, q, expected",
    [
        # frozen from an independent 30-digit evaluation
        (-2.5 + 1.5j, 0.7 + 0.2j, -0.06150528880496787 + 0.09418471892405379j),
        (-7.3 + 0.4j, 3.2 - 0.4j, 24.937994569007337 + 333.6059184386244j),
        (3 - 2j, 0.25 + 0.1j, -19.032578574987316 + 14.17143558251519j),
    ],
)
def test_hurwitz_complex_frozen(s, q, expected):
    assert rel(sf.hurwitz_zeta(s, q), expected) < 1e-12


def test_riemann_near_first_zero():
    # the first nontrivial zero sits at 1/2 + 14.134725141734693...i
    z = sf.riemann_zeta(0.5 + 14.134725141734693j)
    assert abs(z) < 1e-13


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("q", ["1/4", "1/2", "1", "5/2"])
def test_hurwitz_bernoulli_values(n, q):
    qf = Fraction(q)
    expected = float(-bernoulli_poly(n + 1, qf) / (n + 1))
    assert abs(sf.hurwitz_zeta(-n, float(qf)) - expected) < 1e-12


@pytest.mark.parametrize(
    "s, q, expected",
    [
        # frozen from an independent 40-digit evaluation
        (-4, 0.25, 0.0048828125),
        (-7, 0.001, 0.004166583333625),
        (-14, 7 / 3, -56.28397512553868),
        (-35, 0.25, -5.54252344942315),
        (-69, 0.25, 3.8872861391788043e21),
        (-20.5, 0.3, 136.36193579183114),
        (-30, 0.1 + 0.3j, -189595166.04814288 - 249194310.83706138j),
    ],
)
def test_hurwitz_far_left_half_plane(s, q, expected):
    assert rel(sf.hurwitz_zeta(s, q), expected) < 1e-13


def test_hurwitz_trivial_zeros_exact():
    assert sf.hurwitz_zeta(-40, 0.5) == 0
    assert sf.hurwitz_zeta(-12, 1) == 0


@pytest.mark.parametrize("s", [-1.5, 2, 3, 4.5])
def test_hurwitz_half_multiplication(s):
    lhs = sf.hurwitz_zeta(s, 0.5)
    rhs = (2**s - 1) * sf.riemann_zeta(s)
    assert rel(lhs, rhs) < 1e-12


def _disk_point(draw_r, draw_t, radius=8.0):
    return cmath.rect(radius * math.sqrt(draw_r), draw_t)


@settings(max_examples=150, deadline=None)
@given(
    r=st.floats(0, 1),
    theta=st.floats(0, 2 * math.pi),
    q_re=st.floats(0.1, 10),
    q_im=st.one_of(st.just(0.0), st.floats(-0.5, 0.5)),
)
def test_hurwitz_recurrence_property(r, theta, q_re, q_im):
    s = _disk_point(r, theta)
    if abs(s - 1) <= 0.1:
        return
    q = complex(q_re, q_im)
    a = sf.hurwitz_zeta(s, q)
    b = sf.hurwitz_zeta(s, q + 1)
    c = cmath.exp(-s * cmath.log(q))
    scale = max(abs(a), abs(b), abs(c))
    assert abs(a - b - c) <= 1e-12 * scale


def test_hurwitz_errors():
    with pytest.raises(PoleError):
        sf.hurwitz_zeta(1, 0.5)
    with pytest.raises(DomainError):
        sf.hurwitz_zeta(2, 0)
    with pytest.raises(DomainError):
        sf.hurwitz_zeta(2, -0.5 + 1j)
    # PoleError is also a ZeroDivisionError, DomainError a ValueError
    with pytest.raises(ZeroDivisionError):
        sf.riemann_zeta(1)


def test_tail_divergence_raises_convergence_error():
    # far too few direct terms for such a large |s|: the tail terms grow
    tiny = sf.SpecFunConfig(em_shift_terms=8, em_bernoulli_terms=30, target_abs_tol=1e-13)
    with pytest.raises(ConvergenceError):
        sf.hurwitz_zeta(0.6 + 60j, 0.1, tiny)


@pytest.mark.parametrize(
    "kwargs",
    [dict(em_shift_terms=7), dict(em_bernoulli_terms=3), dict(em_bernoulli_terms=31), dict(target_abs_tol=0)],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        sf.SpecFunConfig(**kwargs)


def test_default_config():
    cfg = sf.DEFAULT_CONFIG
    assert (cfg.em_shift_terms, cfg.em_bernoulli_terms, cfg.target_abs_tol) == (32, 12, 1e-13)


# ---------------------------------------------------------------------------
# riemann_zeta and zeta_derivative


@pytest.mark.parametrize(
    "s, expected",
    [(4, math.pi**4 / 90), (2.5, 1.341487257250917), (1.5, 2.612375348685488), (0, -0.5), (-2, 0.0)],
)
def test_riemann_examples(s, expected):
    assert abs(sf.riemann_zeta(s) - expected) <= 1e-13 * max(1, abs(expected))


@pytest.mark.parametrize(
    "s, expected",
    [
        (2, -0.9375482543158438),
        (4, -0.06891126589612538),
        (3, -0.19812624288563685),
        (1.5, -3.9322397374311016),
        (0, -0.9189385332046728),  # -log(2 pi)/2
        (-2.5 + 3j, 0.12361604360367559 - 0.005861793991776624j),
        (0.5 + 10j, -0.36090737309157184 - 0.0035934407356310654j),
    ],
)
def test_zeta_derivative_frozen(s, expected):
    assert abs(sf.zeta_derivative(s) - expected) <= 1e-13 * max(1, abs(expected))


def test_zeta_derivative_glaisher_link():
    assert abs(sf.zeta_derivative(-1).real - (1 / 12 - sf.constant("glaisher_log"))) < 1e-15


@pytest.mark.parametrize("s", [-1, 1.5, 2, 3, 4])
def test_zeta_derivative_matches_central_difference(s):
    h = 1e-5
    fd = (sf.riemann_zeta(s + h) - sf.riemann_zeta(s - h)) / (2 * h)
    assert rel(sf.zeta_derivative(s), fd) < 1e-7


def test_zeta_derivative_pole():
    with pytest.raises(PoleError):
        sf.zeta_derivative(1)


# ---------------------------------------------------------------------------
# gamma family


@pytest.mark.parametrize(
    "z, expected",
    [
        (1, 0.0),
        (0.5, 0.5723649429247001),
        (3.5, math.log(15 * math.sqrt(math.pi) / 8)),
        (2 + 30j, -41.10259995100698 + 74.35601706348764j),
        (-2.5 + 0.5j, -0.9350856212982774 - 8.87096288524746j),
        (0.1 - 4j, -5.918386444788175 - 0.9072420726485169j),
    ],
)
def test_log_gamma(z, expected):
    assert abs(sf.log_gamma(z) - expected) < 1e-12


@pytest.mark.parametrize(
    "z, expected",
    [
        (1, -0.5772156649015329),
        (0.5, -1.963510026021423),
        (2, 0.4227843350984671),
        (3 - 7j, 2.0053501836409526 - 1.227292283668212j),
        (-1.5 + 0.2j, 0.7078599210642388 + 1.6517573778507917j),
        (45 + 5j, 3.8017822691684398 + 0.11188565577993684j),
    ],
)
def test_digamma(z, expected):
    assert abs(sf.digamma(z) - expected) < 1e-12


@pytest.mark.parametrize("z, expected", [(5, 24.0), (0.5, math.sqrt(math.pi)), (-0.5, -2 * math.sqrt(math.pi))])
def test_gamma_values(z, expected):
    assert rel(sf.gamma(z), expected) < 1e-13


@pytest.mark.parametrize("fn", [sf.log_gamma, sf.gamma, sf.digamma])
@pytest.mark.parametrize("z", [0, -1, -7])
def test_gamma_family_poles(fn, z):
    with pytest.raises(PoleError):
        fn(z)


def test_gamma_overflow_is_an_error():
    with pytest.raises(NumericalOverflow):
        sf.gamma(200)
    # the reflected branch underflows quietly instead
    assert abs(sf.gamma(-200.5)) == 0.0


complex_right = st.builds(complex, st.floats(0.1, 30), st.floats(-30, 30))


@settings(max_examples=200, deadline=None)
@given(z=complex_right)
def test_digamma_recurrence(z):
    lhs = sf.digamma(z + 1) - sf.digamma(z)
    assert abs(lhs - 1 / z) < 1e-12


@settings(max_examples=200, deadline=None)
@given(z=st.builds(complex, st.floats(0.1, 25), st.floats(-25, 25)))
def test_log_gamma_recurrence(z):
    lhs = cmath.exp(sf.log_gamma(z + 1))
    rhs = z * cmath.exp(sf.log_gamma(z))
    assert rel(lhs, rhs) < 1e-11


# ---------------------------------------------------------------------------
# constants


@pytest.mark.parametrize(
    "name, expected",
    [
        ("euler_gamma", 0.5772156649015329),
        ("catalan", 0.9159655941772190),
        ("glaisher_log", 0.2487544770337843),
        ("pi", math.pi),
    ],
)
def test_constants(name, expected):
    assert abs(sf.constant(name) - expected) < 1e-14
    assert isinstance(sf.constant(name), float)


def test_unknown_constant():
    with pytest.raises(ValueError):
        sf.constant("e")


# ---------------------------------------------------------------------------
# branch-sensitive pieces


@pytest.mark.parametrize(
    "x, k, expected",
    [(math.exp(-1), 2, 1), (math.exp(-1), 0.5, 1j), (math.exp(-4), 0.5, 2j)],
)
def test_log_pow_examples(x, k, expected):
    assert abs(sf.log_pow(x, k) - expected) < 1e-15


@pytest.mark.parametrize(
    "x, expected",
    [
        (math.exp(-1), 1j * math.pi),
        (math.exp(-math.e), 1 + 1j * math.pi),
        (0.5, complex(math.log(math.log(2)), math.pi)),
    ],
)
def test_log_log_examples(x, expected):
    assert abs(sf.log_log(x) - expected) < 1e-15


@pytest.mark.parametrize("fn", [lambda x: sf.log_pow(x, 0.5), sf.log_log])
@pytest.mark.parametrize("x", [0.0, 1.0, -0.5, 1.5])
def test_branch_helpers_reject_outside_unit_interval(fn, x):
    with pytest.raises(DomainError):
        fn(x)


@settings(max_examples=300, deadline=None)
@given(x=st.floats(1e-12, 1 - 1e-12), k=st.floats(-3, 3))
def test_log_pow_branch_contract(x, k):
    val = sf.log_pow(x, k)
    s = math.sin(math.pi * k)
    if abs(s) > 1e-9:
        assert np.sign(val.imag) == np.sign(s)
    else:
        assert abs(val.imag) <= 1e-8 * abs(val)


def test_log_pow_uses_complement_near_one():
    x, xc = 1 - 2.0**-40, 2.0**-40
    # with the complement, ln x = log1p(-xc) to full precision
    assert abs(sf.log_pow(x, 1, xc) - math.log1p(-xc)) <= 1e-15 * xc


def test_vectorised_helpers_accept_arrays():
    x = np.array([0.1, 0.5, 0.9])
    out = sf.log_pow(x, 0.5)
    assert out.shape == (3,)
    assert np.allclose(out, [sf.log_pow(v, 0.5) for v in x], rtol=0, atol=1e-15)


def test_pure_functions_thread_safe():
    rng = random.Random(5)
    pts = [(complex(rng.uniform(-6, 6), rng.uniform(-6, 6)), rng.uniform(0.2, 5)) for _ in range(60)]
    serial = [sf.hurwitz_zeta(s, q) for s, q in pts]
    with ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(lambda sq: sf.hurwitz_zeta(*sq), pts))
    assert serial == parallel
