"""Tanh-sinh quadrature for complex integrands on the open unit interval.

The substitution ``x = 1 / (1 + exp(-pi sinh t))`` maps the real line onto
(0, 1) and makes the transformed integrand decay doubly exponentially, so the
trapezoid rule in ``t`` copes with logarithmic and integrable power-law
singularities at both endpoints without subdivision.

Integrands are vectorized: they receive a float64 array of abscissae and
return an array of the same shape (real or complex).  Passing
``complement=True`` also hands the integrand ``xc = 1 - x`` computed without
cancellation, which is what makes ``log(1 - x)`` or ``(1 - x)**-0.5`` accurate
near the right endpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import NonFiniteIntegrand

__all__ = [
    "QuadConfig",
    "QuadResult",
    "DEFAULT_QUAD",
    "FILL_RADIUS",
    "integrate_unit",
    "integrate_with_limit_fill",
]

# Substituted limits apply within this distance of a fill point.
FILL_RADIUS = 1e-8


@dataclass(frozen=True)
class QuadConfig:
    """Quadrature settings.

    Parameters
    ----------
    abs_tol : float
        Stop at the first level whose estimate differs from the previous
        level's by at most this much.
    max_level : int
        Deepest level; level ``L`` uses step ``h = 2**-L`` in ``t``.
    clip_eps : float
        Nodes with ``x`` or ``1 - x`` below this are dropped.
    """

    abs_tol: float = 1e-10
    max_level: int = 12
    clip_eps: float = 1e-300

    def __post_init__(self):
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise ValueError(f"abs_tol must be a positive finite number, got {self.abs_tol!r}")
        if int(self.max_level) != self.max_level or not 3 <= self.max_level <= 16:
            raise ValueError(f"max_level must be an integer in [3, 16], got {self.max_level!r}")
        if not 0 < self.clip_eps < 1e-10:
            raise ValueError(f"clip_eps must lie in (0, 1e-10), got {self.clip_eps!r}")


DEFAULT_QUAD = QuadConfig()


@dataclass(frozen=True)
class QuadResult:
    """Outcome of one quadrature.

    ``err_estimate`` is the heuristic ``|S_L - S_{L-1}|`` between the last two
    levels, not a rigorous bound.
    """

    value: complex
    err_estimate: float
    levels_used: int
    evaluations: int
    converged: bool


Integrand = Callable[..., np.ndarray]


@lru_cache(maxsize=64)
def _nodes(level: int, clip_eps: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Abscissae, complements and weights (without the factor h) for one level.

    Level 0 holds ``t = 0, +-1, +-2, ...``; level ``L > 0`` holds the odd
    multiples of ``2**-L``, i.e. only the points new at that level.
    """
    # x and 1 - x both stay above clip_eps while pi*sinh(t) <= -log(clip_eps)
    t_max = math.asinh(-math.log(clip_eps) / math.pi)
    h = 2.0**-level
    if level == 0:
        t = np.arange(0.0, t_max + 0.5 * h, h)
    else:
        t = np.arange(h, t_max, 2.0 * h)
    t = t[t <= t_max]
    u = math.pi * np.sinh(t)
    # x on the right half, xc = 1 - x; the left half is the mirror image
    e = np.exp(-u)
    xc_right = e / (1.0 + e)
    x_right = 1.0 / (1.0 + e)
    w_right = math.pi * np.cosh(t) * x_right * xc_right
    if level == 0:
        # t = 0 appears once
        x = np.concatenate([xc_right[:0:-1], x_right])
        xc = np.concatenate([x_right[:0:-1], xc_right])
        w = np.concatenate([w_right[:0:-1], w_right])
    else:
        x = np.concatenate([xc_right[::-1], x_right])
        xc = np.concatenate([x_right[::-1], xc_right])
        w = np.concatenate([w_right[::-1], w_right])
    keep = (x >= clip_eps) & (xc >= clip_eps)
    x, xc, w = x[keep], xc[keep], w[keep]
    for arr in (x, xc, w):
        arr.flags.writeable = False
    return x, xc, w


def _evaluate(f: Integrand, x: np.ndarray, xc: np.ndarray, w: np.ndarray,
              complement: bool) -> tuple[np.ndarray, np.ndarray]:
    if not complement:
        # without the complement, nodes that round to x == 1.0 are the endpoint
        inner = x < 1.0
        if not np.all(inner):
            x, xc, w = x[inner], xc[inner], w[inner]
    with np.errstate(all="ignore"):
        y = f(x, xc) if complement else f(x)
    y = np.asarray(y)
    if y.shape != x.shape:
        y = np.broadcast_to(y, x.shape)
    if not np.all(np.isfinite(y)):
        bad = np.flatnonzero(~np.isfinite(y))[0]
        raise NonFiniteIntegrand(
            f"integrand returned {y.flat[bad]!r} at x = {x[bad]!r} (1 - x = {xc[bad]!r})"
        )
    return y, w


def _weighted_sum(w: np.ndarray, y: np.ndarray) -> complex:
    prod = w * y
    re = math.fsum(np.real(prod))
    im = math.fsum(np.imag(prod)) if np.iscomplexobj(prod) else 0.0
    return complex(re, im)


def integrate_unit(f: Integrand, cfg: QuadConfig | None = None, *, complement: bool = False) -> QuadResult:
    """Integrate ``f`` over (0, 1) by tanh-sinh quadrature.

    Parameters
    ----------
    f : callable
        Vectorized integrand ``f(x)``, or ``f(x, xc)`` with ``xc = 1 - x``
        when ``complement`` is true.
    cfg : QuadConfig, optional
        Tolerance and level limits.
    complement : bool
        Pass the accurately computed complement as a second argument.

    Returns
    -------
    QuadResult
        ``converged`` is false (not an error) when ``max_level`` is reached
        before the level-to-level difference drops below ``abs_tol``.

    Raises
    ------
    NonFiniteIntegrand
        If ``f`` yields NaN or Inf at any node.
    """
    cfg = DEFAULT_QUAD if cfg is None else cfg
    raw = 0j  # sum of w*f over all nodes seen so far
    evaluations = 0
    prev = None
    err = math.inf
    value = 0j
    level = 0
    for level in range(cfg.max_level + 1):
        x, xc, w = _nodes(level, cfg.clip_eps)
        y, w = _evaluate(f, x, xc, w, complement)
        evaluations += y.size
        raw += _weighted_sum(w, y)
        value = raw * 2.0**-level
        if prev is not None:
            err = abs(value - prev)
            if level >= 2 and err <= cfg.abs_tol:
                return QuadResult(value, err, level + 1, evaluations, True)
        prev = value
    return QuadResult(value, err, level + 1, evaluations, False)


def _filled(f: Integrand, fills: Sequence[tuple[float, complex]], complement: bool) -> Integrand:
    points = [(float(x0), complex(lim)) for x0, lim in fills]
    for x0, _ in points:
        if not 0.0 < x0 <= 1.0:
            raise ValueError(f"fill point must lie in (0, 1], got {x0!r}")

    def g(x, xc):
        out = np.zeros(x.shape, dtype=complex)
        todo = np.ones(x.shape, dtype=bool)
        for x0, lim in points:
            # distance measured through the complement near the right end
            dist = np.abs(xc - (1.0 - x0)) if x0 > 0.5 else np.abs(x - x0)
            hit = todo & (dist <= FILL_RADIUS)
            out[hit] = lim
            todo &= ~hit
        if np.any(todo):
            args = (x[todo], xc[todo]) if complement else (x[todo],)
            out[todo] = f(*args)
        return out

    return g


def integrate_with_limit_fill(
    f: Integrand,
    fill_points: Iterable[tuple[float, complex]] = (),
    cfg: QuadConfig | None = None,
    *,
    complement: bool = False,
) -> QuadResult:
    """Like :func:`integrate_unit`, but patch removable singularities.

    Any node within ``FILL_RADIUS`` of a fill point ``x0`` gets the supplied
    limit instead of ``f``'s value, and ``f`` is never called there.
    """
    fills = list(fill_points)
    if not fills:
        return integrate_unit(f, cfg, complement=complement)
    return integrate_unit(_filled(f, fills, complement), cfg, complement=True)
