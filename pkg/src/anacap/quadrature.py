"""Recursive adaptive Simpson quadrature for (vector-valued) arc integrands.

The integrands here are complex-valued, possibly many components at once
(whole Gram blocks are integrated in a single pass).  Acceptance per interval
uses the classical Simpson halving estimate, tested separately on real and
imaginary parts of every component.  Intervals whose error estimate falls
below the double-precision noise floor of the panel value are accepted as
converged; this keeps absolute tolerances meaningful for integrands of very
large magnitude without looping to the depth limit on pure rounding noise.

Integrable endpoint singularities (corner-adapted basis products behave like
|t - t0|^s with s > -1/2 at a corner) are handled by the substitution
t = t0 + w*u^6, which makes the weighted integrand vanish at the endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MaxDepthError
from .geometry import ParametricArc

_EPS = float(np.finfo(float).eps)
_SING_POWER = 6  # u^6 endpoint map: exponent s > -1/2 becomes > +2


@dataclass(frozen=True)
class QuadratureSettings:
    abs_tol: float = 1e-9
    max_depth: int = 50

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


def _simpson_children(f, a, b, fa, fm, fb, whole, tol, depth, max_depth, out):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    h12 = (b - a) / 12.0
    left = h12 * (fa + 4.0 * flm + fm)
    right = h12 * (fm + 4.0 * frm + fb)
    s2 = left + right
    err = (s2 - whole) / 15.0
    mag = np.maximum(np.abs(s2.real), np.abs(s2.imag))
    floor = 64.0 * _EPS * mag
    bound = np.maximum(tol, floor)
    if (np.abs(err.real) <= bound).all() and (np.abs(err.imag) <= bound).all():
        out += s2 + err
        return
    if depth >= max_depth:
        raise MaxDepthError(
            f"Simpson tolerance {tol:.3g} not met on [{a:.6g}, {b:.6g}] "
            f"at depth {depth}")
    _simpson_children(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth, out)
    _simpson_children(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth, out)


def adaptive_simpson(f, a: float, b: float, settings: QuadratureSettings) -> np.ndarray:
    """Integrate the vector-valued integrand f over [a, b] to ``abs_tol``.

    ``f`` maps a float to a complex ndarray (all calls the same shape).
    Raises :class:`MaxDepthError` if the tolerance (above the rounding noise
    floor) cannot be met within ``max_depth`` halvings.
    """
    fa = np.asarray(f(a), complex)
    fb = np.asarray(f(b), complex)
    fm = np.asarray(f(0.5 * (a + b)), complex)
    whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb)
    out = np.zeros_like(whole)
    _simpson_children(f, a, b, fa, fm, fb, whole, settings.abs_tol, 0,
                      settings.max_depth, out)
    return out


def integrate_arc(f, arc: ParametricArc, settings: QuadratureSettings,
                  singular_start: bool = False, singular_end: bool = False):
    """Integral over the arc of f(t, z(t), s0, s1) * |z'(t)| dt, t in [0, 1].

    The integrand receives the parameter t, the point z(t), and the exact
    parameter distances s0 = t - 0 and s1 = 1 - t from the arc endpoints;
    under the singular endpoint maps these distances are computed directly
    (never as a difference that could round to zero), so corner-adapted
    integrands can evaluate stably arbitrarily close to a corner.

    ``singular_start`` / ``singular_end`` flag integrable endpoint
    singularities of f (corner points); the flagged half of the parameter
    interval is integrated under the u^6 endpoint map and the (vanishing)
    endpoint value is taken as 0.
    """
    probe = np.asarray(f(0.5, arc.point(0.5), 0.5, 0.5), complex)
    zero = np.zeros_like(probe)

    def weighted(t, s0, s1):
        z = arc.point(t)
        return np.asarray(f(t, z, s0, s1), complex) * abs(arc.velocity(t))

    pieces = []
    if singular_start or singular_end:
        pieces.append(("map0", 0.0, 0.5) if singular_start else ("plain", 0.0, 0.5))
        pieces.append(("map1", 0.5, 1.0) if singular_end else ("plain", 0.5, 1.0))
    else:
        pieces.append(("plain", 0.0, 1.0))
    tol = settings.abs_tol / len(pieces)
    sub = QuadratureSettings(tol, settings.max_depth)

    total = np.zeros_like(probe)
    for kind, t0, t1 in pieces:
        if kind == "plain":
            total = total + adaptive_simpson(
                lambda t: weighted(t, t, 1.0 - t), t0, t1, sub)
        elif kind == "map0":
            w = t1 - t0

            def g(u, w=w):
                if u == 0.0:
                    return zero
                s = w * u ** _SING_POWER
                return weighted(s, s, 1.0 - s) * (_SING_POWER * w * u ** (_SING_POWER - 1))

            total = total + adaptive_simpson(g, 0.0, 1.0, sub)
        else:
            w = t1 - t0

            def g(u, w=w):
                if u == 0.0:
                    return zero
                s = w * u ** _SING_POWER
                return weighted(1.0 - s, 1.0 - s, s) * (_SING_POWER * w * u ** (_SING_POWER - 1))

            total = total + adaptive_simpson(g, 0.0, 1.0, sub)
    return total if probe.ndim else complex(total)


def arc_integrand(f):
    """Adapt a plain f(t, z) integrand to the 4-argument arc protocol."""
    return lambda t, z, s0, s1: f(t, z)


def quad_arc(f, arc: ParametricArc, settings: QuadratureSettings,
             singular_start: bool = False, singular_end: bool = False) -> complex:
    """Scalar form of :func:`integrate_arc` for integrands f(t) -> complex."""
    val = integrate_arc(lambda t, z, s0, s1: f(t), arc, settings,
                        singular_start=singular_start, singular_end=singular_end)
    return complex(val)
