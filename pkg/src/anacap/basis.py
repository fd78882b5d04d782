"""Approximating-function families vanishing at infinity.

Three kinds of basis function:

* ``SimplePole``    1/(z - a)
* ``PowerPole``     1/(z - c)^k
* ``CornerAdapted`` ((z - a)/(z - c))^beta / (z - c)^k, the fractional-power
  family that mimics the boundary behaviour of the extremal functions at a
  corner whose complement-side angle is ``omega``: beta = (pi/omega - 1)/2.

A ``Schedule`` describes how to populate a scene with basis functions:
``Rings(layers)`` lays simple poles on interior rings of disks/ellipses,
``Powers(n, with_corners)`` uses 1/(z-c)^k ladders at the interior anchor,
optionally augmented with the corner-adapted family.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import geometry
from .errors import BranchCutError, PoleEvaluationError, SceneConfigError
from .geometry import Corner, Disk, Ellipse, Scene, Shape


@dataclass(frozen=True)
class SimplePole:
    a: complex

    def eval(self, z: complex) -> complex:
        if z == self.a:
            raise PoleEvaluationError(f"evaluation at pole {self.a}")
        return 1.0 / (z - self.a)

    def d_infinity(self) -> complex:
        # 1/(z-a) = 1/z + a/z^2 + ...
        return 1.0 + 0j


@dataclass(frozen=True)
class PowerPole:
    c: complex
    k: int

    def eval(self, z: complex) -> complex:
        if z == self.c:
            raise PoleEvaluationError(f"evaluation at pole {self.c}")
        return (z - self.c) ** (-self.k)

    def d_infinity(self) -> complex:
        return (1.0 + 0j) if self.k == 1 else 0j


@dataclass(frozen=True)
class CornerAdapted:
    """((z - a)/(z - c))^beta / (z - c)^k with the principal branch.

    ``a`` is a corner on the shape boundary, ``c`` the interior anchor; the
    branch cut of the Moebius ratio is the segment (a, c), which stays inside
    the shape when the shape is star-shaped about ``c``.
    """

    c: complex
    a: complex
    beta: float
    k: int

    def eval(self, z: complex) -> complex:
        if z == self.c:
            raise PoleEvaluationError(f"evaluation at pole {self.c}")
        if z == self.a:
            raise PoleEvaluationError(f"evaluation at corner point {self.a}")
        w = (z - self.a) / (z - self.c)
        if w.real <= 0 and abs(w.imag) <= 1e-14 * abs(w.real):
            raise BranchCutError(f"branch ratio {w} on the cut (-inf, 0]")
        val = cmath.exp(self.beta * cmath.log(w))
        return val * (z - self.c) ** (-self.k) if self.k else val

    def d_infinity(self) -> complex:
        # ((z-a)/(z-c))^beta -> 1 at infinity, so the 1/z coefficient comes
        # from the power factor alone
        return (1.0 + 0j) if self.k == 1 else 0j


BasisFunction = Union[SimplePole, PowerPole, CornerAdapted]


@dataclass(frozen=True)
class Rings:
    layers: int

    def __post_init__(self):
        if self.layers < 0:
            raise SceneConfigError("layers must be >= 0")


@dataclass(frozen=True)
class Powers:
    n: int
    with_corners: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise SceneConfigError("n must be >= 1")


Schedule = Union[Rings, Powers]


def disk_pole_layout(d: Disk, layers: int) -> list[complex]:
    """4*layers + 1 points strictly inside d: the center plus rings at radii
    m*r/(layers + 1) in directions +-1, +-i."""
    if layers < 0:
        raise SceneConfigError("layers must be >= 0")
    pts = [d.center]
    for m in range(1, layers + 1):
        rho = m * d.radius / (layers + 1)
        pts += [d.center + rho, d.center - rho, d.center + 1j * rho, d.center - 1j * rho]
    return pts


def ellipse_pole_layout(e: Ellipse, layers: int) -> list[complex]:
    """Ring layout scaled to the ellipse axes: 4*layers + 1 interior points."""
    if layers < 0:
        raise SceneConfigError("layers must be >= 0")
    rot = cmath.exp(1j * e.rotation)
    u = rot * e.semi_major
    v = rot * 1j * e.semi_minor
    pts = [e.center]
    for m in range(1, layers + 1):
        f = m / (layers + 1)
        pts += [e.center + f * u, e.center - f * u, e.center + f * v, e.center - f * v]
    return pts


def corner_exponent(omega_angle: float) -> float:
    """beta = (pi/omega - 1)/2 for a corner with complement-side angle omega."""
    return 0.5 * (math.pi / omega_angle - 1.0)


def build_basis(sc: Scene, schedule) -> list[BasisFunction]:
    """Basis functions for every shape of the scene under the given schedule.

    ``schedule`` is a single Rings/Powers mode applied to each shape, or a
    sequence with one mode per shape.
    """
    if isinstance(schedule, (Rings, Powers)):
        per_shape = [schedule] * len(sc.shapes)
    else:
        per_shape = list(schedule)
        if len(per_shape) != len(sc.shapes):
            raise SceneConfigError("need one schedule per shape")
    out: list[BasisFunction] = []
    for shape, mode in zip(sc.shapes, per_shape):
        out.extend(_shape_basis(shape, mode))
    if len(set(map(_identity_key, out))) != len(out):
        raise SceneConfigError("duplicate basis functions in schedule")
    return out


def _identity_key(b: BasisFunction):
    if isinstance(b, SimplePole):
        return ("s", b.a)
    if isinstance(b, PowerPole):
        return ("p", b.c, b.k)
    return ("c", b.c, b.a, b.beta, b.k)


def _shape_basis(shape: Shape, mode) -> list[BasisFunction]:
    if isinstance(mode, Rings):
        if isinstance(shape, Disk):
            return [SimplePole(a) for a in disk_pole_layout(shape, mode.layers)]
        if isinstance(shape, Ellipse):
            return [SimplePole(a) for a in ellipse_pole_layout(shape, mode.layers)]
        raise SceneConfigError("Rings schedule applies to disks and ellipses only")
    if isinstance(mode, Powers):
        c = geometry.interior_anchor(shape)
        out: list[BasisFunction] = [PowerPole(c, k) for k in range(1, mode.n + 1)]
        if mode.with_corners:
            corner_list = geometry.corners(shape)
            if corner_list:
                _require_star_shaped(shape, c, corner_list)
            for corner in corner_list:
                beta = corner_exponent(corner.omega_angle)
                out += [CornerAdapted(c, corner.location, beta, k)
                        for k in range(1, mode.n + 1)]
        return out
    raise SceneConfigError(f"unknown schedule mode {type(mode).__name__}")


def _require_star_shaped(shape: Shape, c: complex, corner_list: list[Corner]) -> None:
    # the branch cut of each corner function is the segment (corner, c); it
    # must stay inside the shape, which holds when the shape is star-shaped
    # about c.  Sampled check: points along anchor-to-boundary segments.
    boundary = geometry.boundary_polyline(shape, 128)
    fracs = np.linspace(0.08, 0.92, 9)
    for p in boundary[::2]:
        pts = c + fracs * (p - c)
        for q in pts:
            if not geometry.point_in_shape(shape, complex(q)):
                raise SceneConfigError(
                    "shape is not star-shaped about its anchor; corner-adapted "
                    "basis would cross its branch cut")


# ---------------------------------------------------------------------------
# vectorized evaluation engine


class BasisSet:
    """Grouped, vectorized evaluator for a list of basis functions.

    ``eval_all(z)`` returns the values of every basis function at a complex
    scalar (or at each entry of an array) with a handful of numpy operations,
    preserving the original ordering.  Branch-cut and pole checks are not
    performed here; boundary quadrature never touches those sets for valid
    scenes.
    """

    def __init__(self, funcs: list[BasisFunction]):
        self.funcs = list(funcs)
        n = len(funcs)
        simple_idx, power_idx, corner_idx = [], [], []
        for i, b in enumerate(funcs):
            if isinstance(b, SimplePole):
                simple_idx.append(i)
            elif isinstance(b, PowerPole):
                power_idx.append(i)
            elif isinstance(b, CornerAdapted):
                corner_idx.append(i)
            else:
                raise TypeError(f"not a basis function: {b!r}")
        self.n = n
        self._si = np.array(simple_idx, dtype=int)
        self._pi = np.array(power_idx, dtype=int)
        self._ci = np.array(corner_idx, dtype=int)
        self._sa = np.array([funcs[i].a for i in simple_idx], complex)
        self._pc = np.array([funcs[i].c for i in power_idx], complex)
        self._pk = np.array([funcs[i].k for i in power_idx], int)
        self._cc = np.array([funcs[i].c for i in corner_idx], complex)
        self._ca = np.array([funcs[i].a for i in corner_idx], complex)
        self._cb = np.array([funcs[i].beta for i in corner_idx], float)
        self._ck = np.array([funcs[i].k for i in corner_idx], int)

    @property
    def all_rational(self) -> bool:
        return len(self._ci) == 0

    @property
    def all_simple(self) -> bool:
        return len(self._pi) == 0 and len(self._ci) == 0

    def d_vector(self) -> np.ndarray:
        return np.array([b.d_infinity() for b in self.funcs], complex)

    def eval_all(self, z, corner_subs=None) -> np.ndarray:
        """Values of every basis function at z (scalar or array).

        ``corner_subs`` is an optional list of (corner_point, delta) pairs,
        valid for scalar z only: corner-adapted members anchored at
        corner_point are evaluated with the exact displacement
        z - a = delta, which stays accurate when z is so close to the corner
        that the subtraction would round to zero.
        """
        z = np.asarray(z, complex)
        scalar = z.ndim == 0
        zf = z.reshape(-1)
        out = np.empty((self.n, zf.size), complex)
        if self._si.size:
            out[self._si] = 1.0 / (zf[None, :] - self._sa[:, None])
        if self._pi.size:
            out[self._pi] = (zf[None, :] - self._pc[:, None]) ** (-self._pk[:, None])
        if self._ci.size:
            zc = zf[None, :] - self._cc[:, None]
            num = zf[None, :] - self._ca[:, None]
            if corner_subs:
                for pt, delta in corner_subs:
                    num[self._ca == pt] = delta
            w = num / zc
            vals = np.exp(self._cb[:, None] * np.log(w))
            out[self._ci] = vals * zc ** (-self._ck[:, None])
        return out[:, 0] if scalar else out.reshape((self.n,) + z.shape)

    def corner_points(self) -> np.ndarray:
        """Distinct corner locations used by corner-adapted members."""
        if not self._ca.size:
            return np.empty(0, complex)
        return np.unique(self._ca)


# ---------------------------------------------------------------------------
# schedule config


def schedule_from_config(obj: dict) -> Schedule:
    if not isinstance(obj, dict) or "mode" not in obj:
        raise SceneConfigError("schedule needs a 'mode' field")
    mode = obj["mode"]
    if mode == "rings":
        if set(obj) - {"mode", "layers"}:
            raise SceneConfigError("unknown fields in rings schedule")
        try:
            return Rings(int(obj["layers"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise SceneConfigError(f"bad rings schedule: {exc}") from exc
    if mode == "powers":
        if set(obj) - {"mode", "n", "corners"}:
            raise SceneConfigError("unknown fields in powers schedule")
        try:
            return Powers(int(obj["n"]), bool(obj.get("corners", False)))
        except (KeyError, TypeError, ValueError) as exc:
            raise SceneConfigError(f"bad powers schedule: {exc}") from exc
    raise SceneConfigError(f"unknown schedule mode {mode!r}")


def schedule_to_config(s: Schedule) -> dict:
    if isinstance(s, Rings):
        return {"mode": "rings", "layers": s.layers}
    if isinstance(s, Powers):
        return {"mode": "powers", "n": s.n, "corners": s.with_corners}
    raise SceneConfigError(f"unknown schedule {s!r}")
