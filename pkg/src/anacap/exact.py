"""Closed-form reference values: Jacobi theta functions, the two-disk
capacity, the square constant, and the ratio functions of the two-disk
subadditivity analysis.

Theta functions are evaluated by their rapidly convergent q-series

    theta2(q) = sum_n q^{(n+1/2)^2},   theta3(q) = sum_n q^{n^2},
    theta4(q) = sum_n (-1)^n q^{n^2},

with the classical product forms available as an independent second path.
Near q = 1 (q > 0.99) the series converge slowly and evaluation is routed
through the Jacobi modular identities

    theta2(e^{-pi/x}) = sqrt(x) theta4(e^{-pi x}),
    theta3(e^{-pi/x}) = sqrt(x) theta3(e^{-pi x}),
    theta4(e^{-pi/x}) = sqrt(x) theta2(e^{-pi x}).

For two disks of radius r centered at +-c (0 < r < c) the capacity is exactly

    gamma = sqrt(c^2 - r^2) * theta2(q)^2,
    c/r   = (q^{-1/2} + q^{1/2}) / 2,

and equivalently, through k = theta2(q)^2/theta3(q)^2 and the complete
elliptic integral F of the first kind (Murai's formula, with the corrected
factor c):

    gamma = (2/pi) c k F(k) tanh((pi/2) F(sqrt(1-k^2)) / F(k)).
"""

from __future__ import annotations

import math

from .errors import DomainError

# Gamma(1/4) to 20 significant digits
GAMMA_QUARTER = 3.6256099082219083119

_MODULAR_SWITCH = 0.99
_REL = 1e-16


def _check_q(q: float) -> None:
    if not (0.0 < q < 1.0):
        raise DomainError(f"nome q must lie in (0, 1), got {q}")


def theta2(q: float) -> float:
    _check_q(q)
    if q > _MODULAR_SWITCH:
        # theta2(q) = sqrt(x) theta4(e^{-pi x}); for q > 0.99 the transformed
        # nome e^{-pi x} underflows, so theta4 there is 1 to all precision
        x = math.pi / (-math.log(q))
        return math.sqrt(x)
    s = 0.0
    n = 0
    while True:
        t = q ** ((n + 0.5) ** 2)
        s += t
        if n > 1 and t < _REL * s:
            break
        n += 1
    return 2.0 * s


def theta3(q: float) -> float:
    _check_q(q)
    if q > _MODULAR_SWITCH:
        x = math.pi / (-math.log(q))
        return math.sqrt(x)  # theta3(e^{-pi x}) = 1 to all precision here
    s = 1.0
    n = 1
    while True:
        t = q ** (n * n)
        s += 2.0 * t
        if n > 1 and t < _REL * s:
            break
        n += 1
    return s


def theta4(q: float) -> float:
    _check_q(q)
    if q > 0.8:
        # the alternating series cancels catastrophically as q -> 1 (the
        # value decays like e^{-pi x/4} while the terms stay O(1)), so switch
        # to the modular side early: theta4(q) = sqrt(x) theta2(e^{-pi x})
        # with theta2(qq) = 2 qq^{1/4} to all precision for q > 0.8, written
        # in log form since qq itself can underflow
        x = math.pi / (-math.log(q))
        return math.sqrt(x) * 2.0 * math.exp(-0.25 * math.pi * x)
    s = 1.0
    n = 1
    sign = -1.0
    while True:
        t = q ** (n * n)
        s += 2.0 * sign * t
        if n > 1 and t < _REL * abs(s):
            break
        n += 1
        sign = -sign
    return s


def theta2_product(q: float) -> float:
    """theta2 via 2 q^{1/4} prod (1-q^{2n})(1+q^{2n})^2."""
    _check_q(q)
    p = 2.0 * q ** 0.25
    n = 1
    while True:
        f = (1.0 - q ** (2 * n)) * (1.0 + q ** (2 * n)) ** 2
        p *= f
        if abs(f - 1.0) < _REL:
            break
        n += 1
    return p


def theta3_product(q: float) -> float:
    """theta3 via prod (1-q^{2n})(1+q^{2n-1})^2."""
    _check_q(q)
    p = 1.0
    n = 1
    while True:
        f = (1.0 - q ** (2 * n)) * (1.0 + q ** (2 * n - 1)) ** 2
        p *= f
        if abs(f - 1.0) < _REL:
            break
        n += 1
    return p


def theta4_product(q: float) -> float:
    """theta4 via prod (1-q^{2n})(1-q^{2n-1})^2."""
    _check_q(q)
    p = 1.0
    n = 1
    while True:
        f = (1.0 - q ** (2 * n)) * (1.0 - q ** (2 * n - 1)) ** 2
        p *= f
        if abs(f - 1.0) < _REL:
            break
        n += 1
    return p


def nome_from_geometry(c: float, r: float) -> float:
    """The nome q in (0,1) with c/r = (q^{-1/2} + q^{1/2})/2.

    Algebraically q = (2c^2 - r^2 - 2c sqrt(c^2 - r^2))/r^2; computed in the
    rationalized form q = r^2 / (2c^2 - r^2 + 2c sqrt(c^2 - r^2)), which is
    identical and avoids cancellation for r << c.
    """
    if not (0.0 < r < c):
        raise DomainError(f"need 0 < r < c, got r={r}, c={c}")
    return r * r / (2.0 * c * c - r * r + 2.0 * c * math.sqrt(c * c - r * r))


def two_disk_capacity(c: float, r: float) -> float:
    """Exact capacity of two radius-r disks centered at -c and +c."""
    q = nome_from_geometry(c, r)
    return math.sqrt(c * c - r * r) * theta2(q) ** 2


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean, iterated to 1e-15 relative agreement."""
    while abs(a - b) > 1e-15 * abs(a):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_F(k: float) -> float:
    """Complete elliptic integral of the first kind, modulus k in [0, 1)."""
    if not (0.0 <= k < 1.0):
        raise DomainError(f"modulus k must lie in [0, 1), got {k}")
    return math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - k * k)))


def murai_capacity(c: float, r: float) -> float:
    """Two-disk capacity via elliptic integrals; agrees with the theta form."""
    q = nome_from_geometry(c, r)
    k = theta2(q) ** 2 / theta3(q) ** 2
    F = elliptic_F(k)
    Fp = elliptic_F(math.sqrt(1.0 - k * k))
    return (2.0 / math.pi) * c * k * F * math.tanh(0.5 * math.pi * Fp / F)


def square_capacity(s: float = 1.0) -> float:
    """Capacity of the square with half-diagonal s: s*sqrt(2)*Gamma(1/4)^2/(4 pi^{3/2})."""
    if not s > 0:
        raise DomainError(f"half-diagonal must be positive, got {s}")
    return s * math.sqrt(2.0) * GAMMA_QUARTER ** 2 / (4.0 * math.pi ** 1.5)


def ratio_f(q: float) -> float:
    """The two-disk capacity ratio f(q) = (q^{-1/2} - q^{1/2}) theta2(q)^2 / 4.

    Evaluated through the product form (1-q) prod (1-q^{4n})^2 (1+q^{2n})^2
    (cross-checked against the theta form), and through the modular form
    (x/2) sinh(pi/2x) theta4(e^{-pi x})^2 for q close to 1.
    """
    _check_q(q)
    if q > 0.9:
        x = math.pi / (-math.log(q))
        qq = math.exp(-math.pi * x)
        t4 = theta4(qq) if qq > 0.0 else 1.0
        return 0.5 * x * math.sinh(0.5 * math.pi / x) * t4 ** 2
    prod = 1.0 - q
    n = 1
    while True:
        f = (1.0 - q ** (4 * n)) ** 2 * (1.0 + q ** (2 * n)) ** 2
        prod *= f
        if abs(f - 1.0) < _REL:
            break
        n += 1
    series = 0.25 * (1.0 / math.sqrt(q) - math.sqrt(q)) * theta2(q) ** 2
    if abs(series - prod) > 1e-12 * max(1.0, abs(prod)):
        raise ArithmeticError(
            f"ratio_f forms disagree at q={q}: {prod} vs {series}")
    return prod


def log_deriv_u(q: float, terms: int = 64) -> float:
    """u(q) = q f'(q)/f(q) as a partial sum of its Lambert-type series:

        u(q) = -q/(1-q) - sum 8 n q^{4n}/(1-q^{4n}) + sum 4 n q^{2n}/(1+q^{2n}).
    """
    _check_q(q)
    if terms < 1:
        raise DomainError("terms must be >= 1")
    val = -q / (1.0 - q)
    for n in range(1, terms + 1):
        q4n = q ** (4 * n)
        q2n = q ** (2 * n)
        val += -8.0 * n * q4n / (1.0 - q4n) + 4.0 * n * q2n / (1.0 + q2n)
    return val


def log_deriv_u_upper(q: float, terms: int = 64) -> float:
    """A certified upper bound for u(q): the partial sum plus the geometric
    tail bound of the (positive) third series,

        sum_{n>=k} 4 n q^{2n} = 4 q^{2k} (k - (k-1) q^2) / (1-q^2)^2,

    while dropping the tail of the negative series only increases the value.
    """
    val = log_deriv_u(q, terms)
    k = terms + 1
    q2 = q * q
    tail = 4.0 * q2 ** k * (k - (k - 1) * q2) / (1.0 - q2) ** 2
    return val + tail
