"""Discrete analytic capacity of equal-radius disk configurations.

For centers Z = (z_1 .. z_n) and radius r, with C the Cauchy matrix
(c_jk = 1/(z_j - z_k) off the diagonal) and D = r*I, the discrete capacity is

    lambda(Z, r) = < (D^{-1} + C D C^H)^{-1} 1, 1 >,

which sandwiches the true capacity gamma(Z, r) of the disk union between
gamma/(1 + 4N) and (1 + 2M)*gamma whenever the doubled disks are disjoint.
The quadratic forms

    alpha = < C C^H 1, 1 >,    beta = < (C C^H)^2 1, 1 >

control the polynomial bracket n r - alpha r^3 <= lambda <= n r - alpha r^3
+ beta r^5 and the small-r ratio expansion R = 1 - (delta/n) r^2 + O(r^3)
with delta = alpha(Z) - alpha(Z') - alpha(Z'') > 0.  alpha also has a purely
geometric expression: the inverse-square pair distances plus the inverse
squares of circumscribed-circle radii over all triples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    DuplicateCenterError,
    PreconditionError,
    SolveError,
    SplitError,
)

_IMAG_TOL = 1e-12


@dataclass(frozen=True)
class DiskConfiguration:
    """Equal-radius disk centers with an optional split into a leading block
    Z' = Z[:m] and trailing block Z'' = Z[m:]."""

    centers: tuple[complex, ...]
    radius: float
    m: int | None = None

    def __post_init__(self):
        if not self.centers:
            raise DuplicateCenterError("need at least one center")
        if self.radius <= 0:
            raise PreconditionError(f"radius must be positive, got {self.radius}")
        if self.m is not None and not (1 <= self.m <= len(self.centers) - 1):
            raise SplitError(f"split m={self.m} invalid for n={len(self.centers)}")

    @property
    def n(self) -> int:
        return len(self.centers)

    def min_center_distance(self) -> float:
        z = np.asarray(self.centers, complex)
        if len(z) == 1:
            return math.inf
        d = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(d, math.inf)
        return float(d.min())


@dataclass(frozen=True)
class DiscreteReport:
    lam: float
    M: float
    N: float
    alpha: float
    beta: float
    delta: float | None
    poly_lower: float
    poly_upper: float

    def to_json_dict(self) -> dict:
        out = {"lambda": self.lam, "M": self.M, "N": self.N, "alpha": self.alpha,
               "beta": self.beta, "poly_lower": self.poly_lower,
               "poly_upper": self.poly_upper}
        if self.delta is not None:
            out["delta"] = self.delta
        return out


def _centers_array(Z) -> np.ndarray:
    z = np.asarray(list(Z), complex)
    if z.size > 1:
        d = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(d, np.inf)
        if d.min() == 0.0:
            raise DuplicateCenterError("coincident centers")
    return z


def cauchy_matrix(Z) -> np.ndarray:
    """C with c_jk = 1/(z_j - z_k) for j != k and zero diagonal."""
    z = _centers_array(Z)
    n = len(z)
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    C = 1.0 / diff
    np.fill_diagonal(C, 0.0)
    return C if n > 1 else np.zeros((1, 1), complex)


def lambda_discrete(Z, r: float) -> float:
    """lambda(Z, r) via the Hermitian positive-definite matrix form."""
    if r <= 0:
        raise PreconditionError(f"radius must be positive, got {r}")
    C = cauchy_matrix(Z)
    n = C.shape[0]
    A = (1.0 / r) * np.eye(n) + r * (C @ C.conj().T)
    ones = np.ones(n, complex)
    try:
        x = scipy.linalg.solve(A, ones, assume_a="pos", check_finite=False)
    except scipy.linalg.LinAlgError as exc:
        raise SolveError(f"discrete capacity solve failed: {exc}") from exc
    val = np.vdot(ones, x)
    if abs(val.imag) > _IMAG_TOL * max(1.0, abs(val.real)):
        raise SolveError(f"lambda has non-negligible imaginary part {val.imag}")
    return float(val.real)


def melnikov_M(Z, r: float) -> float:
    """M = r^4 sum_k sum_{j != k} |z_k - z_j|^{-4}."""
    z = _centers_array(Z)
    if len(z) == 1:
        return 0.0
    d = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(d, np.inf)
    return float(r ** 4 * np.sum(d ** -4.0))


def melnikov_N(Z, r: float) -> float:
    """N = r (sum |z_k - z_j|^{-2})^{1/2} M^{1/2}."""
    z = _centers_array(Z)
    if len(z) == 1:
        return 0.0
    d = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(d, np.inf)
    s2 = float(np.sum(d ** -2.0))
    return r * math.sqrt(s2) * math.sqrt(melnikov_M(Z, r))


def alpha(Z) -> float:
    """alpha = <C C^H 1, 1> = |C^H 1|^2 (real and non-negative)."""
    C = cauchy_matrix(Z)
    v = C.conj().T @ np.ones(C.shape[0], complex)
    return float(np.vdot(v, v).real)


def beta(Z) -> float:
    """beta = <(C C^H)^2 1, 1> = |C C^H 1|^2."""
    C = cauchy_matrix(Z)
    w = C @ (C.conj().T @ np.ones(C.shape[0], complex))
    return float(np.vdot(w, w).real)


def alpha_geometric(Z) -> float:
    """alpha as pair distances plus circumradius terms:

        alpha = sum_{j != l} |z_j - z_l|^{-2} + sum_{j<k<l} R(z_j,z_k,z_l)^{-2},

    with R the circumscribed-circle radius, infinite for collinear triples.
    """
    z = _centers_array(Z)
    n = len(z)
    if n == 1:
        return 0.0
    d = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(d, np.inf)
    total = float(np.sum(d ** -2.0))
    diam = float(np.max(np.where(np.isfinite(d), d, 0.0))) or 1.0
    area_floor = 1e-14 * diam * diam
    for j in range(n):
        for k in range(j + 1, n):
            for l in range(k + 1, n):
                a = abs(z[k] - z[j])
                b = abs(z[l] - z[j])
                c = abs(z[l] - z[k])
                S = 0.5 * abs(((z[k] - z[j]).conjugate() * (z[l] - z[j])).imag)
                if S < area_floor:
                    continue  # collinear: R = infinity
                total += (4.0 * S / (a * b * c)) ** 2  # = 1/R^2 with R = abc/(4S)
    return total


def delta(Z, m: int) -> float:
    """delta = alpha(Z) - alpha(Z[:m]) - alpha(Z[m:]); strictly positive."""
    Z = list(Z)
    if not (1 <= m <= len(Z) - 1):
        raise SplitError(f"split m={m} invalid for n={len(Z)}")
    val = alpha(Z) - alpha(Z[:m]) - alpha(Z[m:])
    if val <= 0:
        raise SolveError(f"delta must be positive, got {val}")
    return val


def lambda_poly_bounds(Z, r: float) -> tuple[float, float]:
    """(n r - alpha r^3,  n r - alpha r^3 + beta r^5)."""
    n = len(list(Z))
    a = alpha(Z)
    b = beta(Z)
    lo = n * r - a * r ** 3
    return lo, lo + b * r ** 5


def predicted_slope(Z, m: int) -> float:
    """The coefficient delta/n in R(Z, r, m) = 1 - (delta/n) r^2 + O(r^3)."""
    return delta(Z, m) / len(list(Z))


def sandwich_check(Z, r: float, gamma_lower: float, gamma_upper: float,
                   slack: float = 0.0) -> bool:
    """Check gamma/(1+4N) <= lambda <= (1+2M) gamma against a certified
    bracket [gamma_lower, gamma_upper]; requires 4r-separated centers."""
    z = _centers_array(Z)
    if len(z) > 1:
        d = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(d, np.inf)
        if d.min() <= 4.0 * r:
            raise PreconditionError(
                f"doubled disks overlap: min center distance {d.min()} <= 4r = {4 * r}")
    lam = lambda_discrete(Z, r)
    M = melnikov_M(Z, r)
    N = melnikov_N(Z, r)
    return (gamma_lower / (1.0 + 4.0 * N) <= lam + slack
            and lam <= (1.0 + 2.0 * M) * gamma_upper + slack)


def discrete_report(cfg: DiskConfiguration) -> DiscreteReport:
    Z, r = cfg.centers, cfg.radius
    lo, hi = lambda_poly_bounds(Z, r)
    return DiscreteReport(
        lam=lambda_discrete(Z, r),
        M=melnikov_M(Z, r),
        N=melnikov_N(Z, r),
        alpha=alpha(Z),
        beta=beta(Z),
        delta=delta(Z, cfg.m) if cfg.m is not None and cfg.n > 1 else None,
        poly_lower=lo,
        poly_upper=hi,
    )
