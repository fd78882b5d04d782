"""Subadditivity experiments: certified ratio brackets, radius sweeps, and
machine-checkable verdicts.

For a disk configuration split into E (first m centers) and F (the rest), the
quantity of interest is R = gamma(E u F)/(gamma(E) + gamma(F)).  Each sweep
point produces a certified interval

    [ef.lower/(e.upper + f.upper),  ef.upper/(e.lower + f.lower)]

containing R.  Verdicts between adjacent radii compare intervals, never
midpoints: a decrease (or increase) is only certified when the brackets are
disjoint in the corresponding order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import discrete
from .basis import Rings, Schedule
from .discrete import DiskConfiguration
from .errors import OverlapError, SplitError
from .geometry import Disk, Scene
from .quadrature import QuadratureSettings
from .solver import BoundsResult, gamma_bounds

CSV_COLUMNS = ("r", "ratio_low", "ratio_high", "gamma_ef_low", "gamma_ef_high",
               "gamma_e_low", "gamma_e_high", "gamma_f_low", "gamma_f_high",
               "n_basis", "wall_time_s")

CERTIFIED_DECREASE = "CERTIFIED_DECREASE"
CERTIFIED_INCREASE = "CERTIFIED_INCREASE"
UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class SweepRecord:
    r: float
    ratio_low: float
    ratio_high: float
    ef: BoundsResult
    e: BoundsResult
    f: BoundsResult
    error: str | None = None

    @property
    def gap(self) -> float:
        return self.ratio_high - self.ratio_low

    @property
    def subadditive_certified(self) -> bool:
        return self.error is None and self.ratio_high < 1.0


@dataclass(frozen=True)
class Verdict:
    pair_verdicts: tuple[str, ...]
    n_decrease: int
    n_increase: int
    n_undecided: int
    subadditive_flags: tuple[bool, ...]

    @property
    def all_decreasing(self) -> bool:
        return self.n_increase == 0 and self.n_undecided == 0

    def to_json_dict(self) -> dict:
        return {
            "certified_decrease": self.n_decrease,
            "certified_increase": self.n_increase,
            "undecided": self.n_undecided,
            "subadditive_certified": sum(self.subadditive_flags),
            "records": len(self.subadditive_flags),
        }


def _scene_for(centers, r: float) -> Scene:
    shapes = tuple(Disk(c, r) for c in centers)
    return Scene(shapes, ("E",) * len(shapes))


def ratio_bounds(cfg: DiskConfiguration, schedule: Schedule,
                 settings: QuadratureSettings | None = None) -> SweepRecord:
    """Certified bracket for gamma(E u F)/(gamma(E) + gamma(F))."""
    if cfg.m is None:
        raise SplitError("configuration needs a split index m")
    if cfg.n >= 2 and cfg.min_center_distance() <= 2.0 * cfg.radius:
        raise OverlapError(
            f"disks of radius {cfg.radius} overlap at spacing {cfg.min_center_distance()}")
    ef = gamma_bounds(_scene_for(cfg.centers, cfg.radius), schedule, settings)
    e = gamma_bounds(_scene_for(cfg.centers[: cfg.m], cfg.radius), schedule, settings)
    f = gamma_bounds(_scene_for(cfg.centers[cfg.m:], cfg.radius), schedule, settings)
    return SweepRecord(
        r=cfg.radius,
        ratio_low=ef.lower / (e.upper + f.upper),
        ratio_high=ef.upper / (e.lower + f.lower),
        ef=ef, e=e, f=f,
    )


def max_sweep_radius(centers) -> float:
    """Largest usable radius: just under half the minimal center spacing."""
    cfg = DiskConfiguration(tuple(centers), 1.0)
    return 0.999 * cfg.min_center_distance() / 2.0


def sweep(centers, m: int, r_grid, schedule: Schedule,
          settings: QuadratureSettings | None = None,
          threads: int = 1) -> list[SweepRecord]:
    """One certified ratio record per radius, in grid order.

    A radius that fails (overlap, numerical error) yields an error record
    rather than being dropped.  Results are independent of ``threads``.
    """
    centers = tuple(complex(c) for c in centers)
    if not (1 <= m <= len(centers) - 1):
        raise SplitError(f"split m={m} invalid for n={len(centers)}")
    r_grid = [float(r) for r in r_grid]
    cap = max_sweep_radius(centers)

    def one(r: float) -> SweepRecord:
        if r > cap:
            return _error_record(r, f"radius {r} exceeds sweep cap {cap}")
        try:
            return ratio_bounds(DiskConfiguration(centers, r, m), schedule, settings)
        except Exception as exc:  # recorded per spec, not dropped
            return _error_record(r, f"{type(exc).__name__}: {exc}")

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, r_grid))
    return [one(r) for r in r_grid]


def _error_record(r: float, msg: str) -> SweepRecord:
    nanres = BoundsResult(math.nan, math.nan, 0, math.nan, 0.0, math.nan)
    return SweepRecord(r, math.nan, math.nan, nanres, nanres, nanres, error=msg)


def monotonicity_verdict(records: list[SweepRecord]) -> Verdict:
    """Interval comparison of adjacent records (sorted by r)."""
    pairs = []
    for a, b in zip(records, records[1:]):
        if a.error or b.error:
            pairs.append(UNDECIDED)
        elif b.ratio_high < a.ratio_low:
            pairs.append(CERTIFIED_DECREASE)
        elif b.ratio_low > a.ratio_high:
            pairs.append(CERTIFIED_INCREASE)
        else:
            pairs.append(UNDECIDED)
    return Verdict(
        pair_verdicts=tuple(pairs),
        n_decrease=pairs.count(CERTIFIED_DECREASE),
        n_increase=pairs.count(CERTIFIED_INCREASE),
        n_undecided=pairs.count(UNDECIDED),
        subadditive_flags=tuple(rec.subadditive_certified for rec in records),
    )


def gap_report(records: list[SweepRecord]) -> float:
    """Largest certified-bracket width over the records."""
    if not records:
        raise ValueError("no records")
    return max(rec.gap for rec in records if rec.error is None)


@dataclass(frozen=True)
class AsymptoticReport:
    radii: tuple[float, ...]
    ratio_mid: tuple[float, ...]
    fitted_slope: float
    predicted: float
    rel_deviation: float


def asymptotic_check(centers, m: int, schedule: Schedule,
                     settings: QuadratureSettings | None = None,
                     r0: float | None = None, levels: int = 6) -> AsymptoticReport:
    """Fit the quadratic coefficient of 1 - R over r_k = r0 2^{-k} and compare
    with the predicted small-radius slope delta/n."""
    centers = tuple(complex(c) for c in centers)
    if r0 is None:
        r0 = 0.25 * max_sweep_radius(centers)
    radii = [r0 * 2.0 ** (-k) for k in range(levels)]
    mids = []
    for r in radii:
        rec = ratio_bounds(DiskConfiguration(centers, r, m), schedule, settings)
        mids.append(0.5 * (rec.ratio_low + rec.ratio_high))
    slope = fit_quadratic_slope(radii, mids)
    pred = discrete.predicted_slope(centers, m)
    return AsymptoticReport(tuple(radii), tuple(mids), slope, pred,
                            abs(slope - pred) / pred)


def fit_quadratic_slope(radii, ratio_values) -> float:
    """Least squares fit of (1 - R)/r^2 = C + D r^2; returns C."""
    r = np.asarray(radii, float)
    y = (1.0 - np.asarray(ratio_values, float)) / r ** 2
    A = np.stack([np.ones_like(r), r ** 2], axis=1)
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    return float(coef[0])


# ---------------------------------------------------------------------------
# output formatting


def format_float(x: float) -> str:
    return format(x, ".17g")


def records_to_csv(records: list[SweepRecord]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for rec in records:
        row = (rec.r, rec.ratio_low, rec.ratio_high,
               rec.ef.lower, rec.ef.upper, rec.e.lower, rec.e.upper,
               rec.f.lower, rec.f.upper)
        cells = [format_float(x) for x in row]
        cells.append(str(rec.ef.n_basis))
        cells.append(format_float(rec.ef.wall_time + rec.e.wall_time + rec.f.wall_time))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def random_configuration(n: int, seed: int, spread: float = 10.0) -> tuple[complex, ...]:
    """Seeded random centers with pairwise spacing at least ~spread/n."""
    rng = np.random.default_rng(seed)
    min_sep = spread / n
    pts: list[complex] = []
    while len(pts) < n:
        cand = complex(rng.uniform(0, spread), rng.uniform(0, spread))
        if all(abs(cand - p) > min_sep for p in pts):
            pts.append(cand)
    return tuple(pts)


def default_schedule() -> Rings:
    return Rings(4)
