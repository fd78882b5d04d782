import numpy as np
import pytest

from anacap.geometry import Disk, Polygon, Scene, scene


@pytest.fixture
def two_disks() -> Scene:
    return scene([Disk(2 + 0j, 1.0), Disk(-2 + 0j, 1.0)])


@pytest.fixture
def unit_square() -> Scene:
    return scene([Polygon((1 + 0j, 1j, -1 + 0j, -1j))])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


def random_points(rng, n, box=4.0, min_sep=0.5):
    pts = []
    while len(pts) < n:
        cand = complex(rng.uniform(-box, box), rng.uniform(-box, box))
        if all(abs(cand - p) > min_sep for p in pts):
            pts.append(cand)
    return pts
