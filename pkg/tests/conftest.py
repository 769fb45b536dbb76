import time

import pytest

from arrlab.fixtures import family_path, load_arrangement
from arrlab.realization import SINGULAR, instantiate, load_family, sample_component
from arrlab.syzygy import resolution_summary


def _timed_summary(arr):
    t0 = time.perf_counter()
    s = resolution_summary(arr)
    return s, time.perf_counter() - t0


@pytest.fixture(scope="session")
def qa_summary():
    return _timed_summary(load_arrangement("qa"))


@pytest.fixture(scope="session")
def qb_summary():
    return _timed_summary(load_arrangement("qb"))


@pytest.fixture(scope="session")
def qb_plus_summary():
    return _timed_summary(load_arrangement("qb_plus"))


@pytest.fixture(scope="session")
def l1_summary():
    return _timed_summary(load_arrangement("l1"))


@pytest.fixture(scope="session")
def l2_summary():
    return _timed_summary(load_arrangement("l2"))


@pytest.fixture(scope="session")
def m1_family():
    return load_family(family_path("m1"))


@pytest.fixture(scope="session")
def m2_family():
    return load_family(family_path("m2"))


@pytest.fixture(scope="session")
def m1_samples(m1_family):
    """(component -> list of (arrangement, summary)) plus total wall time."""
    t0 = time.perf_counter()
    out = {}
    for comp, count in (("C1", 3), ("C2", 3), (SINGULAR, 2)):
        pts = sample_component(m1_family, comp, count, seed=7)
        rows = []
        for p in pts:
            arr = instantiate(m1_family, p)
            rows.append((arr, resolution_summary(arr)))
        out[comp] = rows
    return out, time.perf_counter() - t0


@pytest.fixture(scope="session")
def m2_samples(m2_family):
    t0 = time.perf_counter()
    out = {}
    for comp, count in (("curve", 1), ("x_plus", 1), ("x_minus", 1)):
        pts = sample_component(m2_family, comp, count, seed=3)
        rows = []
        for p in pts:
            arr = instantiate(m2_family, p)
            rows.append((arr, resolution_summary(arr)))
        out[comp] = rows
    return out, time.perf_counter() - t0
