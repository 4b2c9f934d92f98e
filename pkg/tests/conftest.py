import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from arithfrieze.disc import Bridging, DiscArc, DiscTriangulation, enumerate_triangulations  # noqa: E402
from arithfrieze.strip import phi  # noqa: E402
from reference_data import EXAMPLE_ARCS, SECOND_ARCS  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def build_disc(n, spec):
    arcs = []
    for a in spec:
        arcs.append(Bridging(a[1]) if a[0] == "bridging" else DiscArc(a[1], a[2]))
    return DiscTriangulation(n, frozenset(arcs))


_ENUM = {}


def all_triangulations(max_n):
    out = []
    for n in range(1, max_n + 1):
        if n not in _ENUM:
            _ENUM[n] = enumerate_triangulations(n)
        out.extend(_ENUM[n])
    return out


@pytest.fixture(scope="session")
def example_disc():
    return build_disc(5, EXAMPLE_ARCS)


@pytest.fixture(scope="session")
def second_disc():
    return build_disc(5, SECOND_ARCS)


@pytest.fixture(scope="session")
def example_strip(example_disc):
    return phi(example_disc)


@pytest.fixture(scope="session")
def second_strip(second_disc):
    return phi(second_disc)


@pytest.fixture(scope="session")
def loop_disc():
    return build_disc(2, (("bridging", 1), ("peripheral", 1, 1)))
