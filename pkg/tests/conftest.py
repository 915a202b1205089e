import os
import sys

import hypothesis
import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from dominion_lab.laws import monoids_of_order  # noqa: E402
from dominion_lab.monoid import cyclic, monogenic, nine_element, trivial  # noqa: E402

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL = [M for k in range(1, 5) for M in monoids_of_order(k)]


def small_monoids():
    return st.sampled_from(SMALL)


def elements_of(M):
    return st.integers(0, M.order - 1)


@pytest.fixture
def B9():
    return nine_element()


@pytest.fixture
def C3():
    return cyclic(3)


@pytest.fixture
def named_monoids():
    return [trivial(), cyclic(2), cyclic(3), monogenic(1, 1), monogenic(2, 1), monogenic(1, 2), nine_element()]
