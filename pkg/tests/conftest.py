import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import puiseux as pz


@pytest.fixture(scope="session")
def fg_5_7_23():
    """The four-generator numerical monoid used throughout the docs.

    The loader reduces 17 = 2*5 + 7 away, so the working atom set is
    {5, 7, 23}; see tests on minimal generators."""
    from fractions import Fraction as F

    return pz.spec_from_dict(
        {"kind": "finitely_generated", "atoms": ["5", "7", "17", "23"]}
    )


@pytest.fixture(scope="session")
def reciprocal():
    return pz.construct_reciprocal()


@pytest.fixture(scope="session")
def grams():
    return pz.construct_grams()


@pytest.fixture(scope="session")
def prop44_3():
    return pz.construct_prop44(3)
