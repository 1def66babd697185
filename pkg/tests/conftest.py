"""Shared fixtures: preset root data and spinor pairs."""

import pytest

from dirac_pairings.spin import spinor_modules
from dirac_pairings.weights import build_root_datum


@pytest.fixture(scope="session")
def sl2r():
    return build_root_datum("sl2R")


@pytest.fixture(scope="session")
def su21():
    return build_root_datum("su21")


@pytest.fixture(scope="session")
def sp4r():
    return build_root_datum("sp4R")


@pytest.fixture(scope="session", params=["sl2R", "su21", "sp4R"])
def preset(request):
    return build_root_datum(request.param)


@pytest.fixture(scope="session")
def sl2r_spinors(sl2r):
    return spinor_modules(sl2r)
