"""Shared fixtures: the factor engine and the maximal-repetition set are
expensive enough to build once per session."""

import pytest

from dejean.constructions import z4_language
from dejean.verifier import compute_W


@pytest.fixture(scope="session")
def engine157():
    return z4_language(157)


@pytest.fixture(scope="session")
def w_set(engine157):
    return compute_W(155, engine=engine157)
