import logging

import pytest

import arithring
from arithring.utils import track


@pytest.fixture
def verbosity():
    level = arithring.settings.verbosity
    yield
    arithring.settings.verbosity = level


def test_track_styles(verbosity):
    arithring.settings.verbosity = logging.INFO
    candidates = [2, 3, 5, 7]
    assert list(track(candidates, description="Search", style="tqdm")) == candidates
    assert list(track(candidates, description="Search", style="rich")) == candidates
    assert list(track(iter(candidates), style="tqdm", total=4)) == candidates


def test_track_passthrough(verbosity):
    candidates = range(10)
    assert track(candidates, disable=True) is candidates
    arithring.settings.verbosity = logging.WARNING
    assert track(candidates) is candidates


def test_track_bad_style():
    with pytest.raises(ValueError):
        track([1], style="bars")
