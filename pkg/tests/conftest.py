import os
from pathlib import Path
from typing import Callable, Union

import hypothesis
import pytest
from hypothesis import HealthCheck

from stringy_zeta.abstract import StratifiedResolution
from stringy_zeta.cli.commands import load_input
from stringy_zeta.surface import ResolutionGraph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# The acceptance suites need at least 100 random germs per property.
hypothesis.settings.register_profile(
    "ci",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
hypothesis.settings.register_profile("fast", parent=hypothesis.settings.get_profile("ci"), max_examples=5)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "ci"))


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


@pytest.fixture
def load_fixture() -> Callable[[str], Union[ResolutionGraph, StratifiedResolution]]:
    """Load fixtures/<name>.json as a germ or as stratified data."""

    def load(name: str) -> Union[ResolutionGraph, StratifiedResolution]:
        return load_input(fixture_path(name))

    return load


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
