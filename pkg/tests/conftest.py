import json
from pathlib import Path
from typing import Any, Callable, Dict

import pytest
from faker import Faker

import lib
from lib.core.entity.models import BranchingLaw
from lib.core.numerics.law import validate_law
from lib.infrastructure.config.containers import ApplicationContainer
from tests.fixtures.factory.law_factory import LawFactory


# set autouse=True to automatically inject the container into all tests
@pytest.fixture(scope="session")
def app_initialization_container() -> ApplicationContainer:
    container = ApplicationContainer()
    container.init_resources()
    container.wire(modules=[lib])
    return container


@pytest.fixture(scope="function")
def fake() -> Faker:
    fake = Faker()
    fake.seed_instance(4242)
    return fake


@pytest.fixture(scope="function")
def law_factory() -> LawFactory:
    return LawFactory()


@pytest.fixture(scope="session")
def birth_death_law() -> BranchingLaw:
    return validate_law([2.0, -3.0, 1.0])


@pytest.fixture(scope="session")
def skip2_law() -> BranchingLaw:
    return validate_law([1.0, -1.6, 0.3, 0.3])


@pytest.fixture(scope="session")
def supercritical_law() -> BranchingLaw:
    return validate_law([1.0, -2.5, 1.0, 0.5])


@pytest.fixture(scope="session")
def critical_law() -> BranchingLaw:
    return validate_law([1.0, -2.0, 1.0])


@pytest.fixture(scope="function")
def write_run_config(tmp_path: Path) -> Callable[..., str]:
    """
    Writes a run configuration to a temporary file and returns its path.
    """

    def _write(config: Dict[str, Any], name: str = "config.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(config), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture(scope="function")
def output_dir(tmp_path: Path) -> str:
    return str(tmp_path / "out")
