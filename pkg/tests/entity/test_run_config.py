import pytest
from pydantic import ValidationError

from lib.core.entity.models import LeftBoundaryEnum
from lib.core.entity.run_config import PipelineEnum, RunConfig, expand_pipelines


@pytest.mark.parametrize(
    "requested, expected",
    [
        ([PipelineEnum.ALL], ["validate", "hardy", "bounds", "eigen", "ctmc"]),
        ([], ["validate"]),
        ([PipelineEnum.HARDY], ["validate", "hardy"]),
        ([PipelineEnum.CTMC], ["validate", "hardy", "ctmc"]),
        ([PipelineEnum.EIGEN, PipelineEnum.BOUNDS], ["validate", "hardy", "bounds", "eigen"]),
        ([PipelineEnum.VALIDATE, PipelineEnum.VALIDATE], ["validate"]),
    ],
)
def test_expand_pipelines(requested: list[PipelineEnum], expected: list[str]) -> None:
    assert [pipeline.value for pipeline in expand_pipelines(requested)] == expected


def test_defaults() -> None:
    config = RunConfig.model_validate({"rates": [2.0, -3.0, 1.0]})
    assert config.pipelines == [PipelineEnum.ALL]
    assert config.seed == 0
    assert config.outputs.report == "report.json"
    assert config.outputs.generator is None
    assert config.tolerances.hardy_rel_tol is None
    assert config.law_rates() == [2.0, -3.0, 1.0]


def test_law_families() -> None:
    birth_death = RunConfig.model_validate({"birth_death": {"a": 2.0, "b": 1.0}})
    assert birth_death.law_rates() == [2.0, -3.0, 1.0]

    skip2 = RunConfig.model_validate({"skip2": {"b0": 1.0, "b2": 0.3, "b3": 0.3}})
    assert skip2.law_rates() == pytest.approx([1.0, -1.6, 0.3, 0.3])


@pytest.mark.parametrize(
    "payload",
    [
        {},
        {"rates": [2.0, -3.0, 1.0], "birth_death": {"a": 2.0, "b": 1.0}},
        {"birth_death": {"a": 2.0, "b": 1.0}, "skip2": {"b0": 1.0, "b2": 0.3, "b3": 0.3}},
    ],
)
def test_exactly_one_law(payload: dict) -> None:
    with pytest.raises(ValidationError):
        RunConfig.model_validate(payload)


@pytest.mark.parametrize(
    "payload",
    [
        {"rates": [2.0, -3.0, 1.0], "seed": -1},
        {"rates": [2.0, -3.0, 1.0], "seed": 2**64},
        {"rates": [2.0, -3.0, 1.0], "pipelines": ["spectrum"]},
        {"rates": [2.0, -3.0, 1.0], "unknown": 1},
        {"rates": [2.0, -3.0, 1.0], "tolerances": {"curve_points": 1}},
        {"rates": [2.0, -3.0, 1.0], "tolerances": {"ctmc_n_start": 5}},
        {"birth_death": {"a": 0.0, "b": 1.0}},
        {"skip2": {"b0": 1.0, "b2": 0.3, "b3": 0.0}},
    ],
)
def test_invalid_configs(payload: dict) -> None:
    with pytest.raises(ValidationError):
        RunConfig.model_validate(payload)


def test_largest_seed_and_overrides() -> None:
    config = RunConfig.model_validate(
        {
            "rates": [1.0, -1.6, 0.3, 0.3],
            "seed": 2**64 - 1,
            "pipelines": ["hardy", "ctmc"],
            "tolerances": {"left_boundary": "dirichlet", "monte_carlo_paths": 0},
            "outputs": {"phi": None, "generator": "generator.txt"},
        }
    )
    assert config.seed == 2**64 - 1
    assert config.pipelines == [PipelineEnum.HARDY, PipelineEnum.CTMC]
    assert config.tolerances.left_boundary == LeftBoundaryEnum.DIRICHLET
    assert config.tolerances.monte_carlo_paths == 0
    assert config.outputs.phi is None
    assert config.outputs.generator == "generator.txt"
