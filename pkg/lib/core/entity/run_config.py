from enum import Enum
from typing import List

from pydantic import ConfigDict, Field, model_validator

from lib.core.entity.models import BaseQMBPModel, LeftBoundaryEnum
from lib.core.numerics.law import rates_from_family


class PipelineEnum(Enum):
    """
    Enum for the pipelines a run can execute. ALL stands for every other pipeline.
    """

    VALIDATE = "validate"
    HARDY = "hardy"
    BOUNDS = "bounds"
    EIGEN = "eigen"
    CTMC = "ctmc"
    ALL = "all"


PIPELINE_ORDER = (PipelineEnum.VALIDATE, PipelineEnum.HARDY, PipelineEnum.BOUNDS, PipelineEnum.EIGEN, PipelineEnum.CTMC)


def expand_pipelines(requested: List[PipelineEnum]) -> List[PipelineEnum]:
    """
    Adds the pipelines the requested ones depend on and sorts them in execution order. The law is always validated
    and every numerical pipeline needs the Hardy index for its consistency checks.
    """
    selected = set(requested)
    if PipelineEnum.ALL in selected:
        selected = set(PIPELINE_ORDER)
    selected.add(PipelineEnum.VALIDATE)
    if selected & {PipelineEnum.BOUNDS, PipelineEnum.EIGEN, PipelineEnum.CTMC}:
        selected.add(PipelineEnum.HARDY)
    return [pipeline for pipeline in PIPELINE_ORDER if pipeline in selected]


class RunConfigModel(BaseQMBPModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class BirthDeathFamily(RunConfigModel):
    a: float = Field(description="Death rate b_0.", gt=0)
    b: float = Field(description="Birth rate b_2.", gt=0)


class Skip2Family(RunConfigModel):
    b0: float = Field(description="Death rate.", gt=0)
    b2: float = Field(description="Rate of jumps by +1.", ge=0)
    b3: float = Field(description="Rate of jumps by +2.", gt=0)


class TolerancesConfig(RunConfigModel):
    """
    Per-run overrides of the module defaults configured in config.yaml. None keeps the default.
    """

    hardy_rel_tol: float | None = Field(default=None, gt=0)
    curve_points: int | None = Field(default=None, ge=2)
    eigen_target_rel_tol: float | None = Field(default=None, gt=0)
    eigen_rtol: float | None = Field(default=None, gt=0)
    left_boundary: LeftBoundaryEnum | None = None
    ctmc_tol: float | None = Field(default=None, gt=0)
    ctmc_n_start: int | None = Field(default=None, ge=10)
    ctmc_n_max: int | None = Field(default=None, ge=10)
    ctmc_agreement: float | None = Field(default=None, gt=0)
    monte_carlo_paths: int | None = Field(default=None, ge=0)


class OutputsConfig(RunConfigModel):
    """
    File names, relative to the output directory. A curve whose name is None is not written.
    """

    report: str = "report.json"
    phi: str | None = "phi.csv"
    eigfun: str | None = "eigfun.csv"
    survival: str | None = "survival.csv"
    survival_monte_carlo: str | None = "survival_mc.csv"
    generator: str | None = None


class RunConfig(RunConfigModel):
    """
    The JSON configuration of a run. Exactly one of rates, birth_death and skip2 describes the law.

    @param rates: explicit rates b_0..b_J_max
    @param birth_death: the law (a, -(a + b), b)
    @param skip2: the law (b0, -(b0 + b2 + b3), b2, b3)
    @param pipelines: the pipelines to run
    @param tolerances: overrides of the module defaults
    @param outputs: output file names
    @param seed: seed of the Monte Carlo paths
    """

    rates: List[float] | None = None
    birth_death: BirthDeathFamily | None = None
    skip2: Skip2Family | None = None
    pipelines: List[PipelineEnum] = [PipelineEnum.ALL]
    tolerances: TolerancesConfig = TolerancesConfig()
    outputs: OutputsConfig = OutputsConfig()
    seed: int = Field(default=0, ge=0, lt=2**64)

    @model_validator(mode="after")
    def exactly_one_law(self) -> "RunConfig":
        given = [spec for spec in (self.rates, self.birth_death, self.skip2) if spec is not None]
        if len(given) != 1:
            raise ValueError("Exactly one of 'rates', 'birth_death' and 'skip2' must describe the law")
        return self

    def law_rates(self) -> List[float]:
        if self.birth_death is not None:
            return rates_from_family("birth_death", self.birth_death.model_dump())
        if self.skip2 is not None:
            return rates_from_family("skip2", self.skip2.model_dump())
        assert self.rates is not None
        return list(self.rates)
