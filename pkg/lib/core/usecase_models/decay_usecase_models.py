from pydantic import Field

from lib.core.entity.models import BranchingLaw, DecayEstimate, SurvivalCurve
from lib.core.sdk.usecase_models import BaseErrorResponse, BaseRequest, BaseResponse


class DecayRequest(BaseRequest):
    """
    Request Model for the Decay Use Case. Unset fields fall back to the configured defaults.

    @param law: A validated subcritical law.
    @param lambda_ref: Rate scaling the time grids, e.g. the bottom of the spectrum when known.
    @param tol: Poisson truncation tolerance of uniformization.
    @param n_start: First state cap.
    @param n_max: Largest state cap.
    @param agreement: Relative agreement of successive estimates.
    @param monte_carlo_paths: Number of simulated paths; 0 disables the simulation.
    @param seed: Seed of the simulated paths.
    @param dump_generator: Whether to return the coordinate-list dump of the accepted generator.
    """

    law: BranchingLaw = Field(description="A validated subcritical law.")
    lambda_ref: float | None = Field(default=None, description="Rate scaling the time grids.")
    tol: float | None = Field(default=None, description="Poisson truncation tolerance.")
    n_start: int | None = Field(default=None, description="First state cap.")
    n_max: int | None = Field(default=None, description="Largest state cap.")
    agreement: float | None = Field(default=None, description="Relative agreement of successive estimates.")
    monte_carlo_paths: int | None = Field(default=None, description="Number of simulated paths.")
    seed: int = Field(default=0, description="Seed of the simulated paths.")
    dump_generator: bool = Field(default=False, description="Whether to dump the accepted generator.")


class DecayResponse(BaseResponse):
    """
    Response Model for the Decay Use Case.

    @param uniformization: The decay rate fitted on the uniformized survival curve.
    @param survival: The uniformized survival curve at the accepted state cap.
    @param monte_carlo: The decay rate fitted on simulated paths, if any were simulated.
    @param monte_carlo_survival: The empirical survival curve, if any paths were simulated.
    @param generator_dump: The coordinate-list dump of the accepted generator, if requested.
    """

    uniformization: DecayEstimate
    survival: SurvivalCurve
    monte_carlo: DecayEstimate | None = None
    monte_carlo_survival: SurvivalCurve | None = None
    generator_dump: str | None = None


class DecayError(BaseErrorResponse):
    pass
