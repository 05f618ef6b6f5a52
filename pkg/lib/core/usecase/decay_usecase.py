from lib.core.entity.errors import NUMERICS_ERROR_CODE, QMBPError
from lib.core.entity.models import DecayEstimate, SurvivalCurve
from lib.core.numerics.ctmc import (
    build_generator,
    decay_time_grid,
    dump_generator,
    estimate_decay_monte_carlo,
    estimate_decay_uniformization,
    gillespie_paths,
    monte_carlo_time_grid,
    reference_rate,
    uniformization_curve,
)
from lib.core.ports.primary.decay_primary_ports import DecayInputPort
from lib.core.usecase_models.decay_usecase_models import DecayError, DecayRequest, DecayResponse


class DecayUseCase(DecayInputPort):
    """
    Estimates the decay parameter from the truncated chain by uniformization and, when paths are requested, from
    simulated paths started from one individual.
    """

    def execute(self, request: DecayRequest) -> DecayResponse | DecayError:
        try:
            law = request.law
            tol = request.tol if request.tol is not None else self.tol
            lambda_ref = request.lambda_ref if request.lambda_ref is not None else reference_rate(law)

            uniformization = estimate_decay_uniformization(
                law,
                tol=tol,
                n_start=request.n_start if request.n_start is not None else self.n_start,
                n_max=request.n_max if request.n_max is not None else self.n_max,
                agreement=request.agreement if request.agreement is not None else self.agreement,
                lambda_ref=lambda_ref,
            )
            assert uniformization.n_states is not None
            survival = uniformization_curve(law, uniformization.n_states, decay_time_grid(lambda_ref), tol)

            monte_carlo: DecayEstimate | None = None
            monte_carlo_survival: SurvivalCurve | None = None
            n_paths = request.monte_carlo_paths if request.monte_carlo_paths is not None else self.monte_carlo_paths
            if n_paths > 0:
                monte_carlo_survival = gillespie_paths(
                    law,
                    1,
                    monte_carlo_time_grid(lambda_ref),
                    n_paths=n_paths,
                    seed=request.seed,
                    state_cap=self.state_cap,
                )
                monte_carlo = estimate_decay_monte_carlo(monte_carlo_survival)
                self.logger.info(f"Monte Carlo decay rate {monte_carlo.lambda_hat} +- {monte_carlo.stderr}")

            generator_dump = None
            if request.dump_generator:
                generator_dump = dump_generator(build_generator(law, uniformization.n_states))

            return DecayResponse(
                uniformization=uniformization,
                survival=survival,
                monte_carlo=monte_carlo,
                monte_carlo_survival=monte_carlo_survival,
                generator_dump=generator_dump,
            )

        except QMBPError as e:
            error = DecayError.from_error(e)
            self.logger.error(f"{error}")
            return error

        except Exception as e:
            self.logger.exception("Unexpected error while estimating the decay rate")
            return DecayError(
                errorCode=NUMERICS_ERROR_CODE,
                errorMessage=f"Internal Error: {e}",
                errorName="InternalError",
                errorType="ctmc",
            )
