from lib.core.entity.errors import NUMERICS_ERROR_CODE, QMBPError
from lib.core.numerics.bounds import compare_bounds, compute_bounds
from lib.core.ports.primary.bounds_primary_ports import BoundsInputPort
from lib.core.usecase_models.bounds_usecase_models import BoundsError, BoundsRequest, BoundsResponse


class BoundsUseCase(BoundsInputPort):
    def execute(self, request: BoundsRequest) -> BoundsResponse | BoundsError:
        try:
            rel_tol = request.rel_tol if request.rel_tol is not None else self.rel_tol

            report = compute_bounds(request.law, rel_tol=rel_tol)
            comparison = compare_bounds(request.law, report=report)

            for entry in report.entries:
                if entry.notes:
                    self.logger.warning(f"Bounds {entry.name}: {', '.join(entry.notes)}")
            self.logger.info(
                f"Best interval on the decay parameter: [{comparison.best_lambda_lo}, {comparison.best_lambda_hi}]"
            )
            return BoundsResponse(bounds=report, comparison=comparison)

        except QMBPError as e:
            error = BoundsError.from_error(e)
            self.logger.error(f"{error}")
            return error

        except Exception as e:
            self.logger.exception("Unexpected error while computing the bounds")
            return BoundsError(
                errorCode=NUMERICS_ERROR_CODE,
                errorMessage=f"Internal Error: {e}",
                errorName="InternalError",
                errorType="bounds",
            )
