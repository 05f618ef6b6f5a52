from lib.core.entity.errors import NUMERICS_ERROR_CODE, QMBPError
from lib.core.numerics.hardy import hardy_index
from lib.core.ports.primary.hardy_index_primary_ports import HardyIndexInputPort
from lib.core.usecase_models.hardy_index_usecase_models import HardyIndexError, HardyIndexRequest, HardyIndexResponse


class HardyIndexUseCase(HardyIndexInputPort):
    def execute(self, request: HardyIndexRequest) -> HardyIndexResponse | HardyIndexError:
        try:
            rel_tol = request.rel_tol if request.rel_tol is not None else self.rel_tol
            curve_points = request.curve_points if request.curve_points is not None else self.curve_points

            hardy = hardy_index(request.law, rel_tol=rel_tol, curve_points=curve_points)

            return HardyIndexResponse(hardy=hardy)

        except QMBPError as e:
            error = HardyIndexError.from_error(e)
            self.logger.error(f"{error}")
            return error

        except Exception as e:
            self.logger.exception("Unexpected error while computing the Hardy index")
            return HardyIndexError(
                errorCode=NUMERICS_ERROR_CODE,
                errorMessage=f"Internal Error: {e}",
                errorName="InternalError",
                errorType="hardy",
            )
