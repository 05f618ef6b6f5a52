from lib.core.entity.errors import NUMERICS_ERROR_CODE, QMBPError
from lib.core.numerics.sl_eigen import refine
from lib.core.ports.primary.eigen_primary_ports import EigenInputPort
from lib.core.usecase_models.eigen_usecase_models import EigenError, EigenRequest, EigenResponse


class EigenUseCase(EigenInputPort):
    def execute(self, request: EigenRequest) -> EigenResponse | EigenError:
        try:
            eigen = refine(
                request.law,
                target_rel_tol=request.target_rel_tol if request.target_rel_tol is not None else self.target_rel_tol,
                left_boundary=request.left_boundary if request.left_boundary is not None else self.left_boundary,
                rtol=request.rtol if request.rtol is not None else self.rtol,
            )
            if not eigen.converged:
                self.logger.warning(f"Refinement stopped before convergence at ell0 = {eigen.ell0}")

            return EigenResponse(eigen=eigen)

        except QMBPError as e:
            error = EigenError.from_error(e)
            self.logger.error(f"{error}")
            return error

        except Exception as e:
            self.logger.exception("Unexpected error while refining the eigenvalue")
            return EigenError(
                errorCode=NUMERICS_ERROR_CODE,
                errorMessage=f"Internal Error: {e}",
                errorName="InternalError",
                errorType="sl_eigen",
            )
