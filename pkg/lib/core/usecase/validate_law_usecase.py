from pydantic import ValidationError

from lib.core.entity.errors import NUMERICS_ERROR_CODE, ConfigParseError, QMBPError
from lib.core.entity.run_config import RunConfig
from lib.core.numerics.law import roots_of_B, validate_law
from lib.core.ports.primary.validate_law_primary_ports import ValidateLawInputPort
from lib.core.usecase_models.validate_law_usecase_models import (
    ValidateLawError,
    ValidateLawRequest,
    ValidateLawResponse,
)


class ValidateLawUseCase(ValidateLawInputPort):
    def execute(self, request: ValidateLawRequest) -> ValidateLawResponse | ValidateLawError:
        rates = request.rates
        try:
            if request.config_path is not None:
                dto = self.report_repository.read_config(config_path=request.config_path)
                if not dto.status or dto.text is None:
                    self.logger.error(f"{dto}")
                    return ValidateLawError(
                        errorCode=dto.errorCode,
                        errorMessage=dto.errorMessage,
                        errorName=dto.errorName,
                        errorType=dto.errorType,
                    )
                try:
                    rates = RunConfig.model_validate_json(dto.text).law_rates()
                except ValidationError as e:
                    raise ConfigParseError(f"Invalid run configuration {request.config_path}: {e}")

            if rates is None:
                raise ConfigParseError("Either rates or a configuration path must be given")

            law = validate_law(rates)
            roots = roots_of_B(law)
            self.logger.info(f"Validated a {law.regime.value} law with J_max = {law.j_max}")
            return ValidateLawResponse(law=law, roots=roots)

        except QMBPError as e:
            error = ValidateLawError.from_error(e).model_copy(update={"rates": rates})
            self.logger.error(f"{error}")
            return error

        except Exception as e:
            self.logger.exception(f"Unexpected error while validating {rates}")
            return ValidateLawError(
                errorCode=NUMERICS_ERROR_CODE,
                errorMessage=f"Internal Error: {e}",
                errorName="InternalError",
                errorType="validate_law",
                rates=rates,
            )
