from lib.core.entity.errors import SUCCESS_CODE
from lib.core.ports.primary.validate_law_primary_ports import ValidateLawOutputPort
from lib.core.usecase_models.validate_law_usecase_models import ValidateLawError, ValidateLawResponse
from lib.core.view_model.validate_law_view_model import ValidateLawViewModel


class ValidateLawPresenter(ValidateLawOutputPort):
    def convert_error_response_to_view_model(self, response: ValidateLawError) -> ValidateLawViewModel:
        return ValidateLawViewModel(
            status=False,
            code=response.errorCode,
            errorCode=response.errorCode,
            errorMessage=response.errorMessage,
            errorName=response.errorName,
            errorType=response.errorType,
        )

    def convert_response_to_view_model(self, response: ValidateLawResponse) -> ValidateLawViewModel:
        return ValidateLawViewModel(
            status=True,
            code=SUCCESS_CODE,
            law=response.law,
            roots=response.roots,
        )
