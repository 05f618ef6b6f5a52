from typing import TypeVar

from pydantic import BaseModel, model_validator


class BaseViewModel(BaseModel):
    """
    Base View Model for all View Models. The code is the exit code of the command that printed the view model.

    @param status: The status of the response.
    @type status: bool
    @param code: The exit code.
    @type code: int
    @param errorCode: The error code of the response.
    @type errorCode: int
    @param errorMessage: The error message of the response.
    @type errorMessage: str
    @param errorName: The name of the error.
    @type errorName: str
    @param errorType: The type of the error.
    @type errorType: str
    """

    status: bool
    code: int
    errorCode: int | None = None
    errorMessage: str | None = None
    errorName: str | None = None
    errorType: str | None = None

    @model_validator(mode="after")
    def error_fields_absent_in_successful_response(self) -> "BaseViewModel":
        if self.status:
            if self.errorCode:
                raise ValueError("errorCode should not be present in a successful response")
            if self.errorMessage:
                raise ValueError("errorMessage should not be present in a successful response")
            if self.errorName:
                raise ValueError("errorName should not be present in a successful response")
            if self.errorType:
                raise ValueError("errorType should not be present in a successful response")
        else:
            if not self.errorCode:
                raise ValueError("errorCode should be present in an unsuccessful response")
            if not self.errorMessage:
                raise ValueError("errorMessage should be present in an unsuccessful response")
            if not self.errorName:
                raise ValueError("errorName should be present in an unsuccessful response")
            if not self.errorType:
                raise ValueError("errorType should be present in an unsuccessful response")
            if self.code != self.errorCode:
                raise ValueError("code should be equal to errorCode in an unsuccessful response")
            if self.code == 0:
                raise ValueError("code should NOT be 0 in an unsuccessful response")
        return self


TBaseViewModel = TypeVar("TBaseViewModel", bound=BaseViewModel, covariant=True)
