from lib.core.ports.primary.run_primary_ports import RunOutputPort
from lib.core.usecase_models.run_usecase_models import RunError, RunResponse
from lib.core.view_model.run_view_model import RunViewModel


class RunPresenter(RunOutputPort):
    def convert_error_response_to_view_model(self, response: RunError) -> RunViewModel:
        return RunViewModel(
            status=False,
            code=response.errorCode,
            errorCode=response.errorCode,
            errorMessage=response.errorMessage,
            errorName=response.errorName,
            errorType=response.errorType,
            report_path=response.report_path,
            pipeline=response.pipeline,
        )

    def convert_response_to_view_model(self, response: RunResponse) -> RunViewModel:
        return RunViewModel(
            status=True,
            code=response.exit_code,
            report_path=response.report_path,
            pipelines=response.pipelines,
            consistency=response.consistency,
            outputs=response.outputs,
        )
